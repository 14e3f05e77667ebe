"""Group-specific tableaux and their weighted character sums.

A tableau is a filling of the Young diagram of lambda (English
convention) from the group's alphabet:

    GL          1 < 2 < ... < n
    SP, EO      1 < 1~ < 2 < 2~ < ... < n < n~
    OO          1 < 1~ < 2 < 2~ < ... < n < n~ < 0   (0 greatest)

subject to the conditions

    T1  rows weakly increase left to right;
    T2  columns weakly increase top to bottom;
    T3  no letter repeats within a column (0 excepted);
    T4  neither k nor k~ appears below row k         (SP, OO, EO);
    T5  at most one 0 per row                        (OO);
    T6  if row k contains a k, every k~ in that row
        must sit directly below a k                  (EO).

Each cell carries a linear weight from the group's table; the weighted
sums over complete tableau sets reproduce the characters computed by the
determinantal routes, with a multiplicity 2^zeta in the even-orthogonal
case.  The even-orthogonal difference and plus/minus sums reuse the same
tableau set with first-column restrictions and signs.  Summed values are
normalised with poly_reduce_inverses like every other character-level
value; the per-tableau weight is the literal product of its cell factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence

from .characters import Group, make_partition, partition_length
from .polyring import ONE, ZERO, Poly, pa, poly_reduce_inverses, px, pxb

__all__ = [
    "Entry",
    "ZERO_ENTRY",
    "Tableau",
    "TabStats",
    "InvalidShape",
    "enumerate_tableaux",
    "weight",
    "tab_stats",
    "tableau_sum",
    "diff_tableau_sum",
    "so_even_tableau_sum",
    "is_diff_tableau",
    "so_even_coefficient",
    "tableau_to_text",
    "tableau_to_json",
]

_EO_FAMILY = (Group.EO, Group.EO_DIFF, Group.SO_EVEN_PLUS, Group.SO_EVEN_MINUS)


class InvalidShape(ValueError):
    """lambda does not have the full n nonzero parts the operation needs."""


@dataclass(frozen=True)
class Entry:
    """One tableau letter: k or k~ (barred), or the 0 letter (k == 0)."""

    k: int
    barred: bool = False

    def __post_init__(self) -> None:
        if self.k < 0 or (self.k == 0 and self.barred):
            raise ValueError("entry is k>=1 (optionally barred) or the 0 letter")

    def is_zero(self) -> bool:
        return self.k == 0

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return f"{self.k}~" if self.barred else str(self.k)


ZERO_ENTRY = Entry(0)


def _code(e: Entry, n: int) -> int:
    """Position in the group's total order (0 is greatest)."""
    if e.is_zero():
        return 2 * n + 2
    return 2 * e.k + (1 if e.barred else 0)


@dataclass(frozen=True)
class Tableau:
    shape: tuple
    rows: tuple  # tuple of tuples of Entry

    def __str__(self) -> str:
        return tableau_to_text(self)


@dataclass(frozen=True)
class TabStats:
    zeta: int
    bar: int


def _alphabet(group: Group, n: int) -> List[Entry]:
    if group is Group.GL:
        return [Entry(k) for k in range(1, n + 1)]
    out: List[Entry] = []
    for k in range(1, n + 1):
        out.append(Entry(k))
        out.append(Entry(k, barred=True))
    if group is Group.OO:
        out.append(ZERO_ENTRY)
    return out


def enumerate_tableaux(group: Group, n: int, lam_parts: Iterable[int]) -> List[Tableau]:
    """All tableaux for the group, rank and shape, in row-major lex order.

    The even-orthogonal difference and plus/minus groups share the EO
    tableau set; their extra first-column selections happen in the
    summing operations.
    """
    lam = make_partition(lam_parts, n)
    shape = tuple(p for p in lam if p)
    alphabet = _alphabet(Group.EO if group in _EO_FAMILY else group, n)
    eo_rules = group in _EO_FAMILY
    barred_rules = group is not Group.GL
    grid: List[List[Entry]] = [[None] * w for w in shape]  # type: ignore[list-item]
    cells = [(i, j) for i, w in enumerate(shape) for j in range(w)]
    out: List[Tableau] = []

    def admissible(i: int, j: int, e: Entry) -> bool:
        code = _code(e, n)
        if j and code < _code(grid[i][j - 1], n):
            return False  # T1
        if e.is_zero():
            if any(c.is_zero() for c in grid[i][:j]):
                return False  # T5
        else:
            if barred_rules and e.k < i + 1:
                return False  # T4
            if i:
                above = grid[i - 1][j]
                if above.is_zero() or _code(above, n) >= code:
                    return False  # T2 + T3 (strict below a letter, never below 0)
            if eo_rules and e.barred and e.k == i + 1:
                if any(c == Entry(e.k) for c in grid[i][:j]):
                    if i == 0 or grid[i - 1][j] != Entry(e.k):
                        return False  # T6
        return True

    def fill(pos: int) -> None:
        if pos == len(cells):
            out.append(Tableau(shape, tuple(tuple(row) for row in grid)))
            return
        i, j = cells[pos]
        for e in alphabet:
            if admissible(i, j, e):
                grid[i][j] = e
                fill(pos + 1)
        grid[i][j] = None  # type: ignore[assignment]

    if cells:
        fill(0)
    else:
        out.append(Tableau((), ()))
    return out


def _cell_weight(e: Entry, i: int, j: int, group: Group, n: int) -> Poly:
    """Weight of entry e in cell (i, j), 1-based, for the given group."""
    if e.is_zero():
        return ONE - pa(n + 1 + j - i)
    k = e.k
    if group is Group.GL:
        return px(k) + pa(k + j - i)
    if group is Group.SP:
        if e.barred:
            return pxb(k) + pa(2 * k - n + j - i)
        return px(k) + pa(2 * k - 1 - n + j - i)
    if group is Group.OO:
        if e.barred:
            return pxb(k) + pa(2 * k + 1 - n + j - i)
        return px(k) + pa(2 * k - n + j - i)
    # even-orthogonal family (EO, EO_DIFF, SO_EVEN_PLUS, SO_EVEN_MINUS)
    if e.barred:
        return pxb(k) + pa(2 * k - n + j - i)
    return px(k) + pa(2 * k - 1 - n + j - i + (1 if i == k else 0))


def weight(t: Tableau, group: Group, n: int) -> Poly:
    """Product of the cell weights (without any 2^zeta multiplicity)."""
    total = ONE
    for i, row in enumerate(t.rows, start=1):
        for j, e in enumerate(row, start=1):
            total = total * _cell_weight(e, i, j, group, n)
    return total


def _zeta_raw(t: Tableau) -> int:
    """Number of k with T_{k-1,1} = k above T_{k,1} = k~ in column 1."""
    count = 0
    for k in range(2, len(t.rows) + 1):
        if t.rows[k - 2][0] == Entry(k) and t.rows[k - 1][0] == Entry(k, barred=True):
            count += 1
    return count


def _bar_count(t: Tableau) -> int:
    return sum(1 for row in t.rows if row[0].barred)


def tab_stats(t: Tableau, group: Group) -> TabStats:
    """First-column statistics; the 2^zeta multiplicity only exists for
    the even-orthogonal family, so zeta reads 0 elsewhere."""
    z = _zeta_raw(t) if group in _EO_FAMILY else 0
    return TabStats(zeta=z, bar=_bar_count(t))


def tableau_sum(group: Group, n: int, lam_parts: Iterable[int]) -> Poly:
    """Sum of 2^zeta * weight over the group's tableaux of shape lambda."""
    if group not in (Group.GL, Group.SP, Group.OO, Group.EO):
        raise ValueError(f"no plain tableau sum for group {group}")
    total = ZERO
    for t in enumerate_tableaux(group, n, lam_parts):
        total = total + (1 << tab_stats(t, group).zeta) * weight(t, group, n)
    return poly_reduce_inverses(total)


def is_diff_tableau(t: Tableau, n: int) -> bool:
    """First column reads k or k~ at every level k = 1..n."""
    if len(t.rows) != n:
        return False
    return all(t.rows[k - 1][0].k == k for k in range(1, n + 1))


def diff_tableau_sum(n: int, lam_parts: Iterable[int]) -> Poly:
    """Signed sum (-1)^bar * weight over the first-column-restricted
    even-orthogonal tableaux; the difference character o'."""
    lam = make_partition(lam_parts, n)
    if partition_length(lam) < n:
        raise InvalidShape(f"difference sum needs n={n} nonzero parts, got {lam}")
    total = ZERO
    for t in enumerate_tableaux(Group.EO, n, lam):
        if not is_diff_tableau(t, n):
            continue
        w = weight(t, Group.EO_DIFF, n)
        total = total + ((-1) ** _bar_count(t)) * w
    return poly_reduce_inverses(total)


def so_even_coefficient(t: Tableau, plus: bool) -> int:
    """Multiplicity of an even-orthogonal tableau in the so(2n) plus or
    minus sum: 2^(zeta-1) when zeta >= 1, else 1 or 0 by the parity of
    the barred first-column entries."""
    z = _zeta_raw(t)
    if z >= 1:
        return 1 << (z - 1)
    sign = (-1) ** _bar_count(t)
    return (1 + sign) // 2 if plus else (1 - sign) // 2


def so_even_tableau_sum(n: int, lam_parts: Iterable[int], plus: bool) -> Poly:
    """The irreducible so(2n) character as a weighted tableau sum."""
    lam = make_partition(lam_parts, n)
    if partition_length(lam) < n:
        raise InvalidShape(f"plus/minus split needs n={n} nonzero parts, got {lam}")
    total = ZERO
    for t in enumerate_tableaux(Group.EO, n, lam):
        c = so_even_coefficient(t, plus)
        if c:
            total = total + c * weight(t, Group.EO, n)
    return poly_reduce_inverses(total)


def tableau_to_text(t: Tableau) -> str:
    """One row per line; entries space-separated; barred as k~, 0 as 0."""
    return "\n".join(" ".join(str(e) for e in row) for row in t.rows)


def tableau_to_json(t: Tableau) -> list:
    """Rows of entries; a letter is {"k": ..., "barred": ...}, 0 is "zero"."""
    return [
        ["zero" if e.is_zero() else {"k": e.k, "barred": e.barred} for e in row]
        for row in t.rows
    ]
