"""Lindström–Gessel–Viennot lattice-path oracle for the gl case.

Paths live on a grid in matrix coordinates (row k counts from the top,
column l from the left) and move monotonically down (V) or right (H).
Path i of an n-tuple runs from P_i = (i, n-i+1) to Q_{sigma(i)} =
(n, n-sigma(i)+1+lambda_{sigma(i)}); a horizontal step into (k, l)
carries the weight x_k + a_{k+l-n-1} (with a_m = 0 for m <= 0).

Summing sign(sigma) times the product of path weights over every tuple
for every permutation reproduces the gl Jacobi-Trudi determinant; the
surviving non-intersecting identity tuples correspond one-to-one with
the gl tableaux, preserving weights.  This module exists as a test
oracle independent of both determinant evaluation and tableau
enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, List, Sequence, Tuple

from .characters import make_partition
from .polyring import ONE, ZERO, Poly, pa, px
from .tableaux import Entry, Tableau

__all__ = [
    "LatticePath",
    "IntersectingTuple",
    "enumerate_gl_tuples",
    "lgv_signed_sum",
    "tuple_to_tableau",
]


class IntersectingTuple(ValueError):
    """Two paths of the tuple share a lattice point."""


@dataclass(frozen=True)
class LatticePath:
    """A monotone H/V path on the rank-n grid."""

    n: int
    start: Tuple[int, int]
    steps: Tuple[str, ...]  # each "H" (right) or "V" (down)

    def points(self) -> List[Tuple[int, int]]:
        r, c = self.start
        pts = [(r, c)]
        for s in self.steps:
            if s == "H":
                c += 1
            else:
                r += 1
            pts.append((r, c))
        return pts

    @property
    def end(self) -> Tuple[int, int]:
        return self.points()[-1]

    def h_levels(self) -> List[int]:
        """Row of each horizontal step, in path order."""
        return [r for (r, c), s in zip(self.points(), self.steps) if s == "H"]

    def weight(self) -> Poly:
        """Product of x_k + a_{k+l-n-1} over horizontal steps into (k, l)."""
        w = ONE
        r, c = self.start
        for s in self.steps:
            if s == "H":
                c += 1
                w = w * (px(r) + pa(r + c - self.n - 1))
            else:
                r += 1
        return w


def _paths_between(n: int, i: int, j: int, lam: Sequence[int]) -> List[LatticePath]:
    """All monotone paths P_i -> Q_j; empty when the displacement is negative."""
    start = (i, n - i + 1)
    horiz = lam[j - 1] - j + i
    vert = n - i
    if horiz < 0:
        return []
    out = []
    # choose which of the vert+horiz step slots are horizontal
    for hpos in _choose(vert + horiz, horiz):
        steps = tuple("H" if k in hpos else "V" for k in range(vert + horiz))
        out.append(LatticePath(n, start, steps))
    return out


def _choose(m: int, k: int) -> Iterable[frozenset]:
    from itertools import combinations

    for c in combinations(range(m), k):
        yield frozenset(c)


def enumerate_gl_tuples(
    n: int, lam_parts: Iterable[int], sigma: Sequence[int]
) -> List[Tuple[LatticePath, ...]]:
    """Every n-tuple (intersecting ones included) with path i running
    P_i -> Q_{sigma(i)}, as the cartesian product of per-path choices."""
    lam = make_partition(lam_parts, n)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"sigma must be a permutation of 1..{n}: {sigma}")
    choices = [_paths_between(n, i, sigma[i - 1], lam) for i in range(1, n + 1)]
    if any(not c for c in choices):
        return []
    return [tuple(t) for t in product(*choices)]


def _perm_sign(sigma: Sequence[int]) -> int:
    inv = sum(
        1
        for i in range(len(sigma))
        for j in range(i + 1, len(sigma))
        if sigma[i] > sigma[j]
    )
    return -1 if inv % 2 else 1


def lgv_signed_sum(n: int, lam_parts: Iterable[int]) -> Poly:
    """Sum of sign(sigma) * path-weight products over all tuples; equals
    the gl Jacobi-Trudi character."""
    lam = make_partition(lam_parts, n)
    total = ZERO
    for sigma in permutations(range(1, n + 1)):
        sign = _perm_sign(sigma)
        for tup in enumerate_gl_tuples(n, lam, sigma):
            w = ONE
            for path in tup:
                w = w * path.weight()
            total = total + sign * w
    return total


def _is_intersecting(tup: Sequence[LatticePath]) -> bool:
    seen: set = set()
    for path in tup:
        pts = set(path.points())
        if pts & seen:
            return True
        seen |= pts
    return False


def tuple_to_tableau(tup: Sequence[LatticePath]) -> Tableau:
    """Read the gl tableau off a non-intersecting identity tuple: the
    j-th horizontal step of path i at level k becomes T_{ij} = k."""
    if _is_intersecting(tup):
        raise IntersectingTuple("paths share a lattice point")
    rows = []
    for path in tup:
        levels = path.h_levels()
        if levels:
            rows.append(tuple(Entry(k) for k in levels))
    shape = tuple(len(r) for r in rows)
    return Tableau(shape, tuple(rows))
