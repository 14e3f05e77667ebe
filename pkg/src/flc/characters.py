"""Factorial characters of the classical groups, by two determinantal routes.

For a rank-n group and a partition lambda (zero-padded to n parts) the
character is a polynomial in x_1, xb_1, ..., x_n, xb_n and the shift
alphabet a_1, a_2, ...  It can be computed as

* a ratio of alternants (``char_raw`` builds the matrix entries from
  factorial powers, ``char_alternant`` from one-pair h-series; both then
  divide the numerator determinant exactly by the denominator
  determinant), or
* a flagged Jacobi-Trudi determinant of h functions (``char_jacobi_trudi``),
  which involves no division at all.

Groups: GL (general linear), SP (symplectic), OO (odd orthogonal), EO
(even orthogonal, characters of o(2n)), EO_DIFF (the signed difference
o'), and SO_EVEN_PLUS / SO_EVEN_MINUS (the two irreducible so(2n)
characters, which exist as a genuine split only when lambda has n
nonzero parts).

The odd-orthogonal ratio involves half-integer powers, so its alternants
are built in the s-letters with x_i realised as s_i^2; the exact quotient
is then mapped back to whole x-powers.  The even-orthogonal ratio carries
a factor eta (1/2 exactly when lambda_n = 0) which is realised by halving
the numerator determinant in that case; the denominator determinant is
halved always.

The barred letters are reciprocals of the plain ones, and for two or more
pairs the alternant quotients only exist granting x_i*xb_i = 1 (likewise
s_i*sb_i = 1): the denominators do not divide the numerators in the free
ring.  Every character returned here is therefore normalised to the
canonical form with no matched reciprocal pair inside a monomial
(``poly_reduce_inverses``), and the two ratio routes divide with
``poly_exact_div_inverses``.  All routes produce that same normal form,
which is what the cross-route equality tests compare.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Sequence

from .hfuncs import HKind, VarSpec, factorial_power, h
from .polyring import (
    ONE,
    ZERO,
    Poly,
    X,
    XB,
    eval_integer,
    map_s_to_x,
    pa,
    poly_determinant,
    poly_exact_div_inverses,
    poly_exact_div_inverses_many,
    poly_halve,
    poly_reduce_inverses,
    poly_substitute,
    px,
    pxb,
    ps,
    psb,
)
from .series import series_coeff, series_geometric, series_linear, series_mul, series_one, series_add

__all__ = [
    "Group",
    "CharSpec",
    "char_spec",
    "make_partition",
    "partition_length",
    "char_raw",
    "char_alternant",
    "char_jacobi_trudi",
    "char_raw_diff",
    "char_so_even",
    "character",
    "weyl_denominator_product",
    "zero_a",
    "dimension",
]


class Group(Enum):
    GL = "gl"
    SP = "sp"
    OO = "oo"
    EO = "eo"
    EO_DIFF = "eo_diff"
    SO_EVEN_PLUS = "so_even_plus"
    SO_EVEN_MINUS = "so_even_minus"


_RATIO_GROUPS = (Group.GL, Group.SP, Group.OO, Group.EO)

_JT_KIND = {
    Group.GL: HKind.GL,
    Group.SP: HKind.SP,
    Group.OO: HKind.OO,
    Group.EO: HKind.EO,
    Group.EO_DIFF: HKind.EOD,
}


def make_partition(parts: Iterable[int], rank: int) -> tuple:
    """Validate and zero-pad a weakly decreasing partition to the rank."""
    lam = tuple(int(p) for p in parts)
    if any(p < 0 for p in lam):
        raise ValueError("partition parts must be non-negative")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts must be weakly decreasing, got {lam}")
    if len(lam) > rank:
        raise ValueError(f"partition {lam} has more than rank={rank} parts")
    return lam + (0,) * (rank - len(lam))


def partition_length(lam: Sequence[int]) -> int:
    """Number of nonzero parts."""
    return sum(1 for p in lam if p)


@dataclass(frozen=True)
class CharSpec:
    group: Group
    rank: int
    lam: tuple

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        if self.lam != make_partition(self.lam, self.rank):
            raise ValueError(f"lambda {self.lam} is not zero-padded weakly decreasing")


def char_spec(group: Group, rank: int, parts: Iterable[int]) -> CharSpec:
    return CharSpec(group, rank, make_partition(parts, rank))


@lru_cache(maxsize=None)
def _raw_entry(group: Group, i: int, m: int) -> Poly:
    if group is Group.GL:
        return factorial_power(X(i), m)
    if group is Group.SP:
        return px(i) * factorial_power(X(i), m) - pxb(i) * factorial_power(XB(i), m)
    if group is Group.OO:
        s, sb = ps(i), psb(i)
        return s * factorial_power(s * s, m) - sb * factorial_power(sb * sb, m)
    if group is Group.EO:
        return factorial_power(X(i), m) + factorial_power(XB(i), m)
    raise ValueError(f"no raw alternant for group {group}")


@lru_cache(maxsize=None)
def _alt_entry(group: Group, i: int, m: int) -> Poly:
    if group is Group.GL:
        return h(VarSpec(HKind.GL, singles=(X(i),)), m)
    if group is Group.SP:
        return h(VarSpec(HKind.SP, pairs=(i,)), m)
    if group is Group.OO:
        return h(VarSpec(HKind.OO, pairs=(i,)), m)
    if group is Group.EO:
        # The delta-free one-pair series: at m = 0 this is 2, not 1; the
        # halving below absorbs the overall factor of 2 per eta-convention.
        cap = m
        prod = series_add(series_geometric(px(i), cap), series_geometric(pxb(i), cap))
        for j in range(1, m + 1):
            prod = series_mul(prod, series_linear(pa(j), cap))
        return series_coeff(prod, m)
    raise ValueError(f"no alternant for group {group}")


def _ratio(numer: Poly, denom: Poly, factors: Sequence[Poly], fast: bool) -> Poly:
    """numer / denom, exact modulo the reciprocal pairing x_i*xb_i = 1.

    The barred letters stand for reciprocals, and the alternant quotients
    only exist granting that pairing (for two or more pairs the free-ring
    division genuinely fails), so the division runs through
    poly_exact_div_inverses.  When the reduced denominator is known to
    match its product form the division runs factor by factor (much
    faster); otherwise it divides by the determinant directly.
    """
    if fast:
        return poly_exact_div_inverses_many(numer, factors)
    return poly_exact_div_inverses(numer, denom)


def _denominator_factors(group: Group, n: int) -> list:
    if group is Group.GL:
        return [px(i) - px(j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if group is Group.SP:
        out = [px(i) - pxb(i) for i in range(1, n + 1)]
        out.extend(
            px(i) + pxb(i) - px(j) - pxb(j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
        )
        return out
    if group is Group.OO:
        out = [ps(i) - psb(i) for i in range(1, n + 1)]
        out.extend(
            ps(i) * ps(i) + psb(i) * psb(i) - ps(j) * ps(j) - psb(j) * psb(j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
        )
        return out
    if group is Group.EO:
        return [
            px(i) + pxb(i) - px(j) - pxb(j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
        ]
    raise ValueError(f"no denominator product for group {group}")


def _alt_factors(group: Group, n: int) -> list:
    """Product form of the one-pair-h denominator determinant.

    Row-common one-pair factors are already inside the h entries, so only
    the cross terms remain; for OO those live in the whole x-letters.
    """
    if group is Group.GL:
        return _denominator_factors(Group.GL, n)
    return [
        px(i) + pxb(i) - px(j) - pxb(j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]


def weyl_denominator_product(group: Group, n: int) -> Poly:
    """The denominator alternant in product form (OO in the s-letters)."""
    prod = ONE
    for f in _denominator_factors(group, n):
        prod = prod * f
    return prod


_ENTRY_FN = {"raw": _raw_entry, "alternant": _alt_entry}


@lru_cache(maxsize=None)
def _denominator_info(group: Group, n: int, route: str) -> tuple:
    """Reduced (EO: halved) denominator determinant, factors, fast flag.

    The factors multiply out to the denominator modulo the reciprocal
    pairing; ``fast`` records that the reduced forms really coincide, so
    the ratio can divide factor by factor.  Cached: the denominator of a
    ratio character depends only on the group, the rank and the route.
    """
    entry = _ENTRY_FN[route]
    exps_den = [n - (j + 1) for j in range(n)]
    denom = poly_determinant(
        [[entry(group, i, mj) for mj in exps_den] for i in range(1, n + 1)]
    )
    if group is Group.EO:
        denom = poly_halve(denom)
    denom = poly_reduce_inverses(denom)
    factors = tuple(
        _denominator_factors(group, n) if route == "raw" else _alt_factors(group, n)
    )
    prod = ONE
    for f in factors:
        prod = prod * f
    fast = denom == poly_reduce_inverses(prod)
    return denom, factors, fast


def _ratio_character(spec: CharSpec, route: str) -> Poly:
    group, n, lam = spec.group, spec.rank, spec.lam
    if group not in _RATIO_GROUPS:
        raise ValueError(f"no alternant-ratio route for group {group}")
    entry = _ENTRY_FN[route]
    exps_num = [lam[j] + n - (j + 1) for j in range(n)]
    numer = poly_determinant(
        [[entry(group, i, mj) for mj in exps_num] for i in range(1, n + 1)]
    )
    if group is Group.EO and lam[n - 1] == 0:
        numer = poly_halve(numer)
    denom, factors, fast = _denominator_info(group, n, route)
    out = _ratio(poly_reduce_inverses(numer), denom, factors, fast)
    if group is Group.OO and route == "raw":
        out = map_s_to_x(out)
    return out


def char_raw(spec: CharSpec) -> Poly:
    """Character as the literal ratio of factorial-power alternants."""
    return _ratio_character(spec, "raw")


def char_alternant(spec: CharSpec) -> Poly:
    """Character as a ratio of alternants with series-built h entries."""
    return _ratio_character(spec, "alternant")


def _flag_spec(kind: HKind, i: int, n: int) -> VarSpec:
    if kind is HKind.GL:
        return VarSpec(HKind.GL, singles=tuple(X(k) for k in range(i, n + 1)))
    return VarSpec(kind, pairs=tuple(range(i, n + 1)))


def char_jacobi_trudi(spec: CharSpec) -> Poly:
    """Character as a flagged Jacobi-Trudi determinant |h_{lambda_j - j + i}|.

    Row i uses the flagged variable content (pairs/variables i..n); no
    division is involved.  Covers GL, SP, OO, EO and EO_DIFF.
    """
    kind = _JT_KIND.get(spec.group)
    if kind is None:
        raise ValueError(f"no Jacobi-Trudi determinant for group {spec.group}")
    n, lam = spec.rank, spec.lam
    rows = []
    for i in range(1, n + 1):
        vs = _flag_spec(kind, i, n)
        rows.append([h(vs, lam[j - 1] - j + i) for j in range(1, n + 1)])
    return poly_reduce_inverses(poly_determinant(rows))


def char_raw_diff(n: int, lam_parts: Iterable[int]) -> Poly:
    """The signed difference character o' as a literal alternant ratio.

    Numerator entries (x_i|a)^m - (xb_i|a)^m; the denominator is the halved
    even-orthogonal denominator determinant.  When lambda_n = 0 the last
    numerator column vanishes identically, so the result is 0 (computed,
    not special-cased).
    """
    lam = make_partition(lam_parts, n)
    exps_num = [lam[j] + n - (j + 1) for j in range(n)]
    numer = poly_determinant(
        [
            [factorial_power(X(i), m) - factorial_power(XB(i), m) for m in exps_num]
            for i in range(1, n + 1)
        ]
    )
    if not numer:
        return ZERO
    # The denominator is the halved even-orthogonal one, shared with char_raw.
    denom, factors, fast = _denominator_info(Group.EO, n, "raw")
    return _ratio(poly_reduce_inverses(numer), denom, factors, fast)


def char_so_even(spec: CharSpec) -> Poly:
    """Irreducible so(2n) character for SO_EVEN_PLUS / SO_EVEN_MINUS.

    The plus/minus split exists only when lambda has n nonzero parts;
    otherwise both signs coincide with the full even-orthogonal character.
    """
    if spec.group not in (Group.SO_EVEN_PLUS, Group.SO_EVEN_MINUS):
        raise ValueError(f"char_so_even needs a so-even group, got {spec.group}")
    n, lam = spec.rank, spec.lam
    eo = char_jacobi_trudi(CharSpec(Group.EO, n, lam))
    if partition_length(lam) < n:
        return eo
    diff = char_jacobi_trudi(CharSpec(Group.EO_DIFF, n, lam))
    if spec.group is Group.SO_EVEN_PLUS:
        return poly_halve(eo + diff)
    return poly_halve(eo - diff)


def zero_a(p: Poly) -> Poly:
    """Set every a-variable to zero."""
    return poly_substitute(p, {v: 0 for v in p.variables() if v.kind == "a"})


def character(spec: CharSpec) -> Poly:
    """The character by the division-free route appropriate to the group."""
    if spec.group in (Group.SO_EVEN_PLUS, Group.SO_EVEN_MINUS):
        return char_so_even(spec)
    return char_jacobi_trudi(spec)


def dimension(spec: CharSpec) -> int:
    """Character evaluated at a = 0 and every letter = 1."""
    p = zero_a(character(spec))
    return eval_integer(p, {v: 1 for v in p.variables()})
