"""Factorial complete homogeneous functions h_m for the classical families.

Each kind is defined by a generating series in t, truncated at the power
m being extracted:

    GL   prod_v 1/(1-t*v)                        over the listed variables
    SP   prod_i 1/((1-t*x_i)(1-t*xb_i))          over the listed pairs
    OO   (1+t) * SP-style product
    EO   (1-t^2) * SP-style product              (two or more pairs)
         (1/(1-t*x_1) + 1/(1-t*xb_1) - [m=0])    (exactly one pair)
    EOD  (1/(1-t*x_1) - 1/(1-t*xb_1)) * geometric factors of the rest

multiplied in every case by prod_{j=1}^{L+m-1} (1 + t*a_{j+shift}), where
L is the number of listed variables (GL) or pairs (the rest).  A shifted
a-index <= 0 stands for the zero value, so its factor degenerates to 1.

Conventions: h_m = 0 for m < 0 and h_0 = 1, except the EOD kind where
h_m = 0 for all m <= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .polyring import (
    ONE,
    ZERO,
    Poly,
    VarId,
    X,
    XB,
    pa,
    poly_reduce_inverses,
    poly_var,
    px,
    pxb,
    ps,
    psb,
)
from .series import (
    series_add,
    series_coeff,
    series_from_polys,
    series_geometric,
    series_linear,
    series_mul,
    series_one,
    series_sub,
)

__all__ = [
    "HKind",
    "VarSpec",
    "factorial_power",
    "h",
    "h_closed_one_pair",
    "explicit_h",
]


class HKind(Enum):
    GL = "gl"
    SP = "sp"
    OO = "oo"
    EO = "eo"
    EOD = "eod"


@dataclass(frozen=True)
class VarSpec:
    """Variable content for an h function.

    GL uses ``singles``: an ordered list of variable ids, any mix of x's
    and xb's (s-letters are allowed too).  The other kinds use ``pairs``:
    a list of indices i, each standing for the pair (x_i, xb_i); for EO
    and EOD the first listed pair is the distinguished one.
    """

    kind: HKind
    singles: tuple = ()
    pairs: tuple = ()
    shift: int = 0

    def __post_init__(self) -> None:
        if self.kind is HKind.GL:
            if not self.singles or self.pairs:
                raise ValueError("GL spec takes a non-empty singles list")
            for v in self.singles:
                if not isinstance(v, VarId) or v.kind == "a":
                    raise ValueError("GL variables must be letter variables")
        else:
            if not self.pairs or self.singles:
                raise ValueError(f"{self.kind.value} spec takes a non-empty pairs list")
            for i in self.pairs:
                if not isinstance(i, int) or i < 1:
                    raise ValueError("pair indices are positive ints")
            if len(set(self.pairs)) != len(self.pairs):
                raise ValueError("pair indices must be distinct")

    def width(self) -> int:
        return len(self.singles) if self.kind is HKind.GL else len(self.pairs)


def gl_vars(*indices: int) -> tuple:
    """Convenience: the unbarred singles (x_i for each index)."""
    return tuple(X(i) for i in indices)


def interleaved_vars(pairs) -> tuple:
    """x_i, xb_i for each pair index, in order."""
    out = []
    for i in pairs:
        out.append(X(i))
        out.append(XB(i))
    return tuple(out)


@lru_cache(maxsize=None)
def _fp_cached(base: Poly, m: int, shift: int) -> Poly:
    if m == 0:
        return ONE
    return _fp_cached(base, m - 1, shift) * (base + pa(m + shift))


def factorial_power(v, m: int, shift: int = 0) -> Poly:
    """(v|a)^m with shifted a's: (v + a_{1+shift})(v + a_{2+shift})...(v + a_{m+shift}).

    ``v`` may be a VarId or an arbitrary Poly.  m must be >= 0; m = 0
    gives 1.  Any a-index <= 0 contributes nothing (that a is zero).
    """
    if m < 0:
        raise ValueError("factorial_power needs m >= 0")
    base = poly_var(v) if isinstance(v, VarId) else v
    return _fp_cached(base, m, shift)


@lru_cache(maxsize=None)
def h(spec: VarSpec, m: int) -> Poly:
    """The factorial h_m for the given variable spec."""
    if spec.kind is HKind.EOD:
        if m <= 0:
            return ZERO
    else:
        if m < 0:
            return ZERO
        if m == 0:
            return ONE
    cap = m
    factors = []
    if spec.kind is HKind.GL:
        factors.extend(series_geometric(poly_var(v), cap) for v in spec.singles)
    elif spec.kind is HKind.SP:
        for i in spec.pairs:
            factors.append(series_geometric(px(i), cap))
            factors.append(series_geometric(pxb(i), cap))
    elif spec.kind is HKind.OO:
        factors.append(series_linear(ONE, cap))
        for i in spec.pairs:
            factors.append(series_geometric(px(i), cap))
            factors.append(series_geometric(pxb(i), cap))
    elif spec.kind is HKind.EO:
        if len(spec.pairs) >= 2:
            factors.append(series_from_polys(cap, [ONE, ZERO, -ONE]))
            for i in spec.pairs:
                factors.append(series_geometric(px(i), cap))
                factors.append(series_geometric(pxb(i), cap))
        else:
            # Single pair: the two geometric series are added, not multiplied.
            # (The defining series also subtracts 1 at t^0, which only matters
            # for m = 0 and that case returned 1 above.)
            i = spec.pairs[0]
            factors.append(series_add(series_geometric(px(i), cap), series_geometric(pxb(i), cap)))
    else:  # EOD
        first = spec.pairs[0]
        factors.append(series_sub(series_geometric(px(first), cap), series_geometric(pxb(first), cap)))
        for i in spec.pairs[1:]:
            factors.append(series_geometric(px(i), cap))
            factors.append(series_geometric(pxb(i), cap))
    for j in range(1, spec.width() + m):
        aj = pa(j + spec.shift)
        if aj:
            factors.append(series_linear(aj, cap))
    prod = series_one(cap)
    for f in factors:
        prod = series_mul(prod, f)
    # Values are normalised so that matched x_i*xb_i (reciprocal) pairs
    # never survive in a monomial; every consumer compares h's, and the
    # determinant/recurrence identities they enter hold modulo that pairing.
    return poly_reduce_inverses(series_coeff(prod, m))


def h_closed_one_pair(kind: HKind, i: int, m: int, shift: int = 0) -> Poly:
    """Closed form of h_m on a single pair (or single variable for GL)."""
    from .polyring import map_s_to_x, poly_exact_div

    if kind is HKind.EOD:
        if m <= 0:
            return ZERO
        return factorial_power(X(i), m, shift) - factorial_power(XB(i), m, shift)
    if m < 0:
        return ZERO
    if m == 0:
        return ONE
    if kind is HKind.GL:
        return factorial_power(X(i), m, shift)
    if kind is HKind.SP:
        numer = px(i) * factorial_power(X(i), m, shift) - pxb(i) * factorial_power(XB(i), m, shift)
        return poly_reduce_inverses(poly_exact_div(numer, px(i) - pxb(i)))
    if kind is HKind.OO:
        s, sb = ps(i), psb(i)
        numer = s * factorial_power(s * s, m, shift) - sb * factorial_power(sb * sb, m, shift)
        return map_s_to_x(poly_exact_div(numer, s - sb))
    if kind is HKind.EO:
        return factorial_power(X(i), m, shift) + factorial_power(XB(i), m, shift)
    raise ValueError(f"unknown kind {kind}")


def _z(i: int) -> Poly:
    """z_{2k-1} = x_k, z_{2k} = xb_k."""
    k = (i + 1) // 2
    return px(k) if i % 2 else pxb(k)


def _word_sum(n2: int, m: int, weight, lo_min: int = 1) -> Poly:
    """Sum over weakly increasing words (i_1 <= ... <= i_m, letters lo_min..n2)
    of prod_j weight(i_j, j)."""
    memo: dict = {}

    def rec(j: int, lo: int) -> Poly:
        if j > m:
            return ONE
        key = (j, lo)
        got = memo.get(key)
        if got is not None:
            return got
        total = ZERO
        for i in range(lo, n2 + 1):
            total = total + weight(i, j) * rec(j + 1, i)
        memo[key] = total
        return total

    return rec(1, lo_min)


def explicit_h(kind: HKind, n: int, m: int) -> Poly:
    """Direct weighted-word expansion of h_m in n variables/pairs.

    Implemented for GL, SP, OO and EO; agrees with :func:`h` on the full
    (unshifted) variable content of rank n.
    """
    if m < 0:
        return ZERO
    if kind is HKind.GL:
        return _word_sum(n, m, lambda i, k: px(i) + pa(i + k - 1))
    if kind is HKind.SP:
        return poly_reduce_inverses(
            _word_sum(2 * n, m, lambda i, j: _z(i) + pa(i - n + j - 1))
        )
    if kind is HKind.OO:
        body = _word_sum(2 * n, m, lambda i, j: _z(i) + pa(i - n + j))
        if m == 0:
            return body
        tail = _word_sum(2 * n, m - 1, lambda i, j: _z(i) + pa(i - n + j))
        return poly_reduce_inverses(body + (ONE - pa(m + n)) * tail)
    if kind is HKind.EO:
        if m == 0:
            return ONE

        def sp_weight(i, j):
            return _z(i) + pa(i - n + j - 1)

        # Sum over suffix words occupying positions k+1..m with letters >= 3.
        memo: dict = {}

        def suffix(j: int, lo: int) -> Poly:
            if j > m:
                return ONE
            key = (j, lo)
            got = memo.get(key)
            if got is not None:
                return got
            total = ZERO
            for i in range(lo, 2 * n + 1):
                total = total + sp_weight(i, j) * suffix(j + 1, i)
            memo[key] = total
            return total

        total = suffix(1, 3)  # no prefix at all
        pref_x, pref_xb = ONE, ONE
        for k in range(1, m + 1):
            ak = pa(k + 1 - n)
            pref_x = pref_x * (px(1) + ak)
            pref_xb = pref_xb * (pxb(1) + ak)
            total = total + (pref_x + pref_xb) * suffix(k + 1, 3)
        return poly_reduce_inverses(total)
    raise ValueError(f"explicit_h is not defined for kind {kind}")
