"""Exact sparse multivariate polynomials over the integers.

The variable universe is fixed.  For each index i >= 1 there is a letter
x_i together with a formal companion xb_i ("x-bar", printed ``xb``), and
a square-root letter s_i with companion sb_i (s_i^2 stands for x_i, see
:func:`map_s_to_x`).  On top of that sits a shift alphabet a_1, a_2, ...
An a_j with j <= 0 is identically zero: constructors annihilate any term
that would mention it, so such a variable never appears in a stored
monomial.

Monomials are compared graded-lexicographically: first by total degree,
ties broken by the canonical variable sequence

    x1, xb1, x2, xb2, ..., s1, sb1, s2, sb2, ..., a1, a2, ...

where a higher exponent on an earlier variable wins.  Text rendering
lists terms in descending monomial order, e.g. ``2*x1*xb1^2 + a3``.

Coefficients are plain Python ints, so overflow is impossible.  Poly
values are immutable (operations return fresh objects) and safe to share
between threads.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

__all__ = [
    "VarId",
    "Poly",
    "X",
    "XB",
    "S",
    "SB",
    "A",
    "px",
    "pxb",
    "ps",
    "psb",
    "pa",
    "ZERO",
    "ONE",
    "poly_const",
    "poly_var",
    "poly_add",
    "poly_mul",
    "poly_exact_div",
    "poly_exact_div_inverses",
    "poly_exact_div_inverses_many",
    "poly_reduce_inverses",
    "poly_halve",
    "poly_determinant",
    "poly_substitute",
    "map_s_to_x",
    "eval_integer",
    "poly_to_str",
    "poly_to_json",
    "poly_from_json",
    "parse_var",
    "DivisionNotExact",
    "DivisionByZero",
    "OddCoefficient",
    "NonSquare",
    "OddHalfPower",
    "MissingAssignment",
]


class DivisionNotExact(ArithmeticError):
    """Exact division failed: a nonzero remainder was left over."""


class DivisionByZero(ZeroDivisionError):
    """Division by the zero polynomial."""


class OddCoefficient(ArithmeticError):
    """poly_halve hit a coefficient that is not divisible by 2."""


class NonSquare(ValueError):
    """poly_determinant was given a non-square matrix."""


class OddHalfPower(ArithmeticError):
    """map_s_to_x hit an odd power of an s-variable."""


class MissingAssignment(KeyError):
    """eval_integer was given a point that misses some variable."""


# Variable codes.  Letter block first (x/xb interleaved by index), then the
# s block, then the a block; integer comparison of codes is exactly the
# canonical sequence order.  Codes just below _A_BASE are reserved for the
# identically-zero a_j with j <= 0 (nothing may store them).
_S_BASE = 1 << 20
_A_BASE = 1 << 21
_A_NEG_LOW = _A_BASE - (1 << 19)

_KINDS = ("x", "xb", "s", "sb", "a")


@dataclass(frozen=True)
class VarId:
    """A variable name: kind in {'x','xb','s','sb','a'} plus an index."""

    kind: str
    index: int

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown variable kind {self.kind!r}")
        if self.kind != "a" and self.index < 1:
            raise ValueError(f"{self.kind}-variables are indexed from 1")

    def code(self) -> int:
        k, i = self.kind, self.index
        if k == "x":
            return 2 * i
        if k == "xb":
            return 2 * i + 1
        if k == "s":
            return _S_BASE + 2 * i
        if k == "sb":
            return _S_BASE + 2 * i + 1
        return _A_BASE + i

    def name(self) -> str:
        return f"{self.kind}{self.index}"

    def __str__(self) -> str:
        return self.name()


def X(i: int) -> VarId:
    return VarId("x", i)


def XB(i: int) -> VarId:
    return VarId("xb", i)


def S(i: int) -> VarId:
    return VarId("s", i)


def SB(i: int) -> VarId:
    return VarId("sb", i)


def A(j: int) -> VarId:
    return VarId("a", j)


def parse_var(name: str) -> VarId:
    """Parse a rendered variable name like ``x1``, ``xb2``, ``a3``."""
    for kind in ("xb", "sb", "x", "s", "a"):  # longest prefixes first
        if name.startswith(kind) and name[len(kind):].lstrip("-").isdigit():
            return VarId(kind, int(name[len(kind):]))
    raise ValueError(f"cannot parse variable name {name!r}")


def _var_name(code: int) -> str:
    if code >= _A_BASE:
        return f"a{code - _A_BASE}"
    if code >= _S_BASE:
        i, bar = divmod(code - _S_BASE, 2)
        return f"{'sb' if bar else 's'}{i}"
    i, bar = divmod(code, 2)
    return f"{'xb' if bar else 'x'}{i}"


def _code_to_var(code: int) -> VarId:
    return parse_var(_var_name(code))


# A monomial is a tuple of (code, exponent) pairs, sorted by code, with all
# exponents positive.  The empty tuple is the constant monomial.
Mono = tuple


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    ia = ib = 0
    la, lb = len(a), len(b)
    out = []
    while ia < la and ib < lb:
        ca, ea = a[ia]
        cb, eb = b[ib]
        if ca == cb:
            out.append((ca, ea + eb))
            ia += 1
            ib += 1
        elif ca < cb:
            out.append(a[ia])
            ia += 1
        else:
            out.append(b[ib])
            ib += 1
    out.extend(a[ia:])
    out.extend(b[ib:])
    return tuple(out)


def _mono_div(m: Mono, d: Mono):
    """m / d as a monomial, or None when d does not divide m."""
    if not d:
        return m
    rest = dict(m)
    out = []
    for code, exp in d:
        have = rest.pop(code, 0)
        if have < exp:
            return None
        if have > exp:
            out.append((code, have - exp))
    out.extend(rest.items())
    out.sort()
    return tuple(out)


def _order_key(mono: Mono):
    """Sort key realising the graded-lex order (larger key = larger monomial)."""
    return (sum(e for _, e in mono), tuple((-c, e) for c, e in mono))


def _neg_order_key(mono: Mono):
    """Negated order key, for min-heaps that must pop the largest monomial."""
    return (-sum(e for _, e in mono), tuple((c, -e) for c, e in mono))


def _strip(d: dict) -> dict:
    return {m: c for m, c in d.items() if c}


def _poly(terms: dict) -> "Poly":
    p = object.__new__(Poly)
    object.__setattr__(p, "terms", terms)
    return p


class Poly:
    """An immutable polynomial: mapping from monomial to nonzero int."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Mono, int] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                # A term mentioning a_j with j <= 0 is identically zero.
                if c and not any(_A_NEG_LOW < code <= _A_BASE for code, _ in m):
                    clean[tuple(sorted(m))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("Poly is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = poly_const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            nc = out.get(m, 0) + c
            if nc:
                out[m] = nc
            else:
                del out[m]
        return _poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return _poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            nc = out.get(m, 0) - c
            if nc:
                out[m] = nc
            else:
                del out[m]
        return _poly(out)

    def __rsub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        if not a:
            return _poly({})
        out: dict = {}
        get = out.get
        bitems = list(b.items())
        for m1, c1 in a.items():
            if not m1:
                for m2, c2 in bitems:
                    nc = get(m2, 0) + c1 * c2
                    if nc:
                        out[m2] = nc
                    elif m2 in out:
                        del out[m2]
            else:
                for m2, c2 in bitems:
                    mm = _mono_mul(m1, m2)
                    nc = get(mm, 0) + c1 * c2
                    if nc:
                        out[mm] = nc
                    elif mm in out:
                        del out[mm]
        return _poly(out)

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> "Poly":
        if not isinstance(exp, int) or exp < 0:
            raise ValueError("Poly exponent must be a non-negative int")
        result = ONE
        for _ in range(exp):
            result = result * self
        return result

    def variables(self) -> set:
        """All VarIds that occur in some monomial."""
        codes = set()
        for m in self.terms:
            for code, _ in m:
                codes.add(code)
        return {_code_to_var(c) for c in codes}

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e for _, e in m) for m in self.terms)

    def __str__(self) -> str:
        return poly_to_str(self)

    def __repr__(self) -> str:
        return f"Poly({poly_to_str(self)})"


def _coerce(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, int):
        return poly_const(value)
    return NotImplemented


ZERO = _poly({})
ONE = _poly({(): 1})


def poly_const(c: int) -> Poly:
    return _poly({(): c}) if c else ZERO


def poly_var(v: VarId) -> Poly:
    if v.kind == "a" and v.index <= 0:
        return ZERO
    return _poly({((v.code(), 1),): 1})


def px(i: int) -> Poly:
    return poly_var(X(i))


def pxb(i: int) -> Poly:
    return poly_var(XB(i))


def ps(i: int) -> Poly:
    return poly_var(S(i))


def psb(i: int) -> Poly:
    return poly_var(SB(i))


def pa(j: int) -> Poly:
    return poly_var(A(j))


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_exact_div(p: Poly, q: Poly) -> Poly:
    """Divide p by q, raising DivisionNotExact unless q divides p exactly.

    Classic leading-term elimination in the graded-lex order; a lazy heap
    tracks the current leading monomial of the remainder so the loop costs
    roughly (number of quotient terms) x (size of q).
    """
    if not q.terms:
        raise DivisionByZero("division by the zero polynomial")
    if not p.terms:
        return ZERO
    lead_q = max(q.terms, key=_order_key)
    cq = q.terms[lead_q]
    qitems = list(q.terms.items())
    rem = dict(p.terms)
    heap = [(_neg_order_key(m), m) for m in rem]
    heapq.heapify(heap)
    quot: dict = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = rem.get(m)
        if not c:
            continue  # stale entry
        tm = _mono_div(m, lead_q)
        if tm is None or c % cq:
            raise DivisionNotExact(
                f"remainder nonzero: leading term {_term_str(m, c, lead=True)} "
                f"is not divisible by {_term_str(lead_q, cq, lead=True)}"
            )
        tc = c // cq
        quot[tm] = quot.get(tm, 0) + tc
        for mq, cq2 in qitems:
            mm = _mono_mul(tm, mq)
            nc = rem.get(mm, 0) - tc * cq2
            if nc:
                if mm not in rem:
                    heapq.heappush(heap, (_neg_order_key(mm), mm))
                rem[mm] = nc
            else:
                rem.pop(mm, None)
    return _poly(_strip(quot))


def poly_reduce_inverses(p: Poly) -> Poly:
    """Cancel matched inverse-pair letters monomial by monomial.

    The barred letters denote reciprocals of their plain partners
    (xb_i = 1/x_i, and sb_i = 1/s_i at the half-power level), so inside a
    monomial x_i^e * xb_i^f collapses to x_i^(e-f) (or xb_i^(f-e)); like
    monomials are collected afterwards.  The result is the canonical
    representative with at most one letter of each inverse pair per
    monomial.  The a-letters are untouched.  Idempotent.
    """
    out: dict = {}
    for m, c in p.terms.items():
        exps = dict(m)
        changed = False
        for code in list(exps):
            if code % 2 == 0 and code < _A_NEG_LOW:
                t = min(exps.get(code, 0), exps.get(code + 1, 0))
                if t:
                    exps[code] -= t
                    exps[code + 1] -= t
                    changed = True
        mono = tuple(sorted((k, e) for k, e in exps.items() if e)) if changed else m
        nc = out.get(mono, 0) + c
        if nc:
            out[mono] = nc
        else:
            del out[mono]
    return _poly(out)


def _mono_shift_cancel(m: Mono, shifts: Mapping[int, int]) -> Mono:
    """Multiply a reduced monomial by plain^k per (even code -> k) entry.

    Negative k multiplies by the barred partner instead; the product is
    cancelled on the fly, so the output monomial is again reduced.
    """
    exps = dict(m)
    for code, k in shifts.items():
        e = exps.pop(code, 0) - exps.pop(code + 1, 0) + k
        if e > 0:
            exps[code] = e
        elif e < 0:
            exps[code + 1] = -e
    return tuple(sorted(kv for kv in exps.items() if kv[1]))


def _inverse_stats(p: Poly, bases) -> dict:
    """Per even code: [max barred exponent, min (plain - barred) exponent]."""
    stats = {c: [0, 0] for c in bases}
    first = True
    for m in p.terms:
        exps = dict(m)
        for c in bases:
            f = exps.get(c + 1, 0)
            v = exps.get(c, 0) - f
            st = stats[c]
            if f > st[0]:
                st[0] = f
            if first or v < st[1]:
                st[1] = v
        first = False
    return stats


def poly_exact_div_inverses(p: Poly, q: Poly) -> Poly:
    """Exact division treating barred letters as formal reciprocals.

    Both operands are normalised with poly_reduce_inverses; the barred
    letters are then cleared by multiplying through with plain-letter
    powers (legal since a matched pair is 1), the bar-free polynomials are
    divided exactly, and the compensating power is folded back in.  The
    quotient is returned in reduced form.  Raises DivisionNotExact when no
    quotient exists even granting the inverse relation.
    """
    return poly_exact_div_inverses_many(p, (q,))


def poly_exact_div_inverses_many(p: Poly, divisors) -> Poly:
    """Divide p by every divisor in turn, modulo the reciprocal pairing.

    Same result as chaining poly_exact_div_inverses, but the barred
    letters are cleared once up front and the compensating power folded
    back once at the end, which matters when a large polynomial is divided
    by many small factors.  Each divisor's clearing power bounds its own
    reciprocal depth, so every intermediate quotient in the chain is again
    bar-free and the stepwise free divisions are exact whenever the full
    quotient exists.
    """
    a = poly_reduce_inverses(p)
    divs = [poly_reduce_inverses(q) for q in divisors]
    for b in divs:
        if not b.terms:
            raise DivisionByZero("division by the zero polynomial")
    if not a.terms:
        return ZERO
    if not divs:
        return a
    bases = {
        code - (code % 2)
        for poly in [a, *divs]
        for m in poly.terms
        for code, _ in m
        if code < _A_NEG_LOW
    }
    stats_a = _inverse_stats(a, bases)
    stats_divs = [_inverse_stats(b, bases) for b in divs]
    shifts_a: dict = {}
    comp: dict = {}
    div_shifts: list = [{} for _ in divs]
    for c in bases:
        bar_a, low_a = stats_a[c]
        sum_bar = sum(st[c][0] for st in stats_divs)
        sum_low = sum(st[c][1] for st in stats_divs)
        # Clearing a by plain^need must leave room for the quotient's own
        # barred powers, whose depth is bounded by sum_low - low_a.
        need = max(bar_a, sum_bar + max(0, sum_low - low_a))
        if need:
            shifts_a[c] = need
        for st, sh in zip(stats_divs, div_shifts):
            if st[c][0]:
                sh[c] = st[c][0]
        if need - sum_bar:
            comp[c] = sum_bar - need
    if shifts_a:
        a = _poly({_mono_shift_cancel(m, shifts_a): cc for m, cc in a.terms.items()})
    quot = a
    for b, sh in zip(divs, div_shifts):
        if sh:
            b = _poly({_mono_shift_cancel(m, sh): cc for m, cc in b.terms.items()})
        quot = poly_exact_div(quot, b)
    if comp and quot.terms:
        quot = _poly({_mono_shift_cancel(m, comp): cc for m, cc in quot.terms.items()})
    return quot


def poly_halve(p: Poly) -> Poly:
    """Divide every coefficient by 2 exactly."""
    out = {}
    for m, c in p.terms.items():
        if c % 2:
            raise OddCoefficient(f"coefficient {c} of {_mono_str(m) or '1'} is odd")
        out[m] = c // 2
    return _poly(out)


def _det_cofactor(rows: Sequence[Sequence[Poly]]) -> Poly:
    """First-row cofactor expansion, memoised on the surviving column set."""
    k = len(rows)
    memo: dict = {}

    def rec(cols: tuple) -> Poly:
        r = k - len(cols)
        if len(cols) == 1:
            return rows[r][cols[0]]
        cached = memo.get(cols)
        if cached is not None:
            return cached
        total = ZERO
        for idx, c in enumerate(cols):
            entry = rows[r][c]
            if not entry:
                continue
            sub = rec(cols[:idx] + cols[idx + 1:])
            if idx % 2:
                total = total - entry * sub
            else:
                total = total + entry * sub
        memo[cols] = total
        return total

    if k == 0:
        return ONE
    return rec(tuple(range(k)))


def _det_bareiss(rows: Sequence[Sequence[Poly]]) -> Poly:
    """Fraction-free Gaussian elimination; every division is exact."""
    k = len(rows)
    if k == 0:
        return ONE
    m = [list(row) for row in rows]
    sign = 1
    prev = ONE
    for i in range(k - 1):
        if not m[i][i]:
            for p in range(i + 1, k):
                if m[p][i]:
                    m[i], m[p] = m[p], m[i]
                    sign = -sign
                    break
            else:
                return ZERO
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                num = m[i][i] * m[r][c] - m[r][i] * m[i][c]
                m[r][c] = num if i == 0 else poly_exact_div(num, prev)
            m[r][i] = ZERO
        prev = m[i][i]
    det = m[k - 1][k - 1]
    return -det if sign < 0 else det


def poly_determinant(rows: Sequence[Sequence[Poly]], method: str | None = None) -> Poly:
    """Determinant of a square matrix of polynomials.

    Small matrices (up to 5x5) go through memoised cofactor expansion;
    larger ones use fraction-free Bareiss elimination.  ``method`` can force
    ``"cofactor"`` or ``"bareiss"``.
    """
    k = len(rows)
    for row in rows:
        if len(row) != k:
            raise NonSquare(f"matrix is {k} rows but a row has {len(row)} entries")
    if method is None:
        method = "cofactor" if k <= 5 else "bareiss"
    if method == "cofactor":
        return _det_cofactor(rows)
    if method == "bareiss":
        return _det_bareiss(rows)
    raise ValueError(f"unknown determinant method {method!r}")


def poly_substitute(p: Poly, mapping: Mapping[VarId, "Poly | int"]) -> Poly:
    """Replace variables by polynomials; unmapped variables pass through."""
    code_map = {}
    for v, val in mapping.items():
        code_map[v.code()] = _coerce(val)
    total = ZERO
    for m, c in p.terms.items():
        keep = []
        factors = []
        for code, exp in m:
            sub = code_map.get(code)
            if sub is None:
                keep.append((code, exp))
            else:
                factors.append(sub ** exp)
        term = _poly({tuple(keep): c})
        for f in factors:
            term = term * f
        total = total + term
    return total


def map_s_to_x(p: Poly) -> Poly:
    """Rewrite half powers: s_i^2 -> x_i and sb_i^2 -> xb_i.

    The s-letters realise square roots of mutually inverse values
    (s_i^2 = x_i, sb_i^2 = xb_i with x_i*xb_i = 1 at the half-power
    level), so a matched s_i*sb_i pair cancels to 1.  Pairs are cancelled
    and like monomials collected first; an s-power that is still odd
    after that raises OddHalfPower.
    """
    # Pass 1: cancel matched inverse pairs within each monomial, collect.
    # Pass 2: the surviving s-powers must be even; halve them into x-letters.
    out: dict = {}
    for m, c in poly_reduce_inverses(p).terms.items():
        new: dict = {}
        for code, exp in m:
            if _S_BASE <= code < _A_NEG_LOW:
                if exp % 2:
                    raise OddHalfPower(
                        f"odd power {_var_name(code)}^{exp} cannot be mapped to x"
                    )
                code = code - _S_BASE  # s_i -> x_i, sb_i -> xb_i
                exp //= 2
            new[code] = new.get(code, 0) + exp
        mono = tuple(sorted((k, e) for k, e in new.items() if e))
        out[mono] = out.get(mono, 0) + c
    return _poly(_strip(out))


def eval_integer(p: Poly, point: Mapping[VarId, int]) -> int:
    """Evaluate at an integer point covering every variable of p."""
    values = {v.code(): int(val) for v, val in point.items()}
    total = 0
    for m, c in p.terms.items():
        prod = c
        for code, exp in m:
            if code not in values:
                raise MissingAssignment(f"no value for variable {_var_name(code)}")
            prod *= values[code] ** exp
        total += prod
    return total


def _mono_str(m: Mono) -> str:
    return "*".join(
        _var_name(code) + (f"^{exp}" if exp > 1 else "") for code, exp in m
    )


def _term_str(m: Mono, c: int, lead: bool) -> str:
    body = _mono_str(m)
    mag = abs(c)
    if not body:
        core = str(mag)
    elif mag == 1:
        core = body
    else:
        core = f"{mag}*{body}"
    if lead:
        return f"-{core}" if c < 0 else core
    return f"- {core}" if c < 0 else f"+ {core}"


def poly_to_str(p: Poly) -> str:
    """Canonical text form: terms in descending monomial order."""
    if not p.terms:
        return "0"
    monos = sorted(p.terms, key=_order_key, reverse=True)
    parts = [_term_str(monos[0], p.terms[monos[0]], lead=True)]
    parts.extend(_term_str(m, p.terms[m], lead=False) for m in monos[1:])
    return " ".join(parts)


def poly_to_json(p: Poly) -> dict:
    """JSON form: {"terms": [{"coeff": c, "monomial": {"x1": 2, ...}}, ...]}."""
    terms = []
    for m in sorted(p.terms, key=_order_key, reverse=True):
        terms.append(
            {
                "coeff": p.terms[m],
                "monomial": {_var_name(code): exp for code, exp in m},
            }
        )
    return {"terms": terms}


def poly_from_json(data: Mapping) -> Poly:
    """Inverse of poly_to_json."""
    total: dict = {}
    for term in data["terms"]:
        pairs = []
        dead = False
        for name, exp in term["monomial"].items():
            v = parse_var(name)
            if v.kind == "a" and v.index <= 0:
                dead = True  # a_j with j <= 0 is zero, so the term vanishes
                break
            pairs.append((v.code(), int(exp)))
        if dead:
            continue
        mono = tuple(sorted(pairs))
        total[mono] = total.get(mono, 0) + int(term["coeff"])
    return _poly(_strip(total))
