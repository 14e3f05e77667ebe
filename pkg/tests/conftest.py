"""Shared test helpers: partition ranges and hypothesis strategies."""

import sys
from itertools import product as _iproduct

from hypothesis import strategies as st

from flc.polyring import A, X, XB, ZERO, poly_const, poly_var


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance verdicts so they survive output capture."""
    mod = sys.modules.get("test_acceptance")
    verdicts = getattr(mod, "VERDICTS", None) if mod else None
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for line in verdicts:
        terminalreporter.write_line(line)


def shapes(n: int, max_part: int):
    """All weakly decreasing shapes with at most n parts, each <= max_part."""
    out = []
    for lam in _iproduct(range(max_part, -1, -1), repeat=n):
        if all(lam[i] >= lam[i + 1] for i in range(n - 1)):
            out.append(lam)
    return out


_VARS = [X(1), X(2), XB(1), XB(2), A(1), A(2)]


@st.composite
def monomials(draw):
    pairs = draw(
        st.lists(st.tuples(st.sampled_from(_VARS), st.integers(1, 2)), max_size=3)
    )
    m = poly_const(1)
    for v, e in pairs:
        m = m * poly_var(v) ** e
    return m


@st.composite
def polys(draw):
    """Small random polynomials over x1, x2, xb1, xb2, a1, a2."""
    n_terms = draw(st.integers(0, 4))
    p = ZERO
    for _ in range(n_terms):
        c = draw(st.integers(-3, 3))
        p = p + poly_const(c) * draw(monomials())
    return p


@st.composite
def nonzero_polys(draw):
    p = draw(polys())
    if not p.terms:
        p = p + poly_const(draw(st.integers(1, 3)))
    return p
