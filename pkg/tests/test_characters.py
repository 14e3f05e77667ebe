"""Characters by both determinantal routes: pinned small values, route
agreement, denominator identities, the so(2n) family, and dimensions."""

import pytest

from flc.characters import (
    CharSpec,
    Group,
    char_alternant,
    char_jacobi_trudi,
    char_raw,
    char_raw_diff,
    char_so_even,
    char_spec,
    character,
    dimension,
    make_partition,
    partition_length,
    weyl_denominator_product,
    zero_a,
)
from flc.hfuncs import factorial_power
from flc.polyring import (
    ONE,
    X,
    XB,
    ZERO,
    pa,
    poly_determinant,
    poly_halve,
    poly_reduce_inverses,
    poly_substitute,
    poly_to_str,
    ps,
    psb,
    px,
    pxb,
)

import oracles
from conftest import shapes

red = poly_reduce_inverses

BASE_GROUPS = (Group.GL, Group.SP, Group.OO, Group.EO)


# ---------------------------------------------------------------------------
# partitions and specs


def test_make_partition():
    assert make_partition([2, 1], 3) == (2, 1, 0)
    assert make_partition([], 2) == (0, 0)
    with pytest.raises(ValueError):
        make_partition([1, 2], 3)
    with pytest.raises(ValueError):
        make_partition([1, 1, 1], 2)
    with pytest.raises(ValueError):
        make_partition([-1], 1)


def test_partition_length():
    assert partition_length((3, 1, 0)) == 2
    assert partition_length((0, 0)) == 0


def test_char_spec_validation():
    with pytest.raises(ValueError):
        char_spec(Group.GL, 0, [])
    with pytest.raises(ValueError):
        char_so_even(char_spec(Group.GL, 2, [1]))


# ---------------------------------------------------------------------------
# pinned small characters


def test_pinned_rank_one_values():
    assert poly_to_str(char_alternant(char_spec(Group.GL, 2, [1]))) == "x1 + x2 + a1 + a2"
    assert poly_to_str(char_alternant(char_spec(Group.SP, 1, [1]))) == "x1 + xb1 + a1"
    assert poly_to_str(char_raw(char_spec(Group.OO, 1, [1]))) == "x1 + xb1 + a1 + 1"
    assert poly_to_str(char_raw(char_spec(Group.EO, 1, [1]))) == "x1 + xb1 + 2*a1"


def test_pinned_so_even_rank_one():
    assert char_so_even(char_spec(Group.SO_EVEN_PLUS, 1, [1])) == px(1) + pa(1)
    assert char_so_even(char_spec(Group.SO_EVEN_MINUS, 1, [1])) == pxb(1) + pa(1)


def test_diff_character_small():
    assert char_raw_diff(1, [1]) == px(1) - pxb(1)
    assert char_raw_diff(2, [1, 0]) == ZERO
    assert char_raw_diff(2, [1, 1]) != ZERO


def test_diff_character_classical_specialization():
    want = (px(1) - pxb(1)) * (px(2) - pxb(2))
    assert zero_a(char_raw_diff(2, [1, 1])) == want


@pytest.mark.parametrize("group", BASE_GROUPS)
def test_empty_partition_gives_one(group):
    spec = char_spec(group, 2, [])
    assert char_raw(spec) == ONE
    assert char_alternant(spec) == ONE
    assert char_jacobi_trudi(spec) == ONE


def test_one_row_characters_are_h_functions():
    from flc.hfuncs import HKind, VarSpec, h

    assert char_jacobi_trudi(char_spec(Group.GL, 2, [2])) == h(
        VarSpec(HKind.GL, singles=(X(1), X(2))), 2
    )
    assert char_jacobi_trudi(char_spec(Group.SP, 2, [3])) == h(
        VarSpec(HKind.SP, pairs=(1, 2)), 3
    )


# ---------------------------------------------------------------------------
# route agreement (small fast slice; the full range runs in acceptance)


@pytest.mark.parametrize("group", BASE_GROUPS)
@pytest.mark.parametrize("n", (1, 2))
def test_three_routes_agree(group, n):
    for lam in shapes(n, 3):
        spec = char_spec(group, n, lam)
        jt = char_jacobi_trudi(spec)
        assert char_raw(spec) == jt, (group, lam)
        assert char_alternant(spec) == jt, (group, lam)


@pytest.mark.parametrize("group", BASE_GROUPS)
def test_three_routes_agree_rank3_spot(group):
    for lam in [(2, 1, 0), (2, 2, 1), (3, 1, 1)]:
        spec = char_spec(group, 3, lam)
        jt = char_jacobi_trudi(spec)
        assert char_raw(spec) == jt, lam
        assert char_alternant(spec) == jt, lam


# ---------------------------------------------------------------------------
# denominator identities, transcribed independently of the characters module


def _raw_denominator_matrix(group, n):
    if group is Group.GL:
        entry = lambda i, m: factorial_power(X(i), m)
    elif group is Group.SP:
        entry = lambda i, m: px(i) * factorial_power(X(i), m) - pxb(i) * factorial_power(XB(i), m)
    elif group is Group.OO:
        def entry(i, m):
            xfac = ONE
            bfac = ONE
            for k in range(1, m + 1):
                xfac = xfac * (ps(i) ** 2 + pa(k))
                bfac = bfac * (psb(i) ** 2 + pa(k))
            return ps(i) * xfac - psb(i) * bfac
    else:  # EO
        entry = lambda i, m: factorial_power(X(i), m) + factorial_power(XB(i), m)
    return [[entry(i, n - j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def _raw_denominator(group, n):
    det = poly_determinant(_raw_denominator_matrix(group, n))
    return poly_halve(det) if group is Group.EO else det


def _denominator_product(group, n):
    prod = ONE
    if group is Group.GL:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                prod = prod * (px(i) - px(j))
        return prod
    if group is Group.OO:
        for i in range(1, n + 1):
            prod = prod * (ps(i) - psb(i))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                prod = prod * (ps(i) ** 2 + psb(i) ** 2 - ps(j) ** 2 - psb(j) ** 2)
        return prod
    if group is Group.SP:
        for i in range(1, n + 1):
            prod = prod * (px(i) - pxb(i))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            prod = prod * (px(i) + pxb(i) - px(j) - pxb(j))
    return prod


@pytest.mark.parametrize("group", BASE_GROUPS)
@pytest.mark.parametrize("n", (1, 2, 3))
def test_denominator_equals_weyl_product(group, n):
    det = red(_raw_denominator(group, n))
    prod = red(_denominator_product(group, n))
    assert det == prod
    assert red(weyl_denominator_product(group, n)) == prod


@pytest.mark.parametrize("group", BASE_GROUPS)
@pytest.mark.parametrize("n", (2, 3))
def test_denominator_independent_of_a(group, n):
    rows = _raw_denominator_matrix(group, n)
    a_vars = {v for row in rows for e in row for v in e.variables() if v.kind == "a"}
    if n >= 2:
        assert a_vars  # the raw entries genuinely mention a's
    prod = red(_denominator_product(group, n))
    for value_of in (lambda v: 0, lambda v: 1 + 2 * v.index):
        subs = {v: value_of(v) for v in a_vars}
        det = poly_determinant(
            [[poly_substitute(e, subs) for e in row] for row in rows]
        )
        if group is Group.EO:
            det = poly_halve(det)
        assert red(det) == prod


# ---------------------------------------------------------------------------
# so(2n) family


@pytest.mark.parametrize("n", (1, 2))
def test_so_even_decomposition(n):
    for lam in shapes(n, 3):
        if partition_length(lam) < n:
            continue
        eo = char_jacobi_trudi(char_spec(Group.EO, n, lam))
        eod = char_jacobi_trudi(char_spec(Group.EO_DIFF, n, lam))
        plus = char_so_even(char_spec(Group.SO_EVEN_PLUS, n, lam))
        minus = char_so_even(char_spec(Group.SO_EVEN_MINUS, n, lam))
        assert plus + minus == eo, lam
        assert plus - minus == eod, lam
        assert char_raw_diff(n, lam) == eod, lam


def test_so_even_degenerate_equals_eo():
    lam = [2, 1, 0]
    eo = char_jacobi_trudi(char_spec(Group.EO, 3, lam))
    for g in (Group.SO_EVEN_PLUS, Group.SO_EVEN_MINUS):
        assert char_so_even(char_spec(g, 3, lam)) == eo


def test_eod_jacobi_trudi_zero_when_last_part_zero():
    for lam in [(1, 0), (3, 2, 0)]:
        n = len(lam)
        assert char_jacobi_trudi(char_spec(Group.EO_DIFF, n, lam)) == ZERO


def test_character_dispatch():
    spec = char_spec(Group.SP, 2, [1, 1])
    assert character(spec) == char_jacobi_trudi(spec)
    so = char_spec(Group.SO_EVEN_PLUS, 2, [1, 1])
    assert character(so) == char_so_even(so)


# ---------------------------------------------------------------------------
# dimensions against the independent Weyl oracle


_ORACLES = {
    Group.GL: oracles.dim_gl,
    Group.SP: oracles.dim_sp,
    Group.OO: oracles.dim_so_odd,
    Group.EO: oracles.dim_o_even,
    Group.SO_EVEN_PLUS: oracles.dim_so_even,
    Group.SO_EVEN_MINUS: oracles.dim_so_even,
}


@pytest.mark.parametrize("group", list(_ORACLES))
@pytest.mark.parametrize("n", (1, 2, 3))
def test_dimension_matches_weyl_formula(group, n):
    for lam in shapes(n, 2):
        want = _ORACLES[group](n, lam)
        assert dimension(char_spec(group, n, lam)) == want, (group, lam)


def test_dimension_pinned_values():
    assert dimension(char_spec(Group.GL, 3, [2, 1])) == 8
    assert dimension(char_spec(Group.SP, 2, [1, 1])) == 5
    assert dimension(char_spec(Group.OO, 2, [1])) == 5
    assert dimension(char_spec(Group.OO, 3, [1])) == 7
    assert dimension(char_spec(Group.EO, 2, [1])) == 4
    assert dimension(char_spec(Group.EO, 3, [1])) == 6
