from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fstype.core import (
    ONE,
    Color,
    HighestWeight,
    Monomial,
    Polynomial,
    colors,
    compare_colors,
    compare_monomials,
    compare_variables,
    leading_term,
    lower,
    monomials,
    multiply,
    parse_monomial,
    parse_polynomial,
    poly_add,
    poly_multiply,
    poly_scale,
    var,
)
from fstype.relations import seed_dc


def x(i, j, n, e=1):
    return Monomial({var(i, j, n): e})


def P(*pairs):
    return Polynomial(pairs)


LESS, EQUAL, GREATER = -1, 0, 1


# ---- orders ----

@pytest.mark.parametrize(
    "a, b, expected",
    [((1, 2), (1, 1), LESS), ((2, 2), (1, 2), LESS), ((1, 2), (1, 2), EQUAL), ((1, 1), (3, 3), GREATER)],
)
def test_compare_colors(a, b, expected):
    assert compare_colors(Color(*a), Color(*b)) == expected


def test_eleven_is_the_maximal_color():
    for ell in (1, 2, 3, 4):
        cs = colors(ell)
        assert max(cs) == Color(1, 1)
        assert len(cs) == ell * (ell + 1) // 2
        assert cs == sorted(cs, reverse=True)


@pytest.mark.parametrize(
    "u, v, expected",
    [((1, 1, 2), (2, 2, 1), LESS), ((2, 2, 1), (1, 2, 1), LESS), ((1, 2, 3), (1, 2, 3), EQUAL)],
)
def test_compare_variables(u, v, expected):
    assert compare_variables(var(*u), var(*v)) == expected


def test_compare_monomials_examples():
    assert compare_monomials(x(1, 1, 1, 2), x(1, 1, 1) * x(1, 2, 1)) == GREATER
    assert compare_monomials(x(1, 2, 1, 2), x(1, 1, 1) * x(2, 2, 1)) == LESS
    m = x(1, 2, 3) * x(2, 2, 1)
    assert compare_monomials(m, m) == EQUAL


def test_prefix_rule_more_factors_is_smaller():
    assert x(1, 1, 1, 2) < x(1, 1, 1)
    assert x(1, 1, 1) * x(2, 2, 3) < x(1, 1, 1)
    assert ONE > x(2, 2, 5)


# ---- grading and arithmetic ----

def test_multiply_degree_weight():
    assert multiply(x(1, 1, 1), x(1, 1, 1)) == x(1, 1, 1, 2)
    assert (x(1, 2, 2, 2) * x(2, 2, 1)).degree == 5
    assert (x(1, 1, 1) * x(2, 2, 1)).weight(2) == (2, 2)
    assert ONE.degree == 0 and ONE.weight(3) == (0, 0, 0)


def test_weight_sums_to_twice_factor_count():
    m = x(1, 2, 1, 3) * x(3, 3, 2) * x(1, 3, 4)
    assert sum(m.weight(3)) == 2 * m.factor_count


def test_polynomial_additive_inverse():
    p = P((x(1, 1, 2) * x(1, 1, 1), 3), (x(1, 2, 1), Fraction(1, 2)))
    assert (p + poly_scale(p, -1)).is_zero()
    assert (p - p).is_zero()


def test_normalization():
    p = P((x(1, 1, 2) * x(1, 1, 1), 2))
    assert p.normalized() == P((x(1, 1, 2) * x(1, 1, 1), 1))
    q = P((x(1, 2, 1, 2), Fraction(-4, 3)), (x(1, 1, 1) * x(2, 2, 1), Fraction(2, 3)))
    assert q.normalized() == P((x(1, 2, 1, 2), 2), (x(1, 1, 1) * x(2, 2, 1), -1))


def test_monomial_multiple_preserves_homogeneity():
    p = P((x(1, 2, 1, 2), 8), (x(1, 1, 1) * x(2, 2, 1), 4))
    assert p.is_homogeneous(2)
    q = p * x(1, 2, 3)
    assert q.is_homogeneous(2)
    assert q.grade(2) == (p.degree + 3, (3, 3))


def test_text_round_trip():
    m = x(1, 1, 1, 2) * x(2, 2, 3)
    assert str(m) == "x[2,2](-3) x[1,1](-1)^2"
    assert parse_monomial(str(m)) == m
    assert str(ONE) == "1" and parse_monomial("1") == ONE
    p = P((x(1, 2, 1, 2), 8), (x(1, 1, 1) * x(2, 2, 1), -4))
    assert str(p) == "8*x[1,2](-1)^2 - 4*x[2,2](-1) x[1,1](-1)"
    assert parse_polynomial(str(p)) == p
    assert str(Polynomial()) == "0" and parse_polynomial("0").is_zero()


def test_monomial_enumeration_is_ascending_and_complete():
    ms = monomials(2, 2)
    assert len(ms) == 9
    assert ms == sorted(ms)
    assert monomials(2, 2, (2, 2)) == [x(1, 2, 1, 2), x(1, 1, 1) * x(2, 2, 1)]
    assert monomials(3, 0) == [ONE]
    # monomials of degree d over 3 colors: coefficient of q^d in prod (1-q^n)^-3
    assert [len(monomials(2, d)) for d in range(6)] == [1, 3, 9, 22, 51, 108]


def test_highest_weight():
    hw = HighestWeight.of(1, 0, 2, 1)
    assert hw.ell == 3 and hw.level == 4
    assert [hw.partial(r) for r in (1, 2, 3)] == [1, 1, 3]
    with pytest.raises(ValueError):
        HighestWeight.of(0, 0)
    with pytest.raises(ValueError):
        HighestWeight.of(1)


# ---- lowering ----

def test_lower_examples():
    assert lower(1, x(1, 1, 1), 2) == P((x(1, 2, 1), 2))
    assert lower(1, x(2, 2, 3), 2).is_zero()
    assert lower(1, x(1, 1, 1, 2), 2) == P((x(1, 1, 1) * x(1, 2, 1), 4))
    assert lower(1, x(1, 2, 4), 2) == P((x(2, 2, 4), 1))
    assert lower(2, x(1, 2, 1), 3) == P((x(1, 3, 1), 1))


def test_lower_rejects_bad_index():
    with pytest.raises(ValueError):
        lower(0, x(1, 1, 1), 2)
    with pytest.raises(ValueError):
        lower(2, x(1, 1, 1), 2)


# ---- leading terms ----

def test_leading_term_examples():
    assert leading_term(P((x(1, 1, 2) * x(1, 1, 1), 2))) == x(1, 1, 2) * x(1, 1, 1)
    p = P((x(1, 2, 1, 2), 8), (x(1, 1, 1) * x(2, 2, 1), 4))
    assert leading_term(p) == x(1, 2, 1, 2)
    assert leading_term(seed_dc(5, 1)) == x(1, 1, 3) * x(1, 1, 2)
    with pytest.raises(ValueError):
        leading_term(Polynomial())


# ---- properties (light; the heavy randomized versions live in test_acceptance) ----

ELL = 3
variable_st = st.builds(
    lambda i, dj, n: var(i, min(i + dj, ELL), n),
    st.integers(1, ELL), st.integers(0, ELL - 1), st.integers(1, 4),
)
monomial_st = st.lists(variable_st, max_size=5).map(lambda vs: Monomial.of(*vs))
poly_st = st.lists(st.tuples(monomial_st, st.integers(-5, 5)), max_size=4).map(Polynomial)


@settings(max_examples=300)
@given(monomial_st, monomial_st, monomial_st)
def test_monomial_order_is_total_and_transitive(a, b, c):
    assert (a < b) + (a == b) + (a > b) == 1
    if a <= b and b <= c:
        assert a <= c


@settings(max_examples=300)
@given(poly_st, poly_st, st.integers(1, ELL - 1))
def test_lower_is_a_derivation(p, q, t):
    lhs = lower(t, poly_multiply(p, q), ELL)
    rhs = poly_add(poly_multiply(lower(t, p, ELL), q), poly_multiply(p, lower(t, q, ELL)))
    assert lhs == rhs


@settings(max_examples=300)
@given(monomial_st, st.integers(1, ELL - 1))
def test_lowering_grading(m, t):
    w = list(m.weight(ELL))
    w[t - 1] -= 1
    w[t] += 1
    for n in lower(t, m, ELL).terms:
        assert n.degree == m.degree
        assert n.weight(ELL) == tuple(w)


BLOCK = monomials(ELL, 4, (2, 2, 2))


@settings(max_examples=300)
@given(monomial_st, st.lists(st.tuples(st.sampled_from(BLOCK), st.integers(-9, 9)), min_size=1, max_size=6))
def test_leading_term_commutes_with_monomial_multiples(m, terms):
    p = Polynomial(terms)
    if p.is_zero():
        return
    assert leading_term(p * m) == multiply(m, leading_term(p))
