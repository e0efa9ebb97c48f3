from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jacksym.exact import (
    ALPHA,
    AlphaFraction,
    AlphaPoly,
    FFExpansion,
    MultiPoly,
    NonPolynomialAlpha,
    SingularSystem,
    falling_factorial,
    faulhaber,
    format_rational,
    from_falling_factorial,
    parse_rational,
    poly_gcd,
    solve_fraction_system,
    solve_poly_system,
    stirling1_signed,
    stirling2,
    to_falling_factorial,
)

from oracles import stirling1_signed_oracle, stirling2_oracle

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(st.integers(min_value=-9, max_value=9), max_size=5).map(AlphaPoly)
nonzero_polys = polys.filter(bool)


def multipolys(d: int):
    keys = st.tuples(*[st.integers(min_value=0, max_value=3)] * (2 * d))
    return st.dictionaries(keys, st.integers(min_value=-9, max_value=9),
                           max_size=5).map(lambda t: MultiPoly(d, t))


# ----------------------------------------------------------- rational text

@pytest.mark.parametrize("q, text", (
    (Fraction(3), "3"),
    (Fraction(-3), "-3"),
    (Fraction(1, 2), "1/2"),
    (Fraction(-7, 3), "-7/3"),
    (Fraction(0), "0"),
))
def test_format_rational(q, text):
    assert format_rational(q) == text
    assert parse_rational(text) == q


@given(rationals)
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q


# ------------------------------------------------------------- alpha polys

@given(polys, polys, polys)
def test_alpha_poly_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == AlphaPoly()


@given(polys, polys, rationals)
def test_alpha_poly_evaluate_is_homomorphism(a, b, x):
    assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)
    assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)


@given(polys, nonzero_polys)
def test_alpha_poly_divmod(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(nonzero_polys, nonzero_polys)
def test_poly_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert a.divmod(g)[1].is_zero()
    assert b.divmod(g)[1].is_zero()
    assert g.leading() == 1


def test_alpha_poly_strings():
    assert ALPHA.to_str() == "alpha"
    assert (ALPHA ** 2 - 1).to_str() == "alpha^2 - 1"
    assert AlphaPoly((Fraction(1, 2), 0, 3)).to_str() == "3*alpha^2 + 1/2"
    assert AlphaPoly().to_str() == "0"
    assert faulhaber(1).to_str(var="n") == "1/2*n^2 + 1/2*n"


# --------------------------------------------------------- alpha fractions

@given(nonzero_polys, nonzero_polys)
def test_alpha_fraction_reciprocal(a, b):
    x = AlphaFraction(a, b)
    assert x * AlphaFraction(b, a) == AlphaFraction.const(1)


@given(polys, nonzero_polys, rationals)
def test_alpha_fraction_evaluate(a, b, x):
    if not b.evaluate(x):
        return
    assert AlphaFraction(a, b).evaluate(x) == a.evaluate(x) / b.evaluate(x)


def test_alpha_fraction_normal_form():
    x = AlphaFraction(ALPHA ** 2 - 1, ALPHA + 1)
    assert x.is_polynomial()
    assert x.as_poly() == ALPHA - 1
    y = AlphaFraction(AlphaPoly((1,)), ALPHA + 1)
    assert not y.is_polynomial()
    with pytest.raises(NonPolynomialAlpha):
        y.as_poly()
    with pytest.raises(ZeroDivisionError):
        AlphaFraction(ALPHA, AlphaPoly())


# ------------------------------------------------------------- multi polys

def test_multipoly_basic_algebra():
    p1 = MultiPoly.var_p(1, 1)
    r1 = MultiPoly.var_r(1, 1)
    assert (p1 + r1) * (p1 - r1) == p1 ** 2 - r1 ** 2
    assert (p1 * r1).evaluate([3], [5]) == AlphaFraction.const(15)
    assert MultiPoly.const(2, Fraction(1, 2)).evaluate([0, 0], [0, 0]) \
        == AlphaFraction.const(Fraction(1, 2))


@given(multipolys(2), multipolys(2))
def test_multipoly_commutes(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(multipolys(1))
def test_multipoly_json_round_trip(a):
    assert MultiPoly.from_json_terms(1, a.to_json_terms()) == a


@given(multipolys(2))
def test_falling_factorial_round_trip(a):
    assert from_falling_factorial(to_falling_factorial(a)) == a


@settings(max_examples=40)
@given(multipolys(2), st.lists(st.integers(min_value=0, max_value=10),
                               min_size=4, max_size=4))
def test_ff_expansion_evaluates_like_the_polynomial(a, point):
    ff = to_falling_factorial(a)
    expect = a.evaluate(point[:2], point[2:])
    got = AlphaPoly()
    for (c, aexp, bexp), v in ff.terms.items():
        term = Fraction(v)
        for x, e in zip(point[:2], aexp):
            term *= falling_factorial(Fraction(x), e)
        for x, e in zip(point[2:], bexp):
            term *= falling_factorial(Fraction(x), e)
        got = got + AlphaPoly((0,) * c + (term,))
    assert AlphaFraction(got) == expect


def test_to_falling_factorial_examples():
    p1 = MultiPoly.var_p(1, 1)
    r1 = MultiPoly.var_r(1, 1)
    assert to_falling_factorial(p1 ** 2).terms == {
        (0, (2,), (0,)): Fraction(1),
        (0, (1,), (0,)): Fraction(1),
    }
    assert to_falling_factorial(p1 * r1).terms == {(0, (1,), (1,)): Fraction(1)}
    assert to_falling_factorial(r1 ** 3).terms == {
        (0, (0,), (3,)): Fraction(1),
        (0, (0,), (2,)): Fraction(3),
        (0, (0,), (1,)): Fraction(1),
    }


def test_to_falling_factorial_rejects_rational_functions():
    bad = MultiPoly(1, {(1, 0): AlphaFraction(AlphaPoly((1,)), ALPHA + 1)})
    with pytest.raises(NonPolynomialAlpha):
        to_falling_factorial(bad)


def test_from_falling_factorial_examples():
    p1 = MultiPoly.var_p(1, 1)
    r1 = MultiPoly.var_r(1, 1)
    two_p = FFExpansion(1, {(0, (2,), (0,)): 1})
    assert from_falling_factorial(two_p) == p1 ** 2 - p1
    assert from_falling_factorial(FFExpansion(1)) == MultiPoly.zero(1)
    mixed = FFExpansion(1, {(0, (1,), (2,)): 1})
    assert from_falling_factorial(mixed) == p1 * r1 ** 2 - p1 * r1


def test_nonnegativity_certificates():
    ok, wit = FFExpansion(1, {(0, (1,), (2,)): Fraction(1, 2)}).is_nonnegative()
    assert ok and wit == []
    bad = FFExpansion(1, {(1, (1,), (0,)): -1})
    ok, wit = bad.is_nonnegative()
    assert not ok
    assert wit == [((1, (1,), (0,)), Fraction(-1))]


def test_rectangle_character_polynomial_is_not_ff_nonnegative():
    p = MultiPoly.var_p(1, 1)
    r = MultiPoly.var_r(1, 1)
    ff = to_falling_factorial(p * r ** 2 - p ** 2 * r)
    ok, wit = ff.is_nonnegative()
    assert not ok
    assert ((0, (2,), (1,)), Fraction(-1)) in wit


def test_ff_add_term_cancels():
    ff = FFExpansion(1)
    ff.add_term(0, (1,), (1,), Fraction(2))
    ff.add_term(0, (1,), (1,), Fraction(-2))
    assert ff.terms == {}


def test_ff_json_and_str():
    ff = FFExpansion(1, {(1, (1,), (2,)): Fraction(1, 2), (0, (2,), (2,)): 1})
    assert FFExpansion.from_json_terms(1, ff.to_json_terms()) == ff
    assert ff.to_str() == "1/2*alpha*ff(p1,1)*ff(r1,2) + 1*ff(p1,2)*ff(r1,2)"


# ---------------------------------------------------------------- stirling

@pytest.mark.parametrize("n, k, value", ((0, 0, 1), (3, 2, 3), (4, 2, 7)))
def test_stirling2_values(n, k, value):
    assert stirling2(n, k) == value


def test_stirling_numbers_match_enumeration():
    for n in range(7):
        for k in range(n + 2):
            assert stirling2(n, k) == stirling2_oracle(n, k)
            assert stirling1_signed(n, k) == stirling1_signed_oracle(n, k)


def test_stirling2_recurrence():
    for n in range(1, 13):
        for k in range(1, 13):
            assert stirling2(n, k) == k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def test_stirling_matrices_are_inverse():
    for n in range(8):
        for m in range(8):
            total = sum(stirling1_signed(n, k) * stirling2(k, m)
                        for k in range(max(n, m) + 1))
            assert total == (1 if n == m else 0)


@given(st.integers(min_value=0, max_value=8), rationals)
def test_falling_factorial_recurrence(a, x):
    expect = Fraction(1)
    for i in range(a):
        expect *= x - i
    assert falling_factorial(x, a) == expect


# ---------------------------------------------------------------- faulhaber

def test_faulhaber_closed_forms():
    n = AlphaPoly((0, 1))
    assert faulhaber(0) == n
    assert faulhaber(1) == n * (n + 1) * Fraction(1, 2)
    assert faulhaber(2) == n * (n + 1) * (2 * n + 1) * Fraction(1, 6)


@pytest.mark.parametrize("k", range(6))
def test_faulhaber_sums_powers(k):
    for n in range(21):
        assert faulhaber(k).evaluate(Fraction(n)) == sum(i ** k for i in range(1, n + 1))


# ------------------------------------------------------------ linear solves

def test_solve_fraction_system_round_trip():
    a = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    x = [Fraction(4), Fraction(-1, 2)]
    b = [[sum(row[j] * x[j] for j in range(2))] for row in a]
    assert solve_fraction_system(a, b) == [[x[0]], [x[1]]]


def test_solve_fraction_system_singular():
    a = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    with pytest.raises(SingularSystem):
        solve_fraction_system(a, [[Fraction(1)], [Fraction(1)]])


def test_solve_poly_system_symbolic():
    a = [[ALPHA, AlphaPoly.const(1)], [AlphaPoly.const(2), ALPHA + 1]]
    x = [ALPHA + 1, 2 * ALPHA]
    b = [[sum((row[j] * x[j] for j in range(2)), AlphaPoly())] for row in a]
    xs, det = solve_poly_system(a, b)
    assert [AlphaFraction(xs[i][0], det) for i in range(2)] \
        == [AlphaFraction(v) for v in x]


def test_solve_poly_system_singular():
    a = [[ALPHA, ALPHA], [ALPHA, ALPHA]]
    with pytest.raises(SingularSystem):
        solve_poly_system(a, [[AlphaPoly.const(1)], [AlphaPoly.const(2)]])
