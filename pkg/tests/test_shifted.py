import random
from fractions import Fraction
from math import factorial

import pytest

from jacksym.exact import ALPHA, AlphaFraction, AlphaPoly, MultiPoly
from jacksym.partitions import (
    MultiRect,
    contains,
    hook_products,
    integer_grid,
    partitions_of,
    partitions_up_to,
    to_partition,
)
from jacksym.jack import jack_character, jack_kostka
from jacksym.shifted import (
    DegreeGuardFailed,
    DiagramFunction,
    PoleEncountered,
    character_function,
    corner_powersum,
    corner_quotient,
    expand_in_pstar,
    expand_many_in_pstar,
    ko_via_shifted_schur,
    kostka_function,
    pstar_function,
    pstar_on_multirect,
    reconstruct_many_multirect,
    reconstruct_multirect,
    shifted_jack,
    shifted_jack_function,
    shifted_jack_scaled,
    shifted_jack_scaled_function,
    shifted_powersum,
    shifted_schur,
    shifted_schur_function,
    shifted_powersum as pstar,
)
from jacksym.symfun import syt_count

from oracles import shifted_schur_oracle

HALF = Fraction(1, 2)
ONE = Fraction(1)


def frac_const(c) -> AlphaFraction:
    return AlphaFraction.const(Fraction(c))


# ------------------------------------------------------ shifted power sums

def test_shifted_powersum_values():
    for lam in ((1,), (3, 1), (2, 2, 1)):
        assert shifted_powersum(1, lam) == AlphaFraction(ALPHA * sum(lam))
    for k in range(1, 5):
        assert shifted_powersum(k, ()) == AlphaFraction.const(0)
    assert shifted_powersum(2, (1,)) == AlphaFraction(ALPHA ** 2 - ALPHA)
    with pytest.raises(ValueError):
        shifted_powersum(0, (1,))


# ------------------------------------------------------- corner quotients

def test_corner_quotient_base_cases():
    assert corner_quotient((), Fraction(3)) == AlphaFraction.const(1)
    z = Fraction(5, 2)
    num = AlphaPoly.const(z) * (AlphaPoly.const(z + 1) - ALPHA)
    den = AlphaPoly.const(z + 1) * (AlphaPoly.const(z) - ALPHA)
    assert corner_quotient((1,), z) == AlphaFraction(num, den)
    with pytest.raises(PoleEncountered):
        corner_quotient((2, 1), Fraction(-2))


def test_corner_quotient_rectangle_product():
    rng = random.Random(7)
    for _ in range(20):
        p = rng.randint(1, 6)
        r = rng.randint(1, 6)
        z = Fraction(rng.randint(7, 60), rng.randint(1, 5))
        lam = (r,) * p
        num = AlphaPoly.const(z) * (AlphaPoly.const(z + p) - ALPHA * r)
        den = AlphaPoly.const(z + p) * (AlphaPoly.const(z) - ALPHA * r)
        assert corner_quotient(lam, z) == AlphaFraction(num, den)


def corner_product_formula(m: MultiRect, z: Fraction) -> AlphaFraction:
    d = len(m.p)
    prefix = [0]
    for x in m.p:
        prefix.append(prefix[-1] + x)
    q = m.q
    num = AlphaPoly.const(z)
    den = AlphaPoly.const(z + prefix[d])
    for j in range(1, d + 1):
        num = num * (AlphaPoly.const(z + prefix[j]) - ALPHA * q[j - 1])
        den = den * (AlphaPoly.const(z + prefix[j - 1]) - ALPHA * q[j - 1])
    return AlphaFraction(num, den)


def test_corner_quotient_block_product():
    zs = (Fraction(4), Fraction(9, 2), Fraction(11))
    for m in integer_grid(2, 2):
        lam = to_partition(m)
        for z in zs:
            assert corner_quotient(lam, z) == corner_product_formula(m, z)


def test_corner_powersum_values():
    for lam in ((1,), (3, 1), (2, 2)):
        assert corner_powersum(1, lam) == AlphaFraction.const(0)
    for k in range(1, 5):
        assert corner_powersum(k, ()) == AlphaFraction.const(0)


def test_corner_powersum_matches_quotient_series():
    # k * [z^-k] log of the corner quotient, extracted through exact
    # rational series arithmetic at sampled alpha
    from itertools import islice
    alpha = Fraction(2)
    depth = 5
    for lam in ((2, 1), (3, 1, 1)):
        # log(prod (z+u)/z) has z^-k coefficient sum (-1)^(k+1) u^k / k
        ell = len(lam)
        ups = [Fraction(i) - alpha * part for i, part in enumerate(lam, start=1)]
        downs = [u - 1 for u in ups]
        for k in range(1, depth):
            total = Fraction(0)
            for u in ups:
                total += (-1) ** (k + 1) * u ** k
            for u in downs:
                total -= (-1) ** (k + 1) * u ** k
            total -= (-1) ** (k + 1) * Fraction(ell) ** k
            assert corner_powersum(k, lam).evaluate(alpha) == total


# ---------------------------------------------------------- p* expansions

def test_pstar_functions_expand_to_unit_vectors():
    for nu in partitions_up_to(3):
        if not nu:
            continue
        e = expand_in_pstar(pstar_function(nu))
        assert e.coeffs == {nu: AlphaFraction.const(1)}


def test_character_expansion_in_pstar():
    e = expand_in_pstar(character_function((1,)))
    assert e.coeffs == {(1,): AlphaFraction(AlphaPoly.const(1), ALPHA)}


def test_schur_expansion_needs_alpha_one():
    with pytest.raises(DegreeGuardFailed):
        expand_in_pstar(shifted_schur_function((2,)))
    e = expand_in_pstar(shifted_schur_function((2,)), alpha=ONE)
    assert e.coeffs == {(1,): frac_const(-HALF), (2,): frac_const(HALF),
                        (1, 1): frac_const(HALF)}


def test_degree_guard_catches_understated_degree():
    ch2 = character_function((2,))
    lied = DiagramFunction(name="lied", degree=1, func=ch2.func)
    with pytest.raises(DegreeGuardFailed):
        expand_in_pstar(lied)
    with pytest.raises(ValueError):
        expand_in_pstar(ch2, k=1)


def test_expansions_evaluate_back_to_the_function():
    for mu in ((1,), (2,), (2, 1)):
        f = kostka_function(mu)
        e = expand_in_pstar(f)
        for lam in partitions_up_to(4):
            assert e.evaluate(lam) == AlphaFraction(f.func(lam))


def test_expand_many_shares_the_solve():
    funcs = [character_function((2,)), kostka_function((2,))]
    many = expand_many_in_pstar(funcs, 2)
    for f, e in zip(funcs, many):
        assert e.coeffs == expand_in_pstar(f).coeffs


# ------------------------------------------------- multirect power sums

def test_pstar_on_multirect_degree_one():
    got = pstar_on_multirect(1, 2)
    p1, p2 = MultiPoly.var_p(2, 1), MultiPoly.var_p(2, 2)
    r1, r2 = MultiPoly.var_r(2, 1), MultiPoly.var_r(2, 2)
    assert got == (p1 * r1 + p1 * r2 + p2 * r2) * ALPHA


def test_pstar_on_multirect_agrees_pointwise():
    m = MultiRect(p=(1, 2), r=(2, 1))
    lam = to_partition(m)
    assert lam == (3, 1, 1)
    for k in range(1, 6):
        got = pstar_on_multirect(k, 2).evaluate(m.p, m.r)
        assert got == shifted_powersum(k, lam)
    zero = pstar_on_multirect(3, 2).evaluate((0, 0), (4, 4))
    assert zero == AlphaFraction.const(0)


# ------------------------------------------------------- reconstructions

def test_reconstruct_character_degree_one():
    got = reconstruct_multirect(character_function((1,)), d=2)
    p1, p2 = MultiPoly.var_p(2, 1), MultiPoly.var_p(2, 2)
    r1, r2 = MultiPoly.var_r(2, 1), MultiPoly.var_r(2, 2)
    assert got == p1 * r1 + p1 * r2 + p2 * r2


def test_reconstruct_character_two_at_alpha_one():
    got = reconstruct_multirect(character_function((2,)), d=1, alpha=ONE)
    p, r = MultiPoly.var_p(1, 1), MultiPoly.var_r(1, 1)
    assert got == p * r ** 2 - p ** 2 * r


def test_reconstruct_kostka_two():
    got = reconstruct_multirect(kostka_function((2,)), d=1)
    p, r = MultiPoly.var_p(1, 1), MultiPoly.var_r(1, 1)
    pairs = r * (r - 1) * HALF
    expect = p * pairs * (ALPHA + 1) + p * (p - 1) * pairs
    assert got == expect


def test_reconstructions_match_on_the_grid():
    # character evaluation cost grows steeply with the diagram, so cap it
    for mu in ((1,), (2,), (1, 1)):
        for d in (1, 2):
            for f in (character_function(mu), kostka_function(mu),
                      shifted_jack_scaled_function(mu)):
                poly = reconstruct_multirect(f, d=d)
                for m in integer_grid(d, 2):
                    lam = to_partition(m)
                    if sum(lam) > 8:
                        continue
                    assert poly.evaluate(m.p, m.r) == AlphaFraction(f.func(lam))


def test_reconstruct_many_is_consistent():
    funcs = [kostka_function((2,)), shifted_jack_scaled_function((2,))]
    both = reconstruct_many_multirect(funcs, 2, 2)
    for f, poly in zip(funcs, both):
        assert poly == reconstruct_multirect(f, d=2)


# ------------------------------------------------- shifted Schur functions

def test_shifted_schur_values():
    assert shifted_schur((2, 1), (2, 1)) == 3
    for lam in partitions_up_to(5):
        assert shifted_schur((1,), lam) == sum(lam)


def test_shifted_schur_vanishing():
    for mu in partitions_up_to(3):
        if not mu:
            continue
        for lam in partitions_up_to(sum(mu)):
            if lam != mu and not contains(lam, mu):
                assert shifted_schur(mu, lam) == 0
        assert shifted_schur(mu, mu) != 0


def test_shifted_schur_against_dimension_ratio():
    for mu in partitions_up_to(3):
        if not mu:
            continue
        for lam in partitions_up_to(6):
            if lam:
                assert shifted_schur(mu, lam) == shifted_schur_oracle(mu, lam)


# -------------------------------------------------- shifted Jack functions

def test_shifted_jack_degree_one():
    for lam in partitions_up_to(5):
        if lam:
            assert shifted_jack((1,), lam) == AlphaFraction.const(sum(lam))


def test_shifted_jack_vanishing_and_normalization():
    for mu in partitions_up_to(4):
        if not mu:
            continue
        for lam in partitions_up_to(sum(mu)):
            if lam != mu:
                assert shifted_jack(mu, lam) == AlphaFraction.const(0)
        h, hp = hook_products(mu)
        expect = AlphaFraction(h * hp, ALPHA ** sum(mu))
        assert shifted_jack(mu, mu) == expect


def test_shifted_jack_single_row_is_scaled_kostka():
    for k in range(1, 5):
        for lam in partitions_up_to(6):
            expect = AlphaFraction(jack_kostka((k,), lam) * factorial(k))
            assert shifted_jack((k,), lam) == expect


def test_shifted_jack_scaled_is_a_power_of_alpha_rescale():
    for mu in ((2,), (2, 1), (3, 1)):
        shift = sum(mu) - mu[0]
        for lam in partitions_up_to(5):
            assert shifted_jack_scaled(mu, lam) \
                == shifted_jack(mu, lam) * ALPHA ** shift


def test_jack_and_schur_shifted_functions_are_proportional_at_alpha_one():
    for mu in ((2,), (2, 1), (3,)):
        ratios = set()
        for lam in partitions_up_to(6):
            if contains(lam, mu) and lam != mu:
                s = shifted_schur(mu, lam)
                j = shifted_jack(mu, lam).evaluate(ONE)
                assert s != 0
                ratios.add(j / s)
        assert len(ratios) == 1


# ------------------------------------------------------ kostka via schur

def test_ko_via_shifted_schur_values():
    assert ko_via_shifted_schur((2,), (2, 1)) == 3
    assert ko_via_shifted_schur((1, 1), (1, 1)) == 2


def test_ko_via_shifted_schur_matches_jack_route():
    for mu in partitions_up_to(3):
        if not mu:
            continue
        for lam in partitions_up_to(5):
            assert ko_via_shifted_schur(mu, lam) \
                == jack_kostka(mu, lam).evaluate(ONE)
