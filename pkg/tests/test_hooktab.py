from fractions import Fraction

import pytest

from jacksym import hooktab as hk
from jacksym.exact import AlphaPoly, from_falling_factorial
from jacksym.jack import jack_kostka
from jacksym.partitions import partitions_of
from jacksym.shifted import kostka_function, reconstruct_multirect

ALPHA3 = AlphaPoly((0, 0, 0, 1))


# --------------------------------------------------------- validating input

def test_constructor_rejects_bad_marks():
    with pytest.raises(hk.InvalidTableau):
        hk.hook_tableau((2, 1), [(1, 3)])
    with pytest.raises(hk.InvalidTableau):
        hk.hook_tableau((2, 2), [(1, 1), (2, 1)])
    with pytest.raises(hk.InvalidTableau):
        hk.hook_tableau((2, 2), [(1, 1), (2, 2)])


def test_constructor_rejects_bad_arrows():
    shape = (3, 3)
    marks = [(1, 1), (1, 2)]
    with pytest.raises(hk.InvalidTableau):
        hk.hook_tableau(shape, marks, {(1, 1): hk.Right(0)})
    with pytest.raises(hk.InvalidTableau):
        hk.hook_tableau(shape, marks, {(1, 2): hk.Right(2)})
    with pytest.raises(hk.InvalidTableau):
        hk.hook_tableau(shape, marks, {(1, 2): hk.Down(0)})
    with pytest.raises(hk.InvalidTableau):
        hk.hook_tableau(shape, marks, {(1, 2): hk.Down(2)})
    with pytest.raises(hk.InvalidTableau):
        hk.hook_tableau(shape, marks, [((1, 2), hk.Right(0)),
                                       ((1, 2), hk.Down(1))])
    with pytest.raises(hk.InvalidTableau):
        hk.hook_tableau(shape, marks, {(1, 2): "east"})


def test_permuted_constructor_rejects_non_permutations():
    with pytest.raises(hk.InvalidTableau):
        hk.permuted_tableau((2,), [((1, 1), 1), ((1, 2), 3)])
    with pytest.raises(hk.InvalidTableau):
        hk.permuted_tableau((2, 2), [((1, 1), 1), ((2, 1), 1)])


def test_critical_boxes():
    assert hk.critical_boxes(((1, 1), (1, 2), (1, 3))) == ((1, 2), (1, 3))
    assert hk.critical_boxes(((1, 1), (2, 3))) == ()


# ------------------------------------------------------------ the weights

def test_weights():
    s = hk.sample_tableau()
    assert hk.weight_hook(s) == ALPHA3
    empty = hk.hook_tableau((3,), [])
    assert hk.weight_hook(empty) == AlphaPoly((1,))


def test_permutation_weight_sum_closed_form():
    from itertools import permutations
    from jacksym.combinatorics import lrmin
    for j in range(1, 7):
        total = AlphaPoly()
        for word in permutations(range(1, j + 1)):
            e = j - lrmin(list(word))
            total = total + AlphaPoly((0,) * e + (1,))
        closed = AlphaPoly((1,))
        for i in range(1, j):
            closed = closed * AlphaPoly((1, i))
        assert hk.perm_weight_sum(j) == total == closed


# --------------------------------------------------- the rewriting procedures

def test_rewrite_smallest_cases():
    single = hk.hook_tableau((3, 1), [(2, 1)])
    assert hk.psi(single).labels == (((2, 1), 1),)
    pair = hk.hook_tableau((2,), [(1, 1), (1, 2)])
    assert dict(hk.psi(pair).labels) == {(1, 1): 2, (1, 2): 1}
    arrowed = hk.hook_tableau((2,), [(1, 1), (1, 2)], {(1, 2): hk.Right(0)})
    assert dict(hk.psi(arrowed).labels) == {(1, 1): 1, (1, 2): 2}


def test_rewrite_eight_mark_example():
    # the validator forbids this marking; exercise the rewriting on the
    # raw tuple anyway
    shape = (9, 9, 7, 5)
    marks = ((1, 1), (1, 6), (1, 7), (1, 8), (1, 9), (2, 2), (2, 3), (2, 4))
    arrows = (
        ((1, 7), hk.Right(2)),
        ((1, 8), hk.Right(1)),
        ((1, 9), hk.Down(1)),
        ((2, 3), hk.Right(4)),
        ((2, 4), hk.Down(2)),
    )
    t = hk.HookTableau(shape, tuple(sorted(marks)), tuple(sorted(arrows)))
    got = hk.psi(t)
    assert dict(got.labels) == {
        (1, 1): 2, (1, 6): 1,
        (2, 2): 4, (2, 3): 1, (2, 7): 5, (2, 8): 2, (2, 9): 3,
        (4, 4): 1,
    }
    assert hk.weight_hook(t) == hk.weight_permuted(got) == ALPHA3


def test_rewrite_sample_and_trace():
    s = hk.sample_tableau()
    trace: list = []
    p = hk.psi(s, trace=trace)
    assert dict(p.labels) == {
        (1, 6): 1,
        (2, 2): 4, (2, 3): 1, (2, 7): 5, (2, 8): 2, (2, 9): 3,
        (4, 1): 2, (4, 4): 1,
    }
    assert [c for c, _ in trace] == [
        "start", "down", "right-below", "right-below", "keep",
        "down", "right-above", "keep", "keep",
    ]
    back_trace: list = []
    assert hk.phi(p, trace=back_trace) == s
    assert back_trace[0][0] == "start"
    assert {c for c, _ in back_trace} <= {
        "start", "unlabel", "down", "right-below", "right-above", "right-empty",
    }


def test_rewrite_ten_label_example():
    shape = (11, 11, 7)
    labels = (
        ((1, 2), 2), ((1, 9), 3), ((1, 11), 1),
        ((2, 1), 2), ((2, 4), 1), ((2, 8), 3), ((2, 10), 4),
        ((3, 3), 2), ((3, 5), 3), ((3, 7), 1),
    )
    t = hk.permuted_tableau(shape, labels)
    got = hk.phi(t)
    assert set(got.marked) == {(1, 9), (1, 10), (1, 11),
                               (2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 8),
                               (3, 7)}
    assert dict(got.arrows) == {
        (1, 10): hk.Right(0),
        (2, 2): hk.Right(8),
        (2, 3): hk.Right(2),
        (2, 4): hk.Right(4),
        (2, 5): hk.Down(1),
    }
    assert hk.weight_hook(got) == hk.weight_permuted(t)
    assert hk.psi(got) == t


def test_rewrites_are_mutually_inverse_and_weight_preserving():
    for n in range(1, 6):
        for lam in partitions_of(n):
            for k in range(1, min(3, n) + 1):
                for t in hk.hook_tableaux_stream(lam, k):
                    p = hk.psi(t)
                    assert hk.weight_permuted(p) == hk.weight_hook(t)
                    assert hk.phi(p) == t
                for p in hk.permuted_tableaux_stream(lam, k):
                    t = hk.phi(p)
                    assert hk.weight_hook(t) == hk.weight_permuted(p)
                    assert hk.psi(t) == p


def test_rewrites_round_trip_wider_shapes():
    for lam in ((3, 2, 1), (4, 2), (2, 2, 1, 1), (6,), (3, 3)):
        for t in hk.hook_tableaux_stream(lam, 4):
            p = hk.psi(t)
            assert hk.phi(p) == t
            assert hk.weight_permuted(p) == hk.weight_hook(t)


# ------------------------------------------------------------ weighted counts

def test_one_row_kostka_frozen_values():
    assert hk.ko_onepart_subsets(2, (2,)) == AlphaPoly((1, 1))
    assert hk.ko_onepart_subsets(2, (2, 1)) == AlphaPoly((2, 1))
    assert hk.ko_onepart_subsets(2, (2, 2)) == AlphaPoly((4, 2))
    assert hk.ko_onepart_subsets(2, (1, 1)) == AlphaPoly(())


def test_one_row_kostka_four_routes_agree():
    for n in range(1, 7):
        for lam in partitions_of(n):
            for k in range(1, n + 1):
                want = jack_kostka((k,), lam)
                assert hk.ko_onepart_tableaux(k, lam, "hook") == want
                assert hk.ko_onepart_tableaux(k, lam, "permuted") == want
                assert hk.ko_onepart_subsets(k, lam) == want


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        hk.ko_onepart_tableaux(1, (1,), "diagonal")


# --------------------------------------------- falling-factorial expansion

def test_ff_expansion_frozen_terms():
    f11 = hk.ko_onepart_ff(1, 1)
    assert f11.terms == {(0, (1,), (1,)): Fraction(1)}
    f21 = hk.ko_onepart_ff(2, 1)
    assert f21.terms == {
        (0, (1,), (2,)): Fraction(1, 2),
        (1, (1,), (2,)): Fraction(1, 2),
        (0, (2,), (2,)): Fraction(1, 2),
    }
    f0 = hk.ko_onepart_ff(0, 2)
    assert f0.terms == {(0, (0, 0), (0, 0)): Fraction(1)}
    with pytest.raises(ValueError):
        hk.ko_onepart_ff(1, 0)


def test_ff_expansion_is_termwise_nonnegative():
    for d in (1, 2):
        for k in range(1, 6):
            for _, c in hk.ko_onepart_ff(k, d).canonical_terms():
                assert c > 0


def test_ff_expansion_matches_reconstruction():
    for d in (1, 2):
        for k in range(1, 6):
            lhs = from_falling_factorial(hk.ko_onepart_ff(k, d))
            rhs = reconstruct_multirect(kostka_function((k,)), k, d)
            assert lhs == rhs, (k, d)


# ------------------------------------------------------------ rendering

def test_rendering():
    t = hk.hook_tableau((2,), [(1, 1), (1, 2)], {(1, 2): hk.Right(0)})
    assert hk.format_hook(t) == "  * *^0"
    assert hk.format_permuted(hk.psi(t)) == "1 2"
    s = hk.sample_tableau()
    art = hk.format_hook(s)
    assert "^2" in art and "_1" in art and "_2" in art
    assert len(art.splitlines()) == 4
