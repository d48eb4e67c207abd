from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lcseq.errors import NotInL, WindowTooLarge
from lcseq.relations import (
    RelationKind,
    RelationReport,
    f_pair,
    is_partially_synchronized,
    is_partially_synchronized_bruteforce,
    is_synchronized,
    is_weakly_synchronized,
    relation,
)
from lcseq.sequence import ZERO, Sequence, convolve, scale, term

from conftest import S, small_L, small_L_star

EXAMPLE_A, EXAMPLE_B, EXAMPLE_C = S("1,20,200,1800"), S("1,6,30,60"), S("40,60,10,1")


# -- independent definitional checks over a generous window ----------------

def _wide(A, B, pad=6):
    nz = [X for X in (A, B) if not X.is_zero]
    if not nz:
        return range(0)
    return range(min(X.offset for X in nz) - pad, max(X.end for X in nz) + pad)


def def_sync(A, B):
    a, b = (lambda k: term(A, k)), (lambda k: term(B, k))
    return all(a(k - 1) * b(k + 1) <= a(k) * b(k) and a(k + 1) * b(k - 1) <= a(k) * b(k)
               for k in _wide(A, B))


def def_weak(A, B):
    a, b = (lambda k: term(A, k)), (lambda k: term(B, k))
    return all(a(k - 1) * b(k + 1) + a(k + 1) * b(k - 1) <= 2 * a(k) * b(k) for k in _wide(A, B))


def def_partial(A, B):
    idx = list(_wide(A, B))
    return all(f_pair(A, B, m, n) >= f_pair(A, B, m + 1, n - 1)
               for n in idx for m in idx if m >= n)


DEFS = {RelationKind.SYNC: def_sync, RelationKind.WEAK: def_weak, RelationKind.PARTIAL: def_partial}


# -- f ---------------------------------------------------------------------

def test_f_pair_example_value():
    # 200*6 + 20*30
    assert f_pair(EXAMPLE_A, EXAMPLE_B, 2, 1) == 1800
    assert f_pair(EXAMPLE_A, EXAMPLE_B, 3, 0) == 1860


def test_f_pair_commutative_and_zero():
    for m in range(-2, 6):
        for n in range(-2, 6):
            assert f_pair(EXAMPLE_A, EXAMPLE_B, m, n) == f_pair(EXAMPLE_A, EXAMPLE_B, n, m)
            assert f_pair(ZERO, EXAMPLE_B, m, n) == 0


# -- synchronized ----------------------------------------------------------

def test_sync_fails_on_separating_pair():
    rep = is_synchronized(S("1,3,5"), S("1,4,13"))
    assert not rep.holds
    v = rep.violation
    # a_0 b_2 = 13 > a_1 b_1 = 12
    assert (v.m, v.n, v.lhs, v.rhs, v.condition) == (1, 1, 12, 13, "left")


def test_sync_reflexive_and_zero():
    assert is_synchronized(S("1,3,5"), S("1,3,5")).holds
    assert is_synchronized(ZERO, EXAMPLE_B).holds


# -- weakly synchronized ---------------------------------------------------

def test_weak_examples():
    assert is_weakly_synchronized(S("1,3,5"), S("1,4,13")).holds
    assert is_weakly_synchronized(EXAMPLE_A, EXAMPLE_B).holds


def test_weak_fails_on_example_convolutions():
    rep = is_weakly_synchronized(convolve(EXAMPLE_A, EXAMPLE_C), convolve(EXAMPLE_B, EXAMPLE_C))
    assert not rep.holds
    v = rep.violation
    assert v.m == v.n == 2
    assert v.lhs == 2 * 9210 * 1570 == 28_919_400
    assert v.rhs == 860 * 4261 + 84201 * 300 == 28_924_760
    assert v.margin == 5360


# -- partially synchronized ------------------------------------------------

def test_partial_bruteforce_examples():
    assert is_partially_synchronized_bruteforce(S("1,2,3"), S("1,3,8")).holds
    assert not is_partially_synchronized_bruteforce(S("1,2,3"), S("1,4,15")).holds
    rep = is_partially_synchronized_bruteforce(EXAMPLE_A, EXAMPLE_B)
    v = rep.violation
    assert (v.m, v.n, v.lhs, v.rhs) == (2, 1, 1800, 1860)


def test_partial_fast_examples():
    assert is_partially_synchronized(S("1,3,5"), S("1,4,13")).holds
    assert is_partially_synchronized(S("1,3,8"), S("1,4,15")).holds
    rep = is_partially_synchronized(S("1"), S("@2:1"))
    assert not rep.holds and rep.violation.condition == "i"
    assert rep.violation.lhs < rep.violation.rhs


def test_partial_fast_tail_condition():
    rep = is_partially_synchronized(S("1,1,1"), S("1"))
    assert not rep.holds and rep.violation.condition == "ii"
    v = rep.violation
    assert f_pair(S("1,1,1"), S("1"), v.m, v.n) == v.lhs
    assert f_pair(S("1,1,1"), S("1"), v.m + 1, v.n - 1) == v.rhs


def test_zero_sequence_is_partially_synchronized_with_everything():
    for A in small_L(3, 3):
        assert is_partially_synchronized(ZERO, A).holds
        assert is_partially_synchronized_bruteforce(A, ZERO).holds


def test_non_transitivity_triple():
    A, B, C = S("1,2,3"), S("1,3,8"), S("1,4,15")
    for check in (is_partially_synchronized, is_partially_synchronized_bruteforce):
        assert check(A, B).holds and check(B, C).holds and not check(A, C).holds


@pytest.mark.parametrize("check", [is_synchronized, is_weakly_synchronized,
                                   is_partially_synchronized, is_partially_synchronized_bruteforce])
def test_not_in_L_raises(check):
    with pytest.raises(NotInL):
        check(S("1,0,1"), S("1"))
    with pytest.raises(NotInL):
        check(S("1"), S("1,0,0,1"))


def test_report_invariant():
    with pytest.raises(ValueError):
        RelationReport(RelationKind.WEAK, False)


# -- exhaustive properties -------------------------------------------------

def test_against_definitions_exhaustive(pairs_L):
    for A, B in pairs_L:
        for kind, oracle in DEFS.items():
            assert relation(kind, A, B).holds == oracle(A, B), (kind, A, B)


def test_fast_path_equals_bruteforce_with_report(pairs_L):
    for A, B in pairs_L:
        fast = is_partially_synchronized(A, B)
        brute = is_partially_synchronized_bruteforce(A, B)
        assert fast.holds == brute.holds
        if not fast.holds and fast.violation.condition == "iii":
            # same ordering on the reduced rectangle as in the full window
            assert (fast.violation.m, fast.violation.n) == (brute.violation.m, brute.violation.n)


def test_symmetry_and_reflexivity(pairs_L):
    for A, B in pairs_L:
        for kind in RelationKind:
            assert relation(kind, A, B).holds == relation(kind, B, A).holds
    for A in small_L():
        for kind in RelationKind:
            assert relation(kind, A, A).holds


def test_window_sufficiency(pairs_L):
    for A, B in pairs_L[::3]:
        assert is_synchronized(A, B).holds == is_synchronized(A, B, extra=3).holds
        assert is_weakly_synchronized(A, B).holds == is_weakly_synchronized(A, B, extra=3).holds
        assert (is_partially_synchronized_bruteforce(A, B).holds
                == is_partially_synchronized_bruteforce(A, B, extra=3).holds)


def test_violations_are_real(pairs_L):
    for A, B in pairs_L[::5]:
        rep = is_partially_synchronized_bruteforce(A, B)
        if not rep.holds:
            v = rep.violation
            assert f_pair(A, B, v.m, v.n) == v.lhs < v.rhs == f_pair(A, B, v.m + 1, v.n - 1)


seqs_L_star = st.sampled_from(small_L_star(3, 4))
scalars = st.sampled_from([Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(7, 2)])


@settings(max_examples=300)
@given(seqs_L_star, seqs_L_star, scalars, scalars, st.sampled_from(list(RelationKind)))
def test_scalar_invariance(A, B, u, v, kind):
    assert relation(kind, scale(u, A), scale(v, B)).holds == relation(kind, A, B).holds


@settings(max_examples=200)
@given(seqs_L_star, seqs_L_star, st.integers(0, 3))
def test_shift_both_preserves_relations(A, B, s):
    shifted = [Sequence(X.offset + s, X.terms) for X in (A, B)]
    for kind in RelationKind:
        assert relation(kind, *shifted).holds == relation(kind, A, B).holds


def test_max_window_env(monkeypatch):
    monkeypatch.setenv("LCSEQ_MAX_WINDOW", "5")
    with pytest.raises(WindowTooLarge):
        is_partially_synchronized_bruteforce(EXAMPLE_A, EXAMPLE_B)
    monkeypatch.setenv("LCSEQ_MAX_WINDOW", "100")
    assert not is_partially_synchronized_bruteforce(EXAMPLE_A, EXAMPLE_B).holds
