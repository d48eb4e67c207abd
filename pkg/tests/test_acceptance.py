"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

All arithmetic is exact, so every comparison is an equality or an integer
inequality with zero tolerance.  Run on its own with

    python -m pytest tests/test_acceptance.py -v -s

or ``python tests/test_acceptance.py`` for the summary lines alone.
"""
import itertools
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lcseq.relations import (  # noqa: E402
    is_partially_synchronized,
    is_partially_synchronized_bruteforce,
    is_synchronized,
    is_weakly_synchronized,
)
from lcseq.search import (  # noqa: E402
    ConjectureId,
    SearchConfig,
    find_counterexample,
    lstar_candidates,
    verify_paper_example,
    verify_witness,
)
from lcseq.sequence import SeqClass, classify, convolve, from_terms, lin_comb  # noqa: E402
from lcseq.theorems import (  # noqa: E402
    check_triangle_transport,
    proof_trace_window,
    verify_lincomb_partial,
)

from conftest import S, shifted_L_star  # noqa: E402

GRID = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3)]
RESULTS = {}


@pytest.fixture
def report(capsys):
    def emit(n, ok, msg, started):
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({time.perf_counter() - started:.1f}s) {msg}"
        RESULTS[n] = line
        with capsys.disabled():
            print("\n" + line, flush=True)
        return ok
    return emit


def lstar_values_between(max_len, lo, hi):
    """L* sequences at offset 0 whose terms all lie in [lo, hi]."""
    out = []
    for length in range(1, max_len + 1):
        for t in itertools.product(range(lo, hi + 1), repeat=length):
            A = from_terms(0, t)
            if classify(A) is SeqClass.L_STAR:
                out.append(A)
    return out


def partial_pairs(max_len=3, max_value=4):
    """Unordered pairs (A, B) with A ~p B, including A == B."""
    seqs = lstar_candidates(SearchConfig(max_len, max_value))
    return [(A, B) for i, A in enumerate(seqs) for B in seqs[i:]
            if is_partially_synchronized_bruteforce(A, B).holds]


# -- 1 ---------------------------------------------------------------------

def test_criterion_1_worked_example_regression(report):
    t0 = time.perf_counter()
    rep = verify_paper_example()
    d = rep.detail
    ok = (rep.holds
          and d["A*C"] == S("40,860,9210,84201,110020,18200,1800")
          and d["B*C"] == S("40,300,1570,4261,3906,630,60")
          and d["A~wB"] is True
          and d["k"] == 2
          and d["margin"] == 860 * 4261 + 84201 * 300 - 2 * 9210 * 1570 == 5360)
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 1
    assert report(1, ok, f"weak sync of (A*C,B*C) fails at k={d['k']}, margin {d['margin']}", t0)


# -- 2 ---------------------------------------------------------------------

def test_criterion_2_separation_witnesses(report):
    t0 = time.perf_counter()
    A, B = S("1,3,5"), S("1,4,13")
    pair = (is_weakly_synchronized(A, B).holds, is_synchronized(A, B).holds,
            is_partially_synchronized_bruteforce(A, B).holds, is_partially_synchronized(A, B).holds)
    X, Y, Z = S("1,2,3"), S("1,3,8"), S("1,4,15")
    triple = []
    for check in (is_partially_synchronized, is_partially_synchronized_bruteforce):
        triple.append((check(X, Y).holds, check(Y, Z).holds, check(X, Z).holds))
    ok = pair == (True, False, True, True) and triple == [(True, True, False)] * 2
    ok = ok and time.perf_counter() - t0 < 1
    assert report(2, ok, f"(weak,sync,partial)={pair[:3]}, triple ~p pattern={triple[0]}", t0)


# -- 3 and 4 ---------------------------------------------------------------

def test_criteria_3_and_4_oracle_equivalence_and_hierarchy(report):
    t0 = time.perf_counter()
    seqs = shifted_L_star(4, 6, (0, 1, 2))
    mismatches, broken, pairs, partial_count = [], [], 0, 0
    for A in seqs:
        for B in seqs:
            pairs += 1
            brute = is_partially_synchronized_bruteforce(A, B).holds
            if is_partially_synchronized(A, B).holds != brute:
                mismatches.append((A, B))
            partial_count += brute
            if brute:
                if not is_weakly_synchronized(A, B).holds:
                    broken.append(("partial => weak", A, B))
            elif is_synchronized(A, B).holds:
                broken.append(("sync => partial", A, B))
    elapsed = time.perf_counter() - t0
    report(3, not mismatches and elapsed < 300,
           f"{pairs} ordered pairs over {len(seqs)} sequences, {partial_count} partially "
           f"synchronized, {len(mismatches)} mismatches", t0)
    report(4, not broken, f"{pairs} ordered pairs, {len(broken)} hierarchy violations", t0)
    assert not mismatches, mismatches[:5]
    assert not broken, broken[:5]
    assert elapsed < 300


# -- 5 ---------------------------------------------------------------------

def test_criterion_5_main_theorem(report):
    t0 = time.perf_counter()
    seqs = lstar_values_between(3, 1, 4)
    premise = {(A, B): is_partially_synchronized(A, B).holds for A in seqs for B in seqs}
    conv = {(A, C): convolve(A, C) for A in seqs for C in seqs}
    triples, bad = 0, []
    for (A, B), ok in premise.items():
        if not ok:
            continue
        for C in seqs:
            triples += 1
            AC, BC = conv[A, C], conv[B, C]
            fast = is_partially_synchronized(AC, BC).holds
            brute = is_partially_synchronized_bruteforce(AC, BC).holds
            if not (fast and brute):
                bad.append((A, B, C))
    ok = not bad
    report(5, ok, f"{len(seqs)} sequences, {triples} triples with A ~p B, {len(bad)} violations", t0)
    assert ok, bad[:5]


# -- 6 ---------------------------------------------------------------------

def test_criterion_6_closure(report):
    t0 = time.perf_counter()
    pairs = partial_pairs(3, 4)
    bad, checks = [], 0
    for A, B in pairs:
        combos = {}
        for u, v in itertools.product(GRID, repeat=2):
            X = lin_comb([u, v], [A, B])
            if classify(X) not in (SeqClass.L_STAR, SeqClass.L_ZERO):
                bad.append(("logconcave", A, B, u, v))
            combos.setdefault(X, (u, v))
        # the relation is symmetric, so unordered combination pairs suffice
        reps = list(combos.items())
        for i, (X, uv) in enumerate(reps):
            for Y, uv2 in reps[i:]:
                checks += 1
                if not is_partially_synchronized(X, Y).holds:
                    bad.append(("partial", A, B, uv, uv2))
    # spot-check the library entry point on the same data
    for A, B in pairs[::40]:
        for u, v in itertools.product(GRID, repeat=2):
            if not verify_lincomb_partial([A, B], [u, v], [v, u]).holds:
                bad.append(("verify_lincomb_partial", A, B, u, v))
    ok = not bad
    report(6, ok, f"{len(pairs)} ~p pairs, grid 5x5, {checks} distinct combination pairs, "
                  f"{len(bad)} violations", t0)
    assert ok, bad[:5]


# -- 7 ---------------------------------------------------------------------

def _random_lstar(rng, max_len=4, max_value=20):
    while True:
        length = rng.randint(1, max_len)
        A = from_terms(0, [rng.randint(1, max_value) for _ in range(length)])
        if classify(A) is SeqClass.L_STAR:
            return A


def test_criterion_7_proof_trace_identity(report):
    t0 = time.perf_counter()
    rng = random.Random(20240601)
    bad, partial_triples, pairs = [], 0, 0
    for _ in range(1000):
        A, B, C = (_random_lstar(rng) for _ in range(3))
        rep = proof_trace_window(A, B, C)
        if not rep.holds:
            bad.append((A, B, C, rep.detail))
            continue
        pairs += rep.detail["pairs"]
        partial_triples += rep.detail["partial_premise"]
    ok = not bad
    report(7, ok, f"1000 random triples, {pairs} (m,n) positions, {partial_triples} with A ~p B "
                  f"(g >= 0 checked there), {len(bad)} failures", t0)
    assert ok, bad[:3]
    assert partial_triples > 0


# -- 8 ---------------------------------------------------------------------

def test_criterion_8_triangle_transport(report):
    t0 = time.perf_counter()
    pairs = partial_pairs(3, 4)
    bad, quads = [], 0
    for A, B in pairs:
        rep = check_triangle_transport(A, B, window=3)
        if not rep.holds:
            bad.append((A, B, rep.detail))
        else:
            quads += rep.detail["quadruples"]
    ok = not bad
    report(8, ok, f"{len(pairs)} ~p pairs, {quads} quadruples, {len(bad)} violations", t0)
    assert ok, bad[:3]


# -- 9 ---------------------------------------------------------------------

def test_criterion_9_search_determinism(report):
    t0 = time.perf_counter()
    cfg = SearchConfig(max_len=3, max_value=15)
    one = find_counterexample(ConjectureId.PARTIAL_TRANSITIVITY, cfg, workers=1)
    eight = find_counterexample(ConjectureId.PARTIAL_TRANSITIVITY, cfg, workers=8)
    ok = one is not None and one == eight and verify_witness(one)
    shown = " ; ".join(str(X) for X in one.sequences) if one else "none"
    report(9, ok, f"witness {shown}, identical across 1 and 8 workers, verified={ok}", t0)
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
