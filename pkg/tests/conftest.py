import sys
import itertools
from functools import lru_cache

import pytest

from lcseq.search import SearchConfig, lstar_candidates
from lcseq.sequence import Sequence, classify, from_terms, parse_sequence


def S(text):
    return parse_sequence(text)


@lru_cache(maxsize=None)
def small_L(max_len=3, max_value=4):
    """Every sequence in L (zero sequence included) from integer tuples of
    length <= max_len with entries in [0, max_value], canonicalized."""
    out = {}
    for length in range(1, max_len + 1):
        for t in itertools.product(range(max_value + 1), repeat=length):
            A = from_terms(0, t)
            if classify(A).in_L:
                out.setdefault(A, None)
    return tuple(out)


@lru_cache(maxsize=None)
def small_L_star(max_len=3, max_value=4):
    return tuple(lstar_candidates(SearchConfig(max_len, max_value)))


@lru_cache(maxsize=None)
def shifted_L_star(max_len=4, max_value=6, offsets=(0, 1, 2)):
    """L* shapes (terms in [1, max_value]) placed at each of ``offsets``."""
    shapes = {A.terms for A in small_L_star(max_len, max_value)}
    return tuple(Sequence(o, t) for t in sorted(shapes) for o in offsets)


@pytest.fixture(scope="session")
def pairs_L():
    seqs = small_L()
    return [(A, B) for A in seqs for B in seqs]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
