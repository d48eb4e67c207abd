"""Counterexample search over bounded integer sequences.

A conjecture is an implication between relations on a tuple of sequences
from the class of nonzero log-concave sequences without internal zeros.
:func:`find_counterexample` looks for a tuple where the premise holds and
the conclusion fails, and returns it as a :class:`Witness`.

Exhaustive mode walks candidate tuples in canonical order (lexicographic in
candidate index, candidates ordered as in :func:`enumerate_candidates`) and
returns the first witness.  Random mode draws tuples from a seeded stream
split into fixed blocks; block ``b`` depends only on ``(seed, b)``.  Either
way, work is handed out in rounds of consecutive units and the merge keeps
the smallest witness, so the answer does not depend on the worker count.
"""
from __future__ import annotations

import enum
import itertools
import json
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

from .relations import (
    RelationKind,
    is_partially_synchronized,
    is_partially_synchronized_bruteforce,
    is_synchronized,
    is_weakly_synchronized,
)
from .sequence import (
    Sequence,
    SeqClass,
    classify,
    convolve,
    format_rational,
    from_terms,
    sequence_from_json,
    sequence_to_json,
)
from .theorems import TheoremId, TheoremReport

__all__ = [
    "ConjectureId",
    "SearchMode",
    "SearchConfig",
    "Witness",
    "EXPECTED",
    "enumerate_candidates",
    "lstar_candidates",
    "find_counterexample",
    "make_witness",
    "random_tuples",
    "verify_witness",
    "minimize_witness",
    "verify_paper_example",
    "EXAMPLE_A",
    "EXAMPLE_B",
    "EXAMPLE_C",
]

BLOCK_SIZE = 256
RATIO_BOUND = 10


class ConjectureId(enum.Enum):
    WEAK_CONVOLUTION = "WeakConvolution"
    PARTIAL_CONVOLUTION = "PartialConvolution"
    SYNC_CONVOLUTION = "SyncConvolution"
    PARTIAL_TRANSITIVITY = "PartialTransitivity"
    WEAK_IMPLIES_PARTIAL = "WeakImpliesPartial"
    PARTIAL_IMPLIES_SYNC = "PartialImpliesSync"

    @classmethod
    def parse(cls, text: str) -> "ConjectureId":
        key = text.replace("-", "").replace("_", "").lower()
        for c in cls:
            if c.value.lower() == key:
                return c
        raise ValueError(f"unknown conjecture {text!r}; choose from "
                         + ", ".join(c.value for c in cls))


# True: no counterexample should exist.  False: refutable.
EXPECTED = {
    ConjectureId.WEAK_CONVOLUTION: False,
    ConjectureId.PARTIAL_CONVOLUTION: True,
    ConjectureId.SYNC_CONVOLUTION: True,
    ConjectureId.PARTIAL_TRANSITIVITY: False,
    ConjectureId.WEAK_IMPLIES_PARTIAL: False,
    ConjectureId.PARTIAL_IMPLIES_SYNC: False,
}


class SearchMode(enum.Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


@dataclass(frozen=True)
class SearchConfig:
    max_len: int = 3
    max_value: int = 4
    mode: SearchMode = SearchMode.EXHAUSTIVE
    seed: int = 0
    budget: int = 10_000

    def __post_init__(self):
        object.__setattr__(self, "mode", SearchMode(self.mode))
        if self.max_len < 1 or self.max_value < 1:
            raise ValueError("max_len and max_value must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.budget < 0:
            raise ValueError("budget must be nonnegative")


# ---------------------------------------------------------------------------
# conjecture table
# ---------------------------------------------------------------------------

_FAST = {
    RelationKind.SYNC: is_synchronized,
    RelationKind.WEAK: is_weakly_synchronized,
    RelationKind.PARTIAL: is_partially_synchronized,
}
_ORACLE = {
    RelationKind.SYNC: is_synchronized,
    RelationKind.WEAK: is_weakly_synchronized,
    RelationKind.PARTIAL: is_partially_synchronized_bruteforce,
}


@dataclass(frozen=True)
class _Spec:
    arity: int
    premises: tuple          # ((kind, i, j), ...) on the raw sequences
    conclusion: RelationKind
    convolve_last: bool      # conclusion on (A*C, B*C) instead of (seqs[i], seqs[j])
    pair: tuple = (0, 1)

    def conclusion_pair(self, seqs):
        if self.convolve_last:
            C = seqs[2]
            return convolve(seqs[0], C), convolve(seqs[1], C), "A*C,B*C"
        i, j = self.pair
        return seqs[i], seqs[j], "ABC"[i] + "," + "ABC"[j]


_SPECS = {
    ConjectureId.WEAK_CONVOLUTION: _Spec(3, ((RelationKind.WEAK, 0, 1),), RelationKind.WEAK, True),
    ConjectureId.PARTIAL_CONVOLUTION: _Spec(3, ((RelationKind.PARTIAL, 0, 1),), RelationKind.PARTIAL, True),
    ConjectureId.SYNC_CONVOLUTION: _Spec(3, ((RelationKind.SYNC, 0, 1),), RelationKind.SYNC, True),
    ConjectureId.PARTIAL_TRANSITIVITY: _Spec(
        3, ((RelationKind.PARTIAL, 0, 1), (RelationKind.PARTIAL, 1, 2)),
        RelationKind.PARTIAL, False, (0, 2)),
    ConjectureId.WEAK_IMPLIES_PARTIAL: _Spec(2, ((RelationKind.WEAK, 0, 1),), RelationKind.PARTIAL, False),
    ConjectureId.PARTIAL_IMPLIES_SYNC: _Spec(2, ((RelationKind.PARTIAL, 0, 1),), RelationKind.SYNC, False),
}


@dataclass(frozen=True)
class Witness:
    """A tuple where a conjecture's premise holds and its conclusion fails.

    ``violated_at`` records the relation, the pair it was evaluated on and
    the failing indices; ``lhs < rhs`` are the two sides of the failing
    inequality as the definitional check reports them.
    """

    conjecture: ConjectureId
    sequences: tuple
    violated_at: dict
    lhs: Fraction
    rhs: Fraction

    @property
    def margin(self) -> Fraction:
        return self.rhs - self.lhs

    def to_json(self) -> dict:
        return {
            "conjecture": self.conjecture.value,
            "sequences": [sequence_to_json(S) for S in self.sequences],
            "violated_at": dict(self.violated_at),
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
        }

    @classmethod
    def from_json(cls, obj) -> "Witness":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(
            ConjectureId(obj["conjecture"]),
            tuple(sequence_from_json(s) for s in obj["sequences"]),
            dict(obj["violated_at"]),
            Fraction(obj["lhs"]),
            Fraction(obj["rhs"]),
        )


def make_witness(cid: ConjectureId, seqs) -> Witness:
    """Package ``seqs`` as a witness, taking the violation from the
    definitional check of the conclusion.  The premise is not checked here;
    :func:`verify_witness` does that."""
    cid = ConjectureId(cid)
    spec = _SPECS[cid]
    X, Y, label = spec.conclusion_pair(seqs)
    rep = _ORACLE[spec.conclusion](X, Y)
    if rep.holds:
        raise ValueError(f"the conclusion of {cid.value} holds for these sequences")
    v = rep.violation
    at = {"relation": spec.conclusion.value, "pair": label, "m": v.m, "n": v.n}
    if v.condition is not None:
        at["condition"] = v.condition
    return Witness(cid, tuple(seqs), at, v.lhs, v.rhs)


def verify_witness(w: Witness) -> bool:
    """Re-check a witness with the definitional relation checks.

    True iff every sequence is nonzero, log-concave without internal zeros,
    the premise holds, and the conclusion fails at exactly the stored
    indices with exactly the stored sides.
    """
    try:
        spec = _SPECS[w.conjecture]
        seqs = tuple(w.sequences)
        if len(seqs) != spec.arity:
            return False
        if any(classify(S) is not SeqClass.L_STAR for S in seqs):
            return False
        for kind, i, j in spec.premises:
            if not _ORACLE[kind](seqs[i], seqs[j]).holds:
                return False
        expected = make_witness(w.conjecture, seqs)
    except Exception:
        return False
    return (expected.violated_at == dict(w.violated_at)
            and expected.lhs == w.lhs and expected.rhs == w.rhs)


# ---------------------------------------------------------------------------
# candidates
# ---------------------------------------------------------------------------

def enumerate_candidates(config: SearchConfig) -> Iterator[Sequence]:
    """Every integer sequence from a length ``<= max_len`` tuple at offset 0
    with terms in ``[0, max_value]``, canonicalized, first occurrence only.

    Order is by tuple length, then lexicographic in the terms.  Leading zeros
    in a tuple become a positive offset after canonicalization.
    """
    seen = set()
    for length in range(1, config.max_len + 1):
        for terms in itertools.product(range(config.max_value + 1), repeat=length):
            S = from_terms(0, terms)
            if S not in seen:
                seen.add(S)
                yield S


@lru_cache(maxsize=16)
def _lstar_cached(max_len: int, max_value: int) -> tuple:
    cfg = SearchConfig(max_len, max_value)
    return tuple(S for S in enumerate_candidates(cfg) if classify(S) is SeqClass.L_STAR)


def lstar_candidates(config: SearchConfig) -> list:
    return list(_lstar_cached(config.max_len, config.max_value))


def _sample_sequence(rng: random.Random, max_len: int, max_value: int,
                     ratio_bound: int = RATIO_BOUND) -> Optional[Sequence]:
    """Draw an integer log-concave sequence, or None if it overflows.

    Consecutive ratios are fractions ``p/q`` with ``1 <= p, q <= ratio_bound``
    sorted decreasing, so the result is log-concave by construction and exact
    ties between ratios (where the relations are tight) come up often.  The
    primitive integer sequence is then multiplied by a random factor that
    keeps every term at most ``max_value``.
    """
    length = rng.randint(1, max_len)
    ratios = sorted((Fraction(rng.randint(1, ratio_bound), rng.randint(1, ratio_bound))
                     for _ in range(length - 1)), reverse=True)
    vals = [Fraction(1)]
    for r in ratios:
        vals.append(vals[-1] * r)
    den = math.lcm(*(v.denominator for v in vals))
    ints = [int(v * den) for v in vals]
    g = math.gcd(*ints)
    ints = [v // g for v in ints]
    top = max(ints)
    if top > max_value:
        return None
    k = rng.randint(1, max_value // top)
    return from_terms(0, [v * k for v in ints])


def _random_block(config: SearchConfig, arity: int, block: int) -> list:
    rng = random.Random(f"lcseq:{config.seed}:{block}")
    start = block * BLOCK_SIZE
    size = min(BLOCK_SIZE, config.budget - start)
    return [tuple(_sample_sequence(rng, config.max_len, config.max_value) for _ in range(arity))
            for _ in range(max(0, size))]


def random_tuples(config: SearchConfig, arity: int) -> Iterator[tuple]:
    """The replayable stream of tuples examined by random mode."""
    for b in range(_n_blocks(config)):
        yield from _random_block(config, arity, b)


def _n_blocks(config):
    return -(-config.budget // BLOCK_SIZE)


# ---------------------------------------------------------------------------
# scanning
# ---------------------------------------------------------------------------

def _premise_ok(spec, seqs, cache):
    for kind, i, j in spec.premises:
        key = (kind, seqs[i], seqs[j])
        ok = cache.get(key)
        if ok is None:
            ok = cache[key] = _FAST[kind](seqs[i], seqs[j]).holds
        if not ok:
            return False
    return True


def _fails(spec, seqs) -> bool:
    X, Y, _ = spec.conclusion_pair(seqs)
    return not _FAST[spec.conclusion](X, Y).holds


def _scan_exhaustive_unit(cid: ConjectureId, max_len: int, max_value: int, i: int):
    """First witness, as an index tuple, whose leading candidate index is ``i``."""
    spec = _SPECS[cid]
    cands = _lstar_cached(max_len, max_value)
    # premises on (A, B) alone prune the whole inner loop over C
    outer = tuple(p for p in spec.premises if max(p[1], p[2]) < 2)
    inner = tuple(p for p in spec.premises if max(p[1], p[2]) >= 2)
    A = cands[i]
    for j, B in enumerate(cands):
        pair = (A, B)
        if not all(_FAST[kind](pair[x], pair[y]).holds for kind, x, y in outer):
            continue
        if spec.arity == 2:
            if _fails(spec, pair):
                return (i, j)
            continue
        for k, C in enumerate(cands):
            seqs = (A, B, C)
            if all(_FAST[kind](seqs[x], seqs[y]).holds for kind, x, y in inner) \
                    and _fails(spec, seqs):
                return (i, j, k)
    return None


def _scan_random_unit(cid: ConjectureId, config: SearchConfig, block: int):
    spec = _SPECS[cid]
    cache = {}
    for pos, seqs in enumerate(_random_block(config, spec.arity, block)):
        if any(S is None or classify(S) is not SeqClass.L_STAR for S in seqs):
            continue
        if _premise_ok(spec, seqs, cache) and _fails(spec, seqs):
            return (block, pos)
    return None


def _scan_units(fn, args_for, units, per_unit_key, workers: int):
    """Scan ``units`` in rounds; return the smallest hit of the first round
    that has one."""
    units = list(units)
    if workers <= 1:
        for u in units:
            hit = fn(*args_for(u))
            if hit is not None:
                return hit
        return None
    round_size = workers * 4
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for start in range(0, len(units), round_size):
            chunk = units[start:start + round_size]
            # worker w takes chunk[w::workers] in ascending order
            futures = [pool.submit(_run_slice, fn, [args_for(u) for u in chunk[w::workers]])
                       for w in range(workers)]
            hits = [f.result() for f in futures]
            hits = [h for h in hits if h is not None]
            if hits:
                return min(hits, key=per_unit_key)
    return None


def _run_slice(fn, arg_list):
    for args in arg_list:
        hit = fn(*args)
        if hit is not None:
            return hit
    return None


def find_counterexample(conjecture, config: SearchConfig, *, workers: int = 1,
                        minimize: bool = False) -> Optional[Witness]:
    """Search for a witness against ``conjecture`` within ``config``.

    Exhaustive mode returns the first witness in canonical order (or None
    after the full scan); random mode examines ``config.budget`` tuples from
    the seeded stream and returns the first witness in stream order.
    ``workers > 1`` fans the scan out to processes without changing the
    result.  ``minimize`` applies :func:`minimize_witness`.
    """
    cid = ConjectureId(conjecture) if not isinstance(conjecture, ConjectureId) else conjecture
    spec = _SPECS[cid]
    if config.mode is SearchMode.EXHAUSTIVE:
        cands = _lstar_cached(config.max_len, config.max_value)
        hit = _scan_units(_scan_exhaustive_unit,
                          lambda i: (cid, config.max_len, config.max_value, i),
                          range(len(cands)), lambda h: h, workers)
        if hit is None:
            return None
        seqs = tuple(cands[i] for i in hit)
    else:
        hit = _scan_units(_scan_random_unit, lambda b: (cid, config, b),
                          range(_n_blocks(config)), lambda h: h, workers)
        if hit is None:
            return None
        block, pos = hit
        seqs = _random_block(config, spec.arity, block)[pos]
    w = make_witness(cid, seqs)
    return minimize_witness(w) if minimize else w


# ---------------------------------------------------------------------------
# shrinking
# ---------------------------------------------------------------------------

def _is_witness_tuple(cid, seqs) -> bool:
    spec = _SPECS[cid]
    if any(classify(S) is not SeqClass.L_STAR for S in seqs):
        return False
    return _premise_ok(spec, seqs, {}) and _fails(spec, seqs)


def minimize_witness(w: Witness, max_passes: int = 20) -> Witness:
    """Greedy, deterministic shrink of a witness.

    Repeatedly tries, sequence by sequence, dropping the last then the first
    term, and lowering each term to the smallest value that keeps the tuple
    a witness.  Stops when a full pass changes nothing.
    """
    cid = w.conjecture
    seqs = list(w.sequences)
    for _ in range(max_passes):
        changed = False
        for s in range(len(seqs)):
            for drop in ("last", "first"):
                S = seqs[s]
                if len(S) > 1:
                    terms = S.terms[:-1] if drop == "last" else S.terms[1:]
                    cand = seqs[:s] + [from_terms(S.offset, terms)] + seqs[s + 1:]
                    if _is_witness_tuple(cid, cand):
                        seqs, changed = cand, True
            for p in range(len(seqs[s])):
                cur = seqs[s].terms[p]
                for val in range(1, int(cur)):
                    terms = list(seqs[s].terms)
                    terms[p] = Fraction(val)
                    cand = seqs[:s] + [from_terms(seqs[s].offset, terms)] + seqs[s + 1:]
                    if _is_witness_tuple(cid, cand):
                        seqs, changed = cand, True
                        break
        if not changed:
            break
    return make_witness(cid, tuple(seqs))


# ---------------------------------------------------------------------------
# the worked counterexample to weak-synchronicity preservation
# ---------------------------------------------------------------------------

EXAMPLE_A = from_terms(0, [1, 20, 200, 1800])
EXAMPLE_B = from_terms(0, [1, 6, 30, 60])
EXAMPLE_C = from_terms(0, [40, 60, 10, 1])
EXAMPLE_AC = from_terms(0, [40, 860, 9210, 84201, 110020, 18200, 1800])
EXAMPLE_BC = from_terms(0, [40, 300, 1570, 4261, 3906, 630, 60])
EXAMPLE_K = 2
EXAMPLE_MARGIN = Fraction(5360)


def verify_paper_example(A: Sequence = EXAMPLE_A, B: Sequence = EXAMPLE_B,
                         C: Sequence = EXAMPLE_C) -> TheoremReport:
    """Bit-exact regression of the counterexample to weak-synchronicity
    preservation under convolution.

    Holds iff A, B, C are nonzero log-concave without internal zeros,
    A ~w B, the two convolutions are exactly the recorded ones (in either
    order), and weak synchronicity of (A*C, B*C) first fails at k = 2 by
    exactly 5360.
    """
    detail = {}
    failed = []
    classes = [classify(S) for S in (A, B, C)]
    detail["classes"] = classes
    if any(c is not SeqClass.L_STAR for c in classes):
        failed.append("inputs not all in L*")
    AC, BC = convolve(A, C), convolve(B, C)
    detail.update({"A*C": AC, "B*C": BC})
    if {AC, BC} != {EXAMPLE_AC, EXAMPLE_BC}:
        failed.append("convolutions differ from the recorded values")
    if all(c.in_L for c in classes):
        premise = is_weakly_synchronized(A, B)
        detail["A~wB"] = premise.holds
        if not premise.holds:
            failed.append("A, B not weakly synchronized")
        rep = is_weakly_synchronized(AC, BC)
        detail["conclusion"] = rep
        if rep.holds:
            failed.append("A*C, B*C are weakly synchronized")
        else:
            v = rep.violation
            detail.update({"k": v.m, "margin": v.margin})
            if v.m != EXAMPLE_K or v.margin != EXAMPLE_MARGIN:
                failed.append("violation index or margin differs")
    if failed:
        detail["failed"] = failed
    return TheoremReport(TheoremId.WORKED_EXAMPLE, not failed, detail)
