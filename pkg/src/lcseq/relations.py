"""Synchronized, partially synchronized and weakly synchronized pairs.

All three relations are defined on log-concave sequences without internal
zeros.  Each predicate quantifies over every integer index; because the
sequences are finitely supported the quantifier reduces exactly to a finite
window around the combined support, which is what the checks scan.

Partial synchronicity has two decision procedures: the definitional scan
(:func:`is_partially_synchronized_bruteforce`) and the head/tail reduction
(:func:`is_partially_synchronized`).  Tests hold them equal.
"""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import NotInL, WindowTooLarge
from .sequence import Sequence, classify, format_rational, term

__all__ = [
    "RelationKind",
    "Violation",
    "RelationReport",
    "f_pair",
    "is_synchronized",
    "is_weakly_synchronized",
    "is_partially_synchronized",
    "is_partially_synchronized_bruteforce",
    "relation",
    "holds",
    "max_window",
]

MAX_WINDOW_ENV = "LCSEQ_MAX_WINDOW"


class RelationKind(enum.Enum):
    SYNC = "sync"
    PARTIAL = "partial"
    WEAK = "weak"


@dataclass(frozen=True)
class Violation:
    """A failing instance of a relation's defining inequality.

    ``lhs`` is the side that should dominate, so a violation has
    ``lhs < rhs``.  Sync and weak checks are indexed by a single ``k``,
    stored as ``m == n == k``.  ``condition`` names the failing clause:
    ``"left"``/``"right"`` for the two sync inequalities, ``"i"``, ``"ii"``
    or ``"iii"`` for the head/tail partial check.
    """

    m: int
    n: int
    lhs: Fraction
    rhs: Fraction
    condition: Optional[str] = None

    @property
    def margin(self) -> Fraction:
        """How far the dominated side overshoots (positive for a violation)."""
        return self.rhs - self.lhs

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "margin": format_rational(self.margin),
            "condition": self.condition,
        }


@dataclass(frozen=True)
class RelationReport:
    kind: RelationKind
    holds: bool
    violation: Optional[Violation] = None

    def __post_init__(self):
        if self.holds == (self.violation is not None):
            raise ValueError("holds=False iff a violation is attached")

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "holds": self.holds,
            "violation": None if self.violation is None else self.violation.to_json(),
        }


def max_window() -> Optional[int]:
    """Cap on brute-force window width from ``LCSEQ_MAX_WINDOW`` (unset: none)."""
    raw = os.environ.get(MAX_WINDOW_ENV, "").strip()
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise WindowTooLarge(f"{MAX_WINDOW_ENV}={raw!r} is not an integer") from None


def _check_window(lo: int, hi: int) -> None:
    cap = max_window()
    if cap is not None and hi - lo + 1 > cap:
        raise WindowTooLarge(
            f"window [{lo}, {hi}] has {hi - lo + 1} indices, above {MAX_WINDOW_ENV}={cap}"
        )


def _require_L(*seqs: Sequence) -> None:
    for S in seqs:
        c = classify(S)
        if not c.in_L:
            raise NotInL(f"{S!r} is {c.value}; relations are defined on log-concave "
                         "sequences without internal zeros")


def _window(A: Sequence, B: Sequence, lo: int, hi: int):
    """Integer views of A and B on ``lo..hi`` plus the common denominator."""
    a, da = A.integral
    b, db = B.integral
    pa = [0] * (hi - lo + 1)
    pb = [0] * (hi - lo + 1)
    for i, v in enumerate(a):
        k = A.offset + i - lo
        if 0 <= k < len(pa):
            pa[k] = v
    for i, v in enumerate(b):
        k = B.offset + i - lo
        if 0 <= k < len(pb):
            pb[k] = v
    return pa, pb, da * db


def _span(A: Sequence, B: Sequence):
    """(min head, max tail) over the nonzero members of the pair."""
    nz = [S for S in (A, B) if not S.is_zero]
    return min(S.offset for S in nz), max(S.end - 1 for S in nz)


def f_pair(A: Sequence, B: Sequence, m: int, n: int) -> Fraction:
    """``a_m b_n + a_n b_m``; symmetric in ``m`` and ``n``."""
    return term(A, m) * term(B, n) + term(A, n) * term(B, m)


def is_synchronized(A: Sequence, B: Sequence, *, extra: int = 0) -> RelationReport:
    """Check ``a_{k-1}b_{k+1} <= a_k b_k`` and ``a_{k+1}b_{k-1} <= a_k b_k``."""
    _require_L(A, B)
    kind = RelationKind.SYNC
    if A.is_zero or B.is_zero:
        return RelationReport(kind, True)
    lo, hi = _span(A, B)
    lo, hi = lo - 1 - extra, hi + 1 + extra
    pa, pb, d = _window(A, B, lo - 1, hi + 1)
    for k in range(lo, hi + 1):
        i = k - lo + 1
        mid = pa[i] * pb[i]
        left = pa[i - 1] * pb[i + 1]
        if left > mid:
            return RelationReport(kind, False, Violation(k, k, Fraction(mid, d), Fraction(left, d), "left"))
        right = pa[i + 1] * pb[i - 1]
        if right > mid:
            return RelationReport(kind, False, Violation(k, k, Fraction(mid, d), Fraction(right, d), "right"))
    return RelationReport(kind, True)


def is_weakly_synchronized(A: Sequence, B: Sequence, *, extra: int = 0) -> RelationReport:
    """Check ``a_{k-1}b_{k+1} + a_{k+1}b_{k-1} <= 2 a_k b_k`` for every ``k``."""
    _require_L(A, B)
    kind = RelationKind.WEAK
    if A.is_zero or B.is_zero:
        return RelationReport(kind, True)
    lo, hi = _span(A, B)
    lo, hi = lo - 1 - extra, hi + 1 + extra
    pa, pb, d = _window(A, B, lo - 1, hi + 1)
    for k in range(lo, hi + 1):
        i = k - lo + 1
        lhs = 2 * pa[i] * pb[i]
        rhs = pa[i - 1] * pb[i + 1] + pa[i + 1] * pb[i - 1]
        if rhs > lhs:
            return RelationReport(kind, False, Violation(k, k, Fraction(lhs, d), Fraction(rhs, d)))
    return RelationReport(kind, True)


def _partial_step(pa, pb, lo, m, n):
    """``f(m, n)`` and ``f(m+1, n-1)`` on windowed integer views."""
    i, j = m - lo, n - lo
    lhs = pa[i] * pb[j] + pa[j] * pb[i]
    rhs = pa[i + 1] * pb[j - 1] + pa[j - 1] * pb[i + 1]
    return lhs, rhs


def is_partially_synchronized_bruteforce(A: Sequence, B: Sequence, *,
                                         extra: int = 0) -> RelationReport:
    """Definitional check of ``f(m, n) >= f(m+1, n-1)`` for all ``m >= n``.

    ``m`` and ``n`` range over ``[min head - 2, max tail + 2]`` (widened by
    ``extra``).  The first violation in order of ``(m - n, n)`` is reported.
    """
    _require_L(A, B)
    kind = RelationKind.PARTIAL
    if A.is_zero or B.is_zero:
        return RelationReport(kind, True)
    lo, hi = _span(A, B)
    lo, hi = lo - 2 - extra, hi + 2 + extra
    _check_window(lo, hi)
    pa, pb, d = _window(A, B, lo - 1, hi + 1)
    base = lo - 1
    for gap in range(hi - lo + 1):
        for n in range(lo, hi - gap + 1):
            lhs, rhs = _partial_step(pa, pb, base, n + gap, n)
            if rhs > lhs:
                return RelationReport(
                    kind, False, Violation(n + gap, n, Fraction(lhs, d), Fraction(rhs, d)))
    return RelationReport(kind, True)


def is_partially_synchronized(A: Sequence, B: Sequence) -> RelationReport:
    """Head/tail reduction of partial synchronicity.

    For nonzero A, B the relation holds iff the heads differ by at most one,
    the tails differ by at most one, and the step inequality holds on the
    rectangle ``max heads <= m <= max tails - 1``,
    ``min heads + 1 <= n <= min tails``.  A failing head or tail clause is
    reported with the index pair that exhibits it.  The zero sequence is
    partially synchronized with everything: every ``f`` value vanishes.
    """
    _require_L(A, B)
    kind = RelationKind.PARTIAL
    if A.is_zero or B.is_zero:
        return RelationReport(kind, True)
    hA, tA = A.offset, A.end - 1
    hB, tB = B.offset, B.end - 1
    mh, Mh = min(hA, hB), max(hA, hB)
    mt, Mt = min(tA, tB), max(tA, tB)
    lo, hi = mh - 1, Mt + 1
    pa, pb, d = _window(A, B, lo, hi)

    def fail(m, n, cond):
        lhs, rhs = _partial_step(pa, pb, lo, m, n)
        return RelationReport(kind, False, Violation(m, n, Fraction(lhs, d), Fraction(rhs, d), cond))

    if Mh - mh >= 2:
        return fail(Mh - 1, mh + 1, "i")
    if Mt - mt >= 2:
        return fail(Mt - 1, mt + 1, "ii")
    n_lo, n_hi = mh + 1, mt
    m_lo, m_hi = Mh, Mt - 1
    for gap in range(m_hi - n_lo + 1):
        for n in range(max(n_lo, m_lo - gap), min(n_hi, m_hi - gap) + 1):
            lhs, rhs = _partial_step(pa, pb, lo, n + gap, n)
            if rhs > lhs:
                return RelationReport(
                    kind, False, Violation(n + gap, n, Fraction(lhs, d), Fraction(rhs, d), "iii"))
    return RelationReport(kind, True)


_CHECKS = {
    RelationKind.SYNC: is_synchronized,
    RelationKind.PARTIAL: is_partially_synchronized,
    RelationKind.WEAK: is_weakly_synchronized,
}

_ORACLES = {
    RelationKind.SYNC: is_synchronized,
    RelationKind.PARTIAL: is_partially_synchronized_bruteforce,
    RelationKind.WEAK: is_weakly_synchronized,
}


def relation(kind: RelationKind, A: Sequence, B: Sequence, *, oracle: bool = False) -> RelationReport:
    """Dispatch on ``kind``; ``oracle=True`` selects the definitional scan."""
    kind = RelationKind(kind)
    return (_ORACLES if oracle else _CHECKS)[kind](A, B)


def holds(kind: RelationKind, A: Sequence, B: Sequence) -> bool:
    return relation(kind, A, B).holds
