"""Executable checks of the structural results about partial synchronicity.

Each verifier takes concrete sequences, checks the hypothesis of the result
(raising :class:`~lcseq.errors.PremiseFails` when it does not apply) and then
evaluates the conclusion exactly.  A failed conclusion comes back as a
:class:`TheoremReport` with ``holds=False`` and the offending indices and
values in ``detail``.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import LengthMismatch, NotInL, PremiseFails
from .relations import (
    RelationReport,
    _check_window,
    f_pair,
    is_partially_synchronized,
    is_partially_synchronized_bruteforce,
    is_synchronized,
    is_weakly_synchronized,
)
from .sequence import (
    Sequence,
    as_rational,
    classify,
    convolve,
    format_rational,
    format_sequence,
    sequence_to_json,
    lin_comb,
    scale,
    add,
)

__all__ = [
    "TheoremId",
    "TheoremReport",
    "check_hierarchy",
    "check_triangle_transport",
    "verify_lincomb_logconcave",
    "verify_lincomb_partial",
    "verify_convolution_preservation",
    "g_value",
    "proof_trace",
    "proof_trace_window",
]


class TheoremId(enum.Enum):
    HIERARCHY = "Hierarchy"
    TRIANGLE_TRANSPORT = "TriangleTransport"
    LINCOMB_LOGCONCAVE = "LinCombLogConcave"
    LINCOMB_PARTIAL = "LinCombPartial"
    CONVOLUTION_PRESERVATION = "ConvolutionPreservation"
    PROOF_TRACE = "ProofTrace"
    WORKED_EXAMPLE = "WorkedExample"


def _jsonable(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, Sequence):
        return sequence_to_json(x)
    if isinstance(x, (RelationReport,)):
        return x.to_json()
    if isinstance(x, enum.Enum):
        return x.value
    if isinstance(x, dict):
        return {str(_jsonable(k)): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: TheoremId
    holds: bool
    detail: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.holds and not self.detail:
            raise ValueError("a failing report must carry detail")

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        return {"theorem": self.theorem_id.value, "holds": self.holds,
                "detail": _jsonable(self.detail)}


def _require_L(*seqs):
    for S in seqs:
        if not classify(S).in_L:
            raise NotInL(f"{S!r} is {classify(S).value}")


def _require_L_star(*seqs):
    _require_L(*seqs)
    for S in seqs:
        if S.is_zero:
            raise PremiseFails("the zero sequence is excluded; inputs must be nonzero")


def _require_partial(A, B):
    rep = is_partially_synchronized(A, B)
    if not rep.holds:
        v = rep.violation
        raise PremiseFails(
            f"{format_sequence(A)} and {format_sequence(B)} are not partially synchronized "
            f"(f({v.m},{v.n}) = {v.lhs} < f({v.m + 1},{v.n - 1}) = {v.rhs})")


def _nonneg(*xs):
    out = []
    for x in xs:
        x = as_rational(x)
        if x < 0:
            raise ValueError(f"coefficient {x} is negative")
        out.append(x)
    return out


# ---------------------------------------------------------------------------


def check_hierarchy(A: Sequence, B: Sequence) -> TheoremReport:
    """Sync implies partial implies weak, evaluated for one pair.

    Uses the definitional partial check so the result does not lean on the
    head/tail reduction.
    """
    sync = is_synchronized(A, B)
    partial = is_partially_synchronized_bruteforce(A, B)
    weak = is_weakly_synchronized(A, B)
    detail = {"sync": sync, "partial": partial, "weak": weak}
    broken = []
    if sync.holds and not partial.holds:
        broken.append("sync => partial")
    if partial.holds and not weak.holds:
        broken.append("partial => weak")
    if broken:
        detail["broken"] = broken
    return TheoremReport(TheoremId.HIERARCHY, not broken, detail)


def check_triangle_transport(A: Sequence, B: Sequence, window: int = 3) -> TheoremReport:
    """Given partial synchronicity, ``f(a,b) >= f(c,d)`` whenever ``a+b == c+d``
    and ``|a-b| < |c-d|``.

    Every quadruple in ``[-window, max tail + window]`` is scanned; the first
    violation in lexicographic ``(a, b, c, d)`` order is reported.
    """
    _require_L(A, B)
    _require_partial(A, B)
    tails = [S.end - 1 for S in (A, B) if not S.is_zero]
    lo, hi = -window, (max(tails) if tails else 0) + window
    _check_window(lo, hi)
    idx = range(lo, hi + 1)
    F = {(x, y): f_pair(A, B, x, y) for x in idx for y in idx}
    checked = 0
    for a, b, c in itertools.product(idx, repeat=3):
        d = a + b - c
        if not lo <= d <= hi or abs(a - b) >= abs(c - d):
            continue
        checked += 1
        if F[a, b] < F[c, d]:
            return TheoremReport(TheoremId.TRIANGLE_TRANSPORT, False, {
                "a": a, "b": b, "c": c, "d": d, "f_ab": F[a, b], "f_cd": F[c, d]})
    return TheoremReport(TheoremId.TRIANGLE_TRANSPORT, True,
                         {"window": [lo, hi], "quadruples": checked})


def verify_lincomb_logconcave(A: Sequence, B: Sequence, u, v) -> TheoremReport:
    """``u*A + v*B`` stays log-concave without internal zeros when A ~p B."""
    u, v = _nonneg(u, v)
    _require_L(A, B)
    _require_partial(A, B)
    S = add(scale(u, A), scale(v, B))
    cls = classify(S)
    detail = {"combination": S, "class": cls}
    return TheoremReport(TheoremId.LINCOMB_LOGCONCAVE, cls.in_L, detail)


def verify_lincomb_partial(seqs, u, v) -> TheoremReport:
    """For pairwise partially synchronized ``seqs``,
    ``sum(u_i A_i) ~p sum(v_i A_i)``."""
    seqs = list(seqs)
    if not len(seqs) == len(u) == len(v):
        raise LengthMismatch(f"{len(seqs)} sequences, {len(u)} u-coefficients, {len(v)} v-coefficients")
    u, v = _nonneg(*u), _nonneg(*v)
    _require_L(*seqs)
    for X, Y in itertools.combinations(seqs, 2):
        _require_partial(X, Y)
    U, V = lin_comb(u, seqs), lin_comb(v, seqs)
    detail = {"u_combination": U, "v_combination": V}
    for S in (U, V):
        if not classify(S).in_L:
            detail["not_in_L"] = S
            return TheoremReport(TheoremId.LINCOMB_PARTIAL, False, detail)
    rep = is_partially_synchronized(U, V)
    detail["relation"] = rep
    return TheoremReport(TheoremId.LINCOMB_PARTIAL, rep.holds, detail)


def verify_convolution_preservation(A: Sequence, B: Sequence, C: Sequence) -> TheoremReport:
    """If A ~p B then A*C ~p B*C, for nonzero A, B, C in the class."""
    _require_L_star(A, B, C)
    _require_partial(A, B)
    AC, BC = convolve(A, C), convolve(B, C)
    rep = is_partially_synchronized(AC, BC)
    return TheoremReport(TheoremId.CONVOLUTION_PRESERVATION, rep.holds,
                         {"A*C": AC, "B*C": BC, "relation": rep})


# ---------------------------------------------------------------------------
# the g(k, l) decomposition behind convolution preservation
# ---------------------------------------------------------------------------


def g_value(A: Sequence, B: Sequence, m: int, n: int, k: int, l: int) -> Fraction:
    """``f(m-k, n-l) - f(m+1-l, n-1-k)`` for the pair (A, B).  May be negative."""
    return f_pair(A, B, m - k, n - l) - f_pair(A, B, m + 1 - l, n - 1 - k)


class _IntPair:
    """Zero-extended integer views of (A, B) over a fixed index range."""

    def __init__(self, A, B, lo, hi):
        a, da = A.integral
        b, db = B.integral
        self.lo = lo
        self.den = da * db
        self.pa = [0] * (hi - lo + 1)
        self.pb = [0] * (hi - lo + 1)
        for S, vals, dst in ((A, a, self.pa), (B, b, self.pb)):
            for i, x in enumerate(vals):
                dst[S.offset + i - lo] = x

    def f(self, x, y):
        x -= self.lo
        y -= self.lo
        pa, pb = self.pa, self.pb
        return pa[x] * pb[y] + pa[y] * pb[x]

    def g(self, m, n, k, l):
        return self.f(m - k, n - l) - self.f(m + 1 - l, n - 1 - k)


class _Tracer:
    """Shared state for proof-trace checks on one triple (A, B, C)."""

    def __init__(self, A, B, C, ms, ns):
        self.c, self.dc = C.integral
        self.hC = C.offset
        self.ks = range(C.offset - 2, C.end + 2)
        self.partial = is_partially_synchronized(A, B).holds
        lo = min(min(ns) - 2 - self.ks[-1], A.offset, B.offset)
        hi = max(max(ms) + 2 - self.ks[0], A.end, B.end)
        self.P = _IntPair(A, B, lo, hi)
        AC, BC = convolve(A, C), convolve(B, C)
        lo2 = min(min(ns) - 1, AC.offset, BC.offset)
        hi2 = max(max(ms) + 1, AC.end, BC.end)
        self.Q = _IntPair(AC, BC, lo2, hi2)

    def check(self, m, n):
        """Exact checks at one (m, n); a failure dict or None."""
        P, c, hC = self.P, self.c, self.hC
        total = 0
        for i, ck in enumerate(c):
            if ck:
                for j, cl in enumerate(c):
                    total += P.g(m, n, hC + i, hC + j) * ck * cl
        double_sum = Fraction(total, P.den * self.dc * self.dc)
        direct = Fraction(self.Q.f(m, n) - self.Q.f(m + 1, n - 1), self.Q.den)
        if double_sum != direct:
            return {"m": m, "n": n, "failed": "decomposition",
                    "double_sum": double_sum, "direct_difference": direct}
        if self.partial and double_sum < 0:
            return {"m": m, "n": n, "failed": "nonnegativity", "double_sum": double_sum}
        for k in self.ks:
            for l in self.ks:
                gkl = P.g(m, n, k, l)
                swap = P.g(m, n, l - 1, k + 1)
                if gkl + swap != 0:
                    return {"m": m, "n": n, "k": k, "l": l, "failed": "antisymmetry",
                            "g_kl": Fraction(gkl, P.den), "g_swap": Fraction(swap, P.den)}
                if self.partial and k >= l and gkl < 0:
                    return {"m": m, "n": n, "k": k, "l": l, "failed": "g_nonnegative",
                            "g_kl": Fraction(gkl, P.den)}
        return None


def proof_trace(A: Sequence, B: Sequence, C: Sequence, m: int, n: int) -> TheoremReport:
    """Check the ``g(k, l)`` decomposition of the convolution step inequality.

    At the given ``m >= n`` this verifies

    * ``sum_{k,l} g(k,l) c_k c_l`` equals
      ``f(A*C, B*C; m, n) - f(A*C, B*C; m+1, n-1)`` exactly (an identity,
      true for any triple);
    * ``g(k, l) + g(l-1, k+1) == 0`` for ``k, l`` within two of C's support;
    * when A ~p B, the double sum is nonnegative and ``g(k, l) >= 0`` for
      ``k >= l`` on the same range.
    """
    _require_L_star(A, B, C)
    if m < n:
        raise PremiseFails(f"need m >= n, got m={m}, n={n}")
    tr = _Tracer(A, B, C, [m], [n])
    bad = tr.check(m, n)
    detail = bad or {"m": m, "n": n, "partial_premise": tr.partial}
    return TheoremReport(TheoremId.PROOF_TRACE, bad is None, detail)


def proof_trace_window(A: Sequence, B: Sequence, C: Sequence) -> TheoremReport:
    """:func:`proof_trace` at every ``m >= n`` within two indices of the
    support of ``A*C`` and ``B*C``; stops at the first failure."""
    _require_L_star(A, B, C)
    lo = A.offset + C.offset - 2
    lo = min(lo, B.offset + C.offset - 2)
    hi = max(A.end, B.end) + C.end - 2 + 2
    _check_window(lo, hi)
    idx = range(lo, hi + 1)
    tr = _Tracer(A, B, C, idx, idx)
    count = 0
    for n in idx:
        for m in range(n, hi + 1):
            bad = tr.check(m, n)
            if bad is not None:
                return TheoremReport(TheoremId.PROOF_TRACE, False, bad)
            count += 1
    return TheoremReport(TheoremId.PROOF_TRACE, True,
                         {"window": [lo, hi], "pairs": count, "partial_premise": tr.partial})
