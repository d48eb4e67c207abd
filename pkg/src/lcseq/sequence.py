"""Finitely supported nonnegative sequences with exact rational terms.

A :class:`Sequence` stands for the doubly infinite sequence that agrees with
its stored terms on ``offset .. offset+len-1`` and is zero everywhere else.
The stored form is canonical: outer zeros are trimmed and the zero sequence
is the unique sequence with no terms, so equality is structural.

    >>> A = from_terms(0, [1, 20, 200, 1800])
    >>> C = from_terms(0, [40, 60, 10, 1])
    >>> format_sequence(convolve(A, C))
    '40,860,9210,84201,110020,18200,1800'
"""
from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence as _Seq

from .errors import LengthMismatch, NegativeHead, NegativeTerm, ParseError, ZeroSequenceError

Rational = Fraction

__all__ = [
    "Rational",
    "Sequence",
    "SeqClass",
    "ZERO",
    "as_rational",
    "from_terms",
    "term",
    "head_index",
    "tail_index",
    "is_log_concave",
    "has_internal_zeros",
    "classify",
    "in_L",
    "scale",
    "add",
    "convolve",
    "lin_comb",
    "parse_sequence",
    "format_sequence",
    "format_rational",
    "sequence_to_json",
    "sequence_from_json",
]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` / decimal strings to a Fraction.

    Floats are refused: a binary float is rarely the number the caller meant.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not sequence terms")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not an exact rational: {x!r}") from exc
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


@dataclass(frozen=True)
class Sequence:
    """Canonical finitely supported sequence of nonnegative rationals.

    Build instances with :func:`from_terms`; the constructor only accepts
    data that is already canonical.
    """

    offset: int = 0
    terms: tuple = field(default=())

    def __post_init__(self):
        if not self.terms:
            if self.offset != 0:
                raise ValueError("the zero sequence is stored with offset 0")
            return
        if self.offset < 0:
            raise NegativeHead(f"head index {self.offset} < 0")
        if any(not isinstance(t, Fraction) for t in self.terms):
            raise TypeError("terms must be Fractions; use from_terms()")
        if any(t < 0 for t in self.terms):
            raise NegativeTerm("sequence terms must be nonnegative")
        if self.terms[0] == 0 or self.terms[-1] == 0:
            raise ValueError("outer zeros must be trimmed; use from_terms()")

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, k: int) -> Fraction:
        return term(self, k)

    def __repr__(self):
        return f"Sequence({format_sequence(self)!r})"

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def end(self) -> int:
        """One past the last stored index."""
        return self.offset + len(self.terms)

    @cached_property
    def integral(self) -> tuple[tuple[int, ...], int]:
        """``(ints, d)`` with ``terms[i] == ints[i] / d`` and ``d`` the lcm of
        the denominators.  Hot loops run on these integers."""
        d = 1
        for t in self.terms:
            d = d * t.denominator // math.gcd(d, t.denominator)
        return tuple(int(t * d) for t in self.terms), d


ZERO = Sequence()


def from_terms(offset: int, terms: Iterable) -> Sequence:
    """Canonicalize ``terms`` placed at ``offset`` into a :class:`Sequence`."""
    vals = [as_rational(t) for t in terms]
    if any(v < 0 for v in vals):
        raise NegativeTerm("sequence terms must be nonnegative")
    lo, hi = 0, len(vals)
    while lo < hi and vals[lo] == 0:
        lo += 1
    while hi > lo and vals[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return ZERO
    head = int(offset) + lo
    if head < 0:
        raise NegativeHead(f"canonical head index {head} < 0")
    return Sequence(head, tuple(vals[lo:hi]))


def _from_ints(offset: int, ints: _Seq[int], d: int = 1) -> Sequence:
    if d == 1:
        return from_terms(offset, [Fraction(v) for v in ints])
    return from_terms(offset, [Fraction(v, d) for v in ints])


def term(A: Sequence, k: int) -> Fraction:
    i = k - A.offset
    if 0 <= i < len(A.terms):
        return A.terms[i]
    return Fraction(0)


def head_index(A: Sequence) -> int:
    if A.is_zero:
        raise ZeroSequenceError("head index of the zero sequence is undefined")
    return A.offset


def tail_index(A: Sequence) -> int:
    if A.is_zero:
        raise ZeroSequenceError("tail index of the zero sequence is undefined")
    return A.end - 1


def is_log_concave(A: Sequence) -> bool:
    # outside [offset-1, end] both sides of a_k^2 >= a_{k-1} a_{k+1} vanish
    ints, _ = A.integral
    p = [0, 0] + list(ints) + [0, 0]
    return all(p[i] * p[i] >= p[i - 1] * p[i + 1] for i in range(1, len(p) - 1))


def has_internal_zeros(A: Sequence) -> bool:
    # canonical form: outer terms are positive, so any stored zero is internal
    return any(t == 0 for t in A.terms)


class SeqClass(enum.Enum):
    NOT_LOG_CONCAVE = "NotLogConcave"
    LOG_CONCAVE_WITH_INTERNAL_ZEROS = "LogConcaveWithInternalZeros"
    L_ZERO = "LZero"
    L_STAR = "LStar"

    @property
    def in_L(self) -> bool:
        return self in (SeqClass.L_ZERO, SeqClass.L_STAR)


def classify(A: Sequence) -> SeqClass:
    cached = A.__dict__.get("_class")
    if cached is None:
        # frozen dataclass: store the memo directly in the instance dict
        cached = A.__dict__["_class"] = _classify(A)
    return cached


def _classify(A: Sequence) -> SeqClass:
    if A.is_zero:
        return SeqClass.L_ZERO
    if not is_log_concave(A):
        return SeqClass.NOT_LOG_CONCAVE
    if has_internal_zeros(A):
        return SeqClass.LOG_CONCAVE_WITH_INTERNAL_ZEROS
    return SeqClass.L_STAR


def in_L(A: Sequence) -> bool:
    return classify(A).in_L


def scale(u, A: Sequence) -> Sequence:
    u = as_rational(u)
    if u < 0:
        raise NegativeTerm(f"scalar {u} is negative")
    if u == 0 or A.is_zero:
        return ZERO
    return Sequence(A.offset, tuple(u * t for t in A.terms))


def add(A: Sequence, B: Sequence) -> Sequence:
    if A.is_zero:
        return B
    if B.is_zero:
        return A
    lo = min(A.offset, B.offset)
    hi = max(A.end, B.end)
    return from_terms(lo, [term(A, k) + term(B, k) for k in range(lo, hi)])


def convolve(A: Sequence, B: Sequence) -> Sequence:
    """Coefficient sequence of the product of the two generating polynomials."""
    if A.is_zero or B.is_zero:
        return ZERO
    a, da = A.integral
    b, db = B.integral
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _from_ints(A.offset + B.offset, out, da * db)


def lin_comb(coeffs: _Seq, seqs: _Seq[Sequence]) -> Sequence:
    """``sum(coeffs[i] * seqs[i])`` with nonnegative rational coefficients."""
    if len(coeffs) != len(seqs):
        raise LengthMismatch(f"{len(coeffs)} coefficients for {len(seqs)} sequences")
    out = ZERO
    for u, A in zip(coeffs, seqs):
        out = add(out, scale(u, A))
    return out


# ---------------------------------------------------------------------------
# text and JSON forms
# ---------------------------------------------------------------------------

def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_sequence(A: Sequence) -> str:
    """Inverse of :func:`parse_sequence`; the zero sequence prints as ``0``."""
    if A.is_zero:
        return "0"
    body = ",".join(format_rational(t) for t in A.terms)
    return body if A.offset == 0 else f"@{A.offset}:{body}"


def parse_sequence(text: str) -> Sequence:
    """Parse ``"1,3,5"``, ``"@2:1,3,5"`` or ``"1/2,3"``."""
    s = text.strip()
    offset = 0
    if s.startswith("@"):
        head, sep, s = s[1:].partition(":")
        if not sep:
            raise ParseError(f"missing ':' after offset in {text!r}")
        try:
            offset = int(head)
        except ValueError as exc:
            raise ParseError(f"bad offset {head!r} in {text!r}") from exc
    parts = [p.strip() for p in s.split(",")]
    if not s.strip() or any(p == "" for p in parts):
        raise ParseError(f"empty term in {text!r}")
    vals = []
    for p in parts:
        if p.lower() in ("nan", "inf", "-inf", "infinity"):
            raise ParseError(f"not an exact rational: {p!r}")
        vals.append(as_rational(p))
    return from_terms(offset, vals)


def sequence_to_json(A: Sequence) -> dict:
    return {"offset": A.offset, "terms": [format_rational(t) for t in A.terms]}


def sequence_from_json(obj) -> Sequence:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        return from_terms(int(obj.get("offset", 0)), [as_rational(str(t)) for t in obj["terms"]])
    except (KeyError, AttributeError, TypeError) as exc:
        raise ParseError(f"malformed sequence object: {obj!r}") from exc
