"""Lyndon tests, the linear-time factorization, and bounded infinite checks.

A finite word is Lyndon when it is strictly smaller than all of its proper
nonempty suffixes; every word factors uniquely into a non-increasing product
of Lyndon words. For infinite words the property is only co-semi-decidable,
so the stream checker reports either a concrete violating suffix or
consistency up to the examined length.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .core import DomainError, Word
from .smooth import PrefixStream


@dataclass(frozen=True)
class Violation:
    """Suffix ``suffix_index`` is strictly smaller than the word, decided
    within ``decided_at`` compared letters."""

    suffix_index: int
    decided_at: int


@dataclass(frozen=True)
class ConsistentUpTo:
    """No suffix violation is decidable from the first ``n`` letters."""

    n: int


LyndonVerdict = Violation | ConsistentUpTo


@dataclass(frozen=True)
class LyndonFactorization:
    """Non-increasing product of Lyndon words; ``complete`` is False when the
    trailing factor of a stream prefix may still grow."""

    factors: tuple[Word, ...]
    complete: bool = True

    def __str__(self) -> str:
        return "·".join(str(f) for f in self.factors)

    def as_json(self) -> dict:
        return {"factors": [str(f) for f in self.factors], "complete": self.complete}


def violating_suffix(w: Word) -> Word | None:
    """The first (in position order) proper suffix of ``w`` not larger than ``w``."""
    if len(w) == 0:
        raise DomainError("the empty word is not a Lyndon word")
    s = w.letters
    for i in range(1, len(s)):
        if not s < s[i:]:
            return Word._trusted(s[i:])
    return None


def is_lyndon(w: Word) -> bool:
    """Whether ``w`` is strictly smaller than all its proper nonempty suffixes."""
    return violating_suffix(w) is None


def duval_factorize(w: Word) -> LyndonFactorization:
    """The unique non-increasing Lyndon factorization, in linear time."""
    if len(w) == 0:
        raise DomainError("cannot factorize the empty word")
    s = w.letters
    n = len(s)
    factors = []
    k = 0
    while k < n:
        i, j = k, k + 1
        while j < n and s[i] <= s[j]:
            i = k if s[i] < s[j] else i + 1
            j += 1
        step = j - i
        while k <= i:
            factors.append(Word._trusted(s[k : k + step]))
            k += step
    return LyndonFactorization(tuple(factors), complete=True)


def concat_lyndon(u: Word, v: Word) -> bool:
    """Whether the concatenation ``uv`` is Lyndon by the ordering rule:
    it is iff ``u`` and ``v`` are Lyndon and ``u < v``."""
    if len(u) == 0 or len(v) == 0:
        raise DomainError("both words must be nonempty")
    return is_lyndon(u) and is_lyndon(v) and u < v


def _violation_in(buf, n: int) -> LyndonVerdict:
    hit = kernels.first_violation(buf, n)
    if hit is None:
        return ConsistentUpTo(n)
    return Violation(*hit)


def check_lyndon_prefix(s: PrefixStream | Word, n: int) -> LyndonVerdict:
    """Bounded infinite-Lyndon check on the first ``n`` letters.

    Each suffix is compared against the prefix of equal length; the first
    decidable violation (smallest start index) is returned. A suffix that
    matches a prefix of the word for all available letters is undecided and
    counts as consistent.
    """
    if n < 2:
        raise DomainError("need at least 2 letters to compare a suffix")
    if isinstance(s, Word):
        buf = s.to_bytes()
        if buf is None:
            buf = s.letters
        return _violation_in(buf, min(n, len(s)))
    return _violation_in(s._materialize(n), n)


def stream_factorize(s: PrefixStream, n: int) -> LyndonFactorization:
    """Prefix of the infinite Lyndon factorization, from ``take(n)``.

    The factorization of a prefix only ever refines at its tail, so factors
    shared with the factorization of ``take(2n)`` are taken as final. The
    unstable remainder is one trailing incomplete factor: a prefix of a
    factor that may still grow (possibly the infinite one). ``complete`` is
    True when there is no such remainder.
    """
    if n < 1:
        raise DomainError("need at least one letter")
    now = duval_factorize(s.take(n)).factors
    ahead = duval_factorize(s.take(2 * n)).factors
    stable = 0
    while stable < min(len(now), len(ahead)) and now[stable] == ahead[stable]:
        stable += 1
    if stable == len(now):
        return LyndonFactorization(now, complete=True)
    tail = Word()
    for f in now[stable:]:
        tail = tail + f
    return LyndonFactorization(now[:stable] + (tail,), complete=False)


__all__ = [
    "ConsistentUpTo",
    "LyndonFactorization",
    "LyndonVerdict",
    "Violation",
    "check_lyndon_prefix",
    "concat_lyndon",
    "duval_factorize",
    "is_lyndon",
    "stream_factorize",
    "violating_suffix",
]
