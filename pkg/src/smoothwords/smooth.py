"""Smooth words: the first-letter bijection, directive streams, fixed points.

A smooth word is determined by the sequence of first letters of its iterated
block codings (its directive). Expanding a directive prefix bottom-up with
alternating-run decoding yields a guaranteed prefix of the word, so an
eventually periodic directive gives a lazily extendable stream. The
generalized Kolakoski words are generated directly by self-reading, and their
fixed-point property is checked by tests rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .core import (
    EMPTY,
    DomainError,
    Letter,
    OrderedAlphabet,
    Parity,
    UnsupportedAlphabetError,
    Word,
)
from .runlength import encode, is_r_smooth


@dataclass(frozen=True)
class DirectiveSequence:
    """An eventually periodic infinite word preperiod . period^omega."""

    preperiod: Word
    period: Word

    def __post_init__(self) -> None:
        if len(self.period) == 0:
            raise DomainError("directive period must be nonempty")

    def letter(self, i: int) -> int:
        pre = self.preperiod
        if i < len(pre):
            return pre[i]
        per = self.period
        return per[(i - len(pre)) % len(per)]

    def prefix(self, n: int) -> tuple[int, ...]:
        pre = self.preperiod.letters
        if n <= len(pre):
            return pre[:n]
        per = self.period.letters
        reps, extra = divmod(n - len(pre), len(per))
        return pre + per * reps + per[:extra]

    @classmethod
    def parse(cls, text: str) -> "DirectiveSequence":
        """Parse the ``PRE:PERIOD`` directive format ("2:4", ":13")."""
        if text.count(":") != 1:
            raise DomainError(f"directive must be PRE:PERIOD, got {text!r}")
        pre, per = text.split(":")
        return cls(Word.parse(pre), Word.parse(per))

    def __str__(self) -> str:
        return f"{self.preperiod}:{self.period}"


def _phi_inverse_buffer(directive, alphabet: OrderedAlphabet):
    """Bottom-up expansion of a finite directive; returns a letter buffer.

    Each step turns the previous level into run lengths of the next, starting
    with the directive letter for that level. Directive letters outside the
    alphabet are permitted while the level being expanded is a single run
    (they then never need a complement).
    """
    if not directive:
        return b""
    top = directive[-1]
    level = bytes([top]) if top < 256 else (top,)
    for letter in reversed(directive[:-1]):
        if letter in alphabet:
            beta = alphabet.complement(letter)
        elif len(level) <= 1:
            beta = letter
        else:
            raise DomainError(
                f"directive letter {letter} outside {alphabet} needs a complement"
            )
        level = kernels.expand_runs(level, letter, beta)
    return level


def phi_inverse_prefix(u: Word, alphabet: OrderedAlphabet) -> Word:
    """The guaranteed prefix built from a finite directive ``u``.

    The result is a prefix of every smooth word whose directive extends
    ``u``. Only the pure bottom-up recursion is used; no letters are deduced
    beyond it, so growth comes from consuming more directive letters.
    """
    if len(u) == 0:
        raise DomainError("directive must be nonempty")
    return Word.from_buffer(_phi_inverse_buffer(u.letters, alphabet))


def phi(w: Word, alphabet: OrderedAlphabet) -> Word:
    """First letters of the iterated block codings of a smooth prefix.

    For a smooth prefix, every tower level is a prefix of the corresponding
    level of any smooth extension, with at most its final letter shortened by
    truncation. First letters are therefore exact; a trailing out-of-alphabet
    artifact (a truncated final count) is dropped from the result.
    """
    if len(w) == 0:
        raise DomainError("phi of the empty word is undefined")
    if not is_r_smooth(w, alphabet):
        raise DomainError(f"{w} is not a smooth prefix over {alphabet}")
    firsts = []
    level = w
    while True:
        firsts.append(level[0])
        if len(level) == 1:
            break
        level = encode(level)
    while firsts and firsts[-1] not in alphabet:
        firsts.pop()
    return Word._trusted(tuple(firsts))


class PrefixStream:
    """A lazy, growable, guaranteed-correct prefix of an infinite word.

    ``take(n)`` always returns exactly the first ``n`` letters, independent
    of request granularity. Single consumer; snapshots are immutable words.
    """

    alphabet: OrderedAlphabet

    def _materialize(self, n: int):
        raise NotImplementedError

    def take(self, n: int) -> Word:
        if n < 0:
            raise DomainError(f"cannot take {n} letters")
        buf = self._materialize(n)
        return Word.from_buffer(buf[:n])

    @property
    def materialized(self) -> Word:
        return Word.from_buffer(self._materialize(0))


class DirectiveStream(PrefixStream):
    """Stream of the smooth word determined by an infinite directive.

    The whole expansion tower is kept: every level is a stable prefix of its
    own extension, so consuming one more directive letter only appends the
    per-level increments, and total work stays linear in the materialized
    length.
    """

    _STALL_WINDOW = 4096

    def __init__(self, directive: DirectiveSequence, alphabet: OrderedAlphabet):
        self.directive = directive
        self.alphabet = alphabet
        self._consumed = 0
        self._levels: list = []  # bottom first; _levels[i] starts with letter(i)
        self._expanded: list[int] = []  # letters of _levels[i+1] already expanded

    @staticmethod
    def _fresh(letter: int):
        return bytearray([letter]) if 0 < letter < 256 else [letter]

    def _complement_for(self, alpha: int, upper_len: int) -> int:
        if alpha in self.alphabet:
            return self.alphabet.complement(alpha)
        if upper_len <= 1:
            return alpha  # a single run never needs the second letter
        raise DomainError(
            f"directive letter {alpha} outside {self.alphabet} needs a complement"
        )

    def _push_letter(self) -> None:
        k = self._consumed
        letter = self.directive.letter(k)
        self._consumed += 1
        if k == 0:
            self._levels.append(self._fresh(letter))
            return
        # the old top held one seeded letter; it now becomes the expansion
        # of the new letter's count (the seed is its first letter)
        alpha = self.directive.letter(k - 1)
        grown = kernels.expand_runs((letter,), alpha, self._complement_for(alpha, 1))
        self._levels[k - 1] = (
            bytearray(grown) if isinstance(grown, bytes) else list(grown)
        )
        self._expanded.append(1)
        self._levels.append(self._fresh(letter))
        for i in range(k - 2, -1, -1):
            upper = self._levels[i + 1]
            done = self._expanded[i]
            if done == len(upper):
                continue
            alpha = self.directive.letter(i)
            beta = self._complement_for(alpha, len(upper))
            first, second = (alpha, beta) if done % 2 == 0 else (beta, alpha)
            piece = kernels.expand_runs(upper[done:], first, second)
            if isinstance(self._levels[i], bytearray) and isinstance(piece, tuple):
                self._levels[i] = list(self._levels[i])
            self._levels[i] += piece
            self._expanded[i] = len(upper)

    def _materialize(self, n: int):
        stalled = 0
        while not self._levels or len(self._levels[0]) < n:
            before = len(self._levels[0]) if self._levels else 0
            self._push_letter()
            if len(self._levels[0]) > before:
                stalled = 0
            else:
                stalled += 1
                if stalled > self._STALL_WINDOW:
                    raise DomainError(
                        f"directive {self.directive} does not expand; is its tail all 1s?"
                    )
        return self._levels[0]


class KolakoskiStream(PrefixStream):
    """Self-reading fixed point of the block coding, starting with ``first``."""

    def __init__(self, first: Letter, second: Letter):
        if first == second or first < 1 or second < 1:
            raise DomainError("need two distinct positive letters")
        self.first = first
        self.second = second
        self.alphabet = OrderedAlphabet(min(first, second), max(first, second))
        self._buf = bytearray() if max(first, second) < 256 else []
        self._runs_read = 0

    def _materialize(self, n: int):
        if len(self._buf) < n:
            self._runs_read = kernels.kolakoski_extend(
                self._buf, self._runs_read, n, self.first, self.second
            )
        return self._buf


class Delta1InverseStream(PrefixStream):
    """Alternating-run expansion of another stream, starting with letter 1."""

    def __init__(self, source: PrefixStream):
        if 1 not in source.alphabet:
            raise DomainError(f"source alphabet {source.alphabet} does not contain 1")
        self.source = source
        self.alphabet = source.alphabet
        self._consumed = 0
        self._buf: bytes | tuple = b""

    def _materialize(self, n: int):
        beta = self.alphabet.complement(1)
        while len(self._buf) < n:
            self._consumed = max(8, self._consumed * 2, n)
            counts = self.source._materialize(self._consumed)[: self._consumed]
            self._buf = kernels.expand_runs(counts, 1, beta)
        return self._buf


def stream_from_directive(
    d: DirectiveSequence, alphabet: OrderedAlphabet
) -> PrefixStream:
    """Lazy prefix stream of the smooth word with directive ``d``."""
    return DirectiveStream(d, alphabet)


def kolakoski(first: Letter, second: Letter) -> PrefixStream:
    """The fixed point of the block coding over {first, second} starting with ``first``."""
    return KolakoskiStream(first, second)


def minimal_word(alphabet: OrderedAlphabet) -> PrefixStream:
    """Lexicographically smallest smooth word over an even or odd alphabet."""
    a, b = alphabet.a, alphabet.b
    parity = alphabet.parity_class
    if parity is Parity.EVEN_EVEN:
        d = DirectiveSequence(Word((a,)), Word((b,)))
    elif parity is Parity.ODD_ODD:
        d = DirectiveSequence(EMPTY, Word((a, b)))
    else:
        raise UnsupportedAlphabetError(
            f"no extremal construction for mixed-parity alphabet {alphabet}"
        )
    return DirectiveStream(d, alphabet)


def maximal_word(alphabet: OrderedAlphabet) -> PrefixStream:
    """Lexicographically largest smooth word over an even or odd alphabet."""
    a, b = alphabet.a, alphabet.b
    parity = alphabet.parity_class
    if parity is Parity.EVEN_EVEN:
        d = DirectiveSequence(EMPTY, Word((b,)))
    elif parity is Parity.ODD_ODD:
        d = DirectiveSequence(EMPTY, Word((b, a)))
    else:
        raise UnsupportedAlphabetError(
            f"no extremal construction for mixed-parity alphabet {alphabet}"
        )
    return DirectiveStream(d, alphabet)


def delta1_inverse_stream(s: PrefixStream) -> PrefixStream:
    """Stream of the run expansion of ``s`` with runs of 1s first."""
    return Delta1InverseStream(s)


__all__ = [
    "Delta1InverseStream",
    "DirectiveSequence",
    "DirectiveStream",
    "KolakoskiStream",
    "PrefixStream",
    "delta1_inverse_stream",
    "kolakoski",
    "maximal_word",
    "minimal_word",
    "phi",
    "phi_inverse_prefix",
    "stream_from_directive",
]
