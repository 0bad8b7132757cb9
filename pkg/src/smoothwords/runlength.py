"""The run-length calculus: block coding, its pseudo-inverses, derivatives.

``encode`` maps a word to its sequence of maximal block lengths; it is not
injective (a word and its complement encode alike), so ``decode`` takes the
starting letter explicitly. The derivative operators trim possibly-incomplete
boundary blocks: ``right_derivative`` only on the right (prefix
extendability), ``derivative`` on both sides (factor extendability).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import kernels
from .core import DomainError, Letter, OrderedAlphabet, Word


def encode(w: Word) -> Word:
    """Block-length coding: the sequence of maximal run lengths of ``w``.

    The empty word encodes to the empty word. Output letters are unbounded
    positive integers; callers decide whether they stay in an alphabet.
    """
    buf = w.to_bytes()
    counts = kernels.run_lengths(buf if buf is not None else w.letters)
    return Word._trusted(tuple(counts))


def decode(u, alpha: Letter, beta: Letter) -> Word:
    """Alternating-run expansion alpha^u[0] beta^u[1] alpha^u[2] ...

    Inverts ``encode`` for words starting with ``alpha`` over {alpha, beta}.
    ``u`` may be a Word or any sequence of positive counts.
    """
    counts = u.letters if isinstance(u, Word) else u
    if len(counts) > 1 and alpha == beta:
        raise DomainError("decode needs two distinct letters")
    for c in counts:
        if c < 1:
            raise DomainError(f"run counts must be positive, got {c}")
    if alpha < 1 or (len(counts) > 1 and beta < 1):
        raise DomainError("letters must be positive")
    out = kernels.expand_runs(counts, alpha, beta if beta >= 1 else alpha)
    return Word.from_buffer(out)


class ChainStop(Enum):
    """Why an iterated block-coding chain stopped."""

    SINGLE_LETTER = "single-letter"
    LEFT_ALPHABET = "left-alphabet"
    EMPTY = "empty"


@dataclass(frozen=True)
class DeltaChain:
    """Iterated block coding: levels[0] is the input, levels[i+1] = encode(levels[i])."""

    levels: tuple[Word, ...]
    terminal: ChainStop

    @property
    def first_letters(self) -> Word:
        return Word._trusted(tuple(level[0] for level in self.levels if len(level)))


def delta_chain(w: Word, alphabet: OrderedAlphabet) -> DeltaChain:
    """Iterate the block coding until it degenerates.

    Iteration stops at the first level that is a single letter, or whose
    letters leave the alphabet (that level is kept and flagged).
    """
    if len(w) == 0:
        return DeltaChain((w,), ChainStop.EMPTY)
    levels = [w]
    while True:
        cur = levels[-1]
        if any(x not in alphabet for x in cur):
            return DeltaChain(tuple(levels), ChainStop.LEFT_ALPHABET)
        if len(cur) == 1:
            return DeltaChain(tuple(levels), ChainStop.SINGLE_LETTER)
        levels.append(encode(cur))


def right_derivative(w: Word, alphabet: OrderedAlphabet) -> Word:
    """Block coding with a possibly-incomplete final block trimmed.

    Case order: the empty word, or a coding that is one letter below ``b``,
    derives to the empty word; a coding ending in ``b`` is kept whole; a
    coding ending below ``b`` loses its last letter. A coding ending above
    ``b`` has no right derivative (the final block can never complete).
    """
    b = alphabet.b
    if len(w) == 0:
        return Word()
    d = encode(w)
    last = d[len(d) - 1]
    if len(d) == 1 and last < b:
        return Word()
    if last == b:
        return d
    if last < b:
        return d[:-1]
    raise DomainError(f"final block of length {last} exceeds {b}")


def is_r_smooth(w: Word, alphabet: OrderedAlphabet) -> bool:
    """Whether ``w`` can be extended on the right inside the smooth words.

    True iff every iterated right derivative stays over the alphabet until
    the empty word is reached.
    """
    cur = w
    while True:
        if any(x not in alphabet for x in cur):
            return False
        if len(cur) == 0:
            return True
        try:
            cur = right_derivative(cur, alphabet)
        except DomainError:
            return False


def derivative(w: Word, alphabet: OrderedAlphabet) -> Word:
    """Block coding with possibly-incomplete boundary blocks trimmed.

    Boundary letters of the coding below ``b`` are dropped (first matching
    case wins): a single letter below ``b`` gives the empty word; a coding
    delimited by ``b`` on both ends (or equal to ``b``) is kept whole;
    otherwise the offending end letters are removed.
    """
    b = alphabet.b
    if len(w) == 0:
        return Word()
    d = encode(w)
    first, last = d[0], d[len(d) - 1]
    if len(d) == 1:
        if first < b:
            return Word()
        if first == b:
            return d
        raise DomainError(f"block of length {first} exceeds {b}")
    if first == b and last == b:
        return d
    if first == b and last < b:
        return d[:-1]
    if first < b and last == b:
        return d[1:]
    if first < b and last < b:
        return d[1:-1]
    raise DomainError("boundary block longer than the top letter")


def is_smooth_factor(w: Word, alphabet: OrderedAlphabet) -> bool:
    """Whether ``w`` occurs inside some smooth word over the alphabet.

    True iff iterating ``derivative`` reaches the empty word with every
    iterate over the alphabet.
    """
    cur = w
    while True:
        if len(cur) == 0:
            return True
        if any(x not in alphabet for x in cur):
            return False
        try:
            cur = derivative(cur, alphabet)
        except DomainError:
            return False


__all__ = [
    "ChainStop",
    "DeltaChain",
    "decode",
    "delta_chain",
    "derivative",
    "encode",
    "is_r_smooth",
    "is_smooth_factor",
    "right_derivative",
]
