"""Ground vocabulary: 2-letter alphabets, finite words, lexicographic order.

Letters are positive integers with no upper bound. Words compare
lexicographically with the proper-prefix rule (a proper prefix is smaller),
which is exactly Python's tuple ordering. Words over different alphabets
still compare; alphabet membership is only enforced by the operations that
need it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, NamedTuple

from . import kernels

Letter = int


class DomainError(ValueError):
    """An argument is outside the domain of the requested operation."""


class UnsupportedAlphabetError(DomainError):
    """The operation has no defined construction for this alphabet class."""


class Parity(Enum):
    """Parity class of an ordered 2-letter alphabet (a, b)."""

    EVEN_EVEN = "even-even"
    ODD_ODD = "odd-odd"
    EVEN_ODD = "even-odd"
    ODD_EVEN = "odd-even"


def _parity_of(a: int, b: int) -> Parity:
    if a % 2 == 0:
        return Parity.EVEN_EVEN if b % 2 == 0 else Parity.EVEN_ODD
    return Parity.ODD_EVEN if b % 2 == 0 else Parity.ODD_ODD


@dataclass(frozen=True)
class OrderedAlphabet:
    """A 2-letter alphabet {a < b} of positive integers."""

    a: Letter
    b: Letter

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 1:
            raise DomainError(f"letters must be positive: {self.a}, {self.b}")
        if not self.a < self.b:
            raise DomainError(f"alphabet requires a < b, got {self.a}, {self.b}")

    @property
    def parity_class(self) -> Parity:
        return _parity_of(self.a, self.b)

    def __contains__(self, letter: int) -> bool:
        return letter == self.a or letter == self.b

    def complement(self, letter: Letter) -> Letter:
        """The other letter of the alphabet."""
        if letter == self.a:
            return self.b
        if letter == self.b:
            return self.a
        raise DomainError(f"letter {letter} not in alphabet {{{self.a},{self.b}}}")

    def __str__(self) -> str:
        return f"{{{self.a},{self.b}}}"


class Run(NamedTuple):
    """A maximal block: ``count`` copies of ``letter``."""

    letter: Letter
    count: int


class Word:
    """An immutable finite word of positive-integer letters.

    Supports ``+`` (concatenation), ``*`` (repetition), slicing, and rich
    comparisons implementing the lexicographic order with the proper-prefix
    rule. The empty word is permitted.
    """

    __slots__ = ("_letters", "_bytes")

    def __init__(self, letters: Iterable[int] = ()):
        data = tuple(letters)
        for x in data:
            if not isinstance(x, int) or x < 1:
                raise DomainError(f"letters must be positive integers, got {x!r}")
        object.__setattr__(self, "_letters", data)
        object.__setattr__(self, "_bytes", None)

    @classmethod
    def _trusted(cls, data: tuple[int, ...]) -> "Word":
        w = object.__new__(cls)
        object.__setattr__(w, "_letters", data)
        object.__setattr__(w, "_bytes", None)
        return w

    @classmethod
    def from_buffer(cls, buf) -> "Word":
        """Build a word from a bytes-like or integer-sequence buffer."""
        w = cls._trusted(tuple(buf))
        if isinstance(buf, (bytes, bytearray)):
            object.__setattr__(w, "_bytes", bytes(buf))
        return w

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse the word text format.

        A contiguous digit string when all letters are single digits
        ("1121"), otherwise comma-separated decimal integers ("1,12,3").
        The empty string is the empty word. A comma-free string containing a
        zero digit is read as one multi-digit letter ("10"); a comma-free
        string of nonzero digits is always read letter-per-digit, so a
        solitary letter like 12 needs the delimited form to survive a round
        trip.
        """
        text = text.strip()
        if not text:
            return cls()
        try:
            if "," in text:
                return cls(int(part) for part in text.split(","))
            if "0" in text:
                return cls((int(text),))
            return cls(int(ch) for ch in text)
        except ValueError as exc:
            raise DomainError(f"unparsable word {text!r}") from exc

    @property
    def letters(self) -> tuple[int, ...]:
        return self._letters

    def to_bytes(self) -> bytes | None:
        """Byte encoding of the word, or None if a letter exceeds 255."""
        if self._bytes is None:
            if any(x > 255 for x in self._letters):
                return None
            object.__setattr__(self, "_bytes", bytes(self._letters))
        return self._bytes

    def runs(self) -> Iterator[Run]:
        """The maximal blocks of the word, left to right."""
        i = 0
        data = self._letters
        while i < len(data):
            j = i + 1
            while j < len(data) and data[j] == data[i]:
                j += 1
            yield Run(data[i], j - i)
            i = j

    def reversed(self) -> "Word":
        return Word._trusted(self._letters[::-1])

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self._letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word._trusted(self._letters[item])
        return self._letters[item]

    def __add__(self, other: "Word") -> "Word":
        return Word._trusted(self._letters + other._letters)

    def __mul__(self, n: int) -> "Word":
        return Word._trusted(self._letters * n)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self._letters == other._letters

    def __lt__(self, other: "Word") -> bool:
        return self._letters < other._letters

    def __le__(self, other: "Word") -> bool:
        return self._letters <= other._letters

    def __gt__(self, other: "Word") -> bool:
        return self._letters > other._letters

    def __ge__(self, other: "Word") -> bool:
        return self._letters >= other._letters

    def __hash__(self) -> int:
        return hash(self._letters)

    def __bool__(self) -> bool:
        return bool(self._letters)

    def __str__(self) -> str:
        if all(x <= 9 for x in self._letters):
            return "".join(str(x) for x in self._letters)
        return ",".join(str(x) for x in self._letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


EMPTY = Word()


def word(text: str) -> Word:
    """Shorthand for :meth:`Word.parse`."""
    return Word.parse(text)


def run(letter: Letter, count: int) -> Word:
    """The word letter^count."""
    if count < 0:
        raise DomainError(f"negative run count {count}")
    return Word._trusted((letter,) * count)


def lex_compare(u: Word, v: Word) -> int:
    """-1, 0, or 1 as u < v, u == v, u > v in lexicographic order.

    A proper prefix is smaller than any of its extensions.
    """
    if u._letters == v._letters:
        return 0
    return -1 if u._letters < v._letters else 1


def complement(w: Word, alphabet: OrderedAlphabet) -> Word:
    """Swap the two alphabet letters throughout ``w``."""
    a, b = alphabet.a, alphabet.b
    out = []
    for x in w:
        if x == a:
            out.append(b)
        elif x == b:
            out.append(a)
        else:
            raise DomainError(f"letter {x} not in alphabet {alphabet}")
    return Word._trusted(tuple(out))


def reverse(w: Word) -> Word:
    """The word read right to left."""
    return w.reversed()


def factors_of_length(w: Word, n: int) -> set[Word]:
    """All distinct contiguous factors of ``w`` of length ``n``."""
    if n < 0:
        raise DomainError(f"negative factor length {n}")
    if n == 0:
        return {EMPTY}
    data = w.letters
    return {Word._trusted(data[i : i + n]) for i in range(len(data) - n + 1)}


def find_factor(haystack, needle: Word, start: int = 0) -> int:
    """Index of the first occurrence of ``needle`` at or after ``start``.

    ``haystack`` may be a Word or a raw letter buffer. Returns -1 when the
    factor does not occur.
    """
    nb = needle.to_bytes()
    if isinstance(haystack, Word):
        hb = haystack.to_bytes()
        hseq = haystack.letters
    elif isinstance(haystack, (bytes, bytearray)):
        hb, hseq = haystack, haystack
    else:
        hb, hseq = None, haystack
    if hb is not None and nb is not None:
        return bytes(hb).find(nb, start)
    target = tuple(needle.letters)
    m = len(target)
    for i in range(max(start, 0), len(hseq) - m + 1):
        if tuple(hseq[i : i + m]) == target:
            return i
    return -1


__all__ = [
    "DomainError",
    "EMPTY",
    "Letter",
    "OrderedAlphabet",
    "Parity",
    "Run",
    "UnsupportedAlphabetError",
    "Word",
    "complement",
    "factors_of_length",
    "find_factor",
    "lex_compare",
    "reverse",
    "run",
    "word",
]

# re-exported for introspection of the active kernel set
HAVE_COMPILED_KERNELS = kernels.HAVE_COMPILED
