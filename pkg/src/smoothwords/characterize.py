"""Machine check of the classification of infinite smooth Lyndon words.

The classification: over a 2-letter alphabet the only infinite smooth words
that are also infinite Lyndon words are the minimal smooth word when both
letters are even, and, over {1,b} with b odd, the minimal smooth word and its
run expansion starting with 1. The argument is a finite tree of forced
directive prefixes per parity class; every excluded branch names a factor of
the expanded word that is smaller than the word itself.

This module instantiates that case catalogue at concrete alphabets. For each
excluded branch, ``verify_case`` expands the directive, locates the claimed
witness factor, and independently confirms a violating suffix; surviving
branches are checked for bounded Lyndon consistency. ``classify`` states the
expected outcome, and ``exhaustive_directive_search`` reinforces it over all
short directive prefixes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum

from . import kernels
from .core import (
    DomainError,
    OrderedAlphabet,
    Parity,
    Word,
    find_factor,
    run,
)
from .runlength import decode
from .smooth import (
    DirectiveSequence,
    DirectiveStream,
    PrefixStream,
    delta1_inverse_stream,
    minimal_word,
    phi_inverse_prefix,
)
from .lyndon import ConsistentUpTo, LyndonVerdict, check_lyndon_prefix

VIOLATION_CONFIRMED = "violation-confirmed"
WITNESS_NOT_FOUND = "witness-not-found"
LYNDON_CONSISTENT = "lyndon-consistent"


class LyndonFamily(Enum):
    """The families of infinite smooth words that are Lyndon words."""

    MINIMAL_WORD = "minimal-word"
    DELTA1_INVERSE_OF_MINIMAL = "delta1-inverse-of-minimal"


@dataclass(frozen=True)
class Classification:
    alphabet: OrderedAlphabet
    families: frozenset[LyndonFamily]

    def as_json(self) -> dict:
        return {
            "alphabet": [self.alphabet.a, self.alphabet.b],
            "parity_class": self.alphabet.parity_class.value,
            "lyndon_families": sorted(f.value for f in self.families),
        }


def classify(alphabet: OrderedAlphabet) -> Classification:
    """Which smooth Lyndon families exist over the alphabet."""
    parity = alphabet.parity_class
    families: set[LyndonFamily] = set()
    if parity is Parity.EVEN_EVEN:
        families.add(LyndonFamily.MINIMAL_WORD)
    elif parity is Parity.ODD_ODD and alphabet.a == 1:
        families.add(LyndonFamily.MINIMAL_WORD)
        families.add(LyndonFamily.DELTA1_INVERSE_OF_MINIMAL)
    return Classification(alphabet, frozenset(families))


def family_stream(alphabet: OrderedAlphabet, family: LyndonFamily) -> PrefixStream:
    """Prefix stream of one of the classified Lyndon families."""
    if family is LyndonFamily.MINIMAL_WORD:
        return minimal_word(alphabet)
    return delta1_inverse_stream(minimal_word(alphabet))


@dataclass(frozen=True)
class CaseSpec:
    """One branch of the case tree, instantiated at a concrete alphabet.

    ``witness`` is the factor certifying the branch cannot start a Lyndon
    word; None means the branch claims a Lyndon-consistent word.
    """

    case_id: str
    alphabet: OrderedAlphabet
    directive: DirectiveSequence
    witness: Word | None
    pattern: str = ""

    @property
    def claims_violation(self) -> bool:
        return self.witness is not None


@dataclass(frozen=True)
class CaseReport:
    case_id: str
    alphabet: OrderedAlphabet
    verdict: str
    witness_position: int | None
    expanded_length: int
    elapsed_ms: float
    matches_claim: bool

    def as_json(self) -> dict:
        return {
            "case_id": self.case_id,
            "alphabet": [self.alphabet.a, self.alphabet.b],
            "verdict": self.verdict,
            "witness_position": self.witness_position,
            "expanded_length": self.expanded_length,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "matches_claim": self.matches_claim,
        }


def _spec(case_id, alphabet, prefix, witness, *, period=None, pattern=""):
    period = Word(period) if period is not None else Word((alphabet.b,))
    return CaseSpec(
        case_id=case_id,
        alphabet=alphabet,
        directive=DirectiveSequence(Word(prefix), period),
        witness=witness,
        pattern=pattern,
    )


def _half(n: int) -> int:
    if n % 2:
        raise DomainError(f"{n} is not even")
    return n // 2


def _quarter(n: int) -> int:
    if n % 4:
        raise DomainError(f"{n} is not divisible by 4")
    return n // 4


def _even_odd_cases(al: OrderedAlphabet) -> list[CaseSpec]:
    a, b = al.a, al.b
    h = _half(b - 1)
    ab = run(a, b)
    return [
        _spec("even-odd/1", al, (a, a, a), ab, pattern="aaa"),
        _spec("even-odd/2", al, (a, a, b), ab, pattern="aab"),
        _spec(
            "even-odd/3",
            al,
            (a, b, a, a),
            (run(a, b) + run(b, b)) * h + ab,
            pattern="abaa",
        ),
        _spec("even-odd/4", al, (a, b, a, b), ab + run(b, a) + run(a, 1), pattern="abab"),
        _spec("even-odd/5", al, (a, b, b), ab + run(b, a) + run(a, a), pattern="abb"),
    ]


def _even_cases(al: OrderedAlphabet) -> list[CaseSpec]:
    a, b = al.a, al.b
    h = _half(b)
    cases = []
    for x in (a, b):
        tag = "a" if x == a else "b"
        cases.append(_spec(f"even/1{tag}", al, (a, a, x), run(a, b), pattern=f"aa{tag}"))
        cases.append(
            _spec(
                f"even/2{tag}",
                al,
                (a, b, a, x),
                (run(a, b) + run(b, b)) * h,
                pattern=f"aba{tag}",
            )
        )
    for k in (2, 3):
        # the block pair whose expansions order the two continuations
        v1 = run(b, b) + run(a, b)
        for _ in range(k - 2):
            v1 = decode(v1, b, a)
        witness = decode(v1 * h, a, b)
        cases.append(
            _spec(f"even/3k{k}", al, (a,) + (b,) * k + (a,), witness, pattern=f"ab^{k}a")
        )
    cases.append(
        _spec("even/minimal", al, (a, b, b), None, period=(b,), pattern="ab^w")
    )
    return cases


def _odd_cases(al: OrderedAlphabet) -> list[CaseSpec]:
    a, b = al.a, al.b
    cases = []
    for x in (a, b):
        tag = "a" if x == a else "b"
        cases.append(_spec(f"odd/1{tag}", al, (a, a, x), run(a, b), pattern=f"aa{tag}"))
        cases.append(
            _spec(
                f"odd/2{tag}",
                al,
                (a, b, x),
                run(a, b) + run(b, a) + run(a, a),
                pattern=f"ab{tag}",
            )
        )
    return cases


def _lifted_unit_odd_witness(al: OrderedAlphabet) -> Word:
    """Witness for the 1b11b1b branch of an odd {1,b} alphabet.

    The twice-stripped word (directive 11b1b...) is forced to contain a full
    block of b ones; its image two expansion levels down is a factor of the
    branch word. Both levels alternate runs, so the image is computed from
    run parities alone.
    """
    b = al.b
    stripped = DirectiveStream(DirectiveSequence(Word((1, 1, b, 1, b)), Word((b,))), al)
    buf = bytes(stripped._materialize(4096))
    block = bytes([1]) * b
    start = 1
    while True:
        pos = buf.find(block, start)
        if pos <= 0:
            raise DomainError(f"no interior block of {b} ones found over {al}")
        if buf[pos - 1] != 1 and (pos + b >= len(buf) or buf[pos + b] != 1):
            break
        start = pos + 1
    # one level down the block becomes b unit runs alternating b,1 (run
    # index parity), landing at the letter offset given by the counts so far
    mid = [(b if j % 2 == 0 else 1) for j in range(pos, pos + b)]
    offset = sum(buf[:pos])
    out = []
    for i, count in enumerate(mid, start=offset):
        out.extend((1 if i % 2 == 0 else b,) * count)
    return Word(out)


def _unit_odd_cases(al: OrderedAlphabet) -> list[CaseSpec]:
    b = al.b
    h = _half(b - 1)
    ones = run(1, b)
    w1 = ones + (run(b, 1) + run(1, 1)) * h + run(b, 1) + ones + run(b, 1) + run(1, 1)
    # the expansion starts (1^b(b1)^h b)^(h+1) 1^b b^b ...; one extra repeat
    # of the leading block is forced later and is smaller than the word
    w2 = (ones + (run(b, 1) + run(1, 1)) * h + run(b, 1)) * (h + 2)
    w4 = ones + (run(b, 1) + run(1, 1)) * h + run(b, 1) + (ones + run(b, 1)) * h
    return [
        _spec("unit-odd/1", al, (1, b, 1, 1, 1), w1, pattern="1b111"),
        _spec("unit-odd/2", al, (1, b, 1, 1, b, 1, 1), w2, pattern="1b11b11"),
        _spec(
            "unit-odd/3",
            al,
            (1, b, 1, 1, b, 1, b),
            _lifted_unit_odd_witness(al),
            pattern="1b11b1b",
        ),
        _spec("unit-odd/4", al, (1, b, 1, 1, b, b), w4, pattern="1b11bb"),
        _spec(
            "unit-odd/5", al, (1, b, 1, b), None, period=(1, b), pattern="(1b)^w"
        ),
        _spec(
            "unit-odd/6",
            al,
            (1, b, b),
            phi_inverse_prefix(Word((1, b, 1)), al),
            pattern="1bb",
        ),
        _spec("unit-odd/11-1", al, (1, 1, 1, 1), ones, pattern="1111"),
        _spec("unit-odd/11-2", al, (1, 1, 1, b), ones, pattern="111b"),
        _spec(
            "unit-odd/minimal", al, (1, b), None, period=(1, b), pattern="(1b)^w"
        ),
        _spec(
            "unit-odd/delta1-minimal",
            al,
            (1, 1, b),
            None,
            period=(1, b),
            pattern="1(1b)^w",
        ),
    ]


def _unit_even_common_cases(al: OrderedAlphabet) -> list[CaseSpec]:
    b = al.b
    ones = run(1, b)
    return [
        _spec("unit-even/1111", al, (1, 1, 1, 1), ones, pattern="1111"),
        _spec("unit-even/111b", al, (1, 1, 1, b), ones, pattern="111b"),
        _spec("unit-even/11b", al, (1, 1, b), ones, pattern="11b"),
    ]


def _unit_even_4n_cases(al: OrderedAlphabet) -> list[CaseSpec]:
    b = al.b
    h = _half(b)
    q = _quarter(b)
    ones = run(1, b)
    e1 = (ones + run(b, 1)) * h  # (1^b b)^{b/2}
    e2 = (ones + run(b, b)) * h  # (1^b b^b)^{b/2}
    e3 = (run(1, 1) + run(b, 1)) * h  # (1b)^{b/2}
    ba = (run(b, 1) + run(1, 1)) * h  # (b1)^{b/2}
    bb1b = (run(b, b) + ones) * h  # (b^b 1^b)^{b/2}
    w6 = ones + (run(b, 1) + ones) * h + ba  # 1^b (b 1^b)^{b/2} (b1)^{b/2}
    big9 = (
        ((e1 + (e2 + e3) * h) * h + (ones + ba + run(b, b) + e3) * q) * h
        + e1
        + ((e2 + run(1, 1) + bb1b + run(b, 1)) * q + ((e2 + e3) * h + e1) * h) * h
    )
    big10 = (e1 + (e2 + e3) * h) * h + ones + (ba + bb1b) * h
    cases = [
        _spec("unit-even-4n/1", al, (1, b, 1, 1, 1), ones + run(b, 1) + ones),
        _spec("unit-even-4n/2", al, (1, b, 1, 1, b), e1 + ones),
        _spec("unit-even-4n/3", al, (1, b, 1, b, 1, 1, 1), e1 + e2 + e3),
        _spec("unit-even-4n/4", al, (1, b, 1, b, 1, 1, b), e1 + (e2 + e3) * h),
        _spec("unit-even-4n/5", al, (1, b, 1, b, 1, b), e1 + e2 + e3),
        _spec("unit-even-4n/6", al, (1, b, 1, b, b, 1, 1, 1), w6),
        _spec("unit-even-4n/7", al, (1, b, 1, b, b, 1, 1, b), w6),
        _spec("unit-even-4n/8", al, (1, b, 1, b, b, 1, b), w6),
        _spec("unit-even-4n/9", al, (1, b, 1, b, b, b, 1, 1, 1), big9),
        _spec("unit-even-4n/10", al, (1, b, 1, b, b, b, 1, 1, b), big10),
    ]
    if b == 4:
        w11 = run(1, 4) + (run(4, 1) + run(1, 4)) * 2 + (run(4, 1) + run(1, 1)) * 2
        cases += [
            _spec("unit-even-4n/11.ii.a", al, (1, 4, 1, 4, 4, 4, 1, 4, 1, 1), w11),
            _spec("unit-even-4n/11.ii.b", al, (1, 4, 1, 4, 4, 4, 1, 4, 1, 4), w11),
            _spec("unit-even-4n/11.ii.c", al, (1, 4, 1, 4, 4, 4, 1, 4, 4), w11),
        ]
    elif q % 2 == 1:
        w11 = (ones + run(b, 1)) + ((e2 + e3) * h + e1) * h + e2
        cases.append(_spec("unit-even-4n/11.i.a", al, (1, b, 1, b, b, b, 1, b), w11))
    else:
        cases.append(_spec("unit-even-4n/11.i.b", al, (1, b, 1, b, b, b, 1, b), big10))
    cases += [
        _spec(
            "unit-even-4n/12",
            al,
            (1, b, 1, b, b, b, b),
            (e1 + (e2 + e3) * h) * h + ones + ba + bb1b,
        ),
        _spec("unit-even-4n/13", al, (1, b, b, 1, 1, 1), e2 + run(1, 1) + bb1b),
        _spec("unit-even-4n/14", al, (1, b, b, 1, 1, b), e1),
        _spec("unit-even-4n/15", al, (1, b, b, 1, b), ones + run(b, 1) + ones),
        _spec("unit-even-4n/16", al, (1, b, b, b), ones + run(b, 1) + run(1, 1)),
    ]
    return cases


def _unit_even_2mod4_cases(al: OrderedAlphabet) -> list[CaseSpec]:
    b = al.b
    t = b // 2  # odd repeat count
    n = (b - 2) // 4
    ones = run(1, b)
    e1 = (ones + run(b, 1)) * t  # (1^b b)^t
    e2 = (ones + run(b, b)) * t  # (1^b b^b)^t
    e3 = (run(1, 1) + run(b, 1)) * t  # (1b)^t
    b1 = (run(b, 1) + run(1, 1)) * t  # (b1)^t
    b1b = (run(b, 1) + ones) * t  # (b 1^b)^t
    bb1b = (run(b, b) + ones) * t  # (b^b 1^b)^t
    bb1 = (run(b, b) + run(1, 1)) * t  # (b^b 1)^t
    w_small = ones + b1b + b1  # 1^b (b 1^b)^t (b1)^t
    w_wide = e1 + e2 + e3  # (1^b b)^t (1^b b^b)^t (1b)^t
    lit = Word.parse
    cases = [
        _spec("unit-even-2mod4/17", al, (1, b, 1, 1, b, 1), ones + run(b, 1) + ones),
    ]
    if n == 0:
        w18 = ones + run(b, 1) + run(1, 1) + run(b, b) + run(1, 1) + run(b, 1) + ones
    else:
        w18 = ones + b1 + bb1b
    cases.append(_spec("unit-even-2mod4/18", al, (1, b, 1, 1, b, b), w18))
    if b == 2:
        cases += [
            _spec("unit-even-2mod4/19.i", al, (1, 2, 1, 2, 1, 1, 2, 1, 1), lit("1121121")),
            _spec("unit-even-2mod4/20.i", al, (1, 2, 1, 2, 1, 1, 2, 1, 2), lit("1121122121")),
            _spec("unit-even-2mod4/21.i.a", al, (1, 2, 1, 2, 1, 1, 2, 2, 1, 1), lit("11211221211")),
            _spec("unit-even-2mod4/21.i.b", al, (1, 2, 1, 2, 1, 1, 2, 2, 1, 2), lit("1121121")),
            _spec("unit-even-2mod4/21.i.c", al, (1, 2, 1, 2, 1, 1, 2, 2, 2), lit("1121121")),
            _spec("unit-even-2mod4/22.i", al, (1, 2, 1, 2, 1, 2, 1, 1), lit("1121122121")),
            _spec("unit-even-2mod4/23.i", al, (1, 2, 1, 2, 1, 2, 1, 2), lit("1121121")),
            _spec("unit-even-2mod4/24.i", al, (1, 2, 1, 2, 1, 2, 2), lit("1121121")),
            _spec("unit-even-2mod4/25.i.a", al, (1, 2, 1, 2, 2, 1, 1, 1, 1), lit("1121121")),
            _spec("unit-even-2mod4/25.i.b", al, (1, 2, 1, 2, 2, 1, 1, 1, 2), lit("1121121")),
            _spec("unit-even-2mod4/26.i", al, (1, 2, 1, 2, 2, 1, 1, 2), lit("1121121")),
            _spec("unit-even-2mod4/27.ii.a", al, (1, 2, 1, 2, 2, 2, 1, 1), lit("11211221211212211")),
            _spec("unit-even-2mod4/27.ii.b", al, (1, 2, 1, 2, 2, 2, 1, 2), lit("11211221211211")),
            _spec("unit-even-2mod4/27.ii.c", al, (1, 2, 1, 2, 2, 2, 2), lit("1121121")),
        ]
    else:
        w27 = (
            (e1 + (e2 + e3) * t) * t
            + ones
            + b1
            + (run(b, b) + e3 + ones + b1) * n
            + bb1
            + bb1b
            + run(b, 1)
            + ones
        )
        cases += [
            _spec("unit-even-2mod4/19.ii", al, (1, b, 1, b, 1, 1, b, 1, 1), w_small),
            _spec("unit-even-2mod4/20.ii", al, (1, b, 1, b, 1, 1, b, 1, b), w_wide),
            _spec("unit-even-2mod4/21.ii", al, (1, b, 1, b, 1, 1, b, b), w_small),
            _spec("unit-even-2mod4/22.ii", al, (1, b, 1, b, 1, b, 1, 1), w_small),
            _spec("unit-even-2mod4/23.ii", al, (1, b, 1, b, 1, b, 1, b), w_wide),
            _spec(
                "unit-even-2mod4/24.ii",
                al,
                (1, b, 1, b, 1, b, b),
                ones + b1b + run(b, t),
            ),
            _spec("unit-even-2mod4/25.ii", al, (1, b, 1, b, b, 1, 1, 1), w_small),
            _spec("unit-even-2mod4/26.ii", al, (1, b, 1, b, b, 1, 1, b), w_small),
            _spec("unit-even-2mod4/27.i", al, (1, b, 1, b, b, b), w27),
        ]
    cases += [
        _spec("unit-even-2mod4/28", al, (1, b, b, 1, 1, b), ones + run(b, 1) + ones),
        _spec("unit-even-2mod4/29", al, (1, b, b, 1, b), ones + run(b, 1) + run(1, 1)),
    ]
    return cases


def case_table(alphabet: OrderedAlphabet) -> tuple[CaseSpec, ...]:
    """The instantiated case catalogue for the alphabet's parity class."""
    a, b = alphabet.a, alphabet.b
    parity = alphabet.parity_class
    if parity is Parity.EVEN_ODD:
        cases = _even_odd_cases(alphabet)
    elif parity is Parity.EVEN_EVEN:
        cases = _even_cases(alphabet)
    elif parity is Parity.ODD_ODD:
        cases = _unit_odd_cases(alphabet) if a == 1 else _odd_cases(alphabet)
    elif a != 1:
        cases = _odd_even_cases(alphabet)
    else:
        cases = _unit_even_common_cases(alphabet)
        if b % 4 == 0:
            cases += _unit_even_4n_cases(alphabet)
        else:
            cases += _unit_even_2mod4_cases(alphabet)
    return tuple(cases)


def _odd_even_cases(al: OrderedAlphabet) -> list[CaseSpec]:
    a, b = al.a, al.b
    ab = run(a, b)
    f = ab + run(b, a) + run(a, a)
    return [
        _spec("odd-even/1", al, (a, a, a), ab, pattern="aaa"),
        _spec("odd-even/2", al, (a, a, b), ab, pattern="aab"),
        _spec("odd-even/3", al, (a, b, a), f, pattern="aba"),
        _spec("odd-even/4", al, (a, b, b, a), f, pattern="abba"),
        _spec("odd-even/5", al, (a, b, b, b), f, pattern="abbb"),
    ]


def verify_case(
    spec: CaseSpec, *, budget: int = 1 << 22, consistent_budget: int = 10_000
) -> CaseReport:
    """Check one case: witness occurrence plus an independent suffix violation,
    or bounded Lyndon consistency for witness-free cases.

    The expansion budget grows geometrically up to ``budget``; exhausting it
    is reported as witness-not-found, never silently passed.
    """
    t0 = time.perf_counter()
    stream = DirectiveStream(spec.directive, spec.alphabet)

    def report(verdict, position, length, matches):
        return CaseReport(
            case_id=spec.case_id,
            alphabet=spec.alphabet,
            verdict=verdict,
            witness_position=position,
            expanded_length=length,
            elapsed_ms=(time.perf_counter() - t0) * 1e3,
            matches_claim=matches,
        )

    if spec.witness is None:
        verdict = check_lyndon_prefix(stream, consistent_budget)
        ok = isinstance(verdict, ConsistentUpTo)
        return report(
            LYNDON_CONSISTENT if ok else VIOLATION_CONFIRMED,
            None,
            consistent_budget,
            ok,
        )

    n = 1 << 10
    position = None
    while True:
        buf = stream._materialize(n)
        pos = find_factor(buf, spec.witness, start=1)
        if pos >= 1:
            position = pos
            if kernels.first_violation(buf, len(buf)) is not None:
                return report(VIOLATION_CONFIRMED, pos, len(buf), True)
        if n >= budget:
            return report(WITNESS_NOT_FOUND, position, len(buf), False)
        n *= 2


STANDARD_ALPHABETS: tuple[tuple[int, int], ...] = (
    (2, 3),
    (2, 5),
    (4, 5),
    (2, 4),
    (2, 6),
    (4, 6),
    (3, 5),
    (5, 7),
    (1, 3),
    (1, 5),
    (3, 4),
    (3, 6),
    (5, 6),
    (1, 4),
    (1, 8),
    (1, 2),
    (1, 6),
    (1, 10),
)


def standard_alphabets() -> tuple[OrderedAlphabet, ...]:
    """The concrete alphabets at which the catalogue is routinely verified."""
    return tuple(OrderedAlphabet(a, b) for a, b in STANDARD_ALPHABETS)


def verify_alphabet(
    alphabet: OrderedAlphabet, *, budget: int = 1 << 22, consistent_budget: int = 10_000
) -> list[CaseReport]:
    """Verify every case of the alphabet's catalogue."""
    return [
        verify_case(spec, budget=budget, consistent_budget=consistent_budget)
        for spec in case_table(alphabet)
    ]


def _search_extension(alphabet: OrderedAlphabet, prefix: tuple[int, ...]) -> Word:
    """Periodic continuation for a searched directive prefix.

    Even alphabets continue with b, odd alphabets continue the a/b
    alternation, mixed alphabets repeat the last letter (with 1 promoted to b
    so the expansion keeps growing).
    """
    a, b = alphabet.a, alphabet.b
    parity = alphabet.parity_class
    if parity is Parity.EVEN_EVEN:
        return Word((b,))
    if parity is Parity.ODD_ODD:
        return Word((b, a)) if prefix[-1] == a else Word((a, b))
    last = prefix[-1]
    return Word((last,)) if last != 1 else Word((b,))


def exhaustive_directive_search(
    alphabet: OrderedAlphabet, depth: int, budget: int
) -> list[tuple[Word, LyndonVerdict]]:
    """Check every directive prefix of the given depth that starts with a.

    Prefixes are extended periodically by :func:`_search_extension` and each
    resulting stream gets a bounded Lyndon check (escalating so violating
    directives exit early). Returns every (prefix, verdict) pair; the
    survivors are those with a consistent verdict.
    """
    if depth < 1 or depth > 12:
        raise DomainError("depth must be between 1 and 12")
    a, b = alphabet.a, alphabet.b
    ladder = [n for n in (1 << 10, 1 << 13, 1 << 16) if n < budget] + [budget]
    results = []
    for code in range(1 << (depth - 1)):
        prefix = (a,) + tuple(
            b if (code >> i) & 1 else a for i in reversed(range(depth - 1))
        )
        stream = DirectiveStream(
            DirectiveSequence(Word(prefix), _search_extension(alphabet, prefix)),
            alphabet,
        )
        verdict: LyndonVerdict = ConsistentUpTo(0)
        for n in ladder:
            verdict = check_lyndon_prefix(stream, n)
            if not isinstance(verdict, ConsistentUpTo):
                break
        results.append((Word(prefix), verdict))
    return results


def search_survivors(
    results: list[tuple[Word, LyndonVerdict]]
) -> list[Word]:
    return [d for d, v in results if isinstance(v, ConsistentUpTo)]


@dataclass(frozen=True)
class ParityLemmaReport:
    """Block-position and order-transfer checks on a minimal-word prefix."""

    alphabet: OrderedAlphabet
    n: int
    blocks: int
    misplaced_small_blocks: int
    misplaced_big_blocks: int
    long_big_blocks: int
    transfer_samples: int
    transfer_even: int
    transfer_odd: int
    transfer_failures: int

    @property
    def ok(self) -> bool:
        return (
            self.misplaced_small_blocks == 0
            and self.misplaced_big_blocks == 0
            and self.long_big_blocks == 0
            and self.transfer_failures == 0
            and self.transfer_even > 0
            and self.transfer_odd > 0
        )

    def as_json(self) -> dict:
        return {
            "alphabet": [self.alphabet.a, self.alphabet.b],
            "n": self.n,
            "blocks": self.blocks,
            "misplaced_small_blocks": self.misplaced_small_blocks,
            "misplaced_big_blocks": self.misplaced_big_blocks,
            "long_big_blocks": self.long_big_blocks,
            "transfer_samples": self.transfer_samples,
            "transfer_even": self.transfer_even,
            "transfer_odd": self.transfer_odd,
            "transfer_failures": self.transfer_failures,
            "ok": self.ok,
        }


def verify_parity_lemmas(
    alphabet: OrderedAlphabet, n: int, *, samples: int = 200, seed: int = 0
) -> ParityLemmaReport:
    """Check the position-parity and order-transfer facts on m over {1,b}.

    On the first ``n`` letters of the minimal word: every block of 1s starts
    at an even position, every block of b starts at an odd position and has
    length 1. Then sampled factor pairs (x1y, xby') with both parities of |x|
    are pushed through both run expansions and their order compared against
    the parity rule.
    """
    import random

    if alphabet.a != 1 or alphabet.b % 2 == 0:
        raise DomainError(f"parity lemmas need an odd alphabet {{1,b}}, got {alphabet}")
    b = alphabet.b
    w = minimal_word(alphabet).take(n)
    data = w.letters
    blocks = misplaced_small = misplaced_big = long_big = 0
    for start, (letter, count) in _runs_with_positions(data):
        blocks += 1
        if letter == 1 and start % 2 != 0:
            misplaced_small += 1
        if letter == b:
            if start % 2 != 1:
                misplaced_big += 1
            if count != 1:
                long_big += 1

    rng = random.Random(seed)
    transfer_even = transfer_odd = failures = tried = 0
    while tried < samples:
        i = rng.randrange(0, n - 4)
        j = rng.randrange(0, n - 4)
        if i == j:
            continue
        ell = 0
        while max(i, j) + ell < n - 2 and data[i + ell] == data[j + ell]:
            ell += 1
        if max(i, j) + ell >= n - 2:
            continue
        if data[i + ell] > data[j + ell]:
            i, j = j, i
        tried += 1
        small = Word._trusted(data[i : i + ell + 2])
        big = Word._trusted(data[j : j + ell + 2])
        if ell % 2 == 0:
            transfer_even += 1
            expect_less = {1: False, b: True}
        else:
            transfer_odd += 1
            expect_less = {1: True, b: False}
        for alpha in (1, b):
            beta = alphabet.complement(alpha)
            got_less = decode(small, alpha, beta) < decode(big, alpha, beta)
            if got_less != expect_less[alpha]:
                failures += 1
    return ParityLemmaReport(
        alphabet=alphabet,
        n=n,
        blocks=blocks,
        misplaced_small_blocks=misplaced_small,
        misplaced_big_blocks=misplaced_big,
        long_big_blocks=long_big,
        transfer_samples=tried,
        transfer_even=transfer_even,
        transfer_odd=transfer_odd,
        transfer_failures=failures,
    )


def _runs_with_positions(data: tuple[int, ...]):
    i = 0
    while i < len(data):
        j = i + 1
        while j < len(data) and data[j] == data[i]:
            j += 1
        yield i, (data[i], j - i)
        i = j


__all__ = [
    "CaseReport",
    "CaseSpec",
    "Classification",
    "LYNDON_CONSISTENT",
    "LyndonFamily",
    "ParityLemmaReport",
    "STANDARD_ALPHABETS",
    "VIOLATION_CONFIRMED",
    "WITNESS_NOT_FOUND",
    "case_table",
    "classify",
    "exhaustive_directive_search",
    "family_stream",
    "search_survivors",
    "standard_alphabets",
    "verify_alphabet",
    "verify_case",
    "verify_parity_lemmas",
]
