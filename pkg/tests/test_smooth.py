import random

import pytest
from hypothesis import given, strategies as st

from smoothwords import (
    DirectiveSequence,
    DomainError,
    OrderedAlphabet,
    UnsupportedAlphabetError,
    Word,
    decode,
    delta1_inverse_stream,
    encode,
    kolakoski,
    maximal_word,
    minimal_word,
    phi,
    phi_inverse_prefix,
    stream_from_directive,
    word,
)

A12 = OrderedAlphabet(1, 2)
A13 = OrderedAlphabet(1, 3)
A24 = OrderedAlphabet(2, 4)

TOWER_WORD = word("1333111333133311133313133311133313331113331")

K21_40 = "2211212212211211221211212211211212212211"
K23_20 = "22332223332233223332"
K31_20 = "33311133313133311133"


class TestPhi:
    def test_golden(self):
        assert phi(TOWER_WORD, A13) == word("1111313")

    def test_single_letter(self):
        assert phi(word("3"), A13) == word("3")

    def test_fixed_point_prefix_starts_with_top_letter(self):
        w = kolakoski(2, 1).take(40)
        assert str(phi(w, A12)).startswith("22")

    def test_rejects_non_smooth_prefix(self):
        with pytest.raises(DomainError):
            phi(word("111"), A12)


class TestPhiInverse:
    def test_golden_prefix(self):
        assert phi_inverse_prefix(word("1221"), A12) == word("1122")

    def test_base_case(self):
        assert phi_inverse_prefix(word("2"), A12) == word("2")

    def test_two_letter_directive(self):
        assert phi_inverse_prefix(word("13"), A13) == word("111")

    def test_empty_rejected(self):
        with pytest.raises(DomainError):
            phi_inverse_prefix(word(""), A12)

    def test_out_of_alphabet_final_letter(self):
        # a directive may end outside the alphabet; the letter only ever
        # serves as a run count
        assert phi_inverse_prefix(Word((1, 3, 2)), A13) == word("111333")

    def test_out_of_alphabet_interior_letter_rejected(self):
        with pytest.raises(DomainError):
            phi_inverse_prefix(Word((2, 3, 3)), A13)

    @given(st.integers(0, 2**7 - 1), st.integers(1, 8))
    def test_bijection_round_trip(self, code, k):
        # directives ending in the top letter are exactly recoverable; a
        # trailing 1 collapses into the level above and cannot be
        d = tuple(2 if (code >> i) & 1 else 1 for i in range(k - 1)) + (2,)
        w = phi_inverse_prefix(Word(d), A12)
        assert phi(w, A12) == Word(d)


class TestKolakoski:
    def test_goldens(self):
        assert str(kolakoski(2, 1).take(40)) == K21_40
        assert str(kolakoski(2, 3).take(20)) == K23_20
        assert str(kolakoski(3, 1).take(20)) == K31_20

    def test_fixed_point_property(self):
        # also exercises the self-referential start when the word begins
        # with the letter 1 (the first run describes itself)
        for first, second in ((2, 1), (1, 2), (2, 3), (3, 1)):
            s = kolakoski(first, second)
            for n in (1, 2, 3, 17, 100, 1000, 10_000):
                w = s.take(n)
                counts = encode(w)
                trimmed = counts[:-1] if len(counts) else counts
                assert trimmed == w[: len(trimmed)]

    def test_rejects_equal_letters(self):
        with pytest.raises(DomainError):
            kolakoski(2, 2)


class TestStreams:
    def test_directive_stream_matches_finite_expansion(self):
        d = DirectiveSequence.parse("2:4")
        s = stream_from_directive(d, A24)
        assert s.take(1) == word("2")
        for k in range(2, 9):
            w = phi_inverse_prefix(Word(d.prefix(k)), A24)
            assert s.take(len(w)) == w

    def test_incremental_tower_equals_one_shot_expansion(self):
        # the stream appends per-level increments; it must agree with the
        # from-scratch expansion at every directive prefix length
        rng = random.Random(3)
        for alphabet in (A12, A13, A24, OrderedAlphabet(2, 5), OrderedAlphabet(1, 6)):
            a, b = alphabet.a, alphabet.b
            for _ in range(10):
                pre = Word([rng.choice((a, b)) for _ in range(rng.randint(0, 6))])
                per = [rng.choice((a, b)) for _ in range(rng.randint(1, 3))]
                per[rng.randrange(len(per))] = b
                d = DirectiveSequence(pre, Word(per))
                s = stream_from_directive(d, alphabet)
                for k in range(1, 12):
                    w = phi_inverse_prefix(Word(d.prefix(k)), alphabet)
                    assert s.take(len(w)) == w, (str(alphabet), str(d), k)

    def test_stability_under_granularity(self):
        for make in (
            lambda: kolakoski(2, 1),
            lambda: stream_from_directive(DirectiveSequence.parse(":13"), A13),
            lambda: delta1_inverse_stream(minimal_word(A13)),
        ):
            one = make().take(500)
            piecemeal = make()
            rng = random.Random(7)
            n = 0
            while n < 500:
                n = min(500, n + rng.randint(1, 60))
                assert piecemeal.take(n) == one[:n]

    def test_take_prefix_of_longer_take(self):
        s = minimal_word(A24)
        w1 = s.take(100)
        w2 = s.take(700)
        assert w2[:100] == w1

    def test_all_ones_directive_cannot_expand(self):
        s = stream_from_directive(DirectiveSequence.parse(":1"), A12)
        with pytest.raises(DomainError):
            s.take(5)


class TestExtremalWords:
    def test_even_minimal_directive(self):
        s = minimal_word(A24)
        assert s.directive == DirectiveSequence(word("2"), word("4"))
        assert str(s.take(8)) == "22224444"

    def test_odd_minimal_directive(self):
        s = minimal_word(A13)
        assert s.directive == DirectiveSequence(word(""), word("13"))

    def test_even_maximal_prefix(self):
        assert str(maximal_word(A24).take(2)) == "44"

    def test_mixed_parity_unsupported(self):
        with pytest.raises(UnsupportedAlphabetError):
            minimal_word(OrderedAlphabet(1, 2))
        with pytest.raises(UnsupportedAlphabetError):
            maximal_word(OrderedAlphabet(2, 3))

    def test_minimality_at_desk_scale(self):
        # periods get at least one top letter so the pure expansion grows
        rng = random.Random(0)
        for alphabet in (A24, A13):
            a, b = alphabet.a, alphabet.b
            m = minimal_word(alphabet).take(1000)
            for _ in range(200):
                pre = Word([a] + [rng.choice((a, b)) for _ in range(7)])
                per = [rng.choice((a, b)) for _ in range(4)]
                per[rng.randrange(4)] = b
                rival = stream_from_directive(
                    DirectiveSequence(pre, Word(per)), alphabet
                ).take(1000)
                assert m <= rival


class TestDelta1InverseStream:
    def test_matches_decode_of_source_prefix(self):
        m = minimal_word(A13)
        s = delta1_inverse_stream(minimal_word(A13))
        expanded = decode(m.take(100), 1, 3)
        assert s.take(len(expanded) - 3) == expanded[:-3]

    def test_first_letters(self):
        s = delta1_inverse_stream(minimal_word(A13))
        assert str(s.take(4)) == "1313"
        assert decode(word("13"), 1, 3) == word("1333")

    def test_requires_letter_one(self):
        with pytest.raises(DomainError):
            delta1_inverse_stream(minimal_word(A24))


def tower(w: Word) -> list[Word]:
    levels = [w]
    while len(levels[-1]) > 1:
        levels.append(encode(levels[-1]))
    return levels


class TestConcatenationRule:
    def test_towers_concatenate_when_boundaries_disagree(self):
        # pairs u,v cut from a smooth word; when the last letter of each
        # coding level of u differs from the first letter of the same level
        # of v (and neither level is the word "1"), the towers concatenate
        w = minimal_word(A24).take(400)
        checked = 0
        for i, j in ((10, 30), (16, 48), (40, 120), (100, 260), (8, 20)):
            u, v = w[:i], w[i:j]
            tu, tv = tower(u), tower(v)
            m = -1
            for lev in range(min(len(tu), len(tv))):
                lu, lv = tu[lev], tv[lev]
                if lu == word("1") or lv == word("1"):
                    break
                if lu[len(lu) - 1] == lv[0]:
                    break
                m = lev
            for lev in range(m + 1):
                assert tower(u + v)[lev] == tu[lev] + tv[lev]
            if m >= 1:
                checked += 1
        assert checked >= 2
