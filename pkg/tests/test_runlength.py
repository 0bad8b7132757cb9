import pytest
from hypothesis import given, settings, strategies as st

from smoothwords import (
    ChainStop,
    DirectiveSequence,
    DomainError,
    OrderedAlphabet,
    Word,
    complement,
    decode,
    delta_chain,
    derivative,
    encode,
    is_r_smooth,
    is_smooth_factor,
    kolakoski,
    reverse,
    right_derivative,
    stream_from_directive,
    word,
)

A12 = OrderedAlphabet(1, 2)
A13 = OrderedAlphabet(1, 3)

TOWER_WORD = word("1333111333133311133313133311133313331113331")


class TestEncode:
    def test_golden(self):
        assert encode(word("13333133111")) == Word((1, 4, 1, 2, 3))

    def test_trivial(self):
        assert encode(word("2")) == word("1")
        assert encode(word("22112")) == word("221")
        assert encode(word("")) == word("")

    def test_counts_are_unbounded(self):
        assert encode(Word((7,) * 300)) == Word((300,))


class TestDecode:
    def test_examples(self):
        assert decode(Word((2, 1)), 1, 2) == word("112")
        assert decode(word("1"), 3, 1) == word("3")
        assert decode(Word((1, 4, 1, 2, 3)), 1, 3) == word("13333133111")

    def test_rejects_bad_input(self):
        with pytest.raises(DomainError):
            decode(Word((2, 2)), 1, 1)

    def test_letters_beyond_bytes(self):
        w = decode(Word((2, 1)), 300, 400)
        assert w == Word((300, 300, 400))
        assert encode(w) == Word((2, 1))

    @settings(max_examples=1000)
    @given(
        st.lists(st.integers(1, 9), min_size=0, max_size=64),
        st.sampled_from([(1, 2), (2, 1), (3, 1), (2, 5)]),
    )
    def test_round_trip(self, counts, letters):
        alpha, beta = letters
        u = Word(counts)
        assert encode(decode(u, alpha, beta)) == u


class TestEncodeLaws:
    @given(st.lists(st.sampled_from([1, 2]), max_size=40))
    def test_complement_invariance(self, xs):
        w = Word(xs)
        assert encode(w) == encode(complement(w, A12))

    @given(st.lists(st.integers(1, 4), max_size=40))
    def test_reversal_commutes(self, xs):
        w = Word(xs)
        assert encode(reverse(w)) == reverse(encode(w))

    @given(
        st.lists(st.integers(1, 9), min_size=1, max_size=40),
        st.sampled_from([(1, 2), (2, 1), (1, 3), (3, 1)]),
    )
    def test_mirror_rule(self, counts, letters):
        # reversing before decoding swaps the starting letter exactly when
        # the count word has even length
        alpha, other = letters
        w = Word(counts)
        beta = alpha if len(w) % 2 == 1 else other
        left = reverse(decode(w, alpha, other))
        right = decode(reverse(w), beta, alpha if beta == other else other)
        assert left == right


class TestDeltaChain:
    def test_golden_tower(self):
        chain = delta_chain(TOWER_WORD, A13)
        assert len(chain.levels) == 7
        assert chain.levels[6] == word("3")
        assert chain.terminal is ChainStop.SINGLE_LETTER
        assert chain.first_letters == word("1111313")

    def test_single_letter(self):
        chain = delta_chain(word("1"), A12)
        assert len(chain.levels) == 1
        assert chain.terminal is ChainStop.SINGLE_LETTER

    def test_hand_iteration(self):
        chain = delta_chain(word("112"), A12)
        assert [str(l) for l in chain.levels] == ["112", "21", "11", "2"]
        assert chain.terminal is ChainStop.SINGLE_LETTER

    def test_leaving_the_alphabet_is_recorded(self):
        chain = delta_chain(word("212212"), A12)
        assert chain.terminal is ChainStop.LEFT_ALPHABET
        assert any(x not in A12 for x in chain.levels[-1])

    def test_empty_input(self):
        chain = delta_chain(word(""), A12)
        assert chain.terminal is ChainStop.EMPTY
        assert chain.levels == (word(""),)

    def test_consecutive_levels_encode(self):
        chain = delta_chain(TOWER_WORD, A13)
        for lower, upper in zip(chain.levels, chain.levels[1:]):
            assert encode(lower) == upper


class TestRightDerivative:
    def test_golden_chain(self):
        w = word("112112212")
        d1 = right_derivative(w, A12)
        d2 = right_derivative(d1, A12)
        d3 = right_derivative(d2, A12)
        assert (str(d1), str(d2), str(d3)) == ("21221", "112", "2")

    def test_single_small_letter(self):
        assert right_derivative(word("2"), A12) == word("")

    def test_kept_whole_when_coding_ends_high(self):
        # coding of 1122 is 22; it ends with the top letter so nothing is trimmed
        assert right_derivative(word("1122"), A12) == word("22")

    def test_overlong_final_block_rejected(self):
        with pytest.raises(DomainError):
            right_derivative(word("111"), A12)


def smooth_prefixes_of_length(alphabet, n, directive_depth=8):
    """Oracle: every length-n prefix of a smooth word, by enumerating all
    directive prefixes of a fixed depth continued with the top letter."""
    a, b = alphabet.a, alphabet.b
    out = set()
    for code in range(2**directive_depth):
        pre = Word(
            tuple(b if (code >> i) & 1 else a for i in range(directive_depth))
        )
        stream = stream_from_directive(DirectiveSequence(pre, Word((b,))), alphabet)
        out.add(stream.take(n))
    return out


class TestRSmooth:
    def test_golden(self):
        assert is_r_smooth(word("112112212"), A12)

    def test_single_letters(self):
        assert is_r_smooth(word("1"), A12)
        assert is_r_smooth(word("2"), A12)

    def test_exhaustive_against_enumeration_oracle(self):
        oracle = smooth_prefixes_of_length(A12, 6)
        assert word("212212") in oracle  # the spec's sample word is a smooth prefix
        for code in range(2**6):
            w = Word(tuple(2 if (code >> i) & 1 else 1 for i in range(6)))
            assert is_r_smooth(w, A12) == (w in oracle), str(w)

    def test_prefix_closed(self):
        w = kolakoski(2, 1).take(64)
        assert is_r_smooth(w, A12)
        for i in range(1, len(w)):
            assert is_r_smooth(w[:i], A12)


class TestDerivative:
    def test_trims_both_boundary_blocks(self):
        # coding of 2112 is 121; both end letters are below 2 and drop off
        assert derivative(word("2112"), A12) == word("2")

    def test_trims_right_only(self):
        # coding of 22112 is 221; only the trailing 1 drops off
        assert derivative(word("22112"), A12) == word("22")

    def test_single_small_coding(self):
        assert derivative(word("1"), A12) == word("")
        assert derivative(word("333"), OrderedAlphabet(3, 5)) == word("")

    def test_kept_whole_between_top_letters(self):
        assert derivative(word("1122"), A12) == word("22")
        assert derivative(word("2211"), A12) == word("22")


class TestSmoothFactor:
    def test_empty_and_golden(self):
        assert is_smooth_factor(word(""), A12)
        assert not is_smooth_factor(word("111"), A12)

    def test_every_factor_of_a_fixed_point_prefix(self):
        w = kolakoski(2, 1).take(100)
        data = w.letters
        for i in range(len(data)):
            for j in range(i + 1, len(data) + 1):
                assert is_smooth_factor(Word(data[i:j]), A12)

    def test_factor_closure_on_long_prefix(self):
        w = kolakoski(2, 1).take(200)
        data = w.letters
        for i in range(len(data)):
            for j in range(i + 1, len(data) + 1):
                assert is_smooth_factor(Word(data[i:j]), A12)
