"""Compiled and pure kernels must agree everywhere the compiled path applies."""

import random

import pytest

from smoothwords.kernels import _ck, _py


def random_runs_word(rng, n):
    out = bytearray()
    letter = rng.choice((1, 2))
    while len(out) < n:
        out += bytes([letter]) * rng.randint(1, 5)
        letter = 3 - letter
    return bytes(out[:n])


needs_compiled = pytest.mark.skipif(_ck is None, reason="compiled kernels unavailable")


@needs_compiled
def test_run_lengths_parity():
    rng = random.Random(0)
    for _ in range(200):
        w = random_runs_word(rng, rng.randint(0, 200))
        assert _ck.run_lengths(w) == _py.run_lengths(w)


@needs_compiled
def test_expand_runs_parity():
    rng = random.Random(1)
    for _ in range(200):
        counts = bytes(rng.randint(1, 9) for _ in range(rng.randint(0, 50)))
        for alpha, beta in ((1, 2), (2, 1), (3, 1)):
            assert _ck.expand_runs(counts, alpha, beta) == _py.expand_runs(
                counts, alpha, beta
            )
        as_list = list(counts)
        assert _ck.expand_runs(as_list, 2, 5) == _py.expand_runs(as_list, 2, 5)


@needs_compiled
def test_kolakoski_extend_parity():
    for first, second in ((2, 1), (1, 2), (2, 3), (3, 1)):
        b1, b2 = bytearray(), bytearray()
        j1 = _ck.kolakoski_extend(b1, 0, 500, first, second)
        j2 = _py.kolakoski_extend(b2, 0, 500, first, second)
        assert (j1, bytes(b1)) == (j2, bytes(b2))
        # growing in stages matches a single shot
        j1 = _ck.kolakoski_extend(b1, j1, 900, first, second)
        j2 = _py.kolakoski_extend(b2, j2, 900, first, second)
        assert (j1, bytes(b1)) == (j2, bytes(b2))


@needs_compiled
def test_first_violation_parity():
    rng = random.Random(2)
    for _ in range(300):
        w = bytes(rng.choice((1, 2)) for _ in range(rng.randint(2, 120)))
        n = rng.randint(2, len(w))
        assert _ck.first_violation(w, n) == _py.first_violation(w, n)


def test_pure_generic_sequences():
    # the pure kernels also serve tuple words with letters beyond bytes
    w = (300, 300, 1, 1, 1)
    assert _py.run_lengths(w) == [2, 3]
    assert _py.expand_runs((2, 1), 300, 400) == (300, 300, 400)
    assert _py.first_violation((2, 1, 2), 3) == (1, 1)
