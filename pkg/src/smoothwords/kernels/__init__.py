"""Kernel dispatch: compiled Cython routines with a pure-Python fallback.

The compiled module handles byte-encoded words (letters 1..255), which covers
every hot path; anything else is routed to the pure implementations. Set
``SMOOTHWORDS_PURE=1`` to force the fallback, e.g. for benchmarking.
"""

import os

from . import _py

try:
    from . import _ck
except ImportError:
    _ck = None

if os.environ.get("SMOOTHWORDS_PURE"):
    _ck = None

HAVE_COMPILED = _ck is not None

_BYTES = (bytes, bytearray)


def run_lengths(word):
    if _ck is not None and isinstance(word, _BYTES):
        return _ck.run_lengths(word)
    return _py.run_lengths(word)


def expand_runs(counts, alpha, beta):
    if _ck is not None and 0 < alpha < 256 and 0 < beta < 256:
        return _ck.expand_runs(counts, alpha, beta)
    return _py.expand_runs(counts, alpha, beta)


def kolakoski_extend(buf, runs_read, n, first, second):
    if _ck is not None and isinstance(buf, bytearray):
        return _ck.kolakoski_extend(buf, runs_read, n, first, second)
    return _py.kolakoski_extend(buf, runs_read, n, first, second)


def first_violation(word, n):
    if _ck is not None and isinstance(word, _BYTES):
        return _ck.first_violation(word, n)
    return _py.first_violation(word, n)
