"""Run-length calculus on 2-letter numerical alphabets.

Finite and lazily infinite words, the block-coding operator and its
pseudo-inverses, smooth words and their directive streams, generalized
Kolakoski fixed points, extremal words, Lyndon tests and factorizations, and
a machine check of the classification of infinite smooth Lyndon words.
"""

from .core import (
    EMPTY,
    DomainError,
    Letter,
    OrderedAlphabet,
    Parity,
    Run,
    UnsupportedAlphabetError,
    Word,
    complement,
    factors_of_length,
    find_factor,
    lex_compare,
    reverse,
    run,
    word,
)
from .kernels import HAVE_COMPILED
from .runlength import (
    ChainStop,
    DeltaChain,
    decode,
    delta_chain,
    derivative,
    encode,
    is_r_smooth,
    is_smooth_factor,
    right_derivative,
)
from .smooth import (
    DirectiveSequence,
    PrefixStream,
    delta1_inverse_stream,
    kolakoski,
    maximal_word,
    minimal_word,
    phi,
    phi_inverse_prefix,
    stream_from_directive,
)
from .lyndon import (
    ConsistentUpTo,
    LyndonFactorization,
    LyndonVerdict,
    Violation,
    check_lyndon_prefix,
    concat_lyndon,
    duval_factorize,
    is_lyndon,
    stream_factorize,
    violating_suffix,
)

__version__ = "0.1.0"

__all__ = [
    "ChainStop",
    "ConsistentUpTo",
    "DeltaChain",
    "DirectiveSequence",
    "DomainError",
    "EMPTY",
    "HAVE_COMPILED",
    "Letter",
    "LyndonFactorization",
    "LyndonVerdict",
    "OrderedAlphabet",
    "Parity",
    "PrefixStream",
    "Run",
    "UnsupportedAlphabetError",
    "Violation",
    "Word",
    "check_lyndon_prefix",
    "complement",
    "concat_lyndon",
    "decode",
    "delta1_inverse_stream",
    "delta_chain",
    "derivative",
    "duval_factorize",
    "encode",
    "factors_of_length",
    "find_factor",
    "is_lyndon",
    "is_r_smooth",
    "is_smooth_factor",
    "kolakoski",
    "lex_compare",
    "maximal_word",
    "minimal_word",
    "phi",
    "phi_inverse_prefix",
    "reverse",
    "right_derivative",
    "run",
    "stream_factorize",
    "stream_from_directive",
    "violating_suffix",
    "word",
]
