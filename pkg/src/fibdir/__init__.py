"""Golden-ratio numeration, morphic sequences and their Dirichlet series."""

from .golden import BETA, SQRT5, GoldenNum, beta_pow, gr_arith, gr_conj, gr_sign, gr_to_float
from .sequences import SeqId, delta_exact, fib_word_stream, d_stream, frac_beta, seq_term
from .zeckendorf import (
    ZeckWord,
    classify_d,
    last_bit_e,
    tau_shift,
    trailing_zeros,
    zeck_decode,
    zeck_encode,
    zeck_successor,
)

__version__ = "0.1.0"

__all__ = [
    "BETA", "SQRT5", "GoldenNum", "beta_pow", "gr_arith", "gr_conj", "gr_sign", "gr_to_float",
    "SeqId", "delta_exact", "fib_word_stream", "d_stream", "frac_beta", "seq_term",
    "ZeckWord", "classify_d", "last_bit_e", "tau_shift", "trailing_zeros", "zeck_decode",
    "zeck_encode", "zeck_successor",
]
