"""Black-peg Mastermind codebreaker with a linear query budget."""

from ._core import (
    IterationCapExceeded,
    ProtocolViolation,
    UsageError,
    bench,
    black_pegs,
    combine3,
    decode3,
    signed_black_pegs,
    solve,
    solve_permutation,
    trial_seed,
    white_pegs,
)

__all__ = [
    "IterationCapExceeded",
    "ProtocolViolation",
    "UsageError",
    "bench",
    "black_pegs",
    "combine3",
    "decode3",
    "signed_black_pegs",
    "solve",
    "solve_permutation",
    "trial_seed",
    "white_pegs",
]
