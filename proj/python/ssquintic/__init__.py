"""Superspecial plane quintics over finite fields."""

from ._core import (
    Error,
    InvalidArgument,
    InvariantViolation,
    PochhammerDivisionByZero,
    count_z8,
    count_z10,
    fixed_type_is_superspecial,
    g_poly_z8,
    g_poly_z10,
    hurwitz_st,
    is_prime,
    oracle,
    primes_in_range,
    run_cli,
    truncated_hg,
    z10_closed_form,
)

__all__ = [
    "Error",
    "InvalidArgument",
    "InvariantViolation",
    "PochhammerDivisionByZero",
    "count_z8",
    "count_z10",
    "fixed_type_is_superspecial",
    "g_poly_z8",
    "g_poly_z10",
    "hurwitz_st",
    "is_prime",
    "oracle",
    "primes_in_range",
    "run_cli",
    "truncated_hg",
    "z10_closed_form",
]
