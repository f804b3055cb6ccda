"""Piercing, illumination and spherical covering constructions."""

from ._spiky import (
    DimensionMismatch,
    DomainError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    VerificationError,
    covering_exponent,
    exponent_report,
    greedy_cover,
    illuminate,
    is_cap_body,
    kl_exponent,
    lower_bound,
    maximal_packing,
    pierce,
    positive_hull_full,
    run_cli,
    solve_alpha,
    verify_cover,
    verify_piercing,
)

__all__ = [
    "DimensionMismatch",
    "DomainError",
    "ParseError",
    "PreconditionError",
    "ResourceLimitError",
    "VerificationError",
    "covering_exponent",
    "exponent_report",
    "greedy_cover",
    "illuminate",
    "is_cap_body",
    "kl_exponent",
    "lower_bound",
    "maximal_packing",
    "pierce",
    "positive_hull_full",
    "run_cli",
    "solve_alpha",
    "verify_cover",
    "verify_piercing",
]
