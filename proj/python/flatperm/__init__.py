"""Exact distribution of the vincular pattern 13-2 over flattened permutations."""

from ._flatperm import (
    Error,
    IdentityViolation,
    LimitExceeded,
    appendix_c_witness,
    avoider_count,
    average_occurrences,
    b_poly,
    c_table,
    coeff_g,
    count_13_2,
    distribution,
    flatten,
    g1k_poly,
    g_poly,
    lemma21_pair,
    max_occurrences,
    max_pattern_perm,
    min_length_for,
    p_poly,
    rational_gf,
    standard_cycle_form,
    verify,
)

__all__ = [
    "Error",
    "IdentityViolation",
    "LimitExceeded",
    "appendix_c_witness",
    "avoider_count",
    "average_occurrences",
    "b_poly",
    "c_table",
    "coeff_g",
    "count_13_2",
    "distribution",
    "flatten",
    "g1k_poly",
    "g_poly",
    "lemma21_pair",
    "max_occurrences",
    "max_pattern_perm",
    "min_length_for",
    "p_poly",
    "rational_gf",
    "standard_cycle_form",
    "verify",
]
