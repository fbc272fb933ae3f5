"""Constant-dimension subspace code toolkit.

Thin wrapper over the compiled extension: exact bound evaluation, the golden
comparison table, construction export, and distance verification.
"""

try:
    from ._cdcodes import (
        construct_text,
        family_size,
        gaussian_binomial,
        lower_bound,
        rank_distribution,
        ratio_report,
        table1,
        verify_construction,
        verify_text,
    )
except ImportError:  # extension built out-of-tree (plain CMake build)
    from _cdcodes import (
        construct_text,
        family_size,
        gaussian_binomial,
        lower_bound,
        rank_distribution,
        ratio_report,
        table1,
        verify_construction,
        verify_text,
    )

__all__ = [
    "construct_text",
    "family_size",
    "gaussian_binomial",
    "lower_bound",
    "rank_distribution",
    "ratio_report",
    "table1",
    "verify_construction",
    "verify_text",
]
