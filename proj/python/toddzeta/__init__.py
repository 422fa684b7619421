"""Exact Todd power series of 2D lattice cones, generalized Dedekind sums,
and zeta values of real quadratic irrationalities at nonpositive integers.

Exact rationals are returned as :class:`fractions.Fraction`.
"""

from ._core import (
    check_reciprocity,
    classical_dedekind,
    classify,
    dedekind,
    error_term,
    fit_zeta,
    ncf_eval,
    ncf_expand,
    todd,
    todd_str,
    zeta,
    zeta_zero,
)

__all__ = [
    "check_reciprocity",
    "classical_dedekind",
    "classify",
    "dedekind",
    "error_term",
    "fit_zeta",
    "ncf_eval",
    "ncf_expand",
    "todd",
    "todd_str",
    "zeta",
    "zeta_zero",
]
