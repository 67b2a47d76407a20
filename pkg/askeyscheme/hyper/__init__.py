"""
    Evaluation of generalized hypergeometric series :math:`{}_rF_s` and basic hypergeometric series
    :math:`{}_r\\phi_s` (full, terminating and partial sums), and a catalog of summation, transformation
    and confluence identities with a checker.

    Suggested usage:

    >>> from askeyscheme import hyper
    >>> hyper.eval_series(hyper.SeriesSpec.F([-2, 1], [1], 0.5))
    (0.25+0j)
    >>> hyper.check_identity("q_binomial_theorem", {"a": 0.3, "z": 0.4, "q": 0.5}).passed
    True
"""

from __future__ import annotations

from .err import DivergentError, IdentityKeyError, IdentityValueError
from .series import (SeriesKind, SeriesSpec, DEFAULT_SERIES_TOL, DEFAULT_MAX_TERMS, DEFAULT_PRECISION_TOL,
                     precision, eval_series, eval_partial, fseries, phiseries)
from .identities import (Exactness, IdentityDescriptor, IdentityReport, check_identity, check_confluence,
                         sample_checks, residual, is_monotone)
from . import identities

__all__ = [
    "DivergentError", "IdentityKeyError", "IdentityValueError",
    "SeriesKind", "SeriesSpec", "DEFAULT_SERIES_TOL", "DEFAULT_MAX_TERMS", "DEFAULT_PRECISION_TOL",
    "precision", "eval_series", "eval_partial", "fseries", "phiseries",
    "Exactness", "IdentityDescriptor", "IdentityReport", "check_identity", "check_confluence",
    "sample_checks", "residual", "is_monotone", "identities",
]
