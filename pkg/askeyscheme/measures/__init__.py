"""
    Orthogonality measures of the polynomial families, with inner products, norms and orthogonality residuals.

    Suggested usage:

    >>> from askeyscheme import measures
    >>> round(measures.norm("charlier", {"a": 1.0}, 2).real, 5)
    5.43656

    Measures come in six classes (see :obj:`MeasureKind`): continuous weights, finite and infinite discrete masses,
    bilateral masses, Jackson q-integrals and continuous weights with finitely many point masses.
    Numerical settings are collected in a :class:`QuadratureConfig`, with defaults shipped as package data.
"""

from __future__ import annotations

from .err import MeasureKeyError, MeasureValueError, QuadratureError
from .config import QuadratureConfig
from .quadrature import gauss_legendre, integrate, integrate_unbounded, sum_finite, sum_infinite, sum_bilateral
from .spec import (MeasureKind, MeasureKinds, WEIGHT_FLOOR, MeasureSpec, ContinuousMeasure, DiscreteMeasure,
                   BilateralMeasure, JacksonMeasure, MixedMeasure)
from .orthogonality import family_measure, gram_matrix, inner_product, norm, orthogonality_residual

__all__ = [
    "MeasureKeyError", "MeasureValueError", "QuadratureError",
    "QuadratureConfig",
    "gauss_legendre", "integrate", "integrate_unbounded", "sum_finite", "sum_infinite", "sum_bilateral",
    "MeasureKind", "MeasureKinds", "WEIGHT_FLOOR", "MeasureSpec", "ContinuousMeasure", "DiscreteMeasure",
    "BilateralMeasure", "JacksonMeasure", "MixedMeasure",
    "family_measure", "gram_matrix", "inner_product", "norm", "orthogonality_residual",
]
