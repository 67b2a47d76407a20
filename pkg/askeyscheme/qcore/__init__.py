"""
    Foundational scalar special functions: shifted factorials, q-shifted factorials,
    gamma and q-gamma functions, q-binomial coefficients, q-exponential, q-trigonometric
    and Jackson q-Bessel functions, the q-derivative and the Jackson q-integral.

    Suggested usage:

    >>> from askeyscheme import qcore
    >>> qcore.qpochhammer(0.5, 0.5, 3)
    (0.328125+0j)
    >>> qcore.qbinomial(4, 2, 0.5)
    (2.1875+0j)

    All functions are pure and operate on binary64 :obj:`complex` values. Bases are validated
    through :class:`QBase`, which admits only :math:`0 < q < 1`.
"""

from __future__ import annotations

from .base import (Number, QBase, QLike, INFINITY, ExtendedCount, to_complex, qvalue,
                   is_nonpositive_integer, as_nonnegative_integer, binom2)
from .err import NumericError, PoleError, DomainError, ConvergenceError, NumericOverflowError, PrecisionError
from .factorials import (DEFAULT_TOL, InfiniteProduct, pochhammer, pochhammers, qpochhammer, qpochhammers,
                         qpochhammer_inf, qpochhammer_complex, truncation_index, qnumber,
                         VANISHING_TOL, log_qpochhammer_ratio, qpochhammer_ratio, exp_checked)
from .gamma import gamma, rgamma, log_abs_gamma, qgamma, qbinomial
from .functions import QTrigKind, QBesselKind, qexp_small, qexp_big, qtrig, qbessel
from .calculus import ScalarFunction, JacksonSum, qderivative, jackson_integral, jackson_integral_between

__all__ = [
    "Number", "QBase", "QLike", "INFINITY", "ExtendedCount", "to_complex", "qvalue",
    "is_nonpositive_integer", "as_nonnegative_integer", "binom2",
    "NumericError", "PoleError", "DomainError", "ConvergenceError", "NumericOverflowError", "PrecisionError",
    "DEFAULT_TOL", "InfiniteProduct", "pochhammer", "pochhammers", "qpochhammer", "qpochhammers",
    "qpochhammer_inf", "qpochhammer_complex", "truncation_index", "qnumber",
    "VANISHING_TOL", "log_qpochhammer_ratio", "qpochhammer_ratio", "exp_checked",
    "gamma", "rgamma", "log_abs_gamma", "qgamma", "qbinomial",
    "QTrigKind", "QBesselKind", "qexp_small", "qexp_big", "qtrig", "qbessel",
    "ScalarFunction", "JacksonSum", "qderivative", "jackson_integral", "jackson_integral_between",
]
