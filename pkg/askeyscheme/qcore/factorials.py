"""
    Shifted factorials :math:`(a)_k` and q-shifted factorials :math:`(a;q)_k`,
    including negative ``k`` and the infinite product :math:`(a;q)_\\infty`.

    >>> from askeyscheme.qcore import qpochhammer, INFINITY
    >>> qpochhammer(0.5, 0.5, 3)
    (0.328125+0j)
    >>> qpochhammer(0.3, 0.5, -1)
    (2.5+0j)
    >>> qpochhammer(0, 0.5, INFINITY)
    (1+0j)
"""

from __future__ import annotations

import cmath
import math
import sys
from typing import Iterable, NamedTuple, Optional, Sequence
from typing_extensions import Final
from typing_validation import validate
import numpy as np
import numpy.typing as npt

from .base import Number, QLike, ExtendedCount, INFINITY, to_complex, qvalue
from .err import DomainError, PoleError, NumericOverflowError

DEFAULT_TOL: Final[float] = 1e-16
"""
    Default truncation tolerance for infinite products.
"""

PRODUCT_GUARD: Final[int] = 8
"""
    Number of extra factors taken beyond the truncation index of an infinite product.
"""

def pochhammer(a: Number, k: int) -> complex:
    """
        Shifted factorial :math:`(a)_k = a(a+1)\\cdots(a+k-1)`, with :math:`(a)_0 = 1`.

        >>> pochhammer(2, 3)
        (24+0j)

        :param a: the parameter
        :type a: :obj:`Number`
        :param k: the number of factors
        :type k: non-negative :obj:`int`

        :raises ValueError: if ``k`` is negative
    """
    validate(k, int)
    if k < 0:
        raise ValueError(f"Shifted factorial requires k >= 0, found k = {k}.")
    a = to_complex(a, "parameter")
    res = 1+0j
    for j in range(k):
        res *= a+j
    return res

def pochhammers(params: Iterable[Number], k: int) -> complex:
    """ Product :math:`(a_1, \\ldots, a_r)_k` of shifted factorials. """
    res = 1+0j
    for a in params:
        res *= pochhammer(a, k)
    return res


class InfiniteProduct(NamedTuple):
    """
        Result of a truncated infinite product :math:`(a;q)_\\infty`.
    """

    value: complex
    """ The truncated product. """

    terms: int
    """ The number of factors taken. """

    bound: float
    """ Bound on the relative truncation error, :math:`|a|q^K/(1-q)` with ``K = terms``. """


def truncation_index(a: Number, q: QLike, tol: float = DEFAULT_TOL) -> int:
    """
        Truncation index :math:`K = \\lceil \\log(\\text{tol}/\\max(1,|a|))/\\log q \\rceil + 8`
        for the infinite product :math:`(a;q)_\\infty`, so that :math:`|a|q^K < \\text{tol}`.
    """
    qf = qvalue(q)
    scale = max(1.0, abs(complex(a)))
    return max(0, math.ceil(math.log(tol/scale)/math.log(qf))) + PRODUCT_GUARD

def qpochhammer_inf(a: Number, q: QLike, tol: float = DEFAULT_TOL) -> InfiniteProduct:
    """
        Infinite product :math:`(a;q)_\\infty = \\prod_{k \\geq 0}(1-aq^k)`, truncated
        once the factor deviation :math:`|a|q^K` drops below ``tol``.

        >>> qpochhammer_inf(0, 0.5).value
        (1+0j)

        :param a: the parameter
        :type a: :obj:`Number`
        :param q: the base
        :type q: :obj:`QLike`
        :param tol: truncation tolerance
        :type tol: :obj:`float`, *optional*
    """
    validate(tol, float)
    a = to_complex(a, "parameter")
    qf = qvalue(q)
    terms = truncation_index(a, qf, tol)
    res = 1+0j
    x = a
    for _ in range(terms):
        res *= 1-x
        x *= qf
    return InfiniteProduct(res, terms, abs(x)/(1-qf))

def qpochhammer(a: Number, q: QLike, k: ExtendedCount, tol: float = DEFAULT_TOL) -> complex:
    """
        q-Shifted factorial :math:`(a;q)_k`:

        - for ``k >= 0``, the finite product :math:`(1-a)(1-aq)\\cdots(1-aq^{k-1})`;
        - for ``k < 0``, the reciprocal :math:`1/((1-aq^{-1})\\cdots(1-aq^{k}))`;
        - for ``k = INFINITY``, the truncated infinite product (see :func:`qpochhammer_inf`).

        >>> qpochhammer(0.5, 0.5, 3)
        (0.328125+0j)

        :param a: the parameter
        :type a: :obj:`Number`
        :param q: the base
        :type q: :obj:`QLike`
        :param k: the number of factors, or :obj:`INFINITY`
        :type k: :obj:`ExtendedCount`
        :param tol: truncation tolerance for the infinite case
        :type tol: :obj:`float`, *optional*

        :raises PoleError: if a negative-``k`` denominator factor vanishes
    """
    if k is INFINITY:
        return qpochhammer_inf(a, q, tol).value
    validate(k, int)
    a = to_complex(a, "parameter")
    qf = qvalue(q)
    assert isinstance(k, int)
    if k >= 0:
        res = 1+0j
        x = a
        for _ in range(k):
            res *= 1-x
            x *= qf
        return res
    den = 1+0j
    for j in range(1, -k+1):
        factor = 1-a*qf**(-j)
        if abs(factor) <= 1e-14*max(1.0, abs(a)*qf**(-j)):
            den = 0j
            break
        den *= factor
    if den == 0:
        raise PoleError(f"q-Shifted factorial ({a!r}; {qf!r})_{k} has a vanishing denominator.")
    return 1/den

def qpochhammers(params: Iterable[Number], q: QLike, k: ExtendedCount, tol: float = DEFAULT_TOL) -> complex:
    """ Product :math:`(a_1, \\ldots, a_r; q)_k` of q-shifted factorials. """
    res = 1+0j
    for a in params:
        res *= qpochhammer(a, q, k, tol)
    return res

def qpochhammer_complex(a: Number, q: QLike, lam: Number, tol: float = DEFAULT_TOL) -> complex:
    """
        q-Shifted factorial :math:`(a;q)_\\lambda = (a;q)_\\infty/(aq^\\lambda;q)_\\infty` for complex
        :math:`\\lambda`, with the principal value of :math:`q^\\lambda`.
        Only real :math:`a > 0` is supported: no branch is chosen for complex :math:`a`.

        :raises DomainError: if ``a`` is not real and positive
        :raises PoleError: if :math:`(aq^\\lambda;q)_\\infty` vanishes
    """
    a = to_complex(a, "parameter")
    if a.imag != 0 or a.real <= 0:
        raise DomainError("Complex-order q-shifted factorials are only supported for real a > 0.")
    qf = qvalue(q)
    shifted = a*complex(qf)**complex(lam)
    try:
        return qpochhammer_ratio([a], [shifted], qf, tol)
    except PoleError as e:
        raise PoleError(f"(a q^lambda; q)_inf vanishes for a = {a!r}, lambda = {lam!r}.") from e

VANISHING_TOL: Final[float] = 1e-14
"""
    Relative tolerance below which a product factor :math:`1-aq^k` counts as vanishing.
"""

_LOG_MAX: Final[float] = math.log(sys.float_info.max)

def _log_factors(a: complex, powers: npt.NDArray[np.float64]) -> Optional[npt.NDArray[np.complex128]]:
    x = a*powers
    if np.any(np.abs(1-x) <= VANISHING_TOL*np.maximum(1.0, np.abs(x))):
        return None
    if a.imag == 0 and a.real < 1:
        return np.log1p(-x.real).astype(np.complex128)
    return np.log(1-x)

def log_qpochhammer_ratio(nums: Sequence[Number], dens: Sequence[Number], q: QLike,
                          tol: float = DEFAULT_TOL) -> complex:
    """
        Logarithm of the ratio of infinite products

        .. math::

            \\frac{(a_1, \\ldots, a_r;q)_\\infty}{(b_1, \\ldots, b_s;q)_\\infty}
            = \\prod_{k \\geq 0} \\frac{(1-a_1q^k)\\cdots(1-a_rq^k)}{(1-b_1q^k)\\cdots(1-b_sq^k)},

        summed factor by factor. Numerator and denominator underflow separately as :math:`q \\to 1`,
        while their ratio stays finite. The imaginary part carries the sign, a multiple of :math:`\\pi` for real parameters.
        Returns :math:`-\\infty` if a numerator factor vanishes.

        >>> log_qpochhammer_ratio([0.5], [0.5], 0.5)
        0j

        :param nums: the numerator parameters :math:`a_1, \\ldots, a_r`
        :type nums: :obj:`~typing.Sequence` of :obj:`Number`
        :param dens: the denominator parameters :math:`b_1, \\ldots, b_s`
        :type dens: :obj:`~typing.Sequence` of :obj:`Number`
        :param q: the base
        :type q: :obj:`QLike`
        :param tol: truncation tolerance
        :type tol: :obj:`float`, *optional*

        :raises PoleError: if a denominator factor vanishes
    """
    validate(tol, float)
    qf = qvalue(q)
    top = [to_complex(a, "parameter") for a in nums]
    bottom = [to_complex(b, "parameter") for b in dens]
    terms = max((truncation_index(a, qf, tol) for a in top+bottom), default=0)
    powers = np.exp(np.arange(terms)*math.log(qf))
    total = np.zeros(terms, dtype=np.complex128)
    for b in bottom:
        logs = _log_factors(b, powers)
        if logs is None:
            raise PoleError(f"Infinite product ({b!r}; {qf!r})_inf vanishes in a denominator.")
        total -= logs
    for a in top:
        logs = _log_factors(a, powers)
        if logs is None:
            return complex(-math.inf)
        total += logs
    return complex(np.sum(total))

def exp_checked(log_value: complex, what: str = "value") -> complex:
    """
        The exponential of a value computed in log space.

        :raises NumericOverflowError: if the result exceeds binary64 range
    """
    if log_value.real > _LOG_MAX:
        raise NumericOverflowError(f"The {what} exceeds binary64 range (log-magnitude {log_value.real:.6g}).")
    if log_value.real == -math.inf:
        return 0j
    return cmath.exp(log_value)

def qpochhammer_ratio(nums: Sequence[Number], dens: Sequence[Number], q: QLike,
                      tol: float = DEFAULT_TOL) -> complex:
    """
        Ratio :math:`(a_1, \\ldots, a_r;q)_\\infty/(b_1, \\ldots, b_s;q)_\\infty`, accumulated as a single product
        in log space (see :func:`log_qpochhammer_ratio`).

        >>> abs(qpochhammer_ratio([0.25], [0.5], 0.5) - 2) < 1e-14
        True

        :raises PoleError: if a denominator factor vanishes
        :raises NumericOverflowError: if the ratio exceeds binary64 range
    """
    return exp_checked(log_qpochhammer_ratio(nums, dens, q, tol), "infinite product ratio")

def qnumber(alpha: Number, q: QLike) -> complex:
    """
        The basic number :math:`[\\alpha]_q = (1-q^\\alpha)/(1-q)`.

        >>> qnumber(2, 0.5)
        (1.5+0j)
    """
    qf = qvalue(q)
    return (1-complex(qf)**complex(alpha))/(1-qf)
