"""
    Gamma function, q-gamma function and q-binomial coefficients.

    The gamma function uses the Lanczos approximation with :math:`g = 7` and nine coefficients,
    together with the reflection formula :math:`\\Gamma(z)\\Gamma(1-z) = \\pi/\\sin(\\pi z)` for :math:`\\Re z < 1/2`.

    >>> from askeyscheme.qcore import gamma, qgamma
    >>> gamma(5)
    (24+0j)
    >>> qgamma(3, 0.5)
    1.5
"""

from __future__ import annotations

import cmath
import math
from typing import Union
from typing_extensions import Final
from typing_validation import validate

from .base import Number, QLike, to_complex, qvalue, is_nonpositive_integer, as_nonnegative_integer, binom2
from .err import PoleError, NumericOverflowError
from .factorials import DEFAULT_TOL, exp_checked, log_qpochhammer_ratio

_LANCZOS_G: Final[float] = 7.0

_LANCZOS_COEFFS: Final = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_SQRT_2PI: Final[float] = math.sqrt(2*math.pi)

def gamma(z: Number) -> complex:
    """
        The gamma function :math:`\\Gamma(z)` for complex ``z``.

        Positive integer arguments return exact factorials.

        >>> abs(gamma(0.5) - math.sqrt(math.pi)) < 1e-14
        True

        :param z: the argument
        :type z: :obj:`Number`

        :raises PoleError: if ``z`` is a non-positive integer
        :raises NumericOverflowError: if the value exceeds binary64 range
    """
    z = to_complex(z, "argument")
    if is_nonpositive_integer(z):
        raise PoleError(f"Gamma function has a pole at z = {z!r}.")
    n = as_nonnegative_integer(z, 0.0)
    if n is not None and n <= 170:
        return complex(math.factorial(n-1))
    if z.real < 0.5:
        try:
            return math.pi/(cmath.sin(math.pi*z)*gamma(1-z))
        except OverflowError:
            # the reflected factor overflows where Gamma(z) underflows
            return 0j
    z -= 1
    x = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        x += _LANCZOS_COEFFS[i]/(z+i)
    t = z+_LANCZOS_G+0.5
    return exp_checked((z+0.5)*cmath.log(t)-t+cmath.log(_SQRT_2PI*x), "gamma function")

def rgamma(z: Number) -> complex:
    """
        The reciprocal gamma function :math:`1/\\Gamma(z)`, an entire function vanishing at the poles of :math:`\\Gamma`.
    """
    if is_nonpositive_integer(z):
        return 0j
    return 1/gamma(z)

def _log_abs_sin_pi(z: complex) -> float:
    u, v = z.real, abs(z.imag)
    if v > 20:
        return math.pi*v-math.log(2)
    return 0.5*math.log(math.sin(math.pi*u)**2+math.sinh(math.pi*v)**2)

def log_abs_gamma(z: Number) -> float:
    """
        The logarithm :math:`\\log|\\Gamma(z)|`, finite where :math:`\\Gamma(z)` itself under- or overflows
        (e.g. far along the imaginary direction).

        >>> abs(log_abs_gamma(5)-math.log(24)) < 1e-12
        True

        :raises PoleError: if ``z`` is a non-positive integer
    """
    z = to_complex(z, "argument")
    if is_nonpositive_integer(z):
        raise PoleError(f"Gamma function has a pole at z = {z!r}.")
    if z.real < 0.5:
        return math.log(math.pi)-_log_abs_sin_pi(z)-log_abs_gamma(1-z)
    z -= 1
    x = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        x += _LANCZOS_COEFFS[i]/(z+i)
    t = z+_LANCZOS_G+0.5
    return math.log(_SQRT_2PI)+((z+0.5)*cmath.log(t)).real-t.real+math.log(abs(x))

def qgamma(x: Number, q: QLike, tol: float = DEFAULT_TOL) -> Union[float, complex]:
    """
        The q-gamma function

        .. math::

            \\Gamma_q(x) = \\frac{(q;q)_\\infty}{(q^x;q)_\\infty}(1-q)^{1-x}

        Returns a :obj:`float` for real ``x`` and a :obj:`complex` otherwise.
        The ratio of infinite products is accumulated as a single product in log space,
        so that the function stays accurate as :math:`q \\to 1`.

        >>> qgamma(1, 0.5)
        1.0

        :param x: the argument
        :type x: :obj:`Number`
        :param q: the base
        :type q: :obj:`QLike`

        :raises PoleError: if ``x`` is a non-positive integer
        :raises NumericOverflowError: if the value exceeds binary64 range
    """
    qf = qvalue(q)
    xc = to_complex(x, "argument")
    if is_nonpositive_integer(xc):
        raise PoleError(f"q-Gamma function has a pole at x = {xc!r}.")
    n = as_nonnegative_integer(xc, 0.0)
    if n is not None:
        # exact finite product [1]_q [2]_q ... [n-1]_q
        prod = 1.0
        for k in range(1, n):
            prod *= -math.expm1(k*math.log(qf))/(1-qf)
        if math.isinf(prod):
            raise NumericOverflowError(f"q-Gamma function overflows at x = {n}.")
        res = complex(prod)
    else:
        log_res = log_qpochhammer_ratio([qf], [cmath.exp(xc*math.log(qf))], qf, tol)
        res = exp_checked(log_res+(1-xc)*math.log1p(-qf), "q-gamma value")
    if isinstance(x, (int, float)):
        return res.real
    return res

def qbinomial(alpha: Number, beta: Number, q: QLike, tol: float = DEFAULT_TOL) -> complex:
    """
        The q-binomial coefficient :math:`\\left[\\alpha \\atop \\beta\\right]_q`:

        - for non-negative integers :math:`0 \\leq k \\leq n`, the product :math:`\\prod_{j=1}^k (1-q^{n-k+j})/(1-q^j)`;
        - for a non-negative integer :math:`\\beta = k`, the form :math:`(q^{-\\alpha};q)_k/(q;q)_k\\,(-1)^k q^{k\\alpha - \\binom{k}{2}}`;
        - otherwise, the ratio of infinite products :math:`(q^{\\beta+1}, q^{\\alpha-\\beta+1};q)_\\infty/(q, q^{\\alpha+1};q)_\\infty`,
          accumulated as a single product in log space.

        Finite products are taken factor by factor as ratios, so that neither numerator nor denominator underflows as :math:`q \\to 1`.

        >>> qbinomial(4, 2, 0.5)
        (2.1875+0j)

        :param alpha: the upper argument
        :type alpha: :obj:`Number`
        :param beta: the lower argument
        :type beta: :obj:`Number`
        :param q: the base
        :type q: :obj:`QLike`

        :raises PoleError: if :math:`\\alpha+1` is a non-positive integer on the general path
    """
    validate(tol, float)
    qf = qvalue(q)
    lq = math.log(qf)
    a = to_complex(alpha, "upper argument")
    b = to_complex(beta, "lower argument")
    k = as_nonnegative_integer(b, 0.0)
    if k is not None:
        n = as_nonnegative_integer(a, 0.0)
        if n is not None:
            if k > n:
                return 0j
            res = 1+0j
            for j in range(1, k+1):
                res *= math.expm1((n-k+j)*lq)/math.expm1(j*lq)
            return res
        res = 1+0j
        for j in range(k):
            res *= (1-cmath.exp((j-a)*lq))/(-math.expm1((j+1)*lq))
        sign = -1 if k % 2 else 1
        return res*sign*cmath.exp((k*a-binom2(k))*lq)
    if is_nonpositive_integer(a+1):
        raise PoleError(f"q-Binomial coefficient has a pole at alpha = {a!r}.")
    nums = [cmath.exp((b+1)*lq), cmath.exp((a-b+1)*lq)]
    dens = [qf, cmath.exp((a+1)*lq)]
    return exp_checked(log_qpochhammer_ratio(nums, dens, qf, tol), "q-binomial coefficient")
