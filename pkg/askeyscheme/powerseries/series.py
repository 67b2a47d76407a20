"""
    Truncated formal power series :math:`\\sum_{n=0}^M c_n t^n` with complex coefficients.

    Arithmetic between series of different orders truncates to the smaller order.

    >>> from askeyscheme.powerseries import PowerSeries
    >>> t = PowerSeries.variable(4)
    >>> (1+t)*(1-t)
    PowerSeries([(1+0j), 0j, (-1+0j), 0j, 0j])
"""

from __future__ import annotations

import cmath
from typing import Any, Callable, Iterable, Optional, Sequence, Tuple, Union
from typing_extensions import Final
from typing_validation import validate

import numpy as np

from ..qcore import Number, DomainError, to_complex
from ..hyper import SeriesSpec

DEFAULT_ORDER: Final[int] = 12
"""
    Default truncation order for generating-function comparisons.
"""

Coefficient = Callable[[int], Number]
"""
    Type alias for coefficient rules :math:`k \\mapsto c_k`.
"""

class PowerSeries:
    """
        Container class for a truncated formal power series in one variable ``t``.

        A series may be flagged ``formal``: formal series (e.g. divergent generating functions)
        can be manipulated coefficient-wise but never evaluated at :math:`t \\neq 0`.

        >>> PowerSeries([1, 2, 3])
        PowerSeries([(1+0j), (2+0j), (3+0j)])
        >>> PowerSeries([1, 2, 3]).order
        2

        :param coeffs: the coefficients :math:`c_0, \\ldots, c_M`
        :type coeffs: :obj:`Iterable` of :obj:`Number`
        :param formal: whether the series is formal only
        :type formal: :obj:`bool`, *optional*
    """

    _coeffs: Tuple[complex, ...]
    _formal: bool

    __slots__ = ("__weakref__", "_coeffs", "_formal")

    def __new__(cls, coeffs: Iterable[Number], formal: bool = False) -> "PowerSeries":
        validate(formal, bool)
        values = tuple(to_complex(c, "coefficient") for c in coeffs)
        if not values:
            raise ValueError("A power series needs at least one coefficient.")
        instance = super().__new__(cls)
        instance._coeffs = values
        instance._formal = formal
        return instance

    def __getnewargs__(self) -> Tuple[Tuple[complex, ...], bool]:
        return (self._coeffs, self._formal)

    @staticmethod
    def constant(value: Number, order: int = DEFAULT_ORDER) -> "PowerSeries":
        """ The constant series ``value``, to given order. """
        validate(order, int)
        return PowerSeries([value]+[0]*order)

    @staticmethod
    def variable(order: int = DEFAULT_ORDER) -> "PowerSeries":
        """
            The series ``t``, to given order.

            >>> PowerSeries.variable(2)
            PowerSeries([0j, (1+0j), 0j])
        """
        validate(order, int)
        if order < 1:
            raise ValueError("The variable needs order at least 1.")
        return PowerSeries([0, 1]+[0]*(order-1))

    @staticmethod
    def geometric(ratio: Number = 1, order: int = DEFAULT_ORDER) -> "PowerSeries":
        """
            The geometric series :math:`\\sum_n r^n t^n = 1/(1-rt)`, to given order.
        """
        r = to_complex(ratio, "ratio")
        return PowerSeries([r**n for n in range(order+1)])

    @property
    def coeffs(self) -> Tuple[complex, ...]:
        """ The coefficients :math:`c_0, \\ldots, c_M`. """
        return self._coeffs

    @property
    def order(self) -> int:
        """ The truncation order :math:`M`. """
        return len(self._coeffs)-1

    @property
    def formal(self) -> bool:
        """ Whether the series is formal only (not evaluable at :math:`t \\neq 0`). """
        return self._formal

    def __getitem__(self, n: int) -> complex:
        """ The coefficient of :math:`t^n` (zero beyond the order is not assumed: raises :obj:`IndexError`). """
        return self._coeffs[n]

    def __len__(self) -> int:
        return len(self._coeffs)

    def truncate(self, order: int) -> "PowerSeries":
        """
            Truncates the series to a lower order.

            >>> PowerSeries([1, 2, 3]).truncate(1)
            PowerSeries([(1+0j), (2+0j)])
        """
        validate(order, int)
        if not 0 <= order <= self.order:
            raise ValueError(f"Truncation order must be in 0..{self.order}, found {order}.")
        return PowerSeries(self._coeffs[:order+1], self._formal)

    def scale(self, factor: Number) -> "PowerSeries":
        """
            The series in the rescaled variable :math:`t \\mapsto \\text{factor}\\cdot t`.

            >>> PowerSeries([1, 1, 1]).scale(2)
            PowerSeries([(1+0j), (2+0j), (4+0j)])
        """
        c = to_complex(factor, "factor")
        return PowerSeries((a*c**n for n, a in enumerate(self._coeffs)), self._formal)

    def as_formal(self) -> "PowerSeries":
        """ The same series, flagged as formal. """
        return PowerSeries(self._coeffs, True)

    def evaluate(self, t: Number) -> complex:
        """
            Evaluates the truncated series at ``t`` (Horner scheme).

            >>> PowerSeries([1, 2, 3]).evaluate(0.1)
            (1.23+0j)

            :raises DomainError: if the series is formal and :math:`t \\neq 0`
        """
        x = to_complex(t, "argument")
        if x == 0:
            return self._coeffs[0]
        if self._formal:
            raise DomainError("A formal power series cannot be evaluated at t != 0.")
        res = 0j
        for c in reversed(self._coeffs):
            res = res*x+c
        return res

    def _array(self, order: int) -> "np.ndarray[Any, np.dtype[np.complex128]]":
        return np.array(self._coeffs[:order+1], dtype=np.complex128)

    def _coerce(self, other: Union["PowerSeries", Number]) -> Optional["PowerSeries"]:
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, float, complex)):
            return PowerSeries.constant(other, self.order)
        return None

    def __add__(self, other: Union["PowerSeries", Number]) -> "PowerSeries":
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return ps_add(self, b)

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries((-c for c in self._coeffs), self._formal)

    def __sub__(self, other: Union["PowerSeries", Number]) -> "PowerSeries":
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return ps_add(self, -b)

    def __rsub__(self, other: Number) -> "PowerSeries":
        return (-self)+other

    def __mul__(self, other: Union["PowerSeries", Number]) -> "PowerSeries":
        if isinstance(other, (int, float, complex)):
            c = complex(other)
            return PowerSeries((c*a for a in self._coeffs), self._formal)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return ps_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: Union["PowerSeries", Number]) -> "PowerSeries":
        if isinstance(other, (int, float, complex)):
            return self*(1/complex(other))
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return ps_mul(self, other.inverse())

    def __rtruediv__(self, other: Number) -> "PowerSeries":
        return self.inverse()*other

    def __pow__(self, exponent: Number) -> "PowerSeries":
        return ps_pow(self, exponent)

    def inverse(self) -> "PowerSeries":
        """
            The multiplicative inverse, by the recurrence :math:`b_n = -\\frac{1}{a_0}\\sum_{k=1}^n a_k b_{n-k}`.

            >>> PowerSeries([1, -1, 0]).inverse()
            PowerSeries([(1+0j), (1+0j), (1+0j)])

            :raises DomainError: if the constant term vanishes
        """
        a = self._coeffs
        if a[0] == 0:
            raise DomainError("A power series with zero constant term is not invertible.")
        b = [1/a[0]]
        for n in range(1, len(a)):
            b.append(-sum(a[k]*b[n-k] for k in range(1, n+1))/a[0])
        return PowerSeries(b, self._formal)

    def derivative(self) -> "PowerSeries":
        """ The formal derivative, of order one less (order zero stays a zero constant). """
        if self.order == 0:
            return PowerSeries([0], self._formal)
        return PowerSeries((n*c for n, c in enumerate(self._coeffs) if n > 0), self._formal)

    def __repr__(self) -> str:
        tail = ", formal=True" if self._formal else ""
        return f"PowerSeries({list(self._coeffs)}{tail})"

    @property
    def _as_tuple(self) -> Tuple[Any, ...]:
        return (PowerSeries, self._coeffs, self._formal)

    def __hash__(self) -> int:
        return hash(self._as_tuple)

    def __eq__(self, other: Any) -> bool:
        if self is other:
            return True
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._as_tuple == other._as_tuple


def ps_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """
        Sum of two series, truncated to the smaller order.

        >>> ps_add(PowerSeries([1, 1, 1]), PowerSeries([1, -1]))
        PowerSeries([(2+0j), 0j])
    """
    validate(a, PowerSeries)
    validate(b, PowerSeries)
    m = min(a.order, b.order)
    return PowerSeries(a._array(m)+b._array(m), a.formal or b.formal)

def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """
        Cauchy product of two series, truncated to the smaller order.

        >>> ps_mul(PowerSeries.geometric(1, 4), PowerSeries([1, -1, 0, 0, 0]))
        PowerSeries([(1+0j), 0j, 0j, 0j, 0j])
    """
    validate(a, PowerSeries)
    validate(b, PowerSeries)
    m = min(a.order, b.order)
    prod = np.convolve(a._array(m), b._array(m))[:m+1]
    return PowerSeries(prod, a.formal or b.formal)

def ps_exp(a: PowerSeries) -> PowerSeries:
    """
        The exponential :math:`\\exp(a)`, by :math:`b_0 = e^{a_0}`,
        :math:`b_n = \\frac{1}{n}\\sum_{k=1}^n k a_k b_{n-k}`.

        >>> [round(c.real, 12) for c in ps_exp(PowerSeries([0, 1, 0, 0])).coeffs]
        [1.0, 1.0, 0.5, 0.166666666667]
    """
    validate(a, PowerSeries)
    c = a.coeffs
    b = [cmath.exp(c[0])]
    for n in range(1, len(c)):
        b.append(sum(k*c[k]*b[n-k] for k in range(1, n+1))/n)
    return PowerSeries(b, a.formal)

def ps_log(a: PowerSeries) -> PowerSeries:
    """
        The principal logarithm :math:`\\log(a)`, by :math:`b_0 = \\log a_0`,
        :math:`b_n = \\frac{1}{a_0}\\left(a_n - \\frac{1}{n}\\sum_{k=1}^{n-1} k b_k a_{n-k}\\right)`.

        >>> ps_log(PowerSeries([1, 0, 0])).coeffs
        (0j, 0j, 0j)

        :raises DomainError: if the constant term vanishes
    """
    validate(a, PowerSeries)
    c = a.coeffs
    if c[0] == 0:
        raise DomainError("Logarithm of a power series with zero constant term.")
    b = [cmath.log(c[0])]
    for n in range(1, len(c)):
        b.append((c[n]-sum(k*b[k]*c[n-k] for k in range(1, n))/n)/c[0])
    return PowerSeries(b, a.formal)

def ps_pow(a: PowerSeries, gamma: Number) -> PowerSeries:
    """
        The power :math:`a^\\gamma = a_0^\\gamma \\exp(\\gamma \\log(a/a_0))`, with the principal value of
        :math:`a_0^\\gamma`.

        >>> ps_pow(PowerSeries([1, -1, 0, 0]), -1).coeffs
        ((1+0j), (1+0j), (1+0j), (1+0j))

        :raises DomainError: if the constant term vanishes
    """
    validate(a, PowerSeries)
    g = to_complex(gamma, "exponent")
    c0 = a.coeffs[0]
    if c0 == 0:
        raise DomainError("Power of a power series with zero constant term.")
    if g == round(g.real) and 0 <= g.real <= 64:
        # exact repeated products for small non-negative integer exponents
        res = PowerSeries.constant(1, a.order)
        for _ in range(int(g.real)):
            res = ps_mul(res, a)
        return res
    log = ps_log(a*(1/c0))
    return ps_exp(log*g)*(c0**g)

def ps_hyp(coefficient: Coefficient, order: int = DEFAULT_ORDER, formal: bool = False) -> PowerSeries:
    """
        The series with coefficients given by a rule: ``coeffs[k] = coefficient(k)`` for :math:`0 \\leq k \\leq M`.

        >>> ps_hyp(lambda k: 1, 3)
        PowerSeries([(1+0j), (1+0j), (1+0j), (1+0j)])
    """
    validate(order, int)
    if order < 0:
        raise ValueError(f"Order must be non-negative, found {order}.")
    return PowerSeries((coefficient(k) for k in range(order+1)), formal)

def ps_series(spec: SeriesSpec, order: int = DEFAULT_ORDER, formal: bool = False) -> PowerSeries:
    """
        The (basic) hypergeometric series ``spec`` with its argument :math:`w` replaced by :math:`wt`,
        as a power series in ``t``: the coefficient of :math:`t^k` is the ``k``-th term of ``spec``.
        Partial sums have vanishing coefficients beyond their truncation index.

        >>> ps_series(SeriesSpec.F([1], [], 1), 3)
        PowerSeries([(1+0j), (1+0j), (1+0j), (1+0j)])
    """
    validate(spec, SeriesSpec)
    validate(order, int)
    last = order if spec.partial is None else min(order, spec.partial)
    terms = spec.with_partial(None).terms(last)
    terms += [0j]*(order-last)
    return PowerSeries(terms, formal)

def ps_polynomial(coeffs: Sequence[Number], order: int = DEFAULT_ORDER) -> PowerSeries:
    """
        A polynomial in ``t`` as a series of given order (coefficients beyond the order are dropped).

        >>> ps_polynomial([1, -2, 1], 3)
        PowerSeries([(1+0j), (-2+0j), (1+0j), 0j])
    """
    values = list(coeffs)[:order+1]
    return PowerSeries(values+[0]*(order+1-len(values)))
