"""
    The q-derivative operator :math:`\\mathcal{D}_q` and the Jackson q-integrals.

    >>> from askeyscheme.qcore import qderivative, jackson_integral
    >>> qderivative(lambda z: z**2, 1, 0.5)
    (1.5+0j)
    >>> abs(jackson_integral(lambda t: t, 1, 0.5).value - 2/3) < 1e-14
    True
"""

from __future__ import annotations

from typing import Callable, List, NamedTuple, Optional, Union
from typing_extensions import Final
from typing_validation import validate

from .base import Number, QLike, INFINITY, _Infinity, to_complex, qvalue
from .err import ConvergenceError, DomainError

ScalarFunction = Callable[[complex], Number]
"""
    Type alias for scalar functions of a complex variable.
"""

STOP_RUN: Final[int] = 3
"""
    Number of consecutive negligible terms after which a sum is truncated.
"""

DEFAULT_MAX_TERMS: Final[int] = 100_000
"""
    Default cap on the number of lattice terms in a Jackson q-integral (per direction).
"""

def qderivative(f: ScalarFunction, z: Number, q: QLike, order: int = 1, *,
                derivative_at_zero: Optional[Number] = None) -> complex:
    """
        The iterated q-derivative :math:`\\mathcal{D}_q^n f(z)`, where

        .. math::

            \\mathcal{D}_q f(z) = \\frac{f(z)-f(qz)}{(1-q)z}, \\quad z \\neq 0,

        and :math:`\\mathcal{D}_q f(0) = f'(0)`. The value :math:`f'(0)` cannot be recovered from samples of ``f``
        and must be passed as ``derivative_at_zero``.

        The computation samples ``f`` on :math:`z, qz, \\ldots, q^n z` and applies nested divided differences.

        >>> qderivative(lambda z: 7, 0.3, 0.5)
        0j

        :param f: the function
        :type f: :obj:`ScalarFunction`
        :param z: the point
        :type z: :obj:`Number`
        :param q: the base
        :type q: :obj:`QLike`
        :param order: the number of times the operator is applied
        :type order: non-negative :obj:`int`, *optional*
        :param derivative_at_zero: the value :math:`f'(0)`, required at ``z = 0`` for ``order = 1``
        :type derivative_at_zero: :obj:`Number` or :obj:`None`, *optional*

        :raises DomainError: at ``z = 0`` unless ``order = 1`` and ``derivative_at_zero`` is given
    """
    validate(order, int)
    if order < 0:
        raise ValueError(f"Order must be non-negative, found {order}.")
    z = to_complex(z, "point")
    qf = qvalue(q)
    if order == 0:
        return complex(f(z))
    if z == 0:
        if order != 1 or derivative_at_zero is None:
            raise DomainError("The q-derivative at z = 0 requires the value f'(0) and order 1.")
        return to_complex(derivative_at_zero, "derivative value")
    points = [z*qf**j for j in range(order+1)]
    values: List[complex] = [complex(f(x)) for x in points]
    for level in range(order):
        values = [(values[j]-values[j+1])/((1-qf)*points[j]) for j in range(order-level)]
    return values[0]


class JacksonSum(NamedTuple):
    """
        Result of a truncated Jackson q-integral.
    """

    value: complex
    """ The truncated lattice sum. """

    upper_index: int
    """ Last lattice index :math:`n \\geq 0` included (points :math:`zq^n`). """

    lower_index: int
    """ Last negative lattice index included (only for the integral on :math:`(0,\\infty)`, otherwise ``0``). """


def _lattice_sum(term: Callable[[int], complex], indices: range, tol: float, abs_tol: float,
                 what: str) -> tuple[complex, int]:
    total = 0j
    small = 0
    last = indices.start
    for n in indices:
        t = term(n)
        total += t
        last = n
        if abs(t) <= max(tol*abs(total), abs_tol):
            small += 1
            if small >= STOP_RUN:
                return total, last
        else:
            small = 0
    raise ConvergenceError(f"Jackson q-integral {what} did not converge within {len(indices)} terms.")

def jackson_integral(f: ScalarFunction, upper: Union[Number, _Infinity], q: QLike,
                     tol: float = 1e-16, max_terms: int = DEFAULT_MAX_TERMS, abs_tol: float = 0.0) -> JacksonSum:
    """
        The Jackson q-integrals

        .. math::

            \\int_0^z f(t)\\,d_qt = z(1-q)\\sum_{n=0}^\\infty f(zq^n)q^n, \\qquad
            \\int_0^\\infty f(t)\\,d_qt = (1-q)\\sum_{n=-\\infty}^\\infty f(q^n)q^n.

        Each direction of a sum is truncated after three consecutive terms with magnitude at most ``tol`` times the running sum,
        or at most ``abs_tol``: an integrand vanishing on three consecutive lattice points ends the sum while it is still zero.

        >>> jackson_integral(lambda t: 1, 0.7, 0.5).value
        (0.7+0j)

        :param f: the integrand
        :type f: :obj:`ScalarFunction`
        :param upper: the upper endpoint ``z``, or :obj:`INFINITY`
        :type upper: :obj:`Number` or :obj:`INFINITY`
        :param q: the base
        :type q: :obj:`QLike`
        :param tol: relative truncation tolerance
        :type tol: :obj:`float`, *optional*
        :param max_terms: cap on the number of terms per direction
        :type max_terms: :obj:`int`, *optional*
        :param abs_tol: absolute truncation tolerance
        :type abs_tol: :obj:`float`, *optional*

        :raises ConvergenceError: if the truncation criterion is not met within ``max_terms`` terms
    """
    validate(max_terms, int)
    validate(abs_tol, float)
    qf = qvalue(q)
    if upper is INFINITY:
        up, up_idx = _lattice_sum(lambda n: complex(f(qf**n))*qf**n, range(0, max_terms), tol, abs_tol,
                                  "on [0, 1]")
        down, down_idx = _lattice_sum(lambda m: complex(f(qf**(-m)))*qf**(-m), range(1, max_terms+1), tol,
                                      abs_tol, "on [1, inf)")
        return JacksonSum((1-qf)*(up+down), up_idx, -down_idx)
    z = to_complex(upper, "upper endpoint")  # type: ignore[arg-type]
    if z == 0:
        return JacksonSum(0j, 0, 0)
    total, idx = _lattice_sum(lambda n: complex(f(z*qf**n))*qf**n, range(0, max_terms), tol, abs_tol,
                               f"on [0, {z!r}]")
    return JacksonSum(z*(1-qf)*total, idx, 0)

def jackson_integral_between(f: ScalarFunction, lower: Number, upper: Number, q: QLike,
                             tol: float = 1e-16, max_terms: int = DEFAULT_MAX_TERMS, abs_tol: float = 0.0) -> complex:
    """
        The q-integral :math:`\\int_a^b f(t)\\,d_qt = \\int_0^b f(t)\\,d_qt - \\int_0^a f(t)\\,d_qt`.
    """
    return (jackson_integral(f, upper, q, tol, max_terms, abs_tol).value
            - jackson_integral(f, lower, q, tol, max_terms, abs_tol).value)
