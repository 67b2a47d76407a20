"""
    Scalar types shared by the whole library: the base :class:`QBase`,
    the extended count :obj:`INFINITY` and complex value coercion.
"""

from __future__ import annotations

import cmath
import math
from typing import Any, Union
from typing_extensions import Final, TypeAlias
from typing_validation import validate

from .err import DomainError

Number: TypeAlias = Union[int, float, complex]
"""
    Type alias for scalar inputs. All values are handled internally as binary64 :obj:`complex`.
"""

class _Infinity:
    """
        The distinguished extended count used for :math:`(a;q)_\\infty`.
        Use the :obj:`INFINITY` singleton rather than instantiating this class.
    """

    __slots__ = ()

    _instance: "_Infinity"

    def __new__(cls) -> "_Infinity":
        if not hasattr(cls, "_instance"):
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __reduce__(self) -> str:
        return "INFINITY"

INFINITY: Final[_Infinity] = _Infinity()
"""
    Extended count value for infinite products and one-sided infinite q-integrals.
"""

ExtendedCount: TypeAlias = Union[int, _Infinity]
"""
    Type alias for counts which are either an integer or :obj:`INFINITY`.
"""

def to_complex(value: Number, what: str = "value") -> complex:
    """
        Converts a scalar to :obj:`complex`, rejecting non-finite components.

        >>> to_complex(2)
        (2+0j)

        :param value: the scalar to convert
        :type value: :obj:`Number`
        :param what: a name for the value, used in error messages
        :type what: :obj:`str`, *optional*

        :raises DomainError: if either component is NaN or infinite
    """
    z = complex(value)
    if not cmath.isfinite(z):
        raise DomainError(f"Non-finite {what}: {z!r}.")
    return z

def is_nonpositive_integer(value: Number, tol: float = 0.0) -> bool:
    """
        Whether a scalar is (within absolute tolerance ``tol``) one of :math:`0, -1, -2, \\ldots`
    """
    z = complex(value)
    if abs(z.imag) > tol or z.real > tol:
        return False
    return abs(z.real - round(z.real)) <= tol

def as_nonnegative_integer(value: Number, tol: float = 1e-12) -> Union[int, None]:
    """
        Returns ``n`` if the scalar equals the nonnegative integer ``n`` within ``tol``, otherwise :obj:`None`.
    """
    z = complex(value)
    if abs(z.imag) > tol:
        return None
    n = round(z.real)
    if n < 0 or abs(z.real - n) > tol:
        return None
    return int(n)

def binom2(n: int) -> int:
    """ The triangular number :math:`\\binom{n}{2} = n(n-1)/2`. """
    return n*(n-1)//2


class QBase:
    """
        Container class for a base :math:`q` with :math:`0 < q < 1`.

        Every library function accepting a base also accepts a plain :obj:`float`,
        which is validated through this class. Forms in base :math:`q^{-1}` are always
        rewritten explicitly in base :math:`q`, so bases :math:`q \\geq 1` are never admitted.

        >>> QBase(0.5)
        QBase(0.5)
        >>> QBase(0.5).log
        -0.6931471805599453

        :param q: the base
        :type q: :obj:`float`

        :raises DomainError: unless ``0 < q < 1``
    """

    _q: float
    _log: float

    __slots__ = ("__weakref__", "_q", "_log")

    def __new__(cls, q: Union[float, "QBase"]) -> "QBase":
        if isinstance(q, QBase):
            return q
        validate(q, Union[int, float])
        q = float(q)
        if not 0.0 < q < 1.0:
            raise DomainError(f"Base must satisfy 0 < q < 1, found q = {q!r}.")
        instance = super().__new__(cls)
        instance._q = q
        instance._log = math.log(q)
        return instance

    def __getnewargs__(self) -> tuple[float]:
        return (self._q,)

    @property
    def q(self) -> float:
        """ The base as a :obj:`float`. """
        return self._q

    @property
    def log(self) -> float:
        """ The natural logarithm :math:`\\ln q < 0`. """
        return self._log

    def power(self, exponent: Number) -> complex:
        """
            Principal value of :math:`q^\\lambda` for complex :math:`\\lambda`.

            >>> QBase(0.25).power(0.5)
            (0.5+0j)
        """
        return cmath.exp(complex(exponent)*self._log)

    def squared(self) -> "QBase":
        """ The base :math:`q^2`. """
        return QBase(self._q*self._q)

    def sqrt(self) -> "QBase":
        """ The base :math:`q^{1/2}`. """
        return QBase(math.sqrt(self._q))

    def __float__(self) -> float:
        return self._q

    def __repr__(self) -> str:
        return f"QBase({self._q!r})"

    def __hash__(self) -> int:
        return hash((QBase, self._q))

    def __eq__(self, other: Any) -> bool:
        if self is other:
            return True
        if not isinstance(other, QBase):
            return NotImplemented
        return self._q == other._q


QLike: TypeAlias = Union[float, QBase]
"""
    Type alias for base arguments: either a :class:`QBase` or a :obj:`float` in the open interval ``(0, 1)``.
"""

def qvalue(q: QLike) -> float:
    """ Validates a base argument and returns it as a :obj:`float`. """
    if isinstance(q, QBase):
        return q.q
    if isinstance(q, float) and 0.0 < q < 1.0:
        return q
    return QBase(q).q
