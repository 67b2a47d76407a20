"""
    Orthogonality measures: continuous weights, finite and infinite discrete masses, bilateral masses,
    Jackson q-integrals, and mixed measures (continuous part plus finitely many point masses).

    Every measure integrates vector-valued functions of the polynomial argument, through
    :meth:`MeasureSpec.integrate`.

    >>> import math, numpy as np
    >>> from askeyscheme.measures import ContinuousMeasure, QuadratureConfig
    >>> uniform = ContinuousMeasure(lambda x: 1.0, -1.0, 1.0)
    >>> val = uniform.integrate(lambda x: np.array([x*x]), QuadratureConfig.default())
    >>> abs(val[0]-2/3) < 1e-14
    True
"""

from __future__ import annotations

import math
from typing import Any, Callable, List, Optional, Sequence, Tuple
from typing_extensions import Final, Literal
from typing_validation import validate

import numpy as np

from ..qcore import Number, QLike, qvalue
from .config import QuadratureConfig
from .err import MeasureValueError, QuadratureError
from .quadrature import integrate_unbounded, sum_bilateral, sum_finite, sum_infinite

MeasureKind = Literal["CONTINUOUS", "DISCRETE_FINITE", "DISCRETE_INFINITE", "BILATERAL", "JACKSON", "MIXED"]
"""
    Literal type for the class of a measure.
"""

MeasureKinds: Final = ("CONTINUOUS", "DISCRETE_FINITE", "DISCRETE_INFINITE", "BILATERAL", "JACKSON", "MIXED")

Weight = Callable[[float], Number]
"""
    Type alias for weight functions of the integration variable.
"""

WEIGHT_FLOOR: Final[float] = 1e-16
"""
    Continuous weights below this fraction of the largest weight seen so far are truncated to zero,
    without evaluating the integrand.
"""

Node = Callable[[int], Number]
"""
    Type alias for the nodes and masses of discrete measures, as functions of the lattice index.
"""

VectorFunction = Callable[[Number], Any]
"""
    Type alias for vector-valued functions of the polynomial argument, returning a :mod:`numpy` array.
"""

class MeasureSpec:
    """
        Abstract base class for orthogonality measures.
    """

    __slots__ = ("__weakref__",)

    @property
    def kind(self) -> MeasureKind:
        """ The class of the measure. """
        raise NotImplementedError()

    def integrate(self, f: VectorFunction, cfg: QuadratureConfig) -> Any:
        """
            Integrates a vector-valued function of the polynomial argument against the measure.
        """
        raise NotImplementedError()

    def masses(self, upto: int) -> List[Tuple[complex, complex]]:
        """
            The first ``upto`` (node, mass) pairs of a discrete measure, or the point masses of a mixed measure.
            Continuous measures have no masses.
        """
        # pylint: disable = unused-argument
        return []

    def __repr__(self) -> str:
        return f"{type(self).__name__}(kind={self.kind!r})"


class ContinuousMeasure(MeasureSpec):
    """
        An absolutely continuous measure :math:`\\int_a^b f(\\text{node}(t))\\,w(t)\\,dt`.

        The polynomial argument is ``node(t)``, the identity by default; the substitution :math:`x = \\cos\\theta`
        is obtained with ``node=math.cos`` on :math:`[0, \\pi]` and absorbs :math:`(1-x^2)^{\\pm 1/2}`-type
        endpoint singularities into a smooth integrand.

        :param weight: the weight :math:`w(t)`
        :type weight: :obj:`Weight`
        :param lower: lower endpoint, possibly ``-inf``
        :type lower: :obj:`float`
        :param upper: upper endpoint, possibly ``inf``
        :type upper: :obj:`float`
        :param node: the polynomial argument as a function of the integration variable
        :type node: :obj:`Callable` or :obj:`None`, *optional*
    """

    _weight: Weight
    _lower: float
    _upper: float
    _node: Optional[Callable[[float], Number]]

    __slots__ = ("_weight", "_lower", "_upper", "_node")

    def __new__(cls, weight: Weight, lower: float, upper: float,
                node: Optional[Callable[[float], Number]] = None) -> "ContinuousMeasure":
        lower, upper = float(lower), float(upper)
        if not lower < upper:
            raise MeasureValueError(f"Empty integration interval [{lower}, {upper}].")
        instance = super().__new__(cls)
        instance._weight = weight
        instance._lower = lower
        instance._upper = upper
        instance._node = node
        return instance

    @staticmethod
    def on_circle(weight: Weight) -> "ContinuousMeasure":
        """
            The measure :math:`\\int_0^\\pi f(\\cos\\theta)\\,w(\\theta)\\,d\\theta`, with the weight given
            as a function of :math:`\\theta`.
        """
        return ContinuousMeasure(weight, 0.0, math.pi, math.cos)

    @property
    def kind(self) -> MeasureKind:
        return "CONTINUOUS"

    @property
    def interval(self) -> Tuple[float, float]:
        """ The integration interval. """
        return (self._lower, self._upper)

    def weight(self, t: float) -> complex:
        """ The weight at the integration variable ``t``. """
        return complex(self._weight(t))

    def integrate(self, f: VectorFunction, cfg: QuadratureConfig) -> Any:
        node = self._node
        weight = self._weight
        peak = 0.0
        zero: Optional[Any] = None
        def integrand(t: float) -> Any:
            nonlocal peak, zero
            w = complex(weight(t))
            peak = max(peak, abs(w))
            if zero is not None and abs(w) <= WEIGHT_FLOOR*peak:
                return zero
            val = np.asarray(f(t if node is None else node(t)), dtype=np.complex128)
            zero = np.zeros_like(val)
            return w*val
        try:
            return integrate_unbounded(integrand, self._lower, self._upper, cfg)
        except OverflowError as e:
            raise QuadratureError(f"Integrand overflows on [{self._lower}, {self._upper}]: {e}") from e


class DiscreteMeasure(MeasureSpec):
    """
        A discrete measure :math:`\\sum_{k} \\text{mass}(k) f(\\text{node}(k))` over :math:`k = 0, \\ldots, N`
        (finite, ``count = N+1``) or :math:`k = 0, 1, 2, \\ldots` (infinite, ``count=None``).

        >>> from askeyscheme.measures import DiscreteMeasure, QuadratureConfig
        >>> binomial = DiscreteMeasure(lambda k: k, lambda k: [1, 2, 1][k], 3)
        >>> binomial.kind
        'DISCRETE_FINITE'
        >>> binomial.integrate(lambda x: np.array([x]), QuadratureConfig.default())[0]
        (4+0j)
    """

    _node: Node
    _mass: Node
    _count: Optional[int]

    __slots__ = ("_node", "_mass", "_count")

    def __new__(cls, node: Node, mass: Node, count: Optional[int] = None) -> "DiscreteMeasure":
        validate(count, Optional[int])
        if count is not None and count < 1:
            raise MeasureValueError(f"A finite discrete measure needs at least one node, found count={count}.")
        instance = super().__new__(cls)
        instance._node = node
        instance._mass = mass
        instance._count = count
        return instance

    @property
    def kind(self) -> MeasureKind:
        return "DISCRETE_INFINITE" if self._count is None else "DISCRETE_FINITE"

    @property
    def count(self) -> Optional[int]:
        """ The number of nodes, or :obj:`None` for infinite measures. """
        return self._count

    def _term(self, f: VectorFunction) -> Callable[[int], Any]:
        node, mass = self._node, self._mass
        def term(k: int) -> Any:
            m = complex(mass(k))
            if m == 0:
                return 0j
            return m*np.asarray(f(node(k)), dtype=np.complex128)
        return term

    def integrate(self, f: VectorFunction, cfg: QuadratureConfig) -> Any:
        if self._count is None:
            return sum_infinite(self._term(f), cfg)
        return sum_finite(self._term(f), self._count)

    def masses(self, upto: int) -> List[Tuple[complex, complex]]:
        stop = upto if self._count is None else min(upto, self._count)
        return [(complex(self._node(k)), complex(self._mass(k))) for k in range(stop)]


class BilateralMeasure(MeasureSpec):
    """
        A discrete measure :math:`\\sum_{k \\in \\mathbb{Z}} \\text{mass}(k) f(\\text{node}(k))`,
        expanded symmetrically in :math:`k` until both tails are negligible.
    """

    _node: Node
    _mass: Node

    __slots__ = ("_node", "_mass")

    def __new__(cls, node: Node, mass: Node) -> "BilateralMeasure":
        instance = super().__new__(cls)
        instance._node = node
        instance._mass = mass
        return instance

    @property
    def kind(self) -> MeasureKind:
        return "BILATERAL"

    def integrate(self, f: VectorFunction, cfg: QuadratureConfig) -> Any:
        node, mass = self._node, self._mass
        def term(k: int) -> Any:
            m = complex(mass(k))
            if m == 0:
                return 0j
            return m*np.asarray(f(node(k)), dtype=np.complex128)
        return sum_bilateral(term, cfg)

    def masses(self, upto: int) -> List[Tuple[complex, complex]]:
        ks = sorted(range(-upto//2, upto-upto//2), key=abs)
        return [(complex(self._node(k)), complex(self._mass(k))) for k in ks]


class JacksonMeasure(MeasureSpec):
    """
        The Jackson q-integral :math:`\\int_a^b f(x)\\,w(x)\\,d_qx`, evaluated as its defining lattice sums
        :math:`\\int_0^c g(x)\\,d_qx = c(1-q)\\sum_{k\\geq 0} g(cq^k)q^k` and
        :math:`\\int_a^b = \\int_0^b - \\int_0^a`.
        An infinite upper endpoint (``upper=None``) gives the bilateral sum
        :math:`(1-q)\\sum_{k \\in \\mathbb{Z}} g(q^k) q^k`.

        >>> from askeyscheme.measures import JacksonMeasure, QuadratureConfig
        >>> m = JacksonMeasure(lambda x: 1.0, 0.0, 1.0, 0.5)
        >>> abs(m.integrate(lambda x: np.array([x]), QuadratureConfig.default())[0]-2/3) < 1e-15
        True
    """

    _weight: Callable[[complex], Number]
    _lower: complex
    _upper: Optional[complex]
    _q: float

    __slots__ = ("_weight", "_lower", "_upper", "_q")

    def __new__(cls, weight: Callable[[complex], Number], lower: Number, upper: Optional[Number], q: QLike) -> "JacksonMeasure":
        instance = super().__new__(cls)
        instance._weight = weight
        instance._lower = complex(lower)
        instance._upper = None if upper is None else complex(upper)
        instance._q = qvalue(q)
        return instance

    @property
    def kind(self) -> MeasureKind:
        return "JACKSON"

    @property
    def endpoints(self) -> Tuple[complex, Optional[complex]]:
        """ The endpoints of the q-integral (``None`` for an infinite upper endpoint). """
        return (self._lower, self._upper)

    def _lattice(self, c: complex, f: VectorFunction) -> Callable[[int], Any]:
        q, weight = self._q, self._weight
        def term(k: int) -> Any:
            x = c*q**k
            w = complex(weight(x))
            if w == 0:
                return 0j
            return c*(1-q)*q**k*w*np.asarray(f(x), dtype=np.complex128)
        return term

    def integrate(self, f: VectorFunction, cfg: QuadratureConfig) -> Any:
        if self._upper is None:
            if self._lower != 0:
                raise MeasureValueError("Jackson integrals to infinity must start at zero.")
            return sum_bilateral(self._lattice(1+0j, f), cfg)
        total: Any = 0
        if self._upper != 0:
            total = total+sum_infinite(self._lattice(self._upper, f), cfg)
        if self._lower != 0:
            total = total-sum_infinite(self._lattice(self._lower, f), cfg)
        return total

    def masses(self, upto: int) -> List[Tuple[complex, complex]]:
        q = self._q
        res = []
        for c, sign in ((self._upper if self._upper is not None else 1+0j, 1), (self._lower, -1)):
            if c == 0:
                continue
            res.extend((c*q**k, sign*c*(1-q)*q**k*complex(self._weight(c*q**k))) for k in range(upto))
        return res


class MixedMeasure(MeasureSpec):
    """
        A continuous measure plus finitely many point masses :math:`\\sum_k w_k f(x_k)`.

        :param continuous: the absolutely continuous part
        :type continuous: :class:`ContinuousMeasure`
        :param points: the point masses, as (node, mass) pairs
        :type points: :obj:`Sequence` of pairs of :obj:`Number`
    """

    _continuous: ContinuousMeasure
    _points: Tuple[Tuple[complex, complex], ...]

    __slots__ = ("_continuous", "_points")

    def __new__(cls, continuous: ContinuousMeasure, points: Sequence[Tuple[Number, Number]]) -> "MixedMeasure":
        validate(continuous, ContinuousMeasure)
        instance = super().__new__(cls)
        instance._continuous = continuous
        instance._points = tuple((complex(x), complex(w)) for x, w in points)
        return instance

    @property
    def kind(self) -> MeasureKind:
        return "MIXED" if self._points else "CONTINUOUS"

    @property
    def continuous(self) -> ContinuousMeasure:
        """ The absolutely continuous part. """
        return self._continuous

    def integrate(self, f: VectorFunction, cfg: QuadratureConfig) -> Any:
        total = self._continuous.integrate(f, cfg)
        for x, w in self._points:
            total = total+w*np.asarray(f(x), dtype=np.complex128)
        return total

    def masses(self, upto: int) -> List[Tuple[complex, complex]]:
        return list(self._points[:upto])
