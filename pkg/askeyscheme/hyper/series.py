"""
    Evaluation of generalized hypergeometric series :math:`{}_rF_s` and basic hypergeometric series :math:`{}_r\\phi_s`.

    Terms are generated by the term ratio :math:`t_{k+1}/t_k`, never through explicit factorials.
    A series with a numerator parameter :math:`-n` (respectively :math:`q^{-n}`) for a non-negative integer :math:`n`
    is summed exactly up to :math:`k = n`. Other series are summed until three consecutive terms
    fall below ``tol`` times the partial sum.

    The rounding error of every sum is bounded by :math:`\epsilon\sum_k |t_k|`. A sum whose bound exceeds
    ``precision_tol`` times the larger of :math:`|t_0| = 1` and the sum itself raises :class:`PrecisionError`
    instead of returning a value dominated by cancellation.

    >>> from askeyscheme.hyper import SeriesSpec, eval_series
    >>> abs(eval_series(SeriesSpec.F([0.5], [], 0.5)) - 2**0.5) < 1e-12
    True
    >>> eval_series(SeriesSpec.F([-2, 1], [1], 0.5))
    (0.25+0j)
"""

from __future__ import annotations

import math
import sys
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Any, Iterator, List, Optional, Sequence, Tuple
from typing_extensions import Final, Literal
from typing_validation import validate

from ..qcore import Number, QLike, PoleError, ConvergenceError, PrecisionError, to_complex, qvalue
from .err import DivergentError

SeriesKind = Literal["F", "PHI"]
"""
    Literal type for the two series kinds: ``"F"`` for :math:`{}_rF_s`, ``"PHI"`` for :math:`{}_r\\phi_s`.
"""

DEFAULT_SERIES_TOL: Final[float] = 1e-15
"""
    Default relative truncation tolerance for non-terminating series.
"""

DEFAULT_MAX_TERMS: Final[int] = 20_000
"""
    Default cap on the number of terms of a non-terminating series.
"""

DEFAULT_PRECISION_TOL: Final[float] = 1e-8
"""
    Default bound on the relative rounding error of a sum, see :func:`eval_series`.
"""

_precision_tol: ContextVar[float] = ContextVar("precision_tol", default=DEFAULT_PRECISION_TOL)

@contextmanager
def precision(tol: float) -> Iterator[None]:
    """
        Context manager setting the bound on the relative rounding error used by :func:`eval_series`
        and :func:`eval_partial` when no explicit ``precision_tol`` is passed.

        >>> with precision(1e-6):
        ...     abs(eval_series(SeriesSpec.F([-2, 1], [1], 0.5)) - 0.25) < 1e-15
        True

        :param tol: the bound
        :type tol: :obj:`float`
    """
    validate(tol, float)
    token = _precision_tol.set(tol)
    try:
        yield
    finally:
        _precision_tol.reset(token)

_STOP_RUN: Final[int] = 3

_EPS: Final[float] = sys.float_info.epsilon

_TERMINATION_TOL: Final[float] = 1e-9

_POLE_TOL: Final[float] = 1e-13


class SeriesSpec:
    """
        Container class for a (basic) hypergeometric series instance.

        >>> SeriesSpec.phi([0.25], [], 0.5, 0.25)
        SeriesSpec.phi([(0.25+0j)], [], 0.5, (0.25+0j))
        >>> SeriesSpec.F([-1, 2], [1], 0.15, partial=3)
        SeriesSpec.F([(-1+0j), (2+0j)], [(1+0j)], (0.15+0j), partial=3)

        :param kind: ``"F"`` or ``"PHI"``
        :type kind: :obj:`SeriesKind`
        :param numerator: the numerator parameters
        :type numerator: :obj:`Sequence` of :obj:`Number`
        :param denominator: the denominator parameters
        :type denominator: :obj:`Sequence` of :obj:`Number`
        :param argument: the argument ``z``
        :type argument: :obj:`Number`
        :param base: the base, required if and only if ``kind == "PHI"``
        :type base: :obj:`QLike` or :obj:`None`, *optional*
        :param partial: if not :obj:`None`, the series is the partial sum up to index ``partial``
        :type partial: :obj:`int` or :obj:`None`, *optional*
    """

    _kind: SeriesKind
    _numerator: Tuple[complex, ...]
    _denominator: Tuple[complex, ...]
    _base: Optional[float]
    _argument: complex
    _partial: Optional[int]

    __slots__ = ("__weakref__", "_kind", "_numerator", "_denominator", "_base", "_argument", "_partial")

    def __new__(cls, kind: SeriesKind, numerator: Sequence[Number], denominator: Sequence[Number],
                argument: Number, base: Optional[QLike] = None, partial: Optional[int] = None) -> "SeriesSpec":
        # pylint: disable = too-many-arguments
        validate(kind, str)
        validate(partial, Optional[int])
        if kind not in ("F", "PHI"):
            raise ValueError(f"Invalid series kind {kind!r}.")
        if (base is None) != (kind == "F"):
            raise ValueError("A base must be given if and only if the series is basic.")
        if partial is not None and partial < 0:
            raise ValueError(f"Partial sum index must be non-negative, found {partial}.")
        instance = super().__new__(cls)
        instance._kind = kind
        instance._numerator = tuple(to_complex(a, "numerator parameter") for a in numerator)
        instance._denominator = tuple(to_complex(b, "denominator parameter") for b in denominator)
        instance._base = None if base is None else qvalue(base)
        instance._argument = to_complex(argument, "argument")
        instance._partial = partial
        return instance

    def __getnewargs__(self) -> Tuple[Any, ...]:
        return (self._kind, self._numerator, self._denominator, self._argument, self._base, self._partial)

    @staticmethod
    def F(numerator: Sequence[Number], denominator: Sequence[Number], z: Number,
          partial: Optional[int] = None) -> "SeriesSpec":
        """ Builds the series :math:`{}_rF_s(a_1,\\ldots,a_r; b_1,\\ldots,b_s; z)`. """
        # pylint: disable = invalid-name
        return SeriesSpec("F", numerator, denominator, z, None, partial)

    @staticmethod
    def phi(numerator: Sequence[Number], denominator: Sequence[Number], q: QLike, z: Number,
            partial: Optional[int] = None) -> "SeriesSpec":
        """ Builds the series :math:`{}_r\\phi_s(a_1,\\ldots,a_r; b_1,\\ldots,b_s; q, z)`. """
        return SeriesSpec("PHI", numerator, denominator, z, q, partial)

    @property
    def kind(self) -> SeriesKind:
        """ Series kind. """
        return self._kind

    @property
    def numerator(self) -> Tuple[complex, ...]:
        """ Numerator parameters. """
        return self._numerator

    @property
    def denominator(self) -> Tuple[complex, ...]:
        """ Denominator parameters. """
        return self._denominator

    @property
    def base(self) -> Optional[float]:
        """ The base, or :obj:`None` for a :math:`{}_rF_s` series. """
        return self._base

    @property
    def argument(self) -> complex:
        """ The argument. """
        return self._argument

    @property
    def partial(self) -> Optional[int]:
        """ The partial sum index ``N`` of :math:`{}_r\\tilde F_s` and :math:`{}_r\\tilde\\phi_s`, or :obj:`None` for the full series. """
        return self._partial

    @property
    def excess(self) -> int:
        """ The integer :math:`1+s-r`. """
        return 1+len(self._denominator)-len(self._numerator)

    def with_argument(self, z: Number) -> "SeriesSpec":
        """ Returns the same series with a different argument. """
        return SeriesSpec(self._kind, self._numerator, self._denominator, z, self._base, self._partial)

    def with_partial(self, partial: Optional[int]) -> "SeriesSpec":
        """ Returns the same series with a different truncation. """
        return SeriesSpec(self._kind, self._numerator, self._denominator, self._argument, self._base, partial)

    def termination_index(self) -> Optional[int]:
        """
            The smallest ``n`` such that a numerator parameter equals :math:`-n` (or :math:`q^{-n}`),
            or :obj:`None` if the series does not terminate.
        """
        best: Optional[int] = None
        for a in self._numerator:
            n = self._terminating_degree(a)
            if n is not None and (best is None or n < best):
                best = n
        return best

    def _terminating_degree(self, a: complex) -> Optional[int]:
        if self._kind == "F":
            if abs(a.imag) > _TERMINATION_TOL*max(1.0, abs(a)) or a.real > 0.5:
                return None
            n = round(-a.real)
            if abs(a.real+n) <= _TERMINATION_TOL*max(1.0, abs(a)):
                return n
            return None
        assert self._base is not None
        if a == 0 or abs(a.imag) > _TERMINATION_TOL*abs(a) or a.real <= 0:
            return None
        x = -math.log(a.real)/math.log(self._base)
        n = round(x)
        if n >= 0 and abs(x-n) <= _TERMINATION_TOL*max(1.0, abs(x)):
            return n
        return None

    def numerator_factor(self, k: int) -> complex:
        """ The numerator factor of the term ratio :math:`t_{k+1}/t_k`. """
        res = 1+0j
        if self._kind == "F":
            for a in self._numerator:
                res *= a+k
        else:
            assert self._base is not None
            qk = self._base**k
            for a in self._numerator:
                res *= 1-a*qk
        return res

    def denominator_factors(self, k: int) -> List[complex]:
        """ The denominator factors of the term ratio :math:`t_{k+1}/t_k`, including :math:`k+1` or :math:`1-q^{k+1}`. """
        if self._kind == "F":
            return [b+k for b in self._denominator]+[complex(k+1)]
        assert self._base is not None
        qk = self._base**k
        return [1-b*qk for b in self._denominator]+[complex(1-qk*self._base)]

    def ratio(self, k: int) -> complex:
        """
            The term ratio :math:`t_{k+1}/t_k`.

            :raises PoleError: if a denominator factor vanishes at index ``k``
        """
        num = self.numerator_factor(k)
        den = 1+0j
        for j, factor in enumerate(self.denominator_factors(k)):
            scale = 1.0 if j == len(self._denominator) else max(1.0, abs(self._denominator[j]))
            if abs(factor) <= _POLE_TOL*scale:
                raise PoleError(f"Denominator factor vanishes at term {k+1} of {self!r}.")
            den *= factor
        res = num/den*self._argument
        if self._kind == "PHI":
            e = self.excess
            if e != 0:
                assert self._base is not None
                res *= (-1)**e*self._base**(e*k)
        return res

    def terms(self, upto: int) -> List[complex]:
        """
            The terms :math:`t_0, \\ldots, t_{\\text{upto}}` of the series, with zeros after termination.

            :raises PoleError: if a denominator vanishes before the series terminates
        """
        stop = self.termination_index()
        res = [1+0j]
        t = 1+0j
        for k in range(upto):
            if stop is not None and k >= stop:
                t = 0j
            else:
                t *= self.ratio(k)
            res.append(t)
        return res

    def __repr__(self) -> str:
        num = list(self._numerator)
        den = list(self._denominator)
        tail = "" if self._partial is None else f", partial={self._partial}"
        if self._kind == "F":
            return f"SeriesSpec.F({num}, {den}, {self._argument!r}{tail})"
        return f"SeriesSpec.phi({num}, {den}, {self._base!r}, {self._argument!r}{tail})"

    @property
    def _as_tuple(self) -> Tuple[Any, ...]:
        return (SeriesSpec, self._kind, self._numerator, self._denominator, self._base, self._argument, self._partial)

    def __hash__(self) -> int:
        return hash(self._as_tuple)

    def __eq__(self, other: Any) -> bool:
        if self is other:
            return True
        if not isinstance(other, SeriesSpec):
            return NotImplemented
        return self._as_tuple == other._as_tuple


def _sum_terms(spec: SeriesSpec, last: int, precision_tol: float) -> complex:
    total = 1+0j
    magnitude = 1.0
    t = 1+0j
    for k in range(last):
        t *= spec.ratio(k)
        total += t
        magnitude += abs(t)
    _check_precision(spec, total, magnitude, precision_tol)
    return total

def _check_precision(spec: SeriesSpec, total: complex, magnitude: float, precision_tol: float) -> None:
    bound = _EPS*magnitude
    if bound > precision_tol*max(1.0, abs(total)):
        raise PrecisionError(f"Cancellation in {spec!r}: sum {total!r} from terms of total magnitude "
                             f"{magnitude:.3g}, rounding error bound {bound:.3g}.")

def eval_partial(spec: SeriesSpec, precision_tol: Optional[float] = None) -> complex:
    """
        Evaluates the partial sum :math:`{}_r\\tilde F_s` or :math:`{}_r\\tilde\\phi_s`, i.e. the first :math:`N+1` terms
        of the series, where ``N = spec.partial``. Later denominators are never evaluated, so a denominator
        vanishing beyond index ``N`` is harmless.

        >>> eval_partial(SeriesSpec.F([-1, 2], [1], 0.15, partial=0))
        (1+0j)

        :param spec: the series, with ``spec.partial`` set
        :type spec: :class:`SeriesSpec`
        :param precision_tol: bound on the relative rounding error of the sum, defaulting to the one set by :func:`precision`
        :type precision_tol: :obj:`float` or :obj:`None`, *optional*

        :raises ValueError: if ``spec.partial`` is :obj:`None`
        :raises PoleError: if a denominator vanishes within the first ``N+1`` terms (before termination)
        :raises PrecisionError: if cancellation exceeds ``precision_tol``
    """
    validate(spec, SeriesSpec)
    validate(precision_tol, Optional[float])
    if precision_tol is None:
        precision_tol = _precision_tol.get()
    if spec.partial is None:
        raise ValueError("Series is not a partial sum.")
    last = spec.partial
    stop = spec.termination_index()
    if stop is not None:
        last = min(last, stop)
    return _sum_terms(spec, last, precision_tol)

def eval_series(spec: SeriesSpec, tol: float = DEFAULT_SERIES_TOL, max_terms: int = DEFAULT_MAX_TERMS,
                precision_tol: Optional[float] = None) -> complex:
    """
        Evaluates a (basic) hypergeometric series.

        - Partial sums are delegated to :func:`eval_partial`.
        - Terminating series are summed exactly up to their termination index, ignoring ``tol``.
        - Non-terminating series are summed until three consecutive terms have magnitude below ``tol``
          times the partial sum.

        Non-terminating series must have their argument strictly inside the radius of convergence
        (:math:`\\infty` if :math:`r < s+1`, :math:`1` if :math:`r = s+1`). A :math:`{}_{s+1}F_s` series
        is also admitted on :math:`|z| = 1` when :math:`\\Re(\\sum b_j - \\sum a_i) > 0`.

        >>> eval_series(SeriesSpec.phi([4], [], 0.5, 0.25))
        0j

        :param spec: the series
        :type spec: :class:`SeriesSpec`
        :param tol: relative truncation tolerance for non-terminating series
        :type tol: :obj:`float`, *optional*
        :param max_terms: cap on the number of terms for non-terminating series
        :type max_terms: :obj:`int`, *optional*
        :param precision_tol: bound on the relative rounding error of the sum, defaulting to the one set by :func:`precision`
        :type precision_tol: :obj:`float` or :obj:`None`, *optional*

        :raises DivergentError: if a non-terminating series is evaluated outside its radius of convergence
        :raises PoleError: if a denominator vanishes before termination
        :raises ConvergenceError: if the truncation criterion is not met within ``max_terms`` terms
        :raises PrecisionError: if cancellation exceeds ``precision_tol``
    """
    validate(spec, SeriesSpec)
    validate(tol, float)
    validate(max_terms, int)
    validate(precision_tol, Optional[float])
    if precision_tol is None:
        precision_tol = _precision_tol.get()
    if spec.partial is not None:
        return eval_partial(spec, precision_tol)
    stop = spec.termination_index()
    if stop is not None:
        return _sum_terms(spec, stop, precision_tol)
    z = spec.argument
    excess = spec.excess
    if z == 0:
        return 1+0j
    if excess < 0:
        raise DivergentError(f"Non-terminating series with r > s+1 diverges: {spec!r}.")
    if excess == 0:
        if abs(z) > 1 or (abs(z) == 1 and not _converges_on_circle(spec)):
            raise DivergentError(f"Argument outside the radius of convergence: {spec!r}.")
    total = 1+0j
    magnitude = 1.0
    t = 1+0j
    small = 0
    for k in range(max_terms):
        t *= spec.ratio(k)
        total += t
        magnitude += abs(t)
        if abs(t) <= tol*abs(total):
            small += 1
            if small >= _STOP_RUN:
                _check_precision(spec, total, magnitude, precision_tol)
                return total
        else:
            small = 0
    raise ConvergenceError(f"Series did not converge within {max_terms} terms: {spec!r}.")

def _converges_on_circle(spec: SeriesSpec) -> bool:
    if spec.kind != "F":
        return False
    return (sum(spec.denominator)-sum(spec.numerator)).real > 0

def fseries(numerator: Sequence[Number], denominator: Sequence[Number], z: Number,
            partial: Optional[int] = None) -> complex:
    """
        Shorthand for ``eval_series(SeriesSpec.F(numerator, denominator, z, partial))``.
    """
    return eval_series(SeriesSpec.F(numerator, denominator, z, partial))

def phiseries(numerator: Sequence[Number], denominator: Sequence[Number], q: QLike, z: Number,
              partial: Optional[int] = None) -> complex:
    """
        Shorthand for ``eval_series(SeriesSpec.phi(numerator, denominator, q, z, partial))``.
    """
    return eval_series(SeriesSpec.phi(numerator, denominator, q, z, partial))
