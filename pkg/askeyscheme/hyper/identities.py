"""
    Catalog of summation, transformation and confluence identities, with a checker.

    Each catalog entry is an :class:`IdentityDescriptor`: two evaluable sides over a named parameter record,
    a seeded parameter sampler, an optional domain constraint and an exactness class.

    >>> from askeyscheme.hyper import identities
    >>> report = identities.check_identity("vandermonde", {"n": 3, "b": 0.5, "c": 2})
    >>> report.passed
    True
    >>> identities.exists("vandermonde")
    True
"""

from __future__ import annotations

import logging
from random import Random
from typing import Any, Callable, Dict, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union
from typing_extensions import Final, Literal
from typing_validation import validate

from ..qcore import Number, DomainError, to_complex, as_nonnegative_integer
from .err import IdentityKeyError, IdentityValueError
from .series import precision

_logger = logging.getLogger(__name__)

Exactness = Literal["TERMINATING_EXACT", "ANALYTIC_TOL", "LIMIT_SCHEDULE", "FORMAL_SERIES"]
"""
    Literal type for the exactness class of an identity:

    - ``"TERMINATING_EXACT"``: both sides are finite sums or products
    - ``"ANALYTIC_TOL"``: at least one side is a convergent infinite series or product
    - ``"LIMIT_SCHEDULE"``: one side is a limit, approached along a schedule of the parameter ``lam``
    - ``"FORMAL_SERIES"``: equality of formal power series coefficients
"""

Exactnesses: Final = ("TERMINATING_EXACT", "ANALYTIC_TOL", "LIMIT_SCHEDULE", "FORMAL_SERIES")

THRESHOLDS: Final[Mapping[str, float]] = {
    "TERMINATING_EXACT": 1e-12,
    "ANALYTIC_TOL": 1e-9,
    "FORMAL_SERIES": 1e-12,
    "LIMIT_SCHEDULE": 1e-6,
}
"""
    Default residual thresholds, by exactness class. For ``"LIMIT_SCHEDULE"`` the threshold applies
    to the error at the last point of the schedule.
"""

DEFAULT_SCHEDULE: Final[Tuple[float, ...]] = (1e1, 1e2, 1e3, 1e4)
"""
    Default schedule for the limit parameter ``lam``, increasing to infinity.
"""

MONOTONE_SLACK: Final[float] = 0.1
"""
    Relative slack admitted when checking that errors along a schedule are non-increasing.
"""

COUNT_PARAMS: Final[Tuple[str, ...]] = ("n", "k")
"""
    Parameters which must be non-negative integers: degrees, and numbers of terms or factors.
"""

STABILITY_TOLS: Final[Mapping[str, float]] = {
    "TERMINATING_EXACT": 1e-14,
    "ANALYTIC_TOL": 1e-12,
    "FORMAL_SERIES": 1e-14,
}
"""
    Bounds on the relative rounding error of the series on both sides of a sampled identity, by exactness class.
    Limit identities are not screened.
"""

MAX_REDRAWS: Final[int] = 50
"""
    Largest number of redraws of a sampled parameter record whose sides cannot be evaluated stably.
"""

Params = Mapping[str, complex]
"""
    Type alias for named parameter records.
"""

SideBuilder = Callable[[Params], Number]
"""
    Type alias for the sides of an identity.
"""

Sampler = Callable[[Random], Dict[str, Number]]
"""
    Type alias for seeded parameter samplers.
"""

Constraint = Callable[[Params], Optional[str]]
"""
    Type alias for parameter-domain constraints: returns an error message if the parameters are invalid,
    :obj:`None` otherwise.
"""

class IdentityDescriptor:
    """
        Container class for a catalog identity :math:`\\text{LHS}(p) = \\text{RHS}(p)`.

        For ``"LIMIT_SCHEDULE"`` identities, the left hand side receives the additional parameter ``lam``,
        and the identity is the statement :math:`\\lim_{\\text{lam}\\to\\infty} \\text{LHS} = \\text{RHS}`.

        :param name: the identity name
        :type name: :obj:`str`
        :param group: the catalog group (e.g. ``"summation"``)
        :type group: :obj:`str`
        :param description: a one-line description
        :type description: :obj:`str`
        :param exactness: the exactness class
        :type exactness: :obj:`Exactness`
        :param lhs: the left hand side
        :type lhs: :obj:`SideBuilder`
        :param rhs: the right hand side
        :type rhs: :obj:`SideBuilder`
        :param sampler: draws random admissible parameters
        :type sampler: :obj:`Sampler`
        :param defaults: a fixed admissible parameter record
        :type defaults: :obj:`Mapping` of :obj:`str` to :obj:`Number`
        :param constraint: the parameter-domain constraint
        :type constraint: :obj:`Constraint` or :obj:`None`, *optional*
        :param schedule: the default limit schedule (``"LIMIT_SCHEDULE"`` only)
        :type schedule: :obj:`Sequence` of :obj:`float` or :obj:`None`, *optional*
        :param threshold: overrides the default residual threshold of the exactness class
        :type threshold: :obj:`float` or :obj:`None`, *optional*
    """

    _name: str
    _group: str
    _description: str
    _exactness: Exactness
    _lhs: SideBuilder
    _rhs: SideBuilder
    _sampler: Sampler
    _defaults: Dict[str, Number]
    _constraint: Optional[Constraint]
    _schedule: Optional[Tuple[float, ...]]
    _threshold: Optional[float]

    __slots__ = ("__weakref__", "_name", "_group", "_description", "_exactness", "_lhs", "_rhs",
                 "_sampler", "_defaults", "_constraint", "_schedule", "_threshold")

    def __new__(cls, name: str, group: str, description: str, exactness: Exactness,
                lhs: SideBuilder, rhs: SideBuilder, sampler: Sampler, defaults: Mapping[str, Number], *,
                constraint: Optional[Constraint] = None,
                schedule: Optional[Sequence[float]] = None,
                threshold: Optional[float] = None) -> "IdentityDescriptor":
        # pylint: disable = too-many-arguments
        validate(name, str)
        validate(group, str)
        validate(description, str)
        validate(exactness, str)
        if exactness not in Exactnesses:
            raise IdentityValueError(f"Invalid exactness class {exactness!r}.")
        if (exactness == "LIMIT_SCHEDULE") != (schedule is not None):
            raise IdentityValueError("A schedule must be attached if and only if the identity is a limit.")
        if schedule is not None and any(b <= a for a, b in zip(schedule, schedule[1:])):
            raise IdentityValueError("Limit schedule must be strictly increasing.")
        instance = super().__new__(cls)
        instance._name = name
        instance._group = group
        instance._description = description
        instance._exactness = exactness
        instance._lhs = lhs
        instance._rhs = rhs
        instance._sampler = sampler
        instance._defaults = dict(defaults)
        instance._constraint = constraint
        instance._schedule = None if schedule is None else tuple(float(s) for s in schedule)
        instance._threshold = threshold
        return instance

    @property
    def name(self) -> str:
        """ Identity name. """
        return self._name

    @property
    def group(self) -> str:
        """ Catalog group. """
        return self._group

    @property
    def description(self) -> str:
        """ One-line description. """
        return self._description

    @property
    def exactness(self) -> Exactness:
        """ Exactness class. """
        return self._exactness

    @property
    def defaults(self) -> Dict[str, Number]:
        """ A fixed admissible parameter record (copy). """
        return dict(self._defaults)

    @property
    def schedule(self) -> Optional[Tuple[float, ...]]:
        """ The default limit schedule, or :obj:`None` if the identity is not a limit. """
        return self._schedule

    @property
    def threshold(self) -> float:
        """ Default residual threshold for this identity. """
        if self._threshold is not None:
            return self._threshold
        return THRESHOLDS[self._exactness]

    def sample(self, rng: Random) -> Dict[str, Number]:
        """
            Draws a random admissible parameter record. Records on which either side cannot be evaluated within
            the bound of :obj:`STABILITY_TOLS` for the exactness class (cancellation, or a nearby pole) are redrawn,
            up to :obj:`MAX_REDRAWS` times.
        """
        record = self._sampler(rng)
        tol = STABILITY_TOLS.get(self._exactness)
        if tol is None:
            return record
        for _ in range(MAX_REDRAWS):
            if self._stable(record, tol):
                return record
            record = self._sampler(rng)
        _logger.debug("No stable draw for identity %s within %d redraws.", self._name, MAX_REDRAWS)
        return record

    def _stable(self, record: Mapping[str, Number], tol: float) -> bool:
        values = {k: v if isinstance(v, int) else complex(v) for k, v in record.items()}
        try:
            if self.violation(values) is not None:
                return False
            with precision(tol):
                self.lhs(values)
                self.rhs(values)
        except (ArithmeticError, ValueError, KeyError):
            return False
        return True

    def violation(self, params: Params) -> Optional[str]:
        """ Returns a message describing how the parameters violate the domain, or :obj:`None`. """
        if self._constraint is None:
            return None
        return self._constraint(params)

    def lhs(self, params: Params) -> complex:
        """ Evaluates the left hand side. """
        return complex(self._lhs(params))

    def rhs(self, params: Params) -> complex:
        """ Evaluates the right hand side. """
        return complex(self._rhs(params))

    def __repr__(self) -> str:
        return f"IdentityDescriptor({self._name!r}, {self._group!r}, {self._exactness!r})"


class IdentityReport(NamedTuple):
    """
        Outcome of an identity check.
    """

    name: str
    """ Identity name. """

    residual: float
    """ Relative residual :math:`|L-R|/\\max(1,|L|,|R|)` (at the last schedule point for limits). """

    threshold: float
    """ The threshold the residual was compared against. """

    passed: bool
    """ Whether the check passed. """

    errors: Tuple[float, ...] = ()
    """ Residuals along the schedule, for limit identities. """


def residual(lhs: Number, rhs: Number) -> float:
    """
        The relative residual :math:`|L-R|/\\max(1,|L|,|R|)`.

        >>> residual(2, 2)
        0.0
        >>> residual(0, 0.5)
        0.5
    """
    return abs(lhs-rhs)/max(1.0, abs(lhs), abs(rhs))

def is_monotone(errors: Sequence[float], slack: float = MONOTONE_SLACK) -> bool:
    """
        Whether a sequence of errors is non-increasing, up to a relative ``slack``
        (errors already below ``1e-14`` are ignored).
    """
    return all(b <= a*(1+slack) or b <= 1e-14 for a, b in zip(errors, errors[1:]))


_identities: Dict[str, IdentityDescriptor] = {}

def get(name: str) -> IdentityDescriptor:
    """
        Gets the catalog identity with given name.

        :raises KeyError: if no such identity exists
    """
    validate(name, str)
    _ensure_catalog()
    if name not in _identities:
        raise IdentityKeyError(f"No identity named {name!r}.")
    return _identities[name]

def exists(name: str) -> bool:
    """
        Checks whether an identity with given name exists in the catalog.
    """
    validate(name, str)
    _ensure_catalog()
    return name in _identities

def register(identity: IdentityDescriptor, *, overwrite: bool = False) -> None:
    """
        Registers an identity in the catalog.

        :param identity: the identity
        :type identity: :class:`IdentityDescriptor`
        :param overwrite: whether an existing identity with the same name should be overwritten
        :type overwrite: :obj:`bool`, *optional*

        :raises ValueError: if ``overwrite`` is :obj:`False` and an identity with the same name already exists
    """
    validate(identity, IdentityDescriptor)
    validate(overwrite, bool)
    if not overwrite and identity.name in _identities:
        raise IdentityValueError(f"Identity named {identity.name!r} already exists.")
    _identities[identity.name] = identity

def table(*, group: Union[None, str] = None, exactness: Union[None, str] = None) -> Iterator[IdentityDescriptor]:
    """
        Iterates through the catalog identities, optionally filtered by group and exactness class.

        >>> all(i.group == "summation" for i in table(group="summation"))
        True
    """
    validate(group, Optional[str])
    validate(exactness, Optional[str])
    _ensure_catalog()
    for identity in list(_identities.values()):
        if group is not None and identity.group != group:
            continue
        if exactness is not None and identity.exactness != exactness:
            continue
        yield identity

_catalog_loaded = False

def _ensure_catalog() -> None:
    # pylint: disable = import-outside-toplevel, unused-import, cyclic-import, global-statement
    global _catalog_loaded
    if _catalog_loaded:
        return
    _catalog_loaded = True
    from ._catalog import factorials, confluences, summations, transformations, functions
    _logger.debug("Loaded identity catalog with %d entries.", len(_identities))


def _evaluate(identity: IdentityDescriptor, side: Callable[[Params], Any], values: Params) -> Any:
    try:
        return side(values)
    except KeyError as e:
        raise IdentityValueError(f"Missing parameter {e.args[0]!r} for identity {identity.name!r}.") from e

def _prepare(identity: IdentityDescriptor, params: Optional[Mapping[str, Any]]) -> Dict[str, complex]:
    record: Dict[str, Number] = identity.defaults if params is None else dict(params)
    values = {k: to_complex(v, f"parameter {k!r}") if not isinstance(v, int) else v for k, v in record.items()}
    for key in COUNT_PARAMS:
        if key in values and as_nonnegative_integer(values[key]) is None:
            raise DomainError(f"Parameter {key!r} of identity {identity.name!r} must be a non-negative integer, "
                              f"found {values[key]!r}.")
    message = _evaluate(identity, identity.violation, values) # type: ignore[arg-type]
    if message is not None:
        raise DomainError(f"Parameters violate the domain of identity {identity.name!r}: {message}")
    return values # type: ignore[return-value]

def check_identity(name: str, params: Optional[Mapping[str, Any]] = None, tol: Optional[float] = None) -> IdentityReport:
    """
        Checks a catalog identity on the given parameters (or on the identity's default parameters).

        Limit identities are checked along their default schedule, as in :func:`check_confluence`.

        >>> check_identity("newton_binomium", {"n": 2, "z": 0.7, "q": 0.5}).passed
        True

        :param name: the identity name
        :type name: :obj:`str`
        :param params: the parameter record
        :type params: :obj:`Mapping` or :obj:`None`, *optional*
        :param tol: the residual threshold, defaulting to the threshold of the exactness class
        :type tol: :obj:`float` or :obj:`None`, *optional*

        :raises KeyError: if no such identity exists
        :raises ValueError: if a parameter is missing
        :raises DomainError: if the parameters violate the identity's domain, or a degree is not a non-negative integer
    """
    validate(tol, Optional[float])
    identity = get(name)
    if identity.exactness == "LIMIT_SCHEDULE":
        return check_confluence(name, params, tol=tol)
    values = _prepare(identity, params)
    threshold = identity.threshold if tol is None else tol
    res = residual(_evaluate(identity, identity.lhs, values), _evaluate(identity, identity.rhs, values))
    passed = res <= threshold
    if not passed:
        _logger.info("Identity %s failed with residual %.3e at %r", name, res, values)
    return IdentityReport(name, res, threshold, passed)

def check_confluence(name: str, params: Optional[Mapping[str, Any]] = None,
                     schedule: Optional[Sequence[float]] = None, tol: Optional[float] = None) -> IdentityReport:
    """
        Checks a limit identity along a schedule :math:`\\lambda_1 < \\lambda_2 < \\cdots`.
        The check passes if the residual at the last point is at most ``tol`` (default ``1e-6``)
        and the residuals are non-increasing along the schedule (with 10% slack).

        Exact identities (e.g. parameter cancellations) are checked as in :func:`check_identity`,
        ignoring the schedule.

        >>> check_confluence("confluence_numerator_denominator", {"a": 0.3, "b": 1.7, "n": 3, "mu": 0.37, "z": 0.4}).passed
        True

        :param name: the identity name
        :type name: :obj:`str`
        :param params: the parameter record
        :type params: :obj:`Mapping` or :obj:`None`, *optional*
        :param schedule: the schedule, defaulting to the identity's own
        :type schedule: :obj:`Sequence` of :obj:`float` or :obj:`None`, *optional*

        :raises KeyError: if no such identity exists
        :raises ValueError: if the schedule is not strictly increasing
        :raises DomainError: if the parameters violate the identity's domain
    """
    validate(tol, Optional[float])
    identity = get(name)
    if identity.exactness != "LIMIT_SCHEDULE":
        return check_identity(name, params, tol)
    values = _prepare(identity, params)
    lams: List[float] = list(identity.schedule or DEFAULT_SCHEDULE) if schedule is None else [float(s) for s in schedule]
    if not lams or any(b <= a for a, b in zip(lams, lams[1:])):
        raise IdentityValueError("Limit schedule must be non-empty and strictly increasing.")
    threshold = identity.threshold if tol is None else tol
    target = _evaluate(identity, identity.rhs, values)
    errors = tuple(residual(_evaluate(identity, identity.lhs, {**values, "lam": lam}), target) for lam in lams)
    passed = errors[-1] <= threshold and is_monotone(errors)
    if not passed:
        _logger.info("Limit identity %s failed with errors %r at %r", name, errors, values)
    return IdentityReport(name, errors[-1], threshold, passed, errors)

def sample_checks(name: str, draws: int, seed: int) -> List[IdentityReport]:
    """
        Checks an identity on ``draws`` seeded random parameter records.

        >>> all(r.passed for r in sample_checks("vandermonde", 5, 42))
        True
    """
    validate(draws, int)
    validate(seed, int)
    identity = get(name)
    rng = Random(f"{seed}:{name}")
    return [check_identity(name, identity.sample(rng)) for _ in range(draws)]
