"""
    The limit relations of the scheme: degenerations of one family into another as a parameter tends to
    infinity (or zero), or as :math:`q \\uparrow 1`, checked numerically along a schedule.

    Each :class:`LimitRelation` carries its own parameter substitution, argument substitution and scaling,
    so that a check needs only the target degree :math:`n` and the target argument :math:`x`.

    >>> from askeyscheme.verify import limits
    >>> report = limits.check_limit("jacobi_laguerre", {"alpha": 0.5}, [3], [1.2], schedule=[1e1, 1e2, 1e3, 1e4])
    >>> report.passed
    True
    >>> len(list(limits.table(group="classical")))
    23

    A relation passes when the error at the last schedule point is at most the threshold (``1e-3`` by default)
    and the errors at the last three points are non-increasing, up to a 10% slack.
"""

from __future__ import annotations

import logging
import math
from typing import Any, Callable, Dict, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union
from typing_extensions import Final, Literal
from typing_validation import validate

from ..qcore import DomainError, Number, NumericOverflowError, as_nonnegative_integer
from .err import VerifyKeyError, VerifyValueError

_logger = logging.getLogger(__name__)

LimitGroup = Literal["classical", "basic", "q-limit"]
"""
    Literal type for the groups of limit relations:

    - ``"classical"``: between hypergeometric families
    - ``"basic"``: between basic hypergeometric families, at fixed :math:`q`
    - ``"q-limit"``: from basic hypergeometric families to hypergeometric ones, as :math:`q \\uparrow 1`
"""

LimitGroups: Final = ("classical", "basic", "q-limit")

LIMIT_TOL: Final[float] = 1e-3
"""
    Default threshold on the error at the last schedule point.
"""

MONOTONE_SLACK: Final[float] = 0.1
"""
    Relative slack admitted when checking that the tail of the errors is non-increasing.
"""

TAIL_LENGTH: Final[int] = 3
"""
    Number of trailing schedule points whose errors must be non-increasing.
"""

CONVERGED_FLOOR: Final[float] = 1e-8
"""
    Errors at or below this value count as converged: past this point, rounding noise is not required
    to decrease.
"""

T_SCHEDULE: Final[Tuple[float, ...]] = (1e1, 1e2, 1e3, 1e4)
""" Schedule for parameters tending to infinity. """

T_SCHEDULE_LONG: Final[Tuple[float, ...]] = (1e1, 1e2, 1e3, 1e4, 1e5, 1e6)
""" Longer schedule for parameters tending to infinity, for relations converging as :math:`O(t^{-1})`. """

T_SCHEDULE_CAPPED: Final[Tuple[float, ...]] = (1e1, 3e1, 1e2, 3e2, 1e3)
""" Schedule capped at :math:`t = 10^3`, for relations with complex shifts growing with :math:`t`. """

ROOT_SCHEDULE: Final[Tuple[float, ...]] = (1e4, 1e6, 1e8, 1e10, 1e12)
""" Schedule for relations converging as :math:`O(t^{-1/2})`. """

GEOMETRIC_SCHEDULE: Final[Tuple[float, ...]] = (5.0, 10.0, 20.0, 30.0, 40.0)
""" Schedule for exponents :math:`\\alpha \\to \\infty` entering as :math:`q^\\alpha`, converging geometrically. """

N_SCHEDULE: Final[Tuple[float, ...]] = (20.0, 80.0, 320.0, 1280.0)
""" Schedule for :math:`N \\to \\infty`. """

N_SCHEDULE_LONG: Final[Tuple[float, ...]] = tuple(20.0*4**k for k in range(9))
""" Longer schedule for :math:`N \\to \\infty`, up to :math:`N = 1310720`. """

QN_SCHEDULE: Final[Tuple[float, ...]] = (5.0, 10.0, 20.0, 30.0, 40.0)
""" Schedule for :math:`N \\to \\infty` entering as :math:`q^N`, converging geometrically. """

Q_SCHEDULE: Final[Tuple[float, ...]] = tuple(1-2.0**-k for k in range(3, 11))
""" Schedule for :math:`q \\uparrow 1`, with :math:`q_k = 1-2^{-k}` for :math:`k = 3, \\ldots, 10`. """

Q_SCHEDULE_LONG: Final[Tuple[float, ...]] = tuple(1-2.0**-k for k in range(3, 21))
""" Longer schedule for :math:`q \\uparrow 1`, for :math:`k = 3, \\ldots, 20`. """

HERMITE_Q_SCHEDULE: Final[Tuple[float, ...]] = tuple(1-2.0**-k for k in (10, 14, 18, 22, 26, 30))
"""
    Schedule for :math:`q \\uparrow 1` in limits to the Hermite polynomials, which converge as
    :math:`O(\\sqrt{1-q})`.
"""

P = Mapping[str, Any]
"""
    Type alias for limit parameter records.
"""

LimitSide = Callable[[P, int, complex, float], complex]
"""
    Type alias for the scaled source side, as a function of (params, degree, target argument, limit parameter).
"""

TargetSide = Callable[[P, int, complex], complex]
"""
    Type alias for the target side, as a function of (params, degree, target argument).
"""

class LimitRelation(NamedTuple):
    """
        A limit relation :math:`\\lim s_n\\,p_n(\\ldots) = r_n(x)`, approached along a schedule of the limit parameter.
        For :math:`q \\uparrow 1` relations, the schedule holds the values of :math:`q` themselves.
    """

    name: str
    """ Relation name (e.g. ``"jacobi_laguerre"``). """

    group: LimitGroup
    """ Relation group. """

    source: str
    """ Name of the source family. """

    target: str
    """ Name of the target family. """

    description: str
    """ One-line statement of the limit. """

    forms: Tuple[LimitSide, ...]
    """ The scaled source sides; several forms of the same limit are checked together. """

    rhs: TargetSide
    """ The target side. """

    defaults: Mapping[str, Any]
    """ Default parameters. """

    degrees: Callable[[P], Sequence[int]]
    """ Default degrees. """

    points: Callable[[P], Sequence[Number]]
    """ Default target arguments. """

    schedule: Tuple[float, ...]
    """ Default schedule of the limit parameter, strictly increasing. """

    threshold: float = LIMIT_TOL
    """ Threshold on the error at the last schedule point. """

    constraint: Optional[Callable[[P], Optional[str]]] = None
    """ Returns a message if the parameters lie outside the relation's domain. """

    @property
    def is_q_limit(self) -> bool:
        """ Whether the relation is approached as :math:`q \\uparrow 1`. """
        return self.group == "q-limit"


class LimitReport(NamedTuple):
    """
        Outcome of a limit check.
    """

    name: str
    """ Relation name. """

    errors: Tuple[float, ...]
    """ Errors :math:`\\max |s_n p_n - r_n|/\\max(1, |r_n|)` along the schedule. """

    residual: float
    """ Error at the last evaluated schedule point. """

    threshold: float
    """ The threshold the last error was compared against. """

    passed: bool
    """ Whether the check passed. """

    schedule: Tuple[float, ...]
    """ The schedule points actually evaluated. """

    truncated: bool = False
    """ Whether the schedule was truncated at a point exceeding representable magnitudes. """


_limits: Dict[str, LimitRelation] = {}

def register(relation: LimitRelation, *, overwrite: bool = False) -> None:
    """
        Registers a limit relation in the catalog.

        :raises ValueError: if ``overwrite`` is :obj:`False` and a relation with the same name already exists,
                            or if the schedule is too short or not strictly increasing
    """
    if not isinstance(relation, LimitRelation):
        raise TypeError(f"Expected LimitRelation, found {type(relation)!r}.")
    validate(overwrite, bool)
    if not overwrite and relation.name in _limits:
        raise VerifyValueError(f"Limit relation named {relation.name!r} already exists.")
    if relation.group not in LimitGroups:
        raise VerifyValueError(f"Invalid group {relation.group!r} for limit relation {relation.name!r}.")
    _check_schedule(relation, relation.schedule, 4)
    if not relation.forms:
        raise VerifyValueError(f"Limit relation {relation.name!r} has no source form.")
    _limits[relation.name] = relation

def get(name: str) -> LimitRelation:
    """
        Gets the limit relation with given name.

        >>> get("krawtchouk_charlier").target
        'charlier'

        :raises KeyError: if no such relation exists
    """
    validate(name, str)
    _ensure_catalog()
    if name not in _limits:
        raise VerifyKeyError(f"No limit relation named {name!r}.")
    return _limits[name]

def exists(name: str) -> bool:
    """
        Checks whether a limit relation with given name exists.
    """
    validate(name, str)
    _ensure_catalog()
    return name in _limits

def table(*, group: Optional[str] = None, family: Optional[str] = None) -> Iterator[LimitRelation]:
    """
        Iterates through the limit relations in registration order, optionally filtered by group
        and by involved family (as source or target).

        >>> all(r.group == "q-limit" for r in table(group="q-limit"))
        True
    """
    validate(group, Optional[str])
    validate(family, Optional[str])
    _ensure_catalog()
    for relation in list(_limits.values()):
        if group is not None and relation.group != group:
            continue
        if family is not None and family not in (relation.source, relation.target):
            continue
        yield relation

def edges() -> List[Tuple[str, str]]:
    """
        The edges (source, target) of the limit graph, without repetitions, in registration order.

        >>> ("wilson", "continuous-dual-hahn") in edges()
        True
    """
    res: List[Tuple[str, str]] = []
    for relation in table():
        edge = (relation.source, relation.target)
        if edge not in res:
            res.append(edge)
    return res

_catalog_loaded = False

def _ensure_catalog() -> None:
    # pylint: disable = import-outside-toplevel, unused-import, cyclic-import, global-statement
    global _catalog_loaded
    if _catalog_loaded:
        return
    _catalog_loaded = True
    from ._limits import classical, basic, qlimits
    _logger.debug("Loaded limit catalog with %d entries.", len(_limits))


def _check_schedule(relation: LimitRelation, schedule: Sequence[float], min_length: int) -> None:
    if len(schedule) < min_length:
        raise VerifyValueError(f"Schedule of limit relation {relation.name!r} needs at least {min_length} points.")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise VerifyValueError(f"Schedule of limit relation {relation.name!r} must be strictly increasing.")
    if relation.is_q_limit and not all(0 < s < 1 for s in schedule):
        raise VerifyValueError(f"Schedule of q-limit relation {relation.name!r} must lie in (0, 1).")

def _prepare(relation: LimitRelation, params: Optional[Mapping[str, Any]]) -> Dict[str, Any]:
    record = dict(relation.defaults)
    if params is not None:
        unknown = set(params)-set(record)
        if unknown:
            raise VerifyValueError(f"Unknown parameters {sorted(unknown)} for limit relation {relation.name!r}, "
                                   f"expected a subset of {sorted(record)}.")
        record.update(params)
    if "q" in record:
        q = complex(record["q"])
        if q.imag != 0 or not 0 < q.real < 1:
            raise DomainError(f"Limit relation {relation.name!r} needs a base 0 < q < 1, found {record['q']!r}.")
        record["q"] = q.real
    if "N" in record:
        N = as_nonnegative_integer(record["N"])
        if N is None:
            raise DomainError(f"Limit relation {relation.name!r} needs a non-negative integer N, "
                              f"found {record['N']!r}.")
        record["N"] = N
    if relation.constraint is not None:
        message = relation.constraint(record)
        if message is not None:
            raise DomainError(f"Parameters violate the domain of limit relation {relation.name!r}: {message}")
    return record

def _error(relation: LimitRelation, p: P, lam: float, targets: Mapping[Tuple[int, complex], complex]) -> float:
    worst = 0.0
    for (n, x), target in targets.items():
        scale = max(1.0, abs(target))
        for form in relation.forms:
            value = complex(form(p, n, x, lam))
            worst = max(worst, abs(value-target)/scale)
    return worst

def tail_ok(errors: Sequence[float], *, slack: float = MONOTONE_SLACK, length: int = TAIL_LENGTH) -> bool:
    """
        Whether the last ``length`` errors are non-increasing up to a relative ``slack``,
        ignoring errors at or below :obj:`CONVERGED_FLOOR`.

        >>> tail_ok([1e-1, 1e-2, 1e-3])
        True
        >>> tail_ok([1e-3, 1e-2, 1e-1])
        False
        >>> tail_ok([1e-2, 1e-12, 3e-12])
        True
    """
    tail = list(errors[-length:])
    return all(b <= a*(1+slack) or b <= CONVERGED_FLOOR for a, b in zip(tail, tail[1:]))

def check_limit(name: str, params: Optional[Mapping[str, Any]] = None,
                ns: Optional[Sequence[int]] = None, xs: Optional[Sequence[Number]] = None, *,
                schedule: Optional[Sequence[float]] = None, tol: Optional[float] = None) -> LimitReport:
    """
        Checks a limit relation along its schedule (or the given one), over the given degrees and target
        arguments (or the relation's defaults).

        At each schedule point, the error is :math:`\\max |s_n p_n - r_n|/\\max(1, |r_n|)` over degrees, arguments
        and source forms, with the target values :math:`r_n` computed once. A schedule point at which the source
        side exceeds representable magnitudes ends the schedule: the check is decided on the points before it,
        and the truncation is logged and reported.

        >>> report = check_limit("q_krawtchouk_krawtchouk", {"p": 2.0, "N": 6}, [2], [3])
        >>> report.passed, report.schedule[-1] == Q_SCHEDULE_LONG[-1]
        (True, True)

        :param name: the relation name
        :type name: :obj:`str`
        :param params: parameters, completed by the relation's defaults
        :type params: :obj:`Mapping` or :obj:`None`, *optional*
        :param ns: the degrees
        :type ns: :obj:`Sequence` of :obj:`int` or :obj:`None`, *optional*
        :param xs: the target arguments
        :type xs: :obj:`Sequence` of :obj:`Number` or :obj:`None`, *optional*
        :param schedule: the schedule of the limit parameter, strictly increasing
        :type schedule: :obj:`Sequence` of :obj:`float` or :obj:`None`, *optional*
        :param tol: the threshold on the last error
        :type tol: :obj:`float` or :obj:`None`, *optional*

        :raises KeyError: if no such relation exists
        :raises ValueError: if the schedule is not strictly increasing, or does not lie in (0, 1) for q-limits
        :raises DomainError: if the parameters lie outside the relation's domain
    """
    validate(tol, Optional[float])
    relation = get(name)
    p = _prepare(relation, params)
    degrees = list(relation.degrees(p) if ns is None else ns)
    points = [complex(x) for x in (relation.points(p) if xs is None else xs)]
    lams = list(relation.schedule) if schedule is None else [float(s) for s in schedule]
    _check_schedule(relation, lams, 2)
    threshold = relation.threshold if tol is None else tol
    targets = {(n, x): complex(relation.rhs(p, n, x)) for n in degrees for x in points}
    errors: List[float] = []
    evaluated: List[float] = []
    truncated = False
    for lam in lams:
        try:
            err = _error(relation, p, lam, targets)
        except (OverflowError, NumericOverflowError) as e:
            _logger.warning("Limit relation %s overflows at schedule point %r, schedule truncated: %s", name, lam, e)
            truncated = True
            break
        if not math.isfinite(err):
            _logger.warning("Limit relation %s is not finite at schedule point %r, schedule truncated.", name, lam)
            truncated = True
            break
        errors.append(err)
        evaluated.append(lam)
    if not errors:
        return LimitReport(name, (), math.inf, threshold, False, (), truncated)
    passed = errors[-1] <= threshold and tail_ok(errors)
    if not passed:
        _logger.info("Limit relation %s failed with errors %r at %r", name, errors, p)
    return LimitReport(name, tuple(errors), errors[-1], threshold, passed, tuple(evaluated), truncated)

def limit_report(name: str, params: Optional[Mapping[str, Any]] = None) -> Dict[str, Union[str, float, bool]]:
    """
        A flat summary of :func:`check_limit` at default settings, keyed by the suite record fields.
    """
    report = check_limit(name, params)
    return {"id": name, "family": get(name).source, "residual": report.residual,
            "threshold": report.threshold, "pass": report.passed}
