"""
    Catalog of closed-form relations between families: symmetries, dualities, quadratic transformations,
    base inversions :math:`q \\to q^{-1}`, special values and equivalent series forms.

    Each relation compares two sides :math:`L(p, n, x)` and :math:`R(p, n, x)` over a grid of degrees and
    sample points, reporting the largest relative residual.

    >>> from askeyscheme.families import relations
    >>> relations.check_relation("jacobi_symmetry", {"alpha": 0.3, "beta": 1.2}, [4], [0.25]).passed
    True
    >>> relations.check_relation("krawtchouk_selfdual", {"p": 0.3, "N": 6}, [2], [4]).residual <= 1e-13
    True

    Sides in base :math:`q^{-1}` are evaluated as explicit terminating sums, since bases :math:`q \\geq 1`
    are never admitted by :class:`~askeyscheme.qcore.QBase`.
"""

from __future__ import annotations

import cmath
import logging
import math
from typing import Any, Callable, Dict, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple
from typing_extensions import Final
from typing_validation import validate

from ..qcore import DomainError, Number, PoleError, as_nonnegative_integer, binom2, pochhammer, qpochhammer
from ..hyper import IdentityReport, is_monotone, phiseries, residual
from .descriptor import trig_z
from .err import FamilyKeyError, FamilyValueError
from .registry import eval_recurrence, eval_series

_logger = logging.getLogger(__name__)

ALGEBRAIC_TOL: Final[float] = 1e-10
"""
    Default residual threshold for algebraic relations.
"""

LIMIT_TOL: Final[float] = 1e-3
"""
    Default threshold on the error at the last schedule point, for limit relations.
"""

DEFAULT_SCHEDULE: Final[Tuple[float, ...]] = (1e1, 1e2, 1e3, 1e4)
"""
    Default schedule for the limit parameter ``lam`` of limit relations.
"""

P = Mapping[str, Any]
"""
    Type alias for relation parameter records.
"""

Side = Callable[[P, int, complex], complex]
"""
    Type alias for the sides of a relation, as functions of (params, degree, point).
"""

class Relation(NamedTuple):
    """
        A relation :math:`L(p, n, x) = R(p, n, x)` between families, or a limit
        :math:`\\lim_{\\text{lam}\\to\\infty} L = R` when a schedule is attached.
    """

    name: str
    """ Relation name (e.g. ``"jacobi_symmetry"``). """

    description: str
    """ One-line statement of the relation. """

    families: Tuple[str, ...]
    """ Names of the families involved. """

    lhs: Side
    """ The left hand side (receiving the parameter ``lam`` for limits). """

    rhs: Side
    """ The right hand side. """

    defaults: Mapping[str, Any]
    """ Default parameters. """

    degrees: Callable[[P], Sequence[int]]
    """ Default degrees. """

    points: Callable[[P], Sequence[Number]]
    """ Default sample points. """

    constraint: Optional[Callable[[P], Optional[str]]] = None
    """ Returns a message if the parameters lie outside the relation's domain. """

    threshold: float = ALGEBRAIC_TOL
    """ Residual threshold. """

    schedule: Optional[Tuple[float, ...]] = None
    """ Schedule of the limit parameter ``lam``, for limit relations. """

    @property
    def is_limit(self) -> bool:
        """ Whether the relation is a limit. """
        return self.schedule is not None


_relations: Dict[str, Relation] = {}

def register(relation: Relation, *, overwrite: bool = False) -> None:
    """
        Registers a relation in the catalog.

        :raises ValueError: if ``overwrite`` is :obj:`False` and a relation with the same name already exists
    """
    if not isinstance(relation, Relation):
        raise TypeError(f"Expected Relation, found {type(relation)!r}.")
    validate(overwrite, bool)
    if not overwrite and relation.name in _relations:
        raise FamilyValueError(f"Relation named {relation.name!r} already exists.")
    if relation.schedule is not None and len(relation.schedule) < 2:
        raise FamilyValueError(f"Limit relation {relation.name!r} needs a schedule with at least two points.")
    _relations[relation.name] = relation

def get(name: str) -> Relation:
    """
        Gets the relation with given name.

        >>> get("chebU_is_gegenbauer1").families
        ('chebyshev-u', 'gegenbauer')

        :raises KeyError: if no such relation exists
    """
    validate(name, str)
    if name not in _relations:
        raise FamilyKeyError(f"No relation named {name!r}.")
    return _relations[name]

def exists(name: str) -> bool:
    """
        Checks whether a relation with given name exists.
    """
    validate(name, str)
    return name in _relations

def table(*, family: Optional[str] = None) -> Iterator[Relation]:
    """
        Iterates through the relations, in registration order, optionally filtered by involved family.

        >>> any(r.name == "hahn_dual_hahn" for r in table(family="dual-hahn"))
        True
    """
    validate(family, Optional[str])
    for relation in list(_relations.values()):
        if family is not None and family not in relation.families:
            continue
        yield relation

def _prepare(relation: Relation, params: Optional[Mapping[str, Any]]) -> Dict[str, Any]:
    record = dict(relation.defaults)
    if params is not None:
        unknown = set(params)-set(record)
        if unknown:
            raise FamilyValueError(f"Unknown parameters {sorted(unknown)} for relation {relation.name!r}, "
                                   f"expected a subset of {sorted(record)}.")
        record.update(params)
    if "q" in record:
        q = complex(record["q"])
        if q.imag != 0 or not 0 < q.real < 1:
            raise DomainError(f"Relation {relation.name!r} needs a base 0 < q < 1, found {record['q']!r}.")
        record["q"] = q.real
    if "N" in record:
        N = as_nonnegative_integer(record["N"])
        if N is None:
            raise DomainError(f"Relation {relation.name!r} needs a non-negative integer N, found {record['N']!r}.")
        record["N"] = N
    if relation.constraint is not None:
        message = relation.constraint(record)
        if message is not None:
            raise DomainError(f"Parameters violate the domain of relation {relation.name!r}: {message}")
    return record

def _max_residual(relation: Relation, p: P, ns: Sequence[int], xs: Sequence[complex]) -> float:
    worst = 0.0
    for n in ns:
        for x in xs:
            worst = max(worst, residual(relation.lhs(p, n, x), relation.rhs(p, n, x)))
    return worst

def check_relation(name: str, params: Optional[Mapping[str, Any]] = None,
                   ns: Optional[Sequence[int]] = None, xs: Optional[Sequence[Number]] = None, *,
                   tol: Optional[float] = None, schedule: Optional[Sequence[float]] = None) -> IdentityReport:
    """
        Checks a relation over the given degrees and sample points (or the relation's defaults),
        reporting the largest relative residual :math:`|L-R|/\\max(1,|L|,|R|)`.

        Limit relations are checked along a schedule of ``lam``: they pass if the error at the last point
        is at most ``tol`` (default ``1e-3``) and the errors are non-increasing with 10% slack.

        >>> check_relation("chebU_is_gegenbauer1", None, [5], [0.4]).passed
        True
        >>> check_relation("q_laguerre_at_minus_one", {"alpha": 0.7, "q": 0.5}, [3]).residual <= 1e-12
        True

        :param name: the relation name
        :type name: :obj:`str`
        :param params: parameters, completed by the relation's defaults
        :type params: :obj:`Mapping` or :obj:`None`, *optional*
        :param ns: the degrees
        :type ns: :obj:`Sequence` of :obj:`int` or :obj:`None`, *optional*
        :param xs: the sample points
        :type xs: :obj:`Sequence` of :obj:`Number` or :obj:`None`, *optional*

        :raises KeyError: if no such relation exists
        :raises DomainError: if the parameters lie outside the relation's domain
    """
    validate(tol, Optional[float])
    relation = get(name)
    p = _prepare(relation, params)
    degrees = list(relation.degrees(p) if ns is None else ns)
    points = [complex(x) for x in (relation.points(p) if xs is None else xs)]
    threshold = relation.threshold if tol is None else tol
    if not relation.is_limit:
        res = _max_residual(relation, p, degrees, points)
        passed = res <= threshold
        if not passed:
            _logger.info("Relation %s failed with residual %.3e at %r", name, res, p)
        return IdentityReport(name, res, threshold, passed)
    lams = list(relation.schedule or DEFAULT_SCHEDULE) if schedule is None else [float(s) for s in schedule]
    if not lams or any(b <= a for a, b in zip(lams, lams[1:])):
        raise FamilyValueError("Limit schedule must be non-empty and strictly increasing.")
    errors = tuple(_max_residual(relation, {**p, "lam": lam}, degrees, points) for lam in lams)
    passed = errors[-1] <= threshold and is_monotone(errors)
    if not passed:
        _logger.info("Limit relation %s failed with errors %r at %r", name, errors, p)
    return IdentityReport(name, errors[-1], threshold, passed, errors)


# Helpers

def _grid(lo: float, hi: float, count: int) -> Callable[[P], List[complex]]:
    def points(p: P) -> List[complex]:
        return [complex(lo+(hi-lo)*k/(count-1)) for k in range(count)]
    return points

def _upto(hi: int, lo: int = 0) -> Callable[[P], List[int]]:
    return lambda p: list(range(lo, hi+1))

def _upto_N(p: P) -> List[int]:
    return list(range(p["N"]+1))

def _lattice_N(p: P) -> List[complex]:
    return [complex(x) for x in range(p["N"]+1)]

def _qp_base(a: Number, base: float, k: int) -> complex:
    res = 1+0j
    for j in range(k):
        res *= 1-complex(a)*base**j
    return res

def _terminating_phi(num: Sequence[Number], den: Sequence[Number], base: float, z: Number, n: int) -> complex:
    """
        The basic hypergeometric sum :math:`\\sum_{k=0}^n` in an arbitrary real base, used for the
        :math:`q^{-1}` sides of base inversions (the numerator carries :math:`q^{n}`, so the sum terminates).
    """
    extra = 1+len(den)-len(num)
    total = term = 1+0j
    for k in range(n):
        bk = base**k
        ratio = complex(z)/(1-bk*base)
        for a in num:
            ratio *= 1-complex(a)*bk
        for b in den:
            d = 1-complex(b)*bk
            if d == 0:
                raise PoleError(f"Denominator parameter {b!r} hits a pole at k={k}.")
            ratio /= d
        term *= ratio*(-bk)**extra
        total += term
    return total

def _trig_sum(coefficient: Callable[[int], complex], n: int, x: complex) -> complex:
    z = trig_z(x)
    return sum(coefficient(k)*z**(n-2*k) for k in range(n+1))

def _racah_integral(p: P) -> Optional[str]:
    values = [p[k] for k in "abcd"]
    if any(complex(v).imag != 0 for v in values):
        return "need real a, b, c, d"
    if as_nonnegative_integer(-(complex(p["a"])+complex(p["b"]))) is None:
        return "need a + b = -N for a non-negative integer N"
    return None

def _racah_N(p: P) -> int:
    N = as_nonnegative_integer(-(complex(p["a"])+complex(p["b"])))
    assert N is not None
    return N

def _aw_racah_N(p: P) -> Optional[int]:
    ab = complex(p["a"])*complex(p["b"])
    if ab.imag != 0 or ab.real < 1:
        return None
    x = math.log(ab.real)/-math.log(p["q"])
    N = round(x)
    return N if abs(x-N) <= 1e-9*max(1.0, x) else None

def _rel(name: str, description: str, families: Tuple[str, ...], lhs: Side, rhs: Side,
         defaults: Mapping[str, Any], degrees: Callable[[P], Sequence[int]], points: Callable[[P], Sequence[Number]],
         **kwargs: Any) -> None:
    # pylint: disable = too-many-arguments
    register(Relation(name, description, families, lhs, rhs, dict(defaults), degrees, points, **kwargs))

def _jacobi(alpha: Number, beta: Number, n: int, x: Number) -> complex:
    return eval_series("jacobi", {"alpha": alpha, "beta": beta}, n, x)

def _rogers(beta: Number, q: float, n: int, x: Number) -> complex:
    return eval_recurrence("continuous-q-ultraspherical", {"beta": beta, "q": q}, n, x)

def _cqj(alpha: Number, beta: Number, q: float, n: int, x: Number, rahman: bool = False) -> complex:
    name = "continuous-q-jacobi-rahman" if rahman else "continuous-q-jacobi"
    return eval_recurrence(name, {"alpha": alpha, "beta": beta, "q": q}, n, x)


# Classical part

_rel("jacobi_symmetry", "P_n^(a,b)(x) = (-1)^n P_n^(b,a)(-x)", ("jacobi",),
     lambda p, n, x: _jacobi(p["alpha"], p["beta"], n, x),
     lambda p, n, x: (-1)**n*_jacobi(p["beta"], p["alpha"], n, -x),
     {"alpha": 0.3, "beta": 1.2}, _upto(8), _grid(-0.9, 0.9, 7))

_rel("gegenbauer_jacobi_even", "C_2n^(l)(x) = (l)_n/(1/2)_n P_n^(l-1/2,-1/2)(2x^2-1)", ("gegenbauer", "jacobi"),
     lambda p, n, x: eval_series("gegenbauer", p, 2*n, x),
     lambda p, n, x: (pochhammer(p["lambda"], n)/pochhammer(0.5, n)
                      *_jacobi(p["lambda"]-0.5, -0.5, n, 2*x*x-1)),
     {"lambda": 0.75}, _upto(5), _grid(-0.9, 0.9, 7),
     constraint=lambda p: None if p["lambda"] > -0.5 and p["lambda"] != 0 else "need lambda > -1/2, lambda != 0")

_rel("gegenbauer_jacobi_odd", "C_2n+1^(l)(x) = (l)_n+1/(1/2)_n+1 x P_n^(l-1/2,1/2)(2x^2-1)", ("gegenbauer", "jacobi"),
     lambda p, n, x: eval_series("gegenbauer", p, 2*n+1, x),
     lambda p, n, x: (pochhammer(p["lambda"], n+1)/pochhammer(0.5, n+1)
                      *x*_jacobi(p["lambda"]-0.5, 0.5, n, 2*x*x-1)),
     {"lambda": 0.75}, _upto(5), _grid(-0.9, 0.9, 7),
     constraint=lambda p: None if p["lambda"] > -0.5 and p["lambda"] != 0 else "need lambda > -1/2, lambda != 0")

_rel("chebyshev_t_trig", "T_n(cos t) = cos(nt)", ("chebyshev-t",),
     lambda p, n, x: eval_series("chebyshev-t", {}, n, x),
     lambda p, n, x: cmath.cos(n*cmath.acos(x)),
     {}, _upto(10), _grid(-0.95, 0.95, 7))

_rel("chebyshev_u_trig", "U_n(cos t) = sin((n+1)t)/sin(t)", ("chebyshev-u",),
     lambda p, n, x: eval_series("chebyshev-u", {}, n, x),
     lambda p, n, x: cmath.sin((n+1)*cmath.acos(x))/cmath.sin(cmath.acos(x)),
     {}, _upto(10), _grid(-0.95, 0.95, 7))

_rel("chebU_is_gegenbauer1", "U_n(x) = C_n^(1)(x)", ("chebyshev-u", "gegenbauer"),
     lambda p, n, x: eval_series("chebyshev-u", {}, n, x),
     lambda p, n, x: eval_series("gegenbauer", {"lambda": 1.0}, n, x),
     {}, _upto(10), _grid(-0.9, 0.9, 7))

_rel("chebyshev_t_is_jacobi", "T_n(x) = P_n^(-1/2,-1/2)(x)/P_n^(-1/2,-1/2)(1)", ("chebyshev-t", "jacobi"),
     lambda p, n, x: eval_series("chebyshev-t", {}, n, x),
     lambda p, n, x: _jacobi(-0.5, -0.5, n, x)*math.factorial(n)/pochhammer(0.5, n),
     {}, _upto(8), _grid(-0.9, 0.9, 7))

_rel("legendre_is_gegenbauer_half", "P_n(x) = C_n^(1/2)(x)", ("legendre", "gegenbauer"),
     lambda p, n, x: eval_series("legendre", {}, n, x),
     lambda p, n, x: eval_series("gegenbauer", {"lambda": 0.5}, n, x),
     {}, _upto(10), _grid(-0.9, 0.9, 7))

_rel("meixner_jacobi", "(b)_n/n! M_n(x;b,c) = P_n^(b-1,-n-b-x)((2-c)/c)", ("meixner", "jacobi"),
     lambda p, n, x: pochhammer(p["beta"], n)/math.factorial(n)*eval_series("meixner", p, n, x),
     lambda p, n, x: _jacobi(p["beta"]-1, -n-p["beta"]-x, n, (2-p["c"])/p["c"]),
     {"beta": 1.5, "c": 0.4}, _upto(6), lambda p: [0, 1, 2, 3.5, 5],
     constraint=lambda p: None if p["c"] != 0 else "need c != 0")

_rel("krawtchouk_meixner", "K_n(x;p,N) = M_n(x;-N,p/(p-1))", ("krawtchouk", "meixner"),
     lambda p, n, x: eval_series("krawtchouk", p, n, x),
     lambda p, n, x: eval_series("meixner", {"beta": -p["N"], "c": p["p"]/(p["p"]-1)}, n, x),
     {"p": 0.3, "N": 6}, _upto_N, _lattice_N,
     constraint=lambda p: None if p["p"] != 1 else "need p != 1")

_rel("krawtchouk_selfdual", "K_n(x;p,N) = K_x(n;p,N) for x, n in 0..N", ("krawtchouk",),
     lambda p, n, x: eval_series("krawtchouk", p, n, x),
     lambda p, n, x: eval_series("krawtchouk", p, int(round(x.real)), n),
     {"p": 0.3, "N": 6}, _upto_N, _lattice_N, threshold=1e-13)

_rel("hahn_dual_hahn", "Q_n(x;a,b,N) = R_x(lambda(n);a,b,N) for x, n in 0..N", ("hahn", "dual-hahn"),
     lambda p, n, x: eval_series("hahn", p, n, x),
     lambda p, n, x: eval_series("dual-hahn", {"gamma": p["alpha"], "delta": p["beta"], "N": p["N"]},
                                 int(round(x.real)), n),
     {"alpha": 0.5, "beta": 1.5, "N": 5}, _upto_N, _lattice_N)

_rel("charlier_laguerre", "(-a)^n/n! C_n(x;a) = L_n^(x-n)(a)", ("charlier", "laguerre"),
     lambda p, n, x: (-p["a"])**n/math.factorial(n)*eval_series("charlier", p, n, x),
     lambda p, n, x: eval_series("laguerre", {"alpha": x-n}, n, p["a"]),
     {"a": 1.2}, _upto(6), lambda p: [0, 1, 2, 3, 4.5, 6],
     constraint=lambda p: None if p["a"] != 0 else "need a != 0")

_rel("hermite_laguerre_even", "H_2n(x) = (-1)^n n! 2^2n L_n^(-1/2)(x^2)", ("hermite", "laguerre"),
     lambda p, n, x: eval_series("hermite", {}, 2*n, x),
     lambda p, n, x: (-1)**n*math.factorial(n)*4**n*eval_series("laguerre", {"alpha": -0.5}, n, x*x),
     {}, _upto(6), _grid(-2.0, 2.0, 7))

_rel("hermite_laguerre_odd", "H_2n+1(x) = (-1)^n n! 2^2n+1 x L_n^(1/2)(x^2)", ("hermite", "laguerre"),
     lambda p, n, x: eval_series("hermite", {}, 2*n+1, x),
     lambda p, n, x: (-1)**n*math.factorial(n)*2*4**n*x*eval_series("laguerre", {"alpha": 0.5}, n, x*x),
     {}, _upto(6), _grid(-2.0, 2.0, 7))

_rel("wilson_racah", "R_n(lambda(-a+ix);a+b-1,c+d-1,a+d-1,a-d) = W_n(x^2)/((a+b)_n(a+c)_n(a+d)_n)",
     ("racah", "wilson"),
     lambda p, n, x: eval_series("racah", {"alpha": p["a"]+p["b"]-1, "beta": p["c"]+p["d"]-1,
                                           "gamma": p["a"]+p["d"]-1, "delta": p["a"]-p["d"]}, n, -p["a"]+1j*x),
     lambda p, n, x: (eval_series("wilson", p, n, x)
                      /(pochhammer(p["a"]+p["b"], n)*pochhammer(p["a"]+p["c"], n)*pochhammer(p["a"]+p["d"], n))),
     {"a": 0.5, "b": -4.5, "c": 1.1, "d": 1.3}, lambda p: list(range(_racah_N(p)+1)), _grid(0.2, 2.0, 5),
     constraint=_racah_integral)


# Basic part

_rel("askey_wilson_q_racah", "R_n(2a cos t;ab/q,cd/q,ad/q,a/d|q) = a^n p_n(cos t;a,b,c,d|q)/(ab,ac,ad;q)_n",
     ("q-racah", "askey-wilson"),
     lambda p, n, x: eval_series("q-racah", {"alpha": p["a"]*p["b"]/p["q"], "beta": p["c"]*p["d"]/p["q"],
                                             "gamma": p["a"]*p["d"]/p["q"], "delta": p["a"]/p["d"], "q": p["q"]},
                                 n, 2*p["a"]*x, lattice=True),
     lambda p, n, x: (p["a"]**n*eval_series("askey-wilson", p, n, x)
                      /(qpochhammer(p["a"]*p["b"], p["q"], n)*qpochhammer(p["a"]*p["c"], p["q"], n)
                        *qpochhammer(p["a"]*p["d"], p["q"], n))),
     {"a": 2.0, "b": 4.0, "c": 0.3, "d": 0.2, "q": 0.5}, lambda p: list(range((_aw_racah_N(p) or 0)+1)),
     _grid(-0.9, 0.9, 5),
     constraint=lambda p: (None if _aw_racah_N(p) is not None and all(complex(p[k]).imag == 0 for k in "abcd")
                           else "need real a, b, c, d with ab = q^-N for a non-negative integer N"))

def _big_little(p: P, n: int) -> complex:
    a, b, q = p["a"], p["b"], p["q"]
    return qpochhammer(b*q, q, n)/qpochhammer(a*q, q, n)*(-a)**n*q**(n+binom2(n))

_rel("big_little_q_jacobi", "P_n(x;a,b,0;q) = (bq;q)_n/(aq;q)_n (-a)^n q^(n+n(n-1)/2) p_n(x/(aq);b,a|q)",
     ("big-q-jacobi", "little-q-jacobi"),
     lambda p, n, x: eval_series("big-q-jacobi", {"a": p["a"], "b": p["b"], "c": 0.0, "q": p["q"]}, n, x),
     lambda p, n, x: _big_little(p, n)*eval_series("little-q-jacobi", {"a": p["b"], "b": p["a"], "q": p["q"]},
                                                   n, x/(p["a"]*p["q"])),
     {"a": 0.5, "b": 0.4, "q": 0.5}, _upto(6), _grid(-0.8, 0.9, 6))

_rel("little_big_q_jacobi", "p_n(x;a,b|q) = (bq;q)_n/(aq;q)_n (-1/b)^n q^-(n+n(n-1)/2) P_n(bqx;b,a,0;q)",
     ("little-q-jacobi", "big-q-jacobi"),
     lambda p, n, x: eval_series("little-q-jacobi", p, n, x),
     lambda p, n, x: (qpochhammer(p["b"]*p["q"], p["q"], n)/qpochhammer(p["a"]*p["q"], p["q"], n)
                      *(-1/p["b"])**n*p["q"]**-(n+binom2(n))
                      *eval_series("big-q-jacobi", {"a": p["b"], "b": p["a"], "c": 0.0, "q": p["q"]},
                                   n, p["b"]*p["q"]*x)),
     {"a": 0.5, "b": 0.4, "q": 0.5}, _upto(6), _grid(0.05, 0.95, 6),
     constraint=lambda p: None if p["b"] != 0 else "need b != 0")

_rel("big_q_jacobi_four_parameters", "3phi2(q^-n,abq^n+1,aqx/c;aq,-adq/c|q;q) = P_n(aqx/c;a,b,-ad/c;q)",
     ("big-q-jacobi",),
     lambda p, n, x: phiseries([p["q"]**-n, p["a"]*p["b"]*p["q"]**(n+1), p["a"]*p["q"]*x/p["c"]],
                               [p["a"]*p["q"], -p["a"]*p["d"]*p["q"]/p["c"]], p["q"], p["q"]),
     lambda p, n, x: eval_series("big-q-jacobi", {"a": p["a"], "b": p["b"], "c": -p["a"]*p["d"]/p["c"],
                                                  "q": p["q"]}, n, p["a"]*p["q"]*x/p["c"]),
     {"a": 0.5, "b": 0.4, "c": 1.0, "d": 0.6, "q": 0.5}, _upto(6), _grid(-0.6, 0.9, 6),
     constraint=lambda p: None if p["c"] != 0 else "need c != 0")

_rel("q_hahn_dual_q_hahn", "Q_n(q^-x;a,b,N|q) = R_x(mu(n);a,b,N|q) for x, n in 0..N", ("q-hahn", "dual-q-hahn"),
     lambda p, n, x: eval_series("q-hahn", p, n, x),
     lambda p, n, x: eval_series("dual-q-hahn", {"gamma": p["alpha"], "delta": p["beta"], "N": p["N"], "q": p["q"]},
                                 int(round(x.real)), n),
     {"alpha": 0.5, "beta": 0.4, "N": 4, "q": 0.5}, _upto_N, _lattice_N)

_rel("q_krawtchouk_dual", "K_n(q^-x;p,N;q) = K_x(lambda(n);-pq^N,N|q) for x, n in 0..N",
     ("q-krawtchouk", "dual-q-krawtchouk"),
     lambda p, n, x: eval_series("q-krawtchouk", p, n, x),
     lambda p, n, x: eval_series("dual-q-krawtchouk", {"c": -p["p"]*p["q"]**p["N"], "N": p["N"], "q": p["q"]},
                                 int(round(x.real)), n),
     {"p": 0.5, "N": 4, "q": 0.5}, _upto_N, _lattice_N)

_rel("q_meixner_little_q_jacobi", "M_n(q^-x;b,c;q) = p_n(-q^n/c;b,q^(-n-x-1)/b|q)", ("q-meixner", "little-q-jacobi"),
     lambda p, n, x: eval_series("q-meixner", p, n, x),
     lambda p, n, x: eval_series("little-q-jacobi", {"a": p["b"], "b": p["q"]**(-n-1)/p["b"]*p["q"]**-x.real,
                                                     "q": p["q"]}, n, -p["q"]**n/p["c"]),
     {"b": 0.5, "c": 0.8, "q": 0.5}, _upto(5), lambda p: [0, 1, 2, 3, 5],
     constraint=lambda p: None if p["b"] != 0 and p["c"] != 0 else "need b != 0, c != 0")

_rel("quantum_q_krawtchouk_q_meixner", "K^qtm_n(q^-x;p,N;q) = M_n(q^-x;q^(-N-1),-1/p;q)",
     ("quantum-q-krawtchouk", "q-meixner"),
     lambda p, n, x: eval_series("quantum-q-krawtchouk", p, n, x),
     lambda p, n, x: eval_series("q-meixner", {"b": p["q"]**(-p["N"]-1), "c": -1/p["p"], "q": p["q"]}, n, x),
     {"p": 40.0, "N": 4, "q": 0.5}, _upto_N, _lattice_N,
     constraint=lambda p: None if p["p"] != 0 else "need p != 0")

def _quantum_inverted(p: P, n: int, x: complex) -> complex:
    # K^qtm_n(q^x;p,N;q^-1) as a sum in base 1/q
    r = 1/p["q"]
    return _terminating_phi([r**-n, r**-x], [r**-p["N"]], r, p["p"]*r**(n+1), n)

def _affine_inverted(p: P, n: int, x: complex) -> complex:
    # K^Aff_n(q^x;p,N;q^-1) as a sum in base 1/q
    r = 1/p["q"]
    return _terminating_phi([r**-n, 0, r**-x], [p["p"]*r, r**-p["N"]], r, r, n)

_rel("quantum_affine_q_krawtchouk_inversion",
     "K^qtm_n(q^x;p,N;q^-1) = (q/p;q)_n (-p/q)^n q^(-n(n-1)/2) K^Aff_n(q^(x-N);1/p,N;q)",
     ("quantum-q-krawtchouk", "affine-q-krawtchouk"),
     _quantum_inverted,
     lambda p, n, x: (qpochhammer(p["q"]/p["p"], p["q"], n)*(-p["p"]/p["q"])**n*p["q"]**-binom2(n)
                      *eval_series("affine-q-krawtchouk", {"p": 1/p["p"], "N": p["N"], "q": p["q"]}, n, p["N"]-x)),
     {"p": 0.3, "N": 4, "q": 0.5}, _upto_N, _lattice_N,
     constraint=lambda p: None if p["p"] != 0 else "need p != 0")

_rel("affine_quantum_q_krawtchouk_inversion",
     "K^Aff_n(q^x;p,N;q^-1) = K^qtm_n(q^(x-N);1/p,N;q)/(q/p;q)_n",
     ("affine-q-krawtchouk", "quantum-q-krawtchouk"),
     _affine_inverted,
     lambda p, n, x: (eval_series("quantum-q-krawtchouk", {"p": 1/p["p"], "N": p["N"], "q": p["q"]}, n, p["N"]-x)
                      /qpochhammer(p["q"]/p["p"], p["q"], n)),
     {"p": 0.3, "N": 4, "q": 0.5}, _upto_N, _lattice_N,
     constraint=lambda p: None if p["p"] != 0 else "need p != 0")

_rel("big_q_laguerre_affine_q_krawtchouk", "K^Aff_n(q^-x;p,N;q) = P_n(q^-x;p,q^(-N-1);q)",
     ("affine-q-krawtchouk", "big-q-laguerre"),
     lambda p, n, x: eval_series("affine-q-krawtchouk", p, n, x),
     lambda p, n, x: eval_series("big-q-laguerre", {"a": p["p"], "b": p["q"]**(-p["N"]-1), "q": p["q"]},
                                 n, p["q"]**-x.real),
     {"p": 0.5, "N": 4, "q": 0.5}, _upto_N, _lattice_N)

def _little_q_laguerre_inverted(p: P, n: int, x: complex) -> complex:
    # p_n(x;q^-alpha|q^-1) as a sum in base 1/q
    r = 1/p["q"]
    return _terminating_phi([r**-n, 0], [r**(p["alpha"]+1)], r, r*x, n)

def _q_laguerre_inverted(p: P, n: int, x: complex) -> complex:
    # L_n^(alpha)(x;q^-1) as a sum in base 1/q
    r = 1/p["q"]
    ra = r**(p["alpha"]+1)
    return _qp_base(ra, r, n)/_qp_base(r, r, n)*_terminating_phi([r**-n], [ra], r, -x*r**n*ra, n)

_rel("little_q_laguerre_inversion", "p_n(x;q^-a|q^-1) = (q;q)_n/(q^(a+1);q)_n L_n^(a)(-x;q)",
     ("little-q-laguerre", "q-laguerre"),
     _little_q_laguerre_inverted,
     lambda p, n, x: (qpochhammer(p["q"], p["q"], n)/qpochhammer(p["q"]**(p["alpha"]+1), p["q"], n)
                      *eval_series("q-laguerre", {"alpha": p["alpha"], "q": p["q"]}, n, -x)),
     {"alpha": 0.5, "q": 0.5}, _upto(6), _grid(-2.0, 2.0, 6))

_rel("q_laguerre_inversion", "L_n^(a)(x;q^-1) = (q^(a+1);q)_n/((q;q)_n q^(na)) p_n(-x;q^a|q)",
     ("q-laguerre", "little-q-laguerre"),
     _q_laguerre_inverted,
     lambda p, n, x: (qpochhammer(p["q"]**(p["alpha"]+1), p["q"], n)/qpochhammer(p["q"], p["q"], n)
                      *p["q"]**(-n*p["alpha"])
                      *eval_series("little-q-laguerre", {"a": p["q"]**p["alpha"], "q": p["q"]}, n, -x)),
     {"alpha": 0.5, "q": 0.5}, _upto(6), _grid(-2.0, 2.0, 6))

_rel("q_laguerre_alternative_q_charlier", "K_n(q^x;a;q)/(q;q)_n = L_n^(x-n)(aq^n;q)",
     ("alternative-q-charlier", "q-laguerre"),
     lambda p, n, x: eval_series("alternative-q-charlier", p, n, p["q"]**x.real)/qpochhammer(p["q"], p["q"], n),
     lambda p, n, x: eval_series("q-laguerre", {"alpha": x.real-n, "q": p["q"]}, n, p["a"]*p["q"]**n),
     {"a": 0.5, "q": 0.5}, _upto(5), lambda p: [0.25, 1.5, 2.75, 3.5, 6.25])

_rel("q_laguerre_q_charlier", "C_n(-x;-q^-a;q)/(q;q)_n = L_n^(a)(x;q)", ("q-charlier", "q-laguerre"),
     lambda p, n, x: (eval_series("q-charlier", {"a": -p["q"]**-p["alpha"], "q": p["q"]}, n, -x, lattice=True)
                      /qpochhammer(p["q"], p["q"], n)),
     lambda p, n, x: eval_series("q-laguerre", {"alpha": p["alpha"], "q": p["q"]}, n, x),
     {"alpha": 0.5, "q": 0.5}, _upto(6), _grid(0.25, 3.0, 5))

_rel("q_laguerre_at_minus_one", "L_n^(a)(-1;q) = 1/(q;q)_n", ("q-laguerre",),
     lambda p, n, x: eval_series("q-laguerre", {"alpha": p["alpha"], "q": p["q"]}, n, -1),
     lambda p, n, x: 1/qpochhammer(p["q"], p["q"], n),
     {"alpha": 0.7, "q": 0.5}, _upto(8), lambda p: [-1.0])

def _asc1_inverted(p: P, n: int, x: complex) -> complex:
    # U_n^(a)(x;q^-1) as a sum in base 1/q
    a, r = p["a"], 1/p["q"]
    return (-a)**n*r**binom2(n)*_terminating_phi([r**-n, 1/x], [0], r, r*x/a, n)

def _asc2_inverted(p: P, n: int, x: complex) -> complex:
    # V_n^(a)(x;q^-1) as a sum in base 1/q
    a, r = p["a"], 1/p["q"]
    return (-a)**n*r**-binom2(n)*_terminating_phi([r**-n, x], [], r, r**n/a, n)

_rel("al_salam_carlitz_inversion", "U_n^(a)(x;q^-1) = V_n^(a)(x;q)", ("al-salam-carlitz-i", "al-salam-carlitz-ii"),
     _asc1_inverted,
     lambda p, n, x: eval_series("al-salam-carlitz-ii", p, n, x),
     {"a": 0.5, "q": 0.5}, _upto(6), lambda p: [-1.5, -0.7, 0.3, 0.9, 2.0],
     constraint=lambda p: None if p["a"] != 0 else "need a != 0")

_rel("al_salam_carlitz_ii_inversion", "V_n^(a)(x;q^-1) = U_n^(a)(x;q)", ("al-salam-carlitz-ii", "al-salam-carlitz-i"),
     _asc2_inverted,
     lambda p, n, x: eval_series("al-salam-carlitz-i", p, n, x),
     {"a": -0.5, "q": 0.5}, _upto(6), lambda p: [-1.5, -0.7, 0.3, 0.9, 2.0],
     constraint=lambda p: None if p["a"] != 0 else "need a != 0")

_rel("discrete_q_hermite_inversion", "h_n(ix;q^-1) = i^n h~_n(x;q)", ("discrete-q-hermite-i", "discrete-q-hermite-ii"),
     lambda p, n, x: _asc1_inverted({"a": -1.0, "q": p["q"]}, n, 1j*x),
     lambda p, n, x: (1j)**n*eval_series("discrete-q-hermite-ii", {"q": p["q"]}, n, x),
     {"q": 0.5}, _upto(6), lambda p: [-1.5, -0.7, 0.3, 0.9, 2.0])

_rel("discrete_q_hermite_ii_inversion", "h~_n(x;q^-1) = i^-n h_n(ix;q)",
     ("discrete-q-hermite-ii", "discrete-q-hermite-i"),
     lambda p, n, x: (1j)**-n*(1/p["q"])**-binom2(n)*_terminating_phi([p["q"]**n, 1j*x], [], 1/p["q"],
                                                                     -p["q"]**-n, n),
     lambda p, n, x: (1j)**-n*eval_series("discrete-q-hermite-i", {"q": p["q"]}, n, 1j*x),
     {"q": 0.5}, _upto(6), lambda p: [-1.5, -0.7, 0.3, 0.9, 2.0])

_rel("continuous_q_jacobi_quadratic",
     "P_n^(a,b)(x|q^2) = (-q;q)_n/(-q^(a+b+1);q)_n q^(na) P_n^(a,b)(x;q)",
     ("continuous-q-jacobi", "continuous-q-jacobi-rahman"),
     lambda p, n, x: _cqj(p["alpha"], p["beta"], p["q"]**2, n, x),
     lambda p, n, x: (qpochhammer(-p["q"], p["q"], n)/qpochhammer(-p["q"]**(p["alpha"]+p["beta"]+1), p["q"], n)
                      *p["q"]**(n*p["alpha"])*_cqj(p["alpha"], p["beta"], p["q"], n, x, rahman=True)),
     {"alpha": 0.5, "beta": 0.3, "q": 0.5}, _upto(6), _grid(-0.9, 0.9, 5))

_rel("continuous_q_ultraspherical_jacobi",
     "C_n(x;q^(a+1/2)|q) = (q^(2a+1);q)_n/((q^(a+1);q)_n q^((a/2+1/4)n)) P_n^(a,a)(x|q)",
     ("continuous-q-ultraspherical", "continuous-q-jacobi"),
     lambda p, n, x: _rogers(p["q"]**(p["alpha"]+0.5), p["q"], n, x),
     lambda p, n, x: (qpochhammer(p["q"]**(2*p["alpha"]+1), p["q"], n)/qpochhammer(p["q"]**(p["alpha"]+1), p["q"], n)
                      *p["q"]**(-(p["alpha"]/2+0.25)*n)*_cqj(p["alpha"], p["alpha"], p["q"], n, x)),
     {"alpha": 0.5, "q": 0.5}, _upto(6), _grid(-0.9, 0.9, 5))

_rel("continuous_q_ultraspherical_jacobi_even",
     "C_2n(x;q^l|q) = (q^l,-q;q)_n/(q^1/2,-q^1/2;q)_n q^(-n/2) P_n^(l-1/2,-1/2)(2x^2-1;q)",
     ("continuous-q-ultraspherical", "continuous-q-jacobi-rahman"),
     lambda p, n, x: _rogers(p["q"]**p["lambda"], p["q"], 2*n, x),
     lambda p, n, x: (qpochhammer(p["q"]**p["lambda"], p["q"], n)*qpochhammer(-p["q"], p["q"], n)
                      /(qpochhammer(p["q"]**0.5, p["q"], n)*qpochhammer(-p["q"]**0.5, p["q"], n))
                      *p["q"]**(-n/2)*_cqj(p["lambda"]-0.5, -0.5, p["q"], n, 2*x*x-1, rahman=True)),
     {"lambda": 0.75, "q": 0.5}, _upto(4), _grid(-0.9, 0.9, 5))

_rel("continuous_q_ultraspherical_jacobi_odd",
     "C_2n+1(x;q^l|q) = (q^l,-1;q)_n+1/(q^1/2,-q^1/2;q)_n+1 q^(-n/2) x P_n^(l-1/2,1/2)(2x^2-1;q)",
     ("continuous-q-ultraspherical", "continuous-q-jacobi-rahman"),
     lambda p, n, x: _rogers(p["q"]**p["lambda"], p["q"], 2*n+1, x),
     lambda p, n, x: (qpochhammer(p["q"]**p["lambda"], p["q"], n+1)*qpochhammer(-1, p["q"], n+1)
                      /(qpochhammer(p["q"]**0.5, p["q"], n+1)*qpochhammer(-p["q"]**0.5, p["q"], n+1))
                      *p["q"]**(-n/2)*x*_cqj(p["lambda"]-0.5, 0.5, p["q"], n, 2*x*x-1, rahman=True)),
     {"lambda": 0.75, "q": 0.5}, _upto(4), _grid(-0.9, 0.9, 5))

_rel("continuous_q_ultraspherical_chebyshev_u", "C_n(x;q|q) = U_n(x)",
     ("continuous-q-ultraspherical", "chebyshev-u"),
     lambda p, n, x: _rogers(p["q"], p["q"], n, x),
     lambda p, n, x: eval_series("chebyshev-u", {}, n, x),
     {"q": 0.5}, _upto(8), _grid(-0.9, 0.9, 5))

_rel("continuous_q_ultraspherical_chebyshev_t_limit", "lim_{b->1} (1-q^n)/(2(1-b)) C_n(x;b|q) = T_n(x), n >= 1",
     ("continuous-q-ultraspherical", "chebyshev-t"),
     lambda p, n, x: (1-p["q"]**n)/(2/p["lam"])*_rogers(1-1/p["lam"], p["q"], n, x),
     lambda p, n, x: eval_series("chebyshev-t", {}, n, x),
     {"q": 0.5}, _upto(6, 1), _grid(-0.9, 0.9, 5), threshold=LIMIT_TOL, schedule=DEFAULT_SCHEDULE)

def _rogers_inverted(p: P, n: int, x: complex) -> complex:
    # C_n(x;beta|q^-1) from its trigonometric sum in base 1/q
    be, r = p["beta"], 1/p["q"]
    return _trig_sum(lambda k: _qp_base(be, r, k)*_qp_base(be, r, n-k)/(_qp_base(r, r, k)*_qp_base(r, r, n-k)), n, x)

_rel("continuous_q_ultraspherical_inversion", "C_n(x;b|q^-1) = (bq)^n C_n(x;1/b|q)", ("continuous-q-ultraspherical",),
     _rogers_inverted,
     lambda p, n, x: (p["beta"]*p["q"])**n*_rogers(1/p["beta"], p["q"], n, x),
     {"beta": 0.4, "q": 0.5}, _upto(6), _grid(-0.9, 0.9, 5),
     constraint=lambda p: None if p["beta"] != 0 else "need beta != 0")

_rel("continuous_q_ultraspherical_trig_sum",
     "C_n(cos t;b|q) = sum_k (b;q)_k(b;q)_n-k/((q;q)_k(q;q)_n-k) e^(i(n-2k)t)", ("continuous-q-ultraspherical",),
     lambda p, n, x: _rogers(p["beta"], p["q"], n, x),
     lambda p, n, x: _trig_sum(lambda k: (qpochhammer(p["beta"], p["q"], k)*qpochhammer(p["beta"], p["q"], n-k)
                                          /(qpochhammer(p["q"], p["q"], k)*qpochhammer(p["q"], p["q"], n-k))), n, x),
     {"beta": 0.4, "q": 0.5}, _upto(8), _grid(-0.9, 0.9, 5))

_rel("continuous_q_legendre_ultraspherical", "P_n(x;q) = q^(n/2) C_n(x;q|q^2)",
     ("continuous-q-legendre", "continuous-q-ultraspherical"),
     lambda p, n, x: eval_series("continuous-q-legendre", p, n, x),
     lambda p, n, x: p["q"]**(n/2)*_rogers(p["q"], p["q"]**2, n, x),
     {"q": 0.5}, _upto(8), _grid(-0.9, 0.9, 5))

_rel("continuous_q_legendre_trig_sum",
     "P_n(cos t;q) = q^(n/2) sum_k (q;q^2)_k(q;q^2)_n-k/((q^2;q^2)_k(q^2;q^2)_n-k) e^(i(n-2k)t)",
     ("continuous-q-legendre",),
     lambda p, n, x: eval_series("continuous-q-legendre", p, n, x),
     lambda p, n, x: p["q"]**(n/2)*_trig_sum(
         lambda k: (qpochhammer(p["q"], p["q"]**2, k)*qpochhammer(p["q"], p["q"]**2, n-k)
                    /(qpochhammer(p["q"]**2, p["q"]**2, k)*qpochhammer(p["q"]**2, p["q"]**2, n-k))), n, x),
     {"q": 0.5}, _upto(8), _grid(-0.9, 0.9, 5))

_rel("continuous_q_laguerre_quadratic", "P_n^(a)(x|q^2) = q^(na) P_n^(a)(x;q)",
     ("continuous-q-laguerre", "continuous-q-laguerre-rahman"),
     lambda p, n, x: eval_series("continuous-q-laguerre", {"alpha": p["alpha"], "q": p["q"]**2}, n, x),
     lambda p, n, x: p["q"]**(n*p["alpha"])*eval_series("continuous-q-laguerre-rahman", p, n, x),
     {"alpha": 0.5, "q": 0.5}, _upto(6), _grid(-0.9, 0.9, 5))

_rel("continuous_q_hermite_trig_sum", "H_n(cos t|q) = sum_k (q;q)_n/((q;q)_k(q;q)_n-k) e^(i(n-2k)t)",
     ("continuous-q-hermite",),
     lambda p, n, x: eval_series("continuous-q-hermite", p, n, x),
     lambda p, n, x: _trig_sum(lambda k: qpochhammer(p["q"], p["q"], n)
                               /(qpochhammer(p["q"], p["q"], k)*qpochhammer(p["q"], p["q"], n-k)), n, x),
     {"q": 0.5}, _upto(8), _grid(-0.9, 0.9, 5))

_rel("discrete_q_hermite_i_alternative", "h_n(x;q) = x^n 2phi0(q^-n,q^(-n+1);-|q^2;q^(2n-1)/x^2)",
     ("discrete-q-hermite-i",),
     lambda p, n, x: eval_series("discrete-q-hermite-i", p, n, x),
     lambda p, n, x: x**n*phiseries([p["q"]**-n, p["q"]**(1-n)], [], p["q"]**2, p["q"]**(2*n-1)/(x*x)),
     {"q": 0.5}, _upto(6), lambda p: [-0.9, -0.4, 0.3, 0.8, 1.5])

_rel("discrete_q_hermite_ii_alternative", "h~_n(x;q) = x^n 2phi1(q^-n,q^(-n+1);0|q^2;-q^2/x^2)",
     ("discrete-q-hermite-ii",),
     lambda p, n, x: eval_series("discrete-q-hermite-ii", p, n, x),
     lambda p, n, x: x**n*phiseries([p["q"]**-n, p["q"]**(1-n)], [0], p["q"]**2, -p["q"]**2/(x*x)),
     {"c": 1.0, "q": 0.5}, _upto(6), lambda p: [-0.9, -0.4, 0.3, 0.8, 1.5])
