"""
    Registry of polynomial families, with evaluation by series definition and by three-term recurrence.

    >>> from askeyscheme import families
    >>> families.eval_series("legendre", {}, 2, 0.5)
    (-0.125+0j)
    >>> families.eval_recurrence("hermite", {}, 3, 1.0)
    (-4+0j)
"""

from __future__ import annotations

import logging
from typing import Any, Dict, Iterator, List, Mapping, NamedTuple, Optional, Tuple, Union
from typing_extensions import Literal
from typing_validation import validate

import numpy as np
from numpy.polynomial import Polynomial

from ..qcore import Number, PoleError, DomainError, PrecisionError, to_complex
from ..hyper import eval_series as _eval_hyper
from .descriptor import FamilyDescriptor, Evaluation
from .err import FamilyKeyError, FamilyValueError

_logger = logging.getLogger(__name__)

_families: Dict[str, FamilyDescriptor] = {}

def get_descriptor(name: str) -> FamilyDescriptor:
    """
        Gets the descriptor of the family with given kebab-case name.

        >>> get_descriptor("askey-wilson").variable.kind
        'TRIG'

        :raises KeyError: if no such family exists
    """
    validate(name, str)
    _ensure_catalog()
    if name not in _families:
        raise FamilyKeyError(f"No family named {name!r}.")
    return _families[name]

def exists(name: str) -> bool:
    """
        Checks whether a family with given name exists.

        >>> exists("wilson")
        True
        >>> exists("Wilson")
        False
    """
    validate(name, str)
    _ensure_catalog()
    return name in _families

def register(family: FamilyDescriptor, *, overwrite: bool = False) -> None:
    """
        Registers a family descriptor.

        :raises ValueError: if ``overwrite`` is :obj:`False` and a family with the same name already exists
    """
    validate(family, FamilyDescriptor)
    validate(overwrite, bool)
    if not overwrite and family.name in _families:
        raise FamilyValueError(f"Family named {family.name!r} already exists.")
    _families[family.name] = family

def table(*, group: Union[None, str] = None) -> Iterator[FamilyDescriptor]:
    """
        Iterates through the registered families, in registration order, optionally filtered by group.

        >>> len([f for f in table(group="classical")]) >= 13
        True
    """
    validate(group, Optional[str])
    _ensure_catalog()
    for family in list(_families.values()):
        if group is not None and family.group != group:
            continue
        yield family

_catalog_loaded = False

def _ensure_catalog() -> None:
    # pylint: disable = import-outside-toplevel, unused-import, cyclic-import, global-statement
    global _catalog_loaded
    if _catalog_loaded:
        return
    _catalog_loaded = True
    from ._catalog import askey, jacobi, discrete, askey_wilson, big_jacobi, little_jacobi, hermite_q
    _logger.debug("Loaded family catalog with %d entries.", len(_families))


EvalPath = Literal["series", "fallback", "recurrence"]
"""
    Literal type for the evaluation path of a value.
"""

class EvalResult(NamedTuple):
    """
        A polynomial value, with the path it was computed along.
    """

    value: complex
    """ The value :math:`p_n(x)`. """

    path: EvalPath
    """ The evaluation path. """


def _resolve(name: Union[str, FamilyDescriptor], params: Optional[Mapping[str, Any]]) -> Tuple[FamilyDescriptor, Dict[str, Any]]:
    family = name if isinstance(name, FamilyDescriptor) else get_descriptor(name)
    return family, family.prepare(params)

def _check_degree(family: FamilyDescriptor, p: Mapping[str, Any], n: int) -> None:
    validate(n, int)
    if n < 0:
        raise DomainError(f"Degree must be non-negative, found {n}.")
    bound = family.degree_bound(p)
    if bound is not None and n > bound:
        raise DomainError(f"Degree {n} exceeds the degree bound N = {bound} of family {family.name!r}.")

def _argument(family: FamilyDescriptor, p: Mapping[str, Any], x: Number, lattice: bool) -> complex:
    xc = to_complex(x, "argument")
    return family.variable.inverse(p, xc) if lattice else xc

def series_value(family: FamilyDescriptor, p: Mapping[str, Any], n: int, x: complex, *,
                 precision_tol: Optional[float] = None) -> EvalResult:
    """
        Evaluates the series definition of a family at prepared parameters, falling back to the rewritten
        finite-sum definition when the series has a pole, and to forward recursion when cancellation in the
        series leaves fewer correct digits than ``precision_tol`` requires.

        :param precision_tol: bound on the relative rounding error of the series, defaulting to the one set by
                              :func:`~askeyscheme.hyper.precision`
        :type precision_tol: :obj:`float` or :obj:`None`, *optional*

        :raises PoleError: if the series has a pole and the family has no rewritten definition
    """
    try:
        prefactor, spec = family.series(p, n, x)
        return EvalResult(prefactor*_eval_hyper(spec, precision_tol=precision_tol), "series")
    except PrecisionError as e:
        _logger.debug("Series definition of %s loses precision at n=%d, x=%r, using recurrence: %s",
                      family.name, n, x, e)
        v = family.variable.forward(p, x)
        return EvalResult(family.normalizer(p, n)*_recurrence_values(family, p, n, v)[n], "recurrence")
    except ZeroDivisionError as e:
        if not family.has_fallback:
            raise PoleError(f"Series definition of {family.name!r} has a pole at n={n}, x={x!r}: {e}") from e
        _logger.debug("Series definition of %s has a pole at n=%d, using rewritten form.", family.name, n)
        return EvalResult(family.fallback(p, n, x), "fallback")

def eval_series(name: Union[str, FamilyDescriptor], params: Optional[Mapping[str, Any]], n: int, x: Number, *,
                lattice: bool = False) -> complex:
    """
        Evaluates :math:`p_n(x)` from the family's series definition (definition normalization).

        Parameters not given take their default values. For lattice families, ``lattice=True`` means that ``x``
        is the value of the natural variable (e.g. :math:`\\lambda(x)`) rather than the argument.

        >>> eval_series("legendre", {}, 1, 0.7)
        (0.7+0j)
        >>> eval_series("chebyshev-t", {}, 0, 0.9)
        (1+0j)

        :param name: the family name
        :type name: :obj:`str`
        :param params: the parameters
        :type params: :obj:`Mapping` or :obj:`None`
        :param n: the degree
        :type n: :obj:`int`
        :param x: the argument
        :type x: :obj:`Number`

        :raises KeyError: if no such family exists
        :raises ValueError: if unknown parameter names are given
        :raises DomainError: if the degree exceeds the family's degree bound
        :raises PoleError: if the series has a pole and no rewritten form is available
    """
    family, p = _resolve(name, params)
    _check_degree(family, p, n)
    return series_value(family, p, n, _argument(family, p, x, lattice)).value

def eval_series_path(name: Union[str, FamilyDescriptor], params: Optional[Mapping[str, Any]], n: int, x: Number) -> EvalResult:
    """
        As :func:`eval_series`, also reporting whether the rewritten form was used.

        >>> eval_series_path("laguerre", {"alpha": -3.0}, 4, 0.5).path
        'fallback'
    """
    family, p = _resolve(name, params)
    _check_degree(family, p, n)
    return series_value(family, p, n, to_complex(x, "argument"))

def _recurrence_values(family: FamilyDescriptor, p: Mapping[str, Any], n: int, v: complex) -> List[complex]:
    rec = family.recurrence
    s, c = rec.multiplier(p)
    lhs = s*v+c
    values = [1+0j]
    prev = 0j
    start = 0
    if rec.first is not None and n >= 1:
        s1, c1 = rec.first(p)
        values.append(s1*v+c1)
        prev = values[0]
        start = 1
    for k in range(start, n):
        try:
            a, b, ck = rec.coefficients(p, k)
            if a == 0:
                raise ZeroDivisionError("A_n = 0")
            nxt = ((lhs-b)*values[-1]-(ck*prev if k > 0 or start else 0))/a
        except ZeroDivisionError as e:
            raise PoleError(f"Recurrence coefficient of {family.name!r} has a pole at n={k}.") from e
        prev = values[-1]
        values.append(complex(nxt))
    return values

def eval_recurrence(name: Union[str, FamilyDescriptor], params: Optional[Mapping[str, Any]], n: int, x: Number, *,
                    lattice: bool = False) -> complex:
    """
        Evaluates :math:`p_n(x)` by forward three-term recursion from the initial conditions, multiplied by
        :math:`\\kappa_n` to return definition normalization.

        >>> round(eval_recurrence("chebyshev-t", {}, 4, 0.8660254037844387).real, 12)
        -0.5
        >>> eval_recurrence("charlier", {"a": 1.0}, 1, 2)
        (-1+0j)

        :raises PoleError: if a recurrence coefficient has a pole
        :raises DomainError: if the degree exceeds the family's degree bound
    """
    family, p = _resolve(name, params)
    _check_degree(family, p, n)
    arg = _argument(family, p, x, lattice)
    v = family.variable.forward(p, arg)
    return family.normalizer(p, n)*_recurrence_values(family, p, n, v)[n]

def eval_all_upto(name: Union[str, FamilyDescriptor], params: Optional[Mapping[str, Any]], N: int, x: Number, *,
                  lattice: bool = False) -> List[complex]:
    """
        The values :math:`[p_0(x), \\ldots, p_N(x)]` in definition normalization, by a single forward recursion.

        >>> eval_all_upto("legendre", {}, 2, 1.0)
        [(1+0j), (1+0j), (1+0j)]
        >>> eval_all_upto("chebyshev-u", {}, 2, 0.0)
        [(1+0j), 0j, (-1+0j)]

        :raises PoleError: if a recurrence coefficient has a pole
    """
    family, p = _resolve(name, params)
    _check_degree(family, p, N)
    arg = _argument(family, p, x, lattice)
    v = family.variable.forward(p, arg)
    values = _recurrence_values(family, p, N, v)
    return [family.normalizer(p, k)*values[k] for k in range(N+1)]

def polynomial(name: Union[str, FamilyDescriptor], params: Optional[Mapping[str, Any]], n: int) -> Polynomial:
    """
        The monomial coefficients of :math:`p_n` in the natural variable, built by the three-term recurrence.

        >>> polynomial("hermite", {}, 2).coef.real.tolist()
        [-2.0, 0.0, 4.0]

        :raises PoleError: if a recurrence coefficient has a pole
    """
    family, p = _resolve(name, params)
    _check_degree(family, p, n)
    rec = family.recurrence
    s, c = rec.multiplier(p)
    var = Polynomial(np.array([c, s], dtype=np.complex128))
    polys = [Polynomial(np.array([1], dtype=np.complex128))]
    prev = Polynomial(np.array([0], dtype=np.complex128))
    start = 0
    if rec.first is not None and n >= 1:
        s1, c1 = rec.first(p)
        polys.append(Polynomial(np.array([c1, s1], dtype=np.complex128)))
        prev = polys[0]
        start = 1
    for k in range(start, n):
        try:
            a, b, ck = rec.coefficients(p, k)
            if a == 0:
                raise ZeroDivisionError("A_n = 0")
            nxt = ((var-b)*polys[-1]-prev*ck)/a if k > 0 or start else ((var-b)*polys[-1])/a
        except ZeroDivisionError as e:
            raise PoleError(f"Recurrence coefficient of {family.name!r} has a pole at n={k}.") from e
        prev = polys[-1]
        polys.append(nxt)
    return polys[n]*family.normalizer(p, n)

def evaluation(name: Union[str, FamilyDescriptor], params: Optional[Mapping[str, Any]], n: int) -> Evaluation:
    """
        Evaluation access to :math:`y = p_n`: values through the series definition (with fallback),
        exact derivatives in the natural variable through the monomial coefficients.
    """
    family, p = _resolve(name, params)
    _check_degree(family, p, n)
    cache: Dict[int, Polynomial] = {}
    def value(x: complex) -> complex:
        return series_value(family, p, n, x).value
    def derivative(x: complex, order: int) -> complex:
        if order not in cache:
            cache[order] = polynomial(family, p, n).deriv(order)
        return complex(cache[order](family.variable.forward(p, x)))
    return Evaluation(value, derivative)
