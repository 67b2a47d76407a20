"""
    Residuals of the differential, difference and q-difference equations satisfied by the families.

    Each equation is written as a list of terms summing to zero, and the residual at a point is the modulus
    of the sum relative to the largest term, or to 1 when all terms are smaller. Derivatives come from the exact
    monomial coefficients of :math:`p_n`, shifted arguments are evaluated directly.

    >>> from askeyscheme.verify import equations
    >>> equations.check_equation("hermite", "hermite_ode", {}, 3, [0.7]) <= 1e-11
    True
    >>> equations.check_equation("hahn", "hahn_difference", {"alpha": 0.5, "beta": 1.5, "N": 8}, 3, [4]) <= 1e-10
    True
"""

from __future__ import annotations

import logging
from typing import Any, Iterator, List, Mapping, Optional, Sequence, Tuple, Union
from typing_extensions import Final
from typing_validation import validate

from ..qcore import Number, PoleError
from ..families import EquationSpec, FamilyDescriptor, evaluation, get_descriptor, table
from .err import VerifyKeyError, VerifyValueError

_logger = logging.getLogger(__name__)

EQUATION_TOL: Final[float] = 1e-9
"""
    Default threshold on equation residuals.
"""

EIGENVALUE_PERTURBATION: Final[float] = 0.01
"""
    Relative perturbation of the eigenvalue used by :func:`eigenvalue_guard`.
"""

GUARD_TOL: Final[float] = 1e-3
"""
    Smallest residual a perturbed eigenvalue must produce for the equation to be non-trivial.
"""

FORMS_TOL: Final[float] = 1e-10
"""
    Largest admitted difference between the residuals of two operator forms of the same equation.
"""

Family = Union[str, FamilyDescriptor]
"""
    Type alias for families, given by name or by descriptor.
"""

def _family(family: Family) -> FamilyDescriptor:
    return get_descriptor(family) if isinstance(family, str) else family

def find_equation(family: Family, name: str) -> EquationSpec:
    """
        Gets the equation with given name among those of a family.

        >>> find_equation("jacobi", "jacobi_ode").kind
        'ODE2'

        :raises KeyError: if the family has no such equation
    """
    validate(name, str)
    desc = _family(family)
    for eq in desc.equations:
        if eq.name == name:
            return eq
    raise VerifyKeyError(f"Family {desc.name!r} has no equation named {name!r}.")

def equation_table(*, family: Optional[str] = None) -> Iterator[Tuple[FamilyDescriptor, EquationSpec]]:
    """
        Iterates through (family, equation) pairs, optionally restricted to a single family.

        >>> [eq.name for _, eq in equation_table(family="legendre")]
        ['legendre_ode']
    """
    validate(family, Optional[str])
    families = [get_descriptor(family)] if family is not None else list(table())
    for desc in families:
        for eq in desc.equations:
            yield desc, eq

def point_residuals(family: Family, name: str, params: Optional[Mapping[str, Any]], n: int,
                    points: Optional[Sequence[Number]] = None, *, eigenvalue: Optional[complex] = None,
                    floor: float = 1.0) -> List[float]:
    """
        The residual :math:`|\\sum_j t_j|/\\max(\\text{floor}, \\max_j |t_j|)` of the equation at each sample point.
        Where every term is rounding noise, as at a zero of :math:`p_n` shared by its derivatives, the residual
        stays at the noise level.

        :param eigenvalue: replaces the eigenvalue :math:`\\lambda_n` of the equation
        :type eigenvalue: :obj:`complex` or :obj:`None`, *optional*
        :param floor: smallest scale of the residual, 0 for a purely relative residual
        :type floor: :obj:`float`, *optional*

        :raises PoleError: if a sample point is a singular point of the equation
    """
    validate(n, int)
    validate(floor, float)
    desc = _family(family)
    eq = find_equation(desc, name)
    p = desc.prepare(params)
    y = evaluation(desc, p, n)
    eig = eq.eigenvalue(p, n) if eigenvalue is None else complex(eigenvalue)
    xs = [complex(x) for x in (eq.points(p) if points is None else points)]
    if not xs:
        raise VerifyValueError(f"No sample points for equation {name!r}.")
    res: List[float] = []
    for x in xs:
        try:
            terms = [complex(t) for t in eq.terms(p, n, x, y, eig)]
        except PoleError:
            raise
        except ZeroDivisionError as e:
            raise PoleError(f"Equation {name!r} is singular at the sample point {x!r}.") from e
        scale = max([floor]+[abs(t) for t in terms])
        res.append(abs(sum(terms))/scale if scale > 0 else 0.0)
    return res

def check_equation(family: Family, name: str, params: Optional[Mapping[str, Any]], n: int,
                   points: Optional[Sequence[Number]] = None) -> float:
    """
        The largest residual of an equation over the sample points (the equation's own if not given).

        >>> check_equation("askey-wilson", "askey_wilson_qdifference",
        ...                {"a": 0.3, "b": 0.3, "c": 0.3, "d": 0.3, "q": 0.5}, 2, [0.8]) <= 1e-9
        True

        :param family: the family
        :type family: :obj:`str` or :class:`~askeyscheme.families.FamilyDescriptor`
        :param name: the equation name
        :type name: :obj:`str`
        :param params: parameters, completed by the family's defaults
        :type params: :obj:`Mapping` or :obj:`None`
        :param n: the degree
        :type n: :obj:`int`
        :param points: the sample points, values of ``z`` for equations in the z-form
        :type points: :obj:`Sequence` of :obj:`Number` or :obj:`None`, *optional*

        :raises KeyError: if the family has no such equation
        :raises PoleError: if a sample point is a singular point of the equation
    """
    res = max(point_residuals(family, name, params, n, points))
    _logger.debug("Residual of equation %s at n=%d: %.3e", name, n, res)
    return res

def eigenvalue_guard(family: Family, name: str, params: Optional[Mapping[str, Any]], n: int,
                     points: Optional[Sequence[Number]] = None, *,
                     perturbation: float = EIGENVALUE_PERTURBATION) -> float:
    """
        The largest purely relative residual of an equation when its eigenvalue is perturbed by a relative
        ``perturbation``.
        A sound equation gives a residual of at least ``1e-3`` for degrees :math:`n \\geq 1`.

        >>> eigenvalue_guard("laguerre", "laguerre_ode", {"alpha": 0.5}, 3) >= 1e-3
        True
    """
    validate(perturbation, float)
    desc = _family(family)
    eq = find_equation(desc, name)
    eig = eq.eigenvalue(desc.prepare(params), n)
    return max(point_residuals(desc, name, params, n, points, eigenvalue=eig*(1+perturbation), floor=0.0))

def operator_form_pairs(*, family: Optional[str] = None) -> Iterator[Tuple[FamilyDescriptor, str, str]]:
    """
        Iterates through families with an equation in both the z-form and the q-derivative form,
        yielding (family, z-form name, q-derivative form name).

        >>> ("askey_wilson_qdifference", "askey_wilson_qderivative") in [(a, b) for _, a, b in operator_form_pairs()]
        True
    """
    for desc, eq in equation_table(family=family):
        if eq.kind != "QDIFFERENCE_Z" or not eq.name.endswith("_qdifference"):
            continue
        other = eq.name[:-len("_qdifference")]+"_qderivative"
        if any(e.name == other and e.kind == "QDERIVATIVE" for e in desc.equations):
            yield desc, eq.name, other

def operator_forms_residual(family: Family, z_form: str, dq_form: str, params: Optional[Mapping[str, Any]],
                            n: int, points: Optional[Sequence[Number]] = None) -> float:
    """
        The largest difference between the residuals of the z-form and the q-derivative form of the same
        equation, over common sample points.

        >>> operator_forms_residual("continuous-q-hermite", "continuous_q_hermite_qdifference",
        ...                         "continuous_q_hermite_qderivative", {"q": 0.5}, 3) <= 1e-10
        True
    """
    desc = _family(family)
    xs = [complex(x) for x in (find_equation(desc, z_form).points(desc.prepare(params)) if points is None else points)]
    r_z = point_residuals(desc, z_form, params, n, xs)
    r_dq = point_residuals(desc, dq_form, params, n, xs)
    return max(abs(a-b) for a, b in zip(r_z, r_dq))
