"""
    Coefficient checks of the generating functions :math:`F(x, t) = \\sum_n c_n\\,p_n(x)\\,t^n`.

    The left hand side is built as a truncated power series in :math:`t`, and each coefficient is compared
    with :math:`c_n\\,p_n(x)` from the series definition.

    >>> from askeyscheme.verify import generating
    >>> generating.check_generating_function("legendre_gf", {}, 0.3, order=10) <= 1e-10
    True
    >>> generating.check_generating_function("charlier_gf", {"a": 2.0}, 3, order=10) <= 1e-10
    True

    Generating functions holding only up to :math:`t^N` (``"TRUNCATED"``) are compared for :math:`n \\leq N`.
    Divergent generating functions (``"FORMAL"``) are compared as formal coefficient sequences: no analytic
    claim is made about them, and their left hand sides are never summed.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, Iterator, List, Mapping, Optional, Union
from typing_extensions import Final
from typing_validation import validate

from ..qcore import Number, PoleError, to_complex
from ..families import FamilyDescriptor, GFSpec, eval_all_upto, get_descriptor, series_value, table
from .err import VerifyKeyError, VerifyValueError

_logger = logging.getLogger(__name__)

GF_TOL: Final[float] = 1e-8
"""
    Default threshold on generating function coefficient residuals.
"""

GF_ORDER: Final[int] = 12
"""
    Default order of the comparison, lowered to :math:`N` for finite families.
"""

def gf_table(*, family: Optional[str] = None) -> Iterator[GFSpec]:
    """
        Iterates through the generating functions, optionally restricted to a single family.

        >>> [gf.name for gf in gf_table(family="hermite")][:1]
        ['hermite_gf']
    """
    validate(family, Optional[str])
    families = [get_descriptor(family)] if family is not None else list(table())
    for desc in families:
        yield from desc.generating_functions

def find_generating_function(name: str) -> GFSpec:
    """
        Gets the generating function with given name.

        >>> find_generating_function("krawtchouk_gf").mode
        'TRUNCATED'

        :raises KeyError: if no such generating function exists
    """
    validate(name, str)
    for gf in gf_table():
        if gf.name == name:
            return gf
    raise VerifyKeyError(f"No generating function named {name!r}.")

def gf_params(gf: GFSpec, params: Optional[Mapping[str, Any]] = None) -> Dict[str, Any]:
    """
        The prepared parameters of a generating function check: the family's defaults, overridden by the
        generating function's own defaults and then by ``params``.
    """
    desc = get_descriptor(gf.family)
    record: Dict[str, Any] = dict(gf.defaults or {})
    if params is not None:
        record.update(params)
    return desc.prepare(record)

def _order(desc: FamilyDescriptor, p: Mapping[str, Any], order: Optional[int]) -> int:
    bound = desc.degree_bound(p)
    res = GF_ORDER if order is None else order
    if res < 0:
        raise VerifyValueError(f"Order must be non-negative, found {res}.")
    return res if bound is None else min(res, bound)

def coefficient_residuals(gf: Union[str, GFSpec], params: Optional[Mapping[str, Any]], x: Number, *,
                          order: Optional[int] = None) -> List[float]:
    """
        The per-coefficient residuals :math:`|F_n - c_n p_n(x)|/\\max(1, |c_n p_n(x)|)` for :math:`n` up to
        the order (at most :math:`N` for finite families).

        :raises KeyError: if no such generating function exists
    """
    spec = find_generating_function(gf) if isinstance(gf, str) else gf
    desc = get_descriptor(spec.family)
    p = gf_params(spec, params)
    xc = to_complex(x, "argument")
    m = _order(desc, p, order)
    lhs = spec.lhs(p, xc, m)
    try:
        values = eval_all_upto(desc, p, m, xc)
    except PoleError:
        _logger.debug("Recurrence of %s has a pole, comparing %s with the series.", desc.name, spec.name)
        values = [series_value(desc, p, n, xc).value for n in range(m+1)]
    res: List[float] = []
    for n in range(m+1):
        expected = complex(spec.coefficient(p, n))*values[n]
        res.append(abs(lhs[n]-expected)/max(1.0, abs(expected)))
    return res

def check_generating_function(gf: Union[str, GFSpec], params: Optional[Mapping[str, Any]], x: Number, *,
                              order: Optional[int] = None) -> float:
    """
        The largest coefficient residual of a generating function at the point ``x``.

        >>> check_generating_function("hermite_gf", {}, -0.4, order=12) <= 1e-10
        True

        :param gf: the generating function, by name or spec
        :type gf: :obj:`str` or :class:`~askeyscheme.families.GFSpec`
        :param params: parameters, completed by the defaults
        :type params: :obj:`Mapping` or :obj:`None`
        :param x: the argument, from the family's natural domain
        :type x: :obj:`Number`
        :param order: the highest power of :math:`t` compared, defaulting to :math:`\\min(12, N)`
        :type order: :obj:`int` or :obj:`None`, *optional*

        :raises KeyError: if no such generating function exists
    """
    validate(order, Optional[int])
    res = max(coefficient_residuals(gf, params, x, order=order))
    _logger.debug("Coefficient residual of generating function %s at x=%r: %.3e",
                  gf if isinstance(gf, str) else gf.name, x, res)
    return res

def default_points(gf: Union[str, GFSpec], params: Optional[Mapping[str, Any]] = None) -> List[complex]:
    """
        Default sample points of a generating function check: its own, or the family's.
    """
    spec = find_generating_function(gf) if isinstance(gf, str) else gf
    p = gf_params(spec, params)
    if spec.points is not None:
        return [complex(x) for x in spec.points(p)]
    return list(get_descriptor(spec.family).points(p))
