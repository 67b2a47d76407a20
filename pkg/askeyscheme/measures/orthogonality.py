"""
    Inner products, norms and orthogonality residuals of the polynomial families against their measures.

    >>> from askeyscheme import measures
    >>> round(measures.inner_product("legendre", {}, 1, 1).real, 12)
    0.666666666667
    >>> measures.orthogonality_residual("legendre", {}, 2, 3) <= 1e-10
    True
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Any, Callable, Dict, Mapping, Optional, Tuple, Union
from typing_validation import validate

import numpy as np

from ..qcore import DomainError, Number, PoleError
from .config import QuadratureConfig
from .spec import MeasureSpec

if TYPE_CHECKING:
    from ..families.descriptor import FamilyDescriptor

_logger = logging.getLogger(__name__)

Family = Union[str, "FamilyDescriptor"]
"""
    Type alias for families, given by name or by descriptor.
"""

def _resolve(name: Family, params: Optional[Mapping[str, Any]]) -> Tuple["FamilyDescriptor", Dict[str, Any]]:
    # pylint: disable = import-outside-toplevel, cyclic-import
    from ..families.registry import get_descriptor
    family = get_descriptor(name) if isinstance(name, str) else name
    return family, family.prepare(params)

def _values(family: "FamilyDescriptor", p: Mapping[str, Any], upto: int) -> Callable[[Number], np.ndarray]:
    # pylint: disable = import-outside-toplevel, cyclic-import
    from ..families.registry import eval_all_upto, series_value
    def values(x: Number) -> np.ndarray:
        try:
            return np.array(eval_all_upto(family, p, upto, x), dtype=np.complex128)
        except PoleError:
            xc = complex(x)
            return np.array([series_value(family, p, k, xc).value for k in range(upto+1)], dtype=np.complex128)
    return values

def _flag_positivity(family: "FamilyDescriptor", p: Mapping[str, Any]) -> Optional[str]:
    violation = family.positivity_violation(p)
    if violation is not None:
        _logger.warning("Parameters %r of %s lie outside the positivity domain (%s), the measure may not be positive.",
                        dict(p), family.name, violation)
    return violation

def family_measure(name: Family, params: Optional[Mapping[str, Any]] = None, *,
                   which: Optional[str] = None) -> MeasureSpec:
    """
        The orthogonality measure of a family, or the measure of a named alternative orthogonality relation.

        >>> family_measure("charlier", {"a": 1.0}).kind
        'DISCRETE_INFINITE'
        >>> family_measure("q-laguerre", {}, which="bilateral").kind
        'BILATERAL'
    """
    family, p = _resolve(name, params)
    return family.measure(p, which)

def gram_matrix(name: Family, params: Optional[Mapping[str, Any]], upto: int,
                cfg: Optional[QuadratureConfig] = None, *, which: Optional[str] = None) -> np.ndarray:
    """
        The matrix of inner products :math:`\\langle p_m, p_n \\rangle` for :math:`0 \\leq m, n \\leq` ``upto``,
        integrated in a single pass over the measure.

        :raises DomainError: if ``upto`` exceeds the family's degree bound
        :raises ConvergenceError: if the quadrature or a measure sum fails to converge
    """
    validate(upto, int)
    family, p = _resolve(name, params)
    if upto < 0:
        raise DomainError(f"Degree must be non-negative, found {upto}.")
    if cfg is None:
        cfg = QuadratureConfig.default()
    _flag_positivity(family, p)
    measure = family.measure(p, which)
    values = _values(family, p, upto)
    def products(x: Number) -> np.ndarray:
        v = values(x)
        return np.outer(v, v).ravel()
    res = np.asarray(measure.integrate(products, cfg), dtype=np.complex128)
    return res.reshape((upto+1, upto+1))

def inner_product(name: Family, params: Optional[Mapping[str, Any]], m: int, n: int,
                  cfg: Optional[QuadratureConfig] = None, *, which: Optional[str] = None) -> complex:
    """
        The inner product :math:`\\langle p_m, p_n \\rangle = \\int p_m p_n\\,d\\mu` against the family's measure.

        Parameters outside the positivity domain are accepted: the value is still computed, and a warning is logged.

        >>> abs(inner_product("hermite", {}, 1, 1)-2*3.141592653589793**0.5) < 1e-8
        True
        >>> abs(inner_product("legendre", {}, 0, 1)) < 1e-14
        True

        :raises DomainError: if a degree exceeds the family's degree bound
        :raises ConvergenceError: if the quadrature or a measure sum fails to converge
    """
    validate(m, int)
    validate(n, int)
    family, p = _resolve(name, params)
    if min(m, n) < 0:
        raise DomainError(f"Degrees must be non-negative, found {m} and {n}.")
    if cfg is None:
        cfg = QuadratureConfig.default()
    _flag_positivity(family, p)
    measure = family.measure(p, which)
    values = _values(family, p, max(m, n))
    def product(x: Number) -> np.ndarray:
        v = values(x)
        return np.array([v[m]*v[n]], dtype=np.complex128)
    return complex(measure.integrate(product, cfg)[0])

def norm(name: Family, params: Optional[Mapping[str, Any]], n: int, *, which: Optional[str] = None) -> complex:
    """
        The closed-form norm :math:`h_n`, with :math:`\\langle p_m, p_n \\rangle = h_n\\delta_{mn}`.

        >>> import math
        >>> round(norm("chebyshev-t", {}, 0).real, 12) == round(math.pi, 12)
        True
        >>> round(norm("little-q-legendre", {"q": 0.5}, 1).real, 7)
        0.5714286

        :raises DomainError: if the parameters lie outside the positivity domain
    """
    validate(n, int)
    family, p = _resolve(name, params)
    violation = family.positivity_violation(p)
    if violation is not None:
        raise DomainError(f"Parameters of {family.name!r} lie outside the positivity domain: {violation}.")
    if n < 0:
        raise DomainError(f"Degree must be non-negative, found {n}.")
    bound = family.degree_bound(p)
    if bound is not None and n > bound:
        raise DomainError(f"Degree {n} exceeds the degree bound N = {bound} of family {family.name!r}.")
    return family.norm(p, n, which)

def orthogonality_residual(name: Family, params: Optional[Mapping[str, Any]], m: int, n: int,
                           cfg: Optional[QuadratureConfig] = None, *, which: Optional[str] = None) -> float:
    """
        The residual :math:`|\\langle p_m, p_n \\rangle - \\delta_{mn}h_n|/\\max(|h_m|, |h_n|)`.

        >>> orthogonality_residual("askey-wilson", {"a": 0.3, "b": 0.3, "c": 0.3, "d": 0.3, "q": 0.5}, 2, 2) <= 1e-6
        True

        :raises DomainError: if the parameters lie outside the positivity domain
    """
    family, p = _resolve(name, params)
    hm, hn = norm(family, p, m, which=which), norm(family, p, n, which=which)
    value = inner_product(family, p, m, n, cfg, which=which)
    expected = hn if m == n else 0j
    scale = max(abs(hm), abs(hn))
    res = abs(value-expected)/scale
    _logger.debug("Orthogonality residual of %s at (m, n) = (%d, %d): %.3e", family.name, m, n, res)
    return res
