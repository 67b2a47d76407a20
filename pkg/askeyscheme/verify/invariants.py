"""
    Structural properties shared by all families: agreement of the series definition with the three-term
    recurrence, exact degree, orthogonality against the family's measure, dual orthogonality of the finite
    families, consistency of lattice arguments and symmetry in the parameters.

    >>> from askeyscheme.verify import invariants
    >>> invariants.series_recurrence_residual("hermite", {}) <= 1e-9
    True
    >>> invariants.check_orthogonality("legendre", {}, upto=4) <= 1e-10
    True
    >>> invariants.dual_orthogonality_residual("krawtchouk", {"p": 0.3, "N": 5}) <= 1e-10
    True
"""

from __future__ import annotations

import itertools
import logging
import math
from random import Random
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union
from typing_extensions import Final
from typing_validation import validate

import numpy as np
from numpy.polynomial import Polynomial

from ..qcore import Number, PoleError
from ..hyper import residual
from ..families import FamilyDescriptor, eval_recurrence, get_descriptor, series_value
from ..measures import QuadratureConfig, gram_matrix
from .err import VerifyValueError

_logger = logging.getLogger(__name__)

SERIES_RECURRENCE_TOL: Final[float] = 1e-9
"""
    Threshold on the relative deviation between the series definition and the recurrence.
"""

MAX_DEGREE: Final[int] = 12
"""
    Highest degree compared by :func:`series_recurrence_residual`, lowered to :math:`N` for finite families.
"""

MAX_POINTS: Final[int] = 8
"""
    Largest number of sample points used by :func:`series_recurrence_residual`.
"""

DRAWS: Final[int] = 5
"""
    Default number of seeded parameter draws per family.
"""

ORTHOGONALITY_DEGREE: Final[int] = 6
"""
    Highest degree of the orthogonality checks, lowered to :math:`N` for finite families.
"""

FINITE_TOL: Final[float] = 1e-10
"""
    Orthogonality threshold for finite discrete measures, which are summed exactly.
"""

QUADRATURE_TOL: Final[float] = 1e-6
"""
    Orthogonality threshold for all other measures.
"""

DEGREE_TOL: Final[float] = 1e-8
"""
    Threshold on the residual of the degree check.
"""

SYMMETRY_TOL: Final[float] = 1e-10
"""
    Threshold on parameter symmetry and lattice consistency residuals.
"""

SYMMETRIES: Final[Mapping[str, Tuple[Tuple[str, ...], ...]]] = {
    "wilson": (("a", "b", "c", "d"),),
    "askey-wilson": (("a", "b", "c", "d"),),
    "continuous-dual-hahn": (("a", "b", "c"),),
    "continuous-dual-q-hahn": (("a", "b", "c"),),
    "continuous-hahn": (("a", "b"), ("c", "d")),
    "continuous-q-hahn": (("a", "b"), ("c", "d")),
    "al-salam-chihara": (("a", "b"),),
}
"""
    Families whose definition normalization is symmetric under permutations of groups of parameters.
"""

Family = Union[str, FamilyDescriptor]
"""
    Type alias for families, given by name or by descriptor.
"""

def _family(family: Family) -> FamilyDescriptor:
    return get_descriptor(family) if isinstance(family, str) else family

def _top_degree(desc: FamilyDescriptor, p: Mapping[str, Any], upto: int) -> int:
    bound = desc.degree_bound(p)
    return upto if bound is None else min(upto, bound)

def draws(family: Family, count: int = DRAWS, seed: int = 42) -> List[Dict[str, Any]]:
    """
        Seeded positivity-domain parameter draws for a family. The draws depend only on the seed and the
        family name, not on the order in which families are visited.

        >>> draws("hermite", 2) == [{}, {}]
        True
    """
    validate(count, int)
    validate(seed, int)
    desc = _family(family)
    rng = Random(f"{seed}:{desc.name}")
    return [desc.sample(rng) for _ in range(count)]


def series_recurrence_residual(family: Family, params: Optional[Mapping[str, Any]], *,
                               upto: int = MAX_DEGREE, points: Optional[Sequence[Number]] = None) -> float:
    """
        The largest relative deviation :math:`|s-r|/\\max(1,|s|,|r|)` between the series definition and the
        normalized recurrence, over degrees :math:`n \\leq` ``upto`` (at most :math:`N`) and up to eight
        sample points (the family's own, if not given). Points where cancellation in the series could exceed a tenth
        of :obj:`SERIES_RECURRENCE_TOL` are skipped, as are poles.

        >>> series_recurrence_residual("racah", {}) <= 1e-9
        True
    """
    validate(upto, int)
    desc = _family(family)
    p = desc.prepare(params)
    top = _top_degree(desc, p, upto)
    xs = [complex(x) for x in (desc.points(p) if points is None else points)][:MAX_POINTS]
    worst = 0.0
    for x in xs:
        for n in range(top+1):
            try:
                s, path = series_value(desc, p, n, x, precision_tol=SERIES_RECURRENCE_TOL/10)
                r = eval_recurrence(desc, p, n, x)
            except PoleError:
                _logger.debug("Skipping %s at n=%d, x=%r: pole.", desc.name, n, x)
                continue
            if path == "recurrence":
                _logger.debug("Skipping %s at n=%d, x=%r: cancellation in the series.", desc.name, n, x)
                continue
            worst = max(worst, residual(s, r))
    return worst

def degree_residual(family: Family, params: Optional[Mapping[str, Any]], n: int) -> float:
    """
        Checks that :math:`p_n` is a polynomial of degree exactly :math:`n` in the natural variable: the series
        values at :math:`n+2` Chebyshev nodes of the natural variable on :math:`[1, 2]` are fitted by a
        polynomial of degree :math:`n`, whose leading coefficient must not vanish.

        Returns the fit residual relative to the values, or :obj:`math.inf` if the leading coefficient vanishes.

        >>> degree_residual("laguerre", {"alpha": 0.5}, 4) <= 1e-8
        True
    """
    validate(n, int)
    desc = _family(family)
    p = desc.prepare(params)
    k = np.arange(n+2)
    vs = 1.5+0.5*np.cos((2*k+1)*np.pi/(2*(n+2)))
    ys = np.array([series_value(desc, p, n, desc.variable.inverse(p, complex(v))).value for v in vs],
                  dtype=np.complex128)
    fit_re = Polynomial.fit(vs, ys.real, n)
    fit_im = Polynomial.fit(vs, ys.imag, n)
    fitted = fit_re(vs)+1j*fit_im(vs)
    scale = max(1.0, float(np.max(np.abs(ys))))
    leading = abs(complex(fit_re.convert().coef[-1], fit_im.convert().coef[-1])) if n > 0 else abs(ys[0])
    if leading <= scale*1e-12:
        _logger.info("Polynomial %s of degree %d has a vanishing leading coefficient at %r", desc.name, n, p)
        return math.inf
    return float(np.max(np.abs(fitted-ys)))/scale

def orthogonality_threshold(family: Family, params: Optional[Mapping[str, Any]] = None, *,
                            which: Optional[str] = None) -> float:
    """
        The orthogonality threshold of a family: ``1e-10`` for finite discrete measures, ``1e-6`` otherwise.

        >>> orthogonality_threshold("hahn"), orthogonality_threshold("askey-wilson")
        (1e-10, 1e-06)
    """
    desc = _family(family)
    kind = desc.measure(desc.prepare(params), which).kind
    return FINITE_TOL if kind == "DISCRETE_FINITE" else QUADRATURE_TOL

def orthogonality_residuals(family: Family, params: Optional[Mapping[str, Any]], *,
                            upto: int = ORTHOGONALITY_DEGREE, cfg: Optional[QuadratureConfig] = None,
                            which: Optional[str] = None) -> np.ndarray:
    """
        The matrix of residuals :math:`|\\langle p_m, p_n \\rangle - \\delta_{mn}h_n|/\\max(|h_m|, |h_n|)`
        for :math:`m, n \\leq` ``upto`` (at most :math:`N`), from a single pass over the measure.
    """
    validate(upto, int)
    desc = _family(family)
    p = desc.prepare(params)
    top = _top_degree(desc, p, upto)
    gram = gram_matrix(desc, p, top, cfg, which=which)
    h = np.array([desc.norm(p, k, which) for k in range(top+1)], dtype=np.complex128)
    expected = np.diag(h)
    scale = np.maximum.outer(np.abs(h), np.abs(h))
    return np.abs(gram-expected)/scale

def check_orthogonality(family: Family, params: Optional[Mapping[str, Any]], *,
                        upto: int = ORTHOGONALITY_DEGREE, cfg: Optional[QuadratureConfig] = None,
                        which: Optional[str] = None) -> float:
    """
        The largest orthogonality residual over all pairs :math:`m, n \\leq` ``upto``.

        >>> check_orthogonality("charlier", {"a": 1.5}) <= 1e-6
        True
    """
    res = float(np.max(orthogonality_residuals(family, params, upto=upto, cfg=cfg, which=which)))
    _logger.debug("Orthogonality residual of %s: %.3e", _family(family).name, res)
    return res

def dual_orthogonality_residual(family: Family, params: Optional[Mapping[str, Any]]) -> float:
    """
        For families with a finite discrete measure, the residual of the dual orthogonality
        :math:`\\sum_{n=0}^N p_n(x_j)p_n(x_k)/h_n = \\delta_{jk}/w_j` over all pairs of nodes,
        as the largest entry of :math:`|w_j\\sum_n p_n(x_j)p_n(x_k)/h_n - \\delta_{jk}|`.

        :raises ValueError: if the family's measure is not finite discrete
    """
    desc = _family(family)
    p = desc.prepare(params)
    measure = desc.measure(p)
    if measure.kind != "DISCRETE_FINITE":
        raise VerifyValueError(f"Family {desc.name!r} does not have a finite discrete measure.")
    N = desc.degree_bound(p)
    assert N is not None
    nodes = measure.masses(N+1)
    h = np.array([desc.norm(p, n) for n in range(N+1)], dtype=np.complex128)
    values = np.array([[series_value(desc, p, n, x).value for n in range(N+1)] for x, _ in nodes],
                      dtype=np.complex128)
    w = np.array([m for _, m in nodes], dtype=np.complex128)
    kernel = (values/h) @ values.T
    return float(np.max(np.abs(w[:, None]*kernel-np.eye(len(nodes)))))

def lattice_residual(family: Family, params: Optional[Mapping[str, Any]], *, upto: int = 6,
                     points: Optional[Sequence[Number]] = None) -> float:
    """
        The largest residual between :math:`p_n(x)` and the value obtained by evaluating at the natural variable
        :math:`\\lambda(x)` and mapping back, over :math:`n \\leq` ``upto`` (at most :math:`N`).
        Families whose natural variable is the argument itself give zero.

        >>> lattice_residual("dual-hahn", {"gamma": 0.5, "delta": 0.7, "N": 6}) <= 1e-10
        True
    """
    desc = _family(family)
    p = desc.prepare(params)
    top = _top_degree(desc, p, upto)
    vmap = desc.variable
    worst = 0.0
    for x in [complex(x) for x in (desc.points(p) if points is None else points)]:
        back = vmap.inverse(p, vmap.forward(p, x))
        for n in range(top+1):
            try:
                worst = max(worst, residual(series_value(desc, p, n, x).value, series_value(desc, p, n, back).value))
            except PoleError:
                continue
    return worst

def symmetry_residual(family: Family, params: Optional[Mapping[str, Any]], *, upto: int = 5,
                      points: Optional[Sequence[Number]] = None) -> float:
    """
        The largest residual of :math:`p_n` under permutations of the symmetric parameter groups of a family
        (see :obj:`SYMMETRIES`), over :math:`n \\leq` ``upto``.

        >>> symmetry_residual("wilson", {"a": 0.3, "b": 0.7, "c": 1.1, "d": 0.4}) <= 1e-10
        True

        :raises ValueError: if the family has no parameter symmetry
    """
    desc = _family(family)
    if desc.name not in SYMMETRIES:
        raise VerifyValueError(f"Family {desc.name!r} has no parameter symmetry.")
    p = desc.prepare(params)
    xs = [complex(x) for x in (desc.points(p) if points is None else points)][:4]
    worst = 0.0
    for permuted in _permutations(p, SYMMETRIES[desc.name]):
        for n in range(upto+1):
            for x in xs:
                worst = max(worst, residual(series_value(desc, p, n, x).value,
                                            series_value(desc, permuted, n, x).value))
    return worst

def _permutations(p: Mapping[str, Any], groups: Sequence[Tuple[str, ...]]) -> Iterator[Dict[str, Any]]:
    choices = [list(itertools.permutations(group)) for group in groups]
    for combination in itertools.product(*choices):
        record = dict(p)
        for group, perm in zip(groups, combination):
            for src, dst in zip(group, perm):
                record[dst] = p[src]
        yield record
