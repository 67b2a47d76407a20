"""
    Adaptive composite Gauss-Legendre quadrature and truncated measure sums, for vector-valued integrands.

    Integrands return :mod:`numpy` arrays, so that a whole Gram matrix of inner products can be integrated
    with a single set of nodes.

    >>> import numpy as np
    >>> from askeyscheme.measures.quadrature import integrate
    >>> from askeyscheme.measures import QuadratureConfig
    >>> cfg = QuadratureConfig.default()
    >>> val = integrate(lambda x: np.array([x**2]), 0.0, 1.0, cfg)
    >>> abs(val[0]-1/3) < 1e-14
    True
"""

from __future__ import annotations

import heapq
import logging
import math
from functools import lru_cache
from typing import Any, Callable, Iterable, List, Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss

from .config import QuadratureConfig
from .err import QuadratureError

_logger = logging.getLogger(__name__)

VectorIntegrand = Callable[[float], Any]
"""
    Type alias for vector-valued integrands, returning a complex :mod:`numpy` array.
"""

@lru_cache(maxsize=None)
def gauss_legendre(order: int) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
    """
        Gauss-Legendre nodes and weights on :math:`[-1, 1]`.

        >>> nodes, weights = gauss_legendre(2)
        >>> round(sum(weights), 12)
        2.0
    """
    nodes, weights = leggauss(order)
    return tuple(float(x) for x in nodes), tuple(float(w) for w in weights)

def _panel(f: VectorIntegrand, a: float, b: float, order: int) -> Tuple[Any, float]:
    nodes, weights = gauss_legendre(order)
    mid, half = (a+b)/2, (b-a)/2
    total: Any = 0
    mass = 0.0
    for x, w in zip(nodes, weights):
        v = np.asarray(f(mid+half*x), dtype=np.complex128)
        total = total+w*v
        mass += w*float(np.max(np.abs(v)))
    return half*total, abs(half)*mass

def _estimate(f: VectorIntegrand, a: float, b: float, order: int) -> Tuple[Any, float, float]:
    whole, _ = _panel(f, a, b, order)
    m = (a+b)/2
    left, lmass = _panel(f, a, m, order)
    right, rmass = _panel(f, m, b, order)
    value = left+right
    err = float(np.max(np.abs(value-whole)))
    return value, err, lmass+rmass

def integrate(f: VectorIntegrand, a: float, b: float, cfg: QuadratureConfig, scale: float = 0.0) -> Any:
    """
        Globally adaptive composite Gauss-Legendre quadrature of a vector integrand on a bounded interval.

        Each panel is integrated with the ``cfg.panel_order``-point rule on the panel and on its two halves,
        the difference being the panel error estimate; the panel with the largest error is bisected until
        the total error is within :math:`\\max(\\text{rel\\_tol}\\cdot\\max(\\text{scale}, M), \\text{abs\\_tol})`,
        where :math:`M` is the integral of the integrand's absolute value.

        :param f: the integrand
        :type f: :obj:`VectorIntegrand`
        :param a: lower endpoint
        :type a: :obj:`float`
        :param b: upper endpoint
        :type b: :obj:`float`
        :param cfg: quadrature configuration
        :type cfg: :class:`QuadratureConfig`
        :param scale: an external magnitude against which the relative tolerance is measured
        :type scale: :obj:`float`, *optional*

        :raises QuadratureError: if ``cfg.max_panels`` panels do not reach the tolerance
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError("Endpoints must be finite, use integrate_unbounded instead.")
    if a == b:
        return np.asarray(f(a), dtype=np.complex128)*0
    order = cfg.panel_order
    value, err, mass = _estimate(f, a, b, order)
    heap: List[Tuple[float, float, float, Any, float]] = [(-err, a, b, value, mass)]
    total_err = err
    while True:
        total = sum(item[3] for item in heap)
        total_mass = sum(item[4] for item in heap)
        tol = max(cfg.rel_tol*max(scale, total_mass), cfg.abs_tol)
        total_err = sum(-item[0] for item in heap)
        if total_err <= tol:
            return total
        if len(heap) >= cfg.max_panels:
            raise QuadratureError(f"Adaptive quadrature on [{a}, {b}] did not converge with {len(heap)} panels "
                                  f"(error estimate {total_err:.3e}, tolerance {tol:.3e}).")
        _, lo, hi, _, _ = heapq.heappop(heap)
        mid = (lo+hi)/2
        if mid in (lo, hi):
            _logger.warning("Panel [%r, %r] cannot be bisected further, accepting error estimate %.3e.", lo, hi, total_err)
            return total
        for x0, x1 in ((lo, mid), (mid, hi)):
            v, e, m = _estimate(f, x0, x1, order)
            heapq.heappush(heap, (-e, x0, x1, v, m))

def _tail_breakpoints(start: float, direction: float) -> Iterable[Tuple[float, float]]:
    width = max(1.0, abs(start))
    lo = start
    while True:
        hi = lo+direction*width
        yield (lo, hi) if direction > 0 else (hi, lo)
        lo = hi
        width *= 2

def integrate_unbounded(f: VectorIntegrand, a: float, b: float, cfg: QuadratureConfig) -> Any:
    """
        Adaptive quadrature on a possibly unbounded interval. Unbounded directions are covered by
        panels of doubling width, stopping when ``cfg.tail_run`` consecutive panels each contribute
        less than ``cfg.tail_tol`` relative to the running absolute mass.

        >>> import numpy as np
        >>> from askeyscheme.measures import QuadratureConfig
        >>> val = integrate_unbounded(lambda x: np.array([np.exp(-x)]), 0.0, float("inf"), QuadratureConfig.default())
        >>> abs(val[0]-1) < 1e-12
        True

        :raises QuadratureError: if the tail does not become negligible within ``cfg.max_doublings`` panels
    """
    if math.isfinite(a) and math.isfinite(b):
        return integrate(f, a, b, cfg)
    if math.isinf(a) and math.isinf(b):
        core = (-1.0, 1.0)
        tails = [(1.0, 1.0), (-1.0, -1.0)]
    elif math.isinf(b):
        core = (a, a+1.0)
        tails = [(a+1.0, 1.0)]
    else:
        core = (b-1.0, b)
        tails = [(b-1.0, -1.0)]
    total = integrate(f, core[0], core[1], cfg)
    mass = float(np.max(np.abs(total)))
    for start, direction in tails:
        run = 0
        for count, (lo, hi) in enumerate(_tail_breakpoints(start, direction)):
            if count >= cfg.max_doublings:
                raise QuadratureError(f"Integrand tail beyond {start} did not become negligible.")
            part = integrate(f, lo, hi, cfg, scale=mass)
            total = total+part
            size = float(np.max(np.abs(part)))
            mass = max(mass, float(np.max(np.abs(total))))
            probe = float(np.max(np.abs(np.asarray(f(hi if direction > 0 else lo)))))*abs(hi-lo)
            if max(size, probe) <= cfg.tail_tol*mass:
                run += 1
                if run >= cfg.tail_run:
                    break
            else:
                run = 0
    return total

def sum_finite(term: Callable[[int], Any], count: int) -> Any:
    """
        The exact finite sum :math:`\\sum_{k=0}^{\\text{count}-1} \\text{term}(k)`.
    """
    total: Any = 0
    for k in range(count):
        total = total+np.asarray(term(k), dtype=np.complex128)
    return total

def sum_infinite(term: Callable[[int], Any], cfg: QuadratureConfig, start: int = 0, step: int = 1) -> Any:
    """
        The sum :math:`\\sum_{j \\geq 0} \\text{term}(\\text{start}+j\\cdot\\text{step})`, stopped when
        ``cfg.tail_run`` consecutive terms are below ``cfg.tail_tol`` times the partial sum.

        >>> import numpy as np
        >>> from askeyscheme.measures import QuadratureConfig
        >>> val = sum_infinite(lambda k: np.array([0.5**k]), QuadratureConfig.default())
        >>> abs(val[0]-2) < 1e-15
        True

        :raises QuadratureError: if ``cfg.max_terms`` terms are exceeded
    """
    total: Any = 0
    run = 0
    mass = 0.0
    for j in range(cfg.max_terms):
        v = np.asarray(term(start+j*step), dtype=np.complex128)
        total = total+v
        size = float(np.max(np.abs(v)))
        mass = max(mass, float(np.max(np.abs(total))))
        if mass == 0:
            continue
        if size <= cfg.tail_tol*mass:
            run += 1
            if run >= cfg.tail_run:
                return total
        else:
            run = 0
    if mass == 0:
        return total
    raise QuadratureError(f"Measure sum did not converge within {cfg.max_terms} terms.")

def sum_bilateral(term: Callable[[int], Any], cfg: QuadratureConfig) -> Any:
    """
        The bilateral sum :math:`\\sum_{k \\in \\mathbb{Z}} \\text{term}(k)`, expanded in both directions
        until both tails meet the stopping criterion of :func:`sum_infinite`.
    """
    return sum_infinite(term, cfg, 0, 1)+sum_infinite(term, cfg, -1, -1)
