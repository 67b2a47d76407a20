"""
    Family descriptors, one module per part of the scheme, plus shared helpers.
"""

from __future__ import annotations

import cmath
import math
from random import Random
from typing import Any, Callable, Iterable, List, Mapping, Optional, Sequence, Tuple

from ...qcore import INFINITY, Number, gamma, pochhammer, qpochhammer, qpochhammers
from ...hyper import SeriesSpec
from ...powerseries import PowerSeries, ps_pow, ps_series
from ..descriptor import Evaluation, FamilyDescriptor
from ..registry import register

P = Mapping[str, Any]

def add(family: FamilyDescriptor) -> FamilyDescriptor:
    """ Registers a catalog family. """
    register(family)
    return family

def poch(a: Number, k: int) -> complex:
    """ Shorthand for :func:`~askeyscheme.qcore.pochhammer`. """
    return pochhammer(a, k)

def pochs(params: Iterable[Number], k: int) -> complex:
    """ Product of Pochhammer symbols. """
    res = 1+0j
    for a in params:
        res *= pochhammer(a, k)
    return res

def qp(a: Number, q: float, k: Any) -> complex:
    """ Shorthand for :func:`~askeyscheme.qcore.qpochhammer`. """
    return qpochhammer(a, q, k)

def qps(params: Iterable[Number], q: float, k: Any) -> complex:
    """ Shorthand for :func:`~askeyscheme.qcore.qpochhammers`. """
    return qpochhammers(params, q, k)

def qinf(params: Iterable[Number], q: float) -> complex:
    """ Product of infinite q-shifted factorials. """
    return qpochhammers(params, q, INFINITY)

def F(num: Sequence[Number], den: Sequence[Number], z: Number, partial: Optional[int] = None) -> SeriesSpec:
    """ Shorthand for :meth:`SeriesSpec.F`. """
    return SeriesSpec.F(num, den, z, partial)

def phi(num: Sequence[Number], den: Sequence[Number], q: float, z: Number, partial: Optional[int] = None) -> SeriesSpec:
    """ Shorthand for :meth:`SeriesSpec.phi`. """
    return SeriesSpec.phi(num, den, q, z, partial)

def fact(n: int) -> float:
    """ The factorial :math:`n!` as a float. """
    return float(math.factorial(n))

def qpow(q: float, x: Number) -> complex:
    """ The power :math:`q^x`, exact for integer ``x``. """
    xc = complex(x)
    if xc.imag == 0 and xc.real == int(xc.real):
        return complex(q**int(xc.real))
    return cmath.exp(xc*math.log(q))

def binom2(n: int) -> int:
    """ The binomial :math:`\\binom{n}{2}`. """
    return n*(n-1)//2

def delta_x(x: complex, lo: float) -> bool:
    """ Whether a real point lies strictly above ``lo``. """
    return x.real > lo

def abs_gamma2(z: complex) -> float:
    """ The squared modulus :math:`|\\Gamma(z)|^2`. """
    return abs(gamma(z))**2

def trig_factor(theta: float, alpha: Number, q: float) -> complex:
    """
        The product :math:`h(\\cos\\theta, \\alpha) = (\\alpha e^{i\\theta}, \\alpha e^{-i\\theta}; q)_\\infty`.
    """
    e = cmath.exp(1j*theta)
    return qpochhammer(complex(alpha)*e, q, INFINITY)*qpochhammer(complex(alpha)/e, q, INFINITY)

def trig_weight_core(theta: float, q: float) -> complex:
    """
        The product :math:`h(\\cos\\theta, 1)h(\\cos\\theta, -1)h(\\cos\\theta, \\sqrt q)h(\\cos\\theta, -\\sqrt q)
        = (e^{2i\\theta}, e^{-2i\\theta}; q)_\\infty`.
    """
    e2 = cmath.exp(2j*theta)
    return qpochhammer(e2, q, INFINITY)*qpochhammer(1/e2, q, INFINITY)

def real_in(rng: Random, lo: float, hi: float) -> float:
    """ A random real in ``[lo, hi]``. """
    return rng.uniform(lo, hi)

def qbase(rng: Random, lo: float = 0.2, hi: float = 0.8) -> float:
    """ A random base. """
    return rng.uniform(lo, hi)

def grid(lo: float, hi: float, count: int = 8) -> Callable[[P], List[complex]]:
    """ A sample-points builder returning ``count`` equispaced interior points of ``[lo, hi]``. """
    def points(p: P) -> List[complex]:
        # pylint: disable = unused-argument
        step = (hi-lo)/(count+1)
        return [complex(lo+step*(k+1)) for k in range(count)]
    return points

def lattice_points(count: int = 8) -> Callable[[P], List[complex]]:
    """ A sample-points builder returning the integers ``0..min(N, count-1)``, or ``0..count-1`` without ``N``. """
    def points(p: P) -> List[complex]:
        stop = count if "N" not in p else min(count, p["N"]+1)
        return [complex(k) for k in range(stop)]
    return points

def no_violation(p: P) -> Optional[str]:
    """ Positivity check for families whose positivity domain is the whole parameter space. """
    # pylint: disable = unused-argument
    return None

def require(*conditions: Tuple[bool, str]) -> Optional[str]:
    """ Returns the message of the first failing condition, or :obj:`None`. """
    for ok, message in conditions:
        if not ok:
            return message
    return None

def positive_masses(masses: Iterable[Tuple[complex, complex]]) -> Optional[str]:
    """ Positivity check for discrete measures: every mass is real and positive. """
    for node, mass in masses:
        if abs(mass.imag) > 1e-12*abs(mass) or mass.real <= 0:
            return f"mass {mass!r} at node {node!r} is not positive"
    return None

def series_gf(spec: SeriesSpec, order: int) -> PowerSeries:
    """ The series ``spec`` in the variable ``argument * t``, as a power series in ``t``. """
    return ps_series(spec, order)

def log_qinf_plus(u: float, q: float) -> float:
    """
        The logarithm of :math:`(-e^u; q)_\\infty` for real :math:`u`, summed without overflow for large :math:`u`.
    """
    total = 0.0
    k = 0
    lq = math.log(q)
    while True:
        v = u+k*lq
        total += math.log1p(math.exp(v)) if v < 30 else v+math.log1p(math.exp(-v))
        if v < -40:
            return total
        k += 1

def qexp_small_series(c: Number, q: float, order: int) -> PowerSeries:
    """
        The power series of :math:`e_q(ct) = 1/(ct; q)_\\infty = \\sum_k (ct)^k/(q;q)_k`.
    """
    cc = complex(c)
    return PowerSeries([cc**k/qpochhammer(q, q, k) for k in range(order+1)])

def qexp_big_series(c: Number, q: float, order: int) -> PowerSeries:
    """
        The power series of :math:`E_q(ct) = (-ct; q)_\\infty = \\sum_k q^{\\binom{k}{2}}(ct)^k/(q;q)_k`.
    """
    cc = complex(c)
    return PowerSeries([q**binom2(k)*cc**k/qpochhammer(q, q, k) for k in range(order+1)])

def qproduct_series(c: Number, q: float, order: int) -> PowerSeries:
    """
        The power series of :math:`(ct; q)_\\infty = E_q(-ct)`.
    """
    return qexp_big_series(-complex(c), q, order)

def qreciprocal_series(c: Number, q: float, order: int) -> PowerSeries:
    """
        The power series of :math:`1/(ct; q)_\\infty = e_q(ct)`.
    """
    return qexp_small_series(c, q, order)

def variable(order: int) -> PowerSeries:
    """ The series ``t``. """
    return PowerSeries.variable(order)

def linear_power(c: Number, exponent: Number, order: int) -> PowerSeries:
    """ The power series of :math:`(1-ct)^\\gamma`. """
    base = PowerSeries.constant(1, order)-variable(order)*complex(c)
    return ps_pow(base, exponent)

def exp_series(c: Number, order: int) -> PowerSeries:
    """ The power series of :math:`e^{ct}`. """
    cc = complex(c)
    return PowerSeries([cc**k/fact(k) for k in range(order+1)])

def quadratic_argument(c: Number, order: int, sign: int = -1) -> PowerSeries:
    """ The power series of :math:`ct/(1-t)^2` (``sign=-1``) or :math:`ct/(1+t)^2` (``sign=1``). """
    t = variable(order)
    one = PowerSeries.constant(1, order)
    return t*complex(c)/((one+t*sign)*(one+t*sign))

def compose(spec: SeriesSpec, w: PowerSeries) -> PowerSeries:
    """
        The series ``spec`` with its argument :math:`z` replaced by :math:`zw(t)`, for a power series :math:`w(t)`
        with vanishing constant term. Partial sums keep their truncation.
    """
    order = w.order
    last = order if spec.partial is None else min(order, spec.partial)
    terms = spec.with_partial(None).terms(last)
    res = PowerSeries.constant(0, order)
    for c in reversed(terms):
        res = res*w+c
    return res

def conjugate_closed(values: Sequence[complex]) -> bool:
    """ Whether the non-real values among ``values`` come in complex conjugate pairs. """
    rest = list(values)
    while rest:
        v = rest.pop()
        if abs(v.imag) <= 1e-12*max(1.0, abs(v)):
            continue
        match = [k for k, w in enumerate(rest) if abs(w-v.conjugate()) <= 1e-12*max(1.0, abs(v))]
        if not match:
            return False
        rest.pop(match[0])
    return True

def ode_terms(coeff2: Callable[[P, complex], complex], coeff1: Callable[[P, complex], complex],
              scale: float = 1.0) -> Callable[[P, int, complex, Evaluation, complex], Sequence[complex]]:
    """
        Term builder for second order equations :math:`a(x)y'' + b(x)y' + s\\lambda_n y = 0`.
    """
    def terms(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
        # pylint: disable = unused-argument
        return (coeff2(p, x)*y.d(x, 2), coeff1(p, x)*y.d(x, 1), scale*eig*y(x))
    return terms
