"""
    The hypergeometric families at the top of the scheme: Wilson, Racah, continuous dual Hahn,
    continuous Hahn, Hahn, dual Hahn and Meixner-Pollaczek.
"""

from __future__ import annotations

import cmath
import math
from random import Random
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ...qcore import DomainError, as_nonnegative_integer, gamma, log_abs_gamma
from ...measures import ContinuousMeasure, DiscreteMeasure, MeasureSpec, MixedMeasure
from ...powerseries import PowerSeries
from ..descriptor import (EquationSpec, Evaluation, FamilyDescriptor, GFSpec, Recurrence, VariableMap,
                          params, three_point)
from . import (P, F, add, compose, conjugate_closed, exp_series, fact, grid, lattice_points, linear_power, poch,
               pochs, positive_masses, quadratic_argument, real_in, require, series_gf)

_TWO_PI = 2*math.pi

def _s(p: P) -> complex:
    return p["a"]+p["b"]+p["c"]+p["d"]

def _gamma_product(zs: Sequence[complex]) -> complex:
    res = 1+0j
    for z in zs:
        res *= gamma(z)
    return res

def _abs2_gamma_ratio(num: Sequence[complex], den: Sequence[complex]) -> float:
    # |prod Gamma(num) / prod Gamma(den)|^2, in log space
    log = sum(log_abs_gamma(z) for z in num)-sum(log_abs_gamma(z) for z in den)
    return math.exp(2*log)

def _quad_gf(num: Sequence[complex], den: Sequence[complex], exponent: complex, order: int,
             partial: Optional[int] = None) -> PowerSeries:
    # (1-t)^exponent * F(num; den; -4t/(1-t)^2)
    return linear_power(1, exponent, order)*compose(F(num, den, 1, partial), quadratic_argument(-4, order))

# Wilson

def _wilson_series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    return pochs((a+b, a+c, a+d), n), F([-n, n+_s(p)-1, a+1j*x, a-1j*x], [a+b, a+c, a+d], 1)

def _wilson_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    s = _s(p)
    if n == 0:
        A = (a+b)*(a+c)*(a+d)/s
        C = 0j
    else:
        A = (n+s-1)*(n+a+b)*(n+a+c)*(n+a+d)/((2*n+s-1)*(2*n+s))
        C = n*(n+b+c-1)*(n+b+d-1)*(n+c+d-1)/((2*n+s-2)*(2*n+s-1))
    return A, -(A+C), C

def _wilson_weight(p: P) -> Any:
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    def weight(x: float) -> float:
        if x == 0:
            return 0.0
        ix = 1j*x
        return _abs2_gamma_ratio((a+ix, b+ix, c+ix, d+ix), (2*ix,))/_TWO_PI
    return weight

def _wilson_points(p: P) -> List[Tuple[complex, complex]]:
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    if a.real >= 0:
        return []
    const = _gamma_product((a+b, a+c, a+d, b-a, c-a, d-a))/gamma(-2*a)
    points = []
    k = 0
    while a.real+k < 0:
        mass = const*pochs((2*a, a+1, a+b, a+c, a+d), k)/(fact(k)*pochs((a, a-b+1, a-c+1, a-d+1), k))
        points.append((1j*(a+k), mass))
        k += 1
    return points

def _wilson_measure(p: P) -> MeasureSpec:
    continuous = ContinuousMeasure(_wilson_weight(p), 0.0, math.inf)
    points = _wilson_points(p)
    return MixedMeasure(continuous, points) if points else continuous

def _wilson_norm(p: P, n: int) -> complex:
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    s = _s(p)
    return poch(n+s-1, n)*fact(n)*_gamma_product((n+a+b, n+a+c, n+a+d, n+b+c, n+b+d, n+c+d))/gamma(2*n+s)

def _positive_or_conjugate(values: Sequence[complex], names: str) -> Optional[str]:
    return require((conjugate_closed(values), f"non-real parameters among {names} must come in conjugate pairs"),
                   (all(v.real > 0 for v in values), f"parameters {names} must have positive real parts"))

def _wilson_positivity(p: P) -> Optional[str]:
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    if a.imag == 0 and a.real < 0:
        return _positive_or_conjugate([a+b, a+c, a+d], "a+b, a+c, a+d") or _positive_or_conjugate([b, c, d], "b, c, d")
    return _positive_or_conjugate([a, b, c, d], "a, b, c, d")

def _wilson_sampler(rng: Random) -> Dict[str, Any]:
    if rng.random() < 0.5:
        return {k: real_in(rng, 0.3, 1.8) for k in "abcd"}
    u, v = real_in(rng, 0.3, 1.5), real_in(rng, 0.1, 1.0)
    return {"a": real_in(rng, 0.3, 1.8), "b": real_in(rng, 0.3, 1.8), "c": complex(u, v), "d": complex(u, -v)}

def _wilson_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    ix = 1j*x
    B = (a-ix)*(b-ix)*(c-ix)*(d-ix)/(2*ix*(2*ix-1))
    D = (a+ix)*(b+ix)*(c+ix)*(d+ix)/(2*ix*(2*ix+1))
    return three_point(eig, 1, B, D, y(x+1j), y(x), y(x-1j))

def _wilson_pair_gf(first: str, second: str) -> GFSpec:
    rest = [k for k in "abcd" if k not in (first, second)]
    def lhs(p: P, x: complex, order: int) -> PowerSeries:
        a, b = p[first], p[second]
        c, d = p[rest[0]], p[rest[1]]
        left = series_gf(F([a+1j*x, b+1j*x], [a+b], 1), order)
        right = series_gf(F([c-1j*x, d-1j*x], [c+d], 1), order)
        return left*right
    def coefficient(p: P, n: int) -> complex:
        return 1/(poch(p[first]+p[second], n)*poch(p[rest[0]]+p[rest[1]], n)*fact(n))
    return GFSpec(f"wilson_gf_{first}{second}", "wilson", lhs, coefficient)

def _wilson_quadratic_gf(p: P, x: complex, order: int) -> PowerSeries:
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    s = _s(p)
    return _quad_gf([(s-1)/2, s/2, a+1j*x, a-1j*x], [a+b, a+c, a+d], 1-s, order)

add(FamilyDescriptor(
    "wilson", "Wilson", "classical",
    schema=params("a", "b", "c", "d", complex_names="abcd"),
    variable=VariableMap.quadratic(),
    series=_wilson_series,
    recurrence=Recurrence(lambda p: (-1, -p["a"]**2), _wilson_coefficients),
    normalizer=lambda p, n: pochs((p["a"]+p["b"], p["a"]+p["c"], p["a"]+p["d"]), n),
    measure=_wilson_measure,
    norm=_wilson_norm,
    positivity=_wilson_positivity,
    sampler=_wilson_sampler,
    defaults={"a": 0.5, "b": 0.7, "c": 1.1, "d": 1.3},
    points=grid(0.2, 2.5, 6),
    equations=(
        EquationSpec("wilson_difference", "IDIFFERENCE", _wilson_equation,
                     lambda p, n: n*(n+_s(p)-1), grid(0.2, 2.5, 6)),
    ),
    generating_functions=(
        _wilson_pair_gf("a", "b"), _wilson_pair_gf("a", "c"), _wilson_pair_gf("a", "d"),
        GFSpec("wilson_gf_quadratic", "wilson", _wilson_quadratic_gf,
               lambda p, n: poch(_s(p)-1, n)/(pochs((p["a"]+p["b"], p["a"]+p["c"], p["a"]+p["d"]), n)*fact(n))),
    ),
    norm_formula="(n+a+b+c+d-1)_n n! Γ(n+a+b)Γ(n+a+c)Γ(n+a+d)Γ(n+b+c)Γ(n+b+d)Γ(n+c+d)/Γ(2n+a+b+c+d)",
))

# Racah

def _racah_condition(p: P) -> Tuple[int, int]:
    values = (p["alpha"]+1, p["beta"]+p["delta"]+1, p["gamma"]+1)
    found = [(N, k) for k, v in enumerate(values) if (N := as_nonnegative_integer(-v, 1e-9)) is not None]
    if not found:
        raise DomainError("Racah parameters need alpha+1 = -N, beta+delta+1 = -N or gamma+1 = -N "
                          "for a non-negative integer N.")
    return min(found)

def _racah_bound(p: P) -> int:
    return _racah_condition(p)[0]

def _racah_series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
    al, be, ga, de = p["alpha"], p["beta"], p["gamma"], p["delta"]
    return 1+0j, F([-n, n+al+be+1, -x, x+ga+de+1], [al+1, be+de+1, ga+1], 1, _racah_bound(p))

def _racah_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    al, be, ga, de = p["alpha"], p["beta"], p["gamma"], p["delta"]
    A = (n+al+be+1)*(n+al+1)*(n+be+de+1)*(n+ga+1)/((2*n+al+be+1)*(2*n+al+be+2))
    C = 0j if n == 0 else n*(n+be)*(n+al+be-ga)*(n+al-de)/((2*n+al+be)*(2*n+al+be+1))
    return A, -(A+C), C

def _racah_mass(p: P) -> Any:
    al, be, ga, de = p["alpha"], p["beta"], p["gamma"], p["delta"]
    def mass(x: int) -> complex:
        num = pochs((ga+de+1, (ga+de+3)/2, al+1, be+de+1, ga+1), x)
        den = fact(x)*pochs(((ga+de+1)/2, ga+de-al+1, ga-be+1, de+1), x)
        return num/den
    return mass

def _racah_norm(p: P, n: int) -> complex:
    al, be, ga, de = p["alpha"], p["beta"], p["gamma"], p["delta"]
    N, which = _racah_condition(p)
    if which == 0:
        M = pochs((ga+de+2, -be), N)/pochs((ga-be+1, de+1), N)
    elif which == 1:
        M = pochs((ga+de+2, de-al), N)/pochs((ga+de-al+1, de+1), N)
    else:
        M = pochs((-de, al+be+2), N)/pochs((al-de+1, be+1), N)
    num = pochs((be+1, al-de+1, al+be-ga+1), n)*poch(n+al+be+1, n)*fact(n)
    den = poch(al+be+2, 2*n)*pochs((al+1, be+de+1, ga+1), n)
    return M*num/den

def _racah_positivity(p: P) -> Optional[str]:
    try:
        N = _racah_bound(p)
    except DomainError as e:
        return str(e)
    masses = [(complex(x), _racah_mass(p)(x)) for x in range(N+1)]
    return positive_masses(masses)

def _racah_sampler(rng: Random) -> Dict[str, Any]:
    N = rng.randint(2, 5)
    ga, de = real_in(rng, 0.1, 1.9), real_in(rng, 0.1, 1.9)
    return {"alpha": -N-1.0, "beta": ga+N+real_in(rng, 0.5, 2.0), "gamma": ga, "delta": de}

def _racah_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    al, be, ga, de = p["alpha"], p["beta"], p["gamma"], p["delta"]
    B = (x+al+1)*(x+be+de+1)*(x+ga+1)*(x+ga+de+1)/((2*x+ga+de+1)*(2*x+ga+de+2))
    D = x*(x+de)*(x-be+ga)*(x-al+ga+de)/((2*x+ga+de)*(2*x+ga+de+1))
    return three_point(eig, 1, B, D, y(x+1), y(x), y(x-1))

def _racah_pair_gf(name: str, first: Tuple[str, ...], second: Tuple[str, ...], coefficient: Any) -> GFSpec:
    # first/second: (numerator expressions, denominator expression) as lambdas of (p, x)
    def lhs(p: P, x: complex, order: int) -> PowerSeries:
        N = _racah_bound(p)
        num1, den1 = first[0](p, x), first[1](p)
        num2, den2 = second[0](p, x), second[1](p)
        return series_gf(F(num1, [den1], 1, N), order)*series_gf(F(num2, [den2], 1), order)
    return GFSpec(name, "racah", lhs, coefficient, "TRUNCATED")

def _racah_quadratic_gf(p: P, x: complex, order: int) -> PowerSeries:
    al, be, ga, de = p["alpha"], p["beta"], p["gamma"], p["delta"]
    return _quad_gf([(al+be+1)/2, (al+be+2)/2, -x, x+ga+de+1], [al+1, be+de+1, ga+1], -al-be-1, order,
                    _racah_bound(p))

add(FamilyDescriptor(
    "racah", "Racah", "classical",
    schema=params("alpha", "beta", "gamma", "delta"),
    variable=VariableMap.lattice(lambda p: p["gamma"]+p["delta"]+1),
    series=_racah_series,
    recurrence=Recurrence(lambda p: (1, 0), _racah_coefficients),
    normalizer=lambda p, n: 1,
    measure=lambda p: DiscreteMeasure(lambda x: x, _racah_mass(p), _racah_bound(p)+1),
    norm=_racah_norm,
    positivity=_racah_positivity,
    sampler=_racah_sampler,
    defaults={"alpha": -5.0, "beta": 5.7, "gamma": 0.5, "delta": 0.7},
    points=lambda p: [complex(x) for x in range(_racah_bound(p)+1)],
    degree_bound=_racah_bound,
    equations=(
        EquationSpec("racah_difference", "DIFFERENCE", _racah_equation,
                     lambda p, n: n*(n+p["alpha"]+p["beta"]+1), grid(0.1, 3.1, 6)),
    ),
    generating_functions=(
        _racah_pair_gf("racah_gf_alpha",
                       (lambda p, x: [x+p["alpha"]+1, x+p["gamma"]+p["delta"]+1], lambda p: p["alpha"]+1),
                       (lambda p, x: [-x+p["beta"]-p["gamma"], -x-p["delta"]], lambda p: p["beta"]+1),
                       lambda p, n: pochs((p["beta"]+p["delta"]+1, p["gamma"]+1), n)/(poch(p["beta"]+1, n)*fact(n))),
        _racah_pair_gf("racah_gf_beta_delta",
                       (lambda p, x: [x+p["beta"]+p["delta"]+1, x+p["gamma"]+p["delta"]+1],
                        lambda p: p["beta"]+p["delta"]+1),
                       (lambda p, x: [-x+p["alpha"]-p["gamma"]-p["delta"], -x-p["delta"]],
                        lambda p: p["alpha"]-p["delta"]+1),
                       lambda p, n: pochs((p["alpha"]+1, p["gamma"]+1), n)/(poch(p["alpha"]-p["delta"]+1, n)*fact(n))),
        _racah_pair_gf("racah_gf_gamma",
                       (lambda p, x: [x+p["gamma"]+1, x+p["gamma"]+p["delta"]+1], lambda p: p["gamma"]+1),
                       (lambda p, x: [-x+p["alpha"]-p["gamma"]-p["delta"], -x+p["beta"]-p["gamma"]],
                        lambda p: p["alpha"]+p["beta"]-p["gamma"]+1),
                       lambda p, n: pochs((p["alpha"]+1, p["beta"]+p["delta"]+1), n)
                       /(poch(p["alpha"]+p["beta"]-p["gamma"]+1, n)*fact(n))),
        GFSpec("racah_gf_quadratic", "racah", _racah_quadratic_gf,
               lambda p, n: poch(p["alpha"]+p["beta"]+1, n)/fact(n), "TRUNCATED"),
    ),
    norm_formula="M (n+α+β+1)_n (β+1)_n (α-δ+1)_n (α+β-γ+1)_n n!/((α+β+2)_{2n} (α+1)_n (β+δ+1)_n (γ+1)_n)",
))

# Continuous dual Hahn

def _cdh_series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
    a, b, c = p["a"], p["b"], p["c"]
    return pochs((a+b, a+c), n), F([-n, a+1j*x, a-1j*x], [a+b, a+c], 1)

def _cdh_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    a, b, c = p["a"], p["b"], p["c"]
    A = (n+a+b)*(n+a+c)
    C = n*(n+b+c-1)
    return A, -(A+C), C

def _cdh_measure(p: P) -> MeasureSpec:
    a, b, c = p["a"], p["b"], p["c"]
    def weight(x: float) -> float:
        if x == 0:
            return 0.0
        ix = 1j*x
        return _abs2_gamma_ratio((a+ix, b+ix, c+ix), (2*ix,))/_TWO_PI
    continuous = ContinuousMeasure(weight, 0.0, math.inf)
    if a.real >= 0:
        return continuous
    const = _gamma_product((a+b, a+c, b-a, c-a))/gamma(-2*a)
    points = []
    k = 0
    while a.real+k < 0:
        mass = (-1)**k*const*pochs((2*a, a+1, a+b, a+c), k)/(fact(k)*pochs((a, a-b+1, a-c+1), k))
        points.append((1j*(a+k), mass))
        k += 1
    return MixedMeasure(continuous, points)

def _cdh_positivity(p: P) -> Optional[str]:
    a, b, c = p["a"], p["b"], p["c"]
    if a.imag == 0 and a.real < 0:
        return _positive_or_conjugate([a+b, a+c], "a+b, a+c") or _positive_or_conjugate([b, c], "b, c")
    return _positive_or_conjugate([a, b, c], "a, b, c")

def _cdh_sampler(rng: Random) -> Dict[str, Any]:
    if rng.random() < 0.5:
        return {k: real_in(rng, 0.3, 1.8) for k in "abc"}
    u, v = real_in(rng, 0.3, 1.5), real_in(rng, 0.1, 1.0)
    return {"a": real_in(rng, 0.3, 1.8), "b": complex(u, v), "c": complex(u, -v)}

def _cdh_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    a, b, c = p["a"], p["b"], p["c"]
    ix = 1j*x
    B = (a-ix)*(b-ix)*(c-ix)/(2*ix*(2*ix-1))
    D = (a+ix)*(b+ix)*(c+ix)/(2*ix*(2*ix+1))
    return three_point(eig, 1, B, D, y(x+1j), y(x), y(x-1j))

def _cdh_power_gf(first: str, second: str) -> GFSpec:
    third = next(k for k in "abc" if k not in (first, second))
    def lhs(p: P, x: complex, order: int) -> PowerSeries:
        a, b, c = p[first], p[second], p[third]
        return linear_power(1, -c+1j*x, order)*series_gf(F([a+1j*x, b+1j*x], [a+b], 1), order)
    return GFSpec(f"continuous_dual_hahn_gf_{first}{second}", "continuous-dual-hahn", lhs,
                  lambda p, n: 1/(poch(p[first]+p[second], n)*fact(n)))

def _cdh_exp_gf(p: P, x: complex, order: int) -> PowerSeries:
    a, b, c = p["a"], p["b"], p["c"]
    return exp_series(1, order)*series_gf(F([a+1j*x, a-1j*x], [a+b, a+c], -1), order)

add(FamilyDescriptor(
    "continuous-dual-hahn", "Continuous dual Hahn", "classical",
    schema=params("a", "b", "c", complex_names="abc"),
    variable=VariableMap.quadratic(),
    series=_cdh_series,
    recurrence=Recurrence(lambda p: (-1, -p["a"]**2), _cdh_coefficients),
    normalizer=lambda p, n: pochs((p["a"]+p["b"], p["a"]+p["c"]), n),
    measure=_cdh_measure,
    norm=lambda p, n: _gamma_product((n+p["a"]+p["b"], n+p["a"]+p["c"], n+p["b"]+p["c"]))*fact(n),
    positivity=_cdh_positivity,
    sampler=_cdh_sampler,
    defaults={"a": 0.6, "b": 0.9, "c": 1.4},
    points=grid(0.2, 2.5, 6),
    equations=(
        EquationSpec("continuous_dual_hahn_difference", "IDIFFERENCE", _cdh_equation,
                     lambda p, n: n, grid(0.2, 2.5, 6)),
    ),
    generating_functions=(
        _cdh_power_gf("a", "b"), _cdh_power_gf("a", "c"), _cdh_power_gf("b", "c"),
        GFSpec("continuous_dual_hahn_gf_exp", "continuous-dual-hahn", _cdh_exp_gf,
               lambda p, n: 1/(pochs((p["a"]+p["b"], p["a"]+p["c"]), n)*fact(n))),
    ),
    norm_formula="Γ(n+a+b)Γ(n+a+c)Γ(n+b+c) n!",
))

# Continuous Hahn

def _ch_kappa(p: P, n: int) -> complex:
    a, c, d = p["a"], p["c"], p["d"]
    return 1j**n*pochs((a+c, a+d), n)/fact(n)

def _ch_series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
    a, c, d = p["a"], p["c"], p["d"]
    return _ch_kappa(p, n), F([-n, n+_s(p)-1, a+1j*x], [a+c, a+d], 1)

def _ch_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    s = _s(p)
    if n == 0:
        A = -(a+c)*(a+d)/s
        C = 0j
    else:
        A = -(n+s-1)*(n+a+c)*(n+a+d)/((2*n+s-1)*(2*n+s))
        C = n*(n+b+c-1)*(n+b+d-1)/((2*n+s-2)*(2*n+s-1))
    return A, -(A+C), C

def _ch_measure(p: P) -> MeasureSpec:
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    conjugate = _close(c, a.conjugate()) and _close(d, b.conjugate())
    def weight(x: float) -> complex:
        ix = 1j*x
        if conjugate:
            return _abs2_gamma_ratio((a+ix, b+ix), ())/_TWO_PI
        return _gamma_product((a+ix, b+ix, c-ix, d-ix))/_TWO_PI
    return ContinuousMeasure(weight, -math.inf, math.inf)

def _ch_norm(p: P, n: int) -> complex:
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    s = _s(p)
    return _gamma_product((n+a+c, n+a+d, n+b+c, n+b+d))/((2*n+s-1)*gamma(n+s-1)*fact(n))

def _close(u: complex, v: complex) -> bool:
    return abs(u-v) <= 1e-12*max(1.0, abs(u))

def _ch_positivity(p: P) -> Optional[str]:
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    return require((_close(c, a.conjugate()) and _close(d, b.conjugate()), "need c = conj(a) and d = conj(b)"),
                   (a.real > 0 and b.real > 0, "a and b must have positive real parts"))

def _ch_sampler(rng: Random) -> Dict[str, Any]:
    a = complex(real_in(rng, 0.3, 1.5), real_in(rng, -0.8, 0.8))
    b = complex(real_in(rng, 0.3, 1.5), real_in(rng, -0.8, 0.8))
    return {"a": a, "b": b, "c": a.conjugate(), "d": b.conjugate()}

def _ch_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    ix = 1j*x
    return three_point(eig, 1, (c-ix)*(d-ix), (a+ix)*(b+ix), y(x+1j), y(x), y(x-1j))

def _ch_formal_gf(p: P, x: complex, order: int) -> PowerSeries:
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    left = series_gf(F([a+1j*x, b+1j*x], [], -1j), order)
    right = series_gf(F([c-1j*x, d-1j*x], [], 1j), order)
    return (left*right).as_formal()

def _ch_confluent_gf(left_den: str, right_num: str, right_den: str) -> GFSpec:
    def lhs(p: P, x: complex, order: int) -> PowerSeries:
        a = p["a"]
        left = series_gf(F([a+1j*x], [a+p[left_den]], -1j), order)
        right = series_gf(F([p[right_num]-1j*x], [p["b"]+p[right_den]], 1j), order)
        return left*right
    def coefficient(p: P, n: int) -> complex:
        return 1/pochs((p["a"]+p[left_den], p["b"]+p[right_den]), n)
    return GFSpec(f"continuous_hahn_gf_{left_den}{right_num}", "continuous-hahn", lhs, coefficient)

def _ch_quadratic_gf(p: P, x: complex, order: int) -> PowerSeries:
    a, c, d = p["a"], p["c"], p["d"]
    s = _s(p)
    return _quad_gf([(s-1)/2, s/2, a+1j*x], [a+c, a+d], 1-s, order)

add(FamilyDescriptor(
    "continuous-hahn", "Continuous Hahn", "classical",
    schema=params("a", "b", "c", "d", complex_names="abcd"),
    variable=VariableMap.direct(),
    series=_ch_series,
    recurrence=Recurrence(lambda p: (1j, p["a"]), _ch_coefficients),
    normalizer=_ch_kappa,
    measure=_ch_measure,
    norm=_ch_norm,
    positivity=_ch_positivity,
    sampler=_ch_sampler,
    defaults={"a": 0.6+0.2j, "b": 1.1-0.4j, "c": 0.6-0.2j, "d": 1.1+0.4j},
    points=grid(-2.0, 2.0, 6),
    equations=(
        EquationSpec("continuous_hahn_difference", "IDIFFERENCE", _ch_equation,
                     lambda p, n: n*(n+_s(p)-1), grid(-2.0, 2.0, 6)),
    ),
    generating_functions=(
        GFSpec("continuous_hahn_gf_formal", "continuous-hahn", _ch_formal_gf, lambda p, n: 1, "FORMAL"),
        _ch_confluent_gf("c", "d", "d"),
        _ch_confluent_gf("d", "c", "c"),
        GFSpec("continuous_hahn_gf_quadratic", "continuous-hahn", _ch_quadratic_gf,
               lambda p, n: poch(_s(p)-1, n)/(pochs((p["a"]+p["c"], p["a"]+p["d"]), n)*1j**n)),
    ),
    norm_formula="Γ(n+a+c)Γ(n+a+d)Γ(n+b+c)Γ(n+b+d)/((2n+a+b+c+d-1)Γ(n+a+b+c+d-1) n!)",
))

# Hahn

def _hahn_series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
    al, be, N = p["alpha"], p["beta"], p["N"]
    return 1+0j, F([-n, n+al+be+1, -x], [al+1, -N], 1, N)

def _hahn_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    al, be, N = p["alpha"], p["beta"], p["N"]
    if n == 0:
        A = (al+1)*N/(al+be+2)
        C = 0j
    else:
        A = (n+al+be+1)*(n+al+1)*(N-n)/((2*n+al+be+1)*(2*n+al+be+2))
        C = n*(n+be)*(n+al+be+N+1)/((2*n+al+be)*(2*n+al+be+1))
    return A, -(A+C), C

def _hahn_mass(p: P) -> Any:
    al, be, N = p["alpha"], p["beta"], p["N"]
    def mass(x: int) -> complex:
        return poch(al+1, x)/fact(x)*poch(be+1, N-x)/fact(N-x)
    return mass

def _hahn_norm(p: P, n: int) -> complex:
    al, be, N = p["alpha"], p["beta"], p["N"]
    num = (-1)**n*fact(n)*poch(be+1, n)*poch(n+al+be+1, N+1)
    return num/(fact(N)*(2*n+al+be+1)*pochs((-N,), n)*poch(al+1, n))

def _hahn_positivity(p: P) -> Optional[str]:
    al, be, N = p["alpha"], p["beta"], p["N"]
    if al > -1 and be > -1:
        return None
    if al < -N and be < -N:
        return None
    return "need alpha, beta > -1 or alpha, beta < -N"

def _hahn_sampler(rng: Random) -> Dict[str, Any]:
    return {"alpha": real_in(rng, -0.5, 2.5), "beta": real_in(rng, -0.5, 2.5), "N": rng.randint(3, 6)}

def _hahn_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    al, be, N = p["alpha"], p["beta"], p["N"]
    return three_point(eig, 1, (x-N)*(x+al+1), x*(x-be-N-1), y(x+1), y(x), y(x-1))

def _hahn_gf_first(p: P, x: complex, order: int) -> PowerSeries:
    al, be, N = p["alpha"], p["beta"], p["N"]
    return series_gf(F([x-N], [be+1], 1), order)*series_gf(F([-x], [al+1], -1), order)

def _hahn_gf_second(p: P, x: complex, order: int) -> PowerSeries:
    al, be, N = p["alpha"], p["beta"], p["N"]
    return series_gf(F([x-N], [-N], 1, N), order)*series_gf(F([N-x+be+1], [al+be+N+2], -1), order)

def _hahn_gf_quadratic(p: P, x: complex, order: int) -> PowerSeries:
    al, be, N = p["alpha"], p["beta"], p["N"]
    return _quad_gf([(al+be+1)/2, (al+be+2)/2, -x], [al+1, -N], -al-be-1, order, N)

add(FamilyDescriptor(
    "hahn", "Hahn", "classical",
    schema=params("alpha", "beta", N=True),
    variable=VariableMap.direct(),
    series=_hahn_series,
    recurrence=Recurrence(lambda p: (-1, 0), _hahn_coefficients),
    normalizer=lambda p, n: 1,
    measure=lambda p: DiscreteMeasure(lambda x: x, _hahn_mass(p), p["N"]+1),
    norm=_hahn_norm,
    positivity=_hahn_positivity,
    sampler=_hahn_sampler,
    defaults={"alpha": 0.5, "beta": 1.5, "N": 5},
    points=lattice_points(),
    degree_bound=lambda p: p["N"],
    equations=(
        EquationSpec("hahn_difference", "DIFFERENCE", _hahn_equation,
                     lambda p, n: n*(n+p["alpha"]+p["beta"]+1), grid(0.1, 4.1, 6)),
    ),
    generating_functions=(
        GFSpec("hahn_gf_confluent", "hahn", _hahn_gf_first,
               lambda p, n: poch(-p["N"], n)/(poch(p["beta"]+1, n)*fact(n)), "TRUNCATED"),
        GFSpec("hahn_gf_confluent_dual", "hahn", _hahn_gf_second,
               lambda p, n: poch(p["alpha"]+1, n)/(poch(p["alpha"]+p["beta"]+p["N"]+2, n)*fact(n)), "TRUNCATED"),
        GFSpec("hahn_gf_quadratic", "hahn", _hahn_gf_quadratic,
               lambda p, n: poch(p["alpha"]+p["beta"]+1, n)/fact(n), "TRUNCATED"),
    ),
    norm_formula="(-1)^n n! (β+1)_n (n+α+β+1)_{N+1}/(N! (2n+α+β+1) (-N)_n (α+1)_n)",
))

# Dual Hahn

def _dual_hahn_series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
    ga, de, N = p["gamma"], p["delta"], p["N"]
    return 1+0j, F([-n, -x, x+ga+de+1], [ga+1, -N], 1, N)

def _dual_hahn_mass(p: P) -> Any:
    ga, de, N = p["gamma"], p["delta"], p["N"]
    def mass(x: int) -> complex:
        num = fact(N)*poch(-N, x)*poch(ga+1, x)*(2*x+ga+de+1)
        den = (-1)**x*fact(x)*poch(de+1, x)*poch(x+ga+de+1, N+1)
        return num/den
    return mass

def _dual_hahn_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    ga, de, N = p["gamma"], p["delta"], p["N"]
    B = (x+ga+de+1)*(x+ga+1)*(N-x)/((2*x+ga+de+1)*(2*x+ga+de+2))
    D = x*(x+de)*(x+ga+de+N+1)/((2*x+ga+de)*(2*x+ga+de+1))
    return three_point(eig, -1, B, D, y(x+1), y(x), y(x-1))

def _dual_hahn_gf(name: str, build: Any, coefficient: Any) -> GFSpec:
    return GFSpec(name, "dual-hahn", build, coefficient, "TRUNCATED")

def _dh_gf_first(p: P, x: complex, order: int) -> PowerSeries:
    ga, de, N = p["gamma"], p["delta"], p["N"]
    return linear_power(1, x+de, order)*series_gf(F([x-N, x+ga+de+1], [-N], 1, N), order)

def _dh_gf_second(p: P, x: complex, order: int) -> PowerSeries:
    ga, de, N = p["gamma"], p["delta"], p["N"]
    return linear_power(1, N-x, order)*series_gf(F([-x, -x-de], [ga+1], 1), order)

def _dh_gf_third(p: P, x: complex, order: int) -> PowerSeries:
    ga, de, N = p["gamma"], p["delta"], p["N"]
    return linear_power(1, x, order)*series_gf(F([x-N, x+ga+1], [-de-N], 1), order)

def _dh_gf_exp(p: P, x: complex, order: int) -> PowerSeries:
    ga, de, N = p["gamma"], p["delta"], p["N"]
    return exp_series(1, order)*series_gf(F([-x, x+ga+de+1], [ga+1, -N], -1, N), order)

add(FamilyDescriptor(
    "dual-hahn", "Dual Hahn", "classical",
    schema=params("gamma", "delta", N=True),
    variable=VariableMap.lattice(lambda p: p["gamma"]+p["delta"]+1),
    series=_dual_hahn_series,
    recurrence=Recurrence(lambda p: (1, 0),
                          lambda p, n: ((n-p["N"])*(n+p["gamma"]+1),
                                        -((n-p["N"])*(n+p["gamma"]+1)+n*(n-p["delta"]-p["N"]-1)),
                                        n*(n-p["delta"]-p["N"]-1))),
    normalizer=lambda p, n: 1,
    measure=lambda p: DiscreteMeasure(lambda x: x, _dual_hahn_mass(p), p["N"]+1),
    norm=lambda p, n: fact(n)*fact(p["N"]-n)/(poch(p["gamma"]+1, n)*poch(p["delta"]+1, p["N"]-n)),
    positivity=lambda p: _hahn_positivity({"alpha": p["gamma"], "beta": p["delta"], "N": p["N"]}),
    sampler=lambda rng: {"gamma": real_in(rng, -0.5, 2.5), "delta": real_in(rng, -0.5, 2.5), "N": rng.randint(3, 6)},
    defaults={"gamma": 0.5, "delta": 1.5, "N": 5},
    points=lattice_points(),
    degree_bound=lambda p: p["N"],
    equations=(
        EquationSpec("dual_hahn_difference", "DIFFERENCE", _dual_hahn_equation, lambda p, n: n, grid(0.1, 4.1, 6)),
    ),
    generating_functions=(
        _dual_hahn_gf("dual_hahn_gf_first", _dh_gf_first, lambda p, n: poch(p["gamma"]+1, n)/fact(n)),
        _dual_hahn_gf("dual_hahn_gf_second", _dh_gf_second, lambda p, n: poch(-p["N"], n)/fact(n)),
        _dual_hahn_gf("dual_hahn_gf_third", _dh_gf_third,
                      lambda p, n: pochs((-p["N"], p["gamma"]+1), n)/(poch(-p["delta"]-p["N"], n)*fact(n))),
        _dual_hahn_gf("dual_hahn_gf_exp", _dh_gf_exp, lambda p, n: 1/fact(n)),
    ),
    norm_formula="1/(binom(γ+n, n) binom(N+δ-n, N-n))",
))

# Meixner-Pollaczek

def _mp_series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
    lam, ph = p["lambda"], p["phi"]
    return poch(2*lam, n)/fact(n)*cmath.exp(1j*n*ph), F([-n, lam+1j*x], [2*lam], 1-cmath.exp(-2j*ph))

def _mp_measure(p: P) -> MeasureSpec:
    lam, ph = p["lambda"], p["phi"]
    def weight(x: float) -> float:
        return math.exp((2*ph-math.pi)*x+2*log_abs_gamma(lam+1j*x))/_TWO_PI
    return ContinuousMeasure(weight, -math.inf, math.inf)

def _mp_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    lam, ph = p["lambda"], p["phi"]
    return (cmath.exp(1j*ph)*(lam-1j*x)*y(x+1j),
            2j*x*math.cos(ph)*y(x),
            -2j*lam*math.sin(ph)*y(x),
            -2j*eig*math.sin(ph)*y(x),
            -cmath.exp(-1j*ph)*(lam+1j*x)*y(x-1j))

def _mp_gf(p: P, x: complex, order: int) -> PowerSeries:
    lam, ph = p["lambda"], p["phi"]
    return linear_power(cmath.exp(1j*ph), -lam+1j*x, order)*linear_power(cmath.exp(-1j*ph), -lam-1j*x, order)

def _mp_gf_exp(p: P, x: complex, order: int) -> PowerSeries:
    lam, ph = p["lambda"], p["phi"]
    return exp_series(1, order)*series_gf(F([lam+1j*x], [2*lam], cmath.exp(-2j*ph)-1), order)

add(FamilyDescriptor(
    "meixner-pollaczek", "Meixner-Pollaczek", "classical",
    schema=params("lambda", "phi"),
    variable=VariableMap.direct(),
    series=_mp_series,
    recurrence=Recurrence(lambda p: (2*math.sin(p["phi"]), 0),
                          lambda p, n: (n+1, -2*(n+p["lambda"])*math.cos(p["phi"]), n+2*p["lambda"]-1)),
    normalizer=lambda p, n: 1,
    measure=_mp_measure,
    norm=lambda p, n: gamma(n+2*p["lambda"])/((2*math.sin(p["phi"]))**(2*p["lambda"])*fact(n)),
    positivity=lambda p: require((p["lambda"] > 0, "need lambda > 0"), (0 < p["phi"] < math.pi, "need 0 < phi < pi")),
    sampler=lambda rng: {"lambda": real_in(rng, 0.3, 2.0), "phi": real_in(rng, 0.4, 2.7)},
    defaults={"lambda": 0.8, "phi": 1.1},
    points=grid(-2.0, 2.0, 6),
    equations=(
        EquationSpec("meixner_pollaczek_difference", "IDIFFERENCE", _mp_equation, lambda p, n: n, grid(-2.0, 2.0, 6)),
    ),
    generating_functions=(
        GFSpec("meixner_pollaczek_gf", "meixner-pollaczek", _mp_gf, lambda p, n: 1),
        GFSpec("meixner_pollaczek_gf_exp", "meixner-pollaczek", _mp_gf_exp,
               lambda p, n: 1/(poch(2*p["lambda"], n)*cmath.exp(1j*n*p["phi"]))),
    ),
    norm_formula="Γ(n+2λ)/((2 sin φ)^{2λ} n!)",
))
