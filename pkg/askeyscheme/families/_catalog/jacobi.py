"""
    Jacobi polynomials and their special cases: Gegenbauer, Chebyshev of both kinds, Legendre.
"""

from __future__ import annotations

import math
from random import Random
from typing import Any, Callable, Dict, Optional, Tuple

from ...qcore import gamma
from ...measures import ContinuousMeasure, MeasureSpec
from ...powerseries import PowerSeries, ps_exp, ps_pow
from ..descriptor import EquationSpec, FamilyDescriptor, GFSpec, Recurrence, VariableMap, params
from . import (P, F, add, compose, fact, grid, ode_terms, linear_power, poch, pochs, quadratic_argument, real_in,
               require, series_gf, variable)

_GF_GAMMA = 0.7
""" The free parameter of the generating functions valid for arbitrary gamma. """

_POINTS = grid(-0.9, 0.9, 7)

def _sqrt_r(x: complex, order: int) -> PowerSeries:
    # R = sqrt(1-2xt+t^2)
    t = variable(order)
    return ps_pow(1-2*x*t+t*t, 0.5)

def _circle_measure(weight: Callable[[float], float]) -> MeasureSpec:
    return ContinuousMeasure.on_circle(weight)

# generating functions shared by the Jacobi-type families, parameterized by the bottom parameters A and B
# of the 0F1 and 2F1 factors and by the sum S = alpha+beta+1

def _bessel_pair(A: Callable[[P], complex], B: Callable[[P], complex]) -> Callable[[P, complex, int], PowerSeries]:
    def lhs(p: P, x: complex, order: int) -> PowerSeries:
        left = series_gf(F([], [A(p)], (x-1)/2), order)
        right = series_gf(F([], [B(p)], (x+1)/2), order)
        return left*right
    return lhs

def _gamma_pair(S: Callable[[P], complex], A: Callable[[P], complex],
                B: Callable[[P], complex]) -> Callable[[P, complex, int], PowerSeries]:
    def lhs(p: P, x: complex, order: int) -> PowerSeries:
        r = _sqrt_r(x, order)
        t = variable(order)
        g, s = _GF_GAMMA, S(p)
        left = compose(F([g, s-g], [A(p)], 1), (1-r-t)*0.5)
        right = compose(F([g, s-g], [B(p)], 1), (1-r+t)*0.5)
        return left*right
    return lhs

def _exp_bessel(A: Callable[[P], complex]) -> Callable[[P, complex, int], PowerSeries]:
    # e^{xt} 0F1(-; A; (x^2-1)t^2/4)
    def lhs(p: P, x: complex, order: int) -> PowerSeries:
        t = variable(order)
        return ps_exp(t*x)*compose(F([], [A(p)], (x*x-1)/4), t*t)
    return lhs

def _binomial_quadratic(A: Callable[[P], complex]) -> Callable[[P, complex, int], PowerSeries]:
    # (1-xt)^{-gamma} 2F1(gamma/2, (gamma+1)/2; A; (x^2-1)t^2/(1-xt)^2)
    def lhs(p: P, x: complex, order: int) -> PowerSeries:
        t = variable(order)
        g = _GF_GAMMA
        base = 1-t*x
        w = t*t*(x*x-1)/(base*base)
        return linear_power(x, -g, order)*compose(F([g/2, (g+1)/2], [A(p)], 1), w)
    return lhs

# Jacobi

def _jacobi_series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
    al, be = p["alpha"], p["beta"]
    return poch(al+1, n)/fact(n), F([-n, n+al+be+1], [al+1], (1-x)/2)

def _jacobi_fallback(p: P, n: int, x: complex) -> complex:
    al, be = p["alpha"], p["beta"]
    total = 0j
    for k in range(n+1):
        total += (poch(al+k+1, n-k)/fact(n-k))*(poch(be+n-k+1, k)/fact(k))*((x-1)/2)**k*((x+1)/2)**(n-k)
    return total

def _jacobi_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    al, be = p["alpha"], p["beta"]
    if n == 0:
        return 2/(al+be+2), (be-al)/(al+be+2), 0
    s = 2*n+al+be
    A = 2*(n+1)*(n+al+be+1)/((s+1)*(s+2))
    B = (be*be-al*al)/(s*(s+2))
    C = 2*(n+al)*(n+be)/(s*(s+1))
    return A, B, C

def _jacobi_weight(p: P) -> Callable[[float], float]:
    al, be = p["alpha"], p["beta"]
    def weight(theta: float) -> float:
        c = math.cos(theta)
        return (1-c)**al*(1+c)**be*math.sin(theta)
    return weight

def _jacobi_norm(p: P, n: int) -> complex:
    al, be = p["alpha"], p["beta"]
    g = gamma(n+al+1)*gamma(n+be+1)/fact(n)
    if n == 0:
        return 2**(al+be+1)*g/gamma(al+be+2)
    return 2**(al+be+1)/(2*n+al+be+1)*g/gamma(n+al+be+1)

def _jacobi_sampler(rng: Random) -> Dict[str, Any]:
    return {"alpha": real_in(rng, -0.5, 2.5), "beta": real_in(rng, -0.5, 2.5)}

def _jacobi_s(p: P) -> complex:
    return p["alpha"]+p["beta"]+1

def _jacobi_gf(p: P, x: complex, order: int) -> PowerSeries:
    al, be = p["alpha"], p["beta"]
    r = _sqrt_r(x, order)
    t = variable(order)
    return 2**(al+be)*(r*ps_pow(1+r-t, al)*ps_pow(1+r+t, be)).inverse()

def _jacobi_quadratic(sign: int) -> Callable[[P, complex, int], PowerSeries]:
    def lhs(p: P, x: complex, order: int) -> PowerSeries:
        s = _jacobi_s(p)
        den = p["alpha"]+1 if sign < 0 else p["beta"]+1
        arg = quadratic_argument(2*(x+sign), order, sign)
        return linear_power(-sign, -s, order)*compose(F([s/2, (s+1)/2], [den], 1), arg)
    return lhs

add(FamilyDescriptor(
    "jacobi", "Jacobi", "classical",
    schema=params("alpha", "beta"),
    variable=VariableMap.direct(),
    series=_jacobi_series,
    recurrence=Recurrence(lambda p: (1, 0), _jacobi_coefficients),
    normalizer=lambda p, n: 1,
    measure=lambda p: _circle_measure(_jacobi_weight(p)),
    norm=_jacobi_norm,
    positivity=lambda p: require((p["alpha"] > -1 and p["beta"] > -1, "need alpha > -1 and beta > -1")),
    sampler=_jacobi_sampler,
    defaults={"alpha": 0.5, "beta": 1.5},
    points=_POINTS,
    fallback=_jacobi_fallback,
    equations=(
        EquationSpec("jacobi_ode", "ODE2",
                     ode_terms(lambda p, x: 1-x*x, lambda p, x: p["beta"]-p["alpha"]-(p["alpha"]+p["beta"]+2)*x),
                     lambda p, n: n*(n+p["alpha"]+p["beta"]+1), _POINTS),
    ),
    generating_functions=(
        GFSpec("jacobi_gf", "jacobi", _jacobi_gf, lambda p, n: 1),
        GFSpec("jacobi_gf_bessel", "jacobi", _bessel_pair(lambda p: p["alpha"]+1, lambda p: p["beta"]+1),
               lambda p, n: 1/pochs((p["alpha"]+1, p["beta"]+1), n)),
        GFSpec("jacobi_gf_quadratic_alpha", "jacobi", _jacobi_quadratic(-1),
               lambda p, n: poch(_jacobi_s(p), n)/poch(p["alpha"]+1, n)),
        GFSpec("jacobi_gf_quadratic_beta", "jacobi", _jacobi_quadratic(1),
               lambda p, n: poch(_jacobi_s(p), n)/poch(p["beta"]+1, n)),
        GFSpec("jacobi_gf_gamma", "jacobi",
               _gamma_pair(_jacobi_s, lambda p: p["alpha"]+1, lambda p: p["beta"]+1),
               lambda p, n: pochs((_GF_GAMMA, _jacobi_s(p)-_GF_GAMMA), n)/pochs((p["alpha"]+1, p["beta"]+1), n)),
    ),
    norm_formula="2^{α+β+1} Γ(n+α+1)Γ(n+β+1)/((2n+α+β+1) n! Γ(n+α+β+1))",
))

# Gegenbauer

def _half_lambda(p: P) -> complex:
    return p["lambda"]+0.5

def _gegenbauer_positivity(p: P) -> Optional[str]:
    return require((p["lambda"] > -0.5, "need lambda > -1/2"), (p["lambda"] != 0, "need lambda != 0"))

def _gegenbauer_norm(p: P, n: int) -> complex:
    lam = p["lambda"]
    return math.pi*gamma(n+2*lam)*2**(1-2*lam)/(gamma(lam)**2*(n+lam)*fact(n))

def _gegenbauer_gf_r(p: P, x: complex, order: int) -> PowerSeries:
    r = _sqrt_r(x, order)
    t = variable(order)
    return r.inverse()*ps_pow((1+r-t*x)*0.5, 0.5-p["lambda"])

add(FamilyDescriptor(
    "gegenbauer", "Gegenbauer", "classical",
    schema=params("lambda"),
    variable=VariableMap.direct(),
    series=lambda p, n, x: (poch(2*p["lambda"], n)/fact(n), F([-n, n+2*p["lambda"]], [_half_lambda(p)], (1-x)/2)),
    recurrence=Recurrence(lambda p: (1, 0),
                          lambda p, n: ((n+1)/(2*(n+p["lambda"])), 0, (n+2*p["lambda"]-1)/(2*(n+p["lambda"])))),
    normalizer=lambda p, n: 1,
    measure=lambda p: _circle_measure(lambda theta: math.sin(theta)**(2*p["lambda"])),
    norm=_gegenbauer_norm,
    positivity=_gegenbauer_positivity,
    sampler=lambda rng: {"lambda": real_in(rng, 0.2, 2.5)},
    defaults={"lambda": 0.75},
    points=_POINTS,
    equations=(
        EquationSpec("gegenbauer_ode", "ODE2",
                     ode_terms(lambda p, x: 1-x*x, lambda p, x: -(2*p["lambda"]+1)*x),
                     lambda p, n: n*(n+2*p["lambda"]), _POINTS),
    ),
    generating_functions=(
        GFSpec("gegenbauer_gf", "gegenbauer",
               lambda p, x, order: ps_pow(1-2*x*variable(order)+variable(order)*variable(order), -p["lambda"]),
               lambda p, n: 1),
        GFSpec("gegenbauer_gf_r", "gegenbauer", _gegenbauer_gf_r,
               lambda p, n: poch(_half_lambda(p), n)/poch(2*p["lambda"], n)),
        GFSpec("gegenbauer_gf_bessel", "gegenbauer", _bessel_pair(_half_lambda, _half_lambda),
               lambda p, n: 1/pochs((2*p["lambda"], _half_lambda(p)), n)),
        GFSpec("gegenbauer_gf_exp", "gegenbauer", _exp_bessel(_half_lambda),
               lambda p, n: 1/poch(2*p["lambda"], n)),
        GFSpec("gegenbauer_gf_gamma", "gegenbauer",
               _gamma_pair(lambda p: 2*p["lambda"], _half_lambda, _half_lambda),
               lambda p, n: pochs((_GF_GAMMA, 2*p["lambda"]-_GF_GAMMA), n)/pochs((2*p["lambda"], _half_lambda(p)), n)),
        GFSpec("gegenbauer_gf_binomial", "gegenbauer", _binomial_quadratic(_half_lambda),
               lambda p, n: poch(_GF_GAMMA, n)/poch(2*p["lambda"], n)),
    ),
    norm_formula="π Γ(n+2λ) 2^{1-2λ}/(Γ(λ)^2 (n+λ) n!)",
))

# Chebyshev

def _const(value: float) -> Callable[[P], complex]:
    return lambda p: complex(value)

def _chebyshev_t_gf_r(p: P, x: complex, order: int) -> PowerSeries:
    r = _sqrt_r(x, order)
    t = variable(order)
    return r.inverse()*ps_pow((1+r-t*x)*0.5, 0.5)

def _chebyshev_u_gf_r(p: P, x: complex, order: int) -> PowerSeries:
    r = _sqrt_r(x, order)
    t = variable(order)
    return (r*ps_pow((1+r-t*x)*0.5, 0.5)).inverse()

def _chebyshev_t_gf(p: P, x: complex, order: int) -> PowerSeries:
    t = variable(order)
    return (1-t*x)/(1-2*x*t+t*t)

def _chebyshev_u_gf(p: P, x: complex, order: int) -> PowerSeries:
    t = variable(order)
    return (1-2*x*t+t*t).inverse()

add(FamilyDescriptor(
    "chebyshev-t", "Chebyshev (first kind)", "classical",
    schema=(),
    variable=VariableMap.direct(),
    series=lambda p, n, x: (1+0j, F([-n, n], [0.5], (1-x)/2)),
    recurrence=Recurrence(lambda p: (2, 0), lambda p, n: (1, 0, 1), first=lambda p: (1, 0)),
    normalizer=lambda p, n: 1,
    measure=lambda p: _circle_measure(lambda theta: 1.0),
    norm=lambda p, n: math.pi if n == 0 else math.pi/2,
    positivity=lambda p: None,
    sampler=lambda rng: {},
    defaults={},
    points=_POINTS,
    equations=(
        EquationSpec("chebyshev_t_ode", "ODE2", ode_terms(lambda p, x: 1-x*x, lambda p, x: -x),
                     lambda p, n: n*n, _POINTS),
    ),
    generating_functions=(
        GFSpec("chebyshev_t_gf", "chebyshev-t", _chebyshev_t_gf, lambda p, n: 1),
        GFSpec("chebyshev_t_gf_r", "chebyshev-t", _chebyshev_t_gf_r, lambda p, n: poch(0.5, n)/fact(n)),
        GFSpec("chebyshev_t_gf_bessel", "chebyshev-t", _bessel_pair(_const(0.5), _const(0.5)),
               lambda p, n: 1/(poch(0.5, n)*fact(n))),
        GFSpec("chebyshev_t_gf_exp", "chebyshev-t", _exp_bessel(_const(0.5)), lambda p, n: 1/fact(n)),
        GFSpec("chebyshev_t_gf_gamma", "chebyshev-t", _gamma_pair(_const(0), _const(0.5), _const(0.5)),
               lambda p, n: pochs((_GF_GAMMA, -_GF_GAMMA), n)/(poch(0.5, n)*fact(n))),
        GFSpec("chebyshev_t_gf_binomial", "chebyshev-t", _binomial_quadratic(_const(0.5)),
               lambda p, n: poch(_GF_GAMMA, n)/fact(n)),
    ),
    norm_formula="π for n = 0, π/2 otherwise",
))

add(FamilyDescriptor(
    "chebyshev-u", "Chebyshev (second kind)", "classical",
    schema=(),
    variable=VariableMap.direct(),
    series=lambda p, n, x: (complex(n+1), F([-n, n+2], [1.5], (1-x)/2)),
    recurrence=Recurrence(lambda p: (2, 0), lambda p, n: (1, 0, 1)),
    normalizer=lambda p, n: 1,
    measure=lambda p: _circle_measure(lambda theta: math.sin(theta)**2),
    norm=lambda p, n: math.pi/2,
    positivity=lambda p: None,
    sampler=lambda rng: {},
    defaults={},
    points=_POINTS,
    equations=(
        EquationSpec("chebyshev_u_ode", "ODE2", ode_terms(lambda p, x: 1-x*x, lambda p, x: -3*x),
                     lambda p, n: n*(n+2), _POINTS),
    ),
    generating_functions=(
        GFSpec("chebyshev_u_gf", "chebyshev-u", _chebyshev_u_gf, lambda p, n: 1),
        GFSpec("chebyshev_u_gf_r", "chebyshev-u", _chebyshev_u_gf_r, lambda p, n: poch(1.5, n)/fact(n+1)),
        GFSpec("chebyshev_u_gf_bessel", "chebyshev-u", _bessel_pair(_const(1.5), _const(1.5)),
               lambda p, n: 1/(poch(1.5, n)*fact(n+1))),
        GFSpec("chebyshev_u_gf_exp", "chebyshev-u", _exp_bessel(_const(1.5)), lambda p, n: 1/fact(n+1)),
        GFSpec("chebyshev_u_gf_gamma", "chebyshev-u", _gamma_pair(_const(2), _const(1.5), _const(1.5)),
               lambda p, n: pochs((_GF_GAMMA, 2-_GF_GAMMA), n)/(poch(1.5, n)*fact(n+1))),
        GFSpec("chebyshev_u_gf_binomial", "chebyshev-u", _binomial_quadratic(_const(1.5)),
               lambda p, n: poch(_GF_GAMMA, n)/fact(n+1)),
    ),
    norm_formula="π/2",
))

# Legendre

add(FamilyDescriptor(
    "legendre", "Legendre", "classical",
    schema=(),
    variable=VariableMap.direct(),
    series=lambda p, n, x: (1+0j, F([-n, n+1], [1], (1-x)/2)),
    recurrence=Recurrence(lambda p: (1, 0), lambda p, n: ((n+1)/(2*n+1), 0, n/(2*n+1))),
    normalizer=lambda p, n: 1,
    measure=lambda p: ContinuousMeasure(lambda x: 1.0, -1.0, 1.0),
    norm=lambda p, n: 2/(2*n+1),
    positivity=lambda p: None,
    sampler=lambda rng: {},
    defaults={},
    points=_POINTS,
    equations=(
        EquationSpec("legendre_ode", "ODE2", ode_terms(lambda p, x: 1-x*x, lambda p, x: -2*x),
                     lambda p, n: n*(n+1), _POINTS),
    ),
    generating_functions=(
        GFSpec("legendre_gf", "legendre", lambda p, x, order: _sqrt_r(x, order).inverse(), lambda p, n: 1),
        GFSpec("legendre_gf_bessel", "legendre", _bessel_pair(_const(1), _const(1)), lambda p, n: 1/fact(n)**2),
        GFSpec("legendre_gf_exp", "legendre", _exp_bessel(_const(1)), lambda p, n: 1/fact(n)),
        GFSpec("legendre_gf_gamma", "legendre", _gamma_pair(_const(1), _const(1), _const(1)),
               lambda p, n: pochs((_GF_GAMMA, 1-_GF_GAMMA), n)/fact(n)**2),
        GFSpec("legendre_gf_binomial", "legendre", _binomial_quadratic(_const(1)),
               lambda p, n: poch(_GF_GAMMA, n)/fact(n)),
    ),
    norm_formula="2/(2n+1)",
))
