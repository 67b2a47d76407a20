"""
    Meixner, Krawtchouk, Laguerre, Charlier and Hermite polynomials.
"""

from __future__ import annotations

import math
from typing import Any, Callable, Sequence, Tuple

from ...qcore import gamma
from ...measures import ContinuousMeasure, DiscreteMeasure
from ...powerseries import PowerSeries, ps_exp, ps_pow
from ..descriptor import EquationSpec, Evaluation, FamilyDescriptor, GFSpec, Recurrence, VariableMap, params, three_point
from . import (P, F, add, compose, exp_series, fact, grid, lattice_points, linear_power, no_violation, ode_terms,
               poch, real_in, require, series_gf, variable)

_GF_GAMMA = 0.7

def _binomial(N: int, k: int) -> float:
    return float(math.comb(N, k))

# Meixner

def _meixner_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    be, c = p["beta"], p["c"]
    return three_point(eig, c-1, c*(x+be), x, y(x+1), y(x), y(x-1))

def _meixner_gf(p: P, x: complex, order: int) -> PowerSeries:
    be, c = p["beta"], p["c"]
    return linear_power(1/c, x, order)*linear_power(1, -x-be, order)

def _meixner_gf_exp(p: P, x: complex, order: int) -> PowerSeries:
    be, c = p["beta"], p["c"]
    return exp_series(1, order)*series_gf(F([-x], [be], (1-c)/c), order)

add(FamilyDescriptor(
    "meixner", "Meixner", "classical",
    schema=params("beta", "c"),
    variable=VariableMap.direct(),
    series=lambda p, n, x: (1+0j, F([-n, -x], [p["beta"]], 1-1/p["c"])),
    recurrence=Recurrence(lambda p: (p["c"]-1, 0),
                          lambda p, n: (p["c"]*(n+p["beta"]), -(n+(n+p["beta"])*p["c"]), n)),
    normalizer=lambda p, n: 1,
    measure=lambda p: DiscreteMeasure(lambda x: x, lambda x: poch(p["beta"], x)/fact(x)*p["c"]**x),
    norm=lambda p, n: p["c"]**(-n)*fact(n)/(poch(p["beta"], n)*(1-p["c"])**p["beta"]),
    positivity=lambda p: require((p["beta"] > 0, "need beta > 0"), (0 < p["c"] < 1, "need 0 < c < 1")),
    sampler=lambda rng: {"beta": real_in(rng, 0.3, 3.0), "c": real_in(rng, 0.1, 0.8)},
    defaults={"beta": 1.5, "c": 0.4},
    points=lattice_points(),
    equations=(
        EquationSpec("meixner_difference", "DIFFERENCE", _meixner_equation, lambda p, n: n, grid(0.3, 5.3, 6)),
    ),
    generating_functions=(
        GFSpec("meixner_gf", "meixner", _meixner_gf, lambda p, n: poch(p["beta"], n)/fact(n)),
        GFSpec("meixner_gf_exp", "meixner", _meixner_gf_exp, lambda p, n: 1/fact(n)),
    ),
    norm_formula="c^{-n} n!/((β)_n (1-c)^β)",
))

# Krawtchouk

def _krawtchouk_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    pp, N = p["p"], p["N"]
    A = pp*(N-n)
    C = n*(1-pp)
    return A, -(A+C), C

def _krawtchouk_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    pp, N = p["p"], p["N"]
    return three_point(eig, -1, pp*(N-x), x*(1-pp), y(x+1), y(x), y(x-1))

def _krawtchouk_gf(p: P, x: complex, order: int) -> PowerSeries:
    pp, N = p["p"], p["N"]
    return linear_power((1-pp)/pp, x, order)*linear_power(-1, N-x, order)

def _krawtchouk_gf_exp(p: P, x: complex, order: int) -> PowerSeries:
    pp, N = p["p"], p["N"]
    return exp_series(1, order)*series_gf(F([-x], [-N], -1/pp, N), order)

add(FamilyDescriptor(
    "krawtchouk", "Krawtchouk", "classical",
    schema=params("p", N=True),
    variable=VariableMap.direct(),
    series=lambda p, n, x: (1+0j, F([-n, -x], [-p["N"]], 1/p["p"], p["N"])),
    recurrence=Recurrence(lambda p: (-1, 0), _krawtchouk_coefficients),
    normalizer=lambda p, n: 1,
    measure=lambda p: DiscreteMeasure(lambda x: x,
                                      lambda x: _binomial(p["N"], x)*p["p"]**x*(1-p["p"])**(p["N"]-x), p["N"]+1),
    norm=lambda p, n: (-1)**n*fact(n)/poch(-p["N"], n)*((1-p["p"])/p["p"])**n,
    positivity=lambda p: require((0 < p["p"] < 1, "need 0 < p < 1")),
    sampler=lambda rng: {"p": real_in(rng, 0.1, 0.9), "N": rng.randint(3, 7)},
    defaults={"p": 0.3, "N": 6},
    points=lattice_points(),
    degree_bound=lambda p: p["N"],
    equations=(
        EquationSpec("krawtchouk_difference", "DIFFERENCE", _krawtchouk_equation, lambda p, n: n, grid(0.3, 5.3, 6)),
    ),
    generating_functions=(
        GFSpec("krawtchouk_gf", "krawtchouk", _krawtchouk_gf, lambda p, n: _binomial(p["N"], n), "TRUNCATED"),
        GFSpec("krawtchouk_gf_exp", "krawtchouk", _krawtchouk_gf_exp, lambda p, n: 1/fact(n), "TRUNCATED"),
    ),
    norm_formula="(-1)^n n!/(-N)_n ((1-p)/p)^n",
))

# Laguerre

def _laguerre_fallback(p: P, n: int, x: complex) -> complex:
    al = p["alpha"]
    total = 0j
    for k in range(n+1):
        total += poch(-n, k)/fact(k)*poch(al+k+1, n-k)*x**k
    return total/fact(n)

def _laguerre_measure(p: P) -> ContinuousMeasure:
    al = p["alpha"]
    # x = u^2 removes the endpoint singularity of x^alpha for alpha >= -1/2
    def weight(u: float) -> float:
        if u <= 0:
            return 0.0
        return 2*u**(2*al+1)*math.exp(-u*u)
    return ContinuousMeasure(weight, 0.0, math.inf, lambda u: u*u)

def _laguerre_gf(p: P, x: complex, order: int) -> PowerSeries:
    t = variable(order)
    return linear_power(1, -p["alpha"]-1, order)*ps_exp(-x*t/(1-t))

def _laguerre_gf_bessel(p: P, x: complex, order: int) -> PowerSeries:
    return exp_series(1, order)*series_gf(F([], [p["alpha"]+1], -x), order)

def _laguerre_gf_gamma(p: P, x: complex, order: int) -> PowerSeries:
    t = variable(order)
    return linear_power(1, -_GF_GAMMA, order)*compose(F([_GF_GAMMA], [p["alpha"]+1], x), -t/(1-t))

add(FamilyDescriptor(
    "laguerre", "Laguerre", "classical",
    schema=params("alpha"),
    variable=VariableMap.direct(),
    series=lambda p, n, x: (poch(p["alpha"]+1, n)/fact(n), F([-n], [p["alpha"]+1], x)),
    recurrence=Recurrence(lambda p: (-1, 0), lambda p, n: (n+1, -(2*n+p["alpha"]+1), n+p["alpha"])),
    normalizer=lambda p, n: 1,
    measure=_laguerre_measure,
    norm=lambda p, n: gamma(n+p["alpha"]+1)/fact(n),
    positivity=lambda p: require((p["alpha"] > -1, "need alpha > -1")),
    sampler=lambda rng: {"alpha": real_in(rng, -0.5, 3.0)},
    defaults={"alpha": 0.5},
    points=grid(0.0, 6.0, 7),
    fallback=_laguerre_fallback,
    equations=(
        EquationSpec("laguerre_ode", "ODE2", ode_terms(lambda p, x: x, lambda p, x: p["alpha"]+1-x),
                     lambda p, n: n, grid(0.0, 6.0, 7)),
    ),
    generating_functions=(
        GFSpec("laguerre_gf", "laguerre", _laguerre_gf, lambda p, n: 1),
        GFSpec("laguerre_gf_bessel", "laguerre", _laguerre_gf_bessel, lambda p, n: 1/poch(p["alpha"]+1, n)),
        GFSpec("laguerre_gf_gamma", "laguerre", _laguerre_gf_gamma,
               lambda p, n: poch(_GF_GAMMA, n)/poch(p["alpha"]+1, n)),
    ),
    norm_formula="Γ(n+α+1)/n!",
))

# Charlier

def _charlier_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    return three_point(eig, -1, p["a"], x, y(x+1), y(x), y(x-1))

add(FamilyDescriptor(
    "charlier", "Charlier", "classical",
    schema=params("a"),
    variable=VariableMap.direct(),
    series=lambda p, n, x: (1+0j, F([-n, -x], [], -1/p["a"])),
    recurrence=Recurrence(lambda p: (-1, 0), lambda p, n: (p["a"], -(n+p["a"]), n)),
    normalizer=lambda p, n: 1,
    measure=lambda p: DiscreteMeasure(lambda x: x, lambda x: p["a"]**x/fact(x)),
    norm=lambda p, n: fact(n)*p["a"]**(-n)*math.exp(p["a"]),
    positivity=lambda p: require((p["a"] > 0, "need a > 0")),
    sampler=lambda rng: {"a": real_in(rng, 0.3, 3.0)},
    defaults={"a": 1.2},
    points=lattice_points(),
    equations=(
        EquationSpec("charlier_difference", "DIFFERENCE", _charlier_equation, lambda p, n: n, grid(0.3, 5.3, 6)),
    ),
    generating_functions=(
        GFSpec("charlier_gf", "charlier",
               lambda p, x, order: exp_series(1, order)*linear_power(1/p["a"], x, order), lambda p, n: 1/fact(n)),
    ),
    norm_formula="n! a^{-n} e^a",
))

# Hermite

def _hermite_series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
    return (2*x)**n, F([-n/2, -(n-1)/2], [], -1/(x*x))

def _hermite_fallback(p: P, n: int, x: complex) -> complex:
    total = 0j
    for k in range(n//2+1):
        total += (-1)**k*(2*x)**(n-2*k)/(fact(k)*fact(n-2*k))
    return fact(n)*total

def _parity(even: bool, rule: Callable[[int], complex]) -> Callable[[P, int], complex]:
    # coefficients vanishing on the other parity
    def coefficient(p: P, n: int) -> complex:
        return rule(n) if (n % 2 == 0) == even else 0j
    return coefficient

def _hermite_hyperbolic(even: bool) -> Callable[[P, complex, int], PowerSeries]:
    def lhs(p: P, x: complex, order: int) -> PowerSeries:
        t = variable(order)
        up, down = ps_exp(2*x*t), ps_exp(-2*x*t)
        half = (up+down)*0.5 if even else (up-down)*0.5
        return ps_exp(-t*t)*half
    return lhs

def _hermite_trigonometric(even: bool) -> Callable[[P, complex, int], PowerSeries]:
    def lhs(p: P, x: complex, order: int) -> PowerSeries:
        t = variable(order)
        up, down = ps_exp(2j*x*t), ps_exp(-2j*x*t)
        half = (up+down)*0.5 if even else (up-down)*(-0.5j)
        return ps_exp(t*t)*half
    return lhs

def _hermite_binomial(even: bool) -> Callable[[P, complex, int], PowerSeries]:
    # even: (1+t^2)^{-g} 1F1(g; 1/2; x^2t^2/(1+t^2)), odd: 2xt (1+t^2)^{-g-1/2} 1F1(g+1/2; 3/2; x^2t^2/(1+t^2))
    def lhs(p: P, x: complex, order: int) -> PowerSeries:
        t = variable(order)
        square = 1+t*t
        w = t*t*(x*x)/square
        if even:
            return ps_pow(square, -_GF_GAMMA)*compose(F([_GF_GAMMA], [0.5], 1), w)
        g = _GF_GAMMA+0.5
        return 2*x*t*ps_pow(square, -g)*compose(F([g], [1.5], 1), w)
    return lhs

def _hermite_rational(p: P, x: complex, order: int) -> PowerSeries:
    t = variable(order)
    square = 1+4*t*t
    return (1+2*x*t+4*t*t)*ps_pow(square, -1.5)*ps_exp(4*x*x*t*t/square)

add(FamilyDescriptor(
    "hermite", "Hermite", "classical",
    schema=(),
    variable=VariableMap.direct(),
    series=_hermite_series,
    recurrence=Recurrence(lambda p: (2, 0), lambda p, n: (1, 0, 2*n)),
    normalizer=lambda p, n: 1,
    measure=lambda p: ContinuousMeasure(lambda x: math.exp(-x*x), -math.inf, math.inf),
    norm=lambda p, n: 2**n*fact(n)*math.sqrt(math.pi),
    positivity=no_violation,
    sampler=lambda rng: {},
    defaults={},
    points=grid(-2.0, 2.0, 8),
    fallback=_hermite_fallback,
    equations=(
        EquationSpec("hermite_ode", "ODE2", ode_terms(lambda p, x: 1, lambda p, x: -2*x, 2.0),
                     lambda p, n: n, grid(-2.0, 2.0, 8)),
    ),
    generating_functions=(
        GFSpec("hermite_gf", "hermite", lambda p, x, order: ps_exp(2*x*variable(order)-variable(order)*variable(order)),
               lambda p, n: 1/fact(n)),
        GFSpec("hermite_gf_cosh", "hermite", _hermite_hyperbolic(True), _parity(True, lambda m: 1/fact(m))),
        GFSpec("hermite_gf_sinh", "hermite", _hermite_hyperbolic(False), _parity(False, lambda m: 1/fact(m))),
        GFSpec("hermite_gf_cos", "hermite", _hermite_trigonometric(True),
               _parity(True, lambda m: (-1)**(m//2)/fact(m))),
        GFSpec("hermite_gf_sin", "hermite", _hermite_trigonometric(False),
               _parity(False, lambda m: (-1)**((m-1)//2)/fact(m))),
        GFSpec("hermite_gf_binomial_even", "hermite", _hermite_binomial(True),
               _parity(True, lambda m: poch(_GF_GAMMA, m//2)/fact(m))),
        GFSpec("hermite_gf_binomial_odd", "hermite", _hermite_binomial(False),
               _parity(False, lambda m: poch(_GF_GAMMA+0.5, (m-1)//2)/fact(m))),
        GFSpec("hermite_gf_rational", "hermite", _hermite_rational, lambda p, n: 1/fact(n//2)),
    ),
    norm_formula="2^n n! √π",
))
