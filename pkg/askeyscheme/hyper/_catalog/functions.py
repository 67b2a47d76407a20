"""
    Relations for the exponential, trigonometric and Bessel functions and their q-analogues,
    and for the q-derivative and Jackson q-integral.
"""

from __future__ import annotations

import cmath
from random import Random
from typing import Any, Callable, Dict, Mapping

from ...qcore import (INFINITY, jackson_integral, qbessel, qbinomial, qderivative, qexp_big,
                      qexp_small, qnumber, qpochhammer, qtrig, rgamma)
from ..series import fseries, phiseries
from . import add, annulus, degree, disk, n_of, qbase, real, rq

P = Mapping[str, Any]

_FUNCTIONS = "special_functions"
_CALCULUS = "q_calculus"

_Q_SCHEDULE = (2.0**4, 2.0**6, 2.0**8, 2.0**10)

def _q_of(p: P) -> float:
    return 1-1/p["lam"]

def _sample_z(rng: Random) -> Dict[str, Any]:
    return {"z": disk(rng, 0.9), "q": qbase(rng)}

_ZQ = {"z": 0.4+0.3j, "q": 0.5}

def _bessel(nu: complex, z: complex) -> complex:
    # ordinary Bessel function through its 0F1 form
    return (z/2)**nu*rgamma(nu+1)*fseries([], [nu+1], -z*z/4)

add("exp_as_0f0", _FUNCTIONS, "exp(z) = 0F0(; ; z)",
    "ANALYTIC_TOL",
    lambda p: fseries([], [], p["z"]),
    lambda p: cmath.exp(p["z"]),
    lambda rng: {"z": disk(rng, 5.0)}, {"z": 1.5-0.5j})

add("sin_as_0f1", _FUNCTIONS, "sin(z) = z 0F1(; 3/2; -z^2/4)",
    "ANALYTIC_TOL",
    lambda p: p["z"]*fseries([], [1.5], -p["z"]**2/4),
    lambda p: cmath.sin(p["z"]),
    lambda rng: {"z": disk(rng, 5.0)}, {"z": 1.5-0.5j})

add("cos_as_0f1", _FUNCTIONS, "cos(z) = 0F1(; 1/2; -z^2/4)",
    "ANALYTIC_TOL",
    lambda p: fseries([], [0.5], -p["z"]**2/4),
    lambda p: cmath.cos(p["z"]),
    lambda rng: {"z": disk(rng, 5.0)}, {"z": 1.5-0.5j})

add("small_qexp_series", _FUNCTIONS, "e_q(z) = 1phi0(0; ; q; z) = 1/(z;q)_inf",
    "ANALYTIC_TOL",
    lambda p: phiseries([0], [], rq(p), p["z"]),
    lambda p: qexp_small(p["z"], rq(p)),
    _sample_z, _ZQ)

add("big_qexp_series", _FUNCTIONS, "E_q(z) = 0phi0(; ; q; -z) = (-z;q)_inf",
    "ANALYTIC_TOL",
    lambda p: phiseries([], [], rq(p), -p["z"]),
    lambda p: qexp_big(p["z"], rq(p)),
    lambda rng: {"z": disk(rng, 5.0), "q": qbase(rng)}, _ZQ)

add("qexp_reciprocal", _FUNCTIONS, "e_q(z) E_q(-z) = 1",
    "ANALYTIC_TOL",
    lambda p: qexp_small(p["z"], rq(p))*qexp_big(-p["z"], rq(p)),
    lambda p: 1,
    _sample_z, _ZQ)

add("small_qexp_limit", _FUNCTIONS, "e_q((1-q)z) -> exp(z) as q -> 1",
    "LIMIT_SCHEDULE",
    lambda p: qexp_small((1-_q_of(p))*p["z"], _q_of(p)),
    lambda p: cmath.exp(p["z"]),
    lambda rng: {"z": disk(rng, 2.0)}, {"z": 0.8+0.5j}, schedule=_Q_SCHEDULE, threshold=1e-2)

add("big_qexp_limit", _FUNCTIONS, "E_q((1-q)z) -> exp(z) as q -> 1",
    "LIMIT_SCHEDULE",
    lambda p: qexp_big((1-_q_of(p))*p["z"], _q_of(p)),
    lambda p: cmath.exp(p["z"]),
    lambda rng: {"z": disk(rng, 2.0)}, {"z": 0.8+0.5j}, schedule=_Q_SCHEDULE, threshold=1e-2)

def _qsin_series(z: complex, q: float) -> complex:
    return sum(((-1)**n*z**(2*n+1)/_qq(q, 2*n+1) for n in range(200)), 0j)

def _qcos_series(z: complex, q: float) -> complex:
    return sum(((-1)**n*z**(2*n)/_qq(q, 2*n) for n in range(200)), 0j)

def _qq(q: float, n: int) -> complex:
    res = 1.0
    for j in range(1, n+1):
        res *= 1-q**j
    return complex(res)

add("qsin_series", _FUNCTIONS, "sin_q(z) as a power series",
    "ANALYTIC_TOL",
    lambda p: qtrig("sin_q", p["z"], rq(p)),
    lambda p: _qsin_series(p["z"], rq(p)),
    _sample_z, _ZQ)

add("qcos_series", _FUNCTIONS, "cos_q(z) as a power series",
    "ANALYTIC_TOL",
    lambda p: qtrig("cos_q", p["z"], rq(p)),
    lambda p: _qcos_series(p["z"], rq(p)),
    _sample_z, _ZQ)

add("small_qexp_euler", _FUNCTIONS, "e_q(iz) = cos_q(z) + i sin_q(z)",
    "ANALYTIC_TOL",
    lambda p: qexp_small(1j*p["z"], rq(p)),
    lambda p: qtrig("cos_q", p["z"], rq(p))+1j*qtrig("sin_q", p["z"], rq(p)),
    _sample_z, _ZQ)

add("big_qexp_euler", _FUNCTIONS, "E_q(iz) = Cos_q(z) + i Sin_q(z)",
    "ANALYTIC_TOL",
    lambda p: qexp_big(1j*p["z"], rq(p)),
    lambda p: qtrig("Cos_q", p["z"], rq(p))+1j*qtrig("Sin_q", p["z"], rq(p)),
    _sample_z, _ZQ)

add("qtrig_pythagoras", _FUNCTIONS, "sin_q Sin_q + cos_q Cos_q = 1",
    "ANALYTIC_TOL",
    lambda p: (qtrig("sin_q", p["z"], rq(p))*qtrig("Sin_q", p["z"], rq(p))
               + qtrig("cos_q", p["z"], rq(p))*qtrig("Cos_q", p["z"], rq(p))),
    lambda p: 1,
    _sample_z, _ZQ)

add("qtrig_cross", _FUNCTIONS, "sin_q Cos_q - Sin_q cos_q = 0",
    "ANALYTIC_TOL",
    lambda p: (qtrig("sin_q", p["z"], rq(p))*qtrig("Cos_q", p["z"], rq(p))
               - qtrig("Sin_q", p["z"], rq(p))*qtrig("cos_q", p["z"], rq(p))),
    lambda p: 0,
    _sample_z, _ZQ)

def _sample_bessel(rng: Random) -> Dict[str, Any]:
    return {"nu": real(rng, 0.0, 3.0), "z": complex(real(rng, 0.1, 1.9)), "q": qbase(rng)}

add("qbessel_connection", _FUNCTIONS, "J2(z;q) = (-z^2/4;q)_inf J1(z;q), |z| < 2",
    "ANALYTIC_TOL",
    lambda p: qbessel(2, p["nu"].real, p["z"], rq(p)),
    lambda p: qpochhammer(-p["z"]**2/4, rq(p), INFINITY)*qbessel(1, p["nu"].real, p["z"], rq(p)),
    _sample_bessel, {"nu": 0.5, "z": 1.2, "q": 0.5},
    constraint=lambda p: None if abs(p["z"]) < 2 else "|z| < 2 is required")

for _kind in (1, 2):
    add(f"qbessel{_kind}_limit", _FUNCTIONS, f"J{_kind}((1-q)z;q) -> J(z) as q -> 1",
        "LIMIT_SCHEDULE",
        (lambda kind: lambda p: qbessel(kind, p["nu"].real, (1-_q_of(p))*p["z"], _q_of(p)))(_kind),
        lambda p: _bessel(p["nu"], p["z"]),
        lambda rng: {"nu": real(rng, 0.0, 3.0), "z": complex(real(rng, 0.2, 3.0))},
        {"nu": 1.5, "z": 2.0}, schedule=_Q_SCHEDULE, threshold=1e-2)

# q-derivative and q-integral

def _f(p: P) -> Callable[[complex], complex]:
    a = p["a"]
    return lambda x: cmath.exp(a*x)

def _g(p: P) -> Callable[[complex], complex]:
    b = p["b"]
    return lambda x: x**3+b*x

def _sample_calculus(rng: Random) -> Dict[str, Any]:
    return {"a": disk(rng, 1.5), "b": disk(rng, 2.0), "x": annulus(rng, 0.2, 1.5), "q": qbase(rng),
            "gamma": real(rng, -2.0, 2.0), "n": degree(rng, 4)}

_CALC = {"a": 0.7+0.2j, "b": -1.1, "x": 0.9, "q": 0.5, "gamma": 1.5, "n": 3}

def _fg(p: P) -> Callable[[complex], complex]:
    f, g = _f(p), _g(p)
    return lambda x: f(x)*g(x)

add("qderivative_power", _CALCULUS, "D_q x^n = [n]_q x^{n-1}",
    "TERMINATING_EXACT",
    lambda p: qderivative(lambda x: x**(n_of(p)+1), p["x"], rq(p)),
    lambda p: qnumber(n_of(p)+1, rq(p))*p["x"]**n_of(p),
    _sample_calculus, _CALC)

add("qderivative_scaling", _CALCULUS, "D_q^n [f(gamma x)] = gamma^n (D_q^n f)(gamma x)",
    "ANALYTIC_TOL",
    lambda p: qderivative(lambda x: _f(p)(p["gamma"].real*x), p["x"], rq(p), n_of(p)),
    lambda p: p["gamma"].real**n_of(p)*qderivative(_f(p), p["gamma"].real*p["x"], rq(p), n_of(p)),
    _sample_calculus, _CALC,
    constraint=lambda p: None if p["gamma"] != 0 else "gamma must be non-zero")

add("q_product_rule", _CALCULUS, "D_q [f g](x) = f(qx) D_q g(x) + g(x) D_q f(x)",
    "ANALYTIC_TOL",
    lambda p: qderivative(_fg(p), p["x"], rq(p)),
    lambda p: (_f(p)(rq(p)*p["x"])*qderivative(_g(p), p["x"], rq(p))
               + _g(p)(p["x"])*qderivative(_f(p), p["x"], rq(p))),
    _sample_calculus, _CALC)

def _leibniz(p: P) -> complex:
    n, q, x = n_of(p), rq(p), p["x"]
    total = 0j
    for k in range(n+1):
        total += (qbinomial(n, k, q)*qderivative(_f(p), q**k*x, q, n-k)
                  * qderivative(_g(p), x, q, k))
    return total

add("q_leibniz", _CALCULUS, "D_q^n [f g] as a q-binomial sum",
    "ANALYTIC_TOL",
    lambda p: qderivative(_fg(p), p["x"], rq(p), n_of(p)),
    _leibniz, _sample_calculus, _CALC, threshold=1e-7)

add("qderivative_limit", _CALCULUS, "D_q f(x) -> f'(x) as q -> 1",
    "LIMIT_SCHEDULE",
    lambda p: qderivative(_fg(p), p["x"], _q_of(p)),
    lambda p: cmath.exp(p["a"]*p["x"])*(p["a"]*(p["x"]**3+p["b"]*p["x"])+3*p["x"]**2+p["b"]),
    lambda rng: {"a": disk(rng, 1.5), "b": disk(rng, 2.0), "x": annulus(rng, 0.2, 1.5)},
    {"a": 0.7+0.2j, "b": -1.1, "x": 0.9}, schedule=_Q_SCHEDULE, threshold=1e-2)

add("jackson_integral_power", _CALCULUS, "int_0^x t^n d_qt = (1-q) x^{n+1}/(1-q^{n+1})",
    "ANALYTIC_TOL",
    lambda p: jackson_integral(lambda t: t**n_of(p), p["x"], rq(p)).value,
    lambda p: (1-rq(p))*p["x"]**(n_of(p)+1)/(1-rq(p)**(n_of(p)+1)),
    _sample_calculus, _CALC)

add("jackson_integral_limit", _CALCULUS, "int_0^x f(t) d_qt -> int_0^x f(t) dt as q -> 1",
    "LIMIT_SCHEDULE",
    lambda p: jackson_integral(_fg(p), p["x"], _q_of(p), tol=1e-14).value,
    lambda p: _exact_integral(p),
    lambda rng: {"a": complex(real(rng, 0.3, 1.5)), "b": disk(rng, 2.0), "x": complex(real(rng, 0.2, 1.5))},
    {"a": 0.7, "b": -1.1, "x": 0.9}, schedule=_Q_SCHEDULE, threshold=1e-2)

def _exact_integral(p: P) -> complex:
    # integral of exp(a t)(t^3 + b t) on [0, x]: antiderivative of t^k e^{at} by repeated parts
    a, b, x = p["a"], p["b"], p["x"]
    def moment(k: int) -> complex:
        total = 0j
        coeff = 1+0j
        for j in range(k+1):
            total += coeff*x**(k-j)/a**(j+1)
            coeff *= -(k-j)
        res = cmath.exp(a*x)*total
        # value of the antiderivative at 0
        fact = 1
        for j in range(1, k+1):
            fact *= j
        return res-(-1)**k*fact/a**(k+1)
    return moment(3)+b*moment(1)

add("jackson_infinite_split", _CALCULUS, "int_0^inf f d_qt = int_0^1 f d_qt + (1-q) sum_{m>=1} f(q^{-m}) q^{-m}",
    "ANALYTIC_TOL",
    lambda p: jackson_integral(lambda t: cmath.exp(-t), INFINITY, rq(p)).value,
    lambda p: (jackson_integral(lambda t: cmath.exp(-t), 1, rq(p)).value
               + (1-rq(p))*_upper_tail(rq(p))),
    lambda rng: {"q": qbase(rng)}, {"q": 0.5})

def _upper_tail(q: float) -> complex:
    total, m = 0j, 1
    while q**(-m) < 800:
        total += cmath.exp(-q**(-m))*q**(-m)
        m += 1
    return total
