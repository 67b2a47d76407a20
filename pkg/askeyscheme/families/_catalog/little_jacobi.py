"""
    Little q-Jacobi, q-Meixner, the four q-Krawtchouk families and the q-Laguerre and q-Charlier families,
    plus the continuous big q-Hermite and continuous q-Laguerre polynomials in :math:`x = \\cos\\theta`.
"""

from __future__ import annotations

import math
from random import Random
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

from ...qcore import gamma
from ...measures import BilateralMeasure, ContinuousMeasure, DiscreteMeasure
from ...powerseries import PowerSeries
from ..descriptor import (EquationSpec, Evaluation, FamilyDescriptor, GFSpec, Orthogonality, ParamInfo, Recurrence,
                          TermBuilder, VariableMap, params, qpower, three_point, trig_z)
from . import (P, add, binom2, grid, lattice_points, log_qinf_plus, no_violation, phi, positive_masses, qbase,
               qinf, qp, qproduct_series, qps, qreciprocal_series, real_in, require, series_gf, variable)
from .askey_wilson import TRIG_POINTS, AskeyWilsonForm, aw_sampler

_LITTLE_POINTS = grid(0.05, 0.95, 6)

_Unpack = Callable[[P], Tuple[complex, complex, float]]

# Little q-Jacobi

def _lqj(a: Callable[[P], complex], b: Callable[[P], complex]) -> _Unpack:
    # little q-Legendre is little q-Jacobi at a = b = 1
    def unpack(p: P) -> Tuple[complex, complex, float]:
        return a(p), b(p), p["q"]
    return unpack

_LQJ_PARAMS = _lqj(lambda p: p["a"], lambda p: p["b"])
_LQL_PARAMS = _lqj(lambda p: 1.0, lambda p: 1.0)

def _lqj_series(unpack: _Unpack) -> Callable[[P, int, complex], Tuple[complex, Any]]:
    def series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
        a, b, q = unpack(p)
        return 1+0j, phi([q**-n, a*b*q**(n+1)], [a*q], q, q*x)
    return series

def _lqj_coefficients(unpack: _Unpack) -> Callable[[P, int], Tuple[complex, complex, complex]]:
    def coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
        a, b, q = unpack(p)
        qn = q**n
        ab = a*b
        A = qn*(1-a*q*qn)*(1-ab*q*qn)/((1-ab*q*qn*qn)*(1-ab*q*q*qn*qn))
        C = 0j if n == 0 else a*qn*(1-qn)*(1-b*qn)/((1-ab*qn*qn)*(1-ab*q*qn*qn))
        return A, -(A+C), C
    return coefficients

def _lqj_measure(unpack: _Unpack) -> Callable[[P], DiscreteMeasure]:
    def measure(p: P) -> DiscreteMeasure:
        a, b, q = unpack(p)
        return DiscreteMeasure(lambda k: q**k, lambda k: qp(b*q, q, k)/qp(q, q, k)*(a*q)**k)
    return measure

def _lqj_norm(unpack: _Unpack) -> Callable[[P, int], complex]:
    def norm(p: P, n: int) -> complex:
        a, b, q = unpack(p)
        ab = a*b
        return (qinf((ab*q*q,), q)/qinf((a*q,), q)*(1-ab*q)*(a*q)**n/(1-ab*q**(2*n+1))
                *qps((q, b*q), q, n)/qps((a*q, ab*q), q, n))
    return norm

def _lqj_equation(unpack: _Unpack) -> TermBuilder:
    def terms(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
        a, b, q = unpack(p)
        return three_point(eig, x, a*(b*q*x-1), x-1, y(q*x), y(x), y(x/q))
    return terms

def _lqj_eigenvalue(unpack: _Unpack) -> Callable[[P, int], complex]:
    def eigenvalue(p: P, n: int) -> complex:
        a, b, q = unpack(p)
        return q**-n*(1-q**n)*(1-a*b*q**(n+1))
    return eigenvalue

def _lqj_gf(unpack: _Unpack) -> Tuple[Callable[[P, complex, int], PowerSeries], Callable[[P, int], complex]]:
    def lhs(p: P, x: complex, order: int) -> PowerSeries:
        a, b, q = unpack(p)
        return series_gf(phi([0, 0], [a*q], q, x), order)*series_gf(phi([b*q*x], [b*q], q, 1), order)
    def coefficient(p: P, n: int) -> complex:
        _, b, q = unpack(p)
        return (-1)**n*q**binom2(n)/qps((b*q, q), q, n)
    return lhs, coefficient

def _little_family(name: str, title: str, unpack: _Unpack, **kwargs: Any) -> FamilyDescriptor:
    prefix = name.replace("-", "_")
    return add(FamilyDescriptor(
        name, title, "basic",
        variable=VariableMap.direct(),
        series=_lqj_series(unpack),
        recurrence=Recurrence(lambda p: (-1, 0), _lqj_coefficients(unpack)),
        normalizer=lambda p, n: 1,
        measure=_lqj_measure(unpack),
        norm=_lqj_norm(unpack),
        points=_LITTLE_POINTS,
        equations=(
            EquationSpec(f"{prefix}_qdifference", "QDIFFERENCE_X", _lqj_equation(unpack), _lqj_eigenvalue(unpack),
                         grid(0.1, 0.9, 5)),
        ),
        generating_functions=(
            GFSpec(f"{prefix}_gf", name, *_lqj_gf(unpack)),
        ),
        **kwargs
    ))

_little_family(
    "little-q-jacobi", "Little q-Jacobi", _LQJ_PARAMS,
    schema=params("a", "b", q=True),
    positivity=lambda p: require((0 < p["a"]*p["q"] < 1, "need 0 < aq < 1"), (p["b"]*p["q"] < 1, "need bq < 1")),
    sampler=lambda rng: {"a": real_in(rng, 0.1, 1.2), "b": real_in(rng, -0.9, 0.9), "q": qbase(rng, 0.3, 0.7)},
    defaults={"a": 0.5, "b": 0.4, "q": 0.5},
    norm_formula="(abq^2;q)_∞/(aq;q)_∞ (1-abq)(aq)^n/(1-abq^{2n+1}) (q, bq;q)_n/(aq, abq;q)_n",
)

# Little q-Legendre

_little_family(
    "little-q-legendre", "Little q-Legendre", _LQL_PARAMS,
    schema=params(q=True),
    positivity=no_violation,
    sampler=lambda rng: {"q": qbase(rng, 0.3, 0.7)},
    defaults={"q": 0.5},
    norm_formula="q^n/(1-q^{2n+1})",
)

# q-Meixner

def _qmeixner_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    b, c, q = p["b"], p["c"], p["q"]
    qn = q**n
    scale = q*qn*qn
    A = c*(1-b*q*qn)/scale
    C = q*(1-qn)*(c+qn)/scale
    return A, -(A+C), C

def _qmeixner_mass(p: P) -> Callable[[int], complex]:
    b, c, q = p["b"], p["c"], p["q"]
    def mass(x: int) -> complex:
        return qp(b*q, q, x)/qps((q, -b*c*q), q, x)*c**x*q**binom2(x)
    return mass

def _qmeixner_norm(p: P, n: int) -> complex:
    b, c, q = p["b"], p["c"], p["q"]
    return qinf((-c,), q)/qinf((-b*c*q,), q)*qps((q, -q/c), q, n)/qp(b*q, q, n)*q**-n

def _qmeixner_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    b, c, q = p["b"], p["c"], p["q"]
    qx = qpower(q, x)
    return three_point(eig, -1, c*qx*(1-b*q*qx), (1-qx)*(1+b*c*qx), y(x+1), y(x), y(x-1))

def _qmeixner_gf_c(p: P, x: complex, order: int) -> PowerSeries:
    b, c, q = p["b"], p["c"], p["q"]
    return qreciprocal_series(1, q, order)*series_gf(phi([qpower(q, -x)], [b*q], q, -q/c), order)

def _qmeixner_gf_b(p: P, x: complex, order: int) -> PowerSeries:
    b, c, q = p["b"], p["c"], p["q"]
    return qreciprocal_series(1, q, order)*series_gf(phi([-qpower(q, -x)/(b*c)], [-q/c], q, b*q), order)

add(FamilyDescriptor(
    "q-meixner", "q-Meixner", "basic",
    schema=params("b", "c", q=True),
    variable=VariableMap.qexp(),
    series=lambda p, n, x: (1+0j, phi([p["q"]**-n, qpower(p["q"], -x)], [p["b"]*p["q"]], p["q"],
                                      -p["q"]**(n+1)/p["c"])),
    recurrence=Recurrence(lambda p: (-1, 1), _qmeixner_coefficients),
    normalizer=lambda p, n: 1,
    measure=lambda p: DiscreteMeasure(lambda x: x, _qmeixner_mass(p)),
    norm=_qmeixner_norm,
    positivity=lambda p: require((0 < p["b"]*p["q"] < 1, "need 0 < bq < 1"), (p["c"] > 0, "need c > 0")),
    sampler=lambda rng: {"b": real_in(rng, 0.1, 1.2), "c": real_in(rng, 0.2, 2.0), "q": qbase(rng, 0.3, 0.7)},
    defaults={"b": 0.5, "c": 0.8, "q": 0.5},
    points=lattice_points(),
    equations=(
        EquationSpec("q_meixner_qdifference", "QDIFFERENCE_X", _qmeixner_equation,
                     lambda p, n: 1-p["q"]**n, grid(0.2, 2.8, 6)),
    ),
    generating_functions=(
        GFSpec("q_meixner_gf_c", "q-meixner", _qmeixner_gf_c, lambda p, n: 1/qp(p["q"], p["q"], n)),
        GFSpec("q_meixner_gf_b", "q-meixner", _qmeixner_gf_b,
               lambda p, n: qp(p["b"]*p["q"], p["q"], n)/qps((-p["q"]/p["c"], p["q"]), p["q"], n)),
    ),
    norm_formula="(-c;q)_∞/(-bcq;q)_∞ (q, -q/c;q)_n/(bq;q)_n q^{-n}",
))

# Quantum q-Krawtchouk

def _qtm_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    pp, N, q = p["p"], p["N"], p["q"]
    qn = q**n
    scale = pp*q*qn*qn
    A = (1-qn*q**-N)/scale
    C = q*(1-qn)*(1-pp*qn)/scale
    return A, -(A+C), C

def _qtm_mass(p: P) -> Callable[[int], complex]:
    pp, N, q = p["p"], p["N"], p["q"]
    def mass(x: int) -> complex:
        return qp(pp*q, q, N-x)/(qp(q, q, x)*qp(q, q, N-x))*(-1)**(N-x)*q**binom2(x)
    return mass

def _qtm_norm(p: P, n: int) -> complex:
    pp, N, q = p["p"], p["N"], p["q"]
    return ((-1)**n*pp**N*qp(q, q, N-n)*qps((q, pp*q), q, n)*q**(binom2(N+1)-binom2(n+1)+N*n)
            /qp(q, q, N)**2)

def _qtm_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    pp, N, q = p["p"], p["N"], p["q"]
    qx = qpower(q, x)
    B = -qx*(1-qx*q**-N)
    D = (1-qx)*(pp-qx*q**(-N-1))
    return three_point(eig, -pp, B, D, y(x+1), y(x), y(x-1))

def _qtm_gf(p: P, x: complex, order: int) -> PowerSeries:
    pp, N, q = p["p"], p["N"], p["q"]
    qx = qpower(q, x)
    prefactor = qproduct_series(1/qx, q, order)*qreciprocal_series(1, q, order)
    return prefactor*series_gf(phi([qx*q**-N, 0], [pp*q], q, 1/qx), order)

def _qtm_sampler(rng: Random) -> Dict[str, Any]:
    q = qbase(rng, 0.3, 0.7)
    N = rng.randint(3, 6)
    return {"p": q**-N*real_in(rng, 1.2, 3.0), "N": N, "q": q}

add(FamilyDescriptor(
    "quantum-q-krawtchouk", "Quantum q-Krawtchouk", "basic",
    schema=params("p", q=True, N=True),
    variable=VariableMap.qexp(),
    series=lambda p, n, x: (1+0j, phi([p["q"]**-n, qpower(p["q"], -x)], [p["q"]**-p["N"]], p["q"],
                                      p["p"]*p["q"]**(n+1), p["N"])),
    recurrence=Recurrence(lambda p: (1, -1), _qtm_coefficients),
    normalizer=lambda p, n: 1,
    measure=lambda p: DiscreteMeasure(lambda x: x, _qtm_mass(p), p["N"]+1),
    norm=_qtm_norm,
    positivity=lambda p: require((p["p"] > p["q"]**-p["N"], "need p > q^-N")),
    sampler=_qtm_sampler,
    defaults={"p": 40.0, "N": 4, "q": 0.5},
    points=lattice_points(),
    degree_bound=lambda p: p["N"],
    equations=(
        EquationSpec("quantum_q_krawtchouk_qdifference", "QDIFFERENCE_X", _qtm_equation,
                     lambda p, n: 1-p["q"]**n, grid(0.2, 2.8, 6)),
    ),
    generating_functions=(
        GFSpec("quantum_q_krawtchouk_gf", "quantum-q-krawtchouk", _qtm_gf,
               lambda p, n: qp(p["q"]**-p["N"], p["q"], n)/qps((p["p"]*p["q"], p["q"]), p["q"], n), "TRUNCATED"),
    ),
    norm_formula="(-1)^n p^N (q;q)_{N-n} (q, pq;q)_n q^{(N+1)N/2-(n+1)n/2+Nn}/(q, q;q)_N",
))

# q-Krawtchouk

def _qk_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    pp, N, q = p["p"], p["N"], p["q"]
    qn = q**n
    A = (1-qn*q**-N)*(1+pp*qn)/((1+pp*qn*qn)*(1+pp*q*qn*qn))
    C = 0j if n == 0 else -pp*qn*qn*q**(-N-1)*(1+pp*qn*q**N)*(1-qn)/((1+pp*qn*qn/q)*(1+pp*qn*qn))
    return A, -(A+C), C

def _qk_mass(p: P) -> Callable[[int], complex]:
    pp, N, q = p["p"], p["N"], p["q"]
    def mass(x: int) -> complex:
        return qp(q**-N, q, x)/qp(q, q, x)*(-pp)**-x
    return mass

def _qk_norm(p: P, n: int) -> complex:
    pp, N, q = p["p"], p["N"], p["q"]
    return (qps((q, -pp*q**(N+1)), q, n)/qps((-pp, q**-N), q, n)*(1+pp)/(1+pp*q**(2*n))
            *qp(-pp*q, q, N)*pp**-N*q**-binom2(N+1)*(-pp*q**-N)**n*q**(n*n))

def _qk_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    pp, N, q = p["p"], p["N"], p["q"]
    qx = qpower(q, x)
    return three_point(eig, 1, 1-qx*q**-N, -pp*(1-qx), y(x+1), y(x), y(x-1))

def _qk_gf_formal(p: P, x: complex, order: int) -> PowerSeries:
    pp, N, q = p["p"], p["N"], p["q"]
    qx = qpower(q, x)
    return series_gf(phi([qx*q**-N, 0], [], q, -1/qx), order)*series_gf(phi([1/qx], [0], q, pp*q), order)

def _qk_gf_n(p: P, x: complex, order: int) -> PowerSeries:
    pp, N, q = p["p"], p["N"], p["q"]
    qx = qpower(q, x)
    left = series_gf(phi([qx*q**-N, 0], [q**-N], q, 1/qx, N), order)
    right = series_gf(phi([], [-pp*q**(N+1)], q, -pp*q**(N+1)/qx), order)
    return left*right

add(FamilyDescriptor(
    "q-krawtchouk", "q-Krawtchouk", "basic",
    schema=params("p", q=True, N=True),
    variable=VariableMap.qexp(),
    series=lambda p, n, x: (1+0j, phi([p["q"]**-n, qpower(p["q"], -x), -p["p"]*p["q"]**n], [p["q"]**-p["N"], 0],
                                      p["q"], p["q"], p["N"])),
    recurrence=Recurrence(lambda p: (1, -1), _qk_coefficients),
    normalizer=lambda p, n: 1,
    measure=lambda p: DiscreteMeasure(lambda x: x, _qk_mass(p), p["N"]+1),
    norm=_qk_norm,
    positivity=lambda p: require((p["p"] > 0, "need p > 0")),
    sampler=lambda rng: {"p": real_in(rng, 0.1, 3.0), "N": rng.randint(3, 6), "q": qbase(rng, 0.3, 0.7)},
    defaults={"p": 0.5, "N": 4, "q": 0.5},
    points=lattice_points(),
    degree_bound=lambda p: p["N"],
    equations=(
        EquationSpec("q_krawtchouk_qdifference", "QDIFFERENCE_X", _qk_equation,
                     lambda p, n: p["q"]**-n*(1-p["q"]**n)*(1+p["p"]*p["q"]**n), grid(0.2, 2.8, 6)),
    ),
    generating_functions=(
        GFSpec("q_krawtchouk_gf_formal", "q-krawtchouk", _qk_gf_formal,
               lambda p, n: qp(p["q"]**-p["N"], p["q"], n)*p["q"]**-binom2(n)/qp(p["q"], p["q"], n), "TRUNCATED"),
        GFSpec("q_krawtchouk_gf_n", "q-krawtchouk", _qk_gf_n,
               lambda p, n: 1/qps((-p["p"]*p["q"]**(p["N"]+1), p["q"]), p["q"], n), "TRUNCATED"),
    ),
    norm_formula="(q, -pq^{N+1};q)_n/(-p, q^{-N};q)_n (1+p)/(1+pq^{2n}) (-pq;q)_N p^{-N} q^{-(N+1)N/2} "
                 "(-pq^{-N})^n q^{n^2}",
))

# Affine q-Krawtchouk

def _aqk_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    pp, N, q = p["p"], p["N"], p["q"]
    qn = q**n
    A = (1-qn*q**-N)*(1-pp*q*qn)
    C = -pp*qn*q**-N*(1-qn)
    return A, -(A+C), C

def _aqk_mass(p: P) -> Callable[[int], complex]:
    pp, N, q = p["p"], p["N"], p["q"]
    def mass(x: int) -> complex:
        return qp(pp*q, q, x)*qp(q, q, N)/(qp(q, q, x)*qp(q, q, N-x))*(pp*q)**-x
    return mass

def _aqk_norm(p: P, n: int) -> complex:
    pp, N, q = p["p"], p["N"], p["q"]
    return (pp*q)**(n-N)*qp(q, q, n)*qp(q, q, N-n)/(qp(pp*q, q, n)*qp(q, q, N))

def _aqk_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    pp, N, q = p["p"], p["N"], p["q"]
    qx = qpower(q, x)
    B = (1-qx*q**-N)*(1-pp*q*qx)
    D = -pp*(1-qx)*qx*q**-N
    return three_point(eig, 1, B, D, y(x+1), y(x), y(x-1))

def _aqk_gf_ratio(p: P, x: complex, order: int) -> PowerSeries:
    pp, N, q = p["p"], p["N"], p["q"]
    qx = qpower(q, x)
    prefactor = qproduct_series(q**-N, q, order)*qreciprocal_series(1/qx, q, order)
    return prefactor*series_gf(phi([1/qx], [pp*q], q, pp*q), order)

def _aqk_gf_product(p: P, x: complex, order: int) -> PowerSeries:
    pp, N, q = p["p"], p["N"], p["q"]
    qx = qpower(q, x)
    return qproduct_series(pp*q, q, order)*series_gf(phi([qx*q**-N, 0], [q**-N], q, 1/qx, N), order)

add(FamilyDescriptor(
    "affine-q-krawtchouk", "Affine q-Krawtchouk", "basic",
    schema=params("p", q=True, N=True),
    variable=VariableMap.qexp(),
    series=lambda p, n, x: (1+0j, phi([p["q"]**-n, 0, qpower(p["q"], -x)], [p["p"]*p["q"], p["q"]**-p["N"]],
                                      p["q"], p["q"], p["N"])),
    recurrence=Recurrence(lambda p: (1, -1), _aqk_coefficients),
    normalizer=lambda p, n: 1,
    measure=lambda p: DiscreteMeasure(lambda x: x, _aqk_mass(p), p["N"]+1),
    norm=_aqk_norm,
    positivity=lambda p: require((0 < p["p"]*p["q"] < 1, "need 0 < pq < 1")),
    sampler=lambda rng: {"p": real_in(rng, 0.1, 1.2), "N": rng.randint(3, 6), "q": qbase(rng, 0.3, 0.7)},
    defaults={"p": 0.5, "N": 4, "q": 0.5},
    points=lattice_points(),
    degree_bound=lambda p: p["N"],
    equations=(
        EquationSpec("affine_q_krawtchouk_qdifference", "QDIFFERENCE_X", _aqk_equation,
                     lambda p, n: p["q"]**-n*(1-p["q"]**n), grid(0.2, 2.8, 6)),
    ),
    generating_functions=(
        GFSpec("affine_q_krawtchouk_gf_ratio", "affine-q-krawtchouk", _aqk_gf_ratio,
               lambda p, n: qp(p["q"]**-p["N"], p["q"], n)/qp(p["q"], p["q"], n), "TRUNCATED"),
        GFSpec("affine_q_krawtchouk_gf_product", "affine-q-krawtchouk", _aqk_gf_product,
               lambda p, n: qp(p["p"]*p["q"], p["q"], n)/qp(p["q"], p["q"], n), "TRUNCATED"),
    ),
    norm_formula="(pq)^{n-N} (q;q)_n (q;q)_{N-n}/((pq;q)_n (q;q)_N)",
))

# Dual q-Krawtchouk

def _dqk_product(p: P) -> complex:
    return p["c"]*p["q"]**-p["N"]

def _dqk_series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
    c, N, q = p["c"], p["N"], p["q"]
    qx = qpower(q, x)
    return 1+0j, phi([q**-n, 1/qx, c*qx*q**-N], [q**-N, 0], q, q, N)

def _dqk_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    N, q = p["N"], p["q"]
    qn = q**n
    A = 1-qn*q**-N
    C = _dqk_product(p)*(1-qn)
    return A, -(A+C), C

def _dqk_mass(p: P) -> Callable[[int], complex]:
    c, N, q = p["c"], p["N"], p["q"]
    cqN = c*q**-N
    def mass(x: int) -> complex:
        return (qps((cqN, q**-N), q, x)/qps((q, c*q), q, x)*(1-cqN*q**(2*x))/(1-cqN)
                *c**-x*q**(x*(2*N-x)))
    return mass

def _dqk_norm(p: P, n: int) -> complex:
    c, N, q = p["c"], p["N"], p["q"]
    return qp(1/c, q, N)*qp(q, q, n)/qp(q**-N, q, n)*_dqk_product(p)**n

def _dqk_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    c, N, q = p["c"], p["N"], p["q"]
    qx = qpower(q, x)
    cqN = c*q**-N
    B = (1-qx*q**-N)*(1-cqN*qx)/((1-cqN*qx*qx)*(1-cqN*q*qx*qx))
    D = cqN*qx*qx*q**(-N-1)*(1-qx)*(1-c*qx)/((1-cqN*qx*qx/q)*(1-cqN*qx*qx))
    return three_point(eig, 1, B, D, y(x+1), y(x), y(x-1))

def _dqk_gf_product(p: P, x: complex, order: int) -> PowerSeries:
    c, N, q = p["c"], p["N"], p["q"]
    qx = qpower(q, x)
    cqN = c*q**-N
    return (qproduct_series(q**-N, q, order)*qproduct_series(cqN, q, order)
            *qreciprocal_series(1/qx, q, order)*qreciprocal_series(cqN*qx, q, order))

def _dqk_gf_phi(p: P, x: complex, order: int) -> PowerSeries:
    c, N, q = p["c"], p["N"], p["q"]
    qx = qpower(q, x)
    return qreciprocal_series(1/qx, q, order)*series_gf(phi([1/qx, 1/(c*qx)], [q**-N], q, c*qx*q**-N, N), order)

def _dqk_positivity(p: P) -> Optional[str]:
    mass = _dqk_mass(p)
    return positive_masses([(complex(x), mass(x)) for x in range(p["N"]+1)])

add(FamilyDescriptor(
    "dual-q-krawtchouk", "Dual q-Krawtchouk", "basic",
    schema=params("c", q=True, N=True),
    variable=VariableMap.qlattice_dual(_dqk_product),
    series=_dqk_series,
    recurrence=Recurrence(lambda p: (1, -1-_dqk_product(p)), _dqk_coefficients),
    normalizer=lambda p, n: 1,
    measure=lambda p: DiscreteMeasure(lambda x: x, _dqk_mass(p), p["N"]+1),
    norm=_dqk_norm,
    positivity=_dqk_positivity,
    sampler=lambda rng: {"c": -real_in(rng, 0.1, 2.0), "N": rng.randint(3, 6), "q": qbase(rng, 0.3, 0.7)},
    defaults={"c": -0.5, "N": 4, "q": 0.5},
    points=lattice_points(),
    degree_bound=lambda p: p["N"],
    equations=(
        EquationSpec("dual_q_krawtchouk_qdifference", "QDIFFERENCE_X", _dqk_equation,
                     lambda p, n: p["q"]**-n*(1-p["q"]**n), grid(0.2, 2.8, 6)),
    ),
    generating_functions=(
        GFSpec("dual_q_krawtchouk_gf_product", "dual-q-krawtchouk", _dqk_gf_product,
               lambda p, n: qp(p["q"]**-p["N"], p["q"], n)/qp(p["q"], p["q"], n), "TRUNCATED"),
        GFSpec("dual_q_krawtchouk_gf_phi", "dual-q-krawtchouk", _dqk_gf_phi,
               lambda p, n: 1/qp(p["q"], p["q"], n), "TRUNCATED"),
    ),
    norm_formula="(1/c;q)_N (q;q)_n/(q^{-N};q)_n (cq^{-N})^n",
))

# Continuous big q-Hermite

_CBQH = AskeyWilsonForm(lambda p: (p["a"],))

def _cbqh_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    a, q = p["a"], p["q"]
    qn = q**n
    return 1+0j, complex(a*qn), complex(1-qn)

add(FamilyDescriptor(
    "continuous-big-q-hermite", "Continuous big q-Hermite", "basic",
    schema=params("a", q=True),
    variable=VariableMap.trig(),
    series=_CBQH.series,
    recurrence=Recurrence(lambda p: (2, 0), _cbqh_coefficients),
    normalizer=lambda p, n: 1,
    measure=_CBQH.measure,
    norm=_CBQH.norm,
    positivity=_CBQH.positivity,
    sampler=aw_sampler("a"),
    defaults={"a": 0.5, "q": 0.5},
    points=TRIG_POINTS,
    equations=(
        _CBQH.z_equation("continuous_big_q_hermite_qdifference"),
        _CBQH.dq_equation("continuous_big_q_hermite_qderivative"),
    ),
    generating_functions=(
        _CBQH.product_gf("continuous-big-q-hermite"),
    ),
    norm_formula="1/(q^{n+1};q)_∞",
))

# Continuous q-Laguerre

def _cql_alphas(p: P) -> Tuple[complex, ...]:
    al, q = p["alpha"], p["q"]
    return (q**(al/2+0.25), q**(al/2+0.75))

def _cql_rahman_alphas(p: P) -> Tuple[complex, ...]:
    al, q = p["alpha"], p["q"]
    s = math.sqrt(q)
    return (s, q**(al+0.5), -s)

def _cql_kappa(p: P, n: int) -> complex:
    q = p["q"]
    return qp(q**(p["alpha"]+1), q, n)/qp(q, q, n)

def _cql_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    al, q = p["alpha"], p["q"]
    qn = q**n
    e = q**(al/2+0.25)
    C = 0j if n == 0 else e*(1-qn*q**al)
    return (1-q*qn)/e, qn*e*(1+math.sqrt(q)), C

def _cql_rahman_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    al, q = p["alpha"], p["q"]
    s = math.sqrt(q)
    C = 0j if n == 0 else s*(1-q**(2*n+2*al))
    return (1-q**(2*n+2))/s, q**(2*n+al+0.5)*(1+q), C

def _cql_gf_product(p: P, x: complex, order: int) -> PowerSeries:
    al, q = p["alpha"], p["q"]
    z = trig_z(x)
    e = q**(al/2+0.25)
    return (qproduct_series(q**(al+0.5), q, order)*qproduct_series(q**(al+1), q, order)
            *qreciprocal_series(e*z, q, order)*qreciprocal_series(e/z, q, order))

_CQLAG = AskeyWilsonForm(_cql_alphas, _cql_kappa)
_CQLAG_RAHMAN = AskeyWilsonForm(_cql_rahman_alphas, _cql_kappa)

def _cql_positivity(p: P) -> Optional[str]:
    return require((p["alpha"] >= -0.5, "need alpha >= -1/2"))

def _cql_sampler(rng: Random) -> Dict[str, Any]:
    return {"alpha": real_in(rng, -0.4, 2.0), "q": qbase(rng, 0.25, 0.75)}

add(FamilyDescriptor(
    "continuous-q-laguerre", "Continuous q-Laguerre", "basic",
    schema=params("alpha", q=True),
    variable=VariableMap.trig(),
    series=_CQLAG.series,
    recurrence=Recurrence(lambda p: (2, 0), _cql_coefficients),
    normalizer=lambda p, n: 1,
    measure=_CQLAG.measure,
    norm=_CQLAG.norm,
    positivity=_cql_positivity,
    sampler=_cql_sampler,
    defaults={"alpha": 0.5, "q": 0.5},
    points=TRIG_POINTS,
    equations=(
        _CQLAG.z_equation("continuous_q_laguerre_qdifference"),
        _CQLAG.dq_equation("continuous_q_laguerre_qderivative"),
    ),
    generating_functions=(
        GFSpec("continuous_q_laguerre_gf_product", "continuous-q-laguerre", _cql_gf_product, lambda p, n: 1),
        _CQLAG.pair_gf("continuous-q-laguerre", "ab", (0, 1)),
    ),
    norm_formula="1/(q, q^{α+1};q)_∞ (q^{α+1};q)_n/(q;q)_n q^{(α+1/2)n}",
))

add(FamilyDescriptor(
    "continuous-q-laguerre-rahman", "Continuous q-Laguerre (Rahman normalization)", "basic",
    schema=params("alpha", q=True),
    variable=VariableMap.trig(),
    series=_CQLAG_RAHMAN.series,
    recurrence=Recurrence(lambda p: (2, 0), _cql_rahman_coefficients),
    normalizer=lambda p, n: 1,
    measure=_CQLAG_RAHMAN.measure,
    norm=_CQLAG_RAHMAN.norm,
    positivity=_cql_positivity,
    sampler=_cql_sampler,
    defaults={"alpha": 0.5, "q": 0.5},
    points=TRIG_POINTS,
    equations=(
        _CQLAG_RAHMAN.z_equation("continuous_q_laguerre_rahman_qdifference"),
        _CQLAG_RAHMAN.dq_equation("continuous_q_laguerre_rahman_qderivative"),
    ),
    generating_functions=(
        _CQLAG_RAHMAN.pair_gf("continuous-q-laguerre-rahman", "ab", (0, 1)),
        _CQLAG_RAHMAN.pair_gf("continuous-q-laguerre-rahman", "ac", (0, 2)),
        _CQLAG_RAHMAN.pair_gf("continuous-q-laguerre-rahman", "bc", (1, 2)),
    ),
    norm_formula="1/(q, -q, q^{α+1}, -q^{α+1};q)_∞ (q^{α+1}, -q^{α+1};q)_n/(q, -q;q)_n q^n",
))

# Little q-Laguerre (Wall)

def _lql_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    a, q = p["a"], p["q"]
    qn = q**n
    A = qn*(1-a*q*qn)
    C = a*qn*(1-qn)
    return A, -(A+C), C

def _lql_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    a, q = p["a"], p["q"]
    return three_point(eig, -x, a, 1-x, y(q*x), y(x), y(x/q))

def _lql_gf(p: P, x: complex, order: int) -> PowerSeries:
    a, q = p["a"], p["q"]
    return qproduct_series(1, q, order)*series_gf(phi([0, 0], [a*q], q, x), order)

add(FamilyDescriptor(
    "little-q-laguerre", "Little q-Laguerre (Wall)", "basic",
    schema=params("a", q=True),
    variable=VariableMap.direct(),
    series=lambda p, n, x: (1+0j, phi([p["q"]**-n, 0], [p["a"]*p["q"]], p["q"], p["q"]*x)),
    recurrence=Recurrence(lambda p: (-1, 0), _lql_coefficients),
    normalizer=lambda p, n: 1,
    measure=lambda p: DiscreteMeasure(lambda k: p["q"]**k, lambda k: (p["a"]*p["q"])**k/qp(p["q"], p["q"], k)),
    norm=lambda p, n: ((p["a"]*p["q"])**n/qinf((p["a"]*p["q"],), p["q"])
                       *qp(p["q"], p["q"], n)/qp(p["a"]*p["q"], p["q"], n)),
    positivity=lambda p: require((0 < p["a"]*p["q"] < 1, "need 0 < aq < 1")),
    sampler=lambda rng: {"a": real_in(rng, 0.1, 1.2), "q": qbase(rng, 0.3, 0.7)},
    defaults={"a": 0.5, "q": 0.5},
    points=_LITTLE_POINTS,
    equations=(
        EquationSpec("little_q_laguerre_qdifference", "QDIFFERENCE_X", _lql_equation,
                     lambda p, n: p["q"]**-n*(1-p["q"]**n), grid(0.1, 0.9, 5)),
    ),
    generating_functions=(
        GFSpec("little_q_laguerre_gf", "little-q-laguerre", _lql_gf,
               lambda p, n: (-1)**n*p["q"]**binom2(n)/qp(p["q"], p["q"], n)),
    ),
    norm_formula="(aq)^n/(aq;q)_∞ (q;q)_n/(aq;q)_n",
))

# q-Laguerre

def _qlag_series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
    al, q = p["alpha"], p["q"]
    qa = q**(al+1)
    return qp(qa, q, n)/qp(q, q, n), phi([q**-n], [qa], q, -x*q**n*qa)

def _qlag_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    # C_0 enters B_0 and is kept
    al, q = p["alpha"], p["q"]
    qn = q**n
    scale = qn*qn*q**(al+1)
    A = (1-q*qn)/scale
    C = q*(1-qn*q**al)/scale
    return A, -(A+C), C

def _qlag_measure(p: P) -> ContinuousMeasure:
    al, q = p["alpha"], p["q"]
    def weight(u: float) -> float:
        return math.exp(u*(al+1)-log_qinf_plus(u, q))
    return ContinuousMeasure(weight, -math.inf, math.inf, math.exp)

def _qlag_gamma_product(al: float, q: float) -> complex:
    # (q^{-alpha};q)_inf Gamma(-alpha) Gamma(alpha+1), with its limit at non-negative integers
    m = round(al)
    if m >= 0 and abs(al-m) <= 1e-9:
        prod = 1.0
        for j in range(1, m+1):
            prod *= 1-q**-j
        return (-1)**(m+1)*math.log(q)*prod*qinf((q,), q)
    return qinf((q**-al,), q)*gamma(-al)*gamma(al+1)

def _qlag_norm(p: P, n: int) -> complex:
    al, q = p["alpha"], p["q"]
    qa = q**(al+1)
    return _qlag_gamma_product(al, q)/qinf((q,), q)*qp(qa, q, n)/(qp(q, q, n)*q**n)

def _qlag_bilateral_mass(p: P) -> Callable[[int], float]:
    al, c, q = p["alpha"], p["c"], p["q"]
    lc, lq = math.log(c), math.log(q)
    def mass(k: int) -> float:
        return math.exp(k*(al+1)*lq-log_qinf_plus(lc+k*lq, q))
    return mass

def _qlag_bilateral_measure(p: P) -> BilateralMeasure:
    c, q = p["c"], p["q"]
    return BilateralMeasure(lambda k: c*q**k, _qlag_bilateral_mass(p))

def _qlag_bilateral_norm(p: P, n: int) -> complex:
    al, c, q = p["alpha"], p["c"], p["q"]
    qa = q**(al+1)
    return (qinf((q, -c*qa, -q**-al/c), q)*qp(qa, q, n)
            /(qinf((qa, -c, -q/c), q)*qp(q, q, n)*q**n))

def _qlag_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    al, q = p["alpha"], p["q"]
    qa = q**al
    return three_point(eig, -qa*x, qa*(1+x), 1, y(q*x), y(x), y(x/q))

def _qlag_gf_phi(p: P, x: complex, order: int) -> PowerSeries:
    al, q = p["alpha"], p["q"]
    prefactor = qproduct_series(-x, q, order)*qreciprocal_series(1, q, order)
    return prefactor*series_gf(phi([0, 0], [q**(al+1)], q, -x), order)

def _qlag_gf_reciprocal(p: P, x: complex, order: int) -> PowerSeries:
    al, q = p["alpha"], p["q"]
    return qreciprocal_series(1, q, order)*series_gf(phi([-x], [0], q, q**(al+1)), order)

add(FamilyDescriptor(
    "q-laguerre", "q-Laguerre", "basic",
    schema=(*params("alpha"), ParamInfo("c", "real", "lattice offset of the discrete orthogonality"),
            *params(q=True)),
    variable=VariableMap.direct(),
    series=_qlag_series,
    recurrence=Recurrence(lambda p: (-1, 0), _qlag_coefficients),
    normalizer=lambda p, n: 1,
    measure=_qlag_measure,
    norm=_qlag_norm,
    positivity=lambda p: require((p["alpha"] > -1, "need alpha > -1"), (p["c"] > 0, "need c > 0")),
    sampler=lambda rng: {"alpha": real_in(rng, -0.5, 2.0), "c": real_in(rng, 0.3, 2.0), "q": qbase(rng, 0.3, 0.7)},
    defaults={"alpha": 0.5, "c": 1.0, "q": 0.5},
    points=grid(-0.9, 2.5, 6),
    equations=(
        EquationSpec("q_laguerre_qdifference", "QDIFFERENCE_X", _qlag_equation,
                     lambda p, n: 1-p["q"]**n, grid(0.2, 2.5, 5)),
    ),
    generating_functions=(
        GFSpec("q_laguerre_gf_phi", "q-laguerre", _qlag_gf_phi, lambda p, n: 1/qp(p["q"]**(p["alpha"]+1), p["q"], n)),
        GFSpec("q_laguerre_gf_reciprocal", "q-laguerre", _qlag_gf_reciprocal, lambda p, n: 1),
    ),
    norm_formula="(q^{-α};q)_∞/(q;q)_∞ (q^{α+1};q)_n/((q;q)_n q^n) Γ(-α)Γ(α+1)",
    orthogonalities=(
        Orthogonality("bilateral", _qlag_bilateral_measure, _qlag_bilateral_norm),
    ),
))

# Alternative q-Charlier

def _acharlier_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    a, q = p["a"], p["q"]
    qn = q**n
    A = qn*(1+a*qn)/((1+a*qn*qn)*(1+a*q*qn*qn))
    C = 0j if n == 0 else a*qn*qn/q*(1-qn)/((1+a*qn*qn/q)*(1+a*qn*qn))
    return A, -(A+C), C

def _acharlier_norm(p: P, n: int) -> complex:
    a, q = p["a"], p["q"]
    return qp(q, q, n)*qinf((-a*q**n,), q)*a**n*q**binom2(n+1)/(1+a*q**(2*n))

def _acharlier_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    a, q = p["a"], p["q"]
    return three_point(eig, -x, a*x, 1-x, y(q*x), y(x), y(x/q))

def _acharlier_gf(p: P, x: complex, order: int) -> PowerSeries:
    # the 1phi3 has t in its parameters, so it is summed term by term as power series in t
    a, q = p["a"], p["q"]
    t = variable(order)
    block = PowerSeries.constant(1, order)
    total = PowerSeries.constant(0, order)
    for k in range(order+1):
        total = total+block*(q**(3*binom2(k))*(a*q*x)**k/qp(q, q, k))
        block = block*(1-t*(x*q**k))/(1-t*q**k)*t
    return qproduct_series(1, q, order)*qreciprocal_series(x, q, order)*total

def _acharlier_gf_formal(p: P, x: complex, order: int) -> PowerSeries:
    a, q = p["a"], p["q"]
    return series_gf(phi([1/x, 0], [], q, x), order)*series_gf(phi([], [0], q, -a*q*x), order)

add(FamilyDescriptor(
    "alternative-q-charlier", "Alternative q-Charlier", "basic",
    schema=params("a", q=True),
    variable=VariableMap.direct(),
    series=lambda p, n, x: (1+0j, phi([p["q"]**-n, -p["a"]*p["q"]**n], [0], p["q"], p["q"]*x)),
    recurrence=Recurrence(lambda p: (-1, 0), _acharlier_coefficients),
    normalizer=lambda p, n: 1,
    measure=lambda p: DiscreteMeasure(lambda k: p["q"]**k,
                                      lambda k: p["a"]**k*p["q"]**binom2(k+1)/qp(p["q"], p["q"], k)),
    norm=_acharlier_norm,
    positivity=lambda p: require((p["a"] > 0, "need a > 0")),
    sampler=lambda rng: {"a": real_in(rng, 0.1, 3.0), "q": qbase(rng, 0.3, 0.7)},
    defaults={"a": 0.5, "q": 0.5},
    points=_LITTLE_POINTS,
    equations=(
        EquationSpec("alternative_q_charlier_qdifference", "QDIFFERENCE_X", _acharlier_equation,
                     lambda p, n: p["q"]**-n*(1-p["q"]**n)*(1+p["a"]*p["q"]**n), grid(0.1, 0.9, 5)),
    ),
    generating_functions=(
        GFSpec("alternative_q_charlier_gf", "alternative-q-charlier", _acharlier_gf,
               lambda p, n: (-1)**n*p["q"]**binom2(n)/qp(p["q"], p["q"], n)),
        GFSpec("alternative_q_charlier_gf_formal", "alternative-q-charlier", _acharlier_gf_formal,
               lambda p, n: 1/qp(p["q"], p["q"], n), "FORMAL"),
    ),
    norm_formula="(q;q)_n (-aq^n;q)_∞ a^n q^{n(n+1)/2}/(1+aq^{2n})",
))

# q-Charlier

def _qcharlier_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    a, q = p["a"], p["q"]
    qn = q**n
    scale = q*qn*qn
    A = a/scale
    C = q*(1-qn)*(a+qn)/scale
    return A, -(A+C), C

def _qcharlier_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    a, q = p["a"], p["q"]
    qx = qpower(q, x)
    return three_point(eig, -1, a*qx, 1-qx, y(x+1), y(x), y(x-1))

def _qcharlier_gf_reciprocal(p: P, x: complex, order: int) -> PowerSeries:
    a, q = p["a"], p["q"]
    return qreciprocal_series(1, q, order)*series_gf(phi([qpower(q, -x)], [0], q, -q/a), order)

def _qcharlier_gf_product(p: P, x: complex, order: int) -> PowerSeries:
    a, q = p["a"], p["q"]
    qx = qpower(q, x)
    prefactor = qproduct_series(1/qx, q, order)*qreciprocal_series(1, q, order)
    return prefactor*series_gf(phi([0, 0], [-q/a], q, 1/qx), order)

add(FamilyDescriptor(
    "q-charlier", "q-Charlier", "basic",
    schema=params("a", q=True),
    variable=VariableMap.qexp(),
    series=lambda p, n, x: (1+0j, phi([p["q"]**-n, qpower(p["q"], -x)], [0], p["q"], -p["q"]**(n+1)/p["a"])),
    recurrence=Recurrence(lambda p: (-1, 1), _qcharlier_coefficients),
    normalizer=lambda p, n: 1,
    measure=lambda p: DiscreteMeasure(lambda x: x, lambda x: p["a"]**x*p["q"]**binom2(x)/qp(p["q"], p["q"], x)),
    norm=lambda p, n: p["q"]**-n*qinf((-p["a"],), p["q"])*qps((-p["q"]/p["a"], p["q"]), p["q"], n),
    positivity=lambda p: require((p["a"] > 0, "need a > 0")),
    sampler=lambda rng: {"a": real_in(rng, 0.1, 3.0), "q": qbase(rng, 0.3, 0.7)},
    defaults={"a": 0.5, "q": 0.5},
    points=lattice_points(),
    equations=(
        EquationSpec("q_charlier_qdifference", "QDIFFERENCE_X", _qcharlier_equation,
                     lambda p, n: 1-p["q"]**n, grid(0.2, 2.8, 6)),
    ),
    generating_functions=(
        GFSpec("q_charlier_gf_reciprocal", "q-charlier", _qcharlier_gf_reciprocal, lambda p, n: 1/qp(p["q"], p["q"], n)),
        GFSpec("q_charlier_gf_product", "q-charlier", _qcharlier_gf_product,
               lambda p, n: 1/qps((-p["q"]/p["a"], p["q"]), p["q"], n)),
    ),
    norm_formula="q^{-n} (-a;q)_∞ (-q/a, q;q)_n",
))
