"""
    Big q-Jacobi, q-Hahn, dual q-Hahn and big q-Laguerre polynomials, plus the families in :math:`x = \\cos\\theta`
    one step below the Askey-Wilson polynomials: Al-Salam-Chihara, q-Meixner-Pollaczek, continuous q-Jacobi
    (in both normalizations), continuous q-ultraspherical and continuous q-Legendre.
"""

from __future__ import annotations

import cmath
import math
from random import Random
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

from ...measures import DiscreteMeasure, JacksonMeasure
from ...powerseries import PowerSeries
from ..descriptor import (EquationSpec, Evaluation, FamilyDescriptor, GFSpec, Recurrence, TermBuilder, VariableMap,
                          params, qpower, three_point, trig_z)
from . import (P, add, binom2, grid, lattice_points, phi, positive_masses, qbase, qinf, qp, qproduct_series, qps,
               qreciprocal_series, real_in, require, series_gf)
from .askey_wilson import TRIG_POINTS, AskeyWilsonForm, aw_sampler

_BIG_POINTS = grid(-0.8, 0.9, 6)

_Unpack = Callable[[P], Tuple[complex, complex, complex, float]]

# Big q-Jacobi

def _bqj(a: Callable[[P], complex], b: Callable[[P], complex]) -> _Unpack:
    # big q-Legendre is big q-Jacobi at a = b = 1
    def unpack(p: P) -> Tuple[complex, complex, complex, float]:
        return a(p), b(p), p["c"], p["q"]
    return unpack

_BQJ_PARAMS = _bqj(lambda p: p["a"], lambda p: p["b"])
_BQL_PARAMS = _bqj(lambda p: 1.0, lambda p: 1.0)

def _bqj_series(unpack: _Unpack) -> Callable[[P, int, complex], Tuple[complex, Any]]:
    def series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
        a, b, c, q = unpack(p)
        return 1+0j, phi([q**-n, a*b*q**(n+1), x], [a*q, c*q], q, q)
    return series

def _bqj_coefficients(unpack: _Unpack) -> Callable[[P, int], Tuple[complex, complex, complex]]:
    def coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
        a, b, c, q = unpack(p)
        qn = q**n
        ab = a*b
        A = (1-a*q*qn)*(1-c*q*qn)*(1-ab*q*qn)/((1-ab*q*qn*qn)*(1-ab*q*q*qn*qn))
        if n == 0:
            C = 0j
        else:
            C = -a*c*q*qn*(1-qn)*(1-b*qn)*(1-ab*qn/c)/((1-ab*qn*qn)*(1-ab*q*qn*qn))
        return A, -(A+C), C
    return coefficients

def _bqj_measure(unpack: _Unpack) -> Callable[[P], JacksonMeasure]:
    def measure(p: P) -> JacksonMeasure:
        a, b, c, q = unpack(p)
        def weight(x: complex) -> complex:
            return qinf((x/a, x/c), q)/qinf((x, b*x/c), q)
        return JacksonMeasure(weight, c*q, a*q, q)
    return measure

def _bqj_norm(unpack: _Unpack) -> Callable[[P, int], complex]:
    def norm(p: P, n: int) -> complex:
        a, b, c, q = unpack(p)
        ab = a*b
        const = a*q*(1-q)*qinf((q, c/a, a*q/c, ab*q*q), q)/qinf((a*q, b*q, c*q, ab*q/c), q)
        return (const*(1-ab*q)/(1-ab*q**(2*n+1))*qps((q, b*q, ab*q/c), q, n)/qps((ab*q, a*q, c*q), q, n)
                *(-a*c*q*q)**n*q**binom2(n))
    return norm

def _bqj_equation(unpack: _Unpack) -> TermBuilder:
    def terms(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
        a, b, c, q = unpack(p)
        B = a*q*(x-1)*(b*x-c)
        D = (x-a*q)*(x-c*q)
        return three_point(eig, x*x, B, D, y(q*x), y(x), y(x/q))
    return terms

def _bqj_eigenvalue(unpack: _Unpack) -> Callable[[P, int], complex]:
    def eigenvalue(p: P, n: int) -> complex:
        a, b, _, q = unpack(p)
        return q**-n*(1-q**n)*(1-a*b*q**(n+1))
    return eigenvalue

def _bqj_gf_a(unpack: _Unpack) -> Tuple[Callable[[P, complex, int], PowerSeries], Callable[[P, int], complex]]:
    def lhs(p: P, x: complex, order: int) -> PowerSeries:
        a, b, c, q = unpack(p)
        return series_gf(phi([a*q/x, 0], [a*q], q, x), order)*series_gf(phi([b*x/c], [b*q], q, c*q), order)
    def coefficient(p: P, n: int) -> complex:
        _, b, c, q = unpack(p)
        return qp(c*q, q, n)/qps((b*q, q), q, n)
    return lhs, coefficient

def _bqj_gf_c(unpack: _Unpack) -> Tuple[Callable[[P, complex, int], PowerSeries], Callable[[P, int], complex]]:
    def lhs(p: P, x: complex, order: int) -> PowerSeries:
        a, b, c, q = unpack(p)
        return series_gf(phi([c*q/x, 0], [c*q], q, x), order)*series_gf(phi([b*x/c], [a*b*q/c], q, a*q), order)
    def coefficient(p: P, n: int) -> complex:
        a, b, c, q = unpack(p)
        return qp(a*q, q, n)/qps((a*b*q/c, q), q, n)
    return lhs, coefficient

def _bqj_positivity(p: P) -> Optional[str]:
    a, b, c, q = p["a"], p["b"], p["c"], p["q"]
    return require((0 < a*q < 1, "need 0 < aq < 1"), (0 <= b*q < 1, "need 0 <= bq < 1"), (c < 0, "need c < 0"))

def _bqj_sampler(rng: Random) -> Dict[str, Any]:
    return {"a": real_in(rng, 0.1, 0.9), "b": real_in(rng, 0.0, 0.9), "c": -real_in(rng, 0.1, 0.9),
            "q": qbase(rng, 0.3, 0.7)}

def _big_family(name: str, title: str, unpack: _Unpack,
                **kwargs: Any) -> FamilyDescriptor:
    gf_a, gf_c = _bqj_gf_a(unpack), _bqj_gf_c(unpack)
    prefix = name.replace("-", "_")
    return add(FamilyDescriptor(
        name, title, "basic",
        variable=VariableMap.direct(),
        series=_bqj_series(unpack),
        recurrence=Recurrence(lambda p: (1, -1), _bqj_coefficients(unpack)),
        normalizer=lambda p, n: 1,
        measure=_bqj_measure(unpack),
        norm=_bqj_norm(unpack),
        points=_BIG_POINTS,
        equations=(
            EquationSpec(f"{prefix}_qdifference", "QDIFFERENCE_X", _bqj_equation(unpack), _bqj_eigenvalue(unpack),
                         grid(-0.8, 0.9, 5)),
        ),
        generating_functions=(
            GFSpec(f"{prefix}_gf_a", name, *gf_a),
            GFSpec(f"{prefix}_gf_c", name, *gf_c),
        ),
        **kwargs
    ))

_big_family(
    "big-q-jacobi", "Big q-Jacobi", _BQJ_PARAMS,
    schema=params("a", "b", "c", q=True),
    positivity=_bqj_positivity,
    sampler=_bqj_sampler,
    defaults={"a": 0.5, "b": 0.4, "c": -0.6, "q": 0.5},
    norm_formula="aq(1-q)(q, c/a, aq/c, abq^2;q)_∞/(aq, bq, cq, abq/c;q)_∞ (1-abq)/(1-abq^{2n+1}) "
                 "(q, bq, abq/c;q)_n/(abq, aq, cq;q)_n (-acq^2)^n q^{n(n-1)/2}",
)

# Big q-Legendre

_big_family(
    "big-q-legendre", "Big q-Legendre", _BQL_PARAMS,
    schema=params("c", q=True),
    positivity=lambda p: require((p["c"] < 0, "need c < 0")),
    sampler=lambda rng: {"c": -real_in(rng, 0.1, 0.9), "q": qbase(rng, 0.3, 0.7)},
    defaults={"c": -0.5, "q": 0.5},
    norm_formula="q(1-c)(1-q)/(1-q^{2n+1}) (q/c;q)_n/(cq;q)_n (-cq^2)^n q^{n(n-1)/2}",
)

# q-Hahn

def _qhahn_series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
    al, be, N, q = p["alpha"], p["beta"], p["N"], p["q"]
    return 1+0j, phi([q**-n, al*be*q**(n+1), qpower(q, -x)], [al*q, q**-N], q, q, N)

def _qhahn_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    al, be, N, q = p["alpha"], p["beta"], p["N"], p["q"]
    qn = q**n
    A = (1-qn*q**-N)*(1-al*q*qn)*(1-al*be*q*qn)/((1-al*be*q*qn*qn)*(1-al*be*q*q*qn*qn))
    C = -al*qn*(1-qn)*(1-be*qn)*(q**-N-al*be*q*qn)/((1-al*be*qn*qn)*(1-al*be*q*qn*qn))
    return A, -(A+C), C

def _qhahn_mass(p: P) -> Callable[[int], complex]:
    al, be, N, q = p["alpha"], p["beta"], p["N"], p["q"]
    def mass(x: int) -> complex:
        return qps((al*q, q**-N), q, x)/qps((q, q**-N/be), q, x)/(al*be*q)**x
    return mass

def _qhahn_norm(p: P, n: int) -> complex:
    al, be, N, q = p["alpha"], p["beta"], p["N"], p["q"]
    const = qp(al*be*q*q, q, N)/(qp(be*q, q, N)*(al*q)**N)
    return (const*qps((q, be*q, al*be*q**(N+2)), q, n)/qps((al*be*q, al*q, q**-N), q, n)
            *(1-al*be*q)*(-al*q)**n/(1-al*be*q**(2*n+1))*q**(binom2(n)-N*n))

def _qhahn_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    al, be, N, q = p["alpha"], p["beta"], p["N"], p["q"]
    qx = qpower(q, x)
    B = (1-qx*q**-N)*(1-al*q*qx)
    D = al*q*(1-qx)*(be-qx*q**(-N-1))
    return three_point(eig, 1, B, D, y(x+1), y(x), y(x-1))

def _qhahn_gf_beta(p: P, x: complex, order: int) -> PowerSeries:
    al, be, N, q = p["alpha"], p["beta"], p["N"], p["q"]
    qx = qpower(q, x)
    return series_gf(phi([qx*q**-N, 0], [be*q], q, 1/qx), order)*series_gf(phi([1/qx], [al*q], q, al*q), order)

def _qhahn_gf_n(p: P, x: complex, order: int) -> PowerSeries:
    al, be, N, q = p["alpha"], p["beta"], p["N"], p["q"]
    qx = qpower(q, x)
    left = series_gf(phi([qx*q**-N, 0], [q**-N], q, 1/qx, N), order)
    right = series_gf(phi([be*q**(N+1)/qx], [al*be*q**(N+2)], q, al*q), order)
    return left*right

def _qhahn_positivity(p: P) -> Optional[str]:
    mass = _qhahn_mass(p)
    return positive_masses([(complex(x), mass(x)) for x in range(p["N"]+1)])

def _qhahn_sampler(rng: Random) -> Dict[str, Any]:
    return {"alpha": real_in(rng, 0.1, 0.9), "beta": real_in(rng, 0.1, 0.9), "N": rng.randint(3, 6),
            "q": qbase(rng, 0.3, 0.7)}

add(FamilyDescriptor(
    "q-hahn", "q-Hahn", "basic",
    schema=params("alpha", "beta", q=True, N=True),
    variable=VariableMap.qexp(),
    series=_qhahn_series,
    recurrence=Recurrence(lambda p: (1, -1), _qhahn_coefficients),
    normalizer=lambda p, n: 1,
    measure=lambda p: DiscreteMeasure(lambda x: x, _qhahn_mass(p), p["N"]+1),
    norm=_qhahn_norm,
    positivity=_qhahn_positivity,
    sampler=_qhahn_sampler,
    defaults={"alpha": 0.5, "beta": 0.4, "N": 4, "q": 0.5},
    points=lattice_points(),
    degree_bound=lambda p: p["N"],
    equations=(
        EquationSpec("q_hahn_qdifference", "QDIFFERENCE_X", _qhahn_equation,
                     lambda p, n: p["q"]**-n*(1-p["q"]**n)*(1-p["alpha"]*p["beta"]*p["q"]**(n+1)),
                     grid(0.2, 2.8, 6)),
    ),
    generating_functions=(
        GFSpec("q_hahn_gf_beta", "q-hahn", _qhahn_gf_beta,
               lambda p, n: qp(p["q"]**-p["N"], p["q"], n)/qps((p["beta"]*p["q"], p["q"]), p["q"], n), "TRUNCATED"),
        GFSpec("q_hahn_gf_n", "q-hahn", _qhahn_gf_n,
               lambda p, n: qp(p["alpha"]*p["q"], p["q"], n)/qps((p["alpha"]*p["beta"]*p["q"]**(p["N"]+2), p["q"]),
                                                                  p["q"], n), "TRUNCATED"),
    ),
    norm_formula="(αβq^2;q)_N/((βq;q)_N (αq)^N) (q, βq, αβq^{N+2};q)_n/(αβq, αq, q^{-N};q)_n "
                 "(1-αβq)(-αq)^n/(1-αβq^{2n+1}) q^{n(n-1)/2-Nn}",
))

# Dual q-Hahn

def _dqhahn_series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
    ga, de, N, q = p["gamma"], p["delta"], p["N"], p["q"]
    qx = qpower(q, x)
    return 1+0j, phi([q**-n, 1/qx, ga*de*q*qx], [ga*q, q**-N], q, q, N)

def _dqhahn_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    ga, de, N, q = p["gamma"], p["delta"], p["N"], p["q"]
    qn = q**n
    A = (1-qn*q**-N)*(1-ga*q*qn)
    C = ga*q*(1-qn)*(de-qn*q**(-N-1))
    return A, -(A+C), C

def _dqhahn_mass(p: P) -> Callable[[int], complex]:
    ga, de, N, q = p["gamma"], p["delta"], p["N"], p["q"]
    def mass(x: int) -> complex:
        num = qps((ga*q, ga*de*q, q**-N), q, x)*(1-ga*de*q**(2*x+1))*q**(N*x-binom2(x))
        den = qps((q, ga*de*q**(N+2), de*q), q, x)*(1-ga*de*q)*(-ga*q)**x
        return num/den
    return mass

def _dqhahn_norm(p: P, n: int) -> complex:
    ga, de, N, q = p["gamma"], p["delta"], p["N"], p["q"]
    const = qp(ga*de*q*q, q, N)/qp(de*q, q, N)*(ga*q)**-N
    return const*qps((q, q**-N/de), q, n)/qps((ga*q, q**-N), q, n)*(ga*de*q)**n

def _dqhahn_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    ga, de, N, q = p["gamma"], p["delta"], p["N"], p["q"]
    qx = qpower(q, x)
    gd = ga*de
    B = (1-ga*q*qx)*(1-gd*q*qx)*(1-qx*q**-N)/((1-gd*q*qx*qx)*(1-gd*q*q*qx*qx))
    D = -ga*qx*q**-N*(1-qx)*(1-de*qx)*(1-gd*qx*q**(N+1))/((1-gd*qx*qx)*(1-gd*q*qx*qx))
    return three_point(eig, 1, B, D, y(x+1), y(x), y(x-1))

def _dqhahn_gf_gamma(p: P, x: complex, order: int) -> PowerSeries:
    ga, de, N, q = p["gamma"], p["delta"], p["N"], p["q"]
    qx = qpower(q, x)
    prefactor = qproduct_series(ga*q, q, order)*qreciprocal_series(ga*de*q*qx, q, order)
    return prefactor*series_gf(phi([qx*q**-N, ga*de*q*qx], [q**-N], q, 1/qx, N), order)

def _dqhahn_gf_n(p: P, x: complex, order: int) -> PowerSeries:
    ga, de, N, q = p["gamma"], p["delta"], p["N"], p["q"]
    qx = qpower(q, x)
    prefactor = qproduct_series(q**-N, q, order)*qreciprocal_series(1/qx, q, order)
    return prefactor*series_gf(phi([1/qx, 1/(qx*de)], [ga*q], q, ga*de*q*qx), order)

def _dqhahn_gf_delta(p: P, x: complex, order: int) -> PowerSeries:
    ga, de, N, q = p["gamma"], p["delta"], p["N"], p["q"]
    qx = qpower(q, x)
    prefactor = qproduct_series(ga*de*q, q, order)*qreciprocal_series(ga*de*q*qx, q, order)
    return prefactor*series_gf(phi([qx*q**-N, ga*q*qx], [q**-N/de], q, 1/qx), order)

def _dqhahn_positivity(p: P) -> Optional[str]:
    mass = _dqhahn_mass(p)
    return positive_masses([(complex(x), mass(x)) for x in range(p["N"]+1)])

def _dqhahn_sampler(rng: Random) -> Dict[str, Any]:
    return {"gamma": real_in(rng, 0.1, 0.9), "delta": real_in(rng, 0.1, 0.9), "N": rng.randint(3, 6),
            "q": qbase(rng, 0.3, 0.7)}

add(FamilyDescriptor(
    "dual-q-hahn", "Dual q-Hahn", "basic",
    schema=params("gamma", "delta", q=True, N=True),
    variable=VariableMap.qlattice(lambda p: p["gamma"]*p["delta"]*p["q"]),
    series=_dqhahn_series,
    recurrence=Recurrence(lambda p: (1, -1-p["gamma"]*p["delta"]*p["q"]), _dqhahn_coefficients),
    normalizer=lambda p, n: 1,
    measure=lambda p: DiscreteMeasure(lambda x: x, _dqhahn_mass(p), p["N"]+1),
    norm=_dqhahn_norm,
    positivity=_dqhahn_positivity,
    sampler=_dqhahn_sampler,
    defaults={"gamma": 0.5, "delta": 0.4, "N": 4, "q": 0.5},
    points=lattice_points(),
    degree_bound=lambda p: p["N"],
    equations=(
        EquationSpec("dual_q_hahn_qdifference", "QDIFFERENCE_X", _dqhahn_equation,
                     lambda p, n: p["q"]**-n*(1-p["q"]**n), grid(0.2, 2.8, 6)),
    ),
    generating_functions=(
        GFSpec("dual_q_hahn_gf_gamma", "dual-q-hahn", _dqhahn_gf_gamma,
               lambda p, n: qp(p["gamma"]*p["q"], p["q"], n)/qp(p["q"], p["q"], n), "TRUNCATED"),
        GFSpec("dual_q_hahn_gf_n", "dual-q-hahn", _dqhahn_gf_n,
               lambda p, n: qp(p["q"]**-p["N"], p["q"], n)/qp(p["q"], p["q"], n), "TRUNCATED"),
        GFSpec("dual_q_hahn_gf_delta", "dual-q-hahn", _dqhahn_gf_delta,
               lambda p, n: qps((p["q"]**-p["N"], p["gamma"]*p["q"]), p["q"], n)
               /qps((p["q"]**-p["N"]/p["delta"], p["q"]), p["q"], n), "TRUNCATED"),
    ),
    norm_formula="(γδq^2;q)_N/((δq;q)_N (γq)^N) (q, δ^{-1}q^{-N};q)_n/(γq, q^{-N};q)_n (γδq)^n",
))

# Al-Salam-Chihara

_ASC = AskeyWilsonForm(lambda p: (p["a"], p["b"]))

add(FamilyDescriptor(
    "al-salam-chihara", "Al-Salam-Chihara", "basic",
    schema=params("a", "b", q=True, complex_names="ab"),
    variable=VariableMap.trig(),
    series=_ASC.series,
    recurrence=_ASC.recurrence(),
    normalizer=_ASC.kappa,
    measure=_ASC.measure,
    norm=_ASC.norm,
    positivity=_ASC.positivity,
    sampler=aw_sampler("ab"),
    defaults={"a": 0.5, "b": -0.3, "q": 0.5},
    points=TRIG_POINTS,
    equations=(
        _ASC.z_equation("al_salam_chihara_qdifference"),
        _ASC.dq_equation("al_salam_chihara_qderivative"),
    ),
    generating_functions=(
        _ASC.pair_gf("al-salam-chihara", "ab", (0, 1)),
        _ASC.product_gf("al-salam-chihara"),
    ),
    norm_formula="1/(q^{n+1}, abq^n;q)_∞",
))

# q-Meixner-Pollaczek

def _qmp_alphas(p: P) -> Tuple[complex, complex]:
    e = cmath.exp(1j*p["phi"])
    return (p["a"]*e, p["a"]/e)

def _qmp_kappa(p: P, n: int) -> complex:
    a, q = p["a"], p["q"]
    return qp(a*a, q, n)/(qp(q, q, n)*(a*cmath.exp(1j*p["phi"]))**n)

def _qmp_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    a, q = p["a"], p["q"]
    qn = q**n
    C = 0j if n == 0 else complex(1-a*a*qn/q)
    return complex(1-q*qn), 2*a*qn*math.cos(p["phi"]), C

_QMP = AskeyWilsonForm(_qmp_alphas, _qmp_kappa)

add(FamilyDescriptor(
    "q-meixner-pollaczek", "q-Meixner-Pollaczek", "basic",
    schema=params("a", "phi", q=True),
    variable=VariableMap.trig(),
    series=_QMP.series,
    recurrence=Recurrence(lambda p: (2, 0), _qmp_coefficients),
    normalizer=lambda p, n: 1,
    measure=_QMP.measure,
    norm=_QMP.norm,
    positivity=lambda p: require((0 < p["a"] < 1, "need 0 < a < 1")),
    sampler=lambda rng: {"a": real_in(rng, 0.1, 0.9), "phi": real_in(rng, -1.4, 1.4), "q": qbase(rng, 0.25, 0.75)},
    defaults={"a": 0.5, "phi": 0.7, "q": 0.5},
    points=TRIG_POINTS,
    equations=(
        _QMP.z_equation("q_meixner_pollaczek_qdifference"),
        _QMP.dq_equation("q_meixner_pollaczek_qderivative"),
    ),
    generating_functions=(
        _QMP.product_gf("q-meixner-pollaczek"),
        _QMP.pair_gf("q-meixner-pollaczek", "ab", (0, 1)),
    ),
    norm_formula="1/((q;q)_n (q, a^2q^n;q)_∞)",
))

# Continuous q-Jacobi

def _cqj_alphas(p: P) -> Tuple[complex, ...]:
    al, be, q = p["alpha"], p["beta"], p["q"]
    return (q**(al/2+0.25), q**(al/2+0.75), -q**(be/2+0.25), -q**(be/2+0.75))

def _cqj_kappa(p: P, n: int) -> complex:
    q = p["q"]
    return qp(q**(p["alpha"]+1), q, n)/qp(q, q, n)

def _cqj_rahman_alphas(p: P) -> Tuple[complex, ...]:
    al, be, q = p["alpha"], p["beta"], p["q"]
    return (q**0.5, q**(al+0.5), -q**(be+0.5), -q**0.5)

def _cqj_rahman_kappa(p: P, n: int) -> complex:
    al, be, q = p["alpha"], p["beta"], p["q"]
    return qps((q**(al+1), -q**(be+1)), q, n)/qps((q, -q), q, n)

def _cqj_positivity(p: P) -> Optional[str]:
    return require((p["alpha"] >= -0.5, "need alpha >= -1/2"), (p["beta"] >= -0.5, "need beta >= -1/2"))

def _cqj_sampler(rng: Random) -> Dict[str, Any]:
    return {"alpha": real_in(rng, -0.4, 2.0), "beta": real_in(rng, -0.4, 2.0), "q": qbase(rng, 0.25, 0.75)}

def _trig_family(name: str, title: str, form: AskeyWilsonForm, pairs: Sequence[Tuple[str, Tuple[int, int]]],
                 **kwargs: Any) -> FamilyDescriptor:
    prefix = name.replace("-", "_")
    return add(FamilyDescriptor(
        name, title, "basic",
        variable=VariableMap.trig(),
        series=form.series,
        recurrence=form.recurrence(),
        normalizer=form.kappa,
        measure=form.measure,
        norm=form.norm,
        points=TRIG_POINTS,
        equations=(
            form.z_equation(f"{prefix}_qdifference"),
            form.dq_equation(f"{prefix}_qderivative"),
        ),
        generating_functions=tuple(form.pair_gf(name, suffix, pair) for suffix, pair in pairs),
        **kwargs
    ))

_CQJ = AskeyWilsonForm(_cqj_alphas, _cqj_kappa)
_CQJ_RAHMAN = AskeyWilsonForm(_cqj_rahman_alphas, _cqj_rahman_kappa)

_trig_family(
    "continuous-q-jacobi", "Continuous q-Jacobi", _CQJ, (("ab", (0, 1)), ("ac", (0, 2)), ("ad", (0, 3))),
    schema=params("alpha", "beta", q=True),
    positivity=_cqj_positivity,
    sampler=_cqj_sampler,
    defaults={"alpha": 0.5, "beta": 0.3, "q": 0.5},
    norm_formula="(q^{(α+β+2)/2}, q^{(α+β+3)/2};q)_∞/(q, q^{α+1}, q^{β+1}, -q^{(α+β+1)/2}, -q^{(α+β+2)/2};q)_∞ "
                 "(1-q^{α+β+1})(q^{α+1}, q^{β+1}, -q^{(α+β+3)/2};q)_n/((1-q^{2n+α+β+1})"
                 "(q, q^{α+β+1}, -q^{(α+β+1)/2};q)_n) q^{(α+1/2)n}",
)

_trig_family(
    "continuous-q-jacobi-rahman", "Continuous q-Jacobi (Rahman normalization)", _CQJ_RAHMAN,
    (("ab", (0, 1)), ("ac", (0, 2)), ("ad", (0, 3))),
    schema=params("alpha", "beta", q=True),
    positivity=_cqj_positivity,
    sampler=_cqj_sampler,
    defaults={"alpha": 0.5, "beta": 0.3, "q": 0.5},
    norm_formula="(q^{α+β+2};q)_∞/(q, -q, q^{α+1}, -q^{α+1}, q^{β+1}, -q^{β+1}, -q^{α+β+1};q)_∞ "
                 "(1-q^{α+β+1})(q^{α+1}, q^{β+1}, -q^{α+1}, -q^{β+1}, -q^{α+β+1};q)_n/((1-q^{2n+α+β+1})"
                 "(q^{α+β+1}, q, -q, -q, -q;q)_n) q^n",
)

# Continuous q-ultraspherical (Rogers)

def _rogers_alphas(p: P) -> Tuple[complex, ...]:
    s = cmath.sqrt(p["beta"])
    sq = math.sqrt(p["q"])
    return (s, s*sq, -s, -s*sq)

def _rogers_kappa(p: P, n: int) -> complex:
    be, q = p["beta"], p["q"]
    return qp(be*be, q, n)/qp(q, q, n)*cmath.sqrt(be)**-n

def _rogers_fallback(p: P, n: int, x: complex) -> complex:
    be, q = p["beta"], p["q"]
    z = trig_z(x)
    return sum(qp(be, q, k)*qp(be, q, n-k)/(qp(q, q, k)*qp(q, q, n-k))*z**(n-2*k) for k in range(n+1))

def _rogers_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    be, q = p["beta"], p["q"]
    qn = q**n
    scale = 1-be*qn
    C = 0j if n == 0 else (1-be*be*qn/q)/scale
    return (1-q*qn)/scale, 0j, C

def _rogers_norm(p: P, n: int) -> complex:
    be, q = p["beta"], p["q"]
    return qinf((be, be*q), q)/qinf((be*be, q), q)*qp(be*be, q, n)/qp(q, q, n)*(1-be)/(1-be*q**n)

def _rogers_gf_product(p: P, x: complex, order: int) -> PowerSeries:
    be, q = p["beta"], p["q"]
    z = trig_z(x)
    return (qproduct_series(be*z, q, order)*qproduct_series(be/z, q, order)
            *qreciprocal_series(z, q, order)*qreciprocal_series(1/z, q, order))

def _rogers_gf_reciprocal(p: P, x: complex, order: int) -> PowerSeries:
    be, q = p["beta"], p["q"]
    z = trig_z(x)
    return qreciprocal_series(1/z, q, order)*series_gf(phi([be, be/(z*z)], [be*be], q, z), order)

def _rogers_gf_product_phi(p: P, x: complex, order: int) -> PowerSeries:
    be, q = p["beta"], p["q"]
    z = trig_z(x)
    return qproduct_series(1/z, q, order)*series_gf(phi([be, be*z*z], [be*be], q, 1/z), order)

_ROGERS = AskeyWilsonForm(_rogers_alphas, _rogers_kappa)

add(FamilyDescriptor(
    "continuous-q-ultraspherical", "Continuous q-ultraspherical (Rogers)", "basic",
    schema=params("beta", q=True),
    variable=VariableMap.trig(),
    series=_ROGERS.series,
    recurrence=Recurrence(lambda p: (2, 0), _rogers_coefficients),
    normalizer=lambda p, n: 1,
    measure=_ROGERS.measure,
    norm=_rogers_norm,
    positivity=lambda p: require((-1 < p["beta"] < 1, "need |beta| < 1")),
    sampler=lambda rng: {"beta": real_in(rng, 0.1, 0.8)*rng.choice((-1, 1)), "q": qbase(rng, 0.25, 0.75)},
    defaults={"beta": 0.4, "q": 0.5},
    points=TRIG_POINTS,
    fallback=_rogers_fallback,
    equations=(
        _ROGERS.z_equation("continuous_q_ultraspherical_qdifference"),
        _ROGERS.dq_equation("continuous_q_ultraspherical_qderivative"),
    ),
    generating_functions=(
        GFSpec("continuous_q_ultraspherical_gf_product", "continuous-q-ultraspherical", _rogers_gf_product,
               lambda p, n: 1),
        GFSpec("continuous_q_ultraspherical_gf_reciprocal", "continuous-q-ultraspherical", _rogers_gf_reciprocal,
               lambda p, n: 1/qp(p["beta"]**2, p["q"], n)),
        GFSpec("continuous_q_ultraspherical_gf_product_phi", "continuous-q-ultraspherical", _rogers_gf_product_phi,
               lambda p, n: (-p["beta"])**n*p["q"]**binom2(n)/qp(p["beta"]**2, p["q"], n)),
        _ROGERS.pair_gf("continuous-q-ultraspherical", "ab", (0, 1)),
        _ROGERS.pair_gf("continuous-q-ultraspherical", "ac", (0, 2)),
        _ROGERS.pair_gf("continuous-q-ultraspherical", "ad", (0, 3)),
    ),
    norm_formula="(β, βq;q)_∞/(β^2, q;q)_∞ (β^2;q)_n/(q;q)_n (1-β)/(1-βq^n)",
))

# Continuous q-Legendre

def _cql_alphas(p: P) -> Tuple[complex, ...]:
    s = math.sqrt(p["q"])
    return (s, s, -s, -s)

def _cql_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    q = p["q"]
    s = math.sqrt(q)
    scale = 1-q**(2*n+1)
    return (1-q**(2*n+2))/(s*scale), 0j, s*(1-q**(2*n))/scale

_CQL = AskeyWilsonForm(_cql_alphas, lambda p, n: 1)

add(FamilyDescriptor(
    "continuous-q-legendre", "Continuous q-Legendre", "basic",
    schema=params(q=True),
    variable=VariableMap.trig(),
    series=_CQL.series,
    recurrence=Recurrence(lambda p: (2, 0), _cql_coefficients),
    normalizer=lambda p, n: 1,
    measure=_CQL.measure,
    norm=_CQL.norm,
    positivity=lambda p: None,
    sampler=lambda rng: {"q": qbase(rng, 0.25, 0.75)},
    defaults={"q": 0.5},
    points=TRIG_POINTS,
    equations=(
        _CQL.z_equation("continuous_q_legendre_qdifference"),
        _CQL.dq_equation("continuous_q_legendre_qderivative"),
    ),
    generating_functions=(
        _CQL.pair_gf("continuous-q-legendre", "ab", (0, 1)),
        _CQL.pair_gf("continuous-q-legendre", "ac", (0, 2)),
    ),
    norm_formula="(q;q)_{2n} (q^{2n+2};q)_∞ q^n/((-q;q)_∞^4 (q;q)_∞^3)",
))

# Big q-Laguerre

def _bql_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    a, b, q = p["a"], p["b"], p["q"]
    qn = q**n
    A = (1-a*q*qn)*(1-b*q*qn)
    C = -a*b*q*qn*(1-qn)
    return A, -(A+C), C

def _bql_measure(p: P) -> JacksonMeasure:
    a, b, q = p["a"], p["b"], p["q"]
    return JacksonMeasure(lambda x: qinf((x/a, x/b), q)/qinf((x,), q), b*q, a*q, q)

def _bql_norm(p: P, n: int) -> complex:
    a, b, q = p["a"], p["b"], p["q"]
    const = a*q*(1-q)*qinf((q, b/a, a*q/b), q)/qinf((a*q, b*q), q)
    return const*qp(q, q, n)/qps((a*q, b*q), q, n)*(-a*b*q*q)**n*q**binom2(n)

def _bql_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    a, b, q = p["a"], p["b"], p["q"]
    return three_point(eig, x*x, a*b*q*(1-x), (x-a*q)*(x-b*q), y(q*x), y(x), y(x/q))

def _bql_gf_phi(p: P, x: complex, order: int) -> PowerSeries:
    a, b, q = p["a"], p["b"], p["q"]
    return qproduct_series(b*q, q, order)*series_gf(phi([a*q/x, 0], [a*q], q, x), order)

def _bql_gf_product(p: P, x: complex, order: int) -> PowerSeries:
    a, b, q = p["a"], p["b"], p["q"]
    return qproduct_series(1, q, order)*series_gf(phi([0, 0, x], [a*q, b*q], q, 1), order)

add(FamilyDescriptor(
    "big-q-laguerre", "Big q-Laguerre", "basic",
    schema=params("a", "b", q=True),
    variable=VariableMap.direct(),
    series=lambda p, n, x: (1+0j, phi([p["q"]**-n, 0, x], [p["a"]*p["q"], p["b"]*p["q"]], p["q"], p["q"])),
    recurrence=Recurrence(lambda p: (1, -1), _bql_coefficients),
    normalizer=lambda p, n: 1,
    measure=_bql_measure,
    norm=_bql_norm,
    positivity=lambda p: require((0 < p["a"]*p["q"] < 1, "need 0 < aq < 1"), (p["b"] < 0, "need b < 0")),
    sampler=lambda rng: {"a": real_in(rng, 0.1, 0.9), "b": -real_in(rng, 0.1, 0.9), "q": qbase(rng, 0.3, 0.7)},
    defaults={"a": 0.5, "b": -0.5, "q": 0.5},
    points=_BIG_POINTS,
    equations=(
        EquationSpec("big_q_laguerre_qdifference", "QDIFFERENCE_X", _bql_equation,
                     lambda p, n: p["q"]**-n*(1-p["q"]**n), grid(-0.8, 0.9, 5)),
    ),
    generating_functions=(
        GFSpec("big_q_laguerre_gf_phi", "big-q-laguerre", _bql_gf_phi,
               lambda p, n: qp(p["b"]*p["q"], p["q"], n)/qp(p["q"], p["q"], n)),
        GFSpec("big_q_laguerre_gf_product", "big-q-laguerre", _bql_gf_product,
               lambda p, n: (-1)**n*p["q"]**binom2(n)/qp(p["q"], p["q"], n)),
    ),
    norm_formula="aq(1-q)(q, b/a, aq/b;q)_∞/(aq, bq;q)_∞ (q;q)_n/(aq, bq;q)_n (-abq^2)^n q^{n(n-1)/2}",
))
