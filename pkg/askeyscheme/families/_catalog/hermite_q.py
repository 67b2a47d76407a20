"""
    The bottom of the basic part of the scheme: Al-Salam-Carlitz I and II, continuous q-Hermite,
    Stieltjes-Wigert and the discrete q-Hermite polynomials of both kinds.
"""

from __future__ import annotations

import math
from random import Random
from typing import Any, Callable, Dict, Sequence, Tuple

from ...measures import BilateralMeasure, ContinuousMeasure, DiscreteMeasure, JacksonMeasure
from ...powerseries import PowerSeries
from ..descriptor import (EquationSpec, Evaluation, FamilyDescriptor, GFSpec, ParamInfo, Recurrence, TermBuilder,
                          VariableMap, params, three_point, trig_z)
from . import (P, add, binom2, grid, log_qinf_plus, no_violation, phi, qbase, qexp_small_series, qinf, qp,
               qproduct_series, qreciprocal_series, real_in, require, series_gf, variable)
from .askey_wilson import TRIG_POINTS, AskeyWilsonForm

_HERMITE_POINTS = grid(-0.9, 0.9, 6)

def _shifted_products(coefficient: Callable[[int], complex], a: complex, q: float, order: int) -> PowerSeries:
    """
        The power series :math:`\\sum_k c_k t^k (aq^kt; q)_\\infty`, the form taken by a series whose lower
        parameter contains :math:`t` once multiplied by :math:`(at; q)_\\infty`.
    """
    t = variable(order)
    tk = PowerSeries.constant(1, order)
    res = PowerSeries.constant(0, order)
    for k in range(order+1):
        res = res+tk*qproduct_series(a*q**k, q, order)*coefficient(k)
        tk = tk*t
    return res

# Al-Salam-Carlitz I

_Unpack = Callable[[P], Tuple[float, float]]

def _asc1_params(p: P) -> Tuple[float, float]:
    return p["a"], p["q"]

def _dqh1_params(p: P) -> Tuple[float, float]:
    # discrete q-Hermite I is Al-Salam-Carlitz I at a = -1
    return -1.0, p["q"]

def _asc1_series(unpack: _Unpack) -> Callable[[P, int, complex], Tuple[complex, Any]]:
    def series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
        a, q = unpack(p)
        return (-a)**n*q**binom2(n)+0j, phi([q**-n, 1/x], [0], q, q*x/a)
    return series

def _asc1_coefficients(unpack: _Unpack) -> Callable[[P, int], Tuple[complex, complex, complex]]:
    def coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
        a, q = unpack(p)
        qn = q**n
        return 1+0j, (a+1)*qn+0j, -a*qn/q*(1-qn)+0j
    return coefficients

def _asc1_measure(unpack: _Unpack) -> Callable[[P], JacksonMeasure]:
    def measure(p: P) -> JacksonMeasure:
        a, q = unpack(p)
        return JacksonMeasure(lambda x: qinf((q*x, q*x/a), q), a, 1, q)
    return measure

def _asc1_norm(unpack: _Unpack) -> Callable[[P, int], complex]:
    def norm(p: P, n: int) -> complex:
        a, q = unpack(p)
        return (-a)**n*(1-q)*qp(q, q, n)*qinf((q, a, q/a), q)*q**binom2(n)
    return norm

def _asc1_equation(unpack: _Unpack) -> TermBuilder:
    # divided through by q^n, so that only the eigenvalue depends on n
    def terms(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
        a, q = unpack(p)
        return three_point(eig, x*x, a/q, (1-x)*(a-x), y(q*x), y(x), y(x/q))
    return terms

def _asc1_gf(unpack: _Unpack) -> Callable[[P, complex, int], PowerSeries]:
    def lhs(p: P, x: complex, order: int) -> PowerSeries:
        a, q = unpack(p)
        return (qproduct_series(1, q, order)*qproduct_series(a, q, order)
                *qreciprocal_series(x, q, order))
    return lhs

def _asc1_family(name: str, title: str, unpack: _Unpack, **kwargs: Any) -> FamilyDescriptor:
    prefix = name.replace("-", "_")
    return add(FamilyDescriptor(
        name, title, "basic",
        variable=VariableMap.direct(),
        series=_asc1_series(unpack),
        recurrence=Recurrence(lambda p: (1, 0), _asc1_coefficients(unpack)),
        normalizer=lambda p, n: 1,
        measure=_asc1_measure(unpack),
        norm=_asc1_norm(unpack),
        points=_HERMITE_POINTS,
        equations=(
            EquationSpec(f"{prefix}_qdifference", "QDIFFERENCE_X", _asc1_equation(unpack),
                         lambda p, n: p["q"]**-n*(1-p["q"]**n), _HERMITE_POINTS),
        ),
        generating_functions=(
            GFSpec(f"{prefix}_gf", name, _asc1_gf(unpack), lambda p, n: 1/qp(p["q"], p["q"], n)),
        ),
        **kwargs
    ))

_asc1_family(
    "al-salam-carlitz-i", "Al-Salam-Carlitz I", _asc1_params,
    schema=params("a", q=True),
    positivity=lambda p: require((p["a"] < 0, "need a < 0")),
    sampler=lambda rng: {"a": -real_in(rng, 0.2, 2.0), "q": qbase(rng, 0.3, 0.7)},
    defaults={"a": -0.5, "q": 0.5},
    norm_formula="(-a)^n (1-q) (q;q)_n (q, a, q/a;q)_∞ q^{n(n-1)/2}",
)

# Al-Salam-Carlitz II

def _asc2_series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
    a, q = p["a"], p["q"]
    return (-a)**n*q**-binom2(n)+0j, phi([q**-n, x], [], q, q**n/a)

def _asc2_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    a, q = p["a"], p["q"]
    qn = q**n
    return 1+0j, (a+1)/qn+0j, a*q/(qn*qn)*(1-qn)+0j

def _asc2_mass(p: P) -> Callable[[int], complex]:
    a, q = p["a"], p["q"]
    def mass(k: int) -> complex:
        return q**(k*k)*a**k/(qp(q, q, k)*qp(a*q, q, k))
    return mass

def _asc2_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    a, q = p["a"], p["q"]
    return three_point(eig, -x*x, (1-x)*(a-x), a*q, y(q*x), y(x), y(x/q))

def _asc2_gf_ratio(p: P, x: complex, order: int) -> PowerSeries:
    a, q = p["a"], p["q"]
    return qproduct_series(x, q, order)*qreciprocal_series(1, q, order)*qreciprocal_series(a, q, order)

def _asc2_gf_phi11(p: P, x: complex, order: int) -> PowerSeries:
    a, q = p["a"], p["q"]
    def coefficient(k: int) -> complex:
        return qp(x, q, k)/qp(q, q, k)*(-1)**k*q**binom2(k)
    return _shifted_products(coefficient, a, q, order)

add(FamilyDescriptor(
    "al-salam-carlitz-ii", "Al-Salam-Carlitz II", "basic",
    schema=params("a", q=True),
    variable=VariableMap.direct(),
    series=_asc2_series,
    recurrence=Recurrence(lambda p: (1, 0), _asc2_coefficients),
    normalizer=lambda p, n: 1,
    measure=lambda p: DiscreteMeasure(lambda k: p["q"]**-k, _asc2_mass(p)),
    norm=lambda p, n: qp(p["q"], p["q"], n)*p["a"]**n/(qinf((p["a"]*p["q"],), p["q"])*p["q"]**(n*n)),
    positivity=lambda p: require((p["a"] > 0, "need a > 0")),
    sampler=lambda rng: {"a": real_in(rng, 0.2, 2.0), "q": qbase(rng, 0.3, 0.7)},
    defaults={"a": 0.5, "q": 0.5},
    points=grid(-0.8, 2.8, 6),
    equations=(
        EquationSpec("al_salam_carlitz_ii_qdifference", "QDIFFERENCE_X", _asc2_equation,
                     lambda p, n: 1-p["q"]**n, grid(-0.8, 2.8, 6)),
    ),
    generating_functions=(
        GFSpec("al_salam_carlitz_ii_gf_ratio", "al-salam-carlitz-ii", _asc2_gf_ratio,
               lambda p, n: (-1)**n*p["q"]**binom2(n)/qp(p["q"], p["q"], n)),
        GFSpec("al_salam_carlitz_ii_gf_phi", "al-salam-carlitz-ii", _asc2_gf_phi11,
               lambda p, n: p["q"]**(2*binom2(n))/qp(p["q"], p["q"], n)),
    ),
    norm_formula="(q;q)_n a^n/((aq;q)_∞ q^{n^2})",
))

# Continuous q-Hermite

_CQH = AskeyWilsonForm(lambda p: ())

def _cqh_series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
    q = p["q"]
    z = trig_z(x)
    return z**n, phi([q**-n, 0], [], q, q**n/(z*z))

def _cqh_gf_phi11(p: P, x: complex, order: int) -> PowerSeries:
    q = p["q"]
    z = trig_z(x)
    def coefficient(k: int) -> complex:
        return (-1)**k*q**binom2(k)/(qp(q, q, k)*z**k)
    return _shifted_products(coefficient, z, q, order)

add(FamilyDescriptor(
    "continuous-q-hermite", "Continuous q-Hermite", "basic",
    schema=params(q=True),
    variable=VariableMap.trig(),
    series=_cqh_series,
    recurrence=Recurrence(lambda p: (2, 0), lambda p, n: (1+0j, 0j, 1-p["q"]**n+0j)),
    normalizer=lambda p, n: 1,
    measure=_CQH.measure,
    norm=_CQH.norm,
    positivity=no_violation,
    sampler=lambda rng: {"q": qbase(rng, 0.25, 0.75)},
    defaults={"q": 0.5},
    points=TRIG_POINTS,
    equations=(
        _CQH.z_equation("continuous_q_hermite_qdifference"),
        _CQH.dq_equation("continuous_q_hermite_qderivative"),
    ),
    generating_functions=(
        _CQH.product_gf("continuous-q-hermite"),
        GFSpec("continuous_q_hermite_gf_phi", "continuous-q-hermite", _cqh_gf_phi11,
               lambda p, n: (-1)**n*p["q"]**binom2(n)/qp(p["q"], p["q"], n)),
    ),
    norm_formula="1/(q^{n+1};q)_∞",
))

# Stieltjes-Wigert

def _sw_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    # C_0 enters B_0 and is kept
    q = p["q"]
    scale = q**(2*n+1)
    A = (1-q**(n+1))/scale
    C = q/scale
    return A, -(A+C), C

def _sw_measure(p: P) -> ContinuousMeasure:
    q = p["q"]
    lq = math.log(q)
    def weight(u: float) -> float:
        # x = e^u, with dx = e^u du
        return math.exp(u-log_qinf_plus(u, q)-log_qinf_plus(lq-u, q))
    return ContinuousMeasure(weight, -math.inf, math.inf, math.exp)

def _sw_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    q = p["q"]
    return three_point(eig, -x, x, 1, y(q*x), y(x), y(x/q))

def _sw_gf_reciprocal(p: P, x: complex, order: int) -> PowerSeries:
    q = p["q"]
    return qreciprocal_series(1, q, order)*series_gf(phi([], [0], q, -q*x), order)

def _sw_gf_product(p: P, x: complex, order: int) -> PowerSeries:
    q = p["q"]
    def coefficient(k: int) -> complex:
        return q**(3*binom2(k))*(q*x)**k/qp(q, q, k)
    return _shifted_products(coefficient, 1, q, order)

add(FamilyDescriptor(
    "stieltjes-wigert", "Stieltjes-Wigert", "basic",
    schema=params(q=True),
    variable=VariableMap.direct(),
    series=lambda p, n, x: (1/qp(p["q"], p["q"], n), phi([p["q"]**-n], [0], p["q"], -x*p["q"]**(n+1))),
    recurrence=Recurrence(lambda p: (-1, 0), _sw_coefficients),
    normalizer=lambda p, n: 1,
    measure=_sw_measure,
    norm=lambda p, n: -math.log(p["q"])/p["q"]**n*qinf((p["q"],), p["q"])/qp(p["q"], p["q"], n),
    positivity=no_violation,
    sampler=lambda rng: {"q": qbase(rng, 0.3, 0.7)},
    defaults={"q": 0.5},
    points=grid(-0.9, 2.5, 6),
    equations=(
        EquationSpec("stieltjes_wigert_qdifference", "QDIFFERENCE_X", _sw_equation,
                     lambda p, n: 1-p["q"]**n, grid(0.2, 2.5, 5)),
    ),
    generating_functions=(
        GFSpec("stieltjes_wigert_gf_reciprocal", "stieltjes-wigert", _sw_gf_reciprocal, lambda p, n: 1),
        GFSpec("stieltjes_wigert_gf_product", "stieltjes-wigert", _sw_gf_product,
               lambda p, n: (-1)**n*p["q"]**binom2(n)),
    ),
    norm_formula="-ln q/q^n (q;q)_∞/(q;q)_n",
))

# Discrete q-Hermite I

_asc1_family(
    "discrete-q-hermite-i", "Discrete q-Hermite I", _dqh1_params,
    schema=params(q=True),
    positivity=no_violation,
    sampler=lambda rng: {"q": qbase(rng, 0.3, 0.7)},
    defaults={"q": 0.5},
    norm_formula="(1-q) (q;q)_n (q, -1, -q;q)_∞ q^{n(n-1)/2}",
)

# Discrete q-Hermite II

def _dqh2_series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
    q = p["q"]
    return (1j)**-n*q**-binom2(n), phi([q**-n, 1j*x], [], q, -q**n)

def _dqh2_lattice(p: P) -> Tuple[Callable[[int], float], Callable[[int], float]]:
    # index j runs over the integers, the even ones at cq^k and the odd ones at -cq^k, with k = j//2
    c, q = p["c"], p["q"]
    lc, lq = math.log(c), math.log(q)
    def node(j: int) -> float:
        return (1 if j % 2 == 0 else -1)*c*q**(j//2)
    def mass(j: int) -> float:
        k = j//2
        return math.exp(k*lq-log_qinf_plus(2*(lc+k*lq), q*q))
    return node, mass

def _dqh2_norm(p: P, n: int) -> complex:
    c, q = p["c"], p["q"]
    q2, c2 = q*q, c*c
    return 2*qinf((q2, -c2*q, -q/c2), q2)/qinf((q, -c2, -q2/c2), q2)*qp(q, q, n)/q**(n*n)

def _dqh2_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    q = p["q"]
    return three_point(eig, -x*x, 1+x*x, q, y(q*x), y(x), y(x/q))

def _dqh2_gf_ratio(p: P, x: complex, order: int) -> PowerSeries:
    q = p["q"]
    # 1/(-t^2; q^2)_inf, a series in t^2
    coeffs = [0j]*(order+1)
    for k in range(order//2+1):
        coeffs[2*k] = (-1)**k/qp(q*q, q*q, k)
    return qproduct_series(-x, q, order)*PowerSeries(coeffs)

def _dqh2_gf_phi10(p: P, x: complex, order: int) -> PowerSeries:
    # 1phi0(ix; -; q, -it)/(it; q)_inf, from the terminating 2phi0 form by a Cauchy product
    q = p["q"]
    coeffs = [qp(1j*x, q, k)*(-1j)**k/qp(q, q, k) for k in range(order+1)]
    return qexp_small_series(1j, q, order)*PowerSeries(coeffs)

add(FamilyDescriptor(
    "discrete-q-hermite-ii", "Discrete q-Hermite II", "basic",
    schema=(ParamInfo("c", "real", "lattice offset of the bilateral orthogonality"), *params(q=True)),
    variable=VariableMap.direct(),
    series=_dqh2_series,
    recurrence=Recurrence(lambda p: (1, 0), lambda p, n: (1+0j, 0j, p["q"]**(1-2*n)*(1-p["q"]**n)+0j)),
    normalizer=lambda p, n: 1,
    measure=lambda p: BilateralMeasure(*_dqh2_lattice(p)),
    norm=_dqh2_norm,
    positivity=lambda p: require((p["c"] > 0, "need c > 0")),
    sampler=lambda rng: {"c": real_in(rng, 0.3, 2.0), "q": qbase(rng, 0.3, 0.7)},
    defaults={"c": 1.0, "q": 0.5},
    points=grid(-1.5, 1.5, 6),
    equations=(
        EquationSpec("discrete_q_hermite_ii_qdifference", "QDIFFERENCE_X", _dqh2_equation,
                     lambda p, n: 1-p["q"]**n, grid(-1.5, 1.5, 6)),
    ),
    generating_functions=(
        GFSpec("discrete_q_hermite_ii_gf_ratio", "discrete-q-hermite-ii", _dqh2_gf_ratio,
               lambda p, n: p["q"]**binom2(n)/qp(p["q"], p["q"], n)),
        GFSpec("discrete_q_hermite_ii_gf_phi", "discrete-q-hermite-ii", _dqh2_gf_phi10,
               lambda p, n: (-1)**n*p["q"]**binom2(n)/qp(p["q"], p["q"], n)),
    ),
    norm_formula="2 (q^2, -c^2q, -q/c^2;q^2)_∞/(q, -c^2, -q^2/c^2;q^2)_∞ (q;q)_n/q^{n^2}",
))
