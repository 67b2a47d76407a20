"""
    The Askey-Wilson polynomials and the families at the top of the basic part of the scheme: q-Racah,
    continuous dual q-Hahn and continuous q-Hahn.

    Also hosts :class:`AskeyWilsonForm`, the shared machinery for families in :math:`x = \\cos\\theta`
    which are specializations of the Askey-Wilson polynomials: series, recurrence, weight, point masses,
    norm, q-difference equations and generating functions are all derived from the four specialized
    parameters :math:`\\alpha_1, \\ldots, \\alpha_4` (some of which may vanish).
"""

from __future__ import annotations

import cmath
import math
from random import Random
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ...qcore import DomainError, INFINITY, Number
from ...measures import ContinuousMeasure, DiscreteMeasure, MeasureSpec, MixedMeasure
from ...powerseries import PowerSeries
from ..descriptor import (EquationSpec, Evaluation, FamilyDescriptor, GFSpec, Recurrence, TermBuilder, VariableMap,
                          params, qpower, three_point, trig_z)
from . import (P, add, conjugate_closed, grid, phi, positive_masses, qbase, qinf, qp, qproduct_series, qps,
               qreciprocal_series, real_in, require, series_gf, trig_factor, trig_weight_core)

_TWO_PI = 2*math.pi

Alphas = Tuple[complex, complex, complex, complex]
"""
    Type alias for the four specialized Askey-Wilson parameters.
"""

Z_POINTS: Tuple[complex, ...] = tuple(r*cmath.exp(1j*t) for r, t in ((0.8, 0.4), (0.8, 1.1), (0.9, 2.0),
                                                                      (1.2, 0.7), (1.1, 2.6), (0.7, 1.7)))
""" Sample points :math:`z` off the unit circle, for the z-form equations. """

TRIG_POINTS = grid(-0.9, 0.9, 7)
""" Default sample points in :math:`x = \\cos\\theta`. """

def _pad(values: Sequence[Number]) -> Alphas:
    res = [complex(v) for v in values]
    if len(res) > 4:
        raise DomainError("At most four Askey-Wilson parameters.")
    res.extend([0j]*(4-len(res)))
    return (res[0], res[1], res[2], res[3])

def _weight_z(alphas: Sequence[complex], q: float, z: complex) -> complex:
    # (z^2, z^-2; q)_inf / prod (alpha z, alpha/z; q)_inf, analytic in z
    res = qinf((z*z, 1/(z*z)), q)
    for a in alphas:
        if a != 0:
            res /= qinf((a*z, a/z), q)
    return res

def _sin_z(z: complex) -> complex:
    return (z-1/z)/2j

def _cos_z(z: complex) -> complex:
    return (z+1/z)/2

def _gf_name(family: str, suffix: str) -> str:
    return f"{family.replace('-', '_')}_gf_{suffix}"

class AskeyWilsonForm:
    """
        A family obtained from the Askey-Wilson polynomials by specializing the parameters.

        The family's polynomials are :math:`p_n = \\kappa_n\\,\\tilde p_n` where

        .. math::

            \\tilde p_n(x) = {}_4\\phi_3\\left(q^{-n}, \\alpha_1\\alpha_2\\alpha_3\\alpha_4 q^{n-1},
            \\alpha_1 e^{i\\theta}, \\alpha_1 e^{-i\\theta}; \\alpha_1\\alpha_2, \\alpha_1\\alpha_3, \\alpha_1\\alpha_4; q, q\\right)

        and :math:`\\kappa_n` defaults to the Askey-Wilson normalizer :math:`(\\alpha_1\\alpha_2, \\alpha_1\\alpha_3,
        \\alpha_1\\alpha_4; q)_n/\\alpha_1^n`.

        :param alphas: the specialized parameters as a function of the family parameters, at most four
        :type alphas: :obj:`Callable`
        :param kappa: the family normalizer :math:`\\kappa_n`, if not the Askey-Wilson one
        :type kappa: :obj:`Callable` or :obj:`None`, *optional*
    """

    _alphas: Callable[[P], Sequence[Number]]
    _kappa: Optional[Callable[[P, int], complex]]

    __slots__ = ("_alphas", "_kappa")

    def __new__(cls, alphas: Callable[[P], Sequence[Number]],
                kappa: Optional[Callable[[P, int], complex]] = None) -> "AskeyWilsonForm":
        instance = super().__new__(cls)
        instance._alphas = alphas
        instance._kappa = kappa
        return instance

    def alphas(self, p: P) -> Alphas:
        """ The four specialized parameters, padded with zeros. """
        return _pad(self._alphas(p))

    def aw_kappa(self, p: P, n: int) -> complex:
        """ The Askey-Wilson normalizer :math:`(\\alpha_1\\alpha_2, \\alpha_1\\alpha_3, \\alpha_1\\alpha_4; q)_n/\\alpha_1^n`. """
        a, b, c, d = self.alphas(p)
        return qps((a*b, a*c, a*d), p["q"], n)/a**n

    def kappa(self, p: P, n: int) -> complex:
        """ The family normalizer :math:`\\kappa_n`. """
        if self._kappa is None:
            return self.aw_kappa(p, n)
        return complex(self._kappa(p, n))

    def series(self, p: P, n: int, x: complex) -> Tuple[complex, Any]:
        """ Series builder for the family descriptor. """
        a, b, c, d = self.alphas(p)
        q = p["q"]
        z = trig_z(x)
        return self.kappa(p, n), phi([q**-n, a*b*c*d*q**(n-1), a*z, a/z], [a*b, a*c, a*d], q, q)

    def coefficients(self, p: P, n: int) -> Tuple[complex, complex, complex]:
        """ The coefficients of :math:`2x\\tilde p_n = A_n\\tilde p_{n+1} + B_n\\tilde p_n + C_n\\tilde p_{n-1}`. """
        a, b, c, d = self.alphas(p)
        q = p["q"]
        abcd = a*b*c*d
        if n == 0:
            A = (1-a*b)*(1-a*c)*(1-a*d)/(a*(1-abcd))
            C = 0j
        else:
            qn = q**n
            A = (1-a*b*qn)*(1-a*c*qn)*(1-a*d*qn)*(1-abcd*qn/q)/(a*(1-abcd*qn*qn/q)*(1-abcd*qn*qn))
            C = a*(1-qn)*(1-b*c*qn/q)*(1-b*d*qn/q)*(1-c*d*qn/q)/((1-abcd*qn*qn/q/q)*(1-abcd*qn*qn/q))
        return A, a+1/a-(A+C), C

    def recurrence(self) -> Recurrence:
        """ The three-term recurrence in :math:`x`. """
        return Recurrence(lambda p: (2, 0), self.coefficients)

    def weight(self, p: P) -> Callable[[float], complex]:
        """ The weight :math:`w(\\cos\\theta)/2\\pi` as a function of :math:`\\theta`. """
        alphas = [a for a in self.alphas(p) if a != 0]
        q = p["q"]
        def weight(theta: float) -> complex:
            res = trig_weight_core(theta, q)
            for a in alphas:
                res /= trig_factor(theta, a, q)
            return res/_TWO_PI
        return weight

    def point_masses(self, p: P) -> List[Tuple[complex, complex]]:
        """
            The point masses :math:`w_k` at :math:`x_k = (aq^k+a^{-1}q^{-k})/2` for :math:`1 < aq^k`,
            present when the first parameter :math:`a` is real and larger than one.
        """
        al = self.alphas(p)
        q = p["q"]
        if al[0].imag != 0 or al[0].real <= 1:
            return []
        a = al[0].real
        rest = al[1:]
        const = qp(1/(a*a), q, INFINITY)/qinf([q]+[a*e for e in rest]+[e/a for e in rest], q)
        points = []
        k = 0
        while a*q**k > 1:
            aqk = a*q**k
            mass = const*(1-aqk*aqk)*qps([a*a]+[a*e for e in rest], q, k)/((1-a*a)*qp(q, q, k))*(q/a)**k
            for e in rest:
                for j in range(k):
                    mass /= e-a*q**(j+1)
            points.append((complex((aqk+1/aqk)/2), mass))
            k += 1
        return points

    def measure(self, p: P) -> MeasureSpec:
        """ The orthogonality measure: the weight on :math:`[0, \\pi]`, plus point masses if any. """
        continuous = ContinuousMeasure.on_circle(self.weight(p))
        points = self.point_masses(p)
        return MixedMeasure(continuous, points) if points else continuous

    def aw_norm(self, p: P, n: int) -> complex:
        """ The Askey-Wilson norm at the specialized parameters. """
        al = self.alphas(p)
        q = p["q"]
        abcd = al[0]*al[1]*al[2]*al[3]
        qn = q**n
        pairs = [al[i]*al[j]*qn for i in range(4) for j in range(i+1, 4)]
        num = qp(abcd*qn/q, q, n)*qp(abcd*qn*qn, q, INFINITY)
        return num/qinf([qn*q]+pairs, q)

    def norm(self, p: P, n: int) -> complex:
        """ The family norm, rescaled from the Askey-Wilson one by :math:`(\\kappa_n/\\kappa^{AW}_n)^2`. """
        res = self.aw_norm(p, n)
        if self._kappa is not None:
            res *= (self.kappa(p, n)/self.aw_kappa(p, n))**2
        return res

    def positivity(self, p: P) -> Optional[str]:
        """
            Positivity of the Askey-Wilson weight: non-real parameters come in conjugate pairs, and either all
            parameters have modulus less than one, or the first is real and larger than one while the others
            and all pairwise products have modulus less than one.
        """
        al = self.alphas(p)
        if not conjugate_closed(al):
            return "non-real parameters must come in conjugate pairs"
        if all(abs(a) < 1 for a in al):
            return None
        products = [al[i]*al[j] for i in range(4) for j in range(i+1, 4)]
        return require((al[0].imag == 0 and al[0].real > 1 and all(abs(a) < 1 for a in al[1:]),
                        "parameters must have modulus less than one, except possibly a real first parameter"),
                       (all(abs(v) < 1 for v in products), "pairwise parameter products must have modulus less than one"))

    def eigenvalue(self, p: P, n: int) -> complex:
        """ The eigenvalue :math:`q^{-n}(1-q^n)(1-\\alpha_1\\alpha_2\\alpha_3\\alpha_4 q^{n-1})` of the z-form equation. """
        al = self.alphas(p)
        q = p["q"]
        return q**-n*(1-q**n)*(1-al[0]*al[1]*al[2]*al[3]*q**(n-1))

    def z_terms(self) -> TermBuilder:
        """ Term builder for :math:`\\lambda_n P(z) = A(z)P(qz) - [A(z)+A(z^{-1})]P(z) + A(z^{-1})P(z/q)`. """
        def terms(p: P, n: int, z: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
            al = self.alphas(p)
            q = p["q"]
            def A(u: complex) -> complex:
                res = 1/((1-u*u)*(1-q*u*u))
                for a in al:
                    res *= 1-a*u
                return res
            return three_point(eig, 1, A(z), A(1/z), y.z(q*z), y.z(z), y.z(z/q))
        return terms

    def dq_terms(self) -> TermBuilder:
        """
            Term builder for the divided-difference form
            :math:`(1-q)^2 D_q[\\tilde w(x; \\alpha q^{1/2}) D_q y] + \\lambda_n \\tilde w(x; \\alpha) y = 0`,
            sampled at points :math:`z` with :math:`x = (z+z^{-1})/2`.
        """
        def terms(p: P, n: int, z: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
            al = self.alphas(p)
            q = p["q"]
            sq = math.sqrt(q)
            shifted = [a*sq for a in al]
            def w(alphas: Sequence[complex], u: complex) -> complex:
                return _weight_z(alphas, q, u)/_sin_z(u)
            up, down = sq*z, z/sq
            g_up = w(shifted, up)*(y.z(q*z)-y.z(z))/(_cos_z(q*z)-_cos_z(z))
            g_down = w(shifted, down)*(y.z(z)-y.z(z/q))/(_cos_z(z)-_cos_z(z/q))
            scale = (1-q)**2/(_cos_z(up)-_cos_z(down))
            return (scale*g_up, -scale*g_down, eig*w(al, z)*y.z(z))
        return terms

    def z_equation(self, name: str) -> EquationSpec:
        """ The z-form q-difference equation. """
        return EquationSpec(name, "QDIFFERENCE_Z", self.z_terms(), self.eigenvalue, lambda p: Z_POINTS)

    def dq_equation(self, name: str) -> EquationSpec:
        """ The divided-difference form of the q-difference equation. """
        return EquationSpec(name, "QDERIVATIVE", self.dq_terms(), lambda p, n: 4*p["q"]*self.eigenvalue(p, n),
                            lambda p: Z_POINTS)

    def convert(self, p: P, n: int, coefficient: complex) -> complex:
        """ Converts a generating function multiplier of the Askey-Wilson polynomials to the family's normalization. """
        if self._kappa is None:
            return coefficient
        return coefficient*self.aw_kappa(p, n)/self.kappa(p, n)

    def pair_gf(self, family: str, suffix: str, pair: Tuple[int, int]) -> GFSpec:
        """
            The generating function
            :math:`{}_2\\phi_1(\\alpha_i z, \\alpha_j z; \\alpha_i\\alpha_j; q, t/z)\\,
            {}_2\\phi_1(\\alpha_k/z, \\alpha_l/z; \\alpha_k\\alpha_l; q, zt)`, with :math:`z = e^{i\\theta}`.
        """
        i, j = pair
        k, l = (m for m in range(4) if m not in pair)
        def lhs(p: P, x: complex, order: int) -> PowerSeries:
            al = self.alphas(p)
            q = p["q"]
            z = trig_z(x)
            left = series_gf(phi([al[i]*z, al[j]*z], [al[i]*al[j]], q, 1/z), order)
            right = series_gf(phi([al[k]/z, al[l]/z], [al[k]*al[l]], q, z), order)
            return left*right
        def coefficient(p: P, n: int) -> complex:
            al = self.alphas(p)
            q = p["q"]
            return self.convert(p, n, 1/qps((al[i]*al[j], al[k]*al[l], q), q, n))
        return GFSpec(_gf_name(family, suffix), family, lhs, coefficient)

    def product_gf(self, family: str, suffix: str = "product",
                   coefficient: Optional[Callable[[P, int], complex]] = None) -> GFSpec:
        """
            The generating function :math:`(\\alpha_1 t, \\alpha_2 t; q)_\\infty/(e^{i\\theta}t, e^{-i\\theta}t; q)_\\infty`,
            valid when at most two parameters are nonzero.
        """
        def lhs(p: P, x: complex, order: int) -> PowerSeries:
            q = p["q"]
            z = trig_z(x)
            res = qreciprocal_series(z, q, order)*qreciprocal_series(1/z, q, order)
            for a in self.alphas(p):
                if a != 0:
                    res = res*qproduct_series(a, q, order)
            return res
        def default(p: P, n: int) -> complex:
            q = p["q"]
            return self.convert(p, n, 1/qp(q, q, n))
        return GFSpec(_gf_name(family, suffix), family, lhs, coefficient or default)


def aw_sampler(names: str, mixed: bool = True) -> Callable[[Random], Dict[str, Any]]:
    """
        A sampler for families whose parameters ``names`` are Askey-Wilson parameters: real draws, conjugate pairs
        for the last two names, and (if ``mixed``) a first parameter larger than one with small companions.
    """
    def sampler(rng: Random) -> Dict[str, Any]:
        draw = rng.random()
        res: Dict[str, Any] = {"q": qbase(rng, 0.25, 0.75)}
        if mixed and draw < 0.25:
            res[names[0]] = real_in(rng, 1.2, 1.8)
            for name in names[1:]:
                res[name] = real_in(rng, -0.5, 0.5)
            return res
        for name in names:
            res[name] = real_in(rng, 0.1, 0.7)*rng.choice((-1, 1))
        if draw < 0.6 and len(names) >= 3:
            u, v = real_in(rng, -0.5, 0.5), real_in(rng, 0.1, 0.5)
            res[names[-2]], res[names[-1]] = complex(u, v), complex(u, -v)
        return res
    return sampler

# Askey-Wilson

_AW = AskeyWilsonForm(lambda p: (p["a"], p["b"], p["c"], p["d"]))

add(FamilyDescriptor(
    "askey-wilson", "Askey-Wilson", "basic",
    schema=params("a", "b", "c", "d", q=True, complex_names="abcd"),
    variable=VariableMap.trig(),
    series=_AW.series,
    recurrence=_AW.recurrence(),
    normalizer=_AW.kappa,
    measure=_AW.measure,
    norm=_AW.norm,
    positivity=_AW.positivity,
    sampler=aw_sampler("abcd"),
    defaults={"a": 0.5, "b": 0.3, "c": -0.4, "d": 0.2, "q": 0.5},
    points=TRIG_POINTS,
    equations=(
        _AW.z_equation("askey_wilson_qdifference"),
        _AW.dq_equation("askey_wilson_qderivative"),
    ),
    generating_functions=(
        _AW.pair_gf("askey-wilson", "ab", (0, 1)),
        _AW.pair_gf("askey-wilson", "ac", (0, 2)),
        _AW.pair_gf("askey-wilson", "ad", (0, 3)),
    ),
    norm_formula="(abcdq^{n-1};q)_n (abcdq^{2n};q)_∞/(q^{n+1}, abq^n, acq^n, adq^n, bcq^n, bdq^n, cdq^n;q)_∞",
))

# q-Racah

def _qracah_condition(p: P) -> Tuple[int, int]:
    q = p["q"]
    values = (p["alpha"]*q, p["beta"]*p["delta"]*q, p["gamma"]*q)
    found = []
    for k, v in enumerate(values):
        if v <= 0:
            continue
        x = -math.log(v)/math.log(q)
        N = round(x)
        if N >= 0 and abs(x-N) <= 1e-9*max(1.0, x):
            found.append((N, k))
    if not found:
        raise DomainError("q-Racah parameters need alpha q = q^-N, beta delta q = q^-N or gamma q = q^-N "
                          "for a non-negative integer N.")
    return min(found)

def _qracah_bound(p: P) -> int:
    return _qracah_condition(p)[0]

def _qracah_series(p: P, n: int, x: complex) -> Tuple[complex, Any]:
    al, be, ga, de, q = p["alpha"], p["beta"], p["gamma"], p["delta"], p["q"]
    qx = qpower(q, x)
    return 1+0j, phi([q**-n, al*be*q**(n+1), 1/qx, ga*de*q*qx], [al*q, be*de*q, ga*q], q, q, _qracah_bound(p))

def _qracah_coefficients(p: P, n: int) -> Tuple[complex, complex, complex]:
    al, be, ga, de, q = p["alpha"], p["beta"], p["gamma"], p["delta"], p["q"]
    qn = q**n
    A = (1-al*q*qn)*(1-ga*q*qn)*(1-al*be*q*qn)*(1-be*de*q*qn)/((1-al*be*q*qn*qn)*(1-al*be*q*q*qn*qn))
    C = 0j if n == 0 else q*(1-qn)*(1-be*qn)*(de-al*qn)*(ga-al*be*qn)/((1-al*be*qn*qn)*(1-al*be*q*qn*qn))
    return A, -(A+C), C

def _qracah_mass(p: P) -> Callable[[int], complex]:
    al, be, ga, de, q = p["alpha"], p["beta"], p["gamma"], p["delta"], p["q"]
    def mass(x: int) -> complex:
        num = qps((ga*de*q, al*q, be*de*q, ga*q), q, x)*(1-ga*de*q**(2*x+1))
        den = qps((q, ga*de*q/al, ga*q/be, de*q), q, x)*(al*be*q)**x*(1-ga*de*q)
        return num/den
    return mass

def _qracah_norm(p: P, n: int) -> complex:
    al, be, ga, de, q = p["alpha"], p["beta"], p["gamma"], p["delta"], p["q"]
    N, which = _qracah_condition(p)
    qN = q**-N
    if which == 0:
        return (qps((ga*de*q*q, 1/be), q, N)/qps((ga*q/be, de*q), q, N)
                *(1-be*qN)*(ga*de*q)**n/(1-be*q**(2*n)*qN)
                *qps((q, be*q, qN/de, be*qN/ga), q, n)/qps((be*qN, qN, be*de*q, ga*q), q, n))
    if which == 1:
        return (qps((be/ga, al*be*q*q), q, N)/qps((al*be*q/ga, be*q), q, N)
                *(1-al*be*q)*(ga*qN/be)**n/(1-al*be*q**(2*n+1))
                *qps((q, be*q, al*be*q**(N+2), al*be*q/ga), q, n)/qps((al*be*q, al*q, qN, ga*q), q, n))
    return (qps((al*be*q*q, 1/de), q, N)/qps((be*q, al*q/de), q, N)
            *(1-al*be*q)*(de*qN)**n/(1-al*be*q**(2*n+1))
            *qps((q, be*q, al*q/de, al*be*q**(N+2)), q, n)/qps((al*be*q, al*q, be*de*q, qN), q, n))

def _qracah_positivity(p: P) -> Optional[str]:
    try:
        N = _qracah_bound(p)
    except DomainError as e:
        return str(e)
    mass = _qracah_mass(p)
    return positive_masses([(complex(x), mass(x)) for x in range(N+1)])

def _qracah_sampler(rng: Random) -> Dict[str, Any]:
    q = qbase(rng, 0.3, 0.7)
    N = rng.randint(2, 5)
    return {"alpha": q**(-N-1), "beta": -real_in(rng, 0.1, 0.9), "gamma": real_in(rng, 0.1, 0.9),
            "delta": real_in(rng, 0.1, 0.9), "q": q}

def _qracah_equation(p: P, n: int, x: complex, y: Evaluation, eig: complex) -> Sequence[complex]:
    al, be, ga, de, q = p["alpha"], p["beta"], p["gamma"], p["delta"], p["q"]
    qx = qpower(q, x)
    B = (1-al*q*qx)*(1-be*de*q*qx)*(1-ga*q*qx)*(1-ga*de*q*qx)/((1-ga*de*q*qx*qx)*(1-ga*de*q*q*qx*qx))
    D = q*(1-qx)*(1-de*qx)*(be-ga*qx)*(al-ga*de*qx)/((1-ga*de*qx*qx)*(1-ga*de*q*qx*qx))
    return three_point(eig, 1, B, D, y(x+1), y(x), y(x-1))

def _qracah_gf(suffix: str, first: Callable[[P], complex],
               second: Callable[[P], Tuple[complex, complex, complex]],
               coefficient: Callable[[P, int], complex]) -> GFSpec:
    # first: a with 2phi1~(a q^{x+1}, gamma delta q^{x+1}; a q; q^{-x} t)
    # second: (u, v, w) with 2phi1(u q^{-x}, v q^{-x}; w; gamma delta q^{x+1} t)
    def lhs(p: P, x: complex, order: int) -> PowerSeries:
        ga, de, q = p["gamma"], p["delta"], p["q"]
        qx = qpower(q, x)
        a = first(p)
        u, v, w = second(p)
        left = series_gf(phi([a*q*qx, ga*de*q*qx], [a*q], q, 1/qx, _qracah_bound(p)), order)
        right = series_gf(phi([u/qx, v/qx], [w], q, ga*de*q*qx), order)
        return left*right
    return GFSpec(f"q_racah_gf_{suffix}", "q-racah", lhs, coefficient, "TRUNCATED")

add(FamilyDescriptor(
    "q-racah", "q-Racah", "basic",
    schema=params("alpha", "beta", "gamma", "delta", q=True),
    variable=VariableMap.qlattice(lambda p: p["gamma"]*p["delta"]*p["q"]),
    series=_qracah_series,
    recurrence=Recurrence(lambda p: (1, -1-p["gamma"]*p["delta"]*p["q"]), _qracah_coefficients),
    normalizer=lambda p, n: 1,
    measure=lambda p: DiscreteMeasure(lambda x: x, _qracah_mass(p), _qracah_bound(p)+1),
    norm=_qracah_norm,
    positivity=_qracah_positivity,
    sampler=_qracah_sampler,
    defaults={"alpha": 32.0, "beta": -0.5, "gamma": 0.5, "delta": 0.4, "q": 0.5},
    points=lambda p: [complex(x) for x in range(_qracah_bound(p)+1)],
    degree_bound=_qracah_bound,
    equations=(
        EquationSpec("q_racah_qdifference", "QDIFFERENCE_X", _qracah_equation,
                     lambda p, n: p["q"]**-n*(1-p["q"]**n)*(1-p["alpha"]*p["beta"]*p["q"]**(n+1)),
                     grid(0.1, 3.1, 6)),
    ),
    generating_functions=(
        _qracah_gf("alpha", lambda p: p["alpha"],
                   lambda p: (p["beta"]/p["gamma"], 1/p["delta"], p["beta"]*p["q"]),
                   lambda p, n: qps((p["beta"]*p["delta"]*p["q"], p["gamma"]*p["q"]), p["q"], n)
                   /qps((p["beta"]*p["q"], p["q"]), p["q"], n)),
        _qracah_gf("beta_delta", lambda p: p["beta"]*p["delta"],
                   lambda p: (p["alpha"]/(p["gamma"]*p["delta"]), 1/p["delta"], p["alpha"]*p["q"]/p["delta"]),
                   lambda p, n: qps((p["alpha"]*p["q"], p["gamma"]*p["q"]), p["q"], n)
                   /qps((p["alpha"]*p["q"]/p["delta"], p["q"]), p["q"], n)),
        _qracah_gf("gamma", lambda p: p["gamma"],
                   lambda p: (p["alpha"]/(p["gamma"]*p["delta"]), p["beta"]/p["gamma"],
                              p["alpha"]*p["beta"]*p["q"]/p["gamma"]),
                   lambda p, n: qps((p["alpha"]*p["q"], p["beta"]*p["delta"]*p["q"]), p["q"], n)
                   /qps((p["alpha"]*p["beta"]*p["q"]/p["gamma"], p["q"]), p["q"], n)),
    ),
    norm_formula="branch of the closed form selected by which of αq, βδq, γq equals q^{-N}",
))

# Continuous dual q-Hahn

_CDQH = AskeyWilsonForm(lambda p: (p["a"], p["b"], p["c"]))

add(FamilyDescriptor(
    "continuous-dual-q-hahn", "Continuous dual q-Hahn", "basic",
    schema=params("a", "b", "c", q=True, complex_names="abc"),
    variable=VariableMap.trig(),
    series=_CDQH.series,
    recurrence=_CDQH.recurrence(),
    normalizer=_CDQH.kappa,
    measure=_CDQH.measure,
    norm=_CDQH.norm,
    positivity=_CDQH.positivity,
    sampler=aw_sampler("abc"),
    defaults={"a": 0.5, "b": 0.3, "c": -0.4, "q": 0.5},
    points=TRIG_POINTS,
    equations=(
        _CDQH.z_equation("continuous_dual_q_hahn_qdifference"),
        _CDQH.dq_equation("continuous_dual_q_hahn_qderivative"),
    ),
    generating_functions=(
        _CDQH.pair_gf("continuous-dual-q-hahn", "ab", (0, 1)),
        _CDQH.pair_gf("continuous-dual-q-hahn", "ac", (0, 2)),
        _CDQH.pair_gf("continuous-dual-q-hahn", "bc", (1, 2)),
    ),
    norm_formula="1/(q^{n+1}, abq^n, acq^n, bcq^n;q)_∞",
))

# Continuous q-Hahn

def _cqh_alphas(p: P) -> Tuple[complex, ...]:
    e = cmath.exp(1j*p["phi"])
    return (p["a"]*e, p["b"]*e, p["c"]/e, p["d"]/e)

_CQH = AskeyWilsonForm(_cqh_alphas)

def _cqh_positivity(p: P) -> Optional[str]:
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    real = a.imag == 0 and b.imag == 0
    return require((abs(c-a) <= 1e-12*max(1.0, abs(a)) and abs(d-b) <= 1e-12*max(1.0, abs(b)), "need c = a and d = b"),
                   (real or abs(b-a.conjugate()) <= 1e-12*max(1.0, abs(a)), "need a, b real or b = conj(a)"),
                   (abs(a) < 1 and abs(b) < 1, "need |a|, |b| < 1"))

def _cqh_sampler(rng: Random) -> Dict[str, Any]:
    q = qbase(rng, 0.25, 0.75)
    ph = real_in(rng, 0.1, 1.4)
    if rng.random() < 0.5:
        a: complex = complex(real_in(rng, -0.7, 0.7))
        b: complex = complex(real_in(rng, -0.7, 0.7))
    else:
        a = complex(real_in(rng, -0.5, 0.5), real_in(rng, 0.1, 0.5))
        b = a.conjugate()
    return {"a": a, "b": b, "c": a, "d": b, "phi": ph, "q": q}

add(FamilyDescriptor(
    "continuous-q-hahn", "Continuous q-Hahn", "basic",
    schema=params("a", "b", "c", "d", "phi", q=True, complex_names="abcd"),
    variable=VariableMap.trig(),
    series=_CQH.series,
    recurrence=_CQH.recurrence(),
    normalizer=_CQH.kappa,
    measure=_CQH.measure,
    norm=_CQH.norm,
    positivity=_cqh_positivity,
    sampler=_cqh_sampler,
    defaults={"a": 0.4, "b": 0.3, "c": 0.4, "d": 0.3, "phi": 0.6, "q": 0.5},
    points=TRIG_POINTS,
    equations=(
        _CQH.z_equation("continuous_q_hahn_qdifference"),
        _CQH.dq_equation("continuous_q_hahn_qderivative"),
    ),
    generating_functions=(
        _CQH.pair_gf("continuous-q-hahn", "ab", (0, 1)),
        _CQH.pair_gf("continuous-q-hahn", "ac", (0, 2)),
        _CQH.pair_gf("continuous-q-hahn", "ad", (0, 3)),
    ),
    norm_formula="(abcdq^{n-1};q)_n (abcdq^{2n};q)_∞/(q^{n+1}, abe^{2iφ}q^n, acq^n, adq^n, bcq^n, bdq^n, cde^{-2iφ}q^n;q)_∞",
))
