"""
    Limit relations from the basic to the classical families, as :math:`q \\uparrow 1`.
    The schedule point of every relation here is the base :math:`q` itself.
"""

from __future__ import annotations

import cmath
import math
from typing import List

from ...families import qpower
from ..limits import HERMITE_Q_SCHEDULE, Q_SCHEDULE_LONG
from . import (P, add, askey_wilson_kappa, askey_wilson_z, ev, fixed, grid, lattice_N, q_laguerre_shifted,
               qfact, rec, upto, upto_N)

_JACOBI = {"alpha": 0.5, "beta": 1.5}
_LAGUERRE = {"alpha": 0.5}
_CHARLIER = {"a": 1.2}
_INTEGERS = fixed(0, 1, 2, 3.5)
_HERMITE_POINTS = grid(-1.5, 1.5, 5)


def _qs(q: float, *exponents: complex) -> List[complex]:
    return [qpower(q, e) for e in exponents]

def _eps(q: float) -> float:
    """ The scale :math:`\\sqrt{1-q^2}` of the discrete Hermite-type limits. """
    return math.sqrt(1-q*q)

def _half_eps(q: float) -> float:
    """ The scale :math:`\\sqrt{(1-q)/2}` of the continuous Hermite-type limits. """
    return math.sqrt((1-q)/2)

def _jacobi_ratio(p: P, n: int, x: complex) -> complex:
    return ev("jacobi", p, n, x)/ev("jacobi", p, n, 1)

def _laguerre_ratio(p: P, n: int, x: complex) -> complex:
    return ev("laguerre", p, n, x)/ev("laguerre", p, n, 0)


# Askey-Wilson level, at explicit points z on the unit circle's image

def _askey_wilson_wilson(p: P, n: int, x: complex, q: float) -> complex:
    alphas = _qs(q, p["a"], p["b"], p["c"], p["d"])
    z = qpower(q, 1j*x)
    return askey_wilson_kappa(alphas, q, n)*askey_wilson_z(alphas, q, n, z)/(1-q)**(3*n)

add("askey_wilson_wilson", "q-limit", "askey-wilson", "wilson",
    "p_n((q^(ix)+q^(-ix))/2;q^a,q^b,q^c,q^d|q)/(1-q)^3n -> W_n(x^2;a,b,c,d) as q -> 1",
    _askey_wilson_wilson,
    lambda p, n, x: ev("wilson", p, n, x),
    {"a": 0.5, "b": 0.7, "c": 1.1, "d": 1.3}, upto(3), grid(0.2, 2.0, 4), Q_SCHEDULE_LONG)

def _qracah_racah(p: P, n: int, x: complex, q: float) -> complex:
    al, be, ga, de = _qs(q, p["alpha"], p["beta"], p["gamma"], p["delta"])
    return ev("q-racah", {"alpha": al, "beta": be, "gamma": ga, "delta": de, "q": q}, n, x)

add("q_racah_racah", "q-limit", "q-racah", "racah",
    "R_n(mu(x);q^alpha,q^beta,q^gamma,q^delta|q) -> R_n(lambda(x);alpha,beta,gamma,delta) as q -> 1",
    _qracah_racah,
    lambda p, n, x: ev("racah", p, n, x),
    {"alpha": -5.0, "beta": 5.7, "gamma": 0.5, "delta": 0.7}, upto(4), fixed(0, 1, 2, 3, 4), Q_SCHEDULE_LONG)

def _cdqh_cdh(p: P, n: int, x: complex, q: float) -> complex:
    alphas = _qs(q, p["a"], p["b"], p["c"])
    z = qpower(q, 1j*x)
    return askey_wilson_kappa(alphas, q, n)*askey_wilson_z(alphas, q, n, z)/(1-q)**(2*n)

add("continuous_dual_q_hahn_continuous_dual_hahn", "q-limit", "continuous-dual-q-hahn", "continuous-dual-hahn",
    "p_n((q^(ix)+q^(-ix))/2;q^a,q^b,q^c|q)/(1-q)^2n -> S_n(x^2;a,b,c) as q -> 1",
    _cdqh_cdh,
    lambda p, n, x: ev("continuous-dual-hahn", p, n, x),
    {"a": 0.6, "b": 0.9, "c": 1.4}, upto(4), grid(0.2, 2.0, 4), Q_SCHEDULE_LONG)

def _cqh_ch(p: P, n: int, x: complex, q: float) -> complex:
    e = cmath.exp(1j*p["phi"])
    a, b, c, d = _qs(q, p["a"], p["b"], p["c"], p["d"])
    alphas = (a*e, b*e, c/e, d/e)
    z = e*qpower(q, -1j*x)
    return askey_wilson_kappa(alphas, q, n)*askey_wilson_z(alphas, q, n, z)/((1-q)**n*qfact(q, n))

add("continuous_q_hahn_continuous_hahn", "q-limit", "continuous-q-hahn", "continuous-hahn",
    "p_n(cos(ln q^-x+phi);q^a,q^b,q^c,q^d;q)/((1-q)^n (q;q)_n) -> (-2 sin phi)^n p_n(x;a,b,c,d) as q -> 1",
    _cqh_ch,
    lambda p, n, x: ((-2*math.sin(p["phi"]))**n
                     *ev("continuous-hahn", {k: p[k] for k in "abcd"}, n, x)),
    {"a": 0.6, "b": 1.1, "c": 0.7, "d": 1.2, "phi": 0.6}, upto(3), grid(-1.0, 1.0, 3), Q_SCHEDULE_LONG)


# Big q-Jacobi, q-Hahn and dual q-Hahn

add("big_q_jacobi_jacobi_shifted", "q-limit", "big-q-jacobi", "jacobi",
    "P_n(x;q^alpha,q^beta,0;q) -> P_n^(alpha,beta)(2x-1)/P_n^(alpha,beta)(1) as q -> 1",
    lambda p, n, x, q: ev("big-q-jacobi", {"a": qpower(q, p["alpha"]), "b": qpower(q, p["beta"]), "c": 0.0,
                                           "q": q}, n, x),
    lambda p, n, x: _jacobi_ratio(p, n, 2*x-1),
    _JACOBI, upto(4), grid(0.1, 0.9, 5), Q_SCHEDULE_LONG)

add("big_q_jacobi_jacobi", "q-limit", "big-q-jacobi", "jacobi",
    "P_n(x;q^alpha,q^beta,-q^gamma;q) -> P_n^(alpha,beta)(x)/P_n^(alpha,beta)(1) as q -> 1",
    lambda p, n, x, q: ev("big-q-jacobi", {"a": qpower(q, p["alpha"]), "b": qpower(q, p["beta"]),
                                           "c": -qpower(q, p["gamma"]), "q": q}, n, x),
    lambda p, n, x: _jacobi_ratio({"alpha": p["alpha"], "beta": p["beta"]}, n, x),
    dict(_JACOBI, gamma=0.5), upto(4), grid(-0.8, 0.8, 5), Q_SCHEDULE_LONG)

add("big_q_legendre_legendre_shifted", "q-limit", "big-q-legendre", "legendre",
    "P_n(x;0;q) -> P_n(2x-1) as q -> 1",
    lambda p, n, x, q: ev("big-q-legendre", {"c": 0.0, "q": q}, n, x),
    lambda p, n, x: ev("legendre", {}, n, 2*x-1),
    {}, upto(4), grid(0.1, 0.9, 5), Q_SCHEDULE_LONG)

add("big_q_legendre_legendre", "q-limit", "big-q-legendre", "legendre",
    "P_n(x;-q^gamma;q) -> P_n(x) as q -> 1",
    lambda p, n, x, q: ev("big-q-legendre", {"c": -qpower(q, p["gamma"]), "q": q}, n, x),
    lambda p, n, x: ev("legendre", {}, n, x),
    {"gamma": 0.5}, upto(4), grid(-0.8, 0.8, 5), Q_SCHEDULE_LONG)

add("q_hahn_hahn", "q-limit", "q-hahn", "hahn",
    "Q_n(q^-x;q^alpha,q^beta,N|q) -> Q_n(x;alpha,beta,N) as q -> 1",
    lambda p, n, x, q: ev("q-hahn", {"alpha": qpower(q, p["alpha"]), "beta": qpower(q, p["beta"]), "N": p["N"],
                                     "q": q}, n, x),
    lambda p, n, x: ev("hahn", p, n, x),
    {"alpha": 0.5, "beta": 1.5, "N": 5}, upto_N, lattice_N, Q_SCHEDULE_LONG)

add("dual_q_hahn_dual_hahn", "q-limit", "dual-q-hahn", "dual-hahn",
    "R_n(mu(x);q^gamma,q^delta,N|q) -> R_n(lambda(x);gamma,delta,N) as q -> 1",
    lambda p, n, x, q: ev("dual-q-hahn", {"gamma": qpower(q, p["gamma"]), "delta": qpower(q, p["delta"]),
                                          "N": p["N"], "q": q}, n, x),
    lambda p, n, x: ev("dual-hahn", p, n, x),
    {"gamma": 0.5, "delta": 1.5, "N": 5}, upto_N, lattice_N, Q_SCHEDULE_LONG)


# Meixner-Pollaczek

def _pair_alphas(p: P, q: float) -> List[complex]:
    e = cmath.exp(1j*p["phi"])
    a = qpower(q, p["lambda"])
    return [a*e, a/e]

add("al_salam_chihara_meixner_pollaczek", "q-limit", "al-salam-chihara", "meixner-pollaczek",
    "Q_n(cos(ln q^x+phi);q^l e^(i phi),q^l e^(-i phi)|q)/(q;q)_n -> P_n^(l)(x;phi) as q -> 1",
    lambda p, n, x, q: (askey_wilson_kappa(_pair_alphas(p, q), q, n)
                        *askey_wilson_z(_pair_alphas(p, q), q, n, qpower(q, 1j*x)*cmath.exp(1j*p["phi"]))
                        /qfact(q, n)),
    lambda p, n, x: ev("meixner-pollaczek", p, n, x),
    {"lambda": 0.8, "phi": 1.1}, upto(4), grid(-1.0, 1.0, 5), Q_SCHEDULE_LONG)

add("q_meixner_pollaczek_meixner_pollaczek", "q-limit", "q-meixner-pollaczek", "meixner-pollaczek",
    "P_n(cos(ln q^-x+phi);q^l|q) -> P_n^(l)(x;-phi) = P_n^(l)(-x;phi) as q -> 1",
    lambda p, n, x, q: (askey_wilson_kappa(_pair_alphas(p, q), q, n)
                        *askey_wilson_z(_pair_alphas(p, q), q, n, qpower(q, -1j*x)*cmath.exp(1j*p["phi"]))
                        /qfact(q, n)),
    lambda p, n, x: ev("meixner-pollaczek", p, n, -x),
    {"lambda": 0.8, "phi": 1.1}, upto(4), grid(-1.0, 1.0, 5), Q_SCHEDULE_LONG)


# Continuous q-Jacobi, Rogers and continuous q-Legendre

add("continuous_q_jacobi_jacobi", "q-limit", "continuous-q-jacobi", "jacobi",
    "P_n^(alpha,beta)(x|q) and P_n^(alpha,beta)(x;q) -> P_n^(alpha,beta)(x) as q -> 1",
    (lambda p, n, x, q: ev("continuous-q-jacobi", dict(p, q=q), n, x),
     lambda p, n, x, q: ev("continuous-q-jacobi-rahman", dict(p, q=q), n, x)),
    lambda p, n, x: ev("jacobi", p, n, x),
    _JACOBI, upto(4), grid(-0.8, 0.8, 5), Q_SCHEDULE_LONG)

add("continuous_q_ultraspherical_gegenbauer", "q-limit", "continuous-q-ultraspherical", "gegenbauer",
    "C_n(x;q^lambda|q) -> C_n^(lambda)(x) as q -> 1",
    lambda p, n, x, q: ev("continuous-q-ultraspherical", {"beta": qpower(q, p["lambda"]), "q": q}, n, x),
    lambda p, n, x: ev("gegenbauer", p, n, x),
    {"lambda": 0.75}, upto(4), grid(-0.8, 0.8, 5), Q_SCHEDULE_LONG)

add("continuous_q_legendre_legendre", "q-limit", "continuous-q-legendre", "legendre",
    "P_n(x;q) and P_n(x|q) -> P_n(x) as q -> 1",
    (lambda p, n, x, q: ev("continuous-q-legendre", {"q": q}, n, x),
     lambda p, n, x, q: ev("continuous-q-jacobi", {"alpha": 0.0, "beta": 0.0, "q": q}, n, x)),
    lambda p, n, x: ev("legendre", {}, n, x),
    {}, upto(4), grid(-0.8, 0.8, 5), Q_SCHEDULE_LONG)


# Big and little q-Jacobi to Laguerre and Jacobi

add("big_q_laguerre_laguerre", "q-limit", "big-q-laguerre", "laguerre",
    "P_n(x;q^alpha,q^beta/(1-q);q) -> L_n^(alpha)(x-1)/L_n^(alpha)(0) as q -> 1",
    lambda p, n, x, q: ev("big-q-laguerre", {"a": qpower(q, p["alpha"]), "b": qpower(q, p["beta"])/(1-q),
                                             "q": q}, n, x),
    lambda p, n, x: _laguerre_ratio({"alpha": p["alpha"]}, n, x-1),
    dict(_LAGUERRE, beta=0.5), upto(4), fixed(0.2, 1.0, 2.0, 3.0), Q_SCHEDULE_LONG)

add("little_q_jacobi_jacobi", "q-limit", "little-q-jacobi", "jacobi",
    "p_n(x;q^alpha,q^beta|q) -> P_n^(alpha,beta)(1-2x)/P_n^(alpha,beta)(1) as q -> 1",
    lambda p, n, x, q: ev("little-q-jacobi", {"a": qpower(q, p["alpha"]), "b": qpower(q, p["beta"]), "q": q},
                          n, x),
    lambda p, n, x: _jacobi_ratio(p, n, 1-2*x),
    _JACOBI, upto(4), grid(0.1, 0.9, 5), Q_SCHEDULE_LONG)

add("little_q_legendre_legendre", "q-limit", "little-q-legendre", "legendre",
    "p_n(x|q) -> P_n(1-2x) as q -> 1",
    lambda p, n, x, q: ev("little-q-legendre", {"q": q}, n, x),
    lambda p, n, x: ev("legendre", {}, n, 1-2*x),
    {}, upto(4), grid(0.1, 0.9, 5), Q_SCHEDULE_LONG)

add("little_q_jacobi_laguerre", "q-limit", "little-q-jacobi", "laguerre",
    "p_n((1-q)x/2;q^alpha,-q^beta|q) -> L_n^(alpha)(x)/L_n^(alpha)(0) as q -> 1",
    lambda p, n, x, q: ev("little-q-jacobi", {"a": qpower(q, p["alpha"]), "b": -qpower(q, p["beta"]), "q": q},
                          n, (1-q)*x/2),
    lambda p, n, x: _laguerre_ratio({"alpha": p["alpha"]}, n, x),
    dict(_LAGUERRE, beta=0.5), upto(4), fixed(0.2, 1.0, 2.0, 3.0), Q_SCHEDULE_LONG)


# q-Meixner and the q-Krawtchouk families

add("q_meixner_meixner", "q-limit", "q-meixner", "meixner",
    "M_n(q^-x;q^(beta-1),c/(1-c);q) -> M_n(x;beta,c) as q -> 1",
    lambda p, n, x, q: ev("q-meixner", {"b": qpower(q, p["beta"]-1), "c": p["c"]/(1-p["c"]), "q": q}, n, x),
    lambda p, n, x: ev("meixner", p, n, x),
    {"beta": 1.5, "c": 0.4}, upto(4), _INTEGERS, Q_SCHEDULE_LONG)

add("quantum_q_krawtchouk_krawtchouk", "q-limit", "quantum-q-krawtchouk", "krawtchouk",
    "K_n^qtm(q^-x;p,N;q) -> K_n(x;1/p,N) as q -> 1",
    lambda p, n, x, q: ev("quantum-q-krawtchouk", dict(p, q=q), n, x),
    lambda p, n, x: ev("krawtchouk", {"p": 1/p["p"], "N": p["N"]}, n, x),
    {"p": 2.0, "N": 5}, upto_N, lattice_N, Q_SCHEDULE_LONG)

add("q_krawtchouk_krawtchouk", "q-limit", "q-krawtchouk", "krawtchouk",
    "K_n(q^-x;p,N;q) -> K_n(x;1/(p+1),N) as q -> 1",
    lambda p, n, x, q: ev("q-krawtchouk", dict(p, q=q), n, x),
    lambda p, n, x: ev("krawtchouk", {"p": 1/(p["p"]+1), "N": p["N"]}, n, x),
    {"p": 0.5, "N": 5}, upto_N, lattice_N, Q_SCHEDULE_LONG)

add("affine_q_krawtchouk_krawtchouk", "q-limit", "affine-q-krawtchouk", "krawtchouk",
    "K_n^Aff(q^-x;p,N|q) -> K_n(x;1-p,N) as q -> 1",
    lambda p, n, x, q: ev("affine-q-krawtchouk", dict(p, q=q), n, x),
    lambda p, n, x: ev("krawtchouk", {"p": 1-p["p"], "N": p["N"]}, n, x),
    {"p": 0.3, "N": 5}, upto_N, lattice_N, Q_SCHEDULE_LONG)

add("dual_q_krawtchouk_krawtchouk", "q-limit", "dual-q-krawtchouk", "krawtchouk",
    "K_n(lambda(x);1-1/p,N|q) -> K_n(x;p,N) as q -> 1",
    lambda p, n, x, q: ev("dual-q-krawtchouk", {"c": 1-1/p["p"], "N": p["N"], "q": q}, n, x),
    lambda p, n, x: ev("krawtchouk", p, n, x),
    {"p": 0.3, "N": 5}, upto_N, lattice_N, Q_SCHEDULE_LONG)


# Continuous big q-Hermite and continuous q-Laguerre

add("continuous_big_q_hermite_hermite", "q-limit", "continuous-big-q-hermite", "hermite",
    "H_n(x sqrt((1-q)/2);0|q)/((1-q)/2)^(n/2) -> H_n(x) as q -> 1",
    lambda p, n, x, q: (rec("continuous-big-q-hermite", {"a": 0.0, "q": q}, n, x*_half_eps(q))
                        /_half_eps(q)**n),
    lambda p, n, x: ev("hermite", {}, n, x),
    {}, upto(5), _HERMITE_POINTS, Q_SCHEDULE_LONG)

add("continuous_big_q_hermite_hermite_shifted", "q-limit", "continuous-big-q-hermite", "hermite",
    "H_n(x sqrt((1-q)/2);a sqrt(2(1-q))|q)/((1-q)/2)^(n/2) -> H_n(x-a) as q -> 1",
    lambda p, n, x, q: (rec("continuous-big-q-hermite", {"a": p["a"]*math.sqrt(2*(1-q)), "q": q},
                            n, x*_half_eps(q))
                        /_half_eps(q)**n),
    lambda p, n, x: ev("hermite", {}, n, x-p["a"]),
    {"a": 0.5}, upto(5), _HERMITE_POINTS, Q_SCHEDULE_LONG)

add("continuous_q_laguerre_laguerre", "q-limit", "continuous-q-laguerre", "laguerre",
    "P_n^(alpha)(q^x|q) -> L_n^(alpha)(2x) as q -> 1",
    lambda p, n, x, q: ev("continuous-q-laguerre", dict(p, q=q), n, qpower(q, x)),
    lambda p, n, x: ev("laguerre", p, n, 2*x),
    _LAGUERRE, upto(4), fixed(0.2, 0.5, 1.0, 2.0), Q_SCHEDULE_LONG)

add("continuous_q_laguerre_laguerre_rahman", "q-limit", "continuous-q-laguerre-rahman", "laguerre",
    "P_n^(alpha)(q^x;q) -> L_n^(alpha)(x) as q -> 1",
    lambda p, n, x, q: ev("continuous-q-laguerre-rahman", dict(p, q=q), n, qpower(q, x)),
    lambda p, n, x: ev("laguerre", p, n, x),
    _LAGUERRE, upto(4), fixed(0.2, 0.5, 1.0, 2.0), Q_SCHEDULE_LONG)


# Little q-Laguerre, q-Laguerre and the q-Charlier families

add("little_q_laguerre_laguerre", "q-limit", "little-q-laguerre", "laguerre",
    "p_n((1-q)x;q^alpha|q) -> L_n^(alpha)(x)/L_n^(alpha)(0) as q -> 1",
    lambda p, n, x, q: ev("little-q-laguerre", {"a": qpower(q, p["alpha"]), "q": q}, n, (1-q)*x),
    _laguerre_ratio,
    _LAGUERRE, upto(4), fixed(0.2, 1.0, 2.0, 3.0), Q_SCHEDULE_LONG)

add("little_q_laguerre_charlier", "q-limit", "little-q-laguerre", "charlier",
    "p_n(q^x;(1-q)a|q)/(q-1)^n -> a^n C_n(x;a) as q -> 1",
    lambda p, n, x, q: rec("little-q-laguerre", {"a": (1-q)*p["a"], "q": q}, n, qpower(q, x))/(q-1)**n,
    lambda p, n, x: p["a"]**n*ev("charlier", p, n, x),
    _CHARLIER, upto(4), _INTEGERS, Q_SCHEDULE_LONG)

add("q_laguerre_laguerre", "q-limit", "q-laguerre", "laguerre",
    "L_n^(alpha)((1-q)x;q) -> L_n^(alpha)(x) as q -> 1",
    lambda p, n, x, q: ev("q-laguerre", dict(p, q=q), n, (1-q)*x),
    lambda p, n, x: ev("laguerre", p, n, x),
    _LAGUERRE, upto(4), fixed(0.2, 1.0, 2.0, 3.0), Q_SCHEDULE_LONG)

add("q_laguerre_charlier", "q-limit", "q-laguerre", "charlier",
    "(q;q)_n L_n^(alpha)(-q^-x;q) -> C_n(x;a) with q^alpha = 1/(a(q-1)), as q -> 1",
    lambda p, n, x, q: q_laguerre_shifted(p["a"], q, n, x),
    lambda p, n, x: ev("charlier", p, n, x),
    _CHARLIER, upto(4), _INTEGERS, Q_SCHEDULE_LONG)

add("alternative_q_charlier_charlier", "q-limit", "alternative-q-charlier", "charlier",
    "K_n(q^x;a(1-q);q)/(q-1)^n -> a^n C_n(x;a) as q -> 1",
    lambda p, n, x, q: rec("alternative-q-charlier", {"a": p["a"]*(1-q), "q": q}, n, qpower(q, x))/(q-1)**n,
    lambda p, n, x: p["a"]**n*ev("charlier", p, n, x),
    _CHARLIER, upto(4), _INTEGERS, Q_SCHEDULE_LONG)

add("q_charlier_charlier", "q-limit", "q-charlier", "charlier",
    "C_n(q^-x;a(1-q);q) -> C_n(x;a) as q -> 1",
    lambda p, n, x, q: ev("q-charlier", {"a": p["a"]*(1-q), "q": q}, n, x),
    lambda p, n, x: ev("charlier", p, n, x),
    _CHARLIER, upto(4), _INTEGERS, Q_SCHEDULE_LONG)


# Al-Salam-Carlitz and the Hermite level

add("al_salam_carlitz_i_charlier", "q-limit", "al-salam-carlitz-i", "charlier",
    "U_n^(a(q-1))(q^x;q)/(1-q)^n -> a^n C_n(x;a) as q -> 1",
    lambda p, n, x, q: rec("al-salam-carlitz-i", {"a": p["a"]*(q-1), "q": q}, n, qpower(q, x))/(1-q)**n,
    lambda p, n, x: p["a"]**n*ev("charlier", p, n, x),
    _CHARLIER, upto(4), _INTEGERS, Q_SCHEDULE_LONG)

add("al_salam_carlitz_i_hermite", "q-limit", "al-salam-carlitz-i", "hermite",
    "U_n^(a e-1)(x e;q)/e^n -> H_n(x-a)/2^n with e = sqrt(1-q^2), as q -> 1",
    lambda p, n, x, q: (rec("al-salam-carlitz-i", {"a": p["a"]*_eps(q)-1, "q": q}, n, x*_eps(q))
                        /_eps(q)**n),
    lambda p, n, x: ev("hermite", {}, n, x-p["a"])/2**n,
    {"a": 0.5}, upto(4), _HERMITE_POINTS, HERMITE_Q_SCHEDULE)

add("al_salam_carlitz_ii_charlier", "q-limit", "al-salam-carlitz-ii", "charlier",
    "V_n^(a(1-q))(q^-x;q)/(q-1)^n -> a^n C_n(x;a) as q -> 1",
    lambda p, n, x, q: rec("al-salam-carlitz-ii", {"a": p["a"]*(1-q), "q": q}, n, qpower(q, -x))/(q-1)**n,
    lambda p, n, x: p["a"]**n*ev("charlier", p, n, x),
    _CHARLIER, upto(4), _INTEGERS, Q_SCHEDULE_LONG)

add("al_salam_carlitz_ii_hermite", "q-limit", "al-salam-carlitz-ii", "hermite",
    "V_n^(a e+1)(x e+2;q)/e^n -> H_n(x-a)/2^n with e = sqrt(1-q^2), as q -> 1",
    lambda p, n, x, q: (rec("al-salam-carlitz-ii", {"a": p["a"]*_eps(q)+1, "q": q}, n, x*_eps(q)+2)
                        /_eps(q)**n),
    lambda p, n, x: ev("hermite", {}, n, x-p["a"])/2**n,
    {"a": 0.5}, upto(4), _HERMITE_POINTS, HERMITE_Q_SCHEDULE)

add("continuous_q_hermite_hermite", "q-limit", "continuous-q-hermite", "hermite",
    "H_n(x sqrt((1-q)/2)|q)/((1-q)/2)^(n/2) -> H_n(x) as q -> 1",
    lambda p, n, x, q: rec("continuous-q-hermite", {"q": q}, n, x*_half_eps(q))/_half_eps(q)**n,
    lambda p, n, x: ev("hermite", {}, n, x),
    {}, upto(5), _HERMITE_POINTS, Q_SCHEDULE_LONG)

def _stieltjes_wigert_hermite(p: P, n: int, x: complex, q: float) -> complex:
    arg = x*math.sqrt(2*(1-q))/q+1
    return qfact(q, n)*rec("stieltjes-wigert", {"q": q}, n, arg)/((1-q)/2)**(n/2)

add("stieltjes_wigert_hermite", "q-limit", "stieltjes-wigert", "hermite",
    "(q;q)_n S_n(x sqrt(2(1-q))/q+1;q)/((1-q)/2)^(n/2) -> (-1)^n H_n(x) as q -> 1",
    _stieltjes_wigert_hermite,
    lambda p, n, x: (-1)**n*ev("hermite", {}, n, x),
    {}, upto(4), _HERMITE_POINTS, HERMITE_Q_SCHEDULE)

add("discrete_q_hermite_i_hermite", "q-limit", "discrete-q-hermite-i", "hermite",
    "h_n(x sqrt(1-q^2);q)/(1-q^2)^(n/2) -> H_n(x)/2^n as q -> 1",
    lambda p, n, x, q: rec("discrete-q-hermite-i", {"q": q}, n, x*_eps(q))/_eps(q)**n,
    lambda p, n, x: ev("hermite", {}, n, x)/2**n,
    {}, upto(5), _HERMITE_POINTS, Q_SCHEDULE_LONG)

add("discrete_q_hermite_ii_hermite", "q-limit", "discrete-q-hermite-ii", "hermite",
    "h~_n(x sqrt(1-q^2);q)/(1-q^2)^(n/2) -> H_n(x)/2^n as q -> 1",
    lambda p, n, x, q: rec("discrete-q-hermite-ii", {"q": q}, n, x*_eps(q))/_eps(q)**n,
    lambda p, n, x: ev("hermite", {}, n, x)/2**n,
    {}, upto(5), _HERMITE_POINTS, Q_SCHEDULE_LONG)
