"""
    Limit relations and substitutions between the basic hypergeometric families.

    Substitutions which are exact identities ignore the schedule point: their errors sit at the rounding floor
    for every point of the schedule.
"""

from __future__ import annotations

import cmath
import math

from ...qcore import binom2, qpochhammer
from ...families import qpower
from ..limits import GEOMETRIC_SCHEDULE, QN_SCHEDULE, T_SCHEDULE, T_SCHEDULE_LONG
from . import (P, add, askey_wilson_kappa, count, ev, fixed, grid, lattice_N, qfact, rec, upto, upto_N)

_EXACT = T_SCHEDULE
_TRIG = grid(-0.9, 0.9, 5)
_QEXP = fixed(0, 1, 2, 3.5)
_POSITIVE = fixed(0.5, 1.0, 2.0, 4.0)


# Askey-Wilson

add("askey_wilson_continuous_dual_q_hahn", "basic", "askey-wilson", "continuous-dual-q-hahn",
    "p_n(x;a,b,c,0|q) = p_n(x;a,b,c|q)",
    lambda p, n, x, t: ev("askey-wilson", {"a": p["a"], "b": p["b"], "c": p["c"], "d": 0.0, "q": p["q"]}, n, x),
    lambda p, n, x: ev("continuous-dual-q-hahn", p, n, x),
    {"a": 0.5, "b": 0.3, "c": -0.4, "q": 0.5}, upto(4), _TRIG, _EXACT)

def _aw_rotated(p: P, n: int, x: complex, t: float) -> complex:
    e = cmath.exp(1j*p["phi"])
    return ev("askey-wilson", {"a": p["a"]*e, "b": p["b"]*e, "c": p["c"]/e, "d": p["d"]/e, "q": p["q"]}, n, x)

add("askey_wilson_continuous_q_hahn", "basic", "askey-wilson", "continuous-q-hahn",
    "p_n(cos(t+phi);a e^(i phi),b e^(i phi),c e^(-i phi),d e^(-i phi)|q) = p_n(cos(t+phi);a,b,c,d;q)",
    _aw_rotated,
    lambda p, n, x: ev("continuous-q-hahn", p, n, x),
    {"a": 0.4, "b": 0.3, "c": 0.4, "d": 0.3, "phi": 0.6, "q": 0.5}, upto(4), _TRIG, _EXACT)

def _aw_big_q_jacobi(p: P, n: int, x: complex, t: float) -> complex:
    a, q = 1/t, p["q"]
    alphas = (a, p["alpha"]*q/a, p["gamma"]*q/a, a*p["beta"]/p["gamma"])
    values = dict(zip("abcd", alphas), q=q)
    return ev("askey-wilson", values, n, x/(2*a))/askey_wilson_kappa(alphas, q, n)

add("askey_wilson_big_q_jacobi", "basic", "askey-wilson", "big-q-jacobi",
    "p~_n(x/(2a);a,alpha q/a,gamma q/a,a beta/gamma|q) -> P_n(x;alpha,beta,gamma;q) as a -> 0",
    _aw_big_q_jacobi,
    lambda p, n, x: ev("big-q-jacobi", {"a": p["alpha"], "b": p["beta"], "c": p["gamma"], "q": p["q"]}, n, x),
    {"alpha": 0.5, "beta": 0.4, "gamma": -0.6, "q": 0.5}, upto(4), grid(-0.8, 0.8, 5), T_SCHEDULE)

def _aw_continuous_q_jacobi(p: P, n: int, x: complex, t: float) -> complex:
    al, be, q = p["alpha"], p["beta"], p["q"]
    e = al/2+0.25
    values = {"a": q**e, "b": q**(e+0.5), "c": -q**(be/2+0.25), "d": -q**(be/2+0.75), "q": q}
    scale = qfact(q, n)*qpochhammer(-q**((al+be+1)/2), q, n)*qpochhammer(-q**((al+be+2)/2), q, n)
    return q**(e*n)*ev("askey-wilson", values, n, x)/scale

def _aw_continuous_q_jacobi_rahman(p: P, n: int, x: complex, t: float) -> complex:
    al, be, q = p["alpha"], p["beta"], p["q"]
    s = math.sqrt(q)
    values = {"a": s, "b": q**(al+0.5), "c": -q**(be+0.5), "d": -s, "q": q}
    return q**(n/2)*ev("askey-wilson", values, n, x)/(qfact(q, n)*qpochhammer(-q, q, n)**2)

add("askey_wilson_continuous_q_jacobi", "basic", "askey-wilson", "continuous-q-jacobi",
    "q^((alpha/2+1/4)n) p_n(x;q^(alpha/2+1/4),q^(alpha/2+3/4),-q^(beta/2+1/4),-q^(beta/2+3/4)|q)"
    "/(q,-q^((alpha+beta+1)/2),-q^((alpha+beta+2)/2);q)_n = P_n^(alpha,beta)(x|q)",
    _aw_continuous_q_jacobi,
    lambda p, n, x: ev("continuous-q-jacobi", p, n, x),
    {"alpha": 0.5, "beta": 0.3, "q": 0.5}, upto(4), _TRIG, _EXACT)

add("askey_wilson_continuous_q_jacobi_rahman", "basic", "askey-wilson", "continuous-q-jacobi-rahman",
    "q^(n/2) p_n(x;q^(1/2),q^(alpha+1/2),-q^(beta+1/2),-q^(1/2)|q)/(q,-q,-q;q)_n = P_n^(alpha,beta)(x;q)",
    _aw_continuous_q_jacobi_rahman,
    lambda p, n, x: ev("continuous-q-jacobi-rahman", p, n, x),
    {"alpha": 0.5, "beta": 0.3, "q": 0.5}, upto(4), _TRIG, _EXACT)

def _aw_rogers(p: P, n: int, x: complex, t: float) -> complex:
    be, q = p["beta"], p["q"]
    r, s = math.sqrt(be), math.sqrt(q)
    values = {"a": r, "b": r*s, "c": -r, "d": -r*s, "q": q}
    scale = qpochhammer(be*s, q, n)*qpochhammer(-be, q, n)*qpochhammer(-be*s, q, n)*qfact(q, n)
    return qpochhammer(be*be, q, n)*ev("askey-wilson", values, n, x)/scale

add("askey_wilson_continuous_q_ultraspherical", "basic", "askey-wilson", "continuous-q-ultraspherical",
    "(beta^2;q)_n p_n(x;b^(1/2),b^(1/2)q^(1/2),-b^(1/2),-b^(1/2)q^(1/2)|q)/(b q^(1/2),-b,-b q^(1/2),q;q)_n"
    " = C_n(x;beta|q)",
    _aw_rogers,
    lambda p, n, x: ev("continuous-q-ultraspherical", p, n, x),
    {"beta": 0.4, "q": 0.5}, upto(4), _TRIG, _EXACT)


# q-Racah

def _qracah(p: P, alpha: float, beta: float, gamma: float, delta: float, n: int, x: complex) -> complex:
    return ev("q-racah", {"alpha": alpha, "beta": beta, "gamma": gamma, "delta": delta, "q": p["q"]}, n, x)

add("q_racah_big_q_jacobi", "basic", "q-racah", "big-q-jacobi",
    "R_n(mu(x);a,b,c,0|q) = P_n(q^-x;a,b,c;q), with cq = q^-N",
    lambda p, n, x, t: _qracah(p, p["a"], p["b"], p["q"]**(-p["N"]-1), 0.0, n, x),
    lambda p, n, x: ev("big-q-jacobi", {"a": p["a"], "b": p["b"], "c": p["q"]**(-p["N"]-1), "q": p["q"]},
                       n, qpower(p["q"], -x)),
    {"a": 0.5, "b": 0.4, "N": 4, "q": 0.5}, upto_N, lattice_N, _EXACT)

add("q_racah_q_hahn", "basic", "q-racah", "q-hahn",
    "R_n(mu(x);a,b,q^(-N-1),0|q) and two other substitutions = Q_n(q^-x;a,b,N|q)",
    (lambda p, n, x, t: _qracah(p, p["alpha"], p["beta"], p["q"]**(-p["N"]-1), 0.0, n, x),
     lambda p, n, x, t: _qracah(p, p["alpha"], p["beta"], 0.0, p["q"]**(-p["N"]-1)/p["beta"], n, x),
     lambda p, n, x, t: _qracah(p, p["q"]**(-p["N"]-1), p["alpha"]*p["beta"]*p["q"]**(p["N"]+1), p["alpha"], 0.0,
                                n, x)),
    lambda p, n, x: ev("q-hahn", p, n, x),
    {"alpha": 0.5, "beta": 0.4, "N": 4, "q": 0.5}, upto_N, lattice_N, _EXACT)

add("q_racah_dual_q_hahn", "basic", "q-racah", "dual-q-hahn",
    "R_n(mu(x);q^(-N-1),0,g,d|q) and two other substitutions = R_n(mu(x);g,d,N|q)",
    (lambda p, n, x, t: _qracah(p, p["q"]**(-p["N"]-1), 0.0, p["gamma"], p["delta"], n, x),
     lambda p, n, x, t: _qracah(p, 0.0, p["q"]**(-p["N"]-1)/p["delta"], p["gamma"], p["delta"], n, x),
     lambda p, n, x, t: _qracah(p, p["gamma"], 0.0, p["q"]**(-p["N"]-1),
                                p["gamma"]*p["delta"]*p["q"]**(p["N"]+1), n, x)),
    lambda p, n, x: ev("dual-q-hahn", p, n, x),
    {"gamma": 0.5, "delta": 0.4, "N": 4, "q": 0.5}, upto_N, lattice_N, _EXACT)

add("q_racah_q_krawtchouk", "basic", "q-racah", "q-krawtchouk",
    "R_n(q^-x;q^(-N-1),-p q^N,0,0|q) = K_n(q^-x;p,N;q)",
    lambda p, n, x, t: _qracah(p, p["q"]**(-p["N"]-1), -p["p"]*p["q"]**p["N"], 0.0, 0.0, n, x),
    lambda p, n, x: ev("q-krawtchouk", p, n, x),
    {"p": 0.5, "N": 4, "q": 0.5}, upto_N, lattice_N, _EXACT)

add("q_racah_dual_q_krawtchouk", "basic", "q-racah", "dual-q-krawtchouk",
    "R_n(mu(x);0,0,q^(-N-1),c|q) = K_n(lambda(x);c,N|q)",
    lambda p, n, x, t: _qracah(p, 0.0, 0.0, p["q"]**(-p["N"]-1), p["c"], n, x),
    lambda p, n, x: ev("dual-q-krawtchouk", p, n, x),
    {"c": -0.5, "N": 4, "q": 0.5}, upto_N, lattice_N, _EXACT)


# Continuous dual q-Hahn and continuous q-Hahn

add("continuous_dual_q_hahn_al_salam_chihara", "basic", "continuous-dual-q-hahn", "al-salam-chihara",
    "p_n(x;a,b,0|q) = Q_n(x;a,b|q)",
    lambda p, n, x, t: ev("continuous-dual-q-hahn", {"a": p["a"], "b": p["b"], "c": 0.0, "q": p["q"]}, n, x),
    lambda p, n, x: ev("al-salam-chihara", p, n, x),
    {"a": 0.5, "b": -0.3, "q": 0.5}, upto(4), _TRIG, _EXACT)

add("continuous_q_hahn_q_meixner_pollaczek", "basic", "continuous-q-hahn", "q-meixner-pollaczek",
    "p_n(x;a,0,0,a;q)/(q;q)_n = P_n(x;a|q) with the same phi",
    lambda p, n, x, t: (ev("continuous-q-hahn", {"a": p["a"], "b": 0.0, "c": 0.0, "d": p["a"], "phi": p["phi"],
                                                 "q": p["q"]}, n, x)
                        /qfact(p["q"], n)),
    lambda p, n, x: ev("q-meixner-pollaczek", p, n, x),
    {"a": 0.5, "phi": 0.7, "q": 0.5}, upto(4), _TRIG, _EXACT)


# Big q-Jacobi

add("big_q_jacobi_big_q_laguerre", "basic", "big-q-jacobi", "big-q-laguerre",
    "P_n(x;a,0,c;q) = P_n(x;a,c;q)",
    lambda p, n, x, t: ev("big-q-jacobi", {"a": p["a"], "b": 0.0, "c": p["b"], "q": p["q"]}, n, x),
    lambda p, n, x: ev("big-q-laguerre", p, n, x),
    {"a": 0.5, "b": -0.5, "q": 0.5}, upto(4), grid(-0.5, 0.9, 5), _EXACT)

add("big_q_jacobi_little_q_jacobi", "basic", "big-q-jacobi", "little-q-jacobi",
    "P_n(cqx;a,b,c;q) -> p_n(x;a,b|q) as c -> oo",
    lambda p, n, x, c: ev("big-q-jacobi", {"a": p["a"], "b": p["b"], "c": c, "q": p["q"]}, n, c*p["q"]*x),
    lambda p, n, x: ev("little-q-jacobi", p, n, x),
    {"a": 0.5, "b": 0.4, "q": 0.5}, upto(4), fixed(1, 0.5, 0.25, 0.125), T_SCHEDULE_LONG)

add("big_q_jacobi_q_meixner", "basic", "big-q-jacobi", "q-meixner",
    "P_n(q^-x;a,b,c;q) -> M_n(q^-x;c,-1/b;q) as a -> oo",
    lambda p, n, x, a: ev("big-q-jacobi", {"a": a, "b": -1/p["c"], "c": p["b"], "q": p["q"]},
                          n, qpower(p["q"], -x)),
    lambda p, n, x: ev("q-meixner", p, n, x),
    {"b": 0.5, "c": 0.8, "q": 0.5}, upto(4), _QEXP, T_SCHEDULE_LONG)


# q-Hahn

add("q_hahn_little_q_jacobi", "basic", "q-hahn", "little-q-jacobi",
    "Q_n(q^(x-N);a,b,N|q) -> p_n(q^x;a,b|q) as N -> oo",
    lambda p, n, x, lam: ev("q-hahn", {"alpha": p["a"], "beta": p["b"], "N": count(lam), "q": p["q"]},
                            n, count(lam)-x),
    lambda p, n, x: ev("little-q-jacobi", p, n, qpower(p["q"], x)),
    {"a": 0.5, "b": 0.4, "q": 0.5}, upto(3), fixed(0, 1, 2, 3), QN_SCHEDULE)

add("q_hahn_q_meixner", "basic", "q-hahn", "q-meixner",
    "Q_n(q^-x;b,-q^(-N-1)/(bc),N|q) -> M_n(q^-x;b,c;q) as N -> oo",
    lambda p, n, x, lam: ev("q-hahn", {"alpha": p["b"], "beta": -p["q"]**(-count(lam)-1)/(p["b"]*p["c"]),
                                       "N": count(lam), "q": p["q"]}, n, x),
    lambda p, n, x: ev("q-meixner", p, n, x),
    {"b": 0.5, "c": 0.8, "q": 0.5}, upto(3), _QEXP, QN_SCHEDULE)

add("q_hahn_quantum_q_krawtchouk", "basic", "q-hahn", "quantum-q-krawtchouk",
    "Q_n(q^-x;alpha,p,N|q) -> K_n^qtm(q^-x;p,N;q) as alpha -> oo",
    lambda p, n, x, al: ev("q-hahn", {"alpha": al, "beta": p["p"], "N": p["N"], "q": p["q"]}, n, x),
    lambda p, n, x: ev("quantum-q-krawtchouk", p, n, x),
    {"p": 2.0, "N": 4, "q": 0.5}, upto_N, lattice_N, T_SCHEDULE_LONG)

add("q_hahn_q_krawtchouk", "basic", "q-hahn", "q-krawtchouk",
    "Q_n(q^-x;alpha,-p/(alpha q),N|q) -> K_n(q^-x;p,N;q) as alpha -> 0",
    lambda p, n, x, t: ev("q-hahn", {"alpha": 1/t, "beta": -p["p"]*t/p["q"], "N": p["N"], "q": p["q"]}, n, x),
    lambda p, n, x: ev("q-krawtchouk", p, n, x),
    {"p": 0.5, "N": 4, "q": 0.5}, upto_N, lattice_N, T_SCHEDULE_LONG)

add("q_hahn_affine_q_krawtchouk", "basic", "q-hahn", "affine-q-krawtchouk",
    "Q_n(q^-x;p,0,N|q) = K_n^Aff(q^-x;p,N;q)",
    lambda p, n, x, t: ev("q-hahn", {"alpha": p["p"], "beta": 0.0, "N": p["N"], "q": p["q"]}, n, x),
    lambda p, n, x: ev("affine-q-krawtchouk", p, n, x),
    {"p": 0.5, "N": 4, "q": 0.5}, upto_N, lattice_N, _EXACT)


# Dual q-Hahn

add("dual_q_hahn_affine_q_krawtchouk", "basic", "dual-q-hahn", "affine-q-krawtchouk",
    "R_n(mu(x);p,0,N|q) = K_n^Aff(q^-x;p,N;q)",
    lambda p, n, x, t: ev("dual-q-hahn", {"gamma": p["p"], "delta": 0.0, "N": p["N"], "q": p["q"]}, n, x),
    lambda p, n, x: ev("affine-q-krawtchouk", p, n, x),
    {"p": 0.5, "N": 4, "q": 0.5}, upto_N, lattice_N, _EXACT)

add("dual_q_hahn_dual_q_krawtchouk", "basic", "dual-q-hahn", "dual-q-krawtchouk",
    "R_n(mu(x);g,c q^(-N-1)/g,N|q) -> K_n(lambda(x);c,N|q) as g -> 0",
    lambda p, n, x, t: ev("dual-q-hahn", {"gamma": 1/t, "delta": p["c"]*t*p["q"]**(-p["N"]-1), "N": p["N"],
                                          "q": p["q"]}, n, x),
    lambda p, n, x: ev("dual-q-krawtchouk", p, n, x),
    {"c": -0.5, "N": 4, "q": 0.5}, upto_N, lattice_N, T_SCHEDULE_LONG)


# Al-Salam-Chihara and q-Meixner-Pollaczek

add("al_salam_chihara_continuous_big_q_hermite", "basic", "al-salam-chihara", "continuous-big-q-hermite",
    "Q_n(x;a,0|q) = H_n(x;a|q)",
    lambda p, n, x, t: ev("al-salam-chihara", {"a": p["a"], "b": 0.0, "q": p["q"]}, n, x),
    lambda p, n, x: ev("continuous-big-q-hermite", p, n, x),
    {"a": 0.5, "q": 0.5}, upto(4), _TRIG, _EXACT)

def _asc_continuous_q_laguerre(p: P, n: int, x: complex, t: float) -> complex:
    al, q = p["alpha"], p["q"]
    e = al/2+0.25
    return (q**(e*n)*ev("al-salam-chihara", {"a": q**e, "b": q**(e+0.5), "q": q}, n, x)/qfact(q, n))

add("al_salam_chihara_continuous_q_laguerre", "basic", "al-salam-chihara", "continuous-q-laguerre",
    "q^((alpha/2+1/4)n) Q_n(x;q^(alpha/2+1/4),q^(alpha/2+3/4)|q)/(q;q)_n = P_n^(alpha)(x|q)",
    _asc_continuous_q_laguerre,
    lambda p, n, x: ev("continuous-q-laguerre", p, n, x),
    {"alpha": 0.5, "q": 0.5}, upto(4), _TRIG, _EXACT)

add("q_meixner_pollaczek_continuous_q_ultraspherical", "basic", "q-meixner-pollaczek",
    "continuous-q-ultraspherical",
    "P_n(cos phi;beta|q) at e^(i theta) = e^(i phi) equals C_n(cos phi;beta|q)",
    lambda p, n, x, t: ev("q-meixner-pollaczek", {"a": p["beta"], "phi": p["phi"], "q": p["q"]}, n, x),
    lambda p, n, x: ev("continuous-q-ultraspherical", {"beta": p["beta"], "q": p["q"]}, n, x),
    {"beta": 0.4, "phi": 0.7, "q": 0.5}, upto(4), lambda p: [complex(math.cos(p["phi"]))], _EXACT)


# Continuous q-Jacobi and Rogers

add("continuous_q_jacobi_continuous_q_laguerre", "basic", "continuous-q-jacobi", "continuous-q-laguerre",
    "P_n^(alpha,beta)(x|q) -> P_n^(alpha)(x|q) as beta -> oo",
    lambda p, n, x, be: ev("continuous-q-jacobi", {"alpha": p["alpha"], "beta": be, "q": p["q"]}, n, x),
    lambda p, n, x: ev("continuous-q-laguerre", p, n, x),
    {"alpha": 0.5, "q": 0.5}, upto(4), _TRIG, GEOMETRIC_SCHEDULE)

add("continuous_q_jacobi_continuous_q_laguerre_rahman", "basic", "continuous-q-jacobi-rahman",
    "continuous-q-laguerre-rahman",
    "P_n^(alpha,beta)(x;q) -> P_n^(alpha)(x;q)/(-q;q)_n as beta -> oo",
    lambda p, n, x, be: ev("continuous-q-jacobi-rahman", {"alpha": p["alpha"], "beta": be, "q": p["q"]}, n, x),
    lambda p, n, x: ev("continuous-q-laguerre-rahman", p, n, x)/qpochhammer(-p["q"], p["q"], n),
    {"alpha": 0.5, "q": 0.5}, upto(4), _TRIG, GEOMETRIC_SCHEDULE)

add("continuous_q_ultraspherical_continuous_q_hermite", "basic", "continuous-q-ultraspherical",
    "continuous-q-hermite",
    "C_n(x;beta|q) -> H_n(x|q)/(q;q)_n as beta -> 0",
    lambda p, n, x, t: rec("continuous-q-ultraspherical", {"beta": 1/t, "q": p["q"]}, n, x),
    lambda p, n, x: ev("continuous-q-hermite", p, n, x)/qfact(p["q"], n),
    {"q": 0.5}, upto(4), _TRIG, T_SCHEDULE_LONG)


# Big q-Laguerre

add("big_q_laguerre_little_q_laguerre", "basic", "big-q-laguerre", "little-q-laguerre",
    "P_n(bqx;a,b;q) -> p_n(x;a|q) as b -> oo",
    lambda p, n, x, b: ev("big-q-laguerre", {"a": p["a"], "b": b, "q": p["q"]}, n, b*p["q"]*x),
    lambda p, n, x: ev("little-q-laguerre", p, n, x),
    {"a": 0.5, "q": 0.5}, upto(4), fixed(1, 0.5, 0.25, 0.125), T_SCHEDULE_LONG)

add("big_q_laguerre_al_salam_carlitz_i", "basic", "big-q-laguerre", "al-salam-carlitz-i",
    "P_n(aqx;a,ab;q)/(aq)^n -> U_n^(b)(x;q) as a -> 0",
    lambda p, n, x, t: rec("big-q-laguerre", {"a": 1/t, "b": p["a"]/t, "q": p["q"]}, n, p["q"]*x/t)*(t/p["q"])**n,
    lambda p, n, x: ev("al-salam-carlitz-i", p, n, x),
    {"a": -0.5, "q": 0.5}, upto(4), grid(-0.5, 0.9, 5), T_SCHEDULE_LONG)


# Little q-Jacobi

add("little_q_jacobi_little_q_laguerre", "basic", "little-q-jacobi", "little-q-laguerre",
    "p_n(x;a,0|q) = p_n(x;a|q)",
    lambda p, n, x, t: ev("little-q-jacobi", {"a": p["a"], "b": 0.0, "q": p["q"]}, n, x),
    lambda p, n, x: ev("little-q-laguerre", p, n, x),
    {"a": 0.5, "q": 0.5}, upto(4), fixed(1, 0.5, 0.25, 0.125), _EXACT)

def _little_q_jacobi_q_laguerre(p: P, n: int, x: complex, b: float) -> complex:
    al, q = p["alpha"], p["q"]
    return ev("little-q-jacobi", {"a": q**al, "b": b, "q": q}, n, -x/(b*q))

add("little_q_jacobi_q_laguerre", "basic", "little-q-jacobi", "q-laguerre",
    "p_n(-x/(bq);q^alpha,b|q) -> (q;q)_n/(q^(alpha+1);q)_n L_n^(alpha)(x;q) as b -> oo",
    _little_q_jacobi_q_laguerre,
    lambda p, n, x: (qfact(p["q"], n)/qpochhammer(p["q"]**(p["alpha"]+1), p["q"], n)
                     *ev("q-laguerre", {"alpha": p["alpha"], "q": p["q"]}, n, x)),
    {"alpha": 0.5, "q": 0.5}, upto(4), _POSITIVE, T_SCHEDULE_LONG)

add("little_q_jacobi_alternative_q_charlier", "basic", "little-q-jacobi", "alternative-q-charlier",
    "p_n(x;a,-b/(aq)|q) -> K_n(x;b;q) as a -> 0",
    lambda p, n, x, t: ev("little-q-jacobi", {"a": 1/t, "b": -p["a"]*t/p["q"], "q": p["q"]}, n, x),
    lambda p, n, x: ev("alternative-q-charlier", p, n, x),
    {"a": 0.5, "q": 0.5}, upto(4), fixed(1, 0.5, 0.25, 0.125), T_SCHEDULE_LONG)


# q-Meixner

def _q_meixner_q_laguerre(p: P, n: int, x: complex, c: float) -> complex:
    al, q = p["alpha"], p["q"]
    return ev("q-meixner", {"b": q**al, "c": c, "q": q}, n, c*q**al*x, lattice=True)

add("q_meixner_q_laguerre", "basic", "q-meixner", "q-laguerre",
    "M_n(c q^alpha x;q^alpha,c;q) -> (q;q)_n/(q^(alpha+1);q)_n L_n^(alpha)(x;q) as c -> oo",
    _q_meixner_q_laguerre,
    lambda p, n, x: (qfact(p["q"], n)/qpochhammer(p["q"]**(p["alpha"]+1), p["q"], n)
                     *ev("q-laguerre", {"alpha": p["alpha"], "q": p["q"]}, n, x)),
    {"alpha": 0.5, "q": 0.5}, upto(4), _POSITIVE, T_SCHEDULE_LONG)

add("q_meixner_q_charlier", "basic", "q-meixner", "q-charlier",
    "M_n(q^-x;b,a;q) -> C_n(q^-x;a;q) as b -> 0",
    lambda p, n, x, t: ev("q-meixner", {"b": 1/t, "c": p["a"], "q": p["q"]}, n, x),
    lambda p, n, x: ev("q-charlier", p, n, x),
    {"a": 0.5, "q": 0.5}, upto(4), _QEXP, T_SCHEDULE_LONG)

def _asc2_scaled(p: P, n: int, x: complex) -> complex:
    a, q = p["a"], p["q"]
    return (-1/a)**n*q**binom2(n)*ev("al-salam-carlitz-ii", p, n, x)

add("q_meixner_al_salam_carlitz_ii", "basic", "q-meixner", "al-salam-carlitz-ii",
    "M_n(x;-a/c,c;q) -> (-1/a)^n q^(n choose 2) V_n^(a)(x;q) as c -> 0",
    lambda p, n, x, t: ev("q-meixner", {"b": -p["a"]*t, "c": 1/t, "q": p["q"]}, n, x, lattice=True),
    _asc2_scaled,
    {"a": 0.5, "q": 0.5}, upto(4), _POSITIVE, T_SCHEDULE_LONG)


# Quantum q-Krawtchouk, q-Krawtchouk, affine and dual q-Krawtchouk

add("quantum_q_krawtchouk_al_salam_carlitz_ii", "basic", "quantum-q-krawtchouk", "al-salam-carlitz-ii",
    "K_n^qtm(x;q^(-N-1)/a,N;q) -> (-1/a)^n q^(n choose 2) V_n^(a)(x;q) as N -> oo",
    lambda p, n, x, lam: ev("quantum-q-krawtchouk", {"p": p["q"]**(-count(lam)-1)/p["a"], "N": count(lam),
                                                     "q": p["q"]}, n, x, lattice=True),
    _asc2_scaled,
    {"a": 0.5, "q": 0.5}, upto(3), _POSITIVE, QN_SCHEDULE)

add("q_krawtchouk_alternative_q_charlier", "basic", "q-krawtchouk", "alternative-q-charlier",
    "K_n(q^(x-N);p,N;q) -> K_n(q^x;p;q) as N -> oo",
    lambda p, n, x, lam: ev("q-krawtchouk", {"p": p["a"], "N": count(lam), "q": p["q"]}, n, count(lam)-x),
    lambda p, n, x: ev("alternative-q-charlier", p, n, qpower(p["q"], x)),
    {"a": 0.5, "q": 0.5}, upto(3), fixed(0, 1, 2, 3), QN_SCHEDULE)

add("q_krawtchouk_q_charlier", "basic", "q-krawtchouk", "q-charlier",
    "K_n(q^-x;q^-N/a,N;q) -> C_n(q^-x;a;q) as N -> oo",
    lambda p, n, x, lam: ev("q-krawtchouk", {"p": p["q"]**-count(lam)/p["a"], "N": count(lam), "q": p["q"]},
                            n, x),
    lambda p, n, x: ev("q-charlier", p, n, x),
    {"a": 0.5, "q": 0.5}, upto(3), fixed(0, 1, 2, 3), QN_SCHEDULE)

add("affine_q_krawtchouk_little_q_laguerre", "basic", "affine-q-krawtchouk", "little-q-laguerre",
    "K_n^Aff(q^(x-N);p,N;q) -> p_n(q^x;p|q) as N -> oo",
    lambda p, n, x, lam: ev("affine-q-krawtchouk", {"p": p["a"], "N": count(lam), "q": p["q"]},
                            n, count(lam)-x),
    lambda p, n, x: ev("little-q-laguerre", p, n, qpower(p["q"], x)),
    {"a": 0.5, "q": 0.5}, upto(3), fixed(0, 1, 2, 3), QN_SCHEDULE)

add("dual_q_krawtchouk_al_salam_carlitz_i", "basic", "dual-q-krawtchouk", "al-salam-carlitz-i",
    "K_n(lambda(x);1/a,N|q) -> (-1/a)^n q^(-(n choose 2)) U_n^(a)(q^x;q) as N -> oo",
    lambda p, n, x, lam: ev("dual-q-krawtchouk", {"c": 1/p["a"], "N": count(lam), "q": p["q"]}, n, x),
    lambda p, n, x: ((-1/p["a"])**n*p["q"]**-binom2(n)
                     *ev("al-salam-carlitz-i", p, n, qpower(p["q"], x))),
    {"a": -0.5, "q": 0.5}, upto(3), fixed(0, 1, 2, 3), QN_SCHEDULE)


# Al-Salam-Chihara to the Hermite level

add("continuous_big_q_hermite_continuous_q_hermite", "basic", "continuous-big-q-hermite", "continuous-q-hermite",
    "H_n(x;0|q) = H_n(x|q)",
    lambda p, n, x, t: rec("continuous-big-q-hermite", {"a": 0.0, "q": p["q"]}, n, x),
    lambda p, n, x: ev("continuous-q-hermite", p, n, x),
    {"q": 0.5}, upto(5), _TRIG, _EXACT)

add("continuous_q_laguerre_continuous_q_hermite", "basic", "continuous-q-laguerre", "continuous-q-hermite",
    "q^(-(alpha/2+1/4)n) P_n^(alpha)(x|q) -> H_n(x|q)/(q;q)_n as alpha -> oo",
    lambda p, n, x, al: (rec("continuous-q-laguerre", {"alpha": al, "q": p["q"]}, n, x)
                         /p["q"]**((al/2+0.25)*n)),
    lambda p, n, x: ev("continuous-q-hermite", p, n, x)/qfact(p["q"], n),
    {"q": 0.5}, upto(4), _TRIG, GEOMETRIC_SCHEDULE)

add("q_laguerre_stieltjes_wigert", "basic", "q-laguerre", "stieltjes-wigert",
    "L_n^(alpha)(x q^-alpha;q) -> S_n(x;q) as alpha -> oo",
    lambda p, n, x, al: ev("q-laguerre", {"alpha": al, "q": p["q"]}, n, x*p["q"]**-al),
    lambda p, n, x: ev("stieltjes-wigert", p, n, x),
    {"q": 0.5}, upto(4), _POSITIVE, GEOMETRIC_SCHEDULE)

add("alternative_q_charlier_stieltjes_wigert", "basic", "alternative-q-charlier", "stieltjes-wigert",
    "K_n(x/a;a;q) -> (q;q)_n S_n(x;q) as a -> oo",
    lambda p, n, x, a: ev("alternative-q-charlier", {"a": a, "q": p["q"]}, n, x/a),
    lambda p, n, x: qfact(p["q"], n)*ev("stieltjes-wigert", p, n, x),
    {"q": 0.5}, upto(4), _POSITIVE, T_SCHEDULE_LONG)

add("q_charlier_stieltjes_wigert", "basic", "q-charlier", "stieltjes-wigert",
    "C_n(ax;a;q) -> (q;q)_n S_n(x;q) as a -> oo",
    lambda p, n, x, a: ev("q-charlier", {"a": a, "q": p["q"]}, n, a*x, lattice=True),
    lambda p, n, x: qfact(p["q"], n)*ev("stieltjes-wigert", p, n, x),
    {"q": 0.5}, upto(4), _POSITIVE, T_SCHEDULE_LONG)

add("al_salam_carlitz_i_discrete_q_hermite_i", "basic", "al-salam-carlitz-i", "discrete-q-hermite-i",
    "U_n^(-1)(x;q) = h_n(x;q)",
    lambda p, n, x, t: ev("al-salam-carlitz-i", {"a": -1.0, "q": p["q"]}, n, x),
    lambda p, n, x: rec("discrete-q-hermite-i", p, n, x),
    {"q": 0.5}, upto(5), grid(-0.9, 0.9, 5), _EXACT)

add("al_salam_carlitz_ii_discrete_q_hermite_ii", "basic", "al-salam-carlitz-ii", "discrete-q-hermite-ii",
    "i^-n V_n^(-1)(ix;q) = h~_n(x;q)",
    lambda p, n, x, t: 1j**-n*ev("al-salam-carlitz-ii", {"a": -1.0, "q": p["q"]}, n, 1j*x),
    lambda p, n, x: ev("discrete-q-hermite-ii", {"q": p["q"]}, n, x),
    {"q": 0.5}, upto(5), grid(-1.5, 1.5, 5), _EXACT)
