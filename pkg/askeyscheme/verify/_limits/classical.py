"""
    Limit relations between the hypergeometric families, as a parameter tends to infinity or zero.
"""

from __future__ import annotations

import math

from ...qcore import pochhammer
from ..limits import N_SCHEDULE_LONG, ROOT_SCHEDULE, T_SCHEDULE, T_SCHEDULE_CAPPED, T_SCHEDULE_LONG
from . import P, add, count, ev, fact, fixed, grid, lattice_N, rec, upto, upto_N

_CAPPED_TOL = 1e-2


def _jacobi_at_one(p: P, n: int) -> complex:
    return pochhammer(p["alpha"]+1, n)/fact(n)

def _laguerre_at_zero(p: P, n: int) -> complex:
    return pochhammer(p["alpha"]+1, n)/fact(n)


# Wilson

add("wilson_continuous_dual_hahn", "classical", "wilson", "continuous-dual-hahn",
    "W_n(x^2;a,b,c,d)/(a+d)_n -> S_n(x^2;a,b,c) as d -> oo",
    lambda p, n, x, t: ev("wilson", {"a": p["a"], "b": p["b"], "c": p["c"], "d": t}, n, x)/pochhammer(p["a"]+t, n),
    lambda p, n, x: ev("continuous-dual-hahn", p, n, x),
    {"a": 0.5, "b": 0.7, "c": 1.1}, upto(4), grid(0.2, 2.0, 4), T_SCHEDULE_LONG)

add("wilson_continuous_hahn", "classical", "wilson", "continuous-hahn",
    "W_n((x+t)^2;a-it,b-it,c+it,d+it)/((-2t)^n n!) -> p_n(x;a,b,c,d) as t -> oo",
    lambda p, n, x, t: (ev("wilson", {"a": p["a"]-1j*t, "b": p["b"]-1j*t, "c": p["c"]+1j*t, "d": p["d"]+1j*t},
                           n, x+t)
                        /((-2*t)**n*fact(n))),
    lambda p, n, x: ev("continuous-hahn", p, n, x),
    {"a": 0.5, "b": 0.7, "c": 0.6, "d": 0.8}, upto(3), grid(-1.0, 1.0, 3), T_SCHEDULE_CAPPED,
    threshold=_CAPPED_TOL)

add("wilson_jacobi", "classical", "wilson", "jacobi",
    "W_n(t^2(1-x)/2;(a+1)/2,(a+1)/2,(b+1)/2+it,(b+1)/2-it)/(t^2n n!) -> P_n^(a,b)(x) as t -> oo",
    lambda p, n, x, t: (ev("wilson", {"a": (p["alpha"]+1)/2, "b": (p["alpha"]+1)/2,
                                      "c": (p["beta"]+1)/2+1j*t, "d": (p["beta"]+1)/2-1j*t},
                           n, t*((1-x)/2)**0.5)
                        /(t**(2*n)*fact(n))),
    lambda p, n, x: ev("jacobi", p, n, x),
    {"alpha": 0.5, "beta": 1.5}, upto(4), grid(-0.8, 0.8, 5), T_SCHEDULE)


# Racah

add("racah_hahn", "classical", "racah", "hahn",
    "R_n(lambda(x);a,b,-N-1,d) and two other substitutions -> Q_n(x;a,b,N)",
    (lambda p, n, x, t: ev("racah", {"alpha": p["alpha"], "beta": p["beta"], "gamma": -p["N"]-1.0, "delta": t},
                           n, x),
     lambda p, n, x, t: ev("racah", {"alpha": p["alpha"], "beta": p["beta"], "gamma": t,
                                     "delta": -p["beta"]-p["N"]-1}, n, x),
     lambda p, n, x, t: ev("racah", {"alpha": -p["N"]-1.0, "beta": p["alpha"]+p["beta"]+p["N"]+1,
                                     "gamma": p["alpha"], "delta": t}, n, x)),
    lambda p, n, x: ev("hahn", p, n, x),
    {"alpha": 0.5, "beta": 1.5, "N": 5}, upto_N, lattice_N, T_SCHEDULE_LONG)

add("racah_dual_hahn", "classical", "racah", "dual-hahn",
    "R_n(lambda(x);-N-1,b,c,d) and two other substitutions -> R_n(lambda(x);c,d,N)",
    (lambda p, n, x, t: ev("racah", {"alpha": -p["N"]-1.0, "beta": t, "gamma": p["gamma"], "delta": p["delta"]},
                           n, x),
     lambda p, n, x, t: ev("racah", {"alpha": t, "beta": -p["delta"]-p["N"]-1, "gamma": p["gamma"],
                                     "delta": p["delta"]}, n, x),
     lambda p, n, x, t: ev("racah", {"alpha": p["gamma"], "beta": t, "gamma": -p["N"]-1.0,
                                     "delta": p["gamma"]+p["delta"]+p["N"]+1}, n, x)),
    lambda p, n, x: ev("dual-hahn", p, n, x),
    {"gamma": 0.5, "delta": 1.5, "N": 5}, upto_N, lattice_N, T_SCHEDULE_LONG)


# Continuous dual Hahn and continuous Hahn

add("continuous_dual_hahn_meixner_pollaczek", "classical", "continuous-dual-hahn", "meixner-pollaczek",
    "S_n((x-t)^2;l+it,l-it,t cot phi)/((t/sin phi)^n n!) -> P_n^(l)(x;phi) as t -> oo",
    lambda p, n, x, t: (ev("continuous-dual-hahn", {"a": p["lambda"]+1j*t, "b": p["lambda"]-1j*t,
                                                    "c": t/math.tan(p["phi"])}, n, x-t)
                        /((t/math.sin(p["phi"]))**n*fact(n))),
    lambda p, n, x: ev("meixner-pollaczek", p, n, x),
    {"lambda": 0.7, "phi": 1.1}, upto(4), grid(-1.0, 1.0, 3), T_SCHEDULE_LONG)

add("continuous_hahn_meixner_pollaczek", "classical", "continuous-hahn", "meixner-pollaczek",
    "p_n(x-t;l+it,-t tan phi,l-it,-t tan phi)/((it/cos phi)_n i^n) -> P_n^(l)(x;phi) as t -> oo",
    lambda p, n, x, t: (ev("continuous-hahn", {"a": p["lambda"]+1j*t, "b": -t*math.tan(p["phi"]),
                                               "c": p["lambda"]-1j*t, "d": -t*math.tan(p["phi"])}, n, x-t)
                        /(pochhammer(1j*t/math.cos(p["phi"]), n)*1j**n)),
    lambda p, n, x: ev("meixner-pollaczek", p, n, x),
    {"lambda": 0.7, "phi": 0.6}, upto(3), grid(-1.0, 1.0, 3), T_SCHEDULE_CAPPED,
    threshold=_CAPPED_TOL)

add("continuous_hahn_jacobi", "classical", "continuous-hahn", "jacobi",
    "p_n(-xt/2;(a+1+it)/2,(b+1-it)/2,(a+1-it)/2,(b+1+it)/2)/((-1)^n t^n) -> P_n^(a,b)(x) as t -> oo",
    lambda p, n, x, t: (ev("continuous-hahn", {"a": (p["alpha"]+1+1j*t)/2, "b": (p["beta"]+1-1j*t)/2,
                                               "c": (p["alpha"]+1-1j*t)/2, "d": (p["beta"]+1+1j*t)/2},
                           n, -x*t/2)
                        /((-t)**n)),
    lambda p, n, x: ev("jacobi", p, n, x),
    {"alpha": 0.5, "beta": 1.5}, upto(4), grid(-0.8, 0.8, 5), T_SCHEDULE_LONG)


# Hahn and dual Hahn

add("hahn_jacobi", "classical", "hahn", "jacobi",
    "Q_n(Nx;a,b,N) -> P_n^(a,b)(1-2x)/P_n^(a,b)(1) as N -> oo",
    lambda p, n, x, N: ev("hahn", {**p, "N": count(N)}, n, count(N)*x),
    lambda p, n, x: ev("jacobi", p, n, 1-2*x)/_jacobi_at_one(p, n),
    {"alpha": 0.5, "beta": 1.5}, upto(3), grid(0.1, 0.9, 5), N_SCHEDULE_LONG)

add("hahn_meixner", "classical", "hahn", "meixner",
    "Q_n(x;b-1,N(1-c)/c,N) -> M_n(x;b,c) as N -> oo",
    lambda p, n, x, N: ev("hahn", {"alpha": p["beta"]-1, "beta": count(N)*(1-p["c"])/p["c"], "N": count(N)}, n, x),
    lambda p, n, x: ev("meixner", p, n, x),
    {"beta": 1.5, "c": 0.4}, upto(4), fixed(0, 1, 2, 3.5), N_SCHEDULE_LONG)

add("hahn_krawtchouk", "classical", "hahn", "krawtchouk",
    "Q_n(x;pt,(1-p)t,N) -> K_n(x;p,N) as t -> oo",
    lambda p, n, x, t: ev("hahn", {"alpha": p["p"]*t, "beta": (1-p["p"])*t, "N": p["N"]}, n, x),
    lambda p, n, x: ev("krawtchouk", p, n, x),
    {"p": 0.3, "N": 6}, upto_N, lattice_N, T_SCHEDULE_LONG)

add("dual_hahn_meixner", "classical", "dual-hahn", "meixner",
    "R_n(lambda(x);b-1,N(1-c)/c,N) -> M_n(x;b,c) as N -> oo",
    lambda p, n, x, N: ev("dual-hahn", {"gamma": p["beta"]-1, "delta": count(N)*(1-p["c"])/p["c"], "N": count(N)},
                          n, x),
    lambda p, n, x: ev("meixner", p, n, x),
    {"beta": 1.5, "c": 0.4}, upto(4), fixed(0, 1, 2, 3.5), N_SCHEDULE_LONG)

add("dual_hahn_krawtchouk", "classical", "dual-hahn", "krawtchouk",
    "R_n(lambda(x);pt,(1-p)t,N) -> K_n(x;p,N) as t -> oo",
    lambda p, n, x, t: ev("dual-hahn", {"gamma": p["p"]*t, "delta": (1-p["p"])*t, "N": p["N"]}, n, x),
    lambda p, n, x: ev("krawtchouk", p, n, x),
    {"p": 0.3, "N": 6}, upto_N, lattice_N, T_SCHEDULE_LONG)


# Meixner-Pollaczek and Jacobi

add("meixner_pollaczek_laguerre", "classical", "meixner-pollaczek", "laguerre",
    "P_n^((a+1)/2)(-x/(2 phi);phi) -> L_n^(a)(x) as phi -> 0",
    lambda p, n, x, t: ev("meixner-pollaczek", {"lambda": (p["alpha"]+1)/2, "phi": 1/t}, n, -x*t/2),
    lambda p, n, x: ev("laguerre", p, n, x),
    {"alpha": 0.5}, upto(4), grid(0.2, 3.0, 4), T_SCHEDULE_LONG)

add("meixner_pollaczek_hermite", "classical", "meixner-pollaczek", "hermite",
    "l^(-n/2) P_n^(l)((x sqrt(l)-l cos phi)/sin phi;phi) -> H_n(x)/n! as l -> oo",
    lambda p, n, x, lam: (lam**(-n/2)
                          *rec("meixner-pollaczek", {"lambda": lam, "phi": p["phi"]}, n,
                               (x*lam**0.5-lam*math.cos(p["phi"]))/math.sin(p["phi"]))),
    lambda p, n, x: ev("hermite", {}, n, x)/fact(n),
    {"phi": 1.1}, upto(4), grid(-1.5, 1.5, 5), ROOT_SCHEDULE)

add("jacobi_laguerre", "classical", "jacobi", "laguerre",
    "P_n^(a,b)(1-2x/b) -> L_n^(a)(x) as b -> oo",
    lambda p, n, x, b: ev("jacobi", {"alpha": p["alpha"], "beta": b}, n, 1-2*x/b),
    lambda p, n, x: ev("laguerre", p, n, x),
    {"alpha": 0.5}, upto(4), grid(0.2, 3.0, 4), T_SCHEDULE_LONG)

add("jacobi_hermite", "classical", "jacobi", "hermite",
    "a^(-n/2) P_n^(a,a)(x/sqrt(a)) -> H_n(x)/(2^n n!) as a -> oo",
    lambda p, n, x, a: a**(-n/2)*rec("jacobi", {"alpha": a, "beta": a}, n, x/a**0.5),
    lambda p, n, x: ev("hermite", {}, n, x)/(2**n*fact(n)),
    {}, upto(4), grid(-1.5, 1.5, 5), T_SCHEDULE_LONG)


# Meixner and Krawtchouk

add("meixner_laguerre", "classical", "meixner", "laguerre",
    "M_n(x/(1-c);a+1,c) -> L_n^(a)(x)/L_n^(a)(0) as c -> 1",
    lambda p, n, x, t: ev("meixner", {"beta": p["alpha"]+1, "c": 1-1/t}, n, x*t),
    lambda p, n, x: ev("laguerre", p, n, x)/_laguerre_at_zero(p, n),
    {"alpha": 0.5}, upto(4), grid(0.2, 3.0, 4), T_SCHEDULE_LONG)

add("meixner_charlier", "classical", "meixner", "charlier",
    "M_n(x;b,a/(a+b)) -> C_n(x;a) as b -> oo",
    lambda p, n, x, b: ev("meixner", {"beta": b, "c": p["a"]/(p["a"]+b)}, n, x),
    lambda p, n, x: ev("charlier", p, n, x),
    {"a": 1.2}, upto(4), fixed(0, 1, 2, 3.5), T_SCHEDULE_LONG)

add("krawtchouk_charlier", "classical", "krawtchouk", "charlier",
    "K_n(x;a/N,N) -> C_n(x;a) as N -> oo",
    lambda p, n, x, N: ev("krawtchouk", {"p": p["a"]/count(N), "N": count(N)}, n, x),
    lambda p, n, x: ev("charlier", p, n, x),
    {"a": 1.0}, upto(3), fixed(0, 1, 2, 3), N_SCHEDULE_LONG)

def _krawtchouk_hermite(p: P, n: int, x: complex, lam: float) -> complex:
    N, pp = count(lam), p["p"]
    arg = pp*N+x*(2*pp*(1-pp)*N)**0.5
    return math.comb(N, n)**0.5*rec("krawtchouk", {"p": pp, "N": N}, n, arg)

add("krawtchouk_hermite", "classical", "krawtchouk", "hermite",
    "sqrt(C(N,n)) K_n(pN+x sqrt(2p(1-p)N);p,N) -> (-1)^n H_n(x)/sqrt(2^n n! (p/(1-p))^n) as N -> oo",
    _krawtchouk_hermite,
    lambda p, n, x: (-1)**n*ev("hermite", {}, n, x)/(2**n*fact(n)*(p["p"]/(1-p["p"]))**n)**0.5,
    {"p": 0.3}, upto(3), grid(-1.5, 1.5, 5), ROOT_SCHEDULE)


# Laguerre and Charlier

add("laguerre_hermite", "classical", "laguerre", "hermite",
    "(2/a)^(n/2) L_n^(a)(sqrt(2a)x+a) -> (-1)^n H_n(x)/n! as a -> oo",
    lambda p, n, x, a: (2/a)**(n/2)*rec("laguerre", {"alpha": a}, n, (2*a)**0.5*x+a),
    lambda p, n, x: (-1)**n*ev("hermite", {}, n, x)/fact(n),
    {}, upto(4), grid(-1.5, 1.5, 5), ROOT_SCHEDULE)

add("charlier_hermite", "classical", "charlier", "hermite",
    "(2a)^(n/2) C_n(sqrt(2a)x+a;a) -> (-1)^n H_n(x) as a -> oo",
    lambda p, n, x, a: (2*a)**(n/2)*rec("charlier", {"a": a}, n, (2*a)**0.5*x+a),
    lambda p, n, x: (-1)**n*ev("hermite", {}, n, x),
    {}, upto(4), grid(-1.5, 1.5, 5), ROOT_SCHEDULE)
