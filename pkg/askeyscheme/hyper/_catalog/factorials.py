"""
    Identities for q-shifted factorials, the q-gamma function and the q-binomial coefficients.
"""

from __future__ import annotations

import math
from random import Random
from typing import Any, Dict, Mapping

from ...qcore import (INFINITY, binom2, gamma, rgamma, pochhammer, qbinomial, qgamma, qnumber,
                      qpochhammer_complex)
from . import add, annulus, degree, n_of, prod, qbase, qp, real, rq

P = Mapping[str, Any]

_GROUP = "factorials"

def _sample_ank(rng: Random) -> Dict[str, Any]:
    n = degree(rng, 8)
    return {"a": annulus(rng, 0.3, 1.6), "q": qbase(rng), "n": n, "k": rng.randint(0, n)}

def _sample_abnk(rng: Random) -> Dict[str, Any]:
    return {**_sample_ank(rng), "b": annulus(rng, 0.3, 1.6)}

_ANK = {"a": 0.7+0.2j, "q": 0.5, "n": 5, "k": 2}
_ABNK = {**_ANK, "b": -0.4+0.9j}

def _neg(p: P) -> complex:
    return qp(p["a"], rq(p), -n_of(p))

add("negative_order_reciprocal", _GROUP, "(a;q)_{-n} = 1/(aq^{-n};q)_n",
    "TERMINATING_EXACT", _neg,
    lambda p: 1/qp(p["a"]*rq(p)**(-n_of(p)), rq(p), n_of(p)),
    _sample_ank, _ANK)

add("negative_order_inversion", _GROUP, "(a;q)_{-n} = (-q/a)^n q^binom(n,2)/(q/a;q)_n",
    "TERMINATING_EXACT", _neg,
    lambda p: (-rq(p)/p["a"])**n_of(p)*rq(p)**binom2(n_of(p))/qp(rq(p)/p["a"], rq(p), n_of(p)),
    _sample_ank, _ANK)

add("finite_from_infinite", _GROUP, "(a;q)_n = (a;q)_inf/(aq^n;q)_inf",
    "ANALYTIC_TOL",
    lambda p: qp(p["a"], rq(p), n_of(p)),
    lambda p: qp(p["a"], rq(p), INFINITY)/qp(p["a"]*rq(p)**n_of(p), rq(p), INFINITY),
    _sample_ank, _ANK)

def _sample_complex_order(rng: Random) -> Dict[str, Any]:
    return {"a": real(rng, 0.1, 2.0), "q": qbase(rng), "lam": real(rng, -0.9, 3.0), "mu": real(rng, 0.0, 3.0)}

add("complex_order_additivity", _GROUP, "(a;q)_{lam+mu} = (a;q)_lam (aq^lam;q)_mu",
    "ANALYTIC_TOL",
    lambda p: qpochhammer_complex(p["a"].real, rq(p), p["lam"]+p["mu"]),
    lambda p: (qpochhammer_complex(p["a"].real, rq(p), p["lam"])
               * qpochhammer_complex((p["a"]*rq(p)**p["lam"]).real, rq(p), p["mu"])),
    _sample_complex_order, {"a": 0.3, "q": 0.5, "lam": 1.5, "mu": 0.25})

add("complex_order_integer", _GROUP, "(a;q)_lam agrees with the finite product at integer lam",
    "ANALYTIC_TOL",
    lambda p: qpochhammer_complex(p["a"].real, rq(p), n_of(p)),
    lambda p: qp(p["a"], rq(p), n_of(p)),
    lambda rng: {"a": real(rng, 0.1, 2.0), "q": qbase(rng), "n": degree(rng, 8)},
    {"a": 0.3, "q": 0.5, "n": 4})

def _inverted_base(a: complex, q: float, n: int) -> complex:
    return prod(1-a*q**(-j) for j in range(n))

add("inverted_base", _GROUP, "(a;q^{-1})_n = (1/a;q)_n (-a)^n q^{-binom(n,2)}",
    "TERMINATING_EXACT",
    lambda p: _inverted_base(p["a"], rq(p), n_of(p)),
    lambda p: qp(1/p["a"], rq(p), n_of(p))*(-p["a"])**n_of(p)*rq(p)**(-binom2(n_of(p))),
    _sample_ank, _ANK)

def _phi43_inverted(p: P) -> complex:
    # 4phi3(q^n, a, b, c; d, e, f | q^{-1}; q^{-1}) summed directly in base 1/q
    q, n = rq(p), n_of(p)
    base = 1/q
    num = (q**n, p["a"], p["b"], p["c"])
    den = (p["d"], p["e"], p["f"])
    total, term = 1+0j, 1+0j
    for k in range(n):
        term *= prod(1-x*base**k for x in num)/prod(1-y*base**k for y in den)
        term *= base/(1-base**(k+1))
        total += term
    return total

def _phi43_direct(p: P) -> complex:
    q, n = rq(p), n_of(p)
    num = (q**(-n), 1/p["a"], 1/p["b"], 1/p["c"])
    den = (1/p["d"], 1/p["e"], 1/p["f"])
    z = p["a"]*p["b"]*p["c"]*q**n/(p["d"]*p["e"]*p["f"])
    total, term = 1+0j, 1+0j
    for k in range(n):
        term *= prod(1-x*q**k for x in num)/prod(1-y*q**k for y in den)*z/(1-q**(k+1))
        total += term
    return total

def _sample_phi43(rng: Random) -> Dict[str, Any]:
    res: Dict[str, Any] = {"q": qbase(rng, 0.5, 0.8), "n": degree(rng, 8)}
    for key in "abcdef":
        res[key] = annulus(rng, 0.5, 2.0)
    return res

add("phi43_base_inversion", _GROUP, "4phi3 polynomial in base 1/q equals a 4phi3 polynomial in base q",
    "TERMINATING_EXACT", _phi43_inverted, _phi43_direct, _sample_phi43,
    {"q": 0.6, "n": 4, "a": 0.7, "b": -1.3, "c": 0.4+0.8j, "d": 1.5, "e": -0.6j, "f": 0.9},
    threshold=1e-11)

add("split_order", _GROUP, "(a;q)_{n+k} = (a;q)_n (aq^n;q)_k",
    "TERMINATING_EXACT",
    lambda p: qp(p["a"], rq(p), n_of(p)+n_of(p, "k")),
    lambda p: qp(p["a"], rq(p), n_of(p))*qp(p["a"]*rq(p)**n_of(p), rq(p), n_of(p, "k")),
    _sample_ank, _ANK)

add("swap_shifts", _GROUP, "(aq^n;q)_k/(aq^k;q)_n = (a;q)_k/(a;q)_n",
    "TERMINATING_EXACT",
    lambda p: (qp(p["a"]*rq(p)**n_of(p), rq(p), n_of(p, "k"))
               / qp(p["a"]*rq(p)**n_of(p, "k"), rq(p), n_of(p))),
    lambda p: qp(p["a"], rq(p), n_of(p, "k"))/qp(p["a"], rq(p), n_of(p)),
    _sample_ank, _ANK)

add("tail_product", _GROUP, "(aq^k;q)_{n-k} = (a;q)_n/(a;q)_k",
    "TERMINATING_EXACT",
    lambda p: qp(p["a"]*rq(p)**n_of(p, "k"), rq(p), n_of(p)-n_of(p, "k")),
    lambda p: qp(p["a"], rq(p), n_of(p))/qp(p["a"], rq(p), n_of(p, "k")),
    _sample_ank, _ANK)

add("reversed_product", _GROUP, "(a;q)_n = (q^{1-n}/a;q)_n (-a)^n q^binom(n,2)",
    "TERMINATING_EXACT",
    lambda p: qp(p["a"], rq(p), n_of(p)),
    lambda p: (qp(rq(p)**(1-n_of(p))/p["a"], rq(p), n_of(p))
               * (-p["a"])**n_of(p)*rq(p)**binom2(n_of(p))),
    _sample_ank, _ANK)

add("reversed_shifted_product", _GROUP, "(aq^{-n};q)_n = (q/a;q)_n (-a)^n q^{-n-binom(n,2)}",
    "TERMINATING_EXACT",
    lambda p: qp(p["a"]*rq(p)**(-n_of(p)), rq(p), n_of(p)),
    lambda p: (qp(rq(p)/p["a"], rq(p), n_of(p))
               * (-p["a"])**n_of(p)*rq(p)**(-n_of(p)-binom2(n_of(p)))),
    _sample_ank, _ANK)

add("reversed_shifted_ratio", _GROUP, "(aq^{-n};q)_n/(bq^{-n};q)_n = (q/a;q)_n/(q/b;q)_n (a/b)^n",
    "TERMINATING_EXACT",
    lambda p: (qp(p["a"]*rq(p)**(-n_of(p)), rq(p), n_of(p))
               / qp(p["b"]*rq(p)**(-n_of(p)), rq(p), n_of(p))),
    lambda p: (qp(rq(p)/p["a"], rq(p), n_of(p))/qp(rq(p)/p["b"], rq(p), n_of(p))
               * (p["a"]/p["b"])**n_of(p)),
    _sample_abnk, _ABNK)

add("complementary_order", _GROUP, "(a;q)_{n-k} = (a;q)_n/(q^{1-n}/a;q)_k (-q/a)^k q^{binom(k,2)-nk}",
    "TERMINATING_EXACT",
    lambda p: qp(p["a"], rq(p), n_of(p)-n_of(p, "k")),
    lambda p: (qp(p["a"], rq(p), n_of(p))/qp(rq(p)**(1-n_of(p))/p["a"], rq(p), n_of(p, "k"))
               * (-rq(p)/p["a"])**n_of(p, "k")*rq(p)**(binom2(n_of(p, "k"))-n_of(p)*n_of(p, "k"))),
    _sample_ank, _ANK)

add("complementary_ratio", _GROUP, "(a;q)_{n-k}/(b;q)_{n-k} in terms of order-n and order-k products",
    "TERMINATING_EXACT",
    lambda p: (qp(p["a"], rq(p), n_of(p)-n_of(p, "k"))
               / qp(p["b"], rq(p), n_of(p)-n_of(p, "k"))),
    lambda p: (qp(p["a"], rq(p), n_of(p))/qp(p["b"], rq(p), n_of(p))
               * qp(rq(p)**(1-n_of(p))/p["b"], rq(p), n_of(p, "k"))
               / qp(rq(p)**(1-n_of(p))/p["a"], rq(p), n_of(p, "k"))
               * (p["b"]/p["a"])**n_of(p, "k")),
    _sample_abnk, _ABNK)

add("negative_power_product", _GROUP, "(q^{-n};q)_k = (q;q)_n/(q;q)_{n-k} (-1)^k q^{binom(k,2)-nk}",
    "TERMINATING_EXACT",
    lambda p: qp(rq(p)**(-n_of(p)), rq(p), n_of(p, "k")),
    lambda p: (qp(rq(p), rq(p), n_of(p))/qp(rq(p), rq(p), n_of(p)-n_of(p, "k"))
               * (-1)**n_of(p, "k")*rq(p)**(binom2(n_of(p, "k"))-n_of(p)*n_of(p, "k"))),
    _sample_ank, _ANK)

add("shifted_negative_power_product", _GROUP, "(aq^{-n};q)_k = (q/a;q)_n/(q^{1-k}/a;q)_n (a;q)_k q^{-nk}",
    "TERMINATING_EXACT",
    lambda p: qp(p["a"]*rq(p)**(-n_of(p)), rq(p), n_of(p, "k")),
    lambda p: (qp(rq(p)/p["a"], rq(p), n_of(p))/qp(rq(p)**(1-n_of(p, "k"))/p["a"], rq(p), n_of(p))
               * qp(p["a"], rq(p), n_of(p, "k"))*rq(p)**(-n_of(p)*n_of(p, "k"))),
    _sample_ank, _ANK)

add("shifted_complementary_product", _GROUP,
    "(aq^{-n};q)_{n-k} = (q/a;q)_n/(q/a;q)_k (-a/q)^{n-k} q^{binom(k,2)-binom(n,2)}",
    "TERMINATING_EXACT",
    lambda p: qp(p["a"]*rq(p)**(-n_of(p)), rq(p), n_of(p)-n_of(p, "k")),
    lambda p: (qp(rq(p)/p["a"], rq(p), n_of(p))/qp(rq(p)/p["a"], rq(p), n_of(p, "k"))
               * (-p["a"]/rq(p))**(n_of(p)-n_of(p, "k"))*rq(p)**(binom2(n_of(p, "k"))-binom2(n_of(p)))),
    _sample_ank, _ANK)

add("even_order_split", _GROUP, "(a;q)_{2n} = (a;q^2)_n (aq;q^2)_n",
    "TERMINATING_EXACT",
    lambda p: qp(p["a"], rq(p), 2*n_of(p)),
    lambda p: qp(p["a"], rq(p)**2, n_of(p))*qp(p["a"]*rq(p), rq(p)**2, n_of(p)),
    _sample_ank, _ANK)

add("square_split", _GROUP, "(a^2;q^2)_n = (a;q)_n (-a;q)_n",
    "TERMINATING_EXACT",
    lambda p: qp(p["a"]**2, rq(p)**2, n_of(p)),
    lambda p: qp(p["a"], rq(p), n_of(p))*qp(-p["a"], rq(p), n_of(p)),
    _sample_ank, _ANK)

add("even_split_infinite", _GROUP, "(a;q)_inf = (a;q^2)_inf (aq;q^2)_inf",
    "ANALYTIC_TOL",
    lambda p: qp(p["a"], rq(p), INFINITY),
    lambda p: qp(p["a"], rq(p)**2, INFINITY)*qp(p["a"]*rq(p), rq(p)**2, INFINITY),
    _sample_ank, _ANK)

add("square_split_infinite", _GROUP, "(a^2;q^2)_inf = (a;q)_inf (-a;q)_inf",
    "ANALYTIC_TOL",
    lambda p: qp(p["a"]**2, rq(p)**2, INFINITY),
    lambda p: qp(p["a"], rq(p), INFINITY)*qp(-p["a"], rq(p), INFINITY),
    _sample_ank, _ANK)

add("qpochhammer_expansion", _GROUP, "(a;q)_n = sum_k [n k]_q q^binom(k,2) (-a)^k",
    "TERMINATING_EXACT",
    lambda p: qp(p["a"], rq(p), n_of(p)),
    lambda p: sum((qbinomial(n_of(p), k, rq(p))*rq(p)**binom2(k)*(-p["a"])**k for k in range(n_of(p)+1)), 0j),
    _sample_ank, _ANK)

def _sample_alpha(rng: Random) -> Dict[str, Any]:
    return {"alpha": real(rng, -0.9, 4.0), "q": qbase(rng), "n": degree(rng, 8)}

add("qbinomial_integer_lower", _GROUP, "[alpha k]_q = (q^{-alpha};q)_k/(q;q)_k (-1)^k q^{k alpha - binom(k,2)}",
    "ANALYTIC_TOL",
    lambda p: _qbinomial_general(p),
    lambda p: qbinomial(p["alpha"], n_of(p), rq(p)),
    _sample_alpha, {"alpha": 1.7, "q": 0.5, "n": 3})

def _qbinomial_general(p: P) -> complex:
    # gamma-ratio form, evaluated through infinite products
    q, alpha, beta = rq(p), p["alpha"], complex(n_of(p))
    num = qp(q**(beta+1), q, INFINITY)*qp(q**(alpha-beta+1), q, INFINITY)
    return num/(qp(q, q, INFINITY)*qp(q**(alpha+1), q, INFINITY))

add("qbinomial_shifted_ratio", _GROUP, "(q^{alpha+1};q)_n/(q;q)_n = [n+alpha n]_q",
    "ANALYTIC_TOL",
    lambda p: qp(rq(p)**(p["alpha"]+1), rq(p), n_of(p))/qp(rq(p), rq(p), n_of(p)),
    lambda p: qbinomial(n_of(p)+p["alpha"], n_of(p), rq(p)),
    _sample_alpha, {"alpha": 1.7, "q": 0.5, "n": 3})

add("qgamma_functional_equation", _GROUP, "Gamma_q(z+1) = [z]_q Gamma_q(z)",
    "ANALYTIC_TOL",
    lambda p: qgamma(p["z"]+1, rq(p)),
    lambda p: qnumber(p["z"], rq(p))*qgamma(p["z"], rq(p)),
    lambda rng: {"z": complex(real(rng, 0.1, 5.0), real(rng, -1.0, 1.0)), "q": qbase(rng)},
    {"z": 1.3+0.5j, "q": 0.5})

add("central_binomial", _GROUP, "binom(2n, n) = (1/2)_n 4^n/n!",
    "TERMINATING_EXACT",
    lambda p: complex(math.comb(2*n_of(p), n_of(p))),
    lambda p: pochhammer(0.5, n_of(p))*4**n_of(p)/math.factorial(n_of(p)),
    lambda rng: {"n": degree(rng, 12)}, {"n": 6})

# q -> 1 limits, along q = 1 - 1/lam

_Q_SCHEDULE = (2.0**4, 2.0**6, 2.0**8, 2.0**10)

def _q_of(p: P) -> float:
    return 1-1/p["lam"]

add("basic_number_limit", _GROUP, "(1-q^alpha)/(1-q) -> alpha as q -> 1",
    "LIMIT_SCHEDULE",
    lambda p: qnumber(p["alpha"], _q_of(p)),
    lambda p: p["alpha"],
    lambda rng: {"alpha": complex(real(rng, -2.0, 4.0), real(rng, -1.0, 1.0))},
    {"alpha": 2.5+0.5j}, schedule=_Q_SCHEDULE, threshold=1e-2)

add("qpochhammer_classical_limit", _GROUP, "(q^alpha;q)_k/(1-q)^k -> (alpha)_k as q -> 1",
    "LIMIT_SCHEDULE",
    lambda p: qp(_q_of(p)**p["alpha"], _q_of(p), n_of(p, "k"))/(1-_q_of(p))**n_of(p, "k"),
    lambda p: pochhammer(p["alpha"], n_of(p, "k")),
    lambda rng: {"alpha": real(rng, 0.1, 3.0), "k": degree(rng, 5)},
    {"alpha": 1.5, "k": 4}, schedule=_Q_SCHEDULE, threshold=1e-2)

add("qgamma_classical_limit", _GROUP, "Gamma_q(x) -> Gamma(x) as q -> 1",
    "LIMIT_SCHEDULE",
    lambda p: qgamma(p["x"], _q_of(p)),
    lambda p: gamma(p["x"]),
    lambda rng: {"x": complex(real(rng, 0.2, 5.0))},
    {"x": 2.5+0j}, schedule=_Q_SCHEDULE, threshold=1e-2)

add("qbinomial_classical_limit", _GROUP, "[alpha beta]_q -> binom(alpha, beta) as q -> 1",
    "LIMIT_SCHEDULE",
    lambda p: qbinomial(p["alpha"], p["beta"], _q_of(p)),
    lambda p: gamma(p["alpha"]+1)*rgamma(p["beta"]+1)*rgamma(p["alpha"]-p["beta"]+1),
    lambda rng: {"alpha": complex(real(rng, 1.0, 5.0)), "beta": complex(real(rng, 0.1, 0.9))},
    {"alpha": 3.5+0j, "beta": 1.25+0j}, schedule=_Q_SCHEDULE, threshold=1e-2)

def _reflection_limit(p: P) -> complex:
    k, q = n_of(p, "k"), rq(p)
    eps = 1/p["lam"]
    alpha = k+eps
    return -math.expm1(-eps*math.log(q))*gamma(-alpha)*gamma(alpha+1)

add("reflection_pole_limit", _GROUP, "(1-q^{k-alpha}) Gamma(-alpha) Gamma(alpha+1) -> (-1)^{k+1} ln q as alpha -> k",
    "LIMIT_SCHEDULE", _reflection_limit,
    lambda p: (-1)**(n_of(p, "k")+1)*math.log(rq(p)),
    lambda rng: {"k": degree(rng, 4), "q": qbase(rng)},
    {"k": 2, "q": 0.5}, schedule=(1e2, 1e3, 1e4, 1e5, 1e6), threshold=1e-5)
