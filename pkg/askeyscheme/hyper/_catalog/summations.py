"""
    Summation formulas: binomial theorems, Gauss, Vandermonde and Saalschütz, and their q-analogues.
"""

from __future__ import annotations

from random import Random
from typing import Any, Dict, Mapping, Optional

from ...qcore import INFINITY, gamma, pochhammer, rgamma
from ..series import fseries, phiseries
from . import add, annulus, degree, disk, n_of, qbase, qp, qps, real, rq

P = Mapping[str, Any]

_GROUP = "summation"

BALANCE_TOL = 1e-10

def _balanced(value: complex, expected: complex, what: str) -> Optional[str]:
    if abs(value-expected) > BALANCE_TOL*max(1.0, abs(expected)):
        return f"{what} must equal {expected!r}, found {value!r}"
    return None

def _sample_az(rng: Random) -> Dict[str, Any]:
    return {"a": annulus(rng, 0.1, 2.5), "z": disk(rng, 0.8), "q": qbase(rng), "n": degree(rng, 10)}

add("binomial_theorem", _GROUP, "1F0(a; ; z) = (1-z)^{-a}, |z| < 1",
    "ANALYTIC_TOL",
    lambda p: fseries([p["a"]], [], p["z"]),
    lambda p: (1-p["z"])**(-p["a"]),
    _sample_az, {"a": 0.5, "z": 0.5},
    constraint=lambda p: None if abs(p["z"]) < 1 else "|z| < 1 is required")

add("q_binomial_theorem", _GROUP, "1phi0(a; ; q; z) = (az;q)_inf/(z;q)_inf, |z| < 1",
    "ANALYTIC_TOL",
    lambda p: phiseries([p["a"]], [], rq(p), p["z"]),
    lambda p: qp(p["a"]*p["z"], rq(p), INFINITY)/qp(p["z"], rq(p), INFINITY),
    _sample_az, {"a": 0.3, "z": 0.4, "q": 0.5},
    constraint=lambda p: None if abs(p["z"]) < 1 else "|z| < 1 is required")

add("q_binomial_terminating", _GROUP, "1phi0(q^{-n}; ; q; z) = (zq^{-n};q)_n",
    "TERMINATING_EXACT",
    lambda p: phiseries([rq(p)**(-n_of(p))], [], rq(p), p["z"]),
    lambda p: qp(p["z"]*rq(p)**(-n_of(p)), rq(p), n_of(p)),
    _sample_az, {"z": 0.25, "q": 0.5, "n": 2})

add("newton_binomium", _GROUP, "1F0(-n; ; z) = (1-z)^n",
    "TERMINATING_EXACT",
    lambda p: fseries([-n_of(p)], [], p["z"]),
    lambda p: (1-p["z"])**n_of(p),
    lambda rng: {"n": degree(rng, 10), "z": annulus(rng, 0.0, 3.0)}, {"n": 2, "z": 0.7})

def _sample_gauss(rng: Random) -> Dict[str, Any]:
    a, b = real(rng, -1.0, 2.0), real(rng, -1.0, 2.0)
    return {"a": a, "b": b, "c": a+b+real(rng, 4.0, 6.0)}

add("gauss", _GROUP, "2F1(a, b; c; 1) = Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)), Re(c-a-b) > 0",
    "ANALYTIC_TOL",
    lambda p: fseries([p["a"], p["b"]], [p["c"]], 1),
    lambda p: gamma(p["c"])*gamma(p["c"]-p["a"]-p["b"])*rgamma(p["c"]-p["a"])*rgamma(p["c"]-p["b"]),
    _sample_gauss, {"a": 0.5, "b": 0.25, "c": 5.0},
    constraint=lambda p: None if (p["c"]-p["a"]-p["b"]).real > 0 else "Re(c-a-b) > 0 is required")

def _sample_nbc(rng: Random) -> Dict[str, Any]:
    return {"n": degree(rng, 10), "b": annulus(rng, 0.2, 3.0), "c": annulus(rng, 0.5, 3.0), "q": qbase(rng)}

add("vandermonde", _GROUP, "2F1(-n, b; c; 1) = (c-b)_n/(c)_n",
    "TERMINATING_EXACT",
    lambda p: fseries([-n_of(p), p["b"]], [p["c"]], 1),
    lambda p: pochhammer(p["c"]-p["b"], n_of(p))/pochhammer(p["c"], n_of(p)),
    _sample_nbc, {"n": 3, "b": 0.5, "c": 2})

def _sample_q_gauss(rng: Random) -> Dict[str, Any]:
    a, b = annulus(rng, 0.8, 1.5), annulus(rng, 0.8, 1.5)
    return {"a": a, "b": b, "c": a*b*disk(rng, 0.7), "q": qbase(rng)}

add("q_gauss", _GROUP, "2phi1(a, b; c; q; c/(ab)) = (c/a, c/b;q)_inf/(c, c/(ab);q)_inf, |c/(ab)| < 1",
    "ANALYTIC_TOL",
    lambda p: phiseries([p["a"], p["b"]], [p["c"]], rq(p), p["c"]/(p["a"]*p["b"])),
    lambda p: (qps([p["c"]/p["a"], p["c"]/p["b"]], rq(p), INFINITY)
               / qps([p["c"], p["c"]/(p["a"]*p["b"])], rq(p), INFINITY)),
    _sample_q_gauss, {"a": 1.2, "b": -0.9, "c": 0.3, "q": 0.5},
    constraint=lambda p: None if abs(p["c"]/(p["a"]*p["b"])) < 1 else "|c/(ab)| < 1 is required")

add("q_vandermonde", _GROUP, "2phi1(q^{-n}, b; c; q; cq^n/b) = (c/b;q)_n/(c;q)_n",
    "TERMINATING_EXACT",
    lambda p: phiseries([rq(p)**(-n_of(p)), p["b"]], [p["c"]], rq(p), p["c"]*rq(p)**n_of(p)/p["b"]),
    lambda p: qp(p["c"]/p["b"], rq(p), n_of(p))/qp(p["c"], rq(p), n_of(p)),
    _sample_nbc, {"n": 3, "b": 0.5, "c": 1.7, "q": 0.5})

add("q_vandermonde_unit", _GROUP, "2phi1(q^{-n}, b; c; q; q) = (c/b;q)_n/(c;q)_n b^n",
    "TERMINATING_EXACT",
    lambda p: phiseries([rq(p)**(-n_of(p)), p["b"]], [p["c"]], rq(p), rq(p)),
    lambda p: qp(p["c"]/p["b"], rq(p), n_of(p))/qp(p["c"], rq(p), n_of(p))*p["b"]**n_of(p),
    _sample_nbc, {"n": 3, "b": 0.5, "c": 1.7, "q": 0.5})

def _sample_saalschutz(rng: Random) -> Dict[str, Any]:
    n = degree(rng, 10)
    a, b, c = annulus(rng, 0.2, 3.0), annulus(rng, 0.2, 3.0), annulus(rng, 0.5, 3.0)
    return {"n": n, "a": a, "b": b, "c": c, "d": 1+a+b-c-n}

add("saalschutz", _GROUP, "balanced 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n(c-b)_n/((c)_n(c-a-b)_n)",
    "TERMINATING_EXACT",
    lambda p: fseries([-n_of(p), p["a"], p["b"]], [p["c"], p["d"]], 1),
    lambda p: (pochhammer(p["c"]-p["a"], n_of(p))*pochhammer(p["c"]-p["b"], n_of(p))
               / (pochhammer(p["c"], n_of(p))*pochhammer(p["c"]-p["a"]-p["b"], n_of(p)))),
    _sample_saalschutz, {"n": 3, "a": 0.5, "b": 1.25, "c": 2.0, "d": -2.25},
    constraint=lambda p: _balanced(p["d"], 1+p["a"]+p["b"]-p["c"]-n_of(p), "d"))

def _sample_q_saalschutz(rng: Random) -> Dict[str, Any]:
    n, q = degree(rng, 10), qbase(rng)
    a, b, c = annulus(rng, 0.3, 2.0), annulus(rng, 0.3, 2.0), annulus(rng, 0.3, 2.0)
    return {"n": n, "q": q, "a": a, "b": b, "c": c, "d": a*b*q**(1-n)/c}

add("q_saalschutz", _GROUP, "balanced 3phi2(q^{-n}, a, b; c, abq^{1-n}/c; q; q) = (c/a, c/b;q)_n/(c, c/(ab);q)_n",
    "TERMINATING_EXACT",
    lambda p: phiseries([rq(p)**(-n_of(p)), p["a"], p["b"]], [p["c"], p["d"]], rq(p), rq(p)),
    lambda p: (qps([p["c"]/p["a"], p["c"]/p["b"]], rq(p), n_of(p))
               / qps([p["c"], p["c"]/(p["a"]*p["b"])], rq(p), n_of(p))),
    _sample_q_saalschutz, {"n": 3, "q": 0.5, "a": 0.5, "b": 1.5, "c": 0.3, "d": 10.0},
    constraint=lambda p: _balanced(p["d"], p["a"]*p["b"]*rq(p)**(1-n_of(p))/p["c"], "d"))

add("phi11_sum", _GROUP, "1phi1(a; c; q; c/a) = (c/a;q)_inf/(c;q)_inf",
    "ANALYTIC_TOL",
    lambda p: phiseries([p["a"]], [p["c"]], rq(p), p["c"]/p["a"]),
    lambda p: qp(p["c"]/p["a"], rq(p), INFINITY)/qp(p["c"], rq(p), INFINITY),
    lambda rng: {"a": annulus(rng, 0.3, 2.0), "c": annulus(rng, 0.2, 2.0), "q": qbase(rng)},
    {"a": 0.5, "c": 0.75, "q": 0.5})
