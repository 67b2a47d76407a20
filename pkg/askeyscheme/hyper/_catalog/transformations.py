"""
    Transformation formulas: Heine, Euler, Pfaff-Kummer, Kummer and their confluent forms, reversal of
    terminating series, Jackson's transformations, Sears, Whipple and Singh.

    The confluent forms of Heine's transformations are checked on the conservative domain :math:`|z| < 1`.
"""

from __future__ import annotations

import cmath
from random import Random
from typing import Any, Dict, Mapping, Optional

from ...qcore import INFINITY, binom2, pochhammer, pochhammers
from ..series import fseries, phiseries
from . import add, annulus, degree, disk, n_of, qbase, qp, qps, rq
from .summations import _balanced

P = Mapping[str, Any]

_GROUP = "transformation"

def _inside(*keys: str) -> Any:
    def constraint(p: P) -> Optional[str]:
        for key in keys:
            if abs(p[key]) >= 1:
                return f"|{key}| < 1 is required"
        return None
    return constraint

# Heine

def _sample_heine(rng: Random) -> Dict[str, Any]:
    b = annulus(rng, 0.5, 0.9)
    return {"a": annulus(rng, 0.3, 1.5), "b": b, "c": b*disk(rng, 0.8), "z": disk(rng, 0.8), "q": qbase(rng)}

_HEINE = {"a": 0.8+0.3j, "b": 0.7, "c": 0.35-0.1j, "z": 0.45, "q": 0.5}

def _heine_lhs(p: P) -> complex:
    return phiseries([p["a"], p["b"]], [p["c"]], rq(p), p["z"])

add("heine", _GROUP, "Heine's transformation of 2phi1, first form",
    "ANALYTIC_TOL", _heine_lhs,
    lambda p: (qps([p["a"]*p["z"], p["b"]], rq(p), INFINITY)/qps([p["c"], p["z"]], rq(p), INFINITY)
               * phiseries([p["c"]/p["b"], p["z"]], [p["a"]*p["z"]], rq(p), p["b"])),
    _sample_heine, _HEINE, constraint=_inside("z", "b"))

add("heine_second", _GROUP, "Heine's transformation of 2phi1, second form",
    "ANALYTIC_TOL", _heine_lhs,
    lambda p: (qps([p["c"]/p["b"], p["b"]*p["z"]], rq(p), INFINITY)/qps([p["c"], p["z"]], rq(p), INFINITY)
               * phiseries([p["a"]*p["b"]*p["z"]/p["c"], p["b"]], [p["b"]*p["z"]], rq(p), p["c"]/p["b"])),
    _sample_heine, _HEINE,
    constraint=lambda p: _inside("z")(p) or (None if abs(p["c"]/p["b"]) < 1 else "|c/b| < 1 is required"))

def _sample_heine_third(rng: Random) -> Dict[str, Any]:
    a, b, z = annulus(rng, 0.3, 1.2), annulus(rng, 0.3, 1.2), annulus(rng, 0.05, 0.8)
    return {"a": a, "b": b, "z": z, "c": a*b*z/annulus(rng, 0.2, 0.8), "q": qbase(rng)}

add("heine_third", _GROUP, "Heine's transformation of 2phi1, third form (q-Euler)",
    "ANALYTIC_TOL", _heine_lhs,
    lambda p: (qp(p["a"]*p["b"]*p["z"]/p["c"], rq(p), INFINITY)/qp(p["z"], rq(p), INFINITY)
               * phiseries([p["c"]/p["a"], p["c"]/p["b"]], [p["c"]], rq(p), p["a"]*p["b"]*p["z"]/p["c"])),
    _sample_heine_third, {"a": 0.6, "b": 0.9, "z": 0.4, "c": 0.5, "q": 0.5},
    constraint=lambda p: _inside("z")(p) or (None if abs(p["a"]*p["b"]*p["z"]/p["c"]) < 1
                                             else "|abz/c| < 1 is required"))

# Euler, Pfaff-Kummer, Kummer

def _sample_euler(rng: Random) -> Dict[str, Any]:
    return {"a": annulus(rng, 0.1, 2.0), "b": annulus(rng, 0.1, 2.0), "c": annulus(rng, 0.5, 3.0),
            "z": disk(rng, 0.45)}

_EULER = {"a": 0.5, "b": 1.25, "c": 2.5+0.5j, "z": 0.3-0.2j}

add("euler", _GROUP, "2F1(a, b; c; z) = (1-z)^{c-a-b} 2F1(c-a, c-b; c; z)",
    "ANALYTIC_TOL",
    lambda p: fseries([p["a"], p["b"]], [p["c"]], p["z"]),
    lambda p: ((1-p["z"])**(p["c"]-p["a"]-p["b"])
               * fseries([p["c"]-p["a"], p["c"]-p["b"]], [p["c"]], p["z"])),
    _sample_euler, _EULER, constraint=_inside("z"))

add("pfaff_kummer", _GROUP, "2F1(a, b; c; z) = (1-z)^{-b} 2F1(c-a, b; c; z/(z-1))",
    "ANALYTIC_TOL",
    lambda p: fseries([p["a"], p["b"]], [p["c"]], p["z"]),
    lambda p: (1-p["z"])**(-p["b"])*fseries([p["c"]-p["a"], p["b"]], [p["c"]], p["z"]/(p["z"]-1)),
    _sample_euler, _EULER,
    constraint=lambda p: None if p["z"].real < 0.5 and abs(p["z"]) < 1 else "Re(z) < 1/2 and |z| < 1 are required")

add("kummer", _GROUP, "1F1(a; c; z) = e^z 1F1(c-a; c; -z)",
    "ANALYTIC_TOL",
    lambda p: fseries([p["a"]], [p["c"]], p["z"]),
    lambda p: cmath.exp(p["z"])*fseries([p["c"]-p["a"]], [p["c"]], -p["z"]),
    lambda rng: {"a": annulus(rng, 0.1, 2.0), "c": annulus(rng, 0.5, 3.0), "z": disk(rng, 3.0)},
    {"a": 0.5, "c": 1.5, "z": 1.2})

# confluent forms of Heine's transformations

def _sample_confluent_heine(rng: Random) -> Dict[str, Any]:
    return {"a": annulus(rng, 0.2, 0.9), "b": annulus(rng, 0.2, 0.9), "c": annulus(rng, 0.8, 1.5),
            "z": disk(rng, 0.8), "q": qbase(rng)}

_CONFLUENT = {"a": 0.6, "b": -0.5+0.2j, "c": 1.1, "z": 0.4+0.3j, "q": 0.5}

def _inf(*values: complex, q: float) -> complex:
    return qps(values, q, INFINITY)

add("heine_confluent_zero_zero", _GROUP, "2phi1(0, 0; c; q; z) as a 1phi1 series",
    "ANALYTIC_TOL",
    lambda p: phiseries([0, 0], [p["c"]], rq(p), p["z"]),
    lambda p: phiseries([p["z"]], [0], rq(p), p["c"])/_inf(p["c"], p["z"], q=rq(p)),
    _sample_confluent_heine, _CONFLUENT, constraint=_inside("z"))

add("heine_confluent_zero_zero_second", _GROUP, "2phi1(0, 0; c; q; z) as a 0phi1 series",
    "ANALYTIC_TOL",
    lambda p: phiseries([0, 0], [p["c"]], rq(p), p["z"]),
    lambda p: phiseries([], [p["c"]], rq(p), p["c"]*p["z"])/_inf(p["z"], q=rq(p)),
    _sample_confluent_heine, _CONFLUENT, constraint=_inside("z"))

add("heine_confluent_zero", _GROUP, "2phi1(a, 0; c; q; z) as a 1phi1 series",
    "ANALYTIC_TOL",
    lambda p: phiseries([p["a"], 0], [p["c"]], rq(p), p["z"]),
    lambda p: (_inf(p["a"]*p["z"], q=rq(p))/_inf(p["c"], p["z"], q=rq(p))
               * phiseries([p["z"]], [p["a"]*p["z"]], rq(p), p["c"])),
    _sample_confluent_heine, _CONFLUENT, constraint=_inside("z"))

add("heine_confluent_zero_second", _GROUP, "2phi1(a, 0; c; q; z) as another 1phi1 series",
    "ANALYTIC_TOL",
    lambda p: phiseries([p["a"], 0], [p["c"]], rq(p), p["z"]),
    lambda p: phiseries([p["c"]/p["a"]], [p["c"]], rq(p), p["a"]*p["z"])/_inf(p["z"], q=rq(p)),
    _sample_confluent_heine, _CONFLUENT, constraint=_inside("z"))

add("phi11_as_phi21", _GROUP, "1phi1(a; c; q; z) as a 2phi1 series in a",
    "ANALYTIC_TOL",
    lambda p: phiseries([p["a"]], [p["c"]], rq(p), p["z"]),
    lambda p: (_inf(p["a"], p["z"], q=rq(p))/_inf(p["c"], q=rq(p))
               * phiseries([p["c"]/p["a"], 0], [p["z"]], rq(p), p["a"])),
    _sample_confluent_heine, _CONFLUENT, constraint=_inside("z", "a"))

add("phi11_as_phi21_second", _GROUP, "1phi1(a; c; q; z) as a 2phi1 series in az/c",
    "ANALYTIC_TOL",
    lambda p: phiseries([p["a"]], [p["c"]], rq(p), p["z"]),
    lambda p: (_inf(p["a"]*p["z"]/p["c"], q=rq(p))
               * phiseries([p["c"]/p["a"], 0], [p["c"]], rq(p), p["a"]*p["z"]/p["c"])),
    _sample_confluent_heine, _CONFLUENT,
    constraint=lambda p: _inside("z")(p) or (None if abs(p["a"]*p["z"]/p["c"]) < 1 else "|az/c| < 1 is required"))

add("heine_zero_denominator", _GROUP, "2phi1(a, b; 0; q; z) as a 2phi1 series in b",
    "ANALYTIC_TOL",
    lambda p: phiseries([p["a"], p["b"]], [0], rq(p), p["z"]),
    lambda p: (_inf(p["a"]*p["z"], p["b"], q=rq(p))/_inf(p["z"], q=rq(p))
               * phiseries([p["z"], 0], [p["a"]*p["z"]], rq(p), p["b"])),
    _sample_confluent_heine, _CONFLUENT, constraint=_inside("z", "b"))

add("heine_zero_denominator_second", _GROUP, "2phi1(a, b; 0; q; z) as a 1phi1 series",
    "ANALYTIC_TOL",
    lambda p: phiseries([p["a"], p["b"]], [0], rq(p), p["z"]),
    lambda p: (_inf(p["b"]*p["z"], q=rq(p))/_inf(p["z"], q=rq(p))
               * phiseries([p["b"]], [p["b"]*p["z"]], rq(p), p["a"]*p["z"])),
    _sample_confluent_heine, _CONFLUENT, constraint=_inside("z"))

# reversal of terminating series

def _sample_reversal(rng: Random) -> Dict[str, Any]:
    # small bases make the terms of the reversed series grow like q^{-k^2/2}
    return {"n": degree(rng, 8), "a": annulus(rng, 0.3, 2.5), "b": annulus(rng, 0.3, 2.5),
            "c": annulus(rng, 0.3, 2.5), "x": annulus(rng, 0.3, 2.0), "z": annulus(rng, 0.3, 2.0),
            "q": qbase(rng, 0.4, 0.85)}

_REVERSAL = {"n": 4, "a": 0.7+0.4j, "b": 1.3, "c": -0.6+1.1j, "x": 0.8, "z": 0.6-0.5j, "q": 0.5}

_JACKSON = {"n": 2, "a": 0.7+0.4j, "b": 0.7, "c": 0.4+0.3j, "x": 0.8, "z": 0.5, "q": 0.6}

def _qn(p: P) -> complex:
    return complex(rq(p)**(-n_of(p)))

add("reversal_1f1", _GROUP, "reversed terminating 1F1 is a 2F0",
    "TERMINATING_EXACT",
    lambda p: fseries([-n_of(p)], [p["a"]], p["x"]),
    lambda p: ((-p["x"])**n_of(p)/pochhammer(p["a"], n_of(p))
               * fseries([-n_of(p), -p["a"]-n_of(p)+1], [], -1/p["x"])),
    _sample_reversal, _REVERSAL)

add("reversal_2f1", _GROUP, "reversed terminating 2F1 is a 2F1 in 1/x",
    "TERMINATING_EXACT",
    lambda p: fseries([-n_of(p), p["b"]], [p["c"]], p["x"]),
    lambda p: (pochhammer(p["b"], n_of(p))/pochhammer(p["c"], n_of(p))*(-p["x"])**n_of(p)
               * fseries([-n_of(p), -p["c"]-n_of(p)+1], [-p["b"]-n_of(p)+1], 1/p["x"])),
    _sample_reversal, _REVERSAL)

add("reversal_1phi1", _GROUP, "reversed terminating 1phi1 is a 2phi1 with zero denominator",
    "TERMINATING_EXACT",
    lambda p: phiseries([_qn(p)], [p["a"]], rq(p), p["z"]),
    lambda p: ((p["z"]/rq(p))**n_of(p)/qp(p["a"], rq(p), n_of(p))
               * phiseries([_qn(p), rq(p)**(1-n_of(p))/p["a"]], [0], rq(p),
                           p["a"]*rq(p)**(n_of(p)+1)/p["z"])),
    _sample_reversal, _REVERSAL)

add("reversal_2phi1", _GROUP, "reversed terminating 2phi1 is a 2phi1",
    "TERMINATING_EXACT",
    lambda p: phiseries([_qn(p), p["b"]], [p["c"]], rq(p), p["z"]),
    lambda p: (qp(p["b"], rq(p), n_of(p))/qp(p["c"], rq(p), n_of(p))
               * rq(p)**(-n_of(p)-binom2(n_of(p)))*(-p["z"])**n_of(p)
               * phiseries([_qn(p), rq(p)**(1-n_of(p))/p["c"]], [rq(p)**(1-n_of(p))/p["b"]], rq(p),
                           p["c"]*rq(p)**(n_of(p)+1)/(p["b"]*p["z"]))),
    _sample_reversal, _REVERSAL)

add("reversal_2phi0", _GROUP, "reversed terminating 2phi0 is a 2phi1 with zero numerator",
    "TERMINATING_EXACT",
    lambda p: phiseries([_qn(p), p["b"]], [], rq(p), p["z"]*rq(p)**n_of(p)),
    lambda p: (qp(p["b"], rq(p), n_of(p))*p["z"]**n_of(p)
               * phiseries([_qn(p), 0], [rq(p)**(1-n_of(p))/p["b"]], rq(p), rq(p)/(p["b"]*p["z"]))),
    _sample_reversal, _REVERSAL)

# Jackson's transformations and their relatives

add("jackson", _GROUP, "terminating 2phi1 as a 3phi2 with unit argument",
    "TERMINATING_EXACT",
    lambda p: phiseries([_qn(p), p["b"]], [p["c"]], rq(p), p["z"]),
    lambda p: (qp(p["b"]*p["z"]*_qn(p)/p["c"], rq(p), n_of(p))
               * phiseries([_qn(p), p["c"]/p["b"], 0], [p["c"], p["c"]*rq(p)/(p["b"]*p["z"])], rq(p), rq(p))),
    _sample_reversal, _JACKSON)

add("jackson_inverse", _GROUP, "3phi2 with a zero numerator as a terminating 2phi1",
    "TERMINATING_EXACT",
    lambda p: phiseries([_qn(p), p["a"], 0], [p["b"], p["c"]], rq(p), rq(p)),
    lambda p: (1/qp(rq(p)**(1-n_of(p))/p["b"], rq(p), n_of(p))
               * phiseries([_qn(p), p["c"]/p["a"]], [p["c"]], rq(p), p["a"]*rq(p)/p["b"])),
    _sample_reversal, _REVERSAL)

add("jackson_zero_denominator", _GROUP, "terminating 2phi1 as a 3phi2 with a zero denominator",
    "TERMINATING_EXACT",
    lambda p: phiseries([_qn(p), p["b"]], [p["c"]], rq(p), p["z"]),
    lambda p: (qp(p["c"]/p["b"], rq(p), n_of(p))/qp(p["c"], rq(p), n_of(p))
               * (p["b"]*p["z"]/rq(p))**n_of(p)
               * phiseries([_qn(p), rq(p)/p["z"], rq(p)**(1-n_of(p))/p["c"]],
                           [p["b"]*rq(p)**(1-n_of(p))/p["c"], 0], rq(p), rq(p))),
    _sample_reversal, _REVERSAL)

add("jackson_zero_denominator_second", _GROUP, "terminating 2phi1 as another 3phi2 with a zero denominator",
    "TERMINATING_EXACT",
    lambda p: phiseries([_qn(p), p["b"]], [p["c"]], rq(p), p["z"]),
    lambda p: (qp(p["c"]/p["b"], rq(p), n_of(p))/qp(p["c"], rq(p), n_of(p))
               * phiseries([_qn(p), p["b"], p["b"]*p["z"]*_qn(p)/p["c"]],
                           [p["b"]*rq(p)**(1-n_of(p))/p["c"], 0], rq(p), rq(p))),
    _sample_reversal, _REVERSAL)

add("phi32_zero_denominator", _GROUP, "3phi2 with a zero denominator as a 2phi1 in q/a",
    "TERMINATING_EXACT",
    lambda p: phiseries([_qn(p), p["a"], p["b"]], [p["c"], 0], rq(p), rq(p)),
    lambda p: (qp(p["b"], rq(p), n_of(p))/qp(p["c"], rq(p), n_of(p))*p["a"]**n_of(p)
               * phiseries([_qn(p), p["c"]/p["b"]], [rq(p)**(1-n_of(p))/p["b"]], rq(p), rq(p)/p["a"])),
    _sample_reversal, _REVERSAL)

add("phi32_zero_denominator_second", _GROUP, "3phi2 with a zero denominator as a 2phi1 in bq/c",
    "TERMINATING_EXACT",
    lambda p: phiseries([_qn(p), p["a"], p["b"]], [p["c"], 0], rq(p), rq(p)),
    lambda p: (qp(p["c"]/p["a"], rq(p), n_of(p))/qp(p["c"], rq(p), n_of(p))*p["a"]**n_of(p)
               * phiseries([_qn(p), p["a"]], [p["a"]*rq(p)**(1-n_of(p))/p["c"]], rq(p), p["b"]*rq(p)/p["c"])),
    _sample_reversal, _REVERSAL)

add("phi20_as_phi32", _GROUP, "terminating 2phi0 as a 3phi2 with two zero denominators",
    "TERMINATING_EXACT",
    lambda p: phiseries([_qn(p), p["b"]], [], rq(p), p["z"]),
    lambda p: (p["b"]**(-n_of(p))
               * phiseries([_qn(p), p["b"], p["b"]*p["z"]*_qn(p)], [0, 0], rq(p), rq(p))),
    _sample_reversal, _REVERSAL)

add("phi32_double_zero", _GROUP, "3phi2 with two zero denominators as a 2phi1",
    "TERMINATING_EXACT",
    lambda p: phiseries([_qn(p), p["a"], p["b"]], [0, 0], rq(p), rq(p)),
    lambda p: (qp(p["b"], rq(p), n_of(p))*p["a"]**n_of(p)
               * phiseries([_qn(p), 0], [rq(p)**(1-n_of(p))/p["b"]], rq(p), rq(p)/p["a"])),
    _sample_reversal, _REVERSAL)

add("phi32_double_zero_second", _GROUP, "3phi2 with two zero denominators as a 2phi0",
    "TERMINATING_EXACT",
    lambda p: phiseries([_qn(p), p["a"], p["b"]], [0, 0], rq(p), rq(p)),
    lambda p: p["a"]**n_of(p)*phiseries([_qn(p), p["a"]], [], rq(p), p["b"]*rq(p)**n_of(p)/p["a"]),
    _sample_reversal, _REVERSAL)

# Sears, Whipple, Singh

def _sample_sears(rng: Random) -> Dict[str, Any]:
    n, q = degree(rng, 8), qbase(rng)
    res: Dict[str, Any] = {"n": n, "q": q}
    for key in "abcde":
        res[key] = annulus(rng, 0.4, 2.0)
    res["f"] = res["a"]*res["b"]*res["c"]*q**(1-n)/(res["d"]*res["e"])
    return res

_SEARS = {"n": 3, "q": 0.5, "a": 0.6, "b": 1.4+0.3j, "c": -0.8, "d": 0.9j, "e": 1.7, "f": 0.0}
_SEARS["f"] = _SEARS["a"]*_SEARS["b"]*_SEARS["c"]*0.5**(1-3)/(_SEARS["d"]*_SEARS["e"])

def _sears_balance(p: P) -> Optional[str]:
    return _balanced(p["d"]*p["e"]*p["f"], p["a"]*p["b"]*p["c"]*rq(p)**(1-n_of(p)), "def")

def _sears_lhs(p: P) -> complex:
    return phiseries([_qn(p), p["a"], p["b"], p["c"]], [p["d"], p["e"], p["f"]], rq(p), rq(p))

def _sears_first(p: P) -> complex:
    q, n = rq(p), n_of(p)
    a, b, c, d, e, f = (p[k] for k in "abcdef")
    return (qps([e/a, f/a], q, n)/qps([e, f], q, n)*a**n
            * phiseries([_qn(p), a, d/b, d/c], [d, a*q**(1-n)/e, a*q**(1-n)/f], q, q))

def _sears_second(p: P) -> complex:
    q, n = rq(p), n_of(p)
    a, b, c, e, f = (p[k] for k in "abcef")
    return (qps([a, e*f/(a*b), e*f/(a*c)], q, n)/qps([e, f, e*f/(a*b*c)], q, n)
            * phiseries([_qn(p), e/a, f/a, e*f/(a*b*c)], [e*f/(a*b), e*f/(a*c), q**(1-n)/a], q, q))

add("sears", _GROUP, "Sears' transformation of a terminating balanced 4phi3, first form",
    "TERMINATING_EXACT", _sears_lhs, _sears_first, _sample_sears, _SEARS, constraint=_sears_balance)

add("sears_second", _GROUP, "Sears' transformation of a terminating balanced 4phi3, second form",
    "TERMINATING_EXACT", _sears_lhs, _sears_second, _sample_sears, _SEARS, constraint=_sears_balance)

def _sample_whipple(rng: Random) -> Dict[str, Any]:
    n = degree(rng, 8)
    res: Dict[str, Any] = {"n": n}
    for key in "abcde":
        res[key] = annulus(rng, 0.4, 3.0)
    res["f"] = res["a"]+res["b"]+res["c"]+1-res["d"]-res["e"]-n
    return res

_WHIPPLE = {"n": 3, "a": 0.5, "b": 1.5+0.5j, "c": 2.0, "d": 2.5, "e": 1.75, "f": 0.0}
_WHIPPLE["f"] = _WHIPPLE["a"]+_WHIPPLE["b"]+_WHIPPLE["c"]+1-_WHIPPLE["d"]-_WHIPPLE["e"]-3

add("whipple", _GROUP, "Whipple's transformation of a terminating balanced 4F3",
    "TERMINATING_EXACT",
    lambda p: fseries([-n_of(p), p["a"], p["b"], p["c"]], [p["d"], p["e"], p["f"]], 1),
    lambda p: (pochhammers([p["e"]-p["a"], p["f"]-p["a"]], n_of(p))/pochhammers([p["e"], p["f"]], n_of(p))
               * fseries([-n_of(p), p["a"], p["d"]-p["b"], p["d"]-p["c"]],
                         [p["d"], p["a"]-p["e"]-n_of(p)+1, p["a"]-p["f"]-n_of(p)+1], 1)),
    _sample_whipple, _WHIPPLE,
    constraint=lambda p: _balanced(p["d"]+p["e"]+p["f"]+n_of(p), p["a"]+p["b"]+p["c"]+1, "d+e+f+n"))

def _sample_singh(rng: Random) -> Dict[str, Any]:
    n, q = degree(rng, 8), qbase(rng)
    return {"n": n, "q": q, "a": annulus(rng, 0.4, 1.5), "b": annulus(rng, 0.4, 1.5),
            "c": q**(-n), "d": annulus(rng, 0.4, 1.5)}

add("singh", _GROUP, "Singh's quadratic transformation of a terminating 4phi3 (c = q^{-n})",
    "TERMINATING_EXACT",
    lambda p: phiseries([p["a"]**2, p["b"]**2, p["c"], p["d"]],
                        [p["a"]*p["b"]*rq(p)**0.5, -p["a"]*p["b"]*rq(p)**0.5, -p["c"]*p["d"]], rq(p), rq(p)),
    lambda p: phiseries([p["a"]**2, p["b"]**2, p["c"]**2, p["d"]**2],
                        [p["a"]**2*p["b"]**2*rq(p), -p["c"]*p["d"], -p["c"]*p["d"]*rq(p)], rq(p)**2, rq(p)**2),
    _sample_singh, {"n": 3, "q": 0.5, "a": 0.7, "b": 1.2, "c": 8.0, "d": 0.6+0.4j},
    constraint=lambda p: _balanced(p["c"], complex(rq(p)**(-n_of(p))), "c"))
