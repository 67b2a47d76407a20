"""
    Parameter cancellations and confluence limits of (basic) hypergeometric series,
    on terminating instances, plus the limit from basic to ordinary series as :math:`q \\to 1`.
"""

from __future__ import annotations

from random import Random
from typing import Any, Dict, Mapping

from ..series import fseries, phiseries
from . import add, annulus, degree, disk, n_of, qbase, real, rq

P = Mapping[str, Any]

_GROUP = "confluence"

_LAMBDA_SCHEDULE = (1e1, 1e3, 1e5, 1e7)

def _sample(rng: Random) -> Dict[str, Any]:
    return {"n": degree(rng, 6), "a": annulus(rng, 0.3, 1.5), "b": annulus(rng, 0.5, 2.0),
            "c": annulus(rng, 0.3, 1.5), "mu": annulus(rng, 0.3, 1.5), "z": disk(rng, 0.9), "q": qbase(rng)}

_DEFAULTS = {"n": 3, "a": 0.3, "b": 1.7, "c": 0.6-0.2j, "mu": 0.37, "z": 0.4, "q": 0.5}

def _qn(p: P) -> complex:
    return complex(rq(p)**(-n_of(p)))

add("confluence_numerator_denominator", _GROUP, "equal numerator and denominator parameters cancel",
    "TERMINATING_EXACT",
    lambda p: fseries([-n_of(p), p["a"], p["mu"]], [p["b"], p["mu"]], p["z"]),
    lambda p: fseries([-n_of(p), p["a"]], [p["b"]], p["z"]),
    _sample, _DEFAULTS, threshold=1e-14)

add("confluence_numerator", _GROUP, "rFs(..., lam a; b; z/lam) -> r-1Fs(...; b; a z)",
    "LIMIT_SCHEDULE",
    lambda p: fseries([-n_of(p), p["lam"]*p["c"]], [p["b"]], p["z"]/p["lam"]),
    lambda p: fseries([-n_of(p)], [p["b"]], p["c"]*p["z"]),
    _sample, _DEFAULTS, schedule=_LAMBDA_SCHEDULE)

add("confluence_denominator", _GROUP, "rFs(a; ..., lam b; lam z) -> rFs-1(a; ...; z/b)",
    "LIMIT_SCHEDULE",
    lambda p: fseries([-n_of(p), p["a"]], [p["lam"]*p["b"]], p["lam"]*p["z"]),
    lambda p: fseries([-n_of(p), p["a"]], [], p["z"]/p["b"]),
    _sample, _DEFAULTS, schedule=_LAMBDA_SCHEDULE)

add("confluence_both", _GROUP, "rFs(..., lam a; ..., lam b; z) -> r-1Fs-1(...; ...; a z/b)",
    "LIMIT_SCHEDULE",
    lambda p: fseries([-n_of(p), p["lam"]*p["a"]], [p["lam"]*p["b"]], p["z"]),
    lambda p: fseries([-n_of(p)], [], p["a"]*p["z"]/p["b"]),
    _sample, _DEFAULTS, schedule=_LAMBDA_SCHEDULE)

add("basic_confluence_numerator_denominator", _GROUP, "equal numerator and denominator parameters cancel (basic)",
    "TERMINATING_EXACT",
    lambda p: phiseries([_qn(p), p["a"], p["mu"]], [p["b"], p["mu"]], rq(p), p["z"]),
    lambda p: phiseries([_qn(p), p["a"]], [p["b"]], rq(p), p["z"]),
    _sample, _DEFAULTS, threshold=1e-14)

add("basic_confluence_numerator", _GROUP, "r-phi-s(..., lam a; b; q; z/lam) -> r-1-phi-s(...; b; q; a z)",
    "LIMIT_SCHEDULE",
    lambda p: phiseries([_qn(p), p["lam"]*p["c"]], [p["b"]], rq(p), p["z"]/p["lam"]),
    lambda p: phiseries([_qn(p)], [p["b"]], rq(p), p["c"]*p["z"]),
    _sample, _DEFAULTS, schedule=_LAMBDA_SCHEDULE)

add("basic_confluence_denominator", _GROUP, "r-phi-s(a; ..., lam b; q; lam z) -> r-phi-s-1(a; ...; q; z/b)",
    "LIMIT_SCHEDULE",
    lambda p: phiseries([_qn(p), p["a"]], [p["lam"]*p["b"]], rq(p), p["lam"]*p["z"]),
    lambda p: phiseries([_qn(p), p["a"]], [], rq(p), p["z"]/p["b"]),
    _sample, _DEFAULTS, schedule=_LAMBDA_SCHEDULE)

add("basic_confluence_both", _GROUP, "r-phi-s(..., lam a; ..., lam b; q; z) -> r-1-phi-s-1(...; ...; q; a z/b)",
    "LIMIT_SCHEDULE",
    lambda p: phiseries([_qn(p), p["lam"]*p["a"]], [p["lam"]*p["b"]], rq(p), p["z"]),
    lambda p: phiseries([_qn(p)], [], rq(p), p["a"]*p["z"]/p["b"]),
    _sample, _DEFAULTS, schedule=_LAMBDA_SCHEDULE)

def _sample_classical(rng: Random) -> Dict[str, Any]:
    return {"n": degree(rng, 5), "a": real(rng, 0.2, 2.0), "b": real(rng, 0.5, 3.0),
            "c": real(rng, 0.2, 2.0), "z": real(rng, -0.9, 0.9)}

def _basic_to_classical(p: P) -> complex:
    q = 1-1/p["lam"]
    return phiseries([q**(-n_of(p)), q**p["a"]], [q**p["b"], q**p["c"]], q, (q-1)*p["z"])

add("basic_to_classical", _GROUP, "r-phi-s(q^a; q^b; q; (q-1)^{1+s-r} z) -> rFs(a; b; z) as q -> 1",
    "LIMIT_SCHEDULE", _basic_to_classical,
    lambda p: fseries([-n_of(p), p["a"]], [p["b"], p["c"]], p["z"]),
    _sample_classical, {"n": 3, "a": 0.7, "b": 1.5, "c": 2.5, "z": 0.6},
    schedule=(2.0**4, 2.0**6, 2.0**8, 2.0**10), threshold=1e-2)
