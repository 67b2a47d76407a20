"""
    Catalog entries for :mod:`~askeyscheme.hyper.identities`, grouped by topic, plus shared sampling helpers.
"""

from __future__ import annotations

import cmath
from random import Random
from typing import Any, Iterable, List, Mapping

from ...qcore import Number, qpochhammer, qpochhammers
from ..identities import IdentityDescriptor, register

__all__ = ["add", "qp", "qps", "qbase", "degree", "real", "modulus", "disk", "annulus", "prod", "n_of", "rq"]

def add(name: str, group: str, description: str, exactness: Any, lhs: Any, rhs: Any,
        sampler: Any, defaults: Mapping[str, Number], **kwargs: Any) -> None:
    """ Builds and registers a catalog identity. """
    # pylint: disable = too-many-arguments
    register(IdentityDescriptor(name, group, description, exactness, lhs, rhs, sampler, defaults, **kwargs))

def qp(a: Number, q: Any, k: Any) -> complex:
    """ Shorthand for :func:`~askeyscheme.qcore.qpochhammer`. """
    return qpochhammer(a, float(q.real) if isinstance(q, complex) else q, k)

def qps(params: Iterable[Number], q: Any, k: Any) -> complex:
    """ Shorthand for :func:`~askeyscheme.qcore.qpochhammers`. """
    return qpochhammers(params, float(q.real) if isinstance(q, complex) else q, k)

def rq(p: Mapping[str, Any], key: str = "q") -> float:
    """ Reads a base from a parameter record as a real number. """
    return float(complex(p[key]).real)

def n_of(p: Mapping[str, Any], key: str = "n") -> int:
    """ Reads an integer parameter from a parameter record. """
    return int(round(complex(p[key]).real))

def prod(values: Iterable[complex]) -> complex:
    """ Product of complex values. """
    res = 1+0j
    for v in values:
        res *= v
    return res

def qbase(rng: Random, lo: float = 0.2, hi: float = 0.8) -> float:
    """ A random base. """
    return rng.uniform(lo, hi)

def degree(rng: Random, hi: int = 8, lo: int = 0) -> int:
    """ A random degree in ``lo..hi``. """
    return rng.randint(lo, hi)

def real(rng: Random, lo: float, hi: float) -> float:
    """ A random real in ``[lo, hi]``. """
    return rng.uniform(lo, hi)

def modulus(rng: Random, lo: float, hi: float) -> float:
    """ A random real with absolute value in ``[lo, hi]`` and random sign. """
    return rng.choice((-1, 1))*rng.uniform(lo, hi)

def disk(rng: Random, radius: float) -> complex:
    """ A random complex number in the open disk of given radius. """
    return cmath.rect(radius*rng.random()**0.5, rng.uniform(-cmath.pi, cmath.pi))

def annulus(rng: Random, lo: float, hi: float) -> complex:
    """ A random complex number with modulus in ``[lo, hi]``. """
    return cmath.rect(rng.uniform(lo, hi), rng.uniform(-cmath.pi, cmath.pi))

def terms(values: List[complex]) -> complex:
    """ Sum of a list of terms. """
    return sum(values, 0j)
