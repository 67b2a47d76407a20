"""
    Numerical library for the hypergeometric orthogonal polynomials of the Askey scheme and their q-analogues.

    Suggested usage:

    >>> from askeyscheme import *

    The above will import the following names:

    .. code-block:: python

        qcore, hyper, powerseries, measures, families, verify

    The first three are the numerical foundations (q-shifted factorials and q-special functions,
    hypergeometric and basic hypergeometric series, formal power series), :mod:`~askeyscheme.measures`
    implements orthogonality measures and quadrature, :mod:`~askeyscheme.families` describes the polynomial
    families and :mod:`~askeyscheme.verify` checks their properties numerically.
"""

from __future__ import annotations

__version__ = "0.1.0"

from . import qcore
from . import hyper
from . import powerseries
from . import measures
from . import families
from . import verify

__all__ = [
    "qcore",
    "hyper",
    "powerseries",
    "measures",
    "families",
    "verify",
]
