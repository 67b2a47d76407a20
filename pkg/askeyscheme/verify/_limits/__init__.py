"""
    Catalog of limit relations, one module per group, plus shared helpers.
"""

from __future__ import annotations

import math
from typing import Any, Callable, List, Mapping, Optional, Sequence, Tuple, Union

from ...qcore import Number, qpochhammer
from ...hyper import phiseries
from ...families import eval_recurrence, eval_series, qpower
from ..limits import LimitGroup, LimitRelation, LimitSide, TargetSide, register

P = Mapping[str, Any]

def add(name: str, group: LimitGroup, source: str, target: str, description: str,
        forms: Union[LimitSide, Sequence[LimitSide]], rhs: TargetSide, defaults: Mapping[str, Any],
        degrees: Callable[[P], Sequence[int]], points: Callable[[P], Sequence[Number]],
        schedule: Tuple[float, ...], **kwargs: Any) -> None:
    """ Registers a catalog limit relation. """
    # pylint: disable = too-many-arguments
    form_tuple = tuple(forms) if isinstance(forms, (list, tuple)) else (forms,)
    register(LimitRelation(name, group, source, target, description, form_tuple, rhs, dict(defaults),
                           degrees, points, tuple(schedule), **kwargs))

def grid(lo: float, hi: float, count: int) -> Callable[[P], List[complex]]:
    """ Equally spaced sample points on ``[lo, hi]``. """
    def points(p: P) -> List[complex]:
        return [complex(lo+(hi-lo)*k/(count-1)) for k in range(count)]
    return points

def fixed(*xs: Number) -> Callable[[P], List[complex]]:
    """ A fixed list of sample points. """
    return lambda p: [complex(x) for x in xs]

def upto(hi: int, lo: int = 0) -> Callable[[P], List[int]]:
    """ The degrees ``lo, ..., hi``. """
    return lambda p: list(range(lo, hi+1))

def upto_N(p: P) -> List[int]:
    """ The degrees ``0, ..., N``. """
    return list(range(p["N"]+1))

def lattice_N(p: P) -> List[complex]:
    """ The lattice points ``0, ..., N``. """
    return [complex(x) for x in range(p["N"]+1)]

def count(lam: float) -> int:
    """ A schedule point used as a non-negative integer. """
    return int(round(lam))

def ev(name: str, params: Mapping[str, Any], n: int, x: Number, *, lattice: bool = False) -> complex:
    """ Shorthand for :func:`~askeyscheme.families.eval_series`. """
    return eval_series(name, params, n, x, lattice=lattice)

def rec(name: str, params: Mapping[str, Any], n: int, x: Number, *, lattice: bool = False) -> complex:
    """ Shorthand for :func:`~askeyscheme.families.eval_recurrence`. """
    return eval_recurrence(name, params, n, x, lattice=lattice)

def fact(n: int) -> float:
    """ The factorial :math:`n!` as a float. """
    return float(math.factorial(n))

def qfact(q: float, n: int) -> complex:
    """ The q-shifted factorial :math:`(q;q)_n`. """
    return qpochhammer(q, q, n)

def askey_wilson_z(alphas: Sequence[Number], q: float, n: int, z: Number) -> complex:
    """
        The balanced series :math:`{}_4\\phi_3(q^{-n}, abcdq^{n-1}, az, a/z; ab, ac, ad; q, q)` of the Askey-Wilson
        type families, at an explicit point :math:`z` rather than at :math:`x = (z+z^{-1})/2`.
        Missing parameters are zero.

        Near the points where :math:`q \\uparrow 1` limits concentrate, :math:`z` is known to full precision
        while recovering it from :math:`x` is not.
    """
    a, b, c, d = (list(complex(v) for v in alphas)+[0j, 0j, 0j])[:4]
    zc = complex(z)
    return phiseries([q**-n, a*b*c*d*q**(n-1), a*zc, a/zc], [a*b, a*c, a*d], q, q)

def askey_wilson_kappa(alphas: Sequence[Number], q: float, n: int) -> complex:
    """ The prefactor :math:`(ab, ac, ad;q)_n/a^n` of the Askey-Wilson polynomials. """
    a, b, c, d = (list(complex(v) for v in alphas)+[0j, 0j, 0j])[:4]
    return qpochhammer(a*b, q, n)*qpochhammer(a*c, q, n)*qpochhammer(a*d, q, n)/a**n

def q_laguerre_shifted(a: float, q: float, n: int, x: complex) -> complex:
    """
        The value :math:`(q;q)_n L_n^{(\\alpha)}(-q^{-x}; q)` of the q-Laguerre polynomials with
        :math:`q^\\alpha = 1/(a(q-1))`, by forward recursion in the normalization :math:`(q;q)_n L_n`.
        For :math:`a > 0` the parameter :math:`q^\\alpha` is negative, outside the family's real schema.
    """
    Q = 1/(a*(q-1))
    v = -qpower(q, -x)
    prev, cur = 0j, 1+0j
    for k in range(n):
        qk = q**k
        nxt = ((1-qk*q)+q*(1-qk*Q)-qk*qk*q*Q*v)*cur-q*(1-qk*Q)*(1-qk)*prev
        prev, cur = cur, nxt
    return cur

def optional(message: str, ok: bool) -> Optional[str]:
    """ The message when ``ok`` fails, for relation constraints. """
    return None if ok else message
