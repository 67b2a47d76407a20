"""
    q-Exponential, q-trigonometric and Jackson q-Bessel functions.

    The two q-exponentials are evaluated through their infinite product forms,

    .. math::

        e_q(z) = \\frac{1}{(z;q)_\\infty}, \\quad |z| < 1, \\qquad E_q(z) = (-z;q)_\\infty.

    >>> from askeyscheme.qcore import qexp_small, qexp_big
    >>> abs(qexp_small(0.5, 0.5)*qexp_big(-0.5, 0.5) - 1) < 1e-12
    True
"""

from __future__ import annotations

from typing import Union
from typing_extensions import Literal, Final
from typing_validation import validate

from .base import Number, QLike, to_complex, qvalue
from .err import DomainError
from .factorials import DEFAULT_TOL, qpochhammer_inf, qpochhammer_ratio

QTrigKind = Literal["sin_q", "cos_q", "Sin_q", "Cos_q"]
"""
    Literal type for the four q-trigonometric functions.
"""

QTrigKinds: Final = ("sin_q", "cos_q", "Sin_q", "Cos_q")

QBesselKind = Literal[1, 2]
"""
    Literal type for the two Jackson q-Bessel functions.
"""

def qexp_small(z: Number, q: QLike, tol: float = DEFAULT_TOL) -> complex:
    """
        The q-exponential :math:`e_q(z) = 1/(z;q)_\\infty`.

        >>> qexp_small(0, 0.5)
        (1+0j)

        :param z: the argument, with :math:`|z| < 1`
        :type z: :obj:`Number`
        :param q: the base
        :type q: :obj:`QLike`

        :raises DomainError: if :math:`|z| \\geq 1`
    """
    z = to_complex(z, "argument")
    if abs(z) >= 1:
        raise DomainError(f"e_q(z) requires |z| < 1, found |z| = {abs(z)!r}.")
    return 1/qpochhammer_inf(z, q, tol).value

def qexp_big(z: Number, q: QLike, tol: float = DEFAULT_TOL) -> complex:
    """
        The q-exponential :math:`E_q(z) = (-z;q)_\\infty`, an entire function.

        >>> abs(qexp_big(0.25, 0.5) - 1.50586) < 1e-5
        True
    """
    z = to_complex(z, "argument")
    return qpochhammer_inf(-z, q, tol).value

def qtrig(kind: QTrigKind, z: Number, q: QLike, tol: float = DEFAULT_TOL) -> complex:
    """
        The q-trigonometric functions

        .. math::

            \\sin_q(z) = \\frac{e_q(iz)-e_q(-iz)}{2i}, \\quad \\cos_q(z) = \\frac{e_q(iz)+e_q(-iz)}{2},

        and :math:`\\mathrm{Sin}_q`, :math:`\\mathrm{Cos}_q` defined likewise from :math:`E_q`.

        :param kind: one of ``"sin_q"``, ``"cos_q"``, ``"Sin_q"``, ``"Cos_q"``
        :type kind: :obj:`QTrigKind`
        :param z: the argument (with :math:`|z| < 1` for the lowercase kinds)
        :type z: :obj:`Number`
        :param q: the base
        :type q: :obj:`QLike`

        :raises DomainError: if :math:`|z| \\geq 1` for ``sin_q``/``cos_q``
        :raises ValueError: if the kind is unknown
    """
    validate(kind, str)
    if kind not in QTrigKinds:
        raise ValueError(f"Unknown q-trigonometric function {kind!r}.")
    z = to_complex(z, "argument")
    exp = qexp_small if kind in ("sin_q", "cos_q") else qexp_big
    plus = exp(1j*z, q, tol)
    minus = exp(-1j*z, q, tol)
    if kind in ("sin_q", "Sin_q"):
        return (plus-minus)/2j
    return (plus+minus)/2

def qbessel(kind: QBesselKind, nu: float, z: Number, q: QLike, tol: float = DEFAULT_TOL) -> complex:
    """
        The Jackson q-Bessel functions

        .. math::

            J^{(1)}_\\nu(z;q) = \\frac{(q^{\\nu+1};q)_\\infty}{(q;q)_\\infty}\\left(\\frac{z}{2}\\right)^\\nu
            {}_2\\phi_1\\left({0, 0 \\atop q^{\\nu+1}}; q, -\\frac{z^2}{4}\\right)

        and

        .. math::

            J^{(2)}_\\nu(z;q) = \\frac{(q^{\\nu+1};q)_\\infty}{(q;q)_\\infty}\\left(\\frac{z}{2}\\right)^\\nu
            {}_0\\phi_1\\left({- \\atop q^{\\nu+1}}; q, -\\frac{q^{\\nu+1}z^2}{4}\\right).

        Powers :math:`(z/2)^\\nu` take the principal branch.

        :param kind: ``1`` or ``2``
        :type kind: :obj:`QBesselKind`
        :param nu: the order
        :type nu: :obj:`float`
        :param z: the argument (with :math:`|z| < 2` for kind ``1``)
        :type z: :obj:`Number`
        :param q: the base
        :type q: :obj:`QLike`

        :raises DomainError: if :math:`|z| \\geq 2` for kind ``1``
    """
    # pylint: disable = import-outside-toplevel
    from ..hyper import SeriesSpec, eval_series
    validate(kind, int)
    validate(nu, Union[int, float])
    if kind not in (1, 2):
        raise ValueError(f"Unknown q-Bessel kind {kind!r}.")
    z = to_complex(z, "argument")
    qf = qvalue(q)
    qnu = qf**(nu+1)
    prefactor = qpochhammer_ratio([qnu], [qf], qf, tol)
    if z == 0:
        power = 1+0j if nu == 0 else 0j
    else:
        power = (z/2)**nu
    if kind == 1:
        if abs(z) >= 2:
            raise DomainError(f"J^(1) requires |z| < 2, found |z| = {abs(z)!r}.")
        spec = SeriesSpec.phi([0, 0], [qnu], qf, -z*z/4)
    else:
        spec = SeriesSpec.phi([], [qnu], qf, -qnu*z*z/4)
    return prefactor*power*eval_series(spec, tol=1e-16)
