"""
    Truncated formal power series in one variable, used to compare generating functions
    coefficient by coefficient (including generating functions that only hold as formal series).

    >>> from askeyscheme.powerseries import PowerSeries, ps_pow
    >>> ps_pow(PowerSeries([1, -1, 0]), -1).coeffs
    ((1+0j), (1+0j), (1+0j))
"""

from __future__ import annotations

from .series import (DEFAULT_ORDER, Coefficient, PowerSeries, ps_add, ps_mul, ps_exp, ps_log, ps_pow,
                     ps_hyp, ps_series, ps_polynomial)

__all__ = [
    "DEFAULT_ORDER", "Coefficient", "PowerSeries",
    "ps_add", "ps_mul", "ps_exp", "ps_log", "ps_pow", "ps_hyp", "ps_series", "ps_polynomial",
]
