"""
    Quadrature configuration: panel order, tolerances and truncation thresholds.

    Defaults are read from the ``quadrature-defaults.json`` data file shipped with the package.

    >>> from askeyscheme.measures import QuadratureConfig
    >>> cfg = QuadratureConfig.default()
    >>> cfg.panel_order
    15
    >>> cfg.replace(rel_tol=1e-10).rel_tol
    1e-10
"""

from __future__ import annotations

import importlib.resources as importlib_resources
import json
from typing import Any, Dict, Mapping, Tuple
from typing_validation import validate

from .err import MeasureValueError

_FIELDS: Tuple[str, ...] = ("panel_order", "rel_tol", "abs_tol", "max_panels", "tail_tol",
                            "tail_run", "max_terms", "max_doublings")

def _load_defaults() -> Dict[str, Any]:
    text = importlib_resources.files("askeyscheme.measures").joinpath("quadrature-defaults.json").read_text(encoding="utf8")
    return json.loads(text)

class QuadratureConfig:
    """
        Container class for the numerical settings of measure integration.

        :param panel_order: number of Gauss-Legendre nodes per panel
        :type panel_order: :obj:`int`
        :param rel_tol: relative tolerance of the adaptive composite quadrature
        :type rel_tol: :obj:`float`
        :param abs_tol: absolute tolerance of the adaptive composite quadrature
        :type abs_tol: :obj:`float`
        :param max_panels: maximum number of panels before giving up
        :type max_panels: :obj:`int`
        :param tail_tol: relative size below which a tail panel or a tail term is negligible
        :type tail_tol: :obj:`float`
        :param tail_run: number of consecutive negligible tail panels/terms required to stop
        :type tail_run: :obj:`int`
        :param max_terms: maximum number of terms in an infinite measure sum
        :type max_terms: :obj:`int`
        :param max_doublings: maximum number of geometric tail panels on unbounded intervals
        :type max_doublings: :obj:`int`
    """

    _panel_order: int
    _rel_tol: float
    _abs_tol: float
    _max_panels: int
    _tail_tol: float
    _tail_run: int
    _max_terms: int
    _max_doublings: int

    __slots__ = ("__weakref__", "_panel_order", "_rel_tol", "_abs_tol", "_max_panels", "_tail_tol",
                 "_tail_run", "_max_terms", "_max_doublings")

    def __new__(cls, panel_order: int, rel_tol: float, abs_tol: float, max_panels: int, tail_tol: float,
                tail_run: int, max_terms: int, max_doublings: int) -> "QuadratureConfig":
        # pylint: disable = too-many-arguments
        for name, value in (("panel_order", panel_order), ("max_panels", max_panels),
                            ("tail_run", tail_run), ("max_terms", max_terms), ("max_doublings", max_doublings)):
            validate(value, int)
            if value < 1:
                raise MeasureValueError(f"Configuration field {name!r} must be positive, found {value}.")
        for name, tol in (("rel_tol", rel_tol), ("abs_tol", abs_tol), ("tail_tol", tail_tol)):
            validate(tol, float)
            if not tol > 0:
                raise MeasureValueError(f"Configuration field {name!r} must be positive, found {tol}.")
        instance = super().__new__(cls)
        instance._panel_order = panel_order
        instance._rel_tol = rel_tol
        instance._abs_tol = abs_tol
        instance._max_panels = max_panels
        instance._tail_tol = tail_tol
        instance._tail_run = tail_run
        instance._max_terms = max_terms
        instance._max_doublings = max_doublings
        return instance

    def __getnewargs__(self) -> Tuple[Any, ...]:
        return tuple(getattr(self, name) for name in _FIELDS)

    @staticmethod
    def default() -> "QuadratureConfig":
        """ The default configuration, read from the packaged defaults file. """
        return QuadratureConfig.from_json(_load_defaults())

    @staticmethod
    def from_json(data: Mapping[str, Any]) -> "QuadratureConfig":
        """
            Builds a configuration from a JSON-like mapping. Missing fields take their default values.

            :raises ValueError: if unknown fields are present
        """
        validate(data, Mapping[str, Any])
        unknown = set(data)-set(_FIELDS)
        if unknown:
            raise MeasureValueError(f"Unknown quadrature configuration fields: {sorted(unknown)}.")
        merged = {**_load_defaults(), **data}
        return QuadratureConfig(**{k: float(v) if k.endswith("_tol") else int(v) for k, v in merged.items()})

    def to_json(self) -> Dict[str, Any]:
        """ The configuration as a JSON-like mapping. """
        return {name: getattr(self, name) for name in _FIELDS}

    def replace(self, **fields: Any) -> "QuadratureConfig":
        """ A copy of this configuration with some fields replaced. """
        return QuadratureConfig.from_json({**self.to_json(), **fields})

    @property
    def panel_order(self) -> int:
        """ Number of Gauss-Legendre nodes per panel. """
        return self._panel_order

    @property
    def rel_tol(self) -> float:
        """ Relative tolerance of the adaptive composite quadrature. """
        return self._rel_tol

    @property
    def abs_tol(self) -> float:
        """ Absolute tolerance of the adaptive composite quadrature. """
        return self._abs_tol

    @property
    def max_panels(self) -> int:
        """ Maximum number of panels. """
        return self._max_panels

    @property
    def tail_tol(self) -> float:
        """ Relative size below which tail contributions are negligible. """
        return self._tail_tol

    @property
    def tail_run(self) -> int:
        """ Number of consecutive negligible tail contributions required to stop. """
        return self._tail_run

    @property
    def max_terms(self) -> int:
        """ Maximum number of terms in an infinite measure sum. """
        return self._max_terms

    @property
    def max_doublings(self) -> int:
        """ Maximum number of geometric tail panels on unbounded intervals. """
        return self._max_doublings

    def __repr__(self) -> str:
        return f"QuadratureConfig({', '.join(f'{k}={v!r}' for k, v in self.to_json().items())})"

    @property
    def _as_tuple(self) -> Tuple[Any, ...]:
        return (QuadratureConfig, *self.__getnewargs__())

    def __hash__(self) -> int:
        return hash(self._as_tuple)

    def __eq__(self, other: Any) -> bool:
        if self is other:
            return True
        if not isinstance(other, QuadratureConfig):
            return NotImplemented
        return self._as_tuple == other._as_tuple
