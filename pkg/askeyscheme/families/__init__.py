"""
    The polynomial families of the scheme, each described by a :class:`FamilyDescriptor`: parameter schema,
    natural variable, series definition, three-term recurrence, orthogonality measure and norm, equations
    and generating functions.

    Suggested usage:

    >>> from askeyscheme import families
    >>> round(families.eval_series("hermite", {}, 3, 0.7).real, 12)
    -5.656
    >>> families.get_descriptor("q-racah").variable.kind
    'QLATTICE'
    >>> families.relations.check_relation("legendre_is_gegenbauer_half").passed
    True

    Families are looked up by kebab-case name, and parameters not given take the family's default values.
    Closed-form relations between families are collected in :mod:`~askeyscheme.families.relations`.
"""

from __future__ import annotations

from .err import FamilyKeyError, FamilyValueError
from .descriptor import (FamilyGroup, FamilyGroups, ParamKind, ParamInfo, params, VariableKind, VariableKinds,
                         VariableMap, qpower, trig_z, Recurrence, EquationKind, EquationKinds, Evaluation,
                         EquationSpec, three_point, GFMode, GFModes, GFSpec, Orthogonality, FamilyDescriptor)
from .registry import (get_descriptor, exists, register, table, EvalResult, series_value, eval_series,
                       eval_series_path, eval_recurrence, eval_all_upto, polynomial, evaluation)
from .relations import Relation, check_relation
from . import relations

__all__ = [
    "FamilyKeyError", "FamilyValueError",
    "FamilyGroup", "FamilyGroups", "ParamKind", "ParamInfo", "params", "VariableKind", "VariableKinds",
    "VariableMap", "qpower", "trig_z", "Recurrence", "EquationKind", "EquationKinds", "Evaluation",
    "EquationSpec", "three_point", "GFMode", "GFModes", "GFSpec", "Orthogonality", "FamilyDescriptor",
    "get_descriptor", "exists", "register", "table", "EvalResult", "series_value", "eval_series",
    "eval_series_path", "eval_recurrence", "eval_all_upto", "polynomial", "evaluation",
    "Relation", "check_relation", "relations",
]
