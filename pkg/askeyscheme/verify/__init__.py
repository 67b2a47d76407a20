"""
    Numerical verification of the families: equation residuals, generating function coefficients, limit
    relations, structural invariants and the suite collecting them all.

    Suggested usage:

    >>> from askeyscheme import verify
    >>> verify.check_equation("hermite", "hermite_ode", {}, 3, [0.7]) <= 1e-11
    True
    >>> verify.check_limit("krawtchouk_charlier", {"a": 1.0}, [2], [3]).passed
    True
    >>> verify.series_recurrence_residual("askey-wilson", {}) <= 1e-9
    True

    The suite runs one check per catalog entry and reports the outcomes, serializable to JSON and CSV:

    >>> report = verify.run_suite(verify.SuiteFilter(modules=("limits",), groups=("classical",)),
    ...                           verify.SuiteConfig(deterministic=True))
    >>> len(report.checks), report.passed
    (23, True)
"""

from __future__ import annotations

from .err import VerifyKeyError, VerifyValueError
from .equations import (EQUATION_TOL, find_equation, equation_table, point_residuals, check_equation,
                        eigenvalue_guard, operator_form_pairs, operator_forms_residual)
from .generating import (GF_TOL, GF_ORDER, gf_table, find_generating_function, coefficient_residuals,
                         check_generating_function, default_points)
from .limits import (LimitGroup, LimitGroups, LimitRelation, LimitReport, LIMIT_TOL, T_SCHEDULE, N_SCHEDULE,
                     Q_SCHEDULE, check_limit, tail_ok)
from .invariants import (series_recurrence_residual, degree_residual, check_orthogonality,
                         orthogonality_residuals, orthogonality_threshold, dual_orthogonality_residual,
                         lattice_residual, symmetry_residual)
from .suite import (SuiteModule, SuiteModules, CheckKind, CheckKinds, SuiteFilter, SuiteConfig, CheckResult,
                    SuiteReport, PlannedCheck, plan, run_check, run_suite, catalog_manifest, coverage)
from . import equations, generating, limits, invariants, suite

__all__ = [
    "VerifyKeyError", "VerifyValueError",
    "EQUATION_TOL", "find_equation", "equation_table", "point_residuals", "check_equation",
    "eigenvalue_guard", "operator_form_pairs", "operator_forms_residual",
    "GF_TOL", "GF_ORDER", "gf_table", "find_generating_function", "coefficient_residuals",
    "check_generating_function", "default_points",
    "LimitGroup", "LimitGroups", "LimitRelation", "LimitReport", "LIMIT_TOL", "T_SCHEDULE", "N_SCHEDULE",
    "Q_SCHEDULE", "check_limit", "tail_ok",
    "series_recurrence_residual", "degree_residual", "check_orthogonality", "orthogonality_residuals",
    "orthogonality_threshold", "dual_orthogonality_residual", "lattice_residual", "symmetry_residual",
    "SuiteModule", "SuiteModules", "CheckKind", "CheckKinds", "SuiteFilter", "SuiteConfig", "CheckResult",
    "SuiteReport", "PlannedCheck", "plan", "run_check", "run_suite", "catalog_manifest", "coverage",
    "equations", "generating", "limits", "invariants", "suite",
]
