"""
    The verification suite: plans one check per catalog entry (identities, family relations, equations,
    generating functions, structural invariants, orthogonality relations and limit relations), runs them,
    and collects the outcomes in a :class:`SuiteReport`.

    >>> from askeyscheme.verify import suite
    >>> report = suite.run_suite(suite.SuiteFilter(modules=("relations",), families=("legendre",)))
    >>> report.passed
    True
    >>> report.checks[0].id
    'relation:legendre_is_gegenbauer_half'

    Failures are data: a check raising a numeric error is reported as failed, with the error message attached.
    Under ``deterministic=True`` timings are zeroed and no timestamp is written, so that two runs with the same
    configuration give byte-identical reports.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from typing import Any, Callable, Dict, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple
from typing_extensions import Final, Literal
from typing_validation import validate

from ..qcore import NumericError
from ..hyper import identities
from ..families import FamilyDescriptor, get_descriptor, relations, table as family_table
from ..measures import QuadratureConfig
from . import equations, generating, invariants, limits
from .err import VerifyKeyError, VerifyValueError

_logger = logging.getLogger(__name__)

SuiteModule = Literal["identities", "relations", "equations", "generating", "invariants", "orthogonality", "limits"]
"""
    Literal type for the modules of the suite, each a group of check kinds:

    - ``"identities"``: the summation, transformation and confluence identities
    - ``"relations"``: the closed-form relations between families
    - ``"equations"``: equation residuals, eigenvalue guards and agreement of operator forms
    - ``"generating"``: generating function coefficients
    - ``"invariants"``: series against recurrence, exact degree, lattice consistency, parameter symmetry
      and dual orthogonality
    - ``"orthogonality"``: orthogonality against the family's measures
    - ``"limits"``: the limit relations
"""

SuiteModules: Final = ("identities", "relations", "equations", "generating", "invariants", "orthogonality", "limits")

CheckKind = Literal["identity", "relation", "equation", "eigenvalue-guard", "operator-forms", "gf",
                    "series-recurrence", "degree", "lattice", "symmetry", "dual-orthogonality",
                    "orthogonality", "limit"]
"""
    Literal type for the kinds of checks, which prefix the check ids.
"""

CHECK_KINDS: Final[Mapping[str, Tuple[str, ...]]] = {
    "identities": ("identity",),
    "relations": ("relation",),
    "equations": ("equation", "eigenvalue-guard", "operator-forms"),
    "generating": ("gf",),
    "invariants": ("series-recurrence", "degree", "lattice", "symmetry", "dual-orthogonality"),
    "orthogonality": ("orthogonality",),
    "limits": ("limit",),
}
"""
    The check kinds of each suite module.
"""

CheckKinds: Final = tuple(kind for kinds in CHECK_KINDS.values() for kind in kinds)

SCHEMA_VERSION: Final[int] = 1
"""
    Version of the JSON report schema.
"""

CSV_COLUMNS: Final = ("id", "family", "residual", "threshold", "pass", "millis")
"""
    Columns of the CSV report, one row per check.
"""

EQUATION_DEGREE: Final[int] = 8
""" Highest degree of the equation checks, lowered to :math:`N` for finite families. """

GUARD_DEGREE: Final[int] = 3
""" Degree of the eigenvalue guard and operator form checks, lowered to :math:`N` for finite families. """

DEGREE_CHECK_DEGREE: Final[int] = 6
""" Highest degree of the exact degree checks. """

ORTHOGONALITY_DRAWS: Final[int] = 3
""" Parameter draws per family for the orthogonality checks. """


class SuiteFilter(NamedTuple):
    """
        Selects the checks of a suite run. Fields left to :obj:`None` select everything.
    """

    modules: Optional[Tuple[str, ...]] = None
    """ Suite modules, see :obj:`SuiteModule`. """

    families: Optional[Tuple[str, ...]] = None
    """ Families involved in the checks. """

    kinds: Optional[Tuple[str, ...]] = None
    """ Check kinds, see :obj:`CheckKind`. """

    ids: Optional[Tuple[str, ...]] = None
    """ Check ids, e.g. ``"limit:jacobi_laguerre"``, or catalog names without the kind prefix. """

    groups: Optional[Tuple[str, ...]] = None
    """ Limit relation groups, see :obj:`~askeyscheme.verify.limits.LimitGroup`. """

    def validated(self) -> "SuiteFilter":
        """
            Checks that the selected modules, kinds, groups and families exist.

            :raises ValueError: if a module, check kind or limit group is unknown
            :raises KeyError: if a family is unknown
        """
        for module in self.modules or ():
            if module not in SuiteModules:
                raise VerifyValueError(f"Unknown suite module {module!r}, expected one of {list(SuiteModules)}.")
        for kind in self.kinds or ():
            if kind not in CheckKinds:
                raise VerifyValueError(f"Unknown check kind {kind!r}, expected one of {list(CheckKinds)}.")
        for group in self.groups or ():
            if group not in limits.LimitGroups:
                raise VerifyValueError(f"Unknown limit group {group!r}, expected one of {list(limits.LimitGroups)}.")
        for family in self.families or ():
            get_descriptor(family)
        return self


class SuiteConfig(NamedTuple):
    """
        Settings of a suite run.
    """

    seed: int = 42
    """ Seed of the parameter draws. """

    identity_draws: int = 50
    """ Seeded parameter draws per identity. """

    family_draws: int = invariants.DRAWS
    """ Seeded parameter draws per family, for the series and recurrence comparison. """

    orthogonality_draws: int = ORTHOGONALITY_DRAWS
    """ Seeded parameter draws per family, for the orthogonality checks. """

    quadrature: Optional[QuadratureConfig] = None
    """ Quadrature settings, defaulting to :meth:`~askeyscheme.measures.QuadratureConfig.default`. """

    schedule: Optional[Tuple[float, ...]] = None
    """ Overrides the schedules of all selected limit relations. """

    limit_tol: Optional[float] = None
    """ Overrides the thresholds of all selected limit relations. """

    workers: int = 1
    """ Number of worker threads; checks run sequentially if 1. """

    deterministic: bool = False
    """ Whether to zero timings and suppress the timestamp. """


class CheckResult(NamedTuple):
    """
        Outcome of a single check.
    """

    id: str
    """ Check id, ``kind:name``. """

    kind: str
    """ Check kind. """

    family: str
    """ The family checked, or the first family involved (empty for identities). """

    residual: float
    """ Residual of the check. """

    threshold: float
    """ Threshold the residual was compared against. """

    passed: bool
    """ Whether the check passed. """

    millis: float
    """ Running time, in milliseconds. """

    error: Optional[str] = None
    """ Message of the error raised by the check, if any. """

    def record(self) -> Dict[str, Any]:
        """ The check as a JSON record, with keys in a stable order. """
        res: Dict[str, Any] = {
            "id": self.id,
            "family": self.family,
            "residual": _finite(self.residual),
            "threshold": self.threshold,
            "pass": self.passed,
            "millis": round(self.millis, 3),
        }
        if self.error is not None:
            res["error"] = self.error
        return res


class SuiteReport(NamedTuple):
    """
        The outcomes of a suite run, in plan order.
    """

    checks: Tuple[CheckResult, ...]
    """ The check outcomes. """

    config: SuiteConfig
    """ The configuration of the run. """

    timestamp: Optional[str] = None
    """ ISO timestamp of the run, :obj:`None` under deterministic runs. """

    @property
    def passed(self) -> bool:
        """ Whether all checks passed. """
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> Tuple[CheckResult, ...]:
        """ The failed checks. """
        return tuple(c for c in self.checks if not c.passed)

    def counts(self) -> Dict[str, Dict[str, int]]:
        """
            Number of checks and of passed checks, by kind.
        """
        res: Dict[str, Dict[str, int]] = {}
        for c in self.checks:
            entry = res.setdefault(c.kind, {"total": 0, "passed": 0})
            entry["total"] += 1
            entry["passed"] += int(c.passed)
        return res

    def to_json(self, *, indent: Optional[int] = 2) -> str:
        """
            Serializes the report to JSON, with keys in a stable order.
        """
        doc: Dict[str, Any] = {"schema": SCHEMA_VERSION}
        if self.timestamp is not None:
            doc["timestamp"] = self.timestamp
        doc["seed"] = self.config.seed
        doc["passed"] = self.passed
        doc["total"] = len(self.checks)
        doc["failed"] = len(self.failures)
        doc["counts"] = self.counts()
        doc["checks"] = [c.record() for c in self.checks]
        return json.dumps(doc, indent=indent)

    def to_csv(self) -> str:
        """
            Serializes the report to CSV, one row per check, with '.' as decimal separator.
        """
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for c in self.checks:
            writer.writerow([c.id, c.family, repr(_finite(c.residual)), repr(c.threshold),
                             "true" if c.passed else "false", f"{c.millis:.3f}"])
        return buf.getvalue()


def _finite(value: float) -> Any:
    return value if math.isfinite(value) else str(value)


Outcome = Tuple[float, float, bool]
"""
    Type alias for the outcome of a check: (residual, threshold, passed).
"""

class PlannedCheck(NamedTuple):
    """
        A check in the plan of a suite run, not yet executed.
    """

    id: str
    """ Check id. """

    kind: str
    """ Check kind. """

    family: str
    """ Family name, or empty. """

    families: Tuple[str, ...]
    """ All families involved, for filtering. """

    run: Callable[[], Outcome]
    """ Runs the check. """


def _outcome(res: float, threshold: float) -> Outcome:
    return res, threshold, res <= threshold

def _identity_checks(cfg: SuiteConfig) -> Iterator[PlannedCheck]:
    for identity in identities.table():
        name = identity.name
        def run(name: str = name) -> Outcome:
            reports = identities.sample_checks(name, cfg.identity_draws, cfg.seed)
            worst = max(reports, key=lambda r: r.residual)
            return worst.residual, worst.threshold, all(r.passed for r in reports)
        yield PlannedCheck(f"identity:{name}", "identity", "", (), run)

def _relation_checks(cfg: SuiteConfig) -> Iterator[PlannedCheck]:
    # pylint: disable = unused-argument
    for relation in relations.table():
        def run(name: str = relation.name) -> Outcome:
            report = relations.check_relation(name)
            return report.residual, report.threshold, report.passed
        yield PlannedCheck(f"relation:{relation.name}", "relation", relation.families[0], relation.families, run)

def _top(desc: FamilyDescriptor, p: Mapping[str, Any], upto: int) -> int:
    bound = desc.degree_bound(p)
    return upto if bound is None else min(upto, bound)

def _equation_checks(cfg: SuiteConfig) -> Iterator[PlannedCheck]:
    # pylint: disable = unused-argument
    for desc, eq in equations.equation_table():
        def run_equation(desc: FamilyDescriptor = desc, name: str = eq.name) -> Outcome:
            p = desc.prepare(None)
            res = max(equations.check_equation(desc, name, p, n) for n in range(_top(desc, p, EQUATION_DEGREE)+1))
            return _outcome(res, equations.EQUATION_TOL)
        def run_guard(desc: FamilyDescriptor = desc, name: str = eq.name) -> Outcome:
            p = desc.prepare(None)
            res = equations.eigenvalue_guard(desc, name, p, max(1, _top(desc, p, GUARD_DEGREE)))
            return res, equations.GUARD_TOL, res >= equations.GUARD_TOL
        yield PlannedCheck(f"equation:{eq.name}", "equation", desc.name, (desc.name,), run_equation)
        yield PlannedCheck(f"eigenvalue-guard:{eq.name}", "eigenvalue-guard", desc.name, (desc.name,), run_guard)
    for desc, z_form, dq_form in equations.operator_form_pairs():
        def run_forms(desc: FamilyDescriptor = desc, z_form: str = z_form, dq_form: str = dq_form) -> Outcome:
            p = desc.prepare(None)
            res = equations.operator_forms_residual(desc, z_form, dq_form, p, _top(desc, p, GUARD_DEGREE))
            return _outcome(res, equations.FORMS_TOL)
        yield PlannedCheck(f"operator-forms:{dq_form}", "operator-forms", desc.name, (desc.name,), run_forms)

def _gf_checks(cfg: SuiteConfig) -> Iterator[PlannedCheck]:
    # pylint: disable = unused-argument
    for gf in generating.gf_table():
        def run(name: str = gf.name) -> Outcome:
            res = max(generating.check_generating_function(name, None, x) for x in generating.default_points(name))
            return _outcome(res, generating.GF_TOL)
        yield PlannedCheck(f"gf:{gf.name}", "gf", gf.family, (gf.family,), run)

def _invariant_checks(cfg: SuiteConfig) -> Iterator[PlannedCheck]:
    for desc in family_table():
        fam = (desc.name,)
        def run_series(desc: FamilyDescriptor = desc) -> Outcome:
            draws = invariants.draws(desc, cfg.family_draws, cfg.seed)
            res = max((invariants.series_recurrence_residual(desc, p) for p in draws), default=0.0)
            return _outcome(res, invariants.SERIES_RECURRENCE_TOL)
        def run_degree(desc: FamilyDescriptor = desc) -> Outcome:
            p = desc.prepare(None)
            res = max(invariants.degree_residual(desc, p, n) for n in range(_top(desc, p, DEGREE_CHECK_DEGREE)+1))
            return _outcome(res, invariants.DEGREE_TOL)
        yield PlannedCheck(f"series-recurrence:{desc.name}", "series-recurrence", desc.name, fam, run_series)
        yield PlannedCheck(f"degree:{desc.name}", "degree", desc.name, fam, run_degree)
        if desc.variable.kind not in ("DIRECT", "TRIG"):
            def run_lattice(desc: FamilyDescriptor = desc) -> Outcome:
                return _outcome(invariants.lattice_residual(desc, None), invariants.SYMMETRY_TOL)
            yield PlannedCheck(f"lattice:{desc.name}", "lattice", desc.name, fam, run_lattice)
        if desc.name in invariants.SYMMETRIES:
            def run_symmetry(desc: FamilyDescriptor = desc) -> Outcome:
                return _outcome(invariants.symmetry_residual(desc, None), invariants.SYMMETRY_TOL)
            yield PlannedCheck(f"symmetry:{desc.name}", "symmetry", desc.name, fam, run_symmetry)
        if desc.has_measure and desc.measure(desc.prepare(None)).kind == "DISCRETE_FINITE":
            def run_dual(desc: FamilyDescriptor = desc) -> Outcome:
                return _outcome(invariants.dual_orthogonality_residual(desc, None), invariants.FINITE_TOL)
            yield PlannedCheck(f"dual-orthogonality:{desc.name}", "dual-orthogonality", desc.name, fam, run_dual)

def _orthogonality_checks(cfg: SuiteConfig) -> Iterator[PlannedCheck]:
    for desc in family_table():
        if not desc.has_measure:
            continue
        def run(desc: FamilyDescriptor = desc) -> Outcome:
            draws = invariants.draws(desc, cfg.orthogonality_draws, cfg.seed)
            worst, threshold = 0.0, 0.0
            for p in draws:
                threshold = max(threshold, invariants.orthogonality_threshold(desc, p))
                worst = max(worst, invariants.check_orthogonality(desc, p, cfg=cfg.quadrature))
            return _outcome(worst, threshold)
        yield PlannedCheck(f"orthogonality:{desc.name}", "orthogonality", desc.name, (desc.name,), run)
        for which in desc.orthogonality_names:
            def run_which(desc: FamilyDescriptor = desc, which: str = which) -> Outcome:
                p = desc.prepare(None)
                res = invariants.check_orthogonality(desc, p, cfg=cfg.quadrature, which=which)
                return _outcome(res, invariants.orthogonality_threshold(desc, p, which=which))
            yield PlannedCheck(f"orthogonality:{desc.name}:{which}", "orthogonality", desc.name, (desc.name,),
                               run_which)

def _limit_checks(cfg: SuiteConfig, groups: Optional[Tuple[str, ...]]) -> Iterator[PlannedCheck]:
    for relation in limits.table():
        if groups is not None and relation.group not in groups:
            continue
        def run(name: str = relation.name) -> Outcome:
            report = limits.check_limit(name, schedule=cfg.schedule, tol=cfg.limit_tol)
            return report.residual, report.threshold, report.passed
        yield PlannedCheck(f"limit:{relation.name}", "limit", relation.source, (relation.source, relation.target), run)

def _module_checks(module: str, cfg: SuiteConfig, flt: SuiteFilter) -> Iterator[PlannedCheck]:
    if module == "identities":
        return _identity_checks(cfg)
    if module == "relations":
        return _relation_checks(cfg)
    if module == "equations":
        return _equation_checks(cfg)
    if module == "generating":
        return _gf_checks(cfg)
    if module == "invariants":
        return _invariant_checks(cfg)
    if module == "orthogonality":
        return _orthogonality_checks(cfg)
    return _limit_checks(cfg, flt.groups)

def _selected(check: PlannedCheck, flt: SuiteFilter) -> bool:
    if flt.kinds is not None and check.kind not in flt.kinds:
        return False
    if flt.families is not None and not set(check.families) & set(flt.families):
        return False
    if flt.ids is not None and check.id not in flt.ids and check.id.split(":", 1)[1] not in flt.ids:
        return False
    return True

def plan(flt: Optional[SuiteFilter] = None, cfg: Optional[SuiteConfig] = None) -> List[PlannedCheck]:
    """
        The checks selected by a filter, in a stable order: by module, then in catalog order.

        >>> [c.id for c in plan(SuiteFilter(modules=("limits",), groups=("classical",)))][:2]
        ['limit:wilson_continuous_dual_hahn', 'limit:wilson_continuous_hahn']

        :raises ValueError: if the filter names an unknown module, check kind or limit group
        :raises KeyError: if the filter names an unknown family
    """
    flt = (SuiteFilter() if flt is None else flt).validated()
    cfg = SuiteConfig() if cfg is None else cfg
    modules = SuiteModules if flt.modules is None else tuple(m for m in SuiteModules if m in flt.modules)
    return [check for module in modules for check in _module_checks(module, cfg, flt) if _selected(check, flt)]

def run_check(check: PlannedCheck, *, deterministic: bool = False) -> CheckResult:
    """
        Runs a planned check. Numeric and domain errors make the check fail, with the message attached.
    """
    start = time.perf_counter()
    error: Optional[str] = None
    try:
        res, threshold, passed = check.run()
    except (NumericError, ArithmeticError, ValueError, KeyError) as e:
        _logger.warning("Check %s raised %s: %s", check.id, type(e).__name__, e)
        res, threshold, passed, error = math.inf, 0.0, False, f"{type(e).__name__}: {e}"
    millis = 0.0 if deterministic else 1000*(time.perf_counter()-start)
    if not passed and error is None:
        _logger.info("Check %s failed: residual %.3e, threshold %.3e", check.id, res, threshold)
    return CheckResult(check.id, check.kind, check.family, float(res), float(threshold), bool(passed), millis, error)

def run_suite(flt: Optional[SuiteFilter] = None, cfg: Optional[SuiteConfig] = None) -> SuiteReport:
    """
        Runs the checks selected by a filter, sequentially or on a pool of worker threads.
        The report lists the outcomes in plan order either way.

        >>> report = run_suite(SuiteFilter(ids=("limit:krawtchouk_charlier",)), SuiteConfig(deterministic=True))
        >>> [c.id for c in report.checks], report.passed
        (['limit:krawtchouk_charlier'], True)

        :param flt: the filter, selecting everything if not given
        :type flt: :class:`SuiteFilter` or :obj:`None`, *optional*
        :param cfg: the configuration, defaulting to :class:`SuiteConfig` defaults
        :type cfg: :class:`SuiteConfig` or :obj:`None`, *optional*

        :raises ValueError: if the filter names an unknown module, check kind or limit group
        :raises KeyError: if the filter names an unknown family, or an id matching no check
    """
    cfg = SuiteConfig() if cfg is None else cfg
    validate(cfg.workers, int)
    if cfg.workers < 1:
        raise VerifyValueError(f"Number of workers must be positive, found {cfg.workers}.")
    checks = plan(flt, cfg)
    if flt is not None and flt.ids is not None and not checks:
        raise VerifyKeyError(f"No check matches the ids {list(flt.ids)}.")
    _logger.info("Running %d checks with %d worker(s).", len(checks), cfg.workers)
    def run(check: PlannedCheck) -> CheckResult:
        return run_check(check, deterministic=cfg.deterministic)
    if cfg.workers == 1:
        results = [run(check) for check in checks]
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(run, checks))
    timestamp = None if cfg.deterministic else datetime.now(timezone.utc).isoformat(timespec="seconds")
    report = SuiteReport(tuple(results), cfg, timestamp)
    _logger.info("Suite finished: %d of %d checks passed.", len(results)-len(report.failures), len(results))
    return report

def catalog_manifest() -> Dict[str, int]:
    """
        The number of catalog entries behind each check kind, counted from the catalogs themselves.

        >>> catalog_manifest()["limit"]
        114
    """
    manifest = {
        "identity": sum(1 for _ in identities.table()),
        "relation": sum(1 for _ in relations.table()),
        "equation": sum(1 for _ in equations.equation_table()),
        "gf": sum(1 for _ in generating.gf_table()),
        "series-recurrence": sum(1 for _ in family_table()),
        "orthogonality": sum(1+len(d.orthogonality_names) for d in family_table() if d.has_measure),
        "limit": sum(1 for _ in limits.table()),
    }
    manifest["eigenvalue-guard"] = manifest["equation"]
    manifest["degree"] = manifest["series-recurrence"]
    return manifest

def coverage(checks: Sequence[PlannedCheck]) -> Dict[str, Tuple[int, int]]:
    """
        For each kind in :func:`catalog_manifest`, the pair (planned checks, catalog entries).
        A full plan covers every catalog entry exactly once.

        >>> all(planned == total for planned, total in coverage(plan()).values())
        True
    """
    manifest = catalog_manifest()
    planned: Dict[str, int] = {kind: 0 for kind in manifest}
    for check in checks:
        if check.kind in planned:
            planned[check.kind] += 1
    return {kind: (planned[kind], manifest[kind]) for kind in manifest}
