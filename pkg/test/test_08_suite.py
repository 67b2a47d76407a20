""" Tests for the `askeyscheme.verify.suite` module. """

import csv
import io
import json

import pytest
from askeyscheme.qcore import DomainError
from askeyscheme.verify import (SuiteFilter, SuiteConfig, PlannedCheck, plan, run_check, run_suite, catalog_manifest,
                                coverage, VerifyKeyError, VerifyValueError)
from askeyscheme.verify.suite import CHECK_KINDS, CSV_COLUMNS, SCHEMA_VERSION

classical = SuiteFilter(modules=("limits",), groups=("classical",))
deterministic = SuiteConfig(deterministic=True)

def test_full_coverage() -> None:
    """ The full plan covers every catalog entry exactly once. """
    checks = plan()
    for kind, (planned, total) in coverage(checks).items():
        assert planned == total, f"Kind {kind}: {planned} planned, {total} in the catalog"
    assert catalog_manifest()["limit"] == 114
    ids = [c.id for c in checks]
    assert len(set(ids)) == len(ids)

def test_kinds_by_module() -> None:
    """ Checks of a module have the kinds of that module. """
    for module, kinds in CHECK_KINDS.items():
        assert all(c.kind in kinds for c in plan(SuiteFilter(modules=(module,))))

def test_relations_for_family() -> None:
    """ Relations filtered by a family. """
    report = run_suite(SuiteFilter(modules=("relations",), families=("legendre",)), deterministic)
    assert report.passed
    assert report.checks[0].id == "relation:legendre_is_gegenbauer_half"

def test_classical_limits() -> None:
    """ The classical limit group runs and passes. """
    report = run_suite(classical, deterministic)
    assert len(report.checks) == 23
    assert report.passed
    assert report.counts() == {"limit": {"total": 23, "passed": 23}}

def test_ids_without_prefix() -> None:
    """ Ids may be given with or without the kind prefix. """
    assert [c.id for c in plan(SuiteFilter(ids=("krawtchouk_charlier",)))] == ["limit:krawtchouk_charlier"]

def test_deterministic_json() -> None:
    """ Deterministic runs serialize identically, with no timestamp and zero timings. """
    flt = SuiteFilter(modules=("generating",), families=("hermite",))
    first = run_suite(flt, deterministic).to_json()
    second = run_suite(flt, deterministic).to_json()
    assert first == second
    doc = json.loads(first)
    assert doc["schema"] == SCHEMA_VERSION
    assert "timestamp" not in doc
    assert doc["seed"] == 42
    assert doc["total"] == len(doc["checks"])
    assert all(c["millis"] == 0 for c in doc["checks"])

def test_timestamp() -> None:
    """ Non-deterministic runs carry a timestamp. """
    report = run_suite(SuiteFilter(ids=("limit:krawtchouk_charlier",)))
    assert report.timestamp is not None
    assert "timestamp" in json.loads(report.to_json())

def test_csv() -> None:
    """ One CSV row per check, after the header. """
    report = run_suite(SuiteFilter(ids=("limit:krawtchouk_charlier", "limit:jacobi_laguerre")), deterministic)
    rows = list(csv.reader(io.StringIO(report.to_csv())))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert [row[0] for row in rows[1:]] == ["limit:jacobi_laguerre", "limit:krawtchouk_charlier"]
    assert all(row[4] == "true" for row in rows[1:])

def test_workers() -> None:
    """ Runs on a thread pool report outcomes in plan order. """
    sequential = run_suite(classical, deterministic)
    parallel = run_suite(classical, deterministic._replace(workers=2))
    assert parallel.checks == sequential.checks

def test_limit_overrides() -> None:
    """ The limit threshold override fails an otherwise passing check. """
    report = run_suite(SuiteFilter(ids=("limit:jacobi_laguerre",)), deterministic._replace(limit_tol=1e-300))
    assert not report.passed
    assert [c.id for c in report.failures] == ["limit:jacobi_laguerre"]

def test_failing_check() -> None:
    """ Numeric errors raised by a check make it fail, with the message attached. """
    def run() -> tuple: # type: ignore[type-arg]
        raise DomainError("Outside the domain.")
    result = run_check(PlannedCheck("limit:broken", "limit", "", (), run), deterministic=True)
    assert not result.passed
    assert result.error is not None and "DomainError" in result.error
    assert result.record()["residual"] == "inf"
    assert result.millis == 0

invalid_filters = [
    (SuiteFilter(modules=("no-such-module",)), ValueError, "Must reject unknown modules."),
    (SuiteFilter(kinds=("no-such-kind",)), ValueError, "Must reject unknown check kinds."),
    (SuiteFilter(groups=("no-such-group",)), ValueError, "Must reject unknown limit groups."),
    (SuiteFilter(families=("no-such-family",)), KeyError, "Must reject unknown families."),
]

@pytest.mark.parametrize("flt, error, reason", invalid_filters)
def test_filter_failure(flt: SuiteFilter, error: type, reason: str) -> None:
    """ Checks filter validation. """
    try:
        plan(flt)
        assert False, reason
    except error:
        pass

def test_run_failures() -> None:
    """ Ids matching no check, and non-positive worker counts. """
    with pytest.raises(VerifyKeyError):
        run_suite(SuiteFilter(ids=("limit:no_such_limit",)))
    with pytest.raises(VerifyValueError):
        run_suite(classical, SuiteConfig(workers=0))

@pytest.mark.parametrize("module", sorted(CHECK_KINDS))
def test_module_passes(module: str) -> None:
    """ Every check of a module passes under the default tolerances. """
    report = run_suite(SuiteFilter(modules=(module,)), deterministic)
    assert report.checks
    assert report.passed, f"Failed: {[c.id for c in report.failures]}"
