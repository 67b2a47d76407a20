""" Tests for the `askeyscheme.verify.limits` module. """

import cmath
import math

import pytest
from askeyscheme.families import eval_series, exists
from askeyscheme.qcore import DomainError
from askeyscheme.verify import limits
from askeyscheme.verify.limits import (LimitGroups, T_SCHEDULE, N_SCHEDULE, Q_SCHEDULE, Q_SCHEDULE_LONG, check_limit,
                                       tail_ok)
from askeyscheme.verify._limits import askey_wilson_kappa, askey_wilson_z

relation_names = [relation.name for relation in limits.table()]

group_sizes = [
    ("classical", 23),
    ("basic", 49),
    ("q-limit", 42),
]

@pytest.mark.parametrize("group, size", group_sizes)
def test_group_sizes(group: str, size: int) -> None:
    """ The number of limit relations in each group. """
    relations = list(limits.table(group=group))
    assert len(relations) == size
    assert all(r.group == group for r in relations)

def test_catalog_size() -> None:
    """ Every relation belongs to exactly one group. """
    assert set(LimitGroups) == {"classical", "basic", "q-limit"}
    assert len(relation_names) == 114
    assert len(set(relation_names)) == len(relation_names)

@pytest.mark.parametrize("name", relation_names)
def test_relation_endpoints(name: str) -> None:
    """ Sources and targets of every relation are catalog families. """
    relation = limits.get(name)
    assert exists(relation.source), f"Unknown source {relation.source}"
    assert exists(relation.target), f"Unknown target {relation.target}"
    assert (relation.source, relation.target) in limits.edges()

@pytest.mark.parametrize("name", relation_names)
def test_limit_catalog(name: str) -> None:
    """ Every limit relation converges along its default schedule. """
    report = check_limit(name)
    assert report.passed, f"Limit {name} has errors {report.errors}"
    assert len(report.errors) == len(report.schedule)

def test_spot_limits() -> None:
    """ Limits at explicit parameters, degrees and points. """
    report = check_limit("jacobi_laguerre", {"alpha": 0.5}, [3], [1.2], schedule=list(T_SCHEDULE))
    assert report.passed
    assert report.errors[-1] <= 1e-3
    assert check_limit("krawtchouk_charlier", {"a": 1.0}, [2], [3]).passed
    report = check_limit("q_krawtchouk_krawtchouk", {"p": 2.0, "N": 6}, [2], [3])
    assert report.passed
    assert report.schedule[-1] == Q_SCHEDULE_LONG[-1]

def test_errors_decrease() -> None:
    """ Errors along the schedule decrease for an algebraic rate. """
    report = check_limit("jacobi_laguerre", {"alpha": 0.5}, [3], [1.2], schedule=list(T_SCHEDULE))
    assert all(b < a for a, b in zip(report.errors, report.errors[1:]))

def test_tolerance_override() -> None:
    """ An unattainable tolerance fails the check without raising. """
    report = check_limit("jacobi_laguerre", {"alpha": 0.5}, [3], [1.2], tol=1e-300)
    assert not report.passed

def test_tail_ok() -> None:
    """ Tail monotonicity, with slack and a convergence floor. """
    assert tail_ok([1e-1, 1e-2, 1e-3])
    assert not tail_ok([1e-3, 1e-2, 1e-1])
    assert tail_ok([1e-2, 1e-12, 3e-12])
    assert tail_ok([1.0, 1e-1, 1.05e-1])
    assert tail_ok([5.0, 1e-2, 1e-3, 1e-4]), "Only the tail is checked."

invalid_schedules = [
    ("jacobi_laguerre", [1e2, 1e1, 1e3], "Must reject non-increasing schedules."),
    ("jacobi_laguerre", [1e2], "Must reject schedules with a single point."),
    ("q_krawtchouk_krawtchouk", [0.5, 0.9, 1.5], "Must reject q-schedules leaving (0, 1)."),
]

@pytest.mark.parametrize("name, schedule, reason", invalid_schedules)
def test_schedule_failure(name: str, schedule: list, reason: str) -> None: # type: ignore[type-arg]
    """ Checks schedule validation. """
    try:
        check_limit(name, schedule=schedule)
        assert False, reason
    except ValueError:
        pass

def test_lookup_failures() -> None:
    """ Unknown relations, unknown parameters and invalid bases. """
    with pytest.raises(KeyError):
        check_limit("no_such_limit")
    with pytest.raises(ValueError):
        check_limit("jacobi_laguerre", {"gamma": 1.0})
    assert not limits.exists("no_such_limit")
    assert limits.get("krawtchouk_charlier").target == "charlier"

def test_schedules() -> None:
    """ Shipped schedules are increasing, and q-schedules approach one from below. """
    for schedule in (T_SCHEDULE, N_SCHEDULE, Q_SCHEDULE, Q_SCHEDULE_LONG):
        assert all(b > a for a, b in zip(schedule, schedule[1:]))
    assert all(0 < q < 1 for q in Q_SCHEDULE_LONG)

@pytest.mark.parametrize("n", range(0, 5))
def test_askey_wilson_at_explicit_z(n: int) -> None:
    """ The series at an explicit point on the circle reproduces the family value at the cosine. """
    alphas = (0.3, 0.4, -0.2, 0.5)
    q, theta = 0.5, 0.7
    z = cmath.exp(1j*theta)
    params = {"a": 0.3, "b": 0.4, "c": -0.2, "d": 0.5, "q": q}
    lhs = askey_wilson_kappa(alphas, q, n)*askey_wilson_z(alphas, q, n, z)
    rhs = eval_series("askey-wilson", params, n, math.cos(theta))
    assert abs(lhs-rhs) <= 1e-12*max(1.0, abs(rhs)), f"Error at n = {n}"

def test_q_limit_base_domain() -> None:
    """ A base outside (0, 1) in the parameters is a domain error. """
    relation = next(r for r in limits.table(group="basic") if "q" in r.defaults)
    with pytest.raises(DomainError):
        check_limit(relation.name, {"q": 1.5})

first_degree_limits = [
    ("big_q_laguerre_al_salam_carlitz_i", {"a": -0.5, "q": 0.5}, 0.5),
    ("little_q_laguerre_charlier", {"a": 1.2}, 2),
    ("al_salam_carlitz_i_discrete_q_hermite_i", {"q": 0.5}, 0),
]

@pytest.mark.parametrize("name, params, x", first_degree_limits)
def test_limit_normalization(name: str, params: dict, x: float) -> None: # type: ignore[type-arg]
    """ Low degrees pin down the scaling of the source, including at the origin. """
    for n in (1, 2, 3):
        report = check_limit(name, params, [n], [x])
        assert report.passed, f"Limit {name} has errors {report.errors} at n={n}"
        assert report.errors[-1] <= 1e-3

def test_charlier_scaled_target() -> None:
    """ The scaled Charlier target at degree one is :math:`a-x`. """
    a, x = 1.2, 2
    assert abs(a*eval_series("charlier", {"a": a}, 1, x)-(a-x)) <= 1e-14
