""" Tests for the `askeyscheme.families` module. """

import math

import pytest
from askeyscheme import families
from askeyscheme.families import (get_descriptor, exists, table, eval_series, eval_series_path, eval_recurrence,
                                  eval_all_upto, polynomial, evaluation, relations, check_relation,
                                  FamilyKeyError, FamilyValueError)
from askeyscheme.hyper import residual
from askeyscheme.qcore import DomainError, PoleError

family_names = [family.name for family in table()]

spot_values = [
    ("legendre", {}, 2, 0.5, -0.125),
    ("hermite", {}, 3, 0.7, -5.656),
    ("chebyshev-t", {}, 4, math.sqrt(3)/2, -0.5),
    ("chebyshev-u", {}, 2, 0.0, -1.0),
    ("charlier", {"a": 1.0}, 1, 2, -1.0),
    ("laguerre", {"alpha": 0.0}, 2, 1.0, -0.5),
]

@pytest.mark.parametrize("name, params, n, x, expected", spot_values)
def test_spot_values(name: str, params: dict, n: int, x: float, expected: float) -> None: # type: ignore[type-arg]
    """ Known values, through both the series definition and the recurrence. """
    assert abs(eval_series(name, params, n, x)-expected) <= 1e-12, f"Series error for {name}"
    assert abs(eval_recurrence(name, params, n, x)-expected) <= 1e-12, f"Recurrence error for {name}"

@pytest.mark.parametrize("name", family_names)
def test_series_matches_recurrence(name: str) -> None:
    """ The series definition and the forward recurrence agree at the default parameters. """
    family = get_descriptor(name)
    p = family.prepare()
    bound = family.degree_bound(p)
    top = 6 if bound is None else min(6, bound)
    for x in family.points(p)[:4]:
        try:
            values = eval_all_upto(name, None, top, x)
        except PoleError:
            continue
        for n in range(top+1):
            try:
                series = eval_series(name, None, n, x)
            except PoleError:
                continue
            assert residual(series, values[n]) <= 1e-9, f"Error at n = {n}, x = {x}"

@pytest.mark.parametrize("name", family_names)
def test_descriptor_metadata(name: str) -> None:
    """ Every family has a group, a schema containing its defaults and a natural variable. """
    family = get_descriptor(name)
    assert family.group in families.FamilyGroups
    assert set(family.defaults) == set(family.param_names)
    assert family.variable.kind in families.VariableKinds
    assert exists(name)

def test_hermite_polynomial() -> None:
    """ Monomial coefficients of :math:`H_2(x) = 4x^2-2`. """
    assert polynomial("hermite", {}, 2).coef.real.tolist() == [-2.0, 0.0, 4.0]

def test_evaluation_derivatives() -> None:
    """ Exact derivatives through the monomial coefficients. """
    ev = evaluation("legendre", {}, 3)
    x = 0.3
    # P_3(x) = (5x^3-3x)/2
    assert abs(ev(x)-(5*x**3-3*x)/2) <= 1e-14
    assert abs(ev.d(x)-(15*x**2-3)/2) <= 1e-13
    assert abs(ev.d(x, 2)-15*x) <= 1e-13

def test_fallback_path() -> None:
    """ The rewritten definition is used where the series denominator vanishes. """
    res = eval_series_path("laguerre", {"alpha": -3.0}, 4, 0.5)
    assert res.path == "fallback"
    assert eval_series_path("laguerre", {"alpha": 0.5}, 4, 0.5).path == "series"

askey_wilson_cancelling = {"a": 0.58, "b": 0.47, "c": -0.11, "d": -0.65, "q": 0.553}

def test_recurrence_path() -> None:
    """ Forward recursion is used where cancellation in the series leaves too few correct digits. """
    res = eval_series_path("askey-wilson", askey_wilson_cancelling, 12, -0.45)
    assert res.path == "recurrence"
    expected = eval_recurrence("askey-wilson", askey_wilson_cancelling, 12, -0.45)
    assert residual(res.value, expected) <= 1e-12
    desc = get_descriptor("legendre")
    p = desc.prepare({})
    assert families.series_value(desc, p, 12, 0.3+0j).path == "series"
    forced = families.series_value(desc, p, 12, 0.3+0j, precision_tol=1e-20)
    assert forced.path == "recurrence"
    assert residual(forced.value, eval_series("legendre", {}, 12, 0.3)) <= 1e-12

def test_lattice_argument() -> None:
    """ On lattice families, values may be requested at the natural variable. """
    family = get_descriptor("q-racah")
    assert family.variable.kind == "QLATTICE"
    p = family.prepare()
    x = 2.0
    v = family.variable.forward(p, x)
    assert abs(eval_series("q-racah", None, 2, v, lattice=True)-eval_series("q-racah", None, 2, x)) <= 1e-10

def test_krawtchouk_self_duality() -> None:
    """ Krawtchouk polynomials are symmetric in degree and argument. """
    params = {"p": 0.5, "N": 4}
    for n in range(5):
        for x in range(5):
            assert abs(eval_series("krawtchouk", params, n, x)-eval_series("krawtchouk", params, x, n)) <= 1e-12

def test_q_laguerre_at_minus_one() -> None:
    """ :math:`L_n^{(\\alpha)}(-1;q) = 1/(q;q)_n`, through the relation catalog. """
    report = check_relation("q_laguerre_at_minus_one", {"alpha": 0.7, "q": 0.5}, [3])
    assert report.residual <= 1e-12
    assert report.passed

@pytest.mark.parametrize("name", [relation.name for relation in relations.table()])
def test_relation_catalog(name: str) -> None:
    """ Every catalog relation holds at its default parameters. """
    report = check_relation(name)
    assert report.passed, f"Relation {name} has residual {report.residual:.3e}"

def test_relations_by_family() -> None:
    """ Relations can be filtered by family. """
    assert any(r.name == "hahn_dual_hahn" for r in relations.table(family="dual-hahn"))
    assert relations.get("chebU_is_gegenbauer1").families == ("chebyshev-u", "gegenbauer")

failures = [
    (lambda: eval_series("no-such-family", {}, 1, 0.5), KeyError, "Must reject unknown families."),
    (lambda: eval_series("legendre", {"alpha": 1.0}, 1, 0.5), ValueError, "Must reject unknown parameters."),
    (lambda: eval_series("krawtchouk", {"p": 0.5, "N": 3}, 4, 1), DomainError, "Must reject degrees above N."),
    (lambda: eval_series("legendre", {}, -1, 0.5), DomainError, "Must reject negative degrees."),
    (lambda: get_descriptor("legendre").measure({}, which="no-such-relation"), ValueError,
     "Must reject unknown orthogonality relations."),
]

@pytest.mark.parametrize("call, error, reason", failures)
def test_failures(call, error: type, reason: str) -> None: # type: ignore[no-untyped-def]
    """ Checks failure modes of family lookup and evaluation. """
    try:
        call()
        assert False, reason
    except error:
        pass

def test_error_classes() -> None:
    """ Family errors subclass the builtin errors. """
    assert issubclass(FamilyKeyError, KeyError)
    assert issubclass(FamilyValueError, ValueError)
    assert not exists("Wilson")
