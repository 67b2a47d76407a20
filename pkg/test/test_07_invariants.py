""" Tests for the `askeyscheme.verify.invariants` module. """

import math

import pytest
from askeyscheme.families import table
from askeyscheme.verify import invariants
from askeyscheme.verify.invariants import (SERIES_RECURRENCE_TOL, DEGREE_TOL, FINITE_TOL, QUADRATURE_TOL, SYMMETRY_TOL,
                                           SYMMETRIES, draws, series_recurrence_residual, degree_residual,
                                           orthogonality_threshold, orthogonality_residuals, check_orthogonality,
                                           dual_orthogonality_residual, lattice_residual, symmetry_residual)
from askeyscheme.verify import VerifyValueError

family_names = [desc.name for desc in table()]
measured = [desc.name for desc in table() if desc.has_measure]
alternative = [(desc.name, which) for desc in table() for which in desc.orthogonality_names]
finite = [desc.name for desc in table() if desc.has_measure and desc.measure(desc.prepare()).kind == "DISCRETE_FINITE"]
lattices = [desc.name for desc in table() if desc.variable.kind not in ("DIRECT", "TRIG")]

def test_draws_reproducible() -> None:
    """ Draws depend on the seed and the family only. """
    assert draws("jacobi", 3, 7) == draws("jacobi", 3, 7)
    assert draws("jacobi", 3, 7) != draws("jacobi", 3, 8)
    assert draws("hermite", 2) == [{}, {}]

@pytest.mark.parametrize("name", family_names)
def test_series_recurrence(name: str) -> None:
    """ Series definition and recurrence agree on seeded draws from the positivity domain. """
    for p in draws(name):
        res = series_recurrence_residual(name, p)
        assert res <= SERIES_RECURRENCE_TOL, f"Residual {res:.3e} at {p}"

@pytest.mark.parametrize("name", family_names)
def test_exact_degree(name: str) -> None:
    """ Each polynomial has exact degree in the natural variable. """
    for n in range(0, 5):
        try:
            res = degree_residual(name, None, n)
        except ValueError:
            break
        assert res <= DEGREE_TOL, f"Residual {res:.3e} at n = {n}"

def test_degree_residual_spot() -> None:
    """ A known case. """
    assert degree_residual("laguerre", {"alpha": 0.5}, 4) <= 1e-8
    assert math.isfinite(degree_residual("hermite", {}, 0))

@pytest.mark.parametrize("name", measured)
def test_orthogonality(name: str) -> None:
    """ Each family is orthogonal against its measure at the default parameters, with the closed-form norm. """
    res = check_orthogonality(name, None, upto=4)
    assert res <= orthogonality_threshold(name), f"Residual {res:.3e}"

@pytest.mark.parametrize("name, which", alternative)
def test_alternative_orthogonality(name: str, which: str) -> None:
    """ Alternative orthogonality relations hold with their own norms. """
    res = check_orthogonality(name, None, upto=3, which=which)
    assert res <= orthogonality_threshold(name, which=which), f"Residual {res:.3e}"

def test_orthogonality_thresholds() -> None:
    """ Finite discrete measures are checked exactly, the others up to quadrature error. """
    assert orthogonality_threshold("hahn") == FINITE_TOL
    assert orthogonality_threshold("askey-wilson") == QUADRATURE_TOL
    assert orthogonality_threshold("charlier") == QUADRATURE_TOL

def test_orthogonality_residuals_shape() -> None:
    """ The residual matrix stops at the degree bound of finite families. """
    assert orthogonality_residuals("krawtchouk", {"p": 0.3, "N": 3}, upto=6).shape == (4, 4)
    assert orthogonality_residuals("legendre", {}, upto=2).shape == (3, 3)

@pytest.mark.parametrize("name", finite)
def test_dual_orthogonality(name: str) -> None:
    """ Finite families are complete: the dual orthogonality relation holds. """
    assert dual_orthogonality_residual(name, None) <= FINITE_TOL

def test_dual_orthogonality_failure() -> None:
    """ Dual orthogonality needs a finite discrete measure. """
    with pytest.raises(VerifyValueError):
        dual_orthogonality_residual("charlier", None)

@pytest.mark.parametrize("name", lattices)
def test_lattice(name: str) -> None:
    """ Evaluating at the natural variable and mapping back gives the same values. """
    assert lattice_residual(name, None) <= SYMMETRY_TOL

@pytest.mark.parametrize("name", sorted(SYMMETRIES))
def test_symmetry(name: str) -> None:
    """ Families symmetric in groups of parameters are invariant under their permutations. """
    assert symmetry_residual(name, None) <= SYMMETRY_TOL

def test_symmetry_failure() -> None:
    """ Families without a parameter symmetry are rejected. """
    with pytest.raises(ValueError):
        symmetry_residual("jacobi", None)

def test_doctest_values() -> None:
    """ Values quoted in the module documentation. """
    assert invariants.series_recurrence_residual("hermite", {}) <= 1e-9
    assert invariants.check_orthogonality("legendre", {}, upto=4) <= 1e-10
    assert invariants.dual_orthogonality_residual("krawtchouk", {"p": 0.3, "N": 5}) <= 1e-10
