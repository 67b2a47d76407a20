""" Tests for the `askeyscheme.measures` module. """

import math

import numpy as np
import pytest
from askeyscheme.qcore import DomainError
from askeyscheme.measures import (QuadratureConfig, gauss_legendre, integrate, integrate_unbounded, sum_infinite,
                                  sum_bilateral, ContinuousMeasure, DiscreteMeasure, JacksonMeasure,
                                  family_measure, gram_matrix, inner_product, norm, orthogonality_residual,
                                  MeasureValueError, QuadratureError)

cfg = QuadratureConfig.default()

def test_default_config() -> None:
    """ The packaged defaults. """
    assert cfg.panel_order == 15
    assert cfg.rel_tol == 1e-12
    assert cfg.max_terms == 200000
    assert QuadratureConfig.from_json(cfg.to_json()) == cfg

def test_config_replace() -> None:
    """ Replaced fields are converted and validated. """
    assert cfg.replace(rel_tol=1e-10).rel_tol == 1e-10
    assert cfg.replace(panel_order=7).panel_order == 7
    assert cfg.replace(rel_tol=1e-10) != cfg

invalid_configs = [
    ({"no_such_field": 1}, "Must reject unknown fields."),
    ({"panel_order": 0}, "Must reject non-positive panel orders."),
    ({"rel_tol": -1e-3}, "Must reject non-positive tolerances."),
]

@pytest.mark.parametrize("fields, reason", invalid_configs)
def test_config_failure(fields: dict, reason: str) -> None: # type: ignore[type-arg]
    """ Checks configuration failure modes. """
    try:
        QuadratureConfig.from_json(fields)
        assert False, reason
    except MeasureValueError:
        pass

@pytest.mark.parametrize("order", [2, 5, 15])
def test_gauss_legendre(order: int) -> None:
    """ Gauss-Legendre rules integrate polynomials of degree up to ``2*order-1`` exactly. """
    nodes, weights = gauss_legendre(order)
    assert abs(sum(weights)-2) <= 1e-13
    deg = 2*order-2
    approx = sum(w*x**deg for x, w in zip(nodes, weights))
    assert abs(approx-2/(deg+1)) <= 1e-13

def test_integrate() -> None:
    """ Adaptive quadrature on bounded and unbounded intervals. """
    assert abs(integrate(lambda x: np.array([x**2]), 0.0, 1.0, cfg)[0]-1/3) <= 1e-14
    val = integrate_unbounded(lambda x: np.array([np.exp(-x*x)]), -math.inf, math.inf, cfg)
    assert abs(val[0]-math.sqrt(math.pi)) <= 1e-12

def test_sums() -> None:
    """ One-sided and bilateral measure sums. """
    assert abs(sum_infinite(lambda k: np.array([0.5**k]), cfg)[0]-2) <= 1e-15
    assert abs(sum_bilateral(lambda k: np.array([0.5**abs(k)]), cfg)[0]-3) <= 1e-15

def test_sum_failure() -> None:
    """ A sum whose terms do not decay exhausts the term limit. """
    with pytest.raises(QuadratureError):
        sum_infinite(lambda k: np.array([1.0]), cfg.replace(max_terms=100))

def test_measure_classes() -> None:
    """ Construction and integration of the basic measure classes. """
    binomial = DiscreteMeasure(lambda k: k, lambda k: [1, 2, 1][k], 3)
    assert binomial.kind == "DISCRETE_FINITE"
    assert binomial.integrate(lambda x: np.array([x]), cfg)[0] == 4
    assert binomial.masses(10) == [(0, 1), (1, 2), (2, 1)]
    jackson = JacksonMeasure(lambda x: 1.0, 0.0, 1.0, 0.5)
    assert jackson.kind == "JACKSON"
    assert abs(jackson.integrate(lambda x: np.array([x]), cfg)[0]-2/3) <= 1e-15
    uniform = ContinuousMeasure(lambda x: 1.0, -1.0, 1.0)
    assert abs(uniform.integrate(lambda x: np.array([x*x]), cfg)[0]-2/3) <= 1e-14

def test_measure_failures() -> None:
    """ Empty intervals, empty finite measures and misplaced Jackson integrals. """
    with pytest.raises(MeasureValueError):
        ContinuousMeasure(lambda x: 1.0, 1.0, 1.0)
    with pytest.raises(MeasureValueError):
        DiscreteMeasure(lambda k: k, lambda k: 1, 0)
    with pytest.raises(MeasureValueError):
        JacksonMeasure(lambda x: 1.0, 0.5, None, 0.5).integrate(lambda x: np.array([x]), cfg)

measure_kinds = [
    ("legendre", {}, None, "CONTINUOUS"),
    ("krawtchouk", {"p": 0.3, "N": 6}, None, "DISCRETE_FINITE"),
    ("charlier", {"a": 1.0}, None, "DISCRETE_INFINITE"),
    ("q-laguerre", {}, "bilateral", "BILATERAL"),
    ("big-q-jacobi", {}, None, "JACKSON"),
    ("wilson", {"a": -0.3, "b": 0.7, "c": 1.1, "d": 1.3}, None, "MIXED"),
]

@pytest.mark.parametrize("name, params, which, kind", measure_kinds)
def test_family_measure_kinds(name: str, params: dict, which: str, kind: str) -> None: # type: ignore[type-arg]
    """ Each measure class occurs in the catalog. """
    assert family_measure(name, params, which=which).kind == kind

def test_inner_products() -> None:
    """ Known inner products and norms. """
    assert abs(inner_product("legendre", {}, 1, 1)-2/3) <= 1e-12
    assert abs(inner_product("legendre", {}, 0, 1)) <= 1e-14
    assert abs(inner_product("hermite", {}, 1, 1)-2*math.sqrt(math.pi)) <= 1e-8
    assert abs(norm("chebyshev-t", {}, 0)-math.pi) <= 1e-12
    assert abs(norm("charlier", {"a": 1.0}, 2)-2*math.e) <= 1e-12
    assert abs(norm("little-q-legendre", {"q": 0.5}, 1)-0.5714286) <= 1e-7

orthogonality_cases = [
    ("legendre", {}, 4),
    ("laguerre", {"alpha": 0.5}, 3),
    ("charlier", {"a": 1.0}, 3),
    ("krawtchouk", {"p": 0.3, "N": 6}, 4),
    ("little-q-legendre", {"q": 0.5}, 3),
    ("askey-wilson", {"a": 0.3, "b": 0.3, "c": 0.3, "d": 0.3, "q": 0.5}, 2),
    ("wilson", {"a": -0.3, "b": 0.7, "c": 1.1, "d": 1.3}, 2),
]

@pytest.mark.parametrize("name, params, n", orthogonality_cases)
def test_norms_match_measure(name: str, params: dict, n: int) -> None: # type: ignore[type-arg]
    """ The closed-form norm matches the integrated square, and distinct degrees are orthogonal. """
    assert orthogonality_residual(name, params, n, n) <= 1e-6, f"Norm error for {name}"
    assert orthogonality_residual(name, params, n-1, n) <= 1e-6, f"Orthogonality error for {name}"

def test_gram_matrix() -> None:
    """ The Gram matrix of the Legendre polynomials is diagonal with entries :math:`2/(2n+1)`. """
    gram = gram_matrix("legendre", {}, 3)
    assert gram.shape == (4, 4)
    expected = np.diag([2/(2*n+1) for n in range(4)])
    assert np.max(np.abs(gram-expected)) <= 1e-12

def test_gram_matrix_degree_bound() -> None:
    """ The Gram matrix of a finite family stops at the degree bound. """
    with pytest.raises(DomainError):
        gram_matrix("krawtchouk", {"p": 0.3, "N": 3}, 4)

def test_norm_positivity() -> None:
    """ Norms are only defined in the positivity domain. """
    with pytest.raises(DomainError):
        norm("charlier", {"a": -1.0}, 1)
    with pytest.raises(DomainError):
        norm("krawtchouk", {"p": 0.3, "N": 3}, 4)

log_weight_cases = [
    ("q-laguerre", {"alpha": 0.5, "q": 0.5}, 3, 3),
    ("q-laguerre", {"alpha": 0.5, "q": 0.5}, 2, 3),
    ("q-laguerre", {"alpha": 0.5, "q": 0.5}, 6, 6),
    ("stieltjes-wigert", {"q": 0.5}, 3, 3),
    ("stieltjes-wigert", {"q": 0.5}, 2, 3),
    ("stieltjes-wigert", {"q": 0.5}, 6, 6),
]

@pytest.mark.parametrize("name, params, m, n", log_weight_cases)
def test_orthogonality_log_variable(name: str, params: dict, m: int, n: int) -> None: # type: ignore[type-arg]
    """ Weights on :math:`(0, \\infty)` integrated in the variable :math:`u = \\log x` stay in range. """
    assert orthogonality_residual(name, params, m, n) <= 1e-6, f"Orthogonality error for {name} at ({m}, {n})"

def test_weight_floor_truncation() -> None:
    """ Where the weight is negligible the argument is never formed, even if it would overflow. """
    measure = ContinuousMeasure(lambda u: math.exp(-u*u), -math.inf, math.inf, math.exp)
    val = measure.integrate(lambda x: np.array([x*x]), cfg)
    assert abs(val[0]-math.sqrt(math.pi)*math.e) <= 1e-10

def test_continuous_overflow() -> None:
    """ An integrand which overflows raises a quadrature error. """
    measure = ContinuousMeasure(lambda u: 1.0, 0.0, math.inf, math.exp)
    with pytest.raises(QuadratureError):
        measure.integrate(lambda x: np.array([x]), cfg)
