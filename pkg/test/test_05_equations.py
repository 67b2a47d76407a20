""" Tests for the `askeyscheme.verify.equations` and `askeyscheme.verify.generating` modules. """

from typing import Optional

import pytest
from askeyscheme.families import FamilyDescriptor, get_descriptor
from askeyscheme.verify import (EQUATION_TOL, GF_TOL, find_equation, equation_table, check_equation, point_residuals,
                                eigenvalue_guard, operator_form_pairs, operator_forms_residual, gf_table,
                                find_generating_function, check_generating_function, coefficient_residuals,
                                default_points, VerifyKeyError, VerifyValueError)
from askeyscheme.verify.equations import GUARD_TOL, FORMS_TOL

equations = [(desc.name, eq.name) for desc, eq in equation_table()]
generating_functions = [gf.name for gf in gf_table()]
operator_forms = [(desc.name, z, dq) for desc, z, dq in operator_form_pairs()]

def _top(desc: FamilyDescriptor, cap: int) -> int:
    bound: Optional[int] = desc.degree_bound(desc.prepare())
    return cap if bound is None else min(cap, bound)

def test_spot_equations() -> None:
    """ Equations at explicit parameters, degrees and points. """
    assert check_equation("hermite", "hermite_ode", {}, 3, [0.7]) <= 1e-11
    assert check_equation("hahn", "hahn_difference", {"alpha": 0.5, "beta": 1.5, "N": 8}, 3, [4]) <= 1e-10
    assert check_equation("askey-wilson", "askey_wilson_qdifference",
                          {"a": 0.3, "b": 0.3, "c": 0.3, "d": 0.3, "q": 0.5}, 2, [0.8]) <= 1e-9

@pytest.mark.parametrize("family, name", equations)
def test_equation_catalog(family: str, name: str) -> None:
    """ Every catalog equation is satisfied at the default parameters and sample points. """
    desc = get_descriptor(family)
    for n in range(1, _top(desc, 5)+1):
        res = check_equation(family, name, None, n)
        assert res <= EQUATION_TOL, f"Residual {res:.3e} at n = {n}"

@pytest.mark.parametrize("family, name", equations)
def test_eigenvalue_guard(family: str, name: str) -> None:
    """ Perturbing the eigenvalue breaks every catalog equation. """
    desc = get_descriptor(family)
    n = _top(desc, 3)
    assert eigenvalue_guard(family, name, None, n) >= GUARD_TOL

@pytest.mark.parametrize("family, z_form, dq_form", operator_forms)
def test_operator_forms(family: str, z_form: str, dq_form: str) -> None:
    """ The z-form and the q-derivative form of the same equation agree pointwise. """
    desc = get_descriptor(family)
    assert operator_forms_residual(family, z_form, dq_form, None, _top(desc, 3)) <= FORMS_TOL

def test_operator_form_pairs() -> None:
    """ The Askey-Wilson equation is given in both forms. """
    assert ("askey-wilson", "askey_wilson_qdifference", "askey_wilson_qderivative") in operator_forms

def test_equation_lookup() -> None:
    """ Equations are looked up among those of their family. """
    assert find_equation("jacobi", "jacobi_ode").kind == "ODE2"
    assert [eq.name for _, eq in equation_table(family="legendre")] == ["legendre_ode"]
    with pytest.raises(KeyError):
        find_equation("legendre", "hermite_ode")
    assert issubclass(VerifyKeyError, KeyError)

def test_point_residuals() -> None:
    """ One residual per sample point, and no empty point sets. """
    assert len(point_residuals("hermite", "hermite_ode", {}, 3, [0.1, 0.2, 0.3])) == 3
    with pytest.raises(VerifyValueError):
        point_residuals("hermite", "hermite_ode", {}, 3, [])

odd_origin_equations = [
    ("gegenbauer", "gegenbauer_ode", {"lambda": 0.75}),
    ("chebyshev-u", "chebyshev_u_ode", {}),
    ("legendre", "legendre_ode", {}),
]

@pytest.mark.parametrize("family, name, params", odd_origin_equations)
def test_equation_at_odd_zero(family: str, name: str, params: dict) -> None: # type: ignore[type-arg]
    """ At a zero of an odd polynomial every term is rounding noise, which must not fail the check. """
    assert check_equation(family, name, params, 5, [0.0]) <= EQUATION_TOL
    assert point_residuals(family, name, params, 5, [0.0, 0.5])[0] <= EQUATION_TOL

gf_spot_checks = [
    ("legendre_gf", {}, 0.3, 10),
    ("hermite_gf", {}, -0.4, 12),
    ("charlier_gf", {"a": 2.0}, 3, 10),
    ("discrete_q_hermite_ii_gf_phi", {"c": 1.0, "q": 0.5}, 0.7, 10),
    ("discrete_q_hermite_ii_gf_phi", {"c": 1.0, "q": 0.3}, -1.2, 10),
]

@pytest.mark.parametrize("name, params, x, order", gf_spot_checks)
def test_spot_generating_functions(name: str, params: dict, x: float, order: int) -> None: # type: ignore[type-arg]
    """ Generating functions at explicit parameters and points. """
    assert check_generating_function(name, params, x, order=order) <= 1e-10

@pytest.mark.parametrize("name", generating_functions)
def test_generating_function_catalog(name: str) -> None:
    """ Every catalog generating function matches the family coefficients at its default points. """
    for x in default_points(name):
        res = check_generating_function(name, None, x)
        assert res <= GF_TOL, f"Residual {res:.3e} at x = {x}"

def test_truncated_generating_function() -> None:
    """ Generating functions of finite families stop at the degree bound. """
    gf = find_generating_function("krawtchouk_gf")
    assert gf.mode == "TRUNCATED"
    assert len(coefficient_residuals(gf, {"p": 0.3, "N": 4}, 2, order=12)) == 5

def test_generating_function_failures() -> None:
    """ Unknown generating functions and negative orders are rejected. """
    with pytest.raises(KeyError):
        find_generating_function("no_such_gf")
    with pytest.raises(ValueError):
        check_generating_function("legendre_gf", {}, 0.3, order=-1)
