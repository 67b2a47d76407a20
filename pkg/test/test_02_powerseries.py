""" Tests for the `askeyscheme.powerseries` module. """

import math
from random import Random

import pytest
from askeyscheme.qcore import DomainError, pochhammer
from askeyscheme.hyper import SeriesSpec
from askeyscheme.powerseries import PowerSeries, ps_add, ps_mul, ps_exp, ps_log, ps_pow, ps_hyp, ps_series, ps_polynomial

random = Random(0)

def _close(a: PowerSeries, b: PowerSeries, tol: float = 1e-12) -> bool:
    return len(a) == len(b) and all(abs(x-y) <= tol*max(1.0, abs(y)) for x, y in zip(a.coeffs, b.coeffs))

def _random_series(order: int) -> PowerSeries:
    return PowerSeries([1+random.uniform(-0.5, 0.5)]+[complex(random.uniform(-1, 1), random.uniform(-1, 1))
                                                       for _ in range(order)])

def test_construction() -> None:
    """ Basic construction, order and empty failure. """
    s = PowerSeries([1, 2, 3])
    assert s.order == 2 and s[1] == 2
    assert PowerSeries.variable(2).coeffs == (0, 1, 0)
    with pytest.raises(ValueError):
        PowerSeries([])

def test_arithmetic() -> None:
    """ Products truncate to the smaller order. """
    t = PowerSeries.variable(4)
    assert (1+t)*(1-t) == PowerSeries([1, 0, -1, 0, 0])
    assert ps_add(PowerSeries([1, 1, 1]), PowerSeries([1, -1])) == PowerSeries([2, 0])
    assert ps_mul(PowerSeries.geometric(1, 4), PowerSeries([1, -1, 0, 0, 0])) == PowerSeries([1, 0, 0, 0, 0])

@pytest.mark.parametrize("order", [0, 3, 8])
def test_inverse(order: int) -> None:
    """ A series times its inverse is one. """
    for _ in range(5):
        a = _random_series(order)
        assert _close(a*a.inverse(), PowerSeries.constant(1, order))

def test_inverse_failure() -> None:
    """ A series with zero constant term is not invertible. """
    with pytest.raises(DomainError):
        PowerSeries([0, 1]).inverse()

def test_exp_coefficients() -> None:
    """ The exponential of :math:`t` has coefficients :math:`1/n!`. """
    e = ps_exp(PowerSeries.variable(10))
    assert _close(e, PowerSeries([1/math.factorial(n) for n in range(11)]), 1e-15)

@pytest.mark.parametrize("order", [2, 6, 10])
def test_exp_log(order: int) -> None:
    """ The exponential inverts the logarithm. """
    for _ in range(5):
        a = _random_series(order)
        assert _close(ps_exp(ps_log(a)), a, 1e-11)

def test_log_geometric() -> None:
    """ :math:`\\log(1-t) = -\\sum_{n \\geq 1} t^n/n`. """
    res = ps_log(PowerSeries([1, -1, 0, 0, 0, 0]))
    assert _close(res, PowerSeries([0]+[-1/n for n in range(1, 6)]), 1e-15)

@pytest.mark.parametrize("gamma", [-1, 0.5, -2.5, 1.5+0.5j])
def test_pow_binomial(gamma: complex) -> None:
    """ :math:`(1-t)^\\gamma` has coefficients :math:`(-\\gamma)_n/n!`. """
    res = ps_pow(PowerSeries([1, -1, 0, 0, 0, 0, 0]), gamma)
    expected = PowerSeries([pochhammer(-gamma, n)/math.factorial(n) for n in range(7)])
    assert _close(res, expected), f"Error at gamma = {gamma}"

def test_pow_integer() -> None:
    """ Small non-negative integer powers are repeated products. """
    a = PowerSeries([2, 1, 0, 0])
    assert ps_pow(a, 3) == a*a*a
    assert ps_pow(a, 0) == PowerSeries.constant(1, 3)

def test_pow_square_root() -> None:
    """ The square of the square root is the series itself. """
    a = _random_series(7)
    root = ps_pow(a, 0.5)
    assert _close(root*root, a)

zero_constant = [
    (ps_log, "Must not take the logarithm of a series with zero constant term."),
    (lambda a: ps_pow(a, 0.5), "Must not take fractional powers of a series with zero constant term."),
]

@pytest.mark.parametrize("op, reason", zero_constant)
def test_zero_constant_failure(op, reason: str) -> None: # type: ignore[no-untyped-def]
    """ Logarithms and powers require a non-zero constant term. """
    try:
        op(PowerSeries([0, 1, 2]))
        assert False, reason
    except DomainError:
        pass

def test_formal_flag() -> None:
    """ Formal series propagate the flag and only evaluate at zero. """
    f = ps_hyp(math.factorial, 5, formal=True)
    assert f.formal
    assert (f*PowerSeries.geometric(1, 5)).formal
    assert f.evaluate(0) == 1
    with pytest.raises(DomainError):
        f.evaluate(0.1)

def test_evaluate() -> None:
    """ Horner evaluation of a truncated series. """
    assert abs(PowerSeries([1, 2, 3]).evaluate(0.1)-1.23) <= 1e-15

def test_series_coefficients() -> None:
    """ The coefficients of a hypergeometric series in ``t`` are its terms. """
    s = ps_series(SeriesSpec.F([-2, 1], [1], 0.5), 4)
    assert _close(s, PowerSeries([1, -1, 0.25, 0, 0]))
    assert abs(s.evaluate(1)-0.25) <= 1e-15

def test_polynomial() -> None:
    """ Polynomials are padded or truncated to the given order. """
    assert ps_polynomial([1, -2, 1], 3) == PowerSeries([1, -2, 1, 0])
    assert ps_polynomial([1, -2, 1], 1) == PowerSeries([1, -2])

def test_derivative() -> None:
    """ The formal derivative. """
    assert PowerSeries([1, 2, 3]).derivative() == PowerSeries([2, 6])
    assert PowerSeries([5]).derivative() == PowerSeries([0])
