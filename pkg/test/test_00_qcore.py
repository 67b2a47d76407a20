""" Tests for the `askeyscheme.qcore` module. """

import cmath
import math

import pytest
from askeyscheme import qcore
from askeyscheme.qcore import (INFINITY, QBase, pochhammer, qpochhammer, qpochhammer_inf, qpochhammer_ratio,
                               qpochhammer_complex, qnumber, gamma, qgamma, qbinomial, qbessel, qexp_small, qexp_big,
                               qtrig, qderivative, jackson_integral, jackson_integral_between, DomainError,
                               PoleError, NumericOverflowError)

def test_pochhammer_values() -> None:
    """ Spot values of the shifted factorial. """
    assert pochhammer(2, 3) == 24
    assert pochhammer(0.5, 0) == 1
    assert pochhammer(-3, 4) == 0, "Negative integer parameter must terminate the product."

def test_pochhammer_negative_count() -> None:
    """ The shifted factorial is defined for non-negative counts only. """
    with pytest.raises(ValueError):
        pochhammer(1.5, -1)

qpochhammer_values = [
    (0.5, 0.5, 3, 0.328125),
    (0.3, 0.5, -1, 2.5),
    (0.7, 0.3, 0, 1.0),
]

@pytest.mark.parametrize("a, q, k, expected", qpochhammer_values)
def test_qpochhammer_values(a: float, q: float, k: int, expected: float) -> None:
    """ Spot values of the q-shifted factorial, including a negative count. """
    assert abs(qpochhammer(a, q, k)-expected) <= 1e-14

def test_qpochhammer_infinite_at_zero() -> None:
    """ The infinite product with parameter zero is exactly one. """
    assert qpochhammer(0, 0.5, INFINITY) == 1

@pytest.mark.parametrize("k", range(0, 8))
def test_qpochhammer_split(k: int) -> None:
    """ Check :math:`(a;q)_\\infty = (a;q)_k (aq^k;q)_\\infty`. """
    a, q = 0.35+0.2j, 0.6
    lhs = qpochhammer(a, q, INFINITY)
    rhs = qpochhammer(a, q, k)*qpochhammer(a*q**k, q, INFINITY)
    assert abs(lhs-rhs) <= 1e-13, f"Error at k = {k}"

@pytest.mark.parametrize("k", range(1, 6))
def test_qpochhammer_negative_reflection(k: int) -> None:
    """ Check :math:`(a;q)_{-k}\\,(aq^{-k};q)_k = 1`. """
    a, q = 0.45, 0.5
    assert abs(qpochhammer(a, q, -k)*qpochhammer(a*q**(-k), q, k)-1) <= 1e-12, f"Error at k = {k}"

def test_qpochhammer_negative_pole() -> None:
    """ A vanishing denominator factor for a negative count is a pole. """
    with pytest.raises(PoleError):
        qpochhammer(0.25, 0.5, -2)

def test_qpochhammer_inf_tail_bound() -> None:
    """ The reported tail bound is respected by the truncated infinite product. """
    res = qpochhammer_inf(0.4, 0.5)
    exact = qpochhammer(0.4, 0.5, res.terms+200)
    assert abs(res.value-exact) <= max(2*res.bound*abs(exact), 1e-15)

def test_qnumber() -> None:
    """ The q-number :math:`[2]_q = 1+q`. """
    assert abs(qnumber(2, 0.5)-1.5) <= 1e-15

def test_qbinomial() -> None:
    """ Spot value and symmetry of the q-binomial coefficient. """
    assert abs(qbinomial(4, 2, 0.5)-2.1875) <= 1e-14
    for k in range(0, 7):
        assert abs(qbinomial(6, k, 0.3)-qbinomial(6, 6-k, 0.3)) <= 1e-13, f"Error at k = {k}"

def test_gamma_values() -> None:
    """ Spot values of the Gamma function. """
    assert abs(gamma(5)-24) <= 1e-12
    assert abs(gamma(0.5)-math.sqrt(math.pi)) <= 1e-14

@pytest.mark.parametrize("z", [0.3+0.2j, 0.7, -1.4+0.5j, 2.5-1j])
def test_gamma_reflection(z: complex) -> None:
    """ Check the reflection formula :math:`\\Gamma(z)\\Gamma(1-z) = \\pi/\\sin(\\pi z)`. """
    lhs = gamma(z)*gamma(1-z)
    rhs = math.pi/cmath.sin(math.pi*z)
    assert abs(lhs-rhs) <= 1e-12*abs(rhs), f"Error at z = {z}"

@pytest.mark.parametrize("z", [0, -1, -4])
def test_gamma_poles(z: int) -> None:
    """ The Gamma function has poles at the non-positive integers. """
    with pytest.raises(PoleError):
        gamma(z)

def test_qgamma_values() -> None:
    """ Spot values of the q-Gamma function. """
    assert qgamma(1, 0.5) == 1.0
    assert abs(qgamma(3, 0.5)-1.5) <= 1e-14

@pytest.mark.parametrize("x", [0.3, 1.7, 2.25])
def test_qgamma_functional_equation(x: float) -> None:
    """ Check :math:`\\Gamma_q(x+1) = [x]_q\\,\\Gamma_q(x)`. """
    q = 0.6
    lhs = qgamma(x+1, q)
    rhs = qnumber(x, q)*qgamma(x, q)
    assert abs(lhs-rhs) <= 1e-12*abs(rhs), f"Error at x = {x}"

def test_qgamma_pole() -> None:
    """ The q-Gamma function has poles at the non-positive integers. """
    with pytest.raises(PoleError):
        qgamma(-2, 0.5)

@pytest.mark.parametrize("q", [0.0, 1.0, -0.5, 1.5])
def test_qbase_domain(q: float) -> None:
    """ A base must satisfy :math:`0 < q < 1`. """
    with pytest.raises(DomainError):
        QBase(q)

def test_qbase_power() -> None:
    """ Real powers of the base. """
    assert abs(QBase(0.25).power(0.5)-0.5) <= 1e-15

@pytest.mark.parametrize("z", [0.5, -0.3+0.4j, 0.9j])
def test_qexp_inverse(z: complex) -> None:
    """ Check :math:`e_q(z)E_q(-z) = 1`. """
    q = 0.5
    assert abs(qexp_small(z, q)*qexp_big(-z, q)-1) <= 1e-13, f"Error at z = {z}"

def test_qexp_small_domain() -> None:
    """ The small q-exponential requires :math:`|z| < 1`. """
    with pytest.raises(DomainError):
        qexp_small(1.2, 0.5)

@pytest.mark.parametrize("z", [0.2, 0.55, -0.8])
def test_qtrig_pythagoras(z: float) -> None:
    """ Check :math:`\\sin_q(z)\\mathrm{Sin}_q(z)+\\cos_q(z)\\mathrm{Cos}_q(z) = 1`. """
    q = 0.4
    lhs = qtrig("sin_q", z, q)*qtrig("Sin_q", z, q)+qtrig("cos_q", z, q)*qtrig("Cos_q", z, q)
    assert abs(lhs-1) <= 1e-13, f"Error at z = {z}"

def test_qtrig_failures() -> None:
    """ Unknown kinds and out-of-disc arguments are rejected. """
    with pytest.raises(ValueError):
        qtrig("tan_q", 0.1, 0.5) # type: ignore[arg-type]
    with pytest.raises(DomainError):
        qtrig("cos_q", 1.5, 0.5)

def test_qderivative() -> None:
    """ The q-derivative of :math:`z^2` is :math:`(1+q)z`. """
    assert abs(qderivative(lambda z: z**2, 1, 0.5)-1.5) <= 1e-14
    assert abs(qderivative(lambda z: z**3, 0.7, 0.5, order=3)-qnumber(3, 0.5)*qnumber(2, 0.5)) <= 1e-12

def test_qderivative_at_zero() -> None:
    """ At zero the derivative must be supplied. """
    with pytest.raises(DomainError):
        qderivative(lambda z: z, 0, 0.5)
    assert qderivative(lambda z: z, 0, 0.5, derivative_at_zero=1) == 1

def test_jackson_integral() -> None:
    """ The q-integral of :math:`t` on :math:`[0,1]` is :math:`1/(1+q)`. """
    res = jackson_integral(lambda t: t, 1, 0.5)
    assert abs(res.value-2/3) <= 1e-14

def test_jackson_integral_inverts_qderivative() -> None:
    """ The q-integral of a q-derivative recovers the difference of endpoint values. """
    q = 0.5
    def f(t: complex) -> complex:
        return t**3-2*t
    val = jackson_integral_between(lambda t: qderivative(f, t, q), 0.3, 0.9, q)
    assert abs(val-(f(0.9)-f(0.3))) <= 1e-12

def test_public_names() -> None:
    """ The error classes are exposed at package level. """
    assert issubclass(qcore.PoleError, ZeroDivisionError)
    assert issubclass(qcore.DomainError, ValueError)
    assert issubclass(qcore.PoleError, qcore.NumericError)

def test_qpochhammer_ratio() -> None:
    """ The ratio of infinite products agrees with the quotient of the separate products. """
    q = 0.45
    nums, dens = [0.3+0.1j, -0.8], [0.6, 1.7]
    expected = (qpochhammer(nums[0], q, INFINITY)*qpochhammer(nums[1], q, INFINITY)
                / (qpochhammer(dens[0], q, INFINITY)*qpochhammer(dens[1], q, INFINITY)))
    assert abs(qpochhammer_ratio(nums, dens, q)-expected) <= 1e-13*abs(expected)

def test_qpochhammer_ratio_zeros() -> None:
    """ A vanishing denominator factor is a pole, a vanishing numerator factor gives zero. """
    with pytest.raises(PoleError):
        qpochhammer_ratio([0.3], [4.0], 0.5)
    assert qpochhammer_ratio([4.0], [0.3], 0.5) == 0

def test_qpochhammer_ratio_near_one() -> None:
    """ The ratio stays finite where both products underflow. """
    q = 1-2.0**-12
    assert qpochhammer(q, q, INFINITY) == 0, "The separate product underflows at this base."
    # (q;q)_inf/(q^2;q)_inf = 1-q
    assert abs(qpochhammer_ratio([q], [q*q], q)-(1-q)) <= 1e-9*(1-q)

@pytest.mark.parametrize("x", [0.5, 1.5, 2.5])
def test_qgamma_classical_limit(x: float) -> None:
    """ The q-Gamma function tends to the Gamma function along :math:`q = 1-2^{-k}`, with decreasing error. """
    errors = [abs(qgamma(x, 1-2.0**-k)-gamma(x).real) for k in range(4, 13)]
    assert all(e1 < e0 for e0, e1 in zip(errors, errors[1:])), f"Errors must decrease, found {errors}"
    assert errors[-1] <= 1e-3

def test_qgamma_reflection_near_one() -> None:
    """ Non-integer arguments below zero, close to :math:`q = 1`. """
    q = 1-2.0**-10
    expected = gamma(-0.5).real
    assert abs(qgamma(-0.5, q)-expected) <= 1e-2*abs(expected)

def test_qbinomial_near_one() -> None:
    """ q-Binomial coefficients tend to binomial coefficients without underflow. """
    q = 1-2.0**-12
    assert abs(qbinomial(200, 3, q)-math.comb(200, 3)) <= 1e-1*math.comb(200, 3)
    expected = gamma(4.5)/(gamma(2.25)*gamma(3.25))
    assert abs(qbinomial(3.5, 1.25, q)-expected) <= 1e-2*abs(expected)

def test_qpochhammer_complex_near_one() -> None:
    """ Complex-order q-shifted factorials with a base close to one. """
    q = 1-2.0**-10
    assert abs(qpochhammer_complex(q, q, 2)-(1-q)*(1-q*q)) <= 1e-9*(1-q)**2

def test_qbessel_prefactor_near_one() -> None:
    """ The q-Bessel prefactor is a ratio of products, finite as :math:`q \\to 1`. """
    q = 1-2.0**-11
    value = qbessel(2, 0.5, (1-q)*0.8, q)
    assert cmath.isfinite(value) and value != 0

def test_gamma_overflow() -> None:
    """ Values beyond binary64 range raise a numeric overflow error. """
    with pytest.raises(NumericOverflowError):
        gamma(172.5)
    with pytest.raises(NumericOverflowError):
        gamma(172)
    assert abs(gamma(171.5)/gamma(170.5)-170.5) <= 1e-10*170.5, "Large finite values must not overflow."
    assert gamma(-180.5) == 0

def test_jackson_integral_zero_integrand() -> None:
    """ An integrand vanishing on the lattice ends both directions of the sum. """
    res = jackson_integral(lambda t: 0, INFINITY, 0.5)
    assert res.value == 0
    assert res.upper_index == 2 and res.lower_index == -3

def test_jackson_integral_absolute_floor() -> None:
    """ Terms below the absolute tolerance end the sum while the running total stays small. """
    q = 0.5
    res = jackson_integral(lambda t: 1e-30*t, 1, q, abs_tol=1e-20)
    assert res.upper_index == 2
    assert abs(res.value) <= 1e-29
