""" Tests for the `askeyscheme.hyper` module. """

import math

import pytest
from askeyscheme.qcore import INFINITY, DomainError, PrecisionError, pochhammer, qpochhammer
from askeyscheme.hyper import (SeriesSpec, eval_series, eval_partial, fseries, phiseries, check_identity,
                               check_confluence, sample_checks, residual, is_monotone, identities, precision,
                               DivergentError, IdentityKeyError, IdentityValueError)

def test_terminating_series() -> None:
    """ A terminating series is summed exactly up to its termination index. """
    spec = SeriesSpec.F([-2, 1], [1], 0.5)
    assert spec.termination_index() == 2
    assert abs(eval_series(spec)-0.25) <= 1e-15

def test_binomial_series() -> None:
    """ The binomial series :math:`{}_1F_0(1/2;;1/2) = \\sqrt{2}`. """
    assert abs(eval_series(SeriesSpec.F([0.5], [], 0.5))-math.sqrt(2)) <= 1e-14

@pytest.mark.parametrize("n", range(0, 6))
def test_chu_vandermonde(n: int) -> None:
    """ Check :math:`{}_2F_1(-n,b;c;1) = (c-b)_n/(c)_n` directly on the series. """
    b, c = 0.4, 2.3
    lhs = fseries([-n, b], [c], 1)
    rhs = pochhammer(c-b, n)/pochhammer(c, n)
    assert abs(lhs-rhs) <= 1e-13, f"Error at n = {n}"

@pytest.mark.parametrize("z", [0.4, -0.3+0.2j, 0.85])
def test_q_binomial_theorem(z: complex) -> None:
    """ Check :math:`{}_1\\phi_0(a;-;q,z) = (az;q)_\\infty/(z;q)_\\infty` directly on the series. """
    a, q = 0.3, 0.5
    lhs = phiseries([a], [], q, z)
    rhs = qpochhammer(a*z, q, INFINITY)/qpochhammer(z, q, INFINITY)
    assert abs(lhs-rhs) <= 1e-12, f"Error at z = {z}"

def test_exponential_series() -> None:
    """ The series :math:`{}_0F_0(;;z)` is the exponential. """
    assert abs(fseries([], [], 1.5)-math.exp(1.5)) <= 1e-13

def test_partial_sum() -> None:
    """ A partial sum of the geometric series. """
    assert abs(eval_partial(SeriesSpec.F([1], [], 0.5, 3))-1.875) <= 1e-15
    with pytest.raises(ValueError):
        eval_partial(SeriesSpec.F([1], [], 0.5))

divergent_series = [
    (SeriesSpec.F([1, 1], [], 0.5), "Non-terminating 2F0 diverges."),
    (SeriesSpec.F([0.5, 0.5], [1.5], 1.2), "Argument outside the unit disc."),
    (SeriesSpec.F([1, 1], [1], 1), "Non-convergent on the unit circle."),
]

@pytest.mark.parametrize("spec, reason", divergent_series)
def test_divergent_series(spec: SeriesSpec, reason: str) -> None:
    """ Non-terminating series outside their radius of convergence are rejected. """
    try:
        eval_series(spec)
        assert False, reason
    except DivergentError:
        pass

def test_unit_circle_convergence() -> None:
    """ Gauss's sum: :math:`{}_2F_1(a,b;c;1)` converges when :math:`\\Re(c-a-b) > 0`. """
    a, b, c = 0.2, 0.3, 2.5
    value = eval_series(SeriesSpec.F([a, b], [c], 1), tol=1e-13)
    expected = math.gamma(c)*math.gamma(c-a-b)/(math.gamma(c-a)*math.gamma(c-b))
    assert abs(value-expected) <= 1e-6

def test_residual() -> None:
    """ The relative residual. """
    assert residual(2, 2) == 0.0
    assert residual(0, 0.5) == 0.5
    assert residual(200, 202) == pytest.approx(2/202)

def test_is_monotone() -> None:
    """ Monotonicity along a schedule, with slack. """
    assert is_monotone([1e-1, 1e-2, 1.05e-2, 1e-4])
    assert not is_monotone([1e-1, 1e-2, 1e-1])
    assert is_monotone([1e-2, 1e-15, 1e-16, 2e-15])

@pytest.mark.parametrize("name", [identity.name for identity in identities.table()])
def test_catalog_defaults(name: str) -> None:
    """ Every catalog identity holds at its default parameters. """
    report = check_identity(name)
    assert report.passed, f"Identity {name} has residual {report.residual:.3e}"

@pytest.mark.parametrize("name", ["vandermonde", "q_binomial_theorem", "newton_binomium"])
def test_sampled_checks(name: str) -> None:
    """ Sampled checks are reproducible and pass. """
    first = sample_checks(name, 5, 42)
    second = sample_checks(name, 5, 42)
    assert all(r.passed for r in first)
    assert [r.residual for r in first] == [r.residual for r in second]

def test_spot_identities() -> None:
    """ Identities at explicit parameter records. """
    assert check_identity("q_binomial_theorem", {"a": 0.3, "z": 0.4, "q": 0.5}).passed
    assert check_identity("vandermonde", {"n": 3, "b": 0.5, "c": 2}).passed
    assert check_identity("newton_binomium", {"n": 2, "z": 0.7, "q": 0.5}).passed

def test_confluence() -> None:
    """ A confluence identity records non-increasing errors along its schedule. """
    report = check_confluence("confluence_numerator")
    assert report.passed
    assert len(report.errors) >= 2
    assert is_monotone(report.errors)
    with pytest.raises(ValueError):
        check_confluence("confluence_numerator", schedule=[1e2, 1e1])

def test_catalog_failures() -> None:
    """ Unknown identities, duplicate registrations and domain violations. """
    with pytest.raises(KeyError):
        check_identity("no_such_identity")
    assert issubclass(IdentityKeyError, KeyError)
    existing = identities.get("vandermonde")
    with pytest.raises(IdentityValueError):
        identities.register(existing)
    assert not identities.exists("no_such_identity")

def test_thresholds() -> None:
    """ Default thresholds by exactness class. """
    assert identities.THRESHOLDS["TERMINATING_EXACT"] == 1e-12
    assert identities.THRESHOLDS["ANALYTIC_TOL"] == 1e-9
    assert identities.THRESHOLDS["LIMIT_SCHEDULE"] == 1e-6

def test_domain_violation() -> None:
    """ A parameter record outside the identity domain raises :class:`DomainError`. """
    with pytest.raises(DomainError):
        check_identity("q_binomial_theorem", {"a": 0.3, "z": 1.5, "q": 0.5})

cancelling_series = [
    (SeriesSpec.F([], [], -40.0), "Must detect cancellation in exp(-40)."),
    (SeriesSpec.F([1], [2], -30.0), "Must detect cancellation in 1F1(1;2;-30)."),
]

@pytest.mark.parametrize("spec, reason", cancelling_series)
def test_cancellation(spec: SeriesSpec, reason: str) -> None:
    """ Sums whose rounding error exceeds the precision bound raise :class:`PrecisionError`. """
    try:
        eval_series(spec)
        assert False, reason
    except PrecisionError:
        pass

def test_precision_context() -> None:
    """ The precision bound can be set for a block, and is restored afterwards. """
    spec = SeriesSpec.F([1], [2], -30.0)
    exact = (1-math.exp(-30))/30
    with precision(1e-3):
        assert abs(eval_series(spec)-exact) <= 1e-3*exact
    with pytest.raises(PrecisionError):
        eval_series(spec)
    assert abs(eval_series(spec, precision_tol=1e-3)-exact) <= 1e-3*exact
    assert issubclass(PrecisionError, ArithmeticError)

stable_draw_identities = [
    "jackson", "jackson_inverse", "phi32_zero_denominator", "phi32_zero_denominator_second",
    "phi32_double_zero", "phi32_double_zero_second", "q_vandermonde", "q_vandermonde_unit", "singh",
    "saalschutz", "q_saalschutz", "sears_second", "whipple",
]

@pytest.mark.parametrize("name", stable_draw_identities)
def test_sampled_checks_stable(name: str) -> None:
    """ Draws on which the series sides cancel badly are redrawn, so seeded draws pass at full threshold. """
    reports = sample_checks(name, 50, 42)
    failed = [r for r in reports if not r.passed]
    assert not failed, f"Identity {name} fails with residuals {[r.residual for r in failed]}"

def test_missing_parameter() -> None:
    """ A record missing a parameter of the identity raises :class:`IdentityValueError`. """
    with pytest.raises(IdentityValueError):
        check_identity("saalschutz", {"n": 3})
    assert issubclass(IdentityValueError, ValueError)

def test_negative_count() -> None:
    """ Degrees must be non-negative integers. """
    with pytest.raises(DomainError):
        check_identity("vandermonde", {"n": -3, "b": 0.5, "c": 2})
    with pytest.raises(DomainError):
        check_identity("vandermonde", {"n": 2.5, "b": 0.5, "c": 2})
