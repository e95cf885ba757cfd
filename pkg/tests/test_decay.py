import math
from fractions import Fraction

import numpy as np
import pytest

from app.algebra.phase import HomogeneousPhase
from app.errors import OutOfRange
from app.factorization.hessian import analyze_hessian
from app.operators.decay import decay_fit, dyadic_ladder, imaginary_sweep, log_log_fit, theory_slope


@pytest.fixture
def phase():
    return HomogeneousPhase.parse("x^3*y + x*y^3")


def test_dyadic_ladder():
    assert dyadic_ladder(2, 5) == [4.0, 8.0, 16.0, 32.0]
    three = dyadic_ladder(2, 6, steps=3)
    assert three[0] == pytest.approx(4.0)
    assert three[1] == pytest.approx(16.0)
    assert three[2] == pytest.approx(64.0)
    with pytest.raises(OutOfRange):
        dyadic_ladder(5, 5)


def test_log_log_fit_recovers_a_power_law():
    xs = [2.0 ** j for j in range(6)]
    slope, intercept, stderr = log_log_fit(xs, [3 * x ** -0.5 for x in xs])
    assert slope == pytest.approx(-0.5)
    assert intercept == pytest.approx(math.log(3))
    assert stderr < 1e-12


def test_theory_slope_of_the_damped_family(phase):
    damping = analyze_hessian(phase)["damping"]
    assert theory_slope(phase, 2, damping) == Fraction(-1, 2)


def test_decay_fit_validation(phase):
    with pytest.raises(OutOfRange):
        decay_fit(phase, 2, [1, 2, 4, 8])
    with pytest.raises(OutOfRange):
        decay_fit(phase, 2, [1, 2, 4, 8, 8])
    with pytest.raises(OutOfRange):
        decay_fit(phase, 2, [1, 2, 4, 8, 16], estimator="frobenius")
    with pytest.raises(OutOfRange):
        decay_fit(phase, "3", [1, 2, 4, 8, 16])


def test_short_ladder_report(phase):
    report = decay_fit(phase, 2, [1, 2, 4, 8, 16], workers=1)
    assert report.p == "2"
    assert report.estimator == "singular_value"
    assert len(report.norms) == 5
    assert all(norm > 0 for norm in report.norms)
    assert all(report.converged)
    assert report.resolutions[0] == [64, 64]
    assert report.damping is None


def test_trial_estimator_accepts_other_exponents(phase):
    report = decay_fit(phase, "3", [1, 2, 4, 8, 16], estimator="trial_lower_bound", workers=1)
    assert report.p == "3"
    assert report.estimator == "trial_lower_bound"
    assert np.all(np.isfinite(report.norms))


def test_imaginary_sweep_is_normalized_at_zero(phase):
    damping = analyze_hessian(phase)["damping"]
    report = imaginary_sweep(phase, damping, 8.0, [1.0, -1.0], workers=1)
    assert report.z_im == [-1.0, 0.0, 1.0]
    assert report.ratios[1] == pytest.approx(1.0)
    assert report.max_ratio >= 1.0


@pytest.mark.slow
def test_damped_ladder_follows_the_damped_rate(phase):
    damping = analyze_hessian(phase)["damping"]
    report = decay_fit(phase, 2, dyadic_ladder(5, 11), damping=damping)
    assert abs(report.slope - report.theory_slope_value) < 0.1
