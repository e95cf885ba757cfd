import math

import numpy as np
import pytest
from scipy import integrate

from app.errors import BudgetExceeded, OutOfRange
from app.quadrature.cutoffs import bump, bump_integral
from app.quadrature.oscillatory import initial_panels, oscillatory_integral, vdc_check
from app.tools.experiments.vdc_tool import run_vdc, vdc_reference


def ones(t):
    return np.ones_like(t)


def test_zero_frequency_integrates_the_amplitude():
    result = oscillatory_integral(lambda t: t, bump, 0.0, (-1.0, 1.0), tol=1e-10)
    assert result.value == pytest.approx(bump_integral(), abs=1e-8)


def test_linear_phase_closed_form():
    result = oscillatory_integral(lambda t: t, ones, 10.0, (0.0, 1.0), phase_derivative=ones)
    exact = (np.exp(10j) - 1) / 10j
    assert abs(result.value - exact) < 1e-9
    assert abs(result.value) == pytest.approx(abs(np.exp(10j) - 1) / 10)


def test_against_adaptive_quadrature():
    lam = 50.0

    def amplitude(t):
        return bump(t, 0.5, 0.5)

    real, _ = integrate.quad(lambda t: math.cos(lam * t * t) * amplitude(t), 0, 1, limit=400, epsabs=1e-12)
    imag, _ = integrate.quad(lambda t: math.sin(lam * t * t) * amplitude(t), 0, 1, limit=400, epsabs=1e-12)
    result = oscillatory_integral(lambda t: t * t, amplitude, lam, (0.0, 1.0), tol=1e-10)
    assert abs(result.value - complex(real, imag)) < 1e-8


def test_initial_panels_follow_the_oscillation_count():
    assert initial_panels(0.0, 1.0, (0.0, 1.0)) == 8
    assert initial_panels(2 * math.pi * 10, 1.0, (0.0, 1.0)) == 80


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        oscillatory_integral(lambda t: t, ones, 1.0, (0.0, 1.0), eval_cap=64)


def test_first_order_bound():
    report = vdc_check(lambda t: t, 1, [2.0 ** j for j in range(1, 9)], ones, phase_derivative=ones)
    assert report.sup_scaled <= 2 + 1e-9
    assert report.reference_error is None


def test_ladder_validation():
    with pytest.raises(OutOfRange):
        vdc_check(lambda t: t, 1, [4.0, 2.0], ones)
    with pytest.raises(OutOfRange):
        vdc_check(lambda t: t, 0, [2.0, 4.0], ones)
    with pytest.raises(OutOfRange, match="empty"):
        vdc_check(lambda t: t, 1, [], ones)
    with pytest.raises(OutOfRange):
        run_vdc(1, [2.0, 4.0])


def test_stationary_phase_limit():
    report = run_vdc(2, [2.0 ** j for j in range(4, 11)])
    assert report.reference == pytest.approx(math.sqrt(math.pi) / 2)
    assert report.reference_error < 1e-3
    assert report.terminal_variation < 0.02


@pytest.mark.slow
def test_stationary_phase_limit_long_ladder():
    for k in (2, 3):
        report = run_vdc(k, [2.0 ** j for j in range(4, 17)])
        assert report.reference == pytest.approx(vdc_reference(k))
        assert report.reference_error < 1e-3
        assert report.terminal_variation < 0.02
