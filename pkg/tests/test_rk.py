import numpy as np
import pytest

from roadwheel import ToleranceNotMet
from roadwheel import rk


def test_fifth_order_convergence():
    # x' = x, x(0) = 1, one step of size h; local error ~ h^6
    errs = []
    for h in (0.2, 0.1, 0.05):
        x, _ = rk.step(lambda t, x: x, 0.0, np.array(1.0), h)
        errs.append(abs(x - np.exp(h)))
    rates = np.log2(np.array(errs[:-1]) / np.array(errs[1:]))
    assert np.all(rates > 5.5)


def test_embedded_estimate_tracks_true_error():
    h = 0.1
    x, err = rk.step(lambda t, x: np.cos(t) * x, 0.0, np.array(1.0), h)
    true = abs(x - np.exp(np.sin(h)))
    assert true < abs(err) < 1e3 * true + 1e-16


def test_integrate_hits_stops_and_end():
    ts, xs = rk.integrate(lambda t, x: np.exp(t), 0.0, 0.0, 2.0, 1e-12, 1e-12, 0.05,
                          stops=(0.5, np.pi / 2))
    assert ts[-1] == 2.0
    assert 0.5 in ts and np.pi / 2 in ts
    assert np.max(np.diff(ts)) <= 0.05 + 1e-15
    assert abs(xs[-1] - np.expm1(2.0)) < 1e-10


def test_integrate_backwards():
    ts, xs = rk.integrate(lambda t, x: 1 / np.cos(t), 0.0, 0.0, -1.0, 1e-12, 1e-12, 0.01)
    assert ts[-1] == -1.0
    assert xs[-1] == pytest.approx(-np.arcsinh(np.tan(1.0)), abs=1e-10)


def test_blowup_reports_tolerance_failure():
    # x' = x^2 from x(0) = 1 explodes at t = 1
    with pytest.raises(ToleranceNotMet):
        rk.integrate(lambda t, x: x * x, 0.0, 1.0, 2.0, 1e-10, 1e-10, 0.1, max_steps=20_000)


def test_simpson_exact_on_cubics_and_periodic():
    ts, xs = rk.fixed_quadrature(lambda t: 3 * t ** 2 + 1, 0.0, 2.0, 0.1)
    assert xs[-1] == pytest.approx(10.0, abs=1e-13)
    ts, xs = rk.fixed_quadrature(lambda t: 3 + np.cos(27 * t), 0.0, 2 * np.pi, 0.01)
    assert xs[-1] == pytest.approx(6 * np.pi, abs=1e-12)
