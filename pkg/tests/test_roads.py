import numpy as np
import pytest

from roadwheel import (
    OutOfRange,
    RangeExceeded,
    RoadAboveAxis,
    RoadFunction,
    WheelSpec,
    arc_length_road,
    arc_length_wheel,
    make_wheel,
    road_height,
    road_slope,
    solve_forward,
    solve_inverse,
    theta_of_x,
)
from roadwheel.wheels import ANALYTIC


def test_circle_road_is_flat_line():
    road = solve_forward(make_wheel("unit_circle"), (-3.0, 3.0))
    t = np.linspace(-3, 3, 301)
    assert np.allclose(road.x_at(t), t, atol=1e-12)
    assert np.all(road.y_at(t) == -1.0)


def test_anchor_and_monotone(secant_scene):
    road = secant_scene.road
    assert road.x_at(0.0) == 0.0
    assert np.all(np.diff(road.xs) > 0)


def test_dense_queries_between_nodes(secant_scene):
    # points far from any node still carry integrator accuracy
    road = secant_scene.road
    mids = 0.5 * (road.thetas[:-1] + road.thetas[1:])
    err = np.abs(road.x_at(mids) - np.arcsinh(np.tan(mids)))
    assert err.max() < 1e-11


def test_square_breakpoints_are_nodes(square_scene):
    for b in square_scene.wheel.breakpoints:
        if square_scene.range[0] <= b <= square_scene.range[1]:
            assert b in square_scene.road.thetas


def test_square_road_repeats_catenary_arches(square_scene):
    road = square_scene.road
    w = 2 * np.arcsinh(1.0)
    t = np.linspace(np.pi / 4 + 0.01, 3 * np.pi / 4 - 0.01, 50)
    x = road.x_at(t)
    assert np.allclose(road.y_at(t), -np.cosh(x - w), atol=1e-10)


def test_round_trip_theta_of_x(secant_scene):
    road = secant_scene.road
    back = theta_of_x(road, road.xs)
    assert np.max(np.abs(back - road.thetas)) <= 1e-9


def test_theta_rate_is_reciprocal_radius(secant_scene):
    road, wheel = secant_scene.road, secant_scene.wheel
    x = np.linspace(-1.2, 1.2, 41)
    h = 1e-5
    fd = (theta_of_x(road, x + h) - theta_of_x(road, x - h)) / (2 * h)
    assert np.max(np.abs(fd - 1 / wheel.radius(theta_of_x(road, x)))) < 1e-6


def test_height_and_slope_on_catenary(secant_scene):
    x = np.linspace(-1.5, 1.5, 31)
    assert np.allclose(road_height(secant_scene.road, x), -np.cosh(x), atol=1e-10)
    assert np.allclose(road_slope(secant_scene.road, x), -np.sinh(x), atol=1e-9)


def test_theta_of_x_outside_range(secant_scene):
    with pytest.raises(OutOfRange):
        theta_of_x(secant_scene.road, 10.0)


def test_scaling_wheel_scales_road():
    # r -> c r makes the road (c x, c y) at the same angle
    c = 2.5
    base = make_wheel("log_spiral", k=0.5)
    big = WheelSpec(radius=lambda t: c * np.exp(0.5 * t), domain=base.domain,
                    smoothness=ANALYTIC, radius_rate=lambda t: 0.5 * c * np.exp(0.5 * t))
    a = solve_forward(base, (-1.0, 1.0))
    b = solve_forward(big, (-1.0, 1.0))
    t = np.linspace(-1, 1, 21)
    assert np.allclose(b.x_at(t), c * a.x_at(t), atol=1e-10)
    assert np.allclose(b.y_at(t), c * a.y_at(t), atol=1e-12)


def test_inverse_of_straight_slope_is_log_spiral():
    # road y = -x/2 - 1 is the log-spiral road with k = 1/2
    f = RoadFunction(lambda x: -x / 2 - 1, (-1.9, 100.0), slope=lambda x: -0.5 + 0 * x)
    wheel, _ = solve_inverse(f, (-1.0, 2.0))
    t = np.linspace(-1, 2, 61)
    assert np.max(np.abs(wheel.radius(t) - np.exp(t / 2))) < 1e-9


def test_inverse_semicircle_gives_tusi_wheel():
    f = RoadFunction(lambda x: -np.sqrt(4 - x * x), (-1.999, 1.999))
    wheel, _ = solve_inverse(f, (-1.2, 1.2))
    t = np.linspace(-1.2, 1.2, 49)
    assert np.max(np.abs(wheel.radius(t) - 2 * np.cos(t))) < 1e-8


def test_inverse_reports_how_far_it_got():
    f = RoadFunction(lambda x: -np.cosh(x), (-1.0, 1.0))
    with pytest.raises(RangeExceeded) as info:
        solve_inverse(f, (0.0, 1.2))
    # x(theta) = asinh(tan theta) reaches 1 at theta = atan(sinh 1)
    assert info.value.theta_reached == pytest.approx(np.arctan(np.sinh(1.0)), abs=0.02)


def test_road_above_axis_rejected():
    with pytest.raises(RoadAboveAxis):
        RoadFunction(lambda x: x, (-1.0, 1.0))


def test_arc_lengths_agree_on_parabola():
    wheel = make_wheel("focal_parabola", d=0.5)
    road = solve_forward(wheel, (-1.5, 1.5))
    lw = arc_length_wheel(wheel, 0.0, np.pi / 2 - 0.1)
    lr = arc_length_road(road, 0.0, np.pi / 2 - 0.1)
    assert abs(lw - lr) < 1e-8


def test_catenary_arc_length_closed_form(secant_scene):
    # arc length of y = -cosh x from 0 to x is sinh x = tan theta
    t = 1.1
    assert arc_length_road(secant_scene.road, 0.0, t) == pytest.approx(np.tan(t), abs=1e-9)


def test_monster_road_is_linearly_interpolated():
    road = solve_forward(make_wheel("weierstrass", terms=50), (0.0, 2 * np.pi))
    assert road.interp == "linear"
    assert road.y_rate(1.0) is None
    assert np.isnan(road_slope(road, 1.0))


def test_arc_length_with_end_one_ulp_past_corner():
    # a hexagon face spans [-pi/2, -pi/6]; its arc length is 2 tan(pi/6)
    wheel = make_wheel("regular_polygon", sides=6)
    a = np.nextafter(-np.pi / 2, 0.0)
    length = arc_length_wheel(wheel, -1.6336281798666923, a)
    assert np.isfinite(length)
    face = arc_length_wheel(wheel, -np.pi / 2, -np.pi / 6)
    assert face == pytest.approx(2 * np.tan(np.pi / 6), rel=1e-12)
