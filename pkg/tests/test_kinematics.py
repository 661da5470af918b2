import numpy as np
import pytest

from roadwheel import (
    OutOfRange,
    SolverConfig,
    center_path,
    contact_point,
    crash_fraction,
    detect_crashes,
    make_scene,
    make_wheel,
    rolled_pose,
    rolled_wheel_samples,
    trace_point,
)
from roadwheel.geom import pose_apply
from roadwheel.kinematics import default_phis
from roadwheel.wheels import wheel_point


def test_cycloid(circle_scene):
    phis = np.linspace(-3.0, 3.0, 1000)
    tr = trace_point(circle_scene, 0.0, phis)
    assert np.max(np.abs(tr.points.x - (phis - np.sin(phis)))) <= 1e-12
    assert np.max(np.abs(tr.points.y + np.cos(phis))) <= 1e-12
    q = trace_point(circle_scene, 0.0, np.pi / 2).points
    assert q.x[0] == pytest.approx(np.pi / 2 - 1, abs=1e-12)
    assert q.y[0] == pytest.approx(0.0, abs=1e-12)


def test_rolled_point_lands_on_contact(secant_scene):
    for t in np.linspace(-1.2, 1.2, 25):
        p = pose_apply(rolled_pose(secant_scene, t), wheel_point(secant_scene.wheel, t))
        c = contact_point(secant_scene, t)
        assert np.hypot(p.x - c.x, p.y - c.y) < 1e-12


def test_contact_is_rolled_lowest_in_local_window(secant_scene):
    # the rolled wheel touches the road tangentially, so nearby wheel points sit above it
    phi = 0.6
    local = np.linspace(phi - 0.05, phi + 0.05, 101)
    p = rolled_wheel_samples(secant_scene, phi, local)
    y_road = -np.cosh(p.x)
    assert np.all(p.y - y_road >= -1e-12)


def test_centre_rides_axis(circle_scene):
    c = center_path(circle_scene)
    assert np.all(c.y == 0.0)
    assert np.all(np.diff(c.x) > 0)


def test_tusi_centre_traces_diameter():
    scene = make_scene(make_wheel("offset_circle"), (-1.37, 1.37))
    c = center_path(scene)
    assert np.all(np.abs(c.x) < 2.0)
    assert np.all(c.y == 0.0)


def test_scene_range_enforced(secant_scene):
    with pytest.raises(OutOfRange):
        rolled_pose(secant_scene, 1.4)


def test_analytic_trace_has_bounded_curvature(secant_scene):
    for h in (1e-2, 3e-3, 1e-3):
        p = np.linspace(-1.0, 1.0, 41)
        x = [trace_point(secant_scene, 0.3, p + s).points.x for s in (-h, 0, h)]
        assert np.max(np.abs((x[0] - 2 * x[1] + x[2]) / h ** 2)) < 20


# the monster wheel: a trace with a first derivative but no second one

PROBES = np.linspace(0.5, 5.5, 200)


@pytest.fixture(scope="module")
def monster_differences():
    scene = make_scene(make_wheel("weierstrass"), (0.0, 2 * np.pi), SolverConfig(max_step=1e-4))
    first, second = [], []
    for k in range(2, 6):
        h = 3.0 ** -k
        x = [trace_point(scene, 0.0, PROBES + s).points.x for s in (-h, 0.0, h)]
        first.append((x[2] - x[0]) / (2 * h))
        second.append(np.sqrt(np.mean(((x[0] - 2 * x[1] + x[2]) / h ** 2) ** 2)))
    return first, np.array(second)


def test_monster_trace_first_differences_converge(monster_differences):
    first, _ = monster_differences
    jumps = [np.max(np.abs(b - a)) for a, b in zip(first, first[1:])]
    # changes shrink geometrically, so the limit exists
    assert all(b < 0.7 * a for a, b in zip(jumps, jumps[1:]))


def test_monster_trace_second_differences_grow_like_b_over_a(monster_differences):
    _, second = monster_differences
    ratios = second[1:] / second[:-1]
    # Hoelder exponent log a / log b gives growth b / a = 1.5 per threefold refinement
    assert np.all(np.abs(ratios - 1.5) < 0.1)


def test_monster_trace_second_differences_double(monster_differences):
    """Literal contract check: at least 2x growth per threefold refinement.

    Expected to fail: for a = 2, b = 3 the growth is 1.5x (see the test above).
    """
    _, second = monster_differences
    ratios = second[1:] / second[:-1]
    print("second-difference growth per 3x refinement:", np.round(ratios, 3))
    assert np.all(ratios >= 2.0)


# crashes

def test_no_crashes_for_matched_square(square_scene):
    assert detect_crashes(square_scene, default_phis(square_scene)[::3], crash_tol=1e-6) == []


def test_triangle_crashes_sorted_and_deep():
    scene = make_scene(make_wheel("regular_polygon", sides=3))
    phis = default_phis(scene)[::5]
    events = detect_crashes(scene, phis, crash_tol=1e-6)
    assert events
    keys = [(e.phi, -e.depth) for e in events]
    assert keys == sorted(keys)
    assert all(e.depth > 1e-6 for e in events)
    assert 0.0 < crash_fraction(events, phis) < 1.0


def test_crash_tol_must_be_positive(circle_scene):
    with pytest.raises(ValueError):
        detect_crashes(circle_scene, [0.0], crash_tol=0.0)
