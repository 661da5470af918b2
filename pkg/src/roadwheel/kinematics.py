"""Rolling motion of a wheel along its road.

After rolling to spin ``phi`` the wheel has been turned clockwise by ``phi``
and shifted right by ``x(phi)``; the wheel point ``W(phi)`` is then the
contact point ``(x(phi), -r(phi))`` and the centre sits at ``(x(phi), 0)``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import OutOfRange
from .geom import Point2, RigidPose, pose_apply, rotate_cw
from .roads import DEFAULT_CONFIG, road_height, solve_forward
from .wheels import wheel_point

DEFAULT_PHI_PER_TURN = 720
DEFAULT_THETA_SAMPLES = 2000
DEFAULT_CRASH_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class RollScene:
    wheel: object
    road: object
    range: tuple

    def __post_init__(self):
        lo, hi = (float(v) for v in self.range)
        r_lo, r_hi = self.road.theta_range
        if lo < r_lo or hi > r_hi:
            raise OutOfRange(f"scene range [{lo}, {hi}] not covered by the road")
        object.__setattr__(self, "range", (lo, hi))

    def check(self, phi):
        lo, hi = self.range
        phi = np.asarray(phi, dtype=float)
        if not np.all((phi >= lo) & (phi <= hi)):
            raise OutOfRange(f"rolled angle outside the scene range [{lo}, {hi}]")
        return phi


def make_scene(wheel, theta_range=None, cfg=DEFAULT_CONFIG):
    """Solve the road for ``wheel`` and wrap both in a scene."""
    road = solve_forward(wheel, theta_range, cfg)
    return RollScene(wheel, road, road.theta_range)


@dataclass(frozen=True)
class TracePath:
    mark: float
    phis: np.ndarray
    points: Point2


@dataclass(frozen=True)
class CrashEvent:
    phi: float
    theta_pen: float
    depth: float


def contact_point(scene, theta):
    theta = scene.check(theta)
    return Point2(scene.road.x_at(theta), scene.road.y_at(theta))


def rolled_pose(scene, phi):
    phi = float(scene.check(phi))
    return RigidPose(spin=phi, shift=float(scene.road.x_at(phi)))


def _poses(scene, phis):
    phis = scene.check(phis)
    return phis, scene.road.x_at(phis)


def trace_point(scene, mark, phis):
    """Path of the wheel point ``W(mark)`` as the wheel rolls through ``phis``."""
    phis, shifts = _poses(scene, np.atleast_1d(phis))
    q = rotate_cw(phis, wheel_point(scene.wheel, mark))
    return TracePath(float(mark), phis, Point2(q.x + shifts, q.y))


def rolled_wheel_samples(scene, phi, thetas):
    """Wheel points ``W(thetas)`` after rolling to spin ``phi``."""
    pose = rolled_pose(scene, phi)
    return pose_apply(pose, wheel_point(scene.wheel, np.asarray(thetas, dtype=float)))


def center_path(scene, phis=None):
    """Positions of the centre; by construction they stay on the x-axis."""
    if phis is None:
        phis = scene.road.thetas[(scene.road.thetas >= scene.range[0])
                                 & (scene.road.thetas <= scene.range[1])]
    phis, shifts = _poses(scene, phis)
    q = rotate_cw(phis, Point2(np.zeros_like(phis), np.zeros_like(phis)))
    return Point2(q.x + shifts, q.y)


def default_phis(scene):
    lo, hi = scene.range
    n = max(2, int(np.ceil((hi - lo) / (2 * np.pi) * DEFAULT_PHI_PER_TURN)) + 1)
    return np.linspace(lo, hi, n)


def default_thetas(scene):
    return np.linspace(scene.wheel.lo, scene.wheel.hi, DEFAULT_THETA_SAMPLES)


def detect_crashes(scene, phis=None, thetas=None, crash_tol=DEFAULT_CRASH_TOL):
    """Rolled wheel samples lying more than ``crash_tol`` below the road.

    Samples that land outside the road's solved x-range are skipped.  Events
    come sorted by ``phi`` and, within one ``phi``, by decreasing depth.
    """
    if not crash_tol > 0:
        raise ValueError("crash_tol must be positive")
    phis = default_phis(scene) if phis is None else np.atleast_1d(phis)
    thetas = default_thetas(scene) if thetas is None else np.asarray(thetas, dtype=float)
    x0, x1 = scene.road.x_range
    body = wheel_point(scene.wheel, thetas)
    events = []
    for phi in phis:
        px, py = pose_apply(rolled_pose(scene, phi), body)
        on_road = (px >= x0) & (px <= x1)
        if not np.any(on_road):
            continue
        depth = road_height(scene.road, px[on_road]) - py[on_road]
        hit = depth > crash_tol
        order = np.argsort(-depth[hit], kind="stable")
        for th, d in zip(thetas[on_road][hit][order], depth[hit][order]):
            events.append(CrashEvent(float(phi), float(th), float(d)))
    events.sort(key=lambda e: (e.phi, -e.depth))
    return events


def crash_fraction(events, phis):
    """Share of rolled positions in ``phis`` that have at least one crash."""
    if len(phis) == 0:
        return 0.0
    return len({e.phi for e in events}) / len(phis)
