"""Numerical checks of rolling: the no-slip residual and its consequences.

A rolling law is a pair ``(rho, tau)``: ``rho(theta)`` is the spin that
brings ``W(theta)`` into contact and ``tau(phi)`` the horizontal shift after
spinning by ``phi``.  The wheel rolls without slipping when every wheel point
has zero velocity at the instant it touches the road.
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import BadParameter
from .geom import Point2, RigidPose, carried_velocity, pose_apply, rotate_cw
from .kinematics import contact_point, make_scene, rolled_pose
from .roads import DEFAULT_CONFIG, _rate_array, arc_length_road, arc_length_wheel
from .wheels import CONTINUOUS_ONLY, eval_r, make_wheel, wheel_point

NO_SLIP = "no_slip"
SLIPPING = "slipping"
PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"

FD_STEP = 1e-6
# finite-difference tau' on a merely continuous wheel is far noisier than an
# analytic rate, so the two smoothness classes get separate thresholds
SMOOTH_RESIDUAL_TOL = 1e-6
ROUGH_RESIDUAL_TOL = 1e-4


@dataclass(frozen=True)
class RollingLaw:
    rho: Callable
    tau: Callable
    tau_rate: Optional[Callable] = None
    label: str = "law"

    def __post_init__(self):
        if abs(float(self.rho(0.0))) > 1e-12:
            raise BadParameter(f"{self.label}: rho(0) must be 0")
        if abs(float(self.tau(0.0))) > 1e-12:
            raise BadParameter(f"{self.label}: tau(0) must be 0")


def canonical_law(scene, finite_difference=False):
    """``rho(theta) = theta`` and ``tau = x``, the road's own abscissa.

    With ``finite_difference`` the law carries no ``tau_rate`` and residuals
    fall back to central differences of ``tau``.
    """
    road = scene.road
    return RollingLaw(
        rho=lambda t: np.asarray(t, dtype=float),
        tau=road.x_at,
        tau_rate=None if finite_difference else road.x_rate,
        label="canonical",
    )


def section4_law():
    """Spin twice as fast and shift by ``2 tan(phi/2)``.

    On the line wheel ``r = sec(theta)`` this matches arc lengths exactly yet
    slips everywhere except at the start.
    """
    return RollingLaw(
        rho=lambda t: 2.0 * np.asarray(t, dtype=float),
        tau=lambda p: 2.0 * np.tan(np.asarray(p, dtype=float) / 2),
        tau_rate=lambda p: 1.0 / np.cos(np.asarray(p, dtype=float) / 2) ** 2,
        label="section4",
    )


def noslip_velocity(wheel, theta, phi, tau_rate):
    """Velocity of ``W(theta)`` while the wheel spins through ``phi``."""
    return carried_velocity(wheel_point(wheel, theta), phi, tau_rate)


def noslip_residual(wheel, law, theta, fd_step=FD_STEP):
    """Speed of ``W(theta)`` at the moment the law puts it on the road."""
    theta = np.asarray(theta, dtype=float)
    phi = law.rho(theta)
    if law.tau_rate is not None:
        rate = law.tau_rate(phi)
    else:
        rate = (law.tau(phi + fd_step) - law.tau(phi - fd_step)) / (2 * fd_step)
    v = noslip_velocity(wheel, theta, phi, rate)
    return np.hypot(v.x, v.y)


@dataclass(frozen=True)
class NoSlipReport:
    thetas: np.ndarray
    residuals: np.ndarray
    max_residual: float
    verdict: str
    tol: float


def residual_tol(wheel, law):
    if wheel.smoothness == CONTINUOUS_ONLY or law.tau_rate is None:
        return ROUGH_RESIDUAL_TOL
    return SMOOTH_RESIDUAL_TOL


def _is_even(wheel):
    if wheel.lo != -wheel.hi:
        return False
    t = np.linspace(0.0, wheel.hi, 257)
    a, b = wheel.radius(t), wheel.radius(-t)
    return bool(np.all(np.abs(a - b) <= 1e-14 * np.abs(a)))


def noslip_grid(wheel, n=500, inset=FD_STEP):
    """``n`` angles across the wheel domain, kept ``inset`` away from the ends.

    Wheels that are even in ``theta`` are checked on the non-negative half
    only, since the other half mirrors it.
    """
    lo = 0.0 if _is_even(wheel) else wheel.lo + 2 * inset
    return np.linspace(lo, wheel.hi - 2 * inset, n)


def noslip_report(wheel, law, thetas=None, tol=None, fd_step=FD_STEP):
    thetas = noslip_grid(wheel) if thetas is None else np.asarray(thetas, dtype=float)
    tol = residual_tol(wheel, law) if tol is None else tol
    res = np.atleast_1d(noslip_residual(wheel, law, thetas, fd_step))
    worst = float(np.max(res))
    return NoSlipReport(thetas, res, worst, NO_SLIP if worst <= tol else SLIPPING, tol)


# --------------------------------------------------------------------------
# consequences of rolling without slipping


@dataclass(frozen=True)
class CorollaryReport:
    center_above_max_err: float
    arc_length_max_err: Optional[float]
    slope_max_err: Optional[float]
    verdicts: dict
    skipped_slope: int = 0

    @property
    def passed(self):
        return all(v != FAIL for v in self.verdicts.values())


def _verdict(err, tol):
    if err is None:
        return NOT_APPLICABLE
    return PASS if err <= tol else FAIL


def _cumulative(fn, grid):
    """``fn(0, t)`` for every ``t`` in ``grid``, built from adjacent pieces."""
    out = np.empty(len(grid))
    order = np.argsort(grid)
    t_sorted = grid[order]
    for side in (t_sorted[t_sorted >= 0], t_sorted[t_sorted < 0][::-1]):
        total, prev = 0.0, 0.0
        for t in side:
            total += fn(prev, t)
            prev = t
            out[np.flatnonzero(grid == t)] = total
    return out


def _tangent_slope(wheel, theta):
    """Slope of the rolled wheel's tangent at the contact point."""
    r = wheel.radius(theta)
    dr = _rate_array(wheel, theta)
    tangent = Point2(dr * np.sin(theta) + r * np.cos(theta), -dr * np.cos(theta) + r * np.sin(theta))
    t = rotate_cw(theta, tangent)
    return t.y / t.x


def _road_fd_slope(road, theta, h):
    """Road slope from central differences of road points, Richardson-refined."""
    def chord(step):
        dy = road.y_at(theta + step) - road.y_at(theta - step)
        dx = road.x_at(theta + step) - road.x_at(theta - step)
        return dy / dx
    coarse, fine = chord(h), chord(h / 2)
    return fine + (fine - coarse) / 3.0


def verify_corollaries(scene, grid=None, center_tol=1e-12, arc_tol=1e-8, slope_tol=1e-6,
                       slope_step=1e-4, cfg=DEFAULT_CONFIG):
    """Centre above contact, equal arc lengths and equal slopes over ``grid``.

    Arc length and slope checks report ``None`` (not applicable) for wheels
    that are only continuous.  Slopes are skipped within ``slope_step`` of a
    breakpoint or of the scene's ends.
    """
    wheel, road = scene.wheel, scene.road
    lo, hi = scene.range
    grid = np.linspace(lo, hi, 101) if grid is None else np.asarray(grid, dtype=float)
    scene.check(grid)

    centre_err = 0.0
    for t in grid:
        c = pose_apply(rolled_pose(scene, t), Point2(0.0, 0.0))
        contact = contact_point(scene, t)
        centre_err = max(centre_err, abs(c.x - contact.x), abs(c.y))

    arc_err = slope_err = None
    skipped = 0
    if wheel.smoothness != CONTINUOUS_ONLY:
        lw = _cumulative(lambda a, b: arc_length_wheel(wheel, a, b, cfg), grid)
        lr = _cumulative(lambda a, b: arc_length_road(road, a, b, cfg), grid)
        arc_err = float(np.max(np.abs(lw - lr)))

        h = slope_step
        cuts = np.array((lo, *wheel.breakpoints, hi))
        near = np.min(np.abs(grid[:, None] - cuts[None, :]), axis=1) <= h
        keep = grid[~near]
        skipped = int(np.sum(near))
        if len(keep):
            analytic = -_rate_array(wheel, keep) / wheel.radius(keep)
            from_road = _road_fd_slope(road, keep, h)
            rolled = _tangent_slope(wheel, keep)
            diffs = np.abs(np.stack([analytic - from_road, rolled - from_road, rolled - analytic]))
            slope_err = float(np.max(diffs))

    verdicts = {
        "center_above_contact": _verdict(centre_err, center_tol),
        "arc_length": _verdict(arc_err, arc_tol),
        "slope": _verdict(slope_err, slope_tol),
    }
    return CorollaryReport(centre_err, arc_err, slope_err, verdicts, skipped)


# --------------------------------------------------------------------------
# arc length alone does not make rolling


@dataclass(frozen=True)
class Section4Report:
    thetas: np.ndarray
    residuals: np.ndarray
    arc_length_max_err: float
    arc_length_equal: bool
    max_residual: float

    @property
    def slipping(self):
        return self.max_residual > 0.1


def run_section4_counterexample(tol=1e-9, thetas=None, cfg=DEFAULT_CONFIG):
    """Roll the line wheel ``r = sec(theta)`` along itself with ``rho = 2 theta``.

    The contact point for ``W(theta)`` is the rolled image of ``W(theta)``;
    its distance along the line ``y = -1`` from the first contact is compared
    with the wheel's own arc length to ``W(theta)``.
    """
    wheel = make_wheel("line_secant")
    law = section4_law()
    thetas = np.linspace(0.0, np.pi / 3, 61) if thetas is None else np.asarray(thetas, dtype=float)

    errs = []
    for t in thetas:
        along_wheel = arc_length_wheel(wheel, 0.0, t, cfg)
        phi = float(law.rho(t))
        contact = pose_apply(RigidPose(phi, float(law.tau(phi))), wheel_point(wheel, t))
        along_road = np.hypot(contact.x - 0.0, contact.y + eval_r(wheel, 0.0))
        errs.append(abs(along_road - along_wheel))
    res = np.atleast_1d(noslip_residual(wheel, law, thetas))
    arc_err = float(max(errs))
    return Section4Report(thetas, res, arc_err, arc_err <= tol, float(np.max(res)))


# --------------------------------------------------------------------------
# the parabola that rolls on its own mirror image


@dataclass(frozen=True)
class CongruenceReport:
    d: float
    thetas: np.ndarray
    max_focus_err: float
    max_length_err: float
    tol: float

    @property
    def passed(self):
        return self.max_focus_err <= self.tol and self.max_length_err <= self.tol


def verify_parabola_congruence(d, thetas=None, tol=1e-8, cfg=DEFAULT_CONFIG):
    """Check that the focal parabola's road is the mirrored parabola.

    Every contact point ``P'`` must be as far from ``F = (0, -d)`` as from
    the x-axis, and as far from the rolled centre ``O'`` as the wheel point
    ``P`` was from the centre before rolling.
    """
    if not d > 0:
        raise BadParameter("d must be positive")
    thetas = np.linspace(-1.2, 1.2, 241) if thetas is None else np.asarray(thetas, dtype=float)
    scene = make_scene(make_wheel("focal_parabola", d=d), cfg=cfg)
    p_road = contact_point(scene, thetas)
    focus_err = np.abs(np.hypot(p_road.x, p_road.y + d) - np.abs(p_road.y))

    p_wheel = wheel_point(scene.wheel, thetas)
    centres = scene.road.x_at(thetas)
    length_err = np.abs(np.hypot(p_road.x - centres, p_road.y) - np.hypot(*p_wheel))
    return CongruenceReport(d, thetas, float(np.max(focus_err)), float(np.max(length_err)), tol)
