"""Wheel-to-road and road-to-wheel transforms.

The road of a polar wheel is the curve of contact points
``(x(theta), -r(theta))`` with ``x(0) = 0`` and ``x'(theta) = r(theta)``.
Conversely a road ``y = f(x) < 0`` is matched by the wheel
``r(theta) = -f(x(theta))`` where ``x' = -f(x)``, ``x(0) = 0``.
"""

import warnings
from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np
from scipy import integrate as _scipy_integrate

from . import rk
from .errors import (
    NotRectifiableHere,
    OutOfDomain,
    OutOfRange,
    RangeExceeded,
    RoadAboveAxis,
    ToleranceNotMet,
)
from .wheels import CONTINUOUS_ONLY, PIECEWISE_C1, WheelSpec

FORWARD = "forward"
INVERSE = "inverse"
DENSE = "dense"
LINEAR = "linear"


@dataclass(frozen=True)
class SolverConfig:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_step: float = 0.01
    audit_grid: int = 1000

    def __post_init__(self):
        for name in ("abs_tol", "rel_tol"):
            v = getattr(self, name)
            if not 0 < v < 1:
                raise ValueError(f"{name} must lie in (0, 1), got {v}")
        if not self.max_step > 0:
            raise ValueError("max_step must be positive")
        if int(self.audit_grid) != self.audit_grid or self.audit_grid < 2:
            raise ValueError("audit_grid must be an integer >= 2")


DEFAULT_CONFIG = SolverConfig()


@dataclass(frozen=True, eq=False)
class RoadCurve:
    """Sampled road ``(thetas, xs, ys)`` with dense evaluation in between.

    ``rate(theta, x)`` is the right-hand side that produced ``xs``;
    ``height(theta, x)`` gives ``y`` and ``height_rate(theta, x)`` gives
    ``dy/dtheta`` (``None`` for roads of merely continuous wheels).

    With ``interp == "dense"`` a query between nodes is answered by one
    integrator step from the nearest node, so it carries the integrator's
    local accuracy.  ``"linear"`` interpolates the nodes.
    """

    thetas: np.ndarray
    xs: np.ndarray
    ys: np.ndarray
    source: str
    interp: str
    rate: Callable
    height: Callable
    height_rate: Optional[Callable] = None
    wheel: Optional[WheelSpec] = None
    abs_tol: float = DEFAULT_CONFIG.abs_tol

    def __post_init__(self):
        t, x, y = (np.asarray(a, dtype=float) for a in (self.thetas, self.xs, self.ys))
        if not len(t) == len(x) == len(y) >= 2:
            raise ValueError("a road needs at least two samples of equal length")
        if np.any(np.diff(t) <= 0) or np.any(np.diff(x) <= 0):
            raise ValueError("road thetas and xs must be strictly increasing")
        anchor = np.flatnonzero(t == 0.0)
        if len(anchor) != 1 or x[anchor[0]] != 0.0:
            raise ValueError("road must contain the anchor sample theta = 0, x = 0")
        if np.any(y >= 0):
            raise ValueError("road samples must lie below the x-axis")
        for name, arr in (("thetas", t), ("xs", x), ("ys", y)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def __len__(self):
        return len(self.thetas)

    @property
    def theta_range(self):
        return float(self.thetas[0]), float(self.thetas[-1])

    @property
    def x_range(self):
        return float(self.xs[0]), float(self.xs[-1])

    def _check_theta(self, theta):
        lo, hi = self.theta_range
        if not np.all((theta >= lo) & (theta <= hi)):
            raise OutOfRange(f"angle outside the solved range [{lo}, {hi}]")

    def x_at(self, theta):
        theta = np.asarray(theta, dtype=float)
        self._check_theta(theta)
        if self.interp == LINEAR:
            return np.interp(theta, self.thetas, self.xs)
        j = np.searchsorted(self.thetas, theta).clip(1, len(self.thetas) - 1)
        left = theta - self.thetas[j - 1] < self.thetas[j] - theta
        j = np.where(left, j - 1, j)
        t0, x0 = self.thetas[j], self.xs[j]
        x_new, _ = rk.step(self.rate, t0, x0, theta - t0)
        return np.where(theta == t0, x0, x_new)

    def y_at(self, theta):
        return self.height(theta, self.x_at(theta))

    def x_rate(self, theta):
        return self.rate(theta, self.x_at(theta))

    def y_rate(self, theta):
        if self.height_rate is None:
            return None
        return self.height_rate(theta, self.x_at(theta))


@dataclass(frozen=True, eq=False)
class RoadFunction:
    """A road given as a height function ``y = height(x) < 0``.

    ``height`` must accept numpy arrays.  ``slope`` is ``dy/dx`` when known;
    otherwise central differences of ``height`` are used.
    """

    height: Callable
    x_interval: tuple
    slope: Optional[Callable] = None
    label: str = "road"
    audit_grid: int = 1000

    def __post_init__(self):
        lo, hi = (float(v) for v in self.x_interval)
        if not lo < hi:
            raise ValueError("road x_interval must be nondegenerate")
        object.__setattr__(self, "x_interval", (lo, hi))
        grid = np.linspace(lo, hi, self.audit_grid)
        g = np.asarray(self.height(grid), dtype=float)
        if not np.all(g < 0):
            bad = grid[np.argmax(g)]
            raise RoadAboveAxis(f"{self.label}: height({bad:.6g}) = {np.max(g):.6g} >= 0")

    def dheight(self, x):
        if self.slope is not None:
            return self.slope(x)
        lo, hi = self.x_interval
        x = np.asarray(x, dtype=float)
        h = 1e-6 * np.maximum(1.0, np.abs(x))
        a, b = np.maximum(lo, x - h), np.minimum(hi, x + h)
        return (self.height(b) - self.height(a)) / (b - a)


def _rate_array(wheel, theta, at_breakpoints=np.nan):
    """Vectorised ``dr/dtheta``; ``at_breakpoints`` (NaN) where it is undefined.

    Pass ``at_breakpoints=None`` to get a one-sided value there instead.
    """
    theta = np.asarray(theta, dtype=float)
    if wheel.radius_rate is not None:
        out = np.asarray(wheel.radius_rate(theta), dtype=float)
    else:
        edges = np.array((wheel.lo, *wheel.breakpoints, wheel.hi))
        k = np.searchsorted(edges, theta, side="right").clip(1, len(edges) - 1)
        p0, p1 = edges[k - 1], edges[k]
        h = np.minimum(1e-6 * np.maximum(1.0, np.abs(theta)), (p1 - p0) / 4)
        a, b = np.maximum(p0, theta - h), np.minimum(p1, theta + h)
        out = (wheel.radius(b) - wheel.radius(a)) / (b - a)
    if wheel.breakpoints and at_breakpoints is not None:
        out = np.where(np.isin(theta, wheel.breakpoints), at_breakpoints, out)
    return out


def _stitch(neg, pos):
    (tn, xn), (tp, xp) = neg, pos
    return np.concatenate((tn[::-1][:-1], tp)), np.concatenate((xn[::-1][:-1], xp))


def _check_range(theta_range, domain=None):
    lo, hi = (float(v) for v in theta_range)
    if not lo <= 0.0 <= hi or lo == hi:
        raise OutOfDomain(f"range [{lo}, {hi}] must be nondegenerate and contain 0")
    if domain is not None and (lo < domain[0] or hi > domain[1]):
        raise OutOfDomain(f"range [{lo}, {hi}] leaves the wheel domain {domain}")
    return lo, hi


def solve_forward(wheel, theta_range=None, cfg=DEFAULT_CONFIG):
    """Road of ``wheel`` over ``theta_range`` (default: the whole domain)."""
    lo, hi = _check_range(theta_range or wheel.domain, wheel.domain)

    if wheel.smoothness == CONTINUOUS_ONLY:
        def side(end):
            if end == 0.0:
                return np.zeros(1), np.zeros(1)
            return rk.fixed_quadrature(wheel.radius, 0.0, end, cfg.max_step)
        interp, height_rate = LINEAR, None
    else:
        def rhs(t, x):
            return wheel.radius(t)

        def side(end):
            return rk.integrate(rhs, 0.0, 0.0, end, cfg.abs_tol, cfg.rel_tol, cfg.max_step,
                                stops=wheel.breakpoints)

        def height_rate(t, x):
            return -_rate_array(wheel, t)
        interp = DENSE

    thetas, xs = _stitch(side(lo), side(hi))
    return RoadCurve(
        thetas=thetas,
        xs=xs,
        ys=-wheel.radius(thetas),
        source=FORWARD,
        interp=interp,
        rate=lambda t, x: wheel.radius(t),
        height=lambda t, x: -wheel.radius(t),
        height_rate=height_rate,
        wheel=wheel,
        abs_tol=cfg.abs_tol,
    )


def road_height(road, x):
    """Height of the road above ``x``: ``-r(theta(x))``."""
    return road.y_at(theta_of_x(road, x))


def road_slope(road, x):
    """``dy/dx`` of the road above ``x``; NaN where it does not exist."""
    theta = theta_of_x(road, x)
    dy = road.y_rate(theta)
    if dy is None:
        return np.full(np.shape(theta), np.nan)[()]
    return dy / road.x_rate(theta)


def theta_of_x(road, x, max_iter=100):
    """Invert the monotone map ``theta -> x(theta)``.

    Bisection on the sample bracket, accelerated by Newton steps that use
    ``dtheta/dx = 1 / x'(theta)`` and fall back to bisection whenever they
    leave the bracket.
    """
    x = np.asarray(x, dtype=float)
    x0, x1 = road.x_range
    if not np.all((x >= x0) & (x <= x1)):
        raise OutOfRange(f"x outside the road's range [{x0}, {x1}]")
    if road.interp == LINEAR:
        return np.interp(x, road.xs, road.thetas)

    i = np.searchsorted(road.xs, x).clip(1, len(road.xs) - 1)
    lo, hi = road.thetas[i - 1], road.thetas[i]
    xlo, xhi = road.xs[i - 1], road.xs[i]
    t = np.where(x == xlo, lo, np.where(x == xhi, hi, lo + (x - xlo) / (xhi - xlo) * (hi - lo)))
    for _ in range(max_iter):
        xt = road.x_at(t)
        res = xt - x
        done = np.abs(res) <= road.abs_tol
        if np.all(done):
            break
        lo = np.where(res < 0, t, lo)
        hi = np.where(res > 0, t, hi)
        newton = t - res / road.rate(t, xt)
        bisect = 0.5 * (lo + hi)
        inside = (newton > lo) & (newton < hi)
        t = np.where(done, t, np.where(inside, newton, bisect))
    else:
        raise ToleranceNotMet("theta_of_x did not converge")
    # a few more Newton polishes below abs_tol cost nothing and tighten round trips
    for _ in range(2):
        xt = road.x_at(t)
        newton = t - (xt - x) / road.rate(t, xt)
        t = np.where((newton >= lo) & (newton <= hi), newton, t)
    return t[()] if t.ndim == 0 else t


def solve_inverse(f, theta_range, cfg=DEFAULT_CONFIG):
    """Wheel that rolls on the road ``f`` with its centre on the x-axis.

    Integrates ``x' = -f(x)``, ``x(0) = 0`` and returns ``(wheel, road)``
    where ``wheel.radius(theta) = -f(x(theta))``.
    """
    lo, hi = _check_range(theta_range)
    x_lo, x_hi = f.x_interval
    if not x_lo <= 0.0 <= x_hi:
        raise RangeExceeded("x = 0 lies outside the road interval", theta_reached=0.0)

    def rhs(t, x):
        if np.any(x < x_lo) or np.any(x > x_hi):
            raise rk.LeftInterval
        return -f.height(x)

    sides = []
    for end in (lo, hi):
        if end == 0.0:
            sides.append((np.zeros(1), np.zeros(1)))
            continue
        try:
            sides.append(rk.integrate(rhs, 0.0, 0.0, end, cfg.abs_tol, cfg.rel_tol, cfg.max_step))
        except rk.LeftInterval as exc:
            raise RangeExceeded(
                f"trajectory left {f.label} x-interval [{x_lo}, {x_hi}] near theta = "
                f"{exc.theta:.6g}", theta_reached=exc.theta) from None
    thetas, xs = _stitch(*sides)

    def height_rate(t, x):
        return f.dheight(x) * -f.height(x)

    road = RoadCurve(
        thetas=thetas,
        xs=xs,
        ys=f.height(xs),
        source=INVERSE,
        interp=DENSE,
        rate=lambda t, x: -f.height(x),
        height=lambda t, x: f.height(x),
        height_rate=height_rate,
        abs_tol=cfg.abs_tol,
    )
    wheel = WheelSpec(
        radius=lambda t: -f.height(road.x_at(t)),
        radius_rate=lambda t: height_rate(t, road.x_at(t)) * -1.0,
        domain=(lo, hi),
        smoothness=PIECEWISE_C1,
        label=f"inverse({f.label})",
    )
    road = replace(road, wheel=wheel)

    grid = np.linspace(*road.x_range, cfg.audit_grid)
    err = np.max(np.abs(-wheel.radius(theta_of_x(road, grid)) - f.height(grid)))
    if err > 10 * cfg.abs_tol * max(1.0, float(np.max(np.abs(f.dheight(grid))))):
        raise ToleranceNotMet(f"inverse road reproduces {f.label} only to {err:.3g}")
    return wheel, road


# --------------------------------------------------------------------------
# arc length


def _quad(fn, a, b, cuts, cfg):
    sign = 1.0
    if a > b:
        a, b, sign = b, a, -1.0
    edges = [a, *(c for c in cuts if a < c < b), b]
    total = 0.0
    for p, q in zip(edges[:-1], edges[1:]):
        if p == q:
            continue
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", _scipy_integrate.IntegrationWarning)
            val, err = _scipy_integrate.quad(fn, p, q, epsabs=cfg.abs_tol, epsrel=cfg.rel_tol,
                                             limit=500)
        if err > 100 * max(cfg.abs_tol, cfg.rel_tol * abs(val)):
            raise ToleranceNotMet(f"arc length quadrature on [{p}, {q}] stalled at +-{err:.2g}")
        total += val
    return sign * total


def arc_length_wheel(wheel, a, b, cfg=DEFAULT_CONFIG):
    """Length of the wheel curve between angles ``a`` and ``b`` (signed)."""
    if wheel.smoothness == CONTINUOUS_ONLY:
        raise NotRectifiableHere(f"{wheel.label} is only known to be continuous")
    if not (wheel.contains(a) and wheel.contains(b)):
        raise OutOfDomain(f"[{a}, {b}] leaves the wheel domain {wheel.domain}")

    # quadrature nodes of a sliver piece can round onto a corner; the
    # one-sided rate there is harmless because the piece has no width
    def speed(t):
        return float(np.hypot(wheel.radius(t), _rate_array(wheel, t, at_breakpoints=None)))
    return _quad(speed, a, b, wheel.breakpoints, cfg)


def _chord_romberg(point, p, q, tol, levels=18):
    """Length of the curve ``point(t)``, ``t`` in ``[p, q]``, from chord sums.

    Chord sums on uniform parameter grids carry an error expansion in even
    powers of the spacing, so Richardson extrapolation converges quickly on
    smooth pieces.
    """
    table = []
    n = 8
    for k in range(levels):
        t = np.linspace(p, q, n + 1)
        x, y = point(t)
        row = [float(np.sum(np.hypot(np.diff(x), np.diff(y))))]
        for j, prev in enumerate(table[-1] if table else []):
            row.append(row[j] + (row[j] - prev) / (4.0 ** (j + 1) - 1.0))
        if table and abs(row[-1] - table[-1][-1]) <= tol * max(1.0, abs(row[-1])):
            return row[-1]
        table.append(row)
        n *= 2
    raise ToleranceNotMet(f"chord lengths on [{p}, {q}] did not settle")


def arc_length_road(road, a, b, cfg=DEFAULT_CONFIG):
    """Length of the road between the contact points for angles ``a`` and ``b``.

    Measured on the road itself, from chords between road points, without
    reference to the wheel's derivative.
    """
    if road.height_rate is None:
        raise NotRectifiableHere("road of a merely continuous wheel has no arc length")
    lo, hi = road.theta_range
    if not (lo <= min(a, b) and max(a, b) <= hi):
        raise OutOfRange(f"[{a}, {b}] leaves the road's range [{lo}, {hi}]")
    sign = 1.0
    if a > b:
        a, b, sign = b, a, -1.0
    cuts = road.wheel.breakpoints if road.wheel is not None else ()
    edges = [a, *(c for c in cuts if a < c < b), b]

    def point(t):
        x = road.x_at(t)
        return x, road.height(t, x)
    total = sum(_chord_romberg(point, p, q, cfg.rel_tol) for p, q in zip(edges[:-1], edges[1:])
                if p < q)
    return sign * total
