"""Polar wheels ``W(theta) = r(theta) * (sin theta, -cos theta)`` and presets.

A wheel is a positive continuous radius function on a closed interval that
contains 0.  ``W(0) = (0, -r(0))`` sits directly below the centre and is the
first contact point with the road.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import BadParameter, NonPositiveRadius, OutOfDomain
from .geom import Point2

ANALYTIC = "analytic"
PIECEWISE_C1 = "piecewise_c1"
CONTINUOUS_ONLY = "continuous_only"
SMOOTHNESS = (ANALYTIC, PIECEWISE_C1, CONTINUOUS_ONLY)

AUDIT_POINTS = 10_000
DEFAULT_MARGIN = 0.2


@dataclass(frozen=True, eq=False)
class WheelSpec:
    """A polar wheel.

    ``radius`` and ``radius_rate`` must accept numpy arrays.  ``radius_rate``
    is the analytic derivative where one is known; for piecewise wheels it
    may be given piece by piece and is never evaluated at a breakpoint.
    """

    radius: Callable
    domain: tuple
    smoothness: str = ANALYTIC
    radius_rate: Optional[Callable] = None
    breakpoints: tuple = ()
    label: str = "wheel"
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        lo, hi = (float(v) for v in self.domain)
        if not (np.isfinite(lo) and np.isfinite(hi)):
            raise BadParameter("wheel domain must be finite; truncate unbounded wheels")
        if not (lo <= 0.0 <= hi) or lo == hi:
            raise BadParameter(f"domain [{lo}, {hi}] must be nondegenerate and contain 0")
        object.__setattr__(self, "domain", (lo, hi))
        if self.smoothness not in SMOOTHNESS:
            raise BadParameter(f"unknown smoothness class {self.smoothness!r}")
        bps = tuple(float(b) for b in self.breakpoints)
        if bps and self.smoothness != PIECEWISE_C1:
            raise BadParameter("only piecewise_c1 wheels carry breakpoints")
        if any(not lo < b < hi for b in bps) or any(b >= c for b, c in zip(bps, bps[1:])):
            raise BadParameter("breakpoints must be strictly increasing and interior")
        object.__setattr__(self, "breakpoints", bps)

        grid = np.linspace(lo, hi, AUDIT_POINTS)
        r = np.asarray(self.radius(grid), dtype=float)
        if not np.all(np.isfinite(r)):
            raise NonPositiveRadius(f"{self.label}: radius is not finite on its domain")
        if np.min(r) <= 0.0:
            bad = grid[np.argmin(r)]
            raise NonPositiveRadius(f"{self.label}: r({bad:.6g}) = {np.min(r):.6g} <= 0")

    @property
    def lo(self):
        return self.domain[0]

    @property
    def hi(self):
        return self.domain[1]

    def contains(self, theta):
        theta = np.asarray(theta)
        return bool(np.all((theta >= self.lo) & (theta <= self.hi)))

    def pieces(self):
        """Consecutive ``(start, end)`` intervals between breakpoints."""
        edges = (self.lo, *self.breakpoints, self.hi)
        return list(zip(edges[:-1], edges[1:]))


def _check_domain(wheel, theta):
    if not np.all(np.isfinite(theta)):
        raise OutOfDomain("non-finite angle")
    if not wheel.contains(theta):
        raise OutOfDomain(f"angle outside {wheel.label} domain [{wheel.lo}, {wheel.hi}]")


def eval_r(wheel, theta):
    """Radius at ``theta``; raises if ``theta`` leaves the domain."""
    _check_domain(wheel, theta)
    r = wheel.radius(theta)
    if np.any(~(np.asarray(r) > 0.0)):
        raise NonPositiveRadius(f"{wheel.label}: non-positive radius")
    return r


def wheel_point(wheel, theta):
    """The wheel point ``W(theta)`` in the unrolled position."""
    r = eval_r(wheel, theta)
    return Point2(r * np.sin(theta), -r * np.cos(theta))


def fd_step(theta):
    return 1e-6 * max(1.0, abs(theta))


def eval_r_rate(wheel, theta):
    """``dr/dtheta`` at a scalar ``theta``, or ``None`` where it is undefined.

    Undefined means the wheel is only continuous, or ``theta`` is a
    breakpoint of a piecewise wheel.
    """
    theta = float(theta)
    _check_domain(wheel, theta)
    if wheel.smoothness == CONTINUOUS_ONLY or theta in wheel.breakpoints:
        return None
    if wheel.radius_rate is not None:
        return float(wheel.radius_rate(theta))
    # central difference kept inside the current piece
    lo, hi = next((a, b) for a, b in wheel.pieces() if a <= theta <= b)
    h = min(fd_step(theta), (hi - lo) / 4)
    a, b = max(lo, theta - h), min(hi, theta + h)
    return float((wheel.radius(b) - wheel.radius(a)) / (b - a))


# --------------------------------------------------------------------------
# presets

PRESETS = (
    "unit_circle",
    "line_secant",
    "regular_polygon",
    "poinsot_sech",
    "log_spiral",
    "offset_circle",
    "focal_parabola",
    "weierstrass",
)


def _margin(domain_margin, half):
    if not domain_margin > 0:
        raise BadParameter("open-interval presets need domain_margin > 0")
    if domain_margin >= half:
        raise BadParameter("domain_margin swallows the whole domain")
    return half - domain_margin


def weierstrass_radius(theta, a=2.0, b=3.0, level_offset=3.0, terms=50, sign=-1.0):
    """Truncated, level-shifted Weierstrass sum.

    ``level_offset + sign * sum_{n < terms} a**-n cos(b**n theta)``.
    """
    theta = np.asarray(theta, dtype=float)
    n = np.arange(terms)
    amp = a ** -n.astype(float)
    freq = b ** n.astype(float)
    # one term at a time keeps memory flat for long theta arrays
    total = np.zeros_like(theta)
    for an, bn in zip(amp, freq):
        total += an * np.cos(bn * theta)
    return level_offset + sign * total


def make_wheel(kind, domain_margin=DEFAULT_MARGIN, **params):
    """Build a preset wheel.

    Parameters by preset:

    * ``regular_polygon``: ``sides`` (>= 3), ``apothem`` (> 0)
    * ``log_spiral``: ``k``
    * ``focal_parabola``: ``d`` (> 0)
    * ``weierstrass``: ``a``, ``b`` (``b > a > 1``), ``level_offset``,
      ``terms`` (>= 1), ``sign`` (+1 or -1)
    * ``poinsot_sech``, ``log_spiral``, ``unit_circle``, ``weierstrass``:
      ``half_width`` truncates the otherwise unbounded or periodic domain.
    """
    kind = kind.replace("-", "_")
    if kind not in PRESETS:
        raise BadParameter(f"unknown preset {kind!r}; choose from {', '.join(PRESETS)}")
    builder = globals()["_" + kind]
    return builder(domain_margin=domain_margin, **params)


def _unit_circle(domain_margin, half_width=np.pi):
    return WheelSpec(
        radius=lambda t: np.ones_like(np.asarray(t, dtype=float)),
        radius_rate=lambda t: np.zeros_like(np.asarray(t, dtype=float)),
        domain=(-half_width, half_width),
        label="unit_circle",
    )


def _line_secant(domain_margin):
    h = _margin(domain_margin, np.pi / 2)
    return WheelSpec(
        radius=lambda t: 1.0 / np.cos(t),
        radius_rate=lambda t: np.tan(t) / np.cos(t),
        domain=(-h, h),
        label="line_secant",
    )


def _regular_polygon(domain_margin, sides=4, apothem=1.0):
    if int(sides) != sides or sides < 3:
        raise BadParameter("a polygon needs an integer number of sides >= 3")
    if not apothem > 0:
        raise BadParameter("apothem must be positive")
    sides = int(sides)
    wedge = 2 * np.pi / sides

    def offset(t):
        # angle from the centre of the side that owns t
        return t - wedge * np.round(np.asarray(t, dtype=float) / wedge)

    bps = [(2 * j + 1) * np.pi / sides for j in range(-sides, sides)]
    bps = tuple(b for b in bps if -np.pi < b < np.pi)
    return WheelSpec(
        radius=lambda t: apothem / np.cos(offset(t)),
        radius_rate=lambda t: apothem * np.tan(offset(t)) / np.cos(offset(t)),
        domain=(-np.pi, np.pi),
        smoothness=PIECEWISE_C1,
        breakpoints=bps,
        label=f"regular_polygon({sides})",
        params={"sides": sides, "apothem": apothem},
    )


def _poinsot_sech(domain_margin, half_width=10.0):
    return WheelSpec(
        radius=lambda t: 1.0 / np.cosh(t),
        radius_rate=lambda t: -np.tanh(t) / np.cosh(t),
        domain=(-half_width, half_width),
        label="poinsot_sech",
    )


def _log_spiral(domain_margin, k=0.5, half_width=2 * np.pi):
    return WheelSpec(
        radius=lambda t: np.exp(k * np.asarray(t, dtype=float)),
        radius_rate=lambda t: k * np.exp(k * np.asarray(t, dtype=float)),
        domain=(-half_width, half_width),
        label=f"log_spiral({k:g})",
        params={"k": k},
    )


def _offset_circle(domain_margin):
    h = _margin(domain_margin, np.pi / 2)
    return WheelSpec(
        radius=lambda t: 2.0 * np.cos(t),
        radius_rate=lambda t: -2.0 * np.sin(t),
        domain=(-h, h),
        label="offset_circle",
    )


def _focal_parabola(domain_margin, d=0.5):
    if not d > 0:
        raise BadParameter("focal parabola needs d > 0")
    h = _margin(domain_margin, np.pi)
    return WheelSpec(
        radius=lambda t: d / (1.0 + np.cos(t)),
        radius_rate=lambda t: d * np.sin(t) / (1.0 + np.cos(t)) ** 2,
        domain=(-h, h),
        label=f"focal_parabola({d:g})",
        params={"d": d},
    )


def _weierstrass(domain_margin, a=2.0, b=3.0, level_offset=3.0, terms=50, sign=-1.0,
                 half_width=2 * np.pi):
    if not b > a > 1:
        raise BadParameter("weierstrass needs b > a > 1")
    if int(terms) != terms or terms < 1:
        raise BadParameter("weierstrass needs terms >= 1")
    if sign not in (1, -1):
        raise BadParameter("sign must be +1 or -1")
    terms = int(terms)
    return WheelSpec(
        radius=lambda t: weierstrass_radius(t, a, b, level_offset, terms, sign),
        domain=(-half_width, half_width),
        smoothness=CONTINUOUS_ONLY,
        label=f"weierstrass({a:g},{b:g})",
        params={"a": a, "b": b, "level_offset": level_offset, "terms": terms, "sign": sign},
    )
