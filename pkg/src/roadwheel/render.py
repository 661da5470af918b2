"""CSV dumps and SVG drawings of roads, rolled wheels and traces."""

import os
from dataclasses import dataclass, replace
from pathlib import Path
from xml.sax.saxutils import quoteattr

import numpy as np

from .errors import BadParameter
from .geom import Point2, pose_apply
from .kinematics import (
    TracePath,
    detect_crashes,
    rolled_pose,
    rolled_wheel_samples,
    trace_point,
)
from .roads import RoadCurve, solve_forward
from .wheels import make_wheel, wheel_point

# arch width of the catenary track for a unit-apothem square
SQUARE_ARCH_WIDTH = 2 * np.arcsinh(1.0)
# spiral arc length from W(0) to W(pi/4) for r = exp(theta)
SAWTOOTH_TOOTH_LENGTH = np.sqrt(2) * (np.exp(np.pi / 4) - 1)

PIXELS_PER_UNIT = 100.0
MARGIN = 0.05


# --------------------------------------------------------------------------
# CSV


def format_number(v):
    """Shortest decimal text that reads back as the same double."""
    s = repr(float(v))
    return s[:-2] if s.endswith(".0") else s


def _columns(curve):
    if isinstance(curve, RoadCurve):
        return ("theta", "x", "y"), (curve.thetas, curve.xs, curve.ys)
    if isinstance(curve, TracePath):
        return ("phi", "px", "py"), (curve.phis, curve.points.x, curve.points.y)
    if isinstance(curve, dict):
        return tuple(curve), tuple(np.atleast_1d(np.asarray(v, dtype=float)) for v in curve.values())
    pts = Point2(*curve)
    return ("x", "y"), (np.atleast_1d(pts.x), np.atleast_1d(pts.y))


def csv_text(curve):
    header, cols = _columns(curve)
    n = len(cols[0])
    if n == 0:
        raise ValueError("refusing to export an empty curve")
    if any(len(c) != n for c in cols):
        raise ValueError("columns differ in length")
    lines = [",".join(header)]
    lines += [",".join(format_number(c[i]) for c in cols) for i in range(n)]
    return "\n".join(lines) + "\n"


def export_csv(curve, path):
    """Write ``curve`` as CSV: a header row, then one row per sample.

    Roads get ``theta,x,y``; traces ``phi,px,py``; a dict of equal-length
    arrays gets its keys as header.
    """
    text = csv_text(curve)
    Path(path).write_text(text, newline="\n")
    return Path(path)


def read_csv(path):
    """Inverse of :func:`export_csv`; returns ``(header, columns)``."""
    lines = Path(path).read_text().splitlines()
    header = tuple(lines[0].split(","))
    rows = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
    return header, tuple(rows.T) if len(rows) else tuple(np.empty(0) for _ in header)


# --------------------------------------------------------------------------
# SVG


@dataclass(frozen=True)
class RenderJob:
    road: bool = True
    wheel_at_phi: tuple = ()
    traces: tuple = ()
    center_path: bool = False
    crashes: bool = False
    viewport: object = None
    stroke_width: float = 2.0
    samples_per_curve: int = 400
    crash_tol: float = 1e-9

    def __post_init__(self):
        if self.samples_per_curve < 16:
            raise BadParameter("samples_per_curve must be at least 16")
        if self.viewport is not None:
            xmin, xmax, ymin, ymax = self.viewport
            if not (xmin < xmax and ymin < ymax):
                raise BadParameter("explicit viewport must be non-degenerate")

    @property
    def empty(self):
        return not (self.road or self.wheel_at_phi or self.traces or self.center_path
                    or self.crashes)


def _scene_layers(job, scene):
    """Polylines and markers for ``job``: ``(kind, xs, ys)`` triples."""
    layers = []
    n = job.samples_per_curve
    if job.road:
        road = scene.road
        if len(road) <= 4 * n:
            layers.append(("road", road.xs, road.ys))
        else:
            t = np.linspace(*road.theta_range, 4 * n)
            t = np.union1d(t, road.wheel.breakpoints if road.wheel else ())
            layers.append(("road", road.x_at(t), road.y_at(t)))
    thetas = np.union1d(np.linspace(scene.wheel.lo, scene.wheel.hi, n), scene.wheel.breakpoints)
    for phi in job.wheel_at_phi:
        p = rolled_wheel_samples(scene, phi, thetas)
        layers.append(("wheel", p.x, p.y))
    phis = np.linspace(*scene.range, n)
    for mark in job.traces:
        tr = trace_point(scene, mark, phis)
        layers.append(("trace", tr.points.x, tr.points.y))
    if job.center_path:
        x = scene.road.x_at(np.array(scene.range))
        layers.append(("center", x, np.zeros(2)))
    if job.crashes:
        where = job.wheel_at_phi or tuple(np.linspace(*scene.range, 60))
        events = detect_crashes(scene, np.array(where), thetas, job.crash_tol)
        for e in events:
            p = pose_apply(rolled_pose(scene, e.phi), wheel_point(scene.wheel, e.theta_pen))
            layers.append(("crash", np.array([p.x]), np.array([p.y])))
    return layers


def _bbox(layers, scene):
    if not layers:
        x0, x1 = scene.road.x_range
        return x0, x1, float(np.min(scene.road.ys)), 0.0
    xs = np.concatenate([l[1] for l in layers])
    ys = np.concatenate([l[2] for l in layers] + [np.zeros(1)])
    return float(xs.min()), float(xs.max()), float(ys.min()), float(ys.max())


def _pad(box):
    xmin, xmax, ymin, ymax = box
    w = max(xmax - xmin, 1e-9)
    h = max(ymax - ymin, 1e-9)
    return xmin - MARGIN * w, xmax + MARGIN * w, ymin - MARGIN * h, ymax + MARGIN * h


def auto_viewport(job, scene):
    return _pad(_bbox(_scene_layers(job, scene), scene))


STYLE = {
    "road": "#444444",
    "wheel": "#1f6fb4",
    "trace": "#d9540f",
    "center": "#2a9d3f",
    "crash": "#cc0000",
}


def _svg_document(layers, viewport, stroke_width):
    xmin, xmax, ymin, ymax = viewport
    s = PIXELS_PER_UNIT
    width, height = s * (xmax - xmin), s * (ymax - ymin)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.3f}" height="{height:.3f}" '
        f'viewBox="0 0 {width:.3f} {height:.3f}">',
        f'<g transform="translate({-s * xmin:.6f},{s * ymax:.6f}) scale({s:g},{-s:g})" '
        f'fill="none" stroke-width="{stroke_width / s:g}">',
        f'<line class="axis" x1="{xmin:.9g}" y1="0" x2="{xmax:.9g}" y2="0" stroke="#999999"/>',
    ]
    for kind, xs, ys in layers:
        if kind == "crash":
            out.append(f'<circle class="crash" cx="{xs[0]:.9g}" cy="{ys[0]:.9g}" '
                       f'r="{3 * stroke_width / s:g}" fill="{STYLE[kind]}" stroke="none"/>')
            continue
        pts = " ".join(f"{x:.6f},{y:.6f}" for x, y in zip(xs, ys))
        out.append(f'<polyline class={quoteattr(kind)} stroke="{STYLE[kind]}" points="{pts}"/>')
    out += ["</g>", "</svg>"]
    return "\n".join(out) + "\n"


def svg_text(job, scene, viewport=None):
    layers = _scene_layers(job, scene)
    vp = viewport or job.viewport or _pad(_bbox(layers, scene))
    return _svg_document(layers, vp, job.stroke_width)


def render_svg(job, scene, path):
    """Draw the requested elements of ``scene`` into a standalone SVG file.

    The model's y-axis points up, so the road (below the x-axis) is drawn
    below the axis line.
    """
    text = svg_text(job, scene)
    Path(path).write_text(text)
    return Path(path)


def animate(job, scene, phi_count, out_dir):
    """Write ``phi_count`` frames ``frame_0000.svg ...`` rolling across the scene.

    All frames share one viewport so that they line up when played back.
    """
    if phi_count < 2:
        raise BadParameter("an animation needs at least two frames")
    phis = np.linspace(*scene.range, phi_count)
    out_dir = Path(out_dir)
    os.makedirs(out_dir, exist_ok=True)
    frames = [replace(job, wheel_at_phi=(float(phi),)) for phi in phis]
    viewport = job.viewport
    if viewport is None:
        boxes = np.array([_bbox(_scene_layers(f, scene), scene) for f in frames])
        viewport = _pad((boxes[:, 0].min(), boxes[:, 1].max(), boxes[:, 2].min(), boxes[:, 3].max()))
    paths = []
    for i, frame in enumerate(frames):
        path = out_dir / f"frame_{i:04d}.svg"
        path.write_text(svg_text(frame, scene, viewport))
        paths.append(path)
    return paths


# --------------------------------------------------------------------------
# assembled tracks and auxiliary plots


def catenary_track(arches, samples=200):
    """Road for the unit square: ``arches`` catenary arches side by side."""
    arch = solve_forward(make_wheel("line_secant"), (-np.pi / 4, np.pi / 4))
    t = np.linspace(-np.pi / 4, np.pi / 4, samples)
    x, y = arch.x_at(t), arch.y_at(t)
    xs = np.concatenate([x + k * SQUARE_ARCH_WIDTH for k in range(arches)])
    ys = np.tile(y, arches)
    return xs, ys


def tooth_length(k, span):
    """Arc length of ``r = exp(k theta)`` for ``theta`` in ``[0, span]``."""
    return np.sqrt(1 + k * k) / k * np.expm1(k * span)


def sawtooth_track(teeth, k=1.0, span=np.pi / 2, samples=50):
    """Sawtooth road for a wheel built from ``r = exp(k theta)`` lobes.

    Each lobe covers ``span`` radians; its road is a straight slope of length
    ``tooth_length(k, span)`` followed by a vertical jump back to ``y = -1``.
    """
    lobe = solve_forward(make_wheel("log_spiral", k=k, half_width=span), (0.0, span))
    t = np.linspace(0.0, span, samples)
    x, y = lobe.x_at(t), lobe.y_at(t)
    run = float(lobe.x_at(span))
    xs = np.concatenate([x + j * run for j in range(teeth)])
    ys = np.tile(y, teeth)
    return xs, ys


def render_polyline(xs, ys, path, stroke_width=2.0):
    """Single-curve SVG, e.g. a track from :func:`catenary_track`."""
    vp = _pad((float(np.min(xs)), float(np.max(xs)), min(float(np.min(ys)), 0.0),
               max(float(np.max(ys)), 0.0)))
    Path(path).write_text(_svg_document([("road", np.asarray(xs), np.asarray(ys))], vp,
                                        stroke_width))
    return Path(path)


def theta_x_samples(scene, samples=400):
    t = np.linspace(*scene.range, samples)
    return t, scene.road.x_at(t)


def render_theta_x(scene, path, samples=400):
    """Plot of ``x`` against ``theta`` (theta on the horizontal axis)."""
    t, x = theta_x_samples(scene, samples)
    return render_polyline(t, x, path)
