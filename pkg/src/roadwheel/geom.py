"""Planar primitives for rolling: points, clockwise rotations and rigid poses.

Every function accepts scalars or numpy arrays of matching shape, so a whole
sampled curve can be rotated in one call.  Angles are plain radians and are
never wrapped.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np


class Point2(NamedTuple):
    x: float
    y: float


def _require_finite(*values):
    for v in values:
        if not np.all(np.isfinite(v)):
            raise ValueError("non-finite value passed to a geometry operation")


@dataclass(frozen=True)
class RigidPose:
    """Clockwise spin about the origin followed by a horizontal shift."""

    spin: float
    shift: float

    def __post_init__(self):
        _require_finite(self.spin, self.shift)


def rotate_cw(phi, p):
    """Rotate ``p`` clockwise by ``phi`` about the origin."""
    _require_finite(phi, p[0], p[1])
    c, s = np.cos(phi), np.sin(phi)
    x, y = p
    return Point2(x * c + y * s, -x * s + y * c)


def pose_apply(pose, p):
    """Place the wheel point ``p`` according to ``pose``."""
    q = rotate_cw(pose.spin, p)
    return Point2(q.x + pose.shift, q.y)


def carried_velocity(p, phi, tau_rate):
    """Velocity of the carried point ``p`` when the spin is ``phi``.

    This is the derivative with respect to the spin of
    ``rotate_cw(phi, p) + (tau(phi), 0)``, given ``tau_rate = tau'(phi)``.
    The derivative of a clockwise rotation is the rotation advanced by a
    quarter turn, so no differencing is involved.
    """
    _require_finite(tau_rate)
    q = rotate_cw(np.add(phi, np.pi / 2), p)
    return Point2(q.x + tau_rate, q.y)


def norm(p):
    return np.hypot(p[0], p[1])
