"""Going backwards: from a road to the wheel that rolls on it.

Run:  python3 demos/wheels_from_roads.py
"""

import numpy as np

from roadwheel import RoadFunction, solve_inverse

t = np.linspace(-1.0, 1.0, 5)

cases = [
    ("inverted catenary", RoadFunction(lambda x: -np.cosh(x), (-3.0, 3.0)),
     lambda t: 1 / np.cos(t), "sec(theta)"),
    ("tilted line y = -x/2 - 1", RoadFunction(lambda x: -x / 2 - 1, (-1.9, 50.0)),
     lambda t: np.exp(t / 2), "exp(theta/2)"),
    ("semicircle of radius 2", RoadFunction(lambda x: -np.sqrt(4 - x * x), (-1.99, 1.99)),
     lambda t: 2 * np.cos(t), "2 cos(theta)"),
]
for name, road, expected, formula in cases:
    wheel, _ = solve_inverse(road, (-1.0, 1.0))
    err = np.max(np.abs(wheel.radius(t) - expected(t)))
    print(f"{name:26s} -> r(theta) = {formula:13s} worst error {err:.1e}")

# A road that runs out: the catenary cut to |x| <= 1 only supports a partial turn.
from roadwheel import RangeExceeded

try:
    solve_inverse(RoadFunction(lambda x: -np.cosh(x), (-1.0, 1.0)), (0.0, 1.4))
except RangeExceeded as exc:
    print(f"short road: stopped near theta = {exc.theta_reached:.4f} "
          f"(atan(sinh 1) = {np.arctan(np.sinh(1)):.4f})")
