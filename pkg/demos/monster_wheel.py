"""A wheel whose radius is a truncated Weierstrass series.

The radius is continuous but (as the number of terms grows) differentiable
nowhere.  Its road still exists, since x(theta) only needs an integral, but
slopes and arc lengths of wheel and road are no longer defined.

Run:  python3 demos/monster_wheel.py   (about ten seconds)
"""

from pathlib import Path

import numpy as np

from roadwheel import (
    RenderJob,
    crash_fraction,
    detect_crashes,
    make_scene,
    make_wheel,
    render_svg,
    verify_corollaries,
)
from roadwheel.kinematics import default_phis

wheel = make_wheel("weierstrass", terms=50)
scene = make_scene(wheel, (0.0, 2 * np.pi))
x = scene.road.x_at(2 * np.pi)
print(f"after a full turn the centre has moved {x:.12f}; 6 pi = {6 * np.pi:.12f}")

rep = verify_corollaries(scene, grid=np.linspace(0, 2 * np.pi, 41))
print("verdicts:", rep.verdicts)

phis = default_phis(scene)[::6]
events = detect_crashes(scene, phis, np.linspace(wheel.lo, wheel.hi, 4000))
print(f"{len(events)} crash samples; share of positions with a crash: "
      f"{crash_fraction(events, phis):.2f}")

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)
render_svg(RenderJob(wheel_at_phi=(np.pi,), traces=(0.0,)), scene, out / "monster.svg")
