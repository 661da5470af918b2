"""A parabola, pinned at its focus, rolls on its own reflection.

Run:  python3 demos/parabola_mirror.py
"""

from pathlib import Path

import numpy as np

from roadwheel import RenderJob, make_scene, make_wheel, render_svg, verify_parabola_congruence

for d in (0.25, 0.5, 1.0, 2.0):
    rep = verify_parabola_congruence(d)
    print(f"d = {d:<4}  focus-directrix error {rep.max_focus_err:.1e}  "
          f"centre-distance error {rep.max_length_err:.1e}")

scene = make_scene(make_wheel("focal_parabola", d=0.5), (-1.5, 1.5))
t = np.linspace(-1.5, 1.5, 7)
print("road against y = -x^2 - 1/4:", np.max(np.abs(scene.road.y_at(t) + scene.road.x_at(t) ** 2 + 0.25)))

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)
render_svg(RenderJob(wheel_at_phi=(-1.0, 0.0, 1.0), center_path=True), scene, out / "parabola.svg")
