"""A square wheel riding over catenary arches.

Run:  python3 demos/square_wheel.py   (writes SVGs into demos/out/)
"""

from pathlib import Path

import numpy as np

from roadwheel import RenderJob, animate, make_scene, make_wheel, render_svg, verify_corollaries
from roadwheel.render import SQUARE_ARCH_WIDTH, catenary_track, render_polyline

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

# One face of the square, seen from its centre, is the line r = sec(theta).
# Its road is the upside-down catenary y = -cosh(x).
scene = make_scene(make_wheel("regular_polygon", sides=4))
road = scene.road
x = road.x_at(np.pi / 4)
print(f"one face ends at x = {x:.15f}; asinh(1) = {np.arcsinh(1):.15f}")
print(f"arch width 2 asinh(1) = {SQUARE_ARCH_WIDTH:.12f}")

report = verify_corollaries(scene)
print("centre above contact:", report.verdicts["center_above_contact"],
      f"(worst {report.center_above_max_err:.1e})")
print("arc lengths match:   ", report.verdicts["arc_length"],
      f"(worst {report.arc_length_max_err:.1e})")
print("slopes match:        ", report.verdicts["slope"],
      f"(worst {report.slope_max_err:.1e}, {report.skipped_slope} samples next to corners skipped)")

render_svg(RenderJob(wheel_at_phi=(0.0, 1.2, 2.6), traces=(np.pi / 4,), center_path=True),
           scene, OUT / "square.svg")
render_polyline(*catenary_track(5), OUT / "catenary_track.svg")
frames = animate(RenderJob(traces=(0.0,)), scene, 24, OUT / "square_frames")
print(f"wrote square.svg, catenary_track.svg and {len(frames)} frames to {OUT}")
