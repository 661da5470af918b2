"""A triangle wheel on its own road digs into the next arch.

Run:  python3 demos/triangle_crash.py
"""

from pathlib import Path

from roadwheel import RenderJob, crash_fraction, detect_crashes, make_scene, make_wheel, render_svg
from roadwheel.kinematics import default_phis

for sides in (3, 4, 5):
    scene = make_scene(make_wheel("regular_polygon", sides=sides))
    phis = default_phis(scene)[::4]
    events = detect_crashes(scene, phis, crash_tol=1e-6)
    deepest = max((e.depth for e in events), default=0.0)
    print(f"{sides} sides: {len(events):5d} crash samples, share of positions "
          f"{crash_fraction(events, phis):.2f}, deepest {deepest:.3f}")

scene = make_scene(make_wheel("regular_polygon", sides=3))
out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)
render_svg(RenderJob(wheel_at_phi=(0.6,), crashes=True, crash_tol=1e-6), scene, out / "triangle.svg")
