"""Matching arc lengths does not make rolling.

The line wheel r = sec(theta) is spun twice as fast as it should be and
slid along y = -1 by 2 tan(phi/2).  Every contact point is exactly as far
along the road as along the wheel, yet the wheel slips.

Run:  python3 demos/arc_length_is_not_enough.py
"""

import numpy as np

from roadwheel import make_scene, make_wheel, noslip_report, run_section4_counterexample
from roadwheel.validation import canonical_law

rep = run_section4_counterexample(thetas=np.linspace(0, np.pi / 3, 7))
print(f"arc lengths agree to {rep.arc_length_max_err:.1e}")
for t, r in zip(rep.thetas, rep.residuals):
    print(f"  theta = {t:.4f}  speed of the contact point = {r:.6f}")
print("slipping:", rep.slipping)

scene = make_scene(make_wheel("line_secant"), (-1.3, 1.3))
good = noslip_report(scene.wheel, canonical_law(scene), np.linspace(-1.3, 1.3, 500))
print(f"the same wheel on its catenary: worst speed {good.max_residual:.1e} ({good.verdict})")
