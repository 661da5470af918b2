import io
import re
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from roadwheel import RenderJob, animate, export_csv, read_csv, render_svg, trace_point
from roadwheel.cli import run_cli
from roadwheel.render import (
    SAWTOOTH_TOOTH_LENGTH,
    SQUARE_ARCH_WIDTH,
    catenary_track,
    format_number,
    sawtooth_track,
    tooth_length,
)

SVG = "{http://www.w3.org/2000/svg}"


def test_number_text():
    assert format_number(np.pi) == "3.141592653589793"
    assert format_number(0.0) == "0"
    assert format_number(-1.0) == "-1"


def test_csv_round_trip_is_bit_exact(secant_scene, tmp_path):
    path = export_csv(secant_scene.road, tmp_path / "road.csv")
    header, (t, x, y) = read_csv(path)
    assert header == ("theta", "x", "y")
    assert np.array_equal(t, secant_scene.road.thetas)
    assert np.array_equal(x, secant_scene.road.xs)
    assert np.array_equal(y, secant_scene.road.ys)


def test_trace_csv_columns(circle_scene, tmp_path):
    tr = trace_point(circle_scene, 0.0, np.linspace(0, 1, 7))
    header, cols = read_csv(export_csv(tr, tmp_path / "t.csv"))
    assert header == ("phi", "px", "py")
    assert len(cols[0]) == 7


def test_empty_curve_refused(tmp_path):
    with pytest.raises(ValueError):
        export_csv({"x": []}, tmp_path / "e.csv")


def _svg(path):
    root = ET.parse(path).getroot()
    assert root.tag == SVG + "svg"
    return root


def test_svg_has_requested_layers(square_scene, tmp_path):
    job = RenderJob(wheel_at_phi=(0.3,), traces=(0.0,), center_path=True)
    root = _svg(render_svg(job, square_scene, tmp_path / "s.svg"))
    kinds = [e.get("class") for e in root.iter(SVG + "polyline")]
    assert kinds == ["road", "wheel", "trace", "center"]
    assert len(root.get("viewBox").split()) == 4


def test_svg_flips_y(square_scene, tmp_path):
    root = _svg(render_svg(RenderJob(), square_scene, tmp_path / "s.svg"))
    g = root.find(SVG + "g")
    assert re.search(r"scale\(100,-100\)", g.get("transform"))


def test_crash_markers(tmp_path):
    from roadwheel import make_scene, make_wheel
    scene = make_scene(make_wheel("regular_polygon", sides=3))
    job = RenderJob(wheel_at_phi=(0.5,), crashes=True, crash_tol=1e-6)
    root = _svg(render_svg(job, scene, tmp_path / "c.svg"))
    assert len(list(root.iter(SVG + "circle"))) > 0


def test_animation_frames_share_viewport(circle_scene, tmp_path):
    paths = animate(RenderJob(traces=(0.0,)), circle_scene, 4, tmp_path / "frames")
    assert [p.name for p in paths] == [f"frame_{i:04d}.svg" for i in range(4)]
    boxes = {_svg(p).get("viewBox") for p in paths}
    assert len(boxes) == 1


def test_tracks():
    xs, ys = catenary_track(3)
    assert xs.max() - xs.min() == pytest.approx(3 * SQUARE_ARCH_WIDTH, rel=1e-9)
    assert np.min(ys) == pytest.approx(-np.sqrt(2), rel=1e-9)
    assert np.max(ys) == pytest.approx(-1.0, abs=1e-4)
    assert tooth_length(1.0, np.pi / 4) == pytest.approx(SAWTOOTH_TOOTH_LENGTH, rel=1e-15)
    xs, ys = sawtooth_track(2)
    assert ys.min() == pytest.approx(-np.exp(np.pi / 2), rel=1e-9)


# command line

def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_cli_road_csv(tmp_path):
    path = tmp_path / "out.csv"
    code, _, _ = cli("road", "--preset", "line-secant", "--theta-max", "1.2", "--csv", str(path))
    assert code == 0
    header, (t, x, y) = read_csv(path)
    assert t[-1] == 1.2
    assert np.max(np.abs(y + np.cosh(x))) < 1e-9


def test_cli_double_spin_law_fails_check():
    code, out, _ = cli("validate", "--preset", "line-secant", "--law", "section4")
    assert code == 1
    assert "slipping" in out


def test_cli_bad_parameter():
    code, _, err = cli("road", "--preset", "weierstrass", "--terms", "0")
    assert code == 2
    assert "terms" in err


def test_cli_unknown_flag_and_command():
    assert cli("road", "--bogus")[0] == 2
    assert cli("fly")[0] == 2


def test_cli_validate_square_passes():
    code, out, _ = cli("validate", "--preset", "regular-polygon", "--sides", "4")
    assert code == 0
    assert out.splitlines()[0].endswith("no_slip")


def test_cli_wheel_and_trace_to_stdout():
    code, out, _ = cli("wheel", "--preset", "unit-circle", "--samples", "5")
    assert code == 0 and out.startswith("theta,x,y,r\n") and len(out.splitlines()) == 6
    code, out, _ = cli("trace", "--preset", "unit-circle", "--samples", "3")
    assert code == 0 and out.startswith("phi,px,py\n")


def test_cli_crashes_reports_fraction(tmp_path):
    code, out, _ = cli("crashes", "--preset", "regular-polygon", "--sides", "3", "--tol", "1e-6",
                       "--csv", str(tmp_path / "c.csv"))
    assert code == 0
    frac = float(out.split("crash_fraction")[1])
    assert 0 < frac < 1


def test_cli_config_file_and_flag_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# square run\npreset = regular-polygon\nsides = 3\nsamples = 9\n")
    code, out, _ = cli("wheel", "--config", str(cfg), "--samples", "3")
    assert code == 0
    assert len(out.splitlines()) == 4
    # theta = -pi is a triangle corner, at twice the apothem
    assert float(out.splitlines()[1].split(",")[3]) == pytest.approx(2.0, rel=1e-14)


def test_cli_config_unknown_key(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("wheels = 3\n")
    assert cli("road", "--config", str(cfg))[0] == 2


def test_cli_render_and_animate(tmp_path):
    code, _, _ = cli("render", "--preset", "regular-polygon", "--phi", "0.3", "--mark", "0",
                     "--center", "--svg", str(tmp_path / "a.svg"))
    assert code == 0
    _svg(tmp_path / "a.svg")
    code, out, _ = cli("animate", "--preset", "unit-circle", "--frames", "3",
                       "--out-dir", str(tmp_path / "f"))
    assert code == 0 and out.strip() == "frames 3"
    assert cli("render", "--preset", "unit-circle")[0] == 2


def test_cli_theta_x_plot(tmp_path):
    code, _, _ = cli("render", "--preset", "poinsot-sech", "--plot", "theta-x",
                     "--svg", str(tmp_path / "tx.svg"))
    assert code == 0
