"""Command line entry point ``roadwheel``.

Exit codes: 0 success, 1 a validation check failed, 2 usage or parameter
error, 3 numerical failure.  Diagnostics go to stderr; data goes to the
requested files or to stdout.
"""

import argparse
import sys
from pathlib import Path

import numpy as np

from .errors import BadParameter, NonPositiveRadius, RoadWheelError
from .kinematics import crash_fraction, default_phis, detect_crashes, make_scene, trace_point
from .render import (
    RenderJob,
    animate,
    csv_text,
    export_csv,
    render_svg,
    render_theta_x,
)
from .roads import SolverConfig
from .validation import (
    FAIL,
    SLIPPING,
    canonical_law,
    noslip_report,
    run_section4_counterexample,
    verify_corollaries,
)
from .wheels import make_wheel

EXIT_OK, EXIT_FAILED_CHECK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3

COMMANDS = ("road", "wheel", "trace", "validate", "crashes", "render", "animate")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = _Parser(prog="roadwheel", description="Roads for polar wheels, and back.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--preset", default=None)
        p.add_argument("--k", type=float, default=None)
        p.add_argument("--d", type=float, default=None)
        p.add_argument("--sides", type=int, default=None)
        p.add_argument("--apothem", type=float, default=None)
        p.add_argument("--terms", type=int, default=None)
        p.add_argument("--margin", type=float, default=None)
        p.add_argument("--theta-min", type=float, default=None)
        p.add_argument("--theta-max", type=float, default=None)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--law", choices=("canonical", "section4"), default=None)
        p.add_argument("--fd", action="store_true", default=None,
                       help="finite-difference tau' in the canonical law")
        p.add_argument("--mark", type=float, action="append", default=None)
        p.add_argument("--phi", type=float, action="append", default=None)
        p.add_argument("--frames", type=int, default=None)
        p.add_argument("--samples", type=int, default=None)
        p.add_argument("--center", action="store_true", default=None)
        p.add_argument("--crashes", action="store_true", default=None)
        p.add_argument("--plot", choices=("scene", "theta-x"), default=None)
        p.add_argument("--csv", default=None)
        p.add_argument("--svg", default=None)
        p.add_argument("--out-dir", default=None)
        p.add_argument("--config", default=None)
    return parser


DEFAULTS = {
    "preset": "unit-circle",
    "law": "canonical",
    "fd": False,
    "frames": 24,
    "samples": 400,
    "center": False,
    "crashes": False,
    "plot": "scene",
}


def read_config(path):
    """``key = value`` lines; ``#`` starts a comment."""
    out = {}
    for n, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{n}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out


def _merge_config(args, parser):
    if args.config:
        sub = parser._subparsers._group_actions[0].choices[args.command]
        actions = {a.dest: a for a in sub._actions}
        for key, value in read_config(args.config).items():
            if key not in actions or key in ("command", "config"):
                raise UsageError(f"unknown config key {key!r}")
            if getattr(args, key) is not None:
                continue  # flags win
            action = actions[key]
            if isinstance(action, argparse._StoreTrueAction):
                value = value.lower() in ("1", "true", "yes", "on")
            elif isinstance(action, argparse._AppendAction):
                value = [action.type(v) for v in value.split(",")]
            else:
                value = action.type(value) if action.type else value
                if action.choices and value not in action.choices:
                    raise UsageError(f"config {key}: {value!r} not in {action.choices}")
            setattr(args, key, value)
    for key, value in DEFAULTS.items():
        if getattr(args, key) is None:
            setattr(args, key, value)
    return args


def wheel_from_args(args):
    params = {}
    for key in ("k", "d", "sides", "apothem", "terms"):
        v = getattr(args, key)
        if v is not None:
            params[key] = v
    if args.margin is not None:
        params["domain_margin"] = args.margin
    try:
        return make_wheel(args.preset, **params)
    except TypeError as exc:
        raise BadParameter(f"preset {args.preset!r} does not take these parameters: {exc}")
    except NonPositiveRadius as exc:
        raise BadParameter(str(exc))


def scene_from_args(args, wheel):
    lo = wheel.lo if args.theta_min is None else args.theta_min
    hi = wheel.hi if args.theta_max is None else args.theta_max
    return make_scene(wheel, (lo, hi), SolverConfig())


def _emit(data, args, out):
    if args.csv:
        export_csv(data, args.csv)
    else:
        out.write(csv_text(data))


def cmd_road(args, out):
    scene = scene_from_args(args, wheel_from_args(args))
    _emit(scene.road, args, out)
    return EXIT_OK


def cmd_wheel(args, out):
    wheel = wheel_from_args(args)
    lo = wheel.lo if args.theta_min is None else args.theta_min
    hi = wheel.hi if args.theta_max is None else args.theta_max
    t = np.linspace(lo, hi, args.samples)
    r = wheel.radius(t)
    _emit({"theta": t, "x": r * np.sin(t), "y": -r * np.cos(t), "r": r}, args, out)
    return EXIT_OK


def cmd_trace(args, out):
    scene = scene_from_args(args, wheel_from_args(args))
    mark = (args.mark or [0.0])[0]
    tr = trace_point(scene, mark, np.linspace(*scene.range, args.samples))
    _emit(tr, args, out)
    return EXIT_OK


def _line(out, name, err, verdict):
    shown = "n/a" if err is None else f"{err:.3e}"
    out.write(f"{name} {shown} {verdict}\n")


def cmd_validate(args, out):
    if args.law == "section4":
        if args.preset.replace("-", "_") != "line_secant":
            raise UsageError("the section4 law is defined on the line-secant wheel only")
        rep = run_section4_counterexample(tol=args.tol or 1e-9)
        _line(out, "arc_length_equal", rep.arc_length_max_err,
              "pass" if rep.arc_length_equal else FAIL)
        _line(out, "no_slip", rep.max_residual, SLIPPING if rep.slipping else "no_slip")
        return EXIT_FAILED_CHECK if (rep.slipping or not rep.arc_length_equal) else EXIT_OK

    scene = scene_from_args(args, wheel_from_args(args))
    law = canonical_law(scene, finite_difference=args.fd)
    lo, hi = scene.range
    inset = 2e-6 if args.fd else 0.0
    ns = noslip_report(scene.wheel, law, np.linspace(lo + inset, hi - inset, 500), tol=args.tol)
    _line(out, "no_slip", ns.max_residual, ns.verdict)
    cr = verify_corollaries(scene)
    _line(out, "center_above_contact", cr.center_above_max_err, cr.verdicts["center_above_contact"])
    _line(out, "arc_length", cr.arc_length_max_err, cr.verdicts["arc_length"])
    _line(out, "slope", cr.slope_max_err, cr.verdicts["slope"])
    failed = ns.verdict == SLIPPING or not cr.passed
    return EXIT_FAILED_CHECK if failed else EXIT_OK


def cmd_crashes(args, out):
    scene = scene_from_args(args, wheel_from_args(args))
    phis = default_phis(scene)
    events = detect_crashes(scene, phis, crash_tol=args.tol or 1e-9)
    if args.csv and events:
        export_csv({"phi": [e.phi for e in events], "theta_pen": [e.theta_pen for e in events],
                    "depth": [e.depth for e in events]}, args.csv)
    elif args.csv:
        Path(args.csv).write_text("phi,theta_pen,depth\n")
    out.write(f"events {len(events)}\n")
    out.write(f"crash_fraction {crash_fraction(events, phis):.6f}\n")
    return EXIT_OK


def _job(args):
    return RenderJob(
        wheel_at_phi=tuple(args.phi or ()),
        traces=tuple(args.mark or ()),
        center_path=args.center,
        crashes=args.crashes,
    )


def cmd_render(args, out):
    if not args.svg:
        raise UsageError("render needs --svg PATH")
    scene = scene_from_args(args, wheel_from_args(args))
    if args.plot == "theta-x":
        render_theta_x(scene, args.svg)
    else:
        render_svg(_job(args), scene, args.svg)
    return EXIT_OK


def cmd_animate(args, out):
    if not args.out_dir:
        raise UsageError("animate needs --out-dir PATH")
    scene = scene_from_args(args, wheel_from_args(args))
    paths = animate(_job(args), scene, args.frames, args.out_dir)
    out.write(f"frames {len(paths)}\n")
    return EXIT_OK


HANDLERS = {name: globals()["cmd_" + name] for name in COMMANDS}


def run_cli(argv=None, out=None, err=None):
    """Run one command; returns the exit code instead of exiting."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = _merge_config(parser.parse_args(argv), parser)
        return HANDLERS[args.command](args, out)
    except (UsageError, BadParameter) as exc:
        err.write(f"roadwheel: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"roadwheel: {exc}\n")
        return EXIT_USAGE
    except RoadWheelError as exc:
        err.write(f"roadwheel: numerical failure: {exc}\n")
        return EXIT_NUMERIC
    except SystemExit as exc:  # --help
        return exc.code or EXIT_OK


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
