"""Roads for polar wheels, wheels for roads, and the rolling between them."""

from .errors import (
    BadParameter,
    NonPositiveRadius,
    NotRectifiableHere,
    OutOfDomain,
    OutOfRange,
    RangeExceeded,
    RoadAboveAxis,
    RoadWheelError,
    ToleranceNotMet,
)
from .geom import Point2, RigidPose, carried_velocity, pose_apply, rotate_cw
from .kinematics import (
    CrashEvent,
    RollScene,
    TracePath,
    center_path,
    contact_point,
    crash_fraction,
    detect_crashes,
    make_scene,
    rolled_pose,
    rolled_wheel_samples,
    trace_point,
)
from .render import RenderJob, animate, export_csv, read_csv, render_svg
from .roads import (
    RoadCurve,
    RoadFunction,
    SolverConfig,
    arc_length_road,
    arc_length_wheel,
    road_height,
    road_slope,
    solve_forward,
    solve_inverse,
    theta_of_x,
)
from .validation import (
    RollingLaw,
    canonical_law,
    noslip_report,
    noslip_residual,
    run_section4_counterexample,
    section4_law,
    verify_corollaries,
    verify_parabola_congruence,
)
from .wheels import WheelSpec, eval_r, eval_r_rate, make_wheel, wheel_point

__version__ = "0.1.0"

__all__ = [
    "BadParameter",
    "CrashEvent",
    "NonPositiveRadius",
    "NotRectifiableHere",
    "OutOfDomain",
    "OutOfRange",
    "Point2",
    "RangeExceeded",
    "RenderJob",
    "RigidPose",
    "RoadAboveAxis",
    "RoadCurve",
    "RoadFunction",
    "RoadWheelError",
    "RollScene",
    "RollingLaw",
    "SolverConfig",
    "ToleranceNotMet",
    "TracePath",
    "WheelSpec",
    "animate",
    "arc_length_road",
    "arc_length_wheel",
    "canonical_law",
    "carried_velocity",
    "center_path",
    "contact_point",
    "crash_fraction",
    "detect_crashes",
    "eval_r",
    "eval_r_rate",
    "export_csv",
    "make_scene",
    "make_wheel",
    "noslip_report",
    "noslip_residual",
    "pose_apply",
    "read_csv",
    "render_svg",
    "road_height",
    "road_slope",
    "rolled_pose",
    "rolled_wheel_samples",
    "rotate_cw",
    "run_section4_counterexample",
    "section4_law",
    "solve_forward",
    "solve_inverse",
    "theta_of_x",
    "trace_point",
    "verify_corollaries",
    "verify_parabola_congruence",
    "wheel_point",
]
