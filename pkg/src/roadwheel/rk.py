"""Embedded Runge-Kutta 5(4) pair (Dormand-Prince) for scalar ODEs.

The same kernel integrates ``x' = r(theta)`` for the forward road and
``x' = -f(x)`` for the inverse problem.  ``step`` is elementwise over numpy
arrays, which is what the road's dense evaluation relies on.
"""

import numpy as np

from .errors import ToleranceNotMet

C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0)
A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
B = A[6] + (0.0,)
# fifth-order weights minus the embedded fourth-order weights
E = (71 / 57600, 0.0, -71 / 16695, 71 / 1920, -17253 / 339200, 22 / 525, -1 / 40)



class LeftInterval(Exception):
    """Raised by a right-hand side whose state has left its valid interval.

    ``integrate`` fills in ``theta`` with the last accepted node.
    """

    theta = None


SAFETY = 0.9
MIN_FACTOR = 0.2
MAX_FACTOR = 5.0


def step(rhs, t, x, h):
    """One Dormand-Prince step; returns ``(x_new, error_estimate)``."""
    k = [rhs(t, x)]
    for i in range(1, 7):
        xi = x + h * sum(a * kj for a, kj in zip(A[i], k) if a)
        k.append(rhs(t + C[i] * h, xi))
    x_new = x + h * sum(b * kj for b, kj in zip(B, k) if b)
    err = h * sum(e * kj for e, kj in zip(E, k) if e)
    return x_new, err


def integrate(rhs, t0, x0, t_end, abs_tol, rel_tol, max_step, stops=(), max_steps=1_000_000):
    """Adaptive integration from ``t0`` to ``t_end`` (either direction).

    Steps never exceed ``max_step`` and land exactly on every entry of
    ``stops`` between the end points.  Returns arrays ``(ts, xs)`` of the
    accepted nodes, starting with ``(t0, x0)``.
    """
    direction = 1.0 if t_end >= t0 else -1.0
    marks = sorted((s for s in stops if direction * (s - t0) > 0 and direction * (t_end - s) > 0),
                   key=lambda s: direction * s)
    marks.append(t_end)

    ts, xs = [t0], [x0]
    t, x = t0, x0
    h = max_step
    for target in marks:
        while direction * (target - t) > 0:
            if len(ts) > max_steps:
                raise ToleranceNotMet(f"more than {max_steps} steps between {t0} and {t_end}")
            remaining = abs(target - t)
            h = min(h, max_step)
            # absorb rounding slivers instead of taking a ~1e-13 landing step
            last = h >= remaining * (1.0 - 1e-8)
            hh = direction * (remaining if last else h)
            try:
                x_new, err = step(rhs, t, x, hh)
            except LeftInterval as exc:
                exc.theta = t
                raise
            scale = abs_tol + rel_tol * max(abs(x), abs(x_new))
            ratio = abs(err) / scale
            if not np.isfinite(ratio):
                ratio = np.inf
            if ratio <= 1.0:
                t = target if last else t + hh
                x = x_new
                ts.append(t)
                xs.append(x)
            factor = MAX_FACTOR if ratio == 0 else SAFETY * ratio ** -0.2
            proposed = abs(hh) * min(MAX_FACTOR, max(MIN_FACTOR, factor))
            # a short landing step says nothing about the step size to come
            h = max(h, proposed) if (last and ratio <= 1.0) else proposed
            if h < 1e-14 * max(1.0, abs(t)):
                raise ToleranceNotMet(f"step size underflow near t = {t:.17g}")
    return np.array(ts), np.array(xs, dtype=float)


def fixed_quadrature(r, t0, t_end, max_step):
    """Integrate ``x' = r(t)`` with classical RK4 on an equal-step grid.

    With no state feedback RK4 reduces to Simpson's rule, so every stage is
    evaluated in one vectorised call.  Used for wheels with no smoothness
    beyond continuity, where local error estimates carry no information.
    """
    n = max(1, int(np.ceil(abs(t_end - t0) / max_step - 1e-9)))
    ts = np.linspace(t0, t_end, n + 1)
    mids = 0.5 * (ts[:-1] + ts[1:])
    rt, rm = r(ts), r(mids)
    h = np.diff(ts)
    incr = h / 6.0 * (rt[:-1] + 4.0 * rm + rt[1:])
    xs = np.concatenate(([0.0], np.cumsum(incr)))
    return ts, xs
