"""Exception types raised across the package."""


class RoadWheelError(Exception):
    """Base class for every error raised by roadwheel."""


class BadParameter(RoadWheelError, ValueError):
    """A preset or configuration parameter violates its invariant."""


class NonPositiveRadius(RoadWheelError, ValueError):
    """A wheel radius evaluated to zero or a negative number."""


class OutOfDomain(RoadWheelError, ValueError):
    """An angle lies outside the wheel's domain."""


class OutOfRange(RoadWheelError, ValueError):
    """A query lies outside the sampled range of a road or scene."""


class ToleranceNotMet(RoadWheelError, ArithmeticError):
    """Adaptive refinement gave up before reaching the requested accuracy."""


class RoadAboveAxis(RoadWheelError, ValueError):
    """A road function is non-negative somewhere on its interval."""


class RangeExceeded(RoadWheelError, ArithmeticError):
    """An inverse integration left the road's x-interval.

    ``theta_reached`` holds the last angle at which the trajectory was
    still inside the interval.
    """

    def __init__(self, message, theta_reached):
        super().__init__(message)
        self.theta_reached = theta_reached


class NotRectifiableHere(RoadWheelError, ValueError):
    """Arc length was requested for a wheel that is only known to be continuous."""
