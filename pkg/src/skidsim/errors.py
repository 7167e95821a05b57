"""Exception hierarchy for the skid model.

Singular evaluations (division by a vanishing yaw rate, course angle or
denominator) are kept apart from plain invalid input so callers can map them
to different exit codes.
"""


class SkidModelError(ValueError):
    """Base class for all model errors."""

    #: model symbol the error refers to, used in CLI messages
    symbol = None

    def __init__(self, message, symbol=None):
        super().__init__(message)
        if symbol is not None:
            self.symbol = symbol


class InvalidParams(SkidModelError):
    """Vehicle or environment parameters violate a physical precondition."""


class InvalidState(SkidModelError):
    """Motion state outside the domain of the model."""


class InvalidSlip(SkidModelError):
    """Drive-wheel slip outside [0, 1]."""

    symbol = "s_x"


class SingularError(SkidModelError):
    """Evaluation hits a singularity of the equations."""


class DegenerateState(SingularError):
    symbol = "v_x1"


class SingularYawRate(SingularError):
    symbol = "omega_z"


class SingularCourseAngle(SingularError):
    symbol = "theta_c"


class SingularSlipAngle(SingularError):
    symbol = "delta_1"


class SingularDenominator(SingularError):
    symbol = "D"


class SingularInBracket(SingularError):
    """Root search could not step around a singular point."""

    symbol = "v_x1"


class SimulationHalted(SingularError):
    """Integration stopped; ``state`` holds the last good state."""

    def __init__(self, message, state=None, cause=None):
        super().__init__(message, getattr(cause, "symbol", None))
        self.state = state
        self.cause = cause
