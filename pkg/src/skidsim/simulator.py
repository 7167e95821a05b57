"""Time-domain integration of a developing skid.

The yaw rate evolves with the closed-form yaw acceleration and the forward
speed with the matching longitudinal acceleration; slip angles and drive
slip are held at their initial values (open-loop, no driver). Heading and a
rough ground track are integrated alongside. The track assumes the velocity
points along the heading, which the model does not resolve, so treat x/y as
a visual aid only.
"""
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParams, SimulationHalted, SingularYawRate, SkidModelError
from .model import MotionState, body_accelerations, rear_vertical_reaction, yaw_angular_acceleration


@dataclass(frozen=True)
class SimConfig:
    dt: float = 1e-3
    t_end: float = 1.0
    stop_on_damped: bool = True
    record_every: int = 1

    def __post_init__(self):
        if not self.dt > 0:
            raise InvalidParams(f"dt must be positive, got {self.dt}", "dt")
        if not self.t_end > 0:
            raise InvalidParams(f"t_end must be positive, got {self.t_end}", "t_end")
        if int(self.record_every) != self.record_every or self.record_every < 1:
            raise InvalidParams("record_every must be an integer >= 1", "record_every")

    @property
    def n_steps(self):
        return max(1, int(round(self.t_end / self.dt)))


@dataclass(frozen=True)
class SimState:
    motion: MotionState
    psi: float = 0.0
    x: float = 0.0
    y: float = 0.0

    def vector(self):
        m = self.motion
        return np.array([m.omega_z, m.v_x1, self.psi, self.x, self.y])

    def with_vector(self, vec):
        w, v, psi, x, y = (float(c) for c in vec)
        return SimState(self.motion.replace(omega_z=w, v_x1=v), psi, x, y)


class Termination(str, enum.Enum):
    TIME_END = "TimeEnd"
    SKID_DAMPED = "SkidDamped"
    SINGULAR = "Singular"


@dataclass(frozen=True)
class TrajectoryRow:
    t: float
    omega_z: float
    v_x1: float
    psi: float
    x: float
    y: float
    eps_z: float
    ay_body: float
    r_b: float
    r_z2: float
    damping: bool


TRAJECTORY_COLUMNS = tuple(TrajectoryRow.__dataclass_fields__)


@dataclass(frozen=True)
class SimResult:
    rows: list
    reason: Termination
    final: SimState
    t_final: float
    t_cross: float = None  # interpolated zero crossing of the yaw rate
    message: str = ""


def derivative(state, params, env):
    """``(d omega_z/dt, d v_x1/dt)`` for a motion state.

    The speed derivative is the longitudinal body acceleration evaluated with
    the same yaw acceleration that is returned.
    """
    eps = yaw_angular_acceleration(state, params, env)
    ax, _ = body_accelerations(state, params, eps)
    return eps, ax


def skid_field(params, env):
    """Right-hand side on the full ``[omega_z, v_x1, psi, x, y]`` vector."""

    def field(s):
        d_omega, d_v = derivative(s.motion, params, env)
        v = s.motion.v_x1
        return np.array([d_omega, d_v, s.motion.omega_z, v * math.cos(s.psi), v * math.sin(s.psi)])

    return field


def rk4_step(f, y, dt):
    k1 = f(y)
    k2 = f(y + 0.5 * dt * k1)
    k3 = f(y + 0.5 * dt * k2)
    k4 = f(y + dt * k3)
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def step_rk4(state, params, env, dt, field=None):
    """Advance a :class:`SimState` by one classical Runge-Kutta step.

    ``field`` overrides the skid dynamics (maps a SimState to its derivative
    vector). Any failing stage raises :class:`SimulationHalted` carrying the
    unchanged input state.
    """
    field = field or skid_field(params, env)
    try:
        with np.errstate(over="raise", invalid="raise"):
            vec = rk4_step(lambda v: field(state.with_vector(v)), state.vector(), dt)
        return state.with_vector(vec)
    except (SkidModelError, FloatingPointError, OverflowError) as exc:
        raise SimulationHalted(f"integration halted: {exc}", state=state, cause=exc) from exc


def _row(t, s, params, env):
    m = s.motion
    eps = yaw_angular_acceleration(m, params, env)
    ax, ay = body_accelerations(m, params, eps)
    r_z2 = rear_vertical_reaction(m, params, env, ax)
    return TrajectoryRow(t=t, omega_z=m.omega_z, v_x1=m.v_x1, psi=s.psi, x=s.x, y=s.y,
                         eps_z=eps, ay_body=ay, r_b=env.phi * r_z2, r_z2=r_z2, damping=eps <= 0)


def simulate(initial, params, env, config=SimConfig(), field=None):
    """Integrate a skid from ``initial`` until ``t_end``, damping or a singularity.

    With ``stop_on_damped`` the run ends when the yaw rate changes sign. The
    crossing time is interpolated linearly between the bracketing steps, or,
    when the step itself cannot be evaluated because the yaw rate collapses
    inside it, along the last good yaw acceleration.
    """
    state = initial if isinstance(initial, SimState) else SimState(initial)
    dt = config.dt
    rows = []
    try:
        current = _row(0.0, state, params, env)
    except SkidModelError as exc:
        return SimResult(rows, Termination.SINGULAR, state, 0.0, message=str(exc))
    rows.append(current)
    sign0 = math.copysign(1.0, state.motion.omega_z)

    for i in range(config.n_steps):
        t = i * dt
        w, eps = current.omega_z, current.eps_z
        try:
            new = step_rk4(state, params, env, dt, field)
        except SimulationHalted as exc:
            # the yaw rate may collapse inside the step; extrapolate the last good slope
            crossing = sign0 * eps < 0 and sign0 * (w + eps * dt) <= 0
            if config.stop_on_damped and crossing:
                return SimResult(rows, Termination.SKID_DAMPED, state, t, t_cross=t + w / -eps)
            return SimResult(rows, Termination.SINGULAR, state, t, message=str(exc))
        if config.stop_on_damped and sign0 * new.motion.omega_z <= 0:
            w_new = new.motion.omega_z
            return SimResult(rows, Termination.SKID_DAMPED, state, t,
                             t_cross=t + dt * w / (w - w_new))
        try:
            new_row = _row((i + 1) * dt, new, params, env)
        except SingularYawRate as exc:
            # landed within OMEGA_MIN of zero while decaying
            if config.stop_on_damped and sign0 * eps < 0:
                w_new = new.motion.omega_z
                return SimResult(rows, Termination.SKID_DAMPED, new, t + dt,
                                 t_cross=t + dt + w_new / -eps)
            return SimResult(rows, Termination.SINGULAR, state, t, message=str(exc))
        except SkidModelError as exc:
            return SimResult(rows, Termination.SINGULAR, state, t, message=str(exc))
        state, current = new, new_row
        if (i + 1) % config.record_every == 0:
            rows.append(current)
    return SimResult(rows, Termination.TIME_END, state, config.n_steps * dt)
