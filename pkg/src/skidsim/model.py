"""Planar skid model of a rear-drive vehicle in traction mode.

All quantities are SI (m, kg, s, N, rad). The body frame has x1 pointing
forward and y1 to the side; a skid is described by a positive yaw rate
``omega_z`` with non-negative front slip angle ``delta_1`` and rear reaction
angle ``gamma_b``.

The central output is the yaw angular acceleration ``eps_z = d(omega_z)/dt``
obtained in closed form from the lateral force balance, the yaw moment balance
and a grip-limited rear traction reaction whose vertical load depends on the
longitudinal acceleration (and therefore on ``eps_z`` itself).
:func:`yaw_accel_oracle` solves the same balances as a 2x2 linear system and
serves as an independent check of the closed form.
"""
import math
from dataclasses import asdict, dataclass, field, replace

import numpy as np

from .errors import (
    DegenerateState,
    InvalidParams,
    InvalidSlip,
    InvalidState,
    SingularCourseAngle,
    SingularDenominator,
    SingularSlipAngle,
    SingularYawRate,
)

#: smallest admissible |omega_z| [rad/s]; the equations divide by the yaw rate
OMEGA_MIN = 1e-6
#: denominator guard relative to a**2 + i_z**2
D_MIN_REL = 1e-9
#: |cos(theta_c)| below this is treated as a right-angle course deviation
COS_MIN = 1e-12
#: |cos(delta_1)| below this makes the front reaction indeterminate
COS_DELTA_MIN = 1e-9


def inertia_conversions(m_a, i_z=None, I_zc=None):
    """Return ``(i_z, I_zc)`` from the mass and exactly one of the two.

    ``i_z = sqrt(I_zc / m_a)`` is the radius of inertia about the vertical
    axis through the centre of mass.
    """
    if (i_z is None) == (I_zc is None):
        raise InvalidParams("give exactly one of i_z and I_zc", "i_z")
    if not m_a > 0:
        raise InvalidParams(f"mass must be positive, got {m_a}", "m_a")
    if i_z is not None:
        if not i_z > 0:
            raise InvalidParams(f"radius of inertia must be positive, got {i_z}", "i_z")
        return float(i_z), m_a * i_z * i_z
    if not I_zc > 0:
        raise InvalidParams(f"yaw moment of inertia must be positive, got {I_zc}", "I_zc")
    return math.sqrt(I_zc / m_a), float(I_zc)


@dataclass(frozen=True)
class VehicleParams:
    """Geometry, mass, inertia and drag constants.

    ``L``, ``I_zc`` and ``h_w`` are derived when omitted (``a + b``,
    ``m_a * i_z**2`` and ``h``). Cross-field consistency (``L == a + b``,
    ``I_zc == m_a * i_z**2``, drag factor vs. ``c_X``/``F``) is not enforced
    here; see :func:`skidsim.config.param_invariants`.
    """

    m_a: float
    a: float
    b: float
    h: float
    r_o: float
    i_z: float
    kF: float
    L: float = None
    I_zc: float = None
    h_w: float = None
    F: float = None
    c_X: float = None
    c_Y: float = 0.0
    f_roll: float = 0.015

    def __post_init__(self):
        for name in ("m_a", "a", "b", "i_z"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidParams(f"{name} must be positive and finite, got {value}", name)
        if not (math.isfinite(self.kF) and self.kF >= 0):
            raise InvalidParams(f"kF must be non-negative, got {self.kF}", "kF")
        if not self.r_o >= 0:
            raise InvalidParams(f"wheel radius must be non-negative, got {self.r_o}", "r_o")
        if not self.h > self.r_o:
            raise InvalidParams(
                f"centre-of-mass height h={self.h} must exceed wheel radius r_o={self.r_o}", "h")
        if self.L is None:
            object.__setattr__(self, "L", self.a + self.b)
        elif not self.L > 0:
            raise InvalidParams(f"wheelbase must be positive, got {self.L}", "L")
        if self.I_zc is None:
            object.__setattr__(self, "I_zc", self.m_a * self.i_z ** 2)
        elif not self.I_zc > 0:
            raise InvalidParams(f"I_zc must be positive, got {self.I_zc}", "I_zc")
        if self.h_w is None:
            object.__setattr__(self, "h_w", self.h)
        if self.c_Y != 0 and self.F is None:
            raise InvalidParams("lateral drag c_Y needs the frontal area F", "F")

    @classmethod
    def build(cls, m_a, a=None, b=None, L=None, i_z=None, I_zc=None, **kwargs):
        """Construct from any two of ``a``, ``b``, ``L`` and one or both of
        ``i_z``/``I_zc``. Values given for all three lengths are kept as is.
        """
        if sum(v is not None for v in (a, b, L)) < 2:
            raise InvalidParams("need at least two of a, b, L", "L")
        if a is None:
            a = L - b
        elif b is None:
            b = L - a
        if i_z is None:
            i_z, _ = inertia_conversions(m_a, I_zc=I_zc)
        return cls(m_a=m_a, a=a, b=b, L=L, i_z=i_z, I_zc=I_zc, **kwargs)

    @property
    def lever(self):
        """Load-transfer lever arm ``h - r_o`` [m]."""
        return self.h - self.r_o


@dataclass(frozen=True)
class Environment:
    phi: float
    rho: float = 1.22
    g: float = 9.81
    phi_max: float = 1.5

    def __post_init__(self):
        if not (0 <= self.phi <= self.phi_max):
            raise InvalidParams(f"grip coefficient phi={self.phi} outside [0, {self.phi_max}]", "phi")
        if not self.rho > 0:
            raise InvalidParams(f"air density must be positive, got {self.rho}", "rho")
        if not self.g > 0:
            raise InvalidParams(f"gravity must be positive, got {self.g}", "g")

    def with_phi(self, phi):
        return replace(self, phi=phi)


@dataclass(frozen=True)
class MotionState:
    """Instantaneous kinematic state at skid onset (or along a trajectory)."""

    v_x1: float
    omega_z: float
    delta_1: float = 0.0
    gamma_b: float = 0.0
    s_x: float = 0.0

    def __post_init__(self):
        for name in ("v_x1", "omega_z", "delta_1", "gamma_b", "s_x"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidState(f"{name} must be finite", name)
        if self.v_x1 < 0:
            raise InvalidState(f"longitudinal speed must be non-negative, got {self.v_x1}", "v_x1")
        if abs(self.delta_1) >= math.pi / 2:
            raise InvalidState(f"|delta_1| must be below pi/2, got {self.delta_1}", "delta_1")
        if abs(self.gamma_b) >= math.pi / 2:
            raise InvalidState(f"|gamma_b| must be below pi/2, got {self.gamma_b}", "gamma_b")
        if not 0 <= self.s_x <= 1:
            raise InvalidSlip(f"slip s_x={self.s_x} outside [0, 1]")

    def replace(self, **changes):
        return replace(self, **changes)


# Reference rear-drive car used by the sweep presets. The grip coefficient is
# not part of the vehicle data; 0.8 (dry asphalt) is a default.
REFERENCE_VEHICLE = VehicleParams(m_a=1500.0, a=1.2, b=1.3, L=2.5, h=0.5, r_o=0.29, i_z=1.3, kF=0.58)
REFERENCE_ENVIRONMENT = Environment(phi=0.8, rho=1.22, g=9.81)


def _require_yaw_rate(omega_z):
    if not abs(omega_z) >= OMEGA_MIN:
        raise SingularYawRate(f"|omega_z| = {abs(omega_z):.3g} rad/s is below {OMEGA_MIN:g}")


def course_angle(state, params):
    """Angle between the centre-of-mass normal acceleration and the y1 axis."""
    if state.v_x1 <= 0:
        raise DegenerateState("course angle is undefined at zero speed")
    return math.atan(math.tan(state.delta_1) + params.a * state.omega_z / state.v_x1)


def accel_components(state, params, eps_z):
    """Normal and tangential acceleration of the centre of mass."""
    _require_yaw_rate(state.omega_z)
    cos_theta = math.cos(course_angle(state, params))
    if abs(cos_theta) < COS_MIN:
        raise SingularCourseAngle("course angle reaches pi/2")
    a_n = state.omega_z * state.v_x1 / cos_theta
    a_t = eps_z * state.v_x1 / (state.omega_z * cos_theta)
    return a_n, a_t


def body_accelerations(state, params, eps_z):
    """Longitudinal and lateral acceleration ``(d2x1/dt2, d2y1/dt2)``."""
    _require_yaw_rate(state.omega_z)
    w, v = state.omega_z, state.v_x1
    tan_d = math.tan(state.delta_1)
    ratio = v / w
    ax = params.a * w * w + w * v * tan_d + eps_z * ratio
    ay = params.a * eps_z + eps_z * ratio * tan_d - w * v
    return ax, ay


def aero_forces(v_x1, params, env):
    """Longitudinal and lateral aerodynamic forces, quadratic in speed.

    The longitudinal force uses the lumped factor ``kF``; the lateral one
    ``c_Y * rho/2 * F``.
    """
    v2 = v_x1 * v_x1
    p_x = params.kF * v2
    p_y = params.c_Y * 0.5 * env.rho * params.F * v2 if params.c_Y else 0.0
    return p_x, p_y


def rear_vertical_reaction(state, params, env, ax_body):
    """Total normal load on the rear axle, with aerodynamic and inertial
    load transfer. A negative result means the rear wheels lift off and the
    model no longer applies; callers check the sign.
    """
    p_w = params.kF * state.v_x1 ** 2
    p_j = params.m_a * ax_body
    return (params.m_a * env.g * params.a / params.L
            + p_w * (params.h_w - params.r_o) / params.L
            + p_j * (params.h - params.r_o) / params.L)


def rear_traction_reaction(state, params, env, eps_z):
    ax, _ = body_accelerations(state, params, eps_z)
    return env.phi * rear_vertical_reaction(state, params, env, ax)


def omega_factor(env, params, gamma_b):
    """``phi * cos(gamma_b) * (h - r_o)`` [m]."""
    return env.phi * math.cos(gamma_b) * (params.h - params.r_o)


def _denominator(state, params, env):
    _require_yaw_rate(state.omega_z)
    om = omega_factor(env, params, state.gamma_b)
    base = params.a ** 2 + params.i_z ** 2
    den = base + state.v_x1 / state.omega_z * (params.a * math.tan(state.delta_1) + om)
    if abs(den) < D_MIN_REL * base:
        raise SingularDenominator(f"denominator {den:.3g} vanishes")
    return den


def yaw_accel_terms(state, params, env):
    """Numerator and denominator of the closed-form yaw acceleration.

    Both are affine in ``omega_factor`` at fixed state.
    """
    den = _denominator(state, params, env)
    p = params
    w, v = state.omega_z, state.v_x1
    tan_d = math.tan(state.delta_1)
    om = omega_factor(env, p, state.gamma_b)
    _, p_wy = aero_forces(v, p, env)
    # h_w may differ from h: the drag term carries its own lever arm
    rot = p.a * w * w + w * v * tan_d + p.kF / p.m_a * v * v * (p.h_w - p.r_o) / p.lever
    num = p.a * (w * v + p_wy / p.m_a) - p.a * env.g * om / p.lever - rot * om
    return num, den


def yaw_angular_acceleration(state, params, env):
    """Yaw angular acceleration ``eps_z`` [rad/s^2] in closed form.

    Raises :class:`SingularYawRate` for ``|omega_z| < OMEGA_MIN`` and
    :class:`SingularDenominator` when the denominator vanishes.
    """
    num, den = yaw_accel_terms(state, params, env)
    return num / den


def yaw_accel_oracle(state, params, env):
    """Yaw acceleration from a direct solve of the lateral and yaw balances.

    The unknowns ``(eps_z, R_delta1)`` enter the lateral force balance and the
    yaw moment balance affinely once the rear reaction is expressed through
    the load transfer. The affine map is probed numerically and solved with
    ``numpy.linalg.solve``; the closed form is not used.
    """
    _denominator(state, params, env)
    cos_d = math.cos(state.delta_1)
    cos_g = math.cos(state.gamma_b)
    _, p_wy = aero_forces(state.v_x1, params, env)

    def residuals(eps, r_delta):
        ax, ay = body_accelerations(state, params, eps)
        r_b = env.phi * rear_vertical_reaction(state, params, env, ax)
        lateral = params.m_a * ay - (-r_delta * cos_d - r_b * cos_g + p_wy)
        yaw = params.I_zc * eps - (r_delta * params.a * cos_d - r_b * params.b * cos_g)
        return np.array([lateral, yaw])

    r0 = residuals(0.0, 0.0)
    jac = np.column_stack([residuals(1.0, 0.0) - r0, residuals(0.0, 1.0) - r0])
    eps, _ = np.linalg.solve(jac, -r0)
    return float(eps)


def front_lateral_reaction(state, params, env, eps_z):
    """Front-axle lateral reaction from the yaw moment balance."""
    cos_d = math.cos(state.delta_1)
    if abs(cos_d) < COS_DELTA_MIN:
        raise SingularSlipAngle("cos(delta_1) vanishes")
    r_b = rear_traction_reaction(state, params, env, eps_z)
    return (params.I_zc * eps_z + r_b * params.b * math.cos(state.gamma_b)) / (params.a * cos_d)


def lateral_residual(state, params, env, eps_z, r_delta1):
    """Imbalance of the lateral force equation [N]."""
    _, ay = body_accelerations(state, params, eps_z)
    r_b = rear_traction_reaction(state, params, env, eps_z)
    _, p_wy = aero_forces(state.v_x1, params, env)
    return params.m_a * ay - (-r_delta1 * math.cos(state.delta_1)
                              - r_b * math.cos(state.gamma_b) + p_wy)


def rolling_resistance(state, params, env, eps_z):
    """Front rolling resistance ``f_roll * R_z1`` with ``R_z1 = m g - R_z2``."""
    ax, _ = body_accelerations(state, params, eps_z)
    r_z2 = rear_vertical_reaction(state, params, env, ax)
    return params.f_roll * (params.m_a * env.g - r_z2)


def longitudinal_residual(state, params, env, eps_z, p_f1=None, r_delta1=None):
    """Imbalance of the longitudinal force equation [N].

    Diagnostic only: the yaw solution does not constrain the rolling
    resistance ``p_f1``, so this reports the imbalance implied by whatever
    value is supplied (default :func:`rolling_resistance`).
    """
    ax, _ = body_accelerations(state, params, eps_z)
    if p_f1 is None:
        p_f1 = rolling_resistance(state, params, env, eps_z)
    if r_delta1 is None:
        r_delta1 = front_lateral_reaction(state, params, env, eps_z)
    r_b = rear_traction_reaction(state, params, env, eps_z)
    p_wx, _ = aero_forces(state.v_x1, params, env)
    return params.m_a * ax - (-p_f1 + r_delta1 * math.sin(state.delta_1)
                              + r_b * math.sin(state.gamma_b) - p_wx)


@dataclass(frozen=True)
class SkidDerived:
    """Every intermediate quantity of one evaluation.

    ``theta_c``, ``a_c_n`` and ``a_c_t`` are NaN at zero speed, where the
    course angle is undefined.
    """

    eps_z: float
    theta_c: float
    a_c_n: float
    a_c_t: float
    ax_body: float
    ay_body: float
    p_w_x1: float
    p_w_y1: float
    p_j: float
    r_z2: float
    r_b: float
    omega_factor: float
    r_delta1: float
    notes: tuple = field(default=())

    @property
    def load_valid(self):
        return self.r_z2 >= 0

    @property
    def damping(self):
        return self.eps_z <= 0

    def as_dict(self):
        d = asdict(self)
        d.pop("notes")
        d["load_valid"] = self.load_valid
        return d


def skid_breakdown(state, params, env):
    """Evaluate ``eps_z`` and collect all intermediate quantities."""
    eps = yaw_angular_acceleration(state, params, env)
    if state.v_x1 > 0:
        theta = course_angle(state, params)
        a_n, a_t = accel_components(state, params, eps)
    else:
        theta = a_n = a_t = math.nan
    ax, ay = body_accelerations(state, params, eps)
    p_wx, p_wy = aero_forces(state.v_x1, params, env)
    r_z2 = rear_vertical_reaction(state, params, env, ax)
    notes = () if r_z2 >= 0 else ("rear axle unloaded (R_z2 < 0): outside model validity",)
    return SkidDerived(
        eps_z=eps,
        theta_c=theta,
        a_c_n=a_n,
        a_c_t=a_t,
        ax_body=ax,
        ay_body=ay,
        p_w_x1=p_wx,
        p_w_y1=p_wy,
        p_j=params.m_a * ax,
        r_z2=r_z2,
        r_b=env.phi * r_z2,
        omega_factor=omega_factor(env, params, state.gamma_b),
        r_delta1=front_lateral_reaction(state, params, env, eps),
        notes=notes,
    )
