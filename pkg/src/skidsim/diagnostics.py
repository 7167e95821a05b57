"""Self-checks of the model against its own balance equations."""
import math

import numpy as np

from .config import Check, param_invariants
from .errors import SingularError
from .model import (
    MotionState,
    accel_components,
    aero_forces,
    body_accelerations,
    course_angle,
    front_lateral_reaction,
    lateral_residual,
    longitudinal_residual,
    rear_traction_reaction,
    yaw_accel_oracle,
    yaw_angular_acceleration,
)

ORACLE_RTOL = 1e-9
IDENTITY_RTOL = 1e-10
CONSISTENCY_RTOL = 1e-8

# sampling box for randomized checks
GRID_RANGES = {
    "v_x1": (0.5, 35.0),
    "omega_z": (0.01, 0.5),
    "delta_1": (0.0, 0.15),
    "gamma_b": (0.0, 0.3),
    "phi": (0.05, 0.9),
}


def random_grid(n, seed=0):
    """``n`` random ``(MotionState, phi)`` pairs drawn uniformly from GRID_RANGES."""
    rng = np.random.default_rng(seed)
    cols = {k: rng.uniform(lo, hi, n) for k, (lo, hi) in GRID_RANGES.items()}
    return [
        (MotionState(float(cols["v_x1"][i]), float(cols["omega_z"][i]),
                     float(cols["delta_1"][i]), float(cols["gamma_b"][i])),
         float(cols["phi"][i]))
        for i in range(n)
    ]


def oracle_gap(state, params, env):
    closed = yaw_angular_acceleration(state, params, env)
    solved = yaw_accel_oracle(state, params, env)
    return abs(solved - closed) / max(1.0, abs(closed))


def composition_gap(state, params, eps_z):
    """Relative gap between the body accelerations and their rebuild from
    the normal/tangential components and the course angle."""
    ax, ay = body_accelerations(state, params, eps_z)
    theta = course_angle(state, params)
    a_n, a_t = accel_components(state, params, eps_z)
    ax2 = a_n * math.sin(theta) + a_t * math.cos(theta)
    ay2 = a_t * math.sin(theta) - a_n * math.cos(theta)
    scale = max(abs(a_n), abs(a_t), abs(ax), abs(ay), 1e-300)
    return max(abs(ax - ax2), abs(ay - ay2)) / scale


def lateral_balance_gap(state, params, env, eps_z):
    """Lateral-balance residual after back-solving the front reaction from
    the yaw balance, relative to the largest force term."""
    r_d = front_lateral_reaction(state, params, env, eps_z)
    res = lateral_residual(state, params, env, eps_z, r_d)
    _, ay = body_accelerations(state, params, eps_z)
    r_b = rear_traction_reaction(state, params, env, eps_z)
    _, p_wy = aero_forces(state.v_x1, params, env)
    scale = max(abs(params.m_a * ay), abs(r_d), abs(r_b), abs(p_wy), 1e-300)
    return abs(res) / scale


def run_checks(config, n=2000, seed=0):
    """All diagnostics for a configuration. Returns a list of :class:`Check`;
    ``info`` checks (longitudinal residual) always pass."""
    params, env = config.vehicle, config.environment
    checks = list(param_invariants(params, env))

    worst_oracle = worst_comp = worst_lat = 0.0
    skipped = 0
    for state, phi in random_grid(n, seed):
        e = env.with_phi(phi)
        try:
            eps = yaw_angular_acceleration(state, params, e)
            worst_oracle = max(worst_oracle, oracle_gap(state, params, e))
            worst_comp = max(worst_comp, composition_gap(state, params, eps))
            worst_lat = max(worst_lat, lateral_balance_gap(state, params, e, eps))
        except SingularError:
            skipped += 1
    tail = f" over {n - skipped} states ({skipped} singular skipped)"
    checks.append(Check("oracle_equivalence", worst_oracle < ORACLE_RTOL,
                        f"max rel gap {worst_oracle:.3g} (tol {ORACLE_RTOL:g})" + tail))
    checks.append(Check("substitution_identity", worst_comp <= IDENTITY_RTOL,
                        f"max rel gap {worst_comp:.3g} (tol {IDENTITY_RTOL:g})" + tail))
    checks.append(Check("system_consistency", worst_lat <= CONSISTENCY_RTOL,
                        f"max rel residual {worst_lat:.3g} (tol {CONSISTENCY_RTOL:g})" + tail))

    try:
        state = config.motion_state()
        eps = yaw_angular_acceleration(state, params, env)
        res = longitudinal_residual(state, params, env, eps)
        checks.append(Check("longitudinal_residual", True,
                            f"info: {res:.6g} N at the config state (no threshold)"))
    except SingularError as exc:
        checks.append(Check("longitudinal_residual", True, f"info: not evaluable ({exc})"))
    return checks
