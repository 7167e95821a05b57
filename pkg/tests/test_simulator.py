import numpy as np
import pytest

from skidsim.errors import InvalidParams, SimulationHalted
from skidsim.model import MotionState, yaw_angular_acceleration
from skidsim.simulator import (
    SimConfig,
    SimState,
    Termination,
    derivative,
    simulate,
    step_rk4,
)
from skidsim.stability import classify

# Verified against the direct 2x2 solve before freezing (gap 5e-14).
GOLDEN_DERIVATIVE = (-0.6072900040420216, -30.32747934791331)


def test_derivative_collapse(params, env):
    w, v = 0.1, 5.0
    d_omega, _ = derivative(MotionState(v, w), params, env.with_phi(0.0))
    assert d_omega == pytest.approx(params.a * w * v / (params.a ** 2 + params.i_z ** 2), rel=1e-14)
    assert d_omega > 0


def test_derivative_is_yaw_acceleration(params, env):
    state = MotionState(23.0, 0.27, 0.08, 0.1)
    assert derivative(state, params, env)[0] == yaw_angular_acceleration(state, params, env)


def test_derivative_golden(params, env):
    got = derivative(MotionState(5.0, 0.1, 0.05), params, env)
    assert got == pytest.approx(GOLDEN_DERIVATIVE, rel=1e-13)


def test_step_with_zero_field(params, env):
    start = SimState(MotionState(7.0, 0.2, 0.03), psi=0.4, x=1.0, y=-2.0)
    after = step_rk4(start, params, env, 0.01, field=lambda s: np.zeros(5))
    assert after == start


def test_step_with_constant_field(params, env):
    dt, d = 2.0 ** -10, 0.5
    start = SimState(MotionState(7.0, 0.25))
    after = step_rk4(start, params, env, dt, field=lambda s: np.full(5, d))
    assert after.motion.omega_z == 0.25 + d * dt
    assert after.motion.v_x1 == 7.0 + d * dt


def test_step_halts_on_singular_stage(params, env):
    start = SimState(MotionState(7.0, 0.0))
    with pytest.raises(SimulationHalted) as info:
        step_rk4(start, params, env, 1e-3)
    assert info.value.state is start


def endpoint(params, env, state, dt, t_end=1.0):
    res = simulate(state, params, env, SimConfig(dt=dt, t_end=t_end, stop_on_damped=False))
    assert res.reason is Termination.TIME_END
    return res.final.vector()


def test_fourth_order_convergence(params, env):
    state = MotionState(35.0, 0.2)
    ref = endpoint(params, env, state, 0.02 / 8)
    err = [np.max(np.abs(endpoint(params, env, state, dt) - ref)) for dt in (0.02, 0.01)]
    assert 12 <= err[0] / err[1] <= 20


def test_slow_skid_damps(params, env):
    state = MotionState(3.0, 0.1)
    assert classify(state, params, env).damping
    res = simulate(state, params, env, SimConfig(t_end=2.0))
    assert res.reason is Termination.SKID_DAMPED
    omegas = [r.omega_z for r in res.rows]
    assert np.all(np.diff(omegas) < 0)
    assert abs(res.final.motion.omega_z) <= 0.1
    assert res.rows[-1].eps_z < 0
    assert res.t_final <= res.t_cross <= res.t_final + 1e-3


def test_zero_grip_never_damps(params, env):
    res = simulate(MotionState(1.0, 0.1), params, env.with_phi(0.0), SimConfig(t_end=1.0))
    assert res.reason is Termination.TIME_END
    assert res.final.motion.omega_z > 0.1
    assert all(not r.damping for r in res.rows)


def test_zero_grip_blow_up_is_singular(params, env):
    res = simulate(MotionState(10.0, 0.1), params, env.with_phi(0.0), SimConfig(t_end=2.0))
    assert res.reason is Termination.SINGULAR


def test_two_rows_for_single_step(params, env):
    res = simulate(MotionState(10.0, 0.3), params, env, SimConfig(dt=1e-3, t_end=1e-3))
    assert [r.t for r in res.rows] == [0.0, 1e-3]


def test_record_every(params, env):
    cfg = SimConfig(dt=1e-3, t_end=0.05, record_every=10, stop_on_damped=False)
    res = simulate(MotionState(35.0, 0.2), params, env, cfg)
    ts = [r.t for r in res.rows]
    assert ts == [i * 10 * 1e-3 for i in range(6)]
    assert np.all(np.diff(ts) > 0)


def test_deterministic(params, env):
    runs = [simulate(MotionState(3.0, 0.1, 0.02), params, env) for _ in range(2)]
    assert runs[0] == runs[1]


def test_singular_initial_state(params, env):
    res = simulate(MotionState(10.0, 0.0), params, env)
    assert res.reason is Termination.SINGULAR and res.rows == []


def test_heading_tracks_yaw(params, env):
    res = simulate(MotionState(35.0, 0.2), params, env, SimConfig(t_end=0.2, stop_on_damped=False))
    # psi is the integral of omega: trapezoid over recorded rows agrees closely
    t = np.array([r.t for r in res.rows])
    w = np.array([r.omega_z for r in res.rows])
    integral = np.sum(0.5 * (w[1:] + w[:-1]) * np.diff(t))
    assert res.rows[-1].psi == pytest.approx(integral, rel=1e-5)


@pytest.mark.parametrize("kwargs", [{"dt": 0.0}, {"t_end": -1.0}, {"record_every": 0}])
def test_config_validation(kwargs):
    with pytest.raises(InvalidParams):
        SimConfig(**kwargs)
