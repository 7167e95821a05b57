"""Invariants of the model checked over random states."""
import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from skidsim.diagnostics import composition_gap, lateral_balance_gap, oracle_gap
from skidsim.errors import SingularError
from skidsim.model import (
    REFERENCE_ENVIRONMENT,
    REFERENCE_VEHICLE,
    MotionState,
    aero_forces,
    rear_traction_reaction,
    rear_vertical_reaction,
    body_accelerations,
    yaw_accel_terms,
    yaw_angular_acceleration,
)

speeds = st.floats(0.5, 35.0)
yaw_rates = st.floats(0.01, 0.5)
slips = st.floats(0.0, 0.15)
gammas = st.floats(0.0, 0.3)
grips = st.floats(0.05, 0.9)

states = st.builds(MotionState, speeds, yaw_rates, slips, gammas)


@settings(max_examples=300, deadline=None)
@given(states, grips)
def test_oracle_equivalence(state, phi):
    assert oracle_gap(state, REFERENCE_VEHICLE, REFERENCE_ENVIRONMENT.with_phi(phi)) < 1e-9


@settings(max_examples=300, deadline=None)
@given(states, grips)
def test_substitution_identity(state, phi):
    eps = yaw_angular_acceleration(state, REFERENCE_VEHICLE, REFERENCE_ENVIRONMENT.with_phi(phi))
    assert composition_gap(state, REFERENCE_VEHICLE, eps) <= 1e-10


@settings(max_examples=100, deadline=None)
@given(states, st.floats(-5.0, 5.0))
def test_substitution_identity_any_eps(state, eps):
    assert composition_gap(state, REFERENCE_VEHICLE, eps) <= 1e-10


@settings(max_examples=300, deadline=None)
@given(states, grips)
def test_system_consistency(state, phi):
    env = REFERENCE_ENVIRONMENT.with_phi(phi)
    eps = yaw_angular_acceleration(state, REFERENCE_VEHICLE, env)
    assert lateral_balance_gap(state, REFERENCE_VEHICLE, env, eps) <= 1e-8


@settings(max_examples=300, deadline=None)
@given(speeds, yaw_rates, slips, gammas)
def test_zero_grip_diverges(v, w, d, g):
    eps = yaw_angular_acceleration(MotionState(v, w, d, g), REFERENCE_VEHICLE,
                                   REFERENCE_ENVIRONMENT.with_phi(0.0))
    assert eps > 0


@given(st.floats(1e-6, 1e3))
def test_aero_quadratic(v):
    p_v = aero_forces(v, REFERENCE_VEHICLE, REFERENCE_ENVIRONMENT)[0]
    p_2v = aero_forces(2 * v, REFERENCE_VEHICLE, REFERENCE_ENVIRONMENT)[0]
    assert p_2v == pytest.approx(4 * p_v, rel=1e-15, abs=0)


@settings(max_examples=200, deadline=None)
@given(states, grips)
def test_traction_is_grip_times_load(state, phi):
    env = REFERENCE_ENVIRONMENT.with_phi(phi)
    eps = yaw_angular_acceleration(state, REFERENCE_VEHICLE, env)
    ax, _ = body_accelerations(state, REFERENCE_VEHICLE, eps)
    r_z2 = rear_vertical_reaction(state, REFERENCE_VEHICLE, env, ax)
    assert rear_traction_reaction(state, REFERENCE_VEHICLE, env, eps) == phi * r_z2


@settings(max_examples=200, deadline=None)
@given(states, st.floats(0.05, 0.3), st.floats(0.05, 0.3))
def test_terms_affine_in_grip(state, phi0, step):
    """Numerator and denominator are each collinear in three grip values."""
    terms = []
    for k in range(3):
        env = REFERENCE_ENVIRONMENT.with_phi(phi0 + k * step)
        terms.append(yaw_accel_terms(state, REFERENCE_VEHICLE, env))
    for idx in (0, 1):
        y0, y1, y2 = (t[idx] for t in terms)
        scale = max(abs(y0), abs(y1), abs(y2))
        assert abs((y2 - y1) - (y1 - y0)) <= 1e-12 * scale


@settings(max_examples=200, deadline=None)
@given(states, grips, st.floats(0.01, 0.05))
def test_eps_decreases_with_grip(state, phi, dphi):
    # d(eps)/d(Omega) has the sign of -(K*D0 + c*a*w*V) < 0 for delta >= 0
    env = REFERENCE_ENVIRONMENT
    lo = yaw_angular_acceleration(state, REFERENCE_VEHICLE, env.with_phi(phi))
    hi = yaw_angular_acceleration(state, REFERENCE_VEHICLE, env.with_phi(phi + dphi))
    assert hi < lo


@settings(max_examples=100, deadline=None)
@given(speeds, yaw_rates, st.floats(-1.4, 1.4), gammas, grips)
def test_oracle_equivalence_counter_slip(v, w, d, g, phi):
    """Negative slip angles approach the denominator pole; away from it the
    closed form still matches the direct solve."""
    state = MotionState(v, w, d, g)
    env = REFERENCE_ENVIRONMENT.with_phi(phi)
    try:
        num, den = yaw_accel_terms(state, REFERENCE_VEHICLE, env)
    except SingularError:
        return
    assume(abs(den) > 1e-3)
    assert math.isfinite(num / den)
    assert oracle_gap(state, REFERENCE_VEHICLE, env) < 1e-9 * max(1.0, 1.0 / abs(den))
