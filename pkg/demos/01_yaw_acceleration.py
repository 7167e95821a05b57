"""Yaw acceleration at the onset of a skid.

A rear-drive car is already rotating at ``omega_z``. Whether the rotation
grows or dies out is decided by the sign of the yaw acceleration ``eps_z``.
"""
# %%
import math

from skidsim import REFERENCE_ENVIRONMENT, REFERENCE_VEHICLE, MotionState, skid_breakdown
from skidsim.model import yaw_accel_oracle, yaw_angular_acceleration

params, env = REFERENCE_VEHICLE, REFERENCE_ENVIRONMENT
print(params)
print(env)

# %% A slow skid on a dry road damps out on its own.
state = MotionState(v_x1=5.0, omega_z=0.1)
print(f"eps_z = {yaw_angular_acceleration(state, params, env):+.6f} rad/s^2")

# %% The closed form agrees with a direct solve of the force and moment balances.
print(f"direct solve = {yaw_accel_oracle(state, params, env):+.6f} rad/s^2")

# %% Without grip the rear axle carries no lateral force and the skid always grows.
print(f"phi = 0: eps_z = {yaw_angular_acceleration(state, params, env.with_phi(0.0)):+.6f}")

# %% Every intermediate quantity at a faster, slipping state.
derived = skid_breakdown(MotionState(25.0, 0.2, math.radians(4.0)), params, env)
for key, value in derived.as_dict().items():
    print(f"  {key:<13} {value: .6g}")
