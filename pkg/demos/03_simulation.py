"""Time history of a skid.

The yaw acceleration is integrated with fixed-step RK4. Slip angles and grip
stay fixed; the run stops when the yaw rate crosses zero.
"""
# %%
from skidsim import REFERENCE_ENVIRONMENT, REFERENCE_VEHICLE, MotionState, SimConfig, simulate

params, env = REFERENCE_VEHICLE, REFERENCE_ENVIRONMENT

# %% Damped: 3 m/s with a small initial rotation.
damped = simulate(MotionState(3.0, 0.1), params, env, SimConfig(dt=1e-3, t_end=2.0))
print(damped.reason.value, f"t_cross = {damped.t_cross:.4f} s")
for row in damped.rows[::20]:
    print(f"  t={row.t:.3f}  omega_z={row.omega_z:.5f}  eps_z={row.eps_z:+.4f}")

# %% Growing: the same start with no grip.
growing = simulate(MotionState(1.0, 0.1), params, env.with_phi(0.0), SimConfig(t_end=1.0))
print(growing.reason.value, f"omega_z(1 s) = {growing.final.motion.omega_z:.4f} rad/s")
