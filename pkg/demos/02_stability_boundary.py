"""Self-stabilisation speed.

Below ``V_stab`` the yaw acceleration is negative and the skid damps without
intervention. The boundary scales roughly with ``phi * g / omega_z``.
"""
# %%
import numpy as np

from skidsim import REFERENCE_ENVIRONMENT, REFERENCE_VEHICLE, find_v_stab, stability_envelope

params, env = REFERENCE_VEHICLE, REFERENCE_ENVIRONMENT

# %% Dry road, gentle rotation: the boundary sits far above everyday speeds.
result = find_v_stab(params, env, omega_z=0.1, bracket=(0.1, 200.0))
print(result.status.value, f"{result.v_stab * 3.6:.1f} km/h")

# %% How the boundary moves with grip.
for phi in (0.05, 0.068, 0.1, 0.3, 0.8):
    r = find_v_stab(params, env.with_phi(phi), 0.1, bracket=(0.1, 200.0))
    print(f"phi={phi:<5} V_stab = {r.v_stab * 3.6:7.2f} km/h")

# %% Slip-angle envelope on a slippery surface.
deltas = np.radians(np.arange(0.0, 8.5, 1.0))
envelope = stability_envelope(params, env.with_phi(0.07), 0.1, deltas)
for d, row in zip(np.degrees(deltas), envelope.rows):
    print(f"delta={d:3.0f} deg  V_stab={row.v_stab * 3.6:6.2f} km/h")
print("monotone:", envelope.monotone)
