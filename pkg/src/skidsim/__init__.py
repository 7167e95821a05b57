"""Yaw dynamics of a rear-drive vehicle skidding in traction mode."""
from .errors import *  # noqa: F401,F403
from .grip import Burckhardt, Constant, LinearSaturating, grip_coefficient
from .model import (
    REFERENCE_ENVIRONMENT,
    REFERENCE_VEHICLE,
    Environment,
    MotionState,
    SkidDerived,
    VehicleParams,
    accel_components,
    aero_forces,
    body_accelerations,
    course_angle,
    front_lateral_reaction,
    inertia_conversions,
    lateral_residual,
    longitudinal_residual,
    omega_factor,
    rear_traction_reaction,
    rear_vertical_reaction,
    skid_breakdown,
    yaw_accel_oracle,
    yaw_angular_acceleration,
)
from .simulator import SimConfig, Termination, derivative, simulate, step_rk4
from .stability import VStabStatus, classify, find_v_stab, stability_envelope
from .sweep import SweepSpec, fig2_presets, run_sweep

__version__ = "0.1.0"
