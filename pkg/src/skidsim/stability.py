"""Skid damping criterion and the self-stabilisation speed boundary.

A skid damps itself when the yaw acceleration at onset is non-positive.
``V_stab`` is the speed where ``eps_z(V_x1)`` changes sign at fixed yaw rate
and slip angles; it is located by sampling the bracket and bisecting the
first sign change.
"""
import enum
from dataclasses import dataclass

import numpy as np

from ._parallel import ordered_map
from .errors import InvalidParams, SingularError, SingularInBracket
from .model import MotionState, yaw_angular_acceleration

SAMPLES = 64
V_TOL = 1e-6
DEFAULT_BRACKET = (0.1, 100.0)


@dataclass(frozen=True)
class StabilityVerdict:
    eps_z: float
    damping: bool
    v_stab: float = None


def classify(state, params, env, v_stab=None):
    eps = yaw_angular_acceleration(state, params, env)
    return StabilityVerdict(eps_z=eps, damping=eps <= 0, v_stab=v_stab)


class VStabStatus(str, enum.Enum):
    ROOT = "root"
    STABLE_THROUGHOUT = "stable_throughout"
    NOT_BRACKETED = "not_bracketed"


@dataclass(frozen=True)
class VStabResult:
    status: VStabStatus
    v_stab: float = None
    multi_root: bool = False
    interval: tuple = None  # final bisection interval, damping differs at its ends

    @property
    def found(self):
        return self.status is not VStabStatus.NOT_BRACKETED


def _speed_function(params, env, omega_z, delta_1, gamma_b, s_x):
    def eps(v):
        return yaw_angular_acceleration(MotionState(v, omega_z, delta_1, gamma_b, s_x), params, env)
    return eps


def _eval_near(f, v, nudge, lo, hi):
    """Evaluate ``f(v)``; on a singularity retry once at ``v + nudge``."""
    try:
        return v, f(v)
    except SingularError:
        w = min(max(v + nudge, lo), hi)
        try:
            return w, f(w)
        except SingularError as exc:
            raise SingularInBracket(f"singular evaluation near v_x1={v:.6g} m/s") from exc


def find_v_stab(params, env, omega_z, delta_1=0.0, gamma_b=0.0, bracket=DEFAULT_BRACKET,
                s_x=0.0, tol=V_TOL):
    """Locate the speed at which the skid stops damping itself.

    Returns a :class:`VStabResult`. When ``eps_z`` stays non-positive over the
    whole bracket the result is ``v_hi`` with status ``STABLE_THROUGHOUT``;
    when it stays positive the status is ``NOT_BRACKETED``. If the sampled
    bracket shows several sign changes the smallest root is returned with
    ``multi_root=True``.
    """
    lo, hi = map(float, bracket)
    if not 0 < lo < hi:
        raise InvalidParams(f"bracket must satisfy 0 < v_lo < v_hi, got {bracket}", "v_x1")
    f = _speed_function(params, env, omega_z, delta_1, gamma_b, s_x)
    spacing = (hi - lo) / (SAMPLES - 1)

    samples = []
    for i, v in enumerate(np.linspace(lo, hi, SAMPLES)):
        nudge = -spacing / 4 if i == SAMPLES - 1 else spacing / 4
        samples.append(_eval_near(f, float(v), nudge, lo, hi))
    damping = [e <= 0 for _, e in samples]
    flips = [i for i in range(SAMPLES - 1) if damping[i] != damping[i + 1]]
    if not flips:
        if damping[0]:
            return VStabResult(VStabStatus.STABLE_THROUGHOUT, v_stab=hi)
        return VStabResult(VStabStatus.NOT_BRACKETED)

    i = flips[0]
    left, right = samples[i][0], samples[i + 1][0]
    left_damping = damping[i]
    while right - left > tol:
        mid, e = _eval_near(f, 0.5 * (left + right), (right - left) / 4, left, right)
        if mid in (left, right):
            break
        if (e <= 0) == left_damping:
            left = mid
        else:
            right = mid
    return VStabResult(VStabStatus.ROOT, v_stab=0.5 * (left + right),
                       multi_root=len(flips) > 1, interval=(left, right))


@dataclass(frozen=True)
class EnvelopeRow:
    delta_1: float
    result: VStabResult = None
    error: str = None

    @property
    def v_stab(self):
        if self.result is None or not self.result.found:
            return None
        return self.result.v_stab


@dataclass(frozen=True)
class Envelope:
    rows: tuple
    omega_z: float
    gamma_b: float

    @property
    def monotone(self):
        """True when the found boundaries are monotone in ``delta_1``."""
        v = [r.v_stab for r in self.rows if r.v_stab is not None]
        d = np.diff(v)
        return bool(np.all(d >= 0) or np.all(d <= 0))

    def max_v_stab(self):
        found = [r.v_stab for r in self.rows if r.v_stab is not None]
        return max(found) if found else None


def stability_envelope(params, env, omega_z, delta_range, gamma_b=0.0,
                       bracket=DEFAULT_BRACKET, s_x=0.0):
    """One :func:`find_v_stab` per slip angle; errors stay in their row."""

    def row(delta):
        try:
            return EnvelopeRow(delta, find_v_stab(params, env, omega_z, delta, gamma_b, bracket, s_x))
        except SingularError as exc:
            return EnvelopeRow(delta, error=str(exc))

    rows = ordered_map(row, [float(d) for d in delta_range])
    return Envelope(rows=tuple(rows), omega_z=omega_z, gamma_b=gamma_b)
