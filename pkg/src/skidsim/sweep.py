"""Parameter-grid evaluation of the yaw acceleration.

A :class:`SweepSpec` names one swept variable (the x axis), optionally a
second variable with an explicit list of series values, and a base state that
supplies everything else. :func:`fig2_presets` defines six standard panels
(``fig2a`` to ``fig2f``) over the reference vehicle; their axis ranges and
series values are chosen, not measured.
"""
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from ._parallel import ordered_map
from .errors import InvalidParams, SkidModelError
from .grip import Burckhardt
from .model import REFERENCE_ENVIRONMENT, REFERENCE_VEHICLE, MotionState, yaw_angular_acceleration

VARIABLES = ("v_x1", "omega_z", "phi", "s_x", "delta_1")
MAX_POINTS = 10 ** 6

_X_HEADERS = {
    "v_x1": "v_x1_mps",
    "omega_z": "omega_z_radps",
    "phi": "phi",
    "s_x": "s_x",
    "delta_1": "delta_1_deg",
}
_SERIES_LABELS = {
    "v_x1": ("v", "mps"),
    "omega_z": ("omega", "radps"),
    "phi": ("phi", ""),
    "s_x": ("sx", ""),
    "delta_1": ("delta", "deg"),
}


def to_display(var, value):
    """SI value -> value as shown in tables (slip angles in degrees)."""
    return math.degrees(value) if var == "delta_1" else value


def series_label(var, value):
    prefix, unit = _SERIES_LABELS[var]
    return f"eps_z_{prefix}{to_display(var, value):g}{unit}"


@dataclass(frozen=True)
class SweepSpec:
    x_var: str
    x_range: tuple
    base_state: MotionState
    params: object = REFERENCE_VEHICLE
    env: object = REFERENCE_ENVIRONMENT
    series_var: str = None
    series_values: tuple = ()
    grip: object = None
    name: str = ""

    def __post_init__(self):
        if self.x_var not in VARIABLES:
            raise InvalidParams(f"unknown sweep variable {self.x_var!r}", "x_var")
        lo, hi, n = self.x_range
        if not lo < hi:
            raise InvalidParams(f"sweep range needs lo < hi, got {lo}, {hi}", self.x_var)
        if int(n) != n or not 2 <= n <= MAX_POINTS:
            raise InvalidParams(f"sweep point count must be an integer in [2, {MAX_POINTS}]", "n")
        if self.series_var is not None:
            if self.series_var not in VARIABLES or self.series_var == self.x_var:
                raise InvalidParams(f"bad series variable {self.series_var!r}", "series_var")
            if not self.series_values or not all(math.isfinite(v) for v in self.series_values):
                raise InvalidParams("series values must be a non-empty list of finite numbers",
                                    "series_var")
        elif self.series_values:
            raise InvalidParams("series values given without a series variable", "series_var")

    def x_grid(self):
        lo, hi, n = self.x_range
        return np.linspace(lo, hi, int(n))


@dataclass(frozen=True)
class SweepTable:
    x_var: str
    x: np.ndarray
    series_var: str
    series: tuple
    values: np.ndarray  # (n, n_series), NaN marks a singular cell
    errors: dict = field(default_factory=dict)  # (i, j) -> message
    name: str = ""

    @property
    def headers(self):
        if self.series_var is None:
            return [_X_HEADERS[self.x_var], "eps_z"]
        return [_X_HEADERS[self.x_var]] + [series_label(self.series_var, s) for s in self.series]

    def display_x(self):
        return np.array([to_display(self.x_var, v) for v in self.x])

    def column(self, j=0):
        return self.values[:, j]


def _evaluate_cell(spec, assignments):
    phi = assignments.pop("phi", None)
    state = spec.base_state.replace(**assignments)
    if phi is None:
        phi = spec.grip(state.s_x) if spec.grip is not None else spec.env.phi
    return yaw_angular_acceleration(state, spec.params, spec.env.with_phi(phi))


def run_sweep(spec):
    """Evaluate every grid cell; singular cells become NaN with their message
    stored in ``errors``."""
    xs = spec.x_grid()
    series = tuple(spec.series_values) if spec.series_var else (None,)

    def column(s):
        out = np.empty(len(xs))
        errs = {}
        for i, x in enumerate(xs):
            assignments = {spec.x_var: float(x)}
            if spec.series_var:
                assignments[spec.series_var] = float(s)
            try:
                out[i] = _evaluate_cell(spec, assignments)
            except SkidModelError as exc:
                out[i] = math.nan
                errs[i] = str(exc)
        return out, errs

    results = ordered_map(column, series)
    values = np.column_stack([r[0] for r in results])
    errors = {(i, j): msg for j, (_, errs) in enumerate(results) for i, msg in errs.items()}
    if errors and len(errors) == values.size:
        warnings.warn(f"sweep {spec.name or spec.x_var}: every cell is singular", RuntimeWarning)
    return SweepTable(
        x_var=spec.x_var,
        x=xs,
        series_var=spec.series_var,
        series=tuple(spec.series_values),
        values=values,
        errors=errors,
        name=spec.name,
    )


SLIP_SERIES_DEG = (0.0, 2.0, 4.0, 8.0)
SPEED_SERIES = (5.0, 20.0, 35.0)


def fig2_presets(params=REFERENCE_VEHICLE, env=REFERENCE_ENVIRONMENT, grip=None):
    """The six standard panels as sweep specs.

    ``grip`` only affects panel f (slip sweep); it defaults to
    :class:`~skidsim.grip.Burckhardt`, which is a stand-in law, so panel f is
    qualitative at best.
    """
    slips = tuple(math.radians(d) for d in SLIP_SERIES_DEG)
    speed_axis = (1.0, 35.0, 69)
    grip_axis = (0.05, 0.9, 86)

    def spec(name, x_var, x_range, omega, series_var, series, v=20.0, g=None):
        return SweepSpec(x_var=x_var, x_range=x_range, base_state=MotionState(v, omega),
                         params=params, env=env, series_var=series_var,
                         series_values=series, grip=g, name=name)

    return [
        spec("fig2a", "v_x1", speed_axis, 0.1, "delta_1", slips),
        spec("fig2b", "v_x1", speed_axis, 0.01, "delta_1", slips),
        spec("fig2c", "phi", grip_axis, 0.2, "v_x1", SPEED_SERIES),
        spec("fig2d", "phi", grip_axis, 0.5, "v_x1", SPEED_SERIES),
        spec("fig2e", "omega_z", (0.01, 0.5, 50), 0.1, "delta_1", slips),
        spec("fig2f", "s_x", (0.0, 1.0, 101), 0.2, "delta_1", slips, g=grip or Burckhardt()),
    ]


def preset(name, **kwargs):
    for s in fig2_presets(**kwargs):
        if s.name == name:
            return s
    raise InvalidParams(f"unknown preset {name!r}", "preset")
