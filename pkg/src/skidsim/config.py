"""JSON run configuration: schema validation, object construction and
parameter consistency checks."""
import json
import math
from dataclasses import dataclass
from importlib import resources

import jsonschema

from .errors import InvalidParams, SkidModelError
from .grip import grip_from_dict
from .model import Environment, MotionState, VehicleParams

_DATA = resources.files("skidsim") / "data"
SCHEMA_PATH = _DATA / "config.schema.json"
REFERENCE_CONFIG = _DATA / "reference_vehicle.json"

WHEELBASE_TOL = 1e-9  # m
INERTIA_RTOL = 1e-9
DRAG_RTOL = 1e-6


class ConfigError(InvalidParams):
    """Configuration file unreadable or not matching the schema."""


def load_schema():
    return json.loads(SCHEMA_PATH.read_text())


@dataclass(frozen=True)
class RunConfig:
    vehicle: VehicleParams
    environment: Environment
    grip: object = None
    state: dict = None  # defaults for MotionState fields, SI units

    def motion_state(self, **overrides):
        values = {"v_x1": 10.0, "omega_z": 0.1, "delta_1": 0.0, "gamma_b": 0.0, "s_x": 0.0}
        values.update(self.state or {})
        values.update({k: v for k, v in overrides.items() if v is not None})
        return MotionState(**values)


def validate_document(doc):
    """Raise :class:`ConfigError` listing every schema violation."""
    validator = jsonschema.Draft202012Validator(load_schema())
    problems = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if problems:
        lines = []
        for e in problems:
            where = "/".join(str(p) for p in e.absolute_path) or "<root>"
            lines.append(f"{where}: {e.message}")
        symbol = str(problems[0].absolute_path[-1]) if problems[0].absolute_path else None
        raise ConfigError("invalid configuration:\n  " + "\n  ".join(lines), symbol)


def config_from_dict(doc):
    validate_document(doc)
    env_block = doc["environment"]
    env = Environment(**env_block)

    veh = dict(doc["vehicle"])
    if "kF" not in veh:
        if "c_X" not in veh or "F" not in veh:
            raise ConfigError("vehicle needs kF or both c_X and F", "kF")
        veh["kF"] = veh["c_X"] * 0.5 * env.rho * veh["F"]
    try:
        vehicle = VehicleParams.build(**veh)
    except SkidModelError as exc:
        raise ConfigError(str(exc), exc.symbol) from exc

    grip = grip_from_dict(doc["grip"]) if doc.get("grip") else None

    state = None
    if "state" in doc:
        s = doc["state"]
        state = {k: s[k] for k in ("v_x1", "omega_z", "s_x") if k in s}
        if "delta_1_deg" in s:
            state["delta_1"] = math.radians(s["delta_1_deg"])
        if "gamma_b_deg" in s:
            state["gamma_b"] = math.radians(s["gamma_b_deg"])
    return RunConfig(vehicle=vehicle, environment=env, grip=grip, state=state)


def load_config(path=REFERENCE_CONFIG):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return config_from_dict(doc)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str
    symbol: str = None


def param_invariants(params, env):
    """Cross-field consistency of a parameter set, one :class:`Check` each."""
    p = params
    checks = []

    err = abs(p.L - (p.a + p.b))
    checks.append(Check("wheelbase", err <= WHEELBASE_TOL,
                        f"L={p.L:.12g} vs a+b={p.a + p.b:.12g} (|diff|={err:.3g} m)", "L"))

    expected = p.m_a * p.i_z ** 2
    rel = abs(p.I_zc - expected) / expected
    checks.append(Check("inertia", rel <= INERTIA_RTOL,
                        f"I_zc={p.I_zc:.12g} vs m_a*i_z^2={expected:.12g} (rel {rel:.3g})", "I_zc"))

    if p.c_X is not None and p.F is not None:
        expected = p.c_X * 0.5 * env.rho * p.F
        rel = abs(p.kF - expected) / max(abs(expected), 1e-300)
        checks.append(Check("drag_consistency", rel <= DRAG_RTOL,
                            f"kF={p.kF:.12g} vs c_X*rho/2*F={expected:.12g} (rel {rel:.3g})", "kF"))

    checks.append(Check("lever_arm", p.h > p.r_o >= 0,
                        f"h - r_o = {p.h - p.r_o:.6g} m", "h"))
    return checks
