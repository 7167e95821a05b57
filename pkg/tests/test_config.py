import json

import pytest

from skidsim.config import (
    ConfigError,
    config_from_dict,
    load_config,
    param_invariants,
)
from skidsim.grip import Burckhardt
from skidsim.model import REFERENCE_VEHICLE


def reference_doc(reference_config_path):
    with open(reference_config_path) as fh:
        return json.load(fh)


def test_reference_config_loads(reference_config_path):
    config = load_config(reference_config_path)
    assert config.vehicle == REFERENCE_VEHICLE
    assert config.environment.phi == 0.8
    assert config.motion_state().v_x1 == 10.0
    assert config.motion_state(v_x1=3.0).v_x1 == 3.0


def test_reference_invariants_hold(reference_config_path):
    config = load_config(reference_config_path)
    assert all(c.ok for c in param_invariants(config.vehicle, config.environment))


def test_unknown_key_rejected(reference_config_path):
    doc = reference_doc(reference_config_path)
    doc["vehicle"]["mass"] = 1500.0
    with pytest.raises(ConfigError, match="mass"):
        config_from_dict(doc)


def test_wrong_type_rejected(reference_config_path):
    doc = reference_doc(reference_config_path)
    doc["environment"]["phi"] = "dry"
    with pytest.raises(ConfigError) as info:
        config_from_dict(doc)
    assert info.value.symbol == "phi"


def test_kf_from_drag_coefficient(reference_config_path):
    doc = reference_doc(reference_config_path)
    del doc["vehicle"]["kF"]
    doc["vehicle"].update(c_X=0.4, F=2.0)
    config = config_from_dict(doc)
    assert config.vehicle.kF == pytest.approx(0.4 * 0.5 * 1.22 * 2.0, rel=1e-15)
    assert all(c.ok for c in param_invariants(config.vehicle, config.environment))


def test_missing_drag_data(reference_config_path):
    doc = reference_doc(reference_config_path)
    del doc["vehicle"]["kF"]
    with pytest.raises(ConfigError):
        config_from_dict(doc)


def test_wheelbase_mismatch_detected(reference_config_path):
    doc = reference_doc(reference_config_path)
    doc["vehicle"]["b"] = 1.4
    config = config_from_dict(doc)
    failed = [c.name for c in param_invariants(config.vehicle, config.environment) if not c.ok]
    assert failed == ["wheelbase"]


def test_drag_mismatch_detected(reference_config_path):
    doc = reference_doc(reference_config_path)
    doc["vehicle"].update(c_X=0.4, F=2.0)  # kF=0.58 kept, 0.488 implied
    config = config_from_dict(doc)
    failed = [c.name for c in param_invariants(config.vehicle, config.environment) if not c.ok]
    assert failed == ["drag_consistency"]


def test_grip_block(reference_config_path):
    doc = reference_doc(reference_config_path)
    doc["grip"] = {"model": "burckhardt"}
    assert config_from_dict(doc).grip == Burckhardt()


def test_state_angles_in_degrees(reference_config_path):
    doc = reference_doc(reference_config_path)
    doc["state"]["delta_1_deg"] = 180.0 / 3.141592653589793 * 0.1
    state = config_from_dict(doc).motion_state()
    assert state.delta_1 == pytest.approx(0.1, rel=1e-14)


def test_unreadable_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ConfigError):
        load_config(bad)
