import math

import numpy as np
import pytest

from skidsim.errors import InvalidParams, InvalidSlip
from skidsim.grip import Burckhardt, Constant, LinearSaturating, grip_coefficient, grip_from_dict
from skidsim.model import MotionState, yaw_angular_acceleration


def test_constant():
    model = Constant(0.8)
    assert [grip_coefficient(model, s) for s in (0.0, 0.37, 1.0)] == [0.8, 0.8, 0.8]


def test_linear_saturating():
    model = LinearSaturating(0.8, 0.2)
    assert grip_coefficient(model, 0.1) == pytest.approx(0.4)
    assert grip_coefficient(model, 0.2) == 0.8
    assert grip_coefficient(model, 0.9) == 0.8


def test_burckhardt_defaults():
    model = Burckhardt()
    assert grip_coefficient(model, 0.0) == 0.0
    grid = np.linspace(0.0, 1.0, 100)
    values = np.array([model(s) for s in grid])
    expected = 1.28 * (1 - np.exp(-23.99 * grid)) - 0.52 * grid
    np.testing.assert_allclose(values, expected, rtol=1e-14)
    assert values.min() >= 0.0
    # dry asphalt: peak near 1.17 at roughly 17 % slip
    assert values.max() == pytest.approx(1.17, abs=0.01)


@pytest.mark.parametrize("model", [Constant(0.5), LinearSaturating(0.9, 0.15), Burckhardt()])
def test_continuity(model):
    grid = np.linspace(0.0, 1.0, 20001)
    values = np.array([model(s) for s in grid])
    assert np.max(np.abs(np.diff(values))) < 2e-3


@pytest.mark.parametrize("s", [-0.01, 1.01, math.nan])
def test_slip_out_of_range(s):
    with pytest.raises(InvalidSlip):
        Burckhardt()(s)


def test_invalid_models():
    with pytest.raises(InvalidParams):
        Constant(2.0)
    with pytest.raises(InvalidParams):
        LinearSaturating(0.8, 0.0)
    with pytest.raises(InvalidParams):
        Burckhardt(c1=0.5, c2=2.0, c3=0.9)  # negative at full slip


def test_from_dict():
    assert grip_from_dict({"model": "constant", "phi": 0.3}) == Constant(0.3)
    assert grip_from_dict({"model": "burckhardt"}) == Burckhardt()
    with pytest.raises(InvalidParams):
        grip_from_dict({"model": "pacejka"})


def test_constant_grip_makes_eps_independent_of_slip(params, env):
    model = Constant(0.7)
    values = {
        yaw_angular_acceleration(MotionState(15.0, 0.2, 0.03, s_x=s), params, env.with_phi(model(s)))
        for s in np.linspace(0.0, 1.0, 11)
    }
    assert len(values) == 1
