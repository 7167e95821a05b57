"""Grip coefficient as a function of drive-wheel relative slip.

The skid model only needs a scalar grip coefficient phi; these laws map the
relative slip ``s_x`` to phi so that slip can be swept. None of them is
derived from measured data for a particular tyre.
"""
import math
from dataclasses import dataclass

from .errors import InvalidParams, InvalidSlip


def _check_slip(s_x):
    if not 0 <= s_x <= 1:
        raise InvalidSlip(f"slip s_x={s_x} outside [0, 1]")


@dataclass(frozen=True)
class Constant:
    phi: float

    def __post_init__(self):
        if not 0 <= self.phi <= 1.5:
            raise InvalidParams(f"constant grip phi={self.phi} outside [0, 1.5]", "phi")

    def __call__(self, s_x):
        _check_slip(s_x)
        return self.phi


@dataclass(frozen=True)
class LinearSaturating:
    """Linear ramp up to ``phi_max`` at ``s_crit``, flat afterwards."""

    phi_max: float
    s_crit: float

    def __post_init__(self):
        if not 0 < self.s_crit <= 1:
            raise InvalidParams(f"s_crit={self.s_crit} outside (0, 1]", "s_crit")
        if not 0 <= self.phi_max <= 1.5:
            raise InvalidParams(f"phi_max={self.phi_max} outside [0, 1.5]", "phi_max")

    def __call__(self, s_x):
        _check_slip(s_x)
        return self.phi_max * min(s_x / self.s_crit, 1.0)


@dataclass(frozen=True)
class Burckhardt:
    """``c1 * (1 - exp(-c2 * s)) - c3 * s``.

    The defaults are the usual dry-asphalt constants for this law.
    """

    c1: float = 1.28
    c2: float = 23.99
    c3: float = 0.52

    def __post_init__(self):
        if not (self.c1 > 0 and self.c2 > 0 and self.c3 >= 0):
            raise InvalidParams("Burckhardt needs c1 > 0, c2 > 0, c3 >= 0", "c1")
        # the law is concave, so non-negativity on [0, 1] reduces to the end point
        if self._eval(1.0) < 0:
            raise InvalidParams("Burckhardt grip turns negative below s_x = 1", "c3")

    def _eval(self, s_x):
        return self.c1 * (1.0 - math.exp(-self.c2 * s_x)) - self.c3 * s_x

    def __call__(self, s_x):
        _check_slip(s_x)
        return self._eval(s_x)


GRIP_MODELS = {
    "constant": Constant,
    "linear_saturating": LinearSaturating,
    "burckhardt": Burckhardt,
}


def grip_coefficient(model, s_x):
    """Grip coefficient phi for relative slip ``s_x`` in [0, 1]."""
    return model(s_x)


def grip_from_dict(block):
    """Build a model from a config block such as ``{"model": "burckhardt"}``."""
    block = dict(block)
    kind = block.pop("model")
    try:
        cls = GRIP_MODELS[kind]
    except KeyError:
        raise InvalidParams(f"unknown grip model {kind!r}", "grip") from None
    return cls(**block)
