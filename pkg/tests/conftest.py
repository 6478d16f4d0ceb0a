import numpy as np
import pytest

import fanolight as fl


def build_model_curve(grid, yields, voltage=1.6):
    """A YieldCurve holding given yields directly, as a fit oracle."""
    points = tuple(
        fl.YieldPoint(
            float(g), float(g * fl.CODATA.G0 * voltage), 0.0, 0.0, float(y), 0.0
        )
        for g, y in zip(grid, yields)
    )
    return fl.YieldCurve(points, voltage)


def model_yields(grid, model, env):
    return np.array(
        [fl.normalized_yield_model(float(g), model, env) for g in grid]
    )


@pytest.fixture
def two_channel_model():
    return fl.two_channel()


@pytest.fixture
def narrow_excursion_config():
    # Short approach ending at contact after ~0.14 nm of tunneling, like a
    # real constant-speed ramp onto a single-atom junction: the trace
    # starts near g = 0.04, so the normalization window sees only points
    # where the yield is flat to well under a percent.
    return fl.SynthConfig(z_range=(0.0, 0.19))
