"""Current-noise spectral densities of a quantum contact, the noise-limited
photon yield, and a Monte Carlo cross-check of the Fano factor.

All densities are one-sided, in A^2/Hz. Voltage enters through its
magnitude; bias sign carries no information here.
"""

import math
from collections.abc import Iterable
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .constants import CODATA
from .errors import ZeroConductanceError
from .transport import ChannelSet, DecompositionModel, as_channels, decompose, fano

__all__ = [
    "COTH_SATURATION",
    "MC_BATCHES",
    "MC_MIN_ATTEMPTS",
    "McFanoResult",
    "NoiseEnvironment",
    "mc_fano",
    "normalized_yield",
    "normalized_yield_model",
    "schottky",
    "shot_noise",
    "thermal_noise",
]

# Above this argument coth(x) is 1 to double precision, so the zero-T
# expression is used verbatim instead of evaluating tanh.
COTH_SATURATION = 20.0

MC_MIN_ATTEMPTS = 1000
MC_BATCHES = 100


@dataclass(frozen=True)
class NoiseEnvironment:
    """Bias voltage (V) across the contact and electron temperature (K)."""

    voltage: float
    temperature: float

    def __post_init__(self) -> None:
        if self.temperature < 0.0:
            raise ValueError("temperature must be nonnegative")


def schottky(current: float) -> float:
    """Full shot noise 2 e |I| of uncorrelated carriers."""
    return 2.0 * CODATA.e * abs(current)


def shot_noise(channels: "ChannelSet | Iterable[float]", current: float) -> float:
    """Zero-temperature partition noise F * 2 e |I| of a channel set."""
    return fano(channels) * schottky(current)


def _x_coth_x(x: float) -> float:
    # x/tanh(x) is stable down to x = 0 (limit 1) and saturates to x once
    # tanh rounds to 1, which matches the COTH_SATURATION shortcut.
    if x == 0.0:
        return 1.0
    return x / math.tanh(x)


def _bias_weight(env: NoiseEnvironment) -> float:
    """The voltage factor 2 e |V| coth(e|V| / 2kT) of the partition term.

    Evaluated as 4kT * x coth x with x = e|V|/2kT so the V -> 0 limit is
    exactly 4kT; at T = 0 (or deep quantum bias x > COTH_SATURATION) it is
    exactly 2 e |V|.
    """
    ev = CODATA.e * abs(env.voltage)
    kt2 = 2.0 * CODATA.k * env.temperature
    # kt2 == 0.0 also catches temperatures so small that 2kT underflows;
    # they are indistinguishable from T = 0 in double precision anyway.
    if kt2 == 0.0:
        return 2.0 * ev
    x = ev / kt2
    if x > COTH_SATURATION:
        return 2.0 * ev
    return 4.0 * CODATA.k * env.temperature * _x_coth_x(x)


def thermal_noise(
    channels: "ChannelSet | Iterable[float]", env: NoiseEnvironment
) -> float:
    """Finite-temperature noise density of the contact.

    Combines the voltage-driven partition term, weighted by
    coth(e|V|/2kT), with the Johnson-Nyquist contribution of the open
    channels:

        P = 2e|V| coth(e|V|/2kT) G0 sum T_i(1-T_i) + 4kT G0 sum T_i^2

    Both limits are exact: T -> 0 recovers the partition noise F * 2e|I|,
    and V -> 0 recovers the equilibrium value 4kT G0 sum T_i.
    """
    c = as_channels(channels)
    partition = math.fsum(t * (1.0 - t) for t in c)
    open_sq = math.fsum(t * t for t in c)
    johnson = 4.0 * CODATA.k * env.temperature * CODATA.G0 * open_sq
    return _bias_weight(env) * CODATA.G0 * partition + johnson


def normalized_yield(
    channels: "ChannelSet | Iterable[float]", env: NoiseEnvironment
) -> float:
    """Photon yield of a channel set relative to the low-conductance limit.

    The finite-frequency noise that drives light emission, divided by its
    value for a far-tunneling contact of the same conductance:

        Y = P / (2e|V| coth(e|V|/2kT) G0 g)

    Y -> 1 as g -> 0 at any temperature, and Y equals the Fano factor at
    T = 0.
    """
    c = as_channels(channels)
    g = math.fsum(c)
    if g <= 0.0:
        raise ZeroConductanceError("yield undefined at zero conductance")
    w = _bias_weight(env)
    if w == 0.0:
        raise ValueError("yield undefined at zero bias and zero temperature")
    return thermal_noise(c, env) / (w * CODATA.G0 * g)


def normalized_yield_model(
    g: float, model: DecompositionModel, env: NoiseEnvironment
) -> float:
    """Model photon yield at conductance g under sequential-fill decomposition."""
    return normalized_yield(decompose(g, model), env)


class McFanoResult(NamedTuple):
    estimate: float
    std_error: float


def mc_fano(
    channels: "ChannelSet | Iterable[float]", attempts: int, seed: int
) -> McFanoResult:
    """Estimate the Fano factor by simulating binomial partitioning.

    Each attempt sends one carrier at every channel, which transmits with
    probability T_i; the variance-to-mean ratio of the transmitted count
    estimates F. Work is split into ``MC_BATCHES`` chunks with independent
    generators seeded ``seed + chunk_index``, so the result is identical
    however the chunks are scheduled. The standard error is the
    batch-means error of the per-chunk ratios; chunks that transmit
    nothing carry no ratio and are left out of it.

    Raises
    ------
    ValueError
        If ``attempts`` is below ``MC_MIN_ATTEMPTS``.
    ZeroConductanceError
        If no channel can transmit.
    """
    c = as_channels(channels)
    if attempts < MC_MIN_ATTEMPTS:
        raise ValueError(f"attempts must be at least {MC_MIN_ATTEMPTS}")
    if math.fsum(c) <= 0.0:
        raise ZeroConductanceError("no open channels to sample")
    probs = np.array(c.transmissions)
    base, extra = divmod(attempts, MC_BATCHES)
    total = 0.0
    total_sq = 0.0
    batch_ratios = []
    for index in range(MC_BATCHES):
        size = base + (1 if index < extra else 0)
        if size == 0:
            continue
        rng = np.random.default_rng(seed + index)
        counts = (rng.random((size, probs.size)) < probs).sum(axis=1)
        s = float(counts.sum())
        s2 = float((counts * counts).sum())
        total += s
        total_sq += s2
        mean = s / size
        if mean > 0.0 and size > 1:
            variance = (s2 - s * s / size) / (size - 1)
            batch_ratios.append(variance / mean)
    mean = total / attempts
    if mean == 0.0:
        raise ZeroConductanceError("no carriers transmitted; ratio undefined")
    variance = (total_sq - total * total / attempts) / (attempts - 1)
    estimate = variance / mean
    if len(batch_ratios) >= 2:
        b = np.asarray(batch_ratios)
        std_error = float(b.std(ddof=1) / math.sqrt(b.size))
    else:
        std_error = float("nan")
    return McFanoResult(estimate, std_error)
