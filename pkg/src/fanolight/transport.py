"""Landauer transport: channel sets, the Fano factor, and the decomposition
of a measured conductance into transmission channels.

Conductances are dimensionless throughout (units of the conductance quantum
G0 = 2 e^2 / h); multiply by :data:`fanolight.constants.CODATA.G0` for siemens.
"""

import math
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from .errors import (
    CapacityExceededError,
    NegativeConductanceError,
    ZeroConductanceError,
)

__all__ = [
    "CAPACITY_TOL",
    "SATURATION_G",
    "ChannelSet",
    "DecompositionModel",
    "as_channels",
    "atoms",
    "decompose",
    "fano",
    "fano_curve",
    "total_transmission",
    "two_channel",
]

CAPACITY_TOL = 1e-12

# Conductance at which the dominant channel of a single-atom contact stops
# growing and a second channel starts to open, in units of G0.
SATURATION_G = 0.93


@dataclass(frozen=True)
class ChannelSet:
    """Transmission probabilities of the open quantum channels.

    The empty set is a valid conductor with zero conductance. Order is
    preserved but carries no physics; every derived quantity is
    permutation invariant.
    """

    transmissions: tuple[float, ...]

    def __post_init__(self) -> None:
        ts = tuple(float(t) for t in self.transmissions)
        for t in ts:
            if not 0.0 <= t <= 1.0:  # also rejects NaN
                raise ValueError(f"transmission {t!r} outside [0, 1]")
        object.__setattr__(self, "transmissions", ts)

    def __len__(self) -> int:
        return len(self.transmissions)

    def __iter__(self):
        return iter(self.transmissions)


def as_channels(channels: "ChannelSet | Iterable[float]") -> ChannelSet:
    """Coerce a bare sequence of transmissions into a :class:`ChannelSet`."""
    if isinstance(channels, ChannelSet):
        return channels
    return ChannelSet(tuple(channels))


def total_transmission(channels: "ChannelSet | Iterable[float]") -> float:
    """Sum of transmissions, i.e. the conductance in units of G0."""
    return math.fsum(as_channels(channels))


def fano(channels: "ChannelSet | Iterable[float]") -> float:
    """Fano factor F = sum T_i (1 - T_i) / sum T_i of a channel set.

    F is the shot-noise suppression relative to the Schottky value: 1 for
    opaque channels, 0 when every open channel is fully transparent.

    Raises
    ------
    ZeroConductanceError
        If no channel transmits (the ratio is undefined).
    """
    c = as_channels(channels)
    total = math.fsum(c)
    if total <= 0.0:
        raise ZeroConductanceError("Fano factor undefined at zero conductance")
    partition = math.fsum(t * (1.0 - t) for t in c)
    return partition / total


@dataclass(frozen=True)
class DecompositionModel:
    """Sequential-filling rule mapping a total conductance to channels.

    Channel i admits conductance up to its saturation ``s_i``; anything
    above spills into the next channel. The model's capacity is the sum
    of saturations.
    """

    saturations: tuple[float, ...]
    description: str = ""

    def __post_init__(self) -> None:
        ss = tuple(float(s) for s in self.saturations)
        if not ss:
            raise ValueError("a decomposition model needs at least one channel")
        for s in ss:
            if not 0.0 < s <= 1.0:
                raise ValueError(f"saturation {s!r} outside (0, 1]")
        object.__setattr__(self, "saturations", ss)

    @property
    def capacity(self) -> float:
        return math.fsum(self.saturations)


def two_channel() -> DecompositionModel:
    """Minimal single-atom contact model: one channel saturating at
    ``SATURATION_G`` plus one fully opening channel."""
    return DecompositionModel((SATURATION_G, 1.0), "single-atom two-channel model")


def atoms(n: int) -> DecompositionModel:
    """Preset for an n-atom contact: n channels saturating at
    ``SATURATION_G``, then one fully opening channel."""
    if n < 1:
        raise ValueError("atom count must be at least 1")
    return DecompositionModel(
        (SATURATION_G,) * n + (1.0,), f"{n}-atom contact preset"
    )


def decompose(g: float, model: DecompositionModel) -> ChannelSet:
    """Split a total conductance into channels by sequential filling.

    Fills each channel of ``model`` in order up to its saturation until g
    is exhausted; trailing closed channels are dropped, so ``decompose(0.5)``
    under any model is the single channel (0.5,).

    Raises
    ------
    NegativeConductanceError
        If g < 0.
    CapacityExceededError
        If g exceeds the model capacity by more than ``CAPACITY_TOL``.
    """
    g = float(g)
    if g < 0.0:
        raise NegativeConductanceError(f"conductance {g} below zero")
    cap = model.capacity
    if g > cap + CAPACITY_TOL:
        raise CapacityExceededError(
            f"conductance {g} exceeds model capacity {cap}"
        )
    remaining = g
    fills = []
    for s in model.saturations:
        t = min(remaining, s)
        fills.append(t)
        remaining -= t
    while fills and fills[-1] == 0.0:
        fills.pop()
    return ChannelSet(tuple(fills))


def fano_curve(
    model: DecompositionModel,
    g_min: float,
    g_max: float,
    n_points: int,
    spacing: str = "log",
) -> list[tuple[float, float]]:
    """Fano factor of the decomposed contact along a conductance grid.

    Returns ``n_points`` pairs (g, F) with g spaced logarithmically (the
    default, matching how approach curves sample conductance) or linearly
    between g_min and g_max inclusive.
    """
    if n_points < 2:
        raise ValueError("need at least two grid points")
    if g_min <= 0.0:
        raise ValueError("g_min must be positive; the Fano factor is undefined at 0")
    if not g_min < g_max:
        raise ValueError("g_min must lie below g_max")
    if g_max > model.capacity + CAPACITY_TOL:
        raise CapacityExceededError(
            f"g_max {g_max} exceeds model capacity {model.capacity}"
        )
    if spacing == "log":
        grid = np.geomspace(g_min, g_max, n_points)
    elif spacing == "linear":
        grid = np.linspace(g_min, g_max, n_points)
    else:
        raise ValueError(f"unknown spacing {spacing!r}; use 'log' or 'linear'")
    return [(float(g), fano(decompose(float(g), model))) for g in grid]
