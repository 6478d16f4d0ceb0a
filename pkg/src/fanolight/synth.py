"""Deterministic synthetic tip approaches: conductance traces and full
spectral maps with a known photon-yield law. Used for demos and as the
golden-file source for parser and pipeline tests.
"""

from dataclasses import dataclass, field

import numpy as np

from .constants import CODATA
from .noise import NoiseEnvironment, normalized_yield_model
from .spectra import MapRecord, SpectralMap, Spectrum, default_bands
from .transport import DecompositionModel, two_channel

__all__ = [
    "SHOULDER_FRACTION",
    "SHOULDER_SATURATION_G",
    "SynthConfig",
    "contact_position",
    "synth_map",
    "synth_trace",
]

# The high-energy shoulder rises linearly with conductance up to
# SHOULDER_SATURATION_G and then stays at SHOULDER_FRACTION of the 1e
# density. A toy shape: reported and compared, never fitted.
SHOULDER_FRACTION = 0.1
SHOULDER_SATURATION_G = 0.25


@dataclass(frozen=True)
class SynthConfig:
    """Everything needed to generate one synthetic measurement.

    The conductance runs exponentially through the tunneling range (length
    scale ``tunneling_decay``) and crosses over at ``contact_g`` to a
    linear ramp that reaches the model capacity at the end of ``z_range``;
    requiring a continuous slope at the crossover fixes its position. The
    default ``z_range`` starts the trace near g = 1e-3, three decades
    below contact.
    """

    voltage: float = 1.6               # V
    temperature: float = 2000.0        # K, electron temperature
    model: DecompositionModel = field(default_factory=two_channel)
    z_range: tuple[float, float] = (0.0, 0.356)  # nm
    n_steps: int = 60
    tunneling_decay: float = 0.045     # nm
    contact_g: float = 0.93            # G0 at the tunneling/contact crossover
    bin_width: float = 0.01            # eV
    energy_range: tuple[float, float] = (1.1, 2.2)  # eV
    base_rate: float = 1e8             # counts/s per A at unit yield
    noise_mode: str = "none"           # "none" | "poisson"
    seed: int = 0

    def __post_init__(self) -> None:
        if self.voltage <= 0.0:
            raise ValueError("voltage must be positive")
        if self.temperature < 0.0:
            raise ValueError("temperature must be nonnegative")
        if not self.z_range[0] < self.z_range[1]:
            raise ValueError("z_range must be increasing")
        if self.n_steps < 2:
            raise ValueError("need at least two steps")
        if self.tunneling_decay <= 0.0:
            raise ValueError("tunneling_decay must be positive")
        if not 0.0 < self.contact_g <= self.model.capacity:
            raise ValueError("contact_g must lie in (0, model capacity]")
        if self.bin_width <= 0.0:
            raise ValueError("bin_width must be positive")
        if not self.energy_range[0] < self.energy_range[1]:
            raise ValueError("energy_range must be increasing")
        if self.energy_range[0] <= 0.0:
            raise ValueError("energies must be positive")
        if self.base_rate <= 0.0:
            raise ValueError("base_rate must be positive")
        if self.noise_mode not in ("none", "poisson"):
            raise ValueError("noise_mode must be 'none' or 'poisson'")


def contact_position(config: SynthConfig) -> float:
    """Displacement where the trace switches from tunneling to the ramp.

    Slope continuity pins it: the ramp has slope contact_g/decay and must
    reach the model capacity exactly at the end of z_range.
    """
    slope = config.contact_g / config.tunneling_decay
    return config.z_range[1] - (config.model.capacity - config.contact_g) / slope


def synth_trace(config: SynthConfig) -> tuple[np.ndarray, np.ndarray]:
    """(z, g) on ``n_steps`` uniform displacement samples.

    g(z) = contact_g * exp((z - z_c)/decay) below the crossover z_c, then
    a linear ramp clipped at the model capacity. Nondecreasing in z.
    """
    z = np.linspace(config.z_range[0], config.z_range[1], config.n_steps)
    z_c = contact_position(config)
    slope = config.contact_g / config.tunneling_decay
    tunneling = config.contact_g * np.exp((z - z_c) / config.tunneling_decay)
    ramp = np.minimum(config.model.capacity, config.contact_g + slope * (z - z_c))
    g = np.where(z < z_c, tunneling, ramp)
    return z, g


def _energy_grid(config: SynthConfig) -> np.ndarray:
    e_lo, e_hi = config.energy_range
    n_bins = int(round((e_hi - e_lo) / config.bin_width))
    if n_bins < 2:
        raise ValueError("energy_range must span at least two bins")
    return e_lo + (np.arange(n_bins) + 0.5) * config.bin_width


def synth_map(config: SynthConfig) -> SpectralMap:
    """Generate a spectral map whose 1e band carries the model yield.

    Per step the 1e photon rate is base_rate * I * Y(g) spread evenly over
    the 1e detection band; the high-energy band carries the shoulder at
    its fraction of the 1e density; all other bins are dark. Poisson mode
    replaces each bin density by a draw of the counts it implies on a 1 s
    exposure, from one generator seeded ``config.seed``, so equal seeds
    give byte-identical maps.
    """
    energies = _energy_grid(config)
    band_1e, band_2e = default_bands(config.voltage)
    in_1e = (energies >= band_1e.lo) & (energies <= band_1e.hi)
    in_2e = (energies >= band_2e.lo) & (energies <= band_2e.hi)
    if not in_1e.any() or not in_2e.any():
        raise ValueError("energy_range does not cover the detection bands")
    width_1e = in_1e.sum() * config.bin_width

    env = NoiseEnvironment(config.voltage, config.temperature)
    rng = np.random.default_rng(config.seed)
    z, g = synth_trace(config)
    records = []
    for index in range(config.n_steps):
        g_i = float(g[index])
        current = g_i * CODATA.G0 * config.voltage
        level = (
            config.base_rate * current
            * normalized_yield_model(g_i, config.model, env) / width_1e
        )
        shoulder = (
            SHOULDER_FRACTION
            * min(g_i, SHOULDER_SATURATION_G) / SHOULDER_SATURATION_G
            * level
        )
        intensities = np.zeros(energies.size)
        intensities[in_1e] = level
        intensities[in_2e] = shoulder
        if config.noise_mode == "poisson":
            expected_counts = intensities * config.bin_width  # 1 s exposure
            intensities = rng.poisson(expected_counts) / config.bin_width
        records.append(
            MapRecord(index, float(z[index]), g_i, Spectrum(energies, intensities))
        )
    return SpectralMap(tuple(records))
