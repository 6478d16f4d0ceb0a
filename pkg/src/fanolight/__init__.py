"""Shot-noise suppression and photon yield of atomic-scale point contacts.

The model: a contact carries a few transmission channels; its current
noise is the Fano-suppressed shot noise plus the thermal contribution of
the open channels, and the photon yield of the junction tracks that noise.
As the contact closes into a single atom the dominant channel approaches
full transparency, the partition noise nearly vanishes, and the yield dips
to a minimum near one conductance quantum.
"""

from . import errors
from .analysis import (
    CURVE_CSV_HEADER,
    DEFAULT_FIT_BOUNDS,
    DEFAULT_NORM_WINDOW,
    FIT_MIN_CONDUCTANCE,
    FIT_TOLERANCE_K,
    QUANTUM_EFFICIENCY_1E,
    QUANTUM_EFFICIENCY_2E,
    FitResult,
    YieldCurve,
    YieldPoint,
    compare_to_model,
    curve_from_csv,
    curve_to_csv,
    fit_temperature,
    yield_curve,
)
from .constants import CODATA, PhysicalConstants
from .noise import (
    McFanoResult,
    NoiseEnvironment,
    mc_fano,
    normalized_yield,
    normalized_yield_model,
    schottky,
    shot_noise,
    thermal_noise,
)
from .spectra import (
    Band,
    MapRecord,
    SpectralMap,
    Spectrum,
    band_integrate,
    default_bands,
    intensity_trace,
    parse_map,
    serialize_map,
)
from .synth import (
    SHOULDER_FRACTION,
    SHOULDER_SATURATION_G,
    SynthConfig,
    contact_position,
    synth_map,
    synth_trace,
)
from .transport import (
    ChannelSet,
    DecompositionModel,
    atoms,
    decompose,
    fano,
    fano_curve,
    total_transmission,
    two_channel,
)

__version__ = "0.1.0"

__all__ = [
    "Band",
    "CODATA",
    "CURVE_CSV_HEADER",
    "ChannelSet",
    "DEFAULT_FIT_BOUNDS",
    "DEFAULT_NORM_WINDOW",
    "FIT_MIN_CONDUCTANCE",
    "FIT_TOLERANCE_K",
    "QUANTUM_EFFICIENCY_1E",
    "QUANTUM_EFFICIENCY_2E",
    "SHOULDER_FRACTION",
    "SHOULDER_SATURATION_G",
    "DecompositionModel",
    "FitResult",
    "MapRecord",
    "McFanoResult",
    "NoiseEnvironment",
    "PhysicalConstants",
    "SpectralMap",
    "Spectrum",
    "SynthConfig",
    "YieldCurve",
    "YieldPoint",
    "atoms",
    "band_integrate",
    "compare_to_model",
    "contact_position",
    "curve_from_csv",
    "curve_to_csv",
    "decompose",
    "default_bands",
    "errors",
    "fano",
    "fano_curve",
    "fit_temperature",
    "intensity_trace",
    "mc_fano",
    "normalized_yield",
    "normalized_yield_model",
    "parse_map",
    "schottky",
    "serialize_map",
    "shot_noise",
    "synth_map",
    "synth_trace",
    "thermal_noise",
    "total_transmission",
    "two_channel",
    "yield_curve",
]
