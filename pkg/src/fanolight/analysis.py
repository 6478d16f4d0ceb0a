"""Yield curves from spectral maps, comparison against the channel model,
and the electron-temperature fit.

The photon yield of a record is its band intensity divided by the Landauer
current, normalized so that the far-tunneling regime sits at 1. The
normalization constant is estimated from the data themselves: over a
low-conductance window the intensity is proportional to the current, and
the proportionality constant is the counts-per-ampere scale of the whole
curve.
"""

import math
from dataclasses import dataclass

import numpy as np

from .constants import CODATA
from .errors import (
    FileFormatError,
    InsufficientPointsError,
    NormalizationWindowError,
    ZeroConductanceError,
)
from .formatting import sig9
from .noise import NoiseEnvironment, normalized_yield_model
from .spectra import Band, SpectralMap, default_bands, intensity_trace
from .transport import DecompositionModel

__all__ = [
    "CURVE_CSV_HEADER",
    "DEFAULT_FIT_BOUNDS",
    "DEFAULT_NORM_WINDOW",
    "FIT_MIN_CONDUCTANCE",
    "FIT_TOLERANCE_K",
    "FIT_MAX_ITERATIONS",
    "FitResult",
    "MIN_FIT_POINTS",
    "MIN_WINDOW_POINTS",
    "QUANTUM_EFFICIENCY_1E",
    "QUANTUM_EFFICIENCY_2E",
    "YieldCurve",
    "YieldPoint",
    "compare_to_model",
    "curve_from_csv",
    "curve_to_csv",
    "fit_temperature",
    "yield_curve",
]

# Conductance window (units of G0) where intensity tracks current and the
# normalization is anchored.
DEFAULT_NORM_WINDOW = (1e-3, 5e-2)
MIN_WINDOW_POINTS = 3

# Detection efficiencies of the two bands in photons per electron at unit
# yield. Metadata for absolute-rate bookkeeping; nothing here computes
# with them.
QUANTUM_EFFICIENCY_1E = 3e-6
QUANTUM_EFFICIENCY_2E = 3e-7

# The temperature fit only uses points where the yield visibly departs
# from 1; below this conductance the curve carries no temperature
# information, only normalization noise.
FIT_MIN_CONDUCTANCE = 0.2
MIN_FIT_POINTS = 5
FIT_TOLERANCE_K = 1.0
FIT_MAX_ITERATIONS = 200
DEFAULT_FIT_BOUNDS = (1.0, 5000.0)

CURVE_CSV_HEADER = (
    "conductance_G0,current_A,intensity_1e,intensity_2e,yield_1e,yield_2e"
)

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class YieldPoint:
    conductance: float     # units of G0
    current: float         # A
    intensity_1e: float    # counts/s in the 1e band
    intensity_2e: float    # counts/s in the high-energy band
    yield_1e: float        # normalized
    yield_2e: float        # normalized


@dataclass(frozen=True)
class YieldCurve:
    """Normalized photon yields against conductance at a fixed bias.

    ``normalization_1e``/``normalization_2e`` are the fitted
    counts-per-ampere constants that divided the raw intensity/current
    ratios; curves loaded from CSV do not know them and carry None.
    """

    points: tuple[YieldPoint, ...]
    voltage: float
    normalization_1e: float | None = None
    normalization_2e: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))

    def __len__(self) -> int:
        return len(self.points)

    def conductances(self) -> np.ndarray:
        return np.array([p.conductance for p in self.points])

    def yields_1e(self) -> np.ndarray:
        return np.array([p.yield_1e for p in self.points])


@dataclass(frozen=True)
class FitResult:
    temperature: float           # K
    residual_sum_squares: float
    iterations: int
    converged: bool


def _proportionality(x: np.ndarray, y: np.ndarray) -> float:
    """Least-squares slope of y = c * x through the origin."""
    slope = float(np.dot(x, y)) / float(np.dot(x, x))
    if not slope > 0.0:
        raise NormalizationWindowError(
            "window intensities do not define a positive normalization"
        )
    return slope


def yield_curve(
    spectral_map: SpectralMap,
    voltage: float,
    band_1e: Band | None = None,
    band_2e: Band | None = None,
    norm_window: tuple[float, float] = DEFAULT_NORM_WINDOW,
) -> YieldCurve:
    """Reduce a spectral map to normalized yields against conductance.

    Per record: integrate both bands, divide by the ohmic current
    I = g G0 V, then divide by the counts-per-ampere slope fitted over the
    ``norm_window`` conductance range (at least ``MIN_WINDOW_POINTS``
    records must fall inside it).

    Raises
    ------
    ZeroConductanceError
        If any record sits at zero conductance (no current, no yield).
    NormalizationWindowError
        If the window holds too few records or cannot fix a positive scale.
    """
    if voltage <= 0.0:
        raise ValueError("voltage must be positive")
    lo, hi = norm_window
    if not 0.0 <= lo < hi:
        raise ValueError("norm_window must satisfy 0 <= lo < hi")
    if band_1e is None or band_2e is None:
        d1, d2 = default_bands(voltage)
        band_1e = band_1e if band_1e is not None else d1
        band_2e = band_2e if band_2e is not None else d2

    g = np.array([record.conductance for record in spectral_map])
    if (g <= 0.0).any():
        raise ZeroConductanceError(
            "map contains a zero-conductance record; current is undefined"
        )
    current = g * CODATA.G0 * voltage
    i1 = np.array([v for _, v in intensity_trace(spectral_map, band_1e)])
    i2 = np.array([v for _, v in intensity_trace(spectral_map, band_2e)])

    in_window = (g >= lo) & (g <= hi)
    if int(in_window.sum()) < MIN_WINDOW_POINTS:
        raise NormalizationWindowError(
            f"only {int(in_window.sum())} records have conductance in "
            f"[{lo}, {hi}]; need {MIN_WINDOW_POINTS}"
        )
    c1 = _proportionality(current[in_window], i1[in_window])
    c2 = _proportionality(current[in_window], i2[in_window])

    y1 = i1 / current / c1
    y2 = i2 / current / c2
    points = tuple(
        YieldPoint(float(g[j]), float(current[j]), float(i1[j]), float(i2[j]),
                   float(y1[j]), float(y2[j]))
        for j in range(g.size)
    )
    return YieldCurve(points, float(voltage), c1, c2)


def compare_to_model(
    curve: YieldCurve, model: DecompositionModel, env: NoiseEnvironment
) -> list[tuple[float, float, float, float]]:
    """(g, measured 1e yield, model yield, residual) per curve point."""
    rows = []
    for p in curve.points:
        predicted = normalized_yield_model(p.conductance, model, env)
        rows.append((p.conductance, p.yield_1e, predicted, p.yield_1e - predicted))
    return rows


def fit_temperature(
    curve: YieldCurve,
    model: DecompositionModel,
    voltage: float,
    bounds: tuple[float, float] = DEFAULT_FIT_BOUNDS,
    min_conductance: float = FIT_MIN_CONDUCTANCE,
) -> FitResult:
    """Fit the electron temperature to the 1e yield curve.

    Minimizes the sum of squared residuals between measured and model
    yields over points with g > ``min_conductance``, using a golden-section
    search on [bounds[0], bounds[1]] down to ``FIT_TOLERANCE_K`` (at most
    ``FIT_MAX_ITERATIONS`` interval reductions). The returned temperature
    is the midpoint of the final bracket, so it always lies inside the
    bounds; ``converged`` records whether the bracket actually shrank to
    tolerance.
    """
    t_lo, t_hi = float(bounds[0]), float(bounds[1])
    if not 0.0 < t_lo < t_hi:
        raise ValueError("bounds must satisfy 0 < T_lo < T_hi")
    pts = [
        (p.conductance, p.yield_1e)
        for p in curve.points
        if p.conductance > min_conductance
    ]
    if len(pts) < MIN_FIT_POINTS:
        raise InsufficientPointsError(
            f"only {len(pts)} points above g = {min_conductance}; "
            f"need {MIN_FIT_POINTS}"
        )

    def objective(temperature: float) -> float:
        env = NoiseEnvironment(voltage, temperature)
        return math.fsum(
            (y - normalized_yield_model(g, model, env)) ** 2 for g, y in pts
        )

    a, b = t_lo, t_hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc = objective(c)
    fd = objective(d)
    iterations = 0
    while (b - a) > FIT_TOLERANCE_K and iterations < FIT_MAX_ITERATIONS:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = objective(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = objective(d)
        iterations += 1
    temperature = 0.5 * (a + b)
    return FitResult(
        temperature=temperature,
        residual_sum_squares=objective(temperature),
        iterations=iterations,
        converged=(b - a) <= FIT_TOLERANCE_K,
    )


def curve_to_csv(curve: YieldCurve) -> str:
    """Render a yield curve as CSV (9 significant digits, LF endings)."""
    lines = [CURVE_CSV_HEADER]
    for p in curve.points:
        lines.append(",".join(sig9(v) for v in (
            p.conductance, p.current, p.intensity_1e, p.intensity_2e,
            p.yield_1e, p.yield_2e,
        )))
    return "\n".join(lines) + "\n"


def curve_from_csv(text: str, voltage: float) -> YieldCurve:
    """Load a yield curve written by :func:`curve_to_csv`.

    The CSV stores no normalization constants, so the result carries None
    for them. The current column is cross-checked against g * G0 * V at
    1e-6 relative, which catches a wrong ``voltage`` argument without
    tripping on 9-digit serialization rounding.
    """
    if voltage <= 0.0:
        raise ValueError("voltage must be positive")
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != CURVE_CSV_HEADER:
        raise FileFormatError(1, f"expected header {CURVE_CSV_HEADER!r}")
    points = []
    for number, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 6:
            raise FileFormatError(number, f"expected 6 columns, got {len(parts)}")
        try:
            g, current, i1, i2, y1, y2 = (float(p) for p in parts)
        except ValueError:
            raise FileFormatError(number, "bad numeric field") from None
        expected = g * CODATA.G0 * voltage
        if not math.isclose(current, expected, rel_tol=1e-6, abs_tol=0.0):
            raise ValueError(
                f"line {number}: current {current} inconsistent with "
                f"g * G0 * {voltage} V = {expected}"
            )
        points.append(YieldPoint(g, current, i1, i2, y1, y2))
    if not points:
        raise FileFormatError(2, "expected at least one data row")
    return YieldCurve(tuple(points), float(voltage))
