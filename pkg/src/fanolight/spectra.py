"""Luminescence spectral maps: the CSV exchange format, band integration,
and the standard detection bands.

A map is the product of one tip approach: an ordered stack of spectra, one
per displacement step, all on a shared uniform photon-energy grid.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    BandOverlapError,
    FileFormatError,
    GridMismatchError,
    StepOrderError,
)

__all__ = [
    "Band",
    "BAND_1E_FRACTIONS",
    "BAND_2E_FRACTIONS",
    "GRID_TOL",
    "MapRecord",
    "SpectralMap",
    "Spectrum",
    "band_integrate",
    "default_bands",
    "intensity_trace",
    "parse_map",
    "serialize_map",
]

GRID_TOL = 1e-9  # eV; allowed wobble of the uniform energy spacing

# Detection bands as fractions of the quantum cutoff energy e*V: the
# one-electron band sits below the cutoff, the high-energy band starts at
# it. At 1.6 V these give the 1.19-1.47 eV and 1.60-2.08 eV windows.
BAND_1E_FRACTIONS = (0.74375, 0.91875)
BAND_2E_FRACTIONS = (1.0, 1.3)

_HEADER_PREFIX = ("step", "displacement_nm", "conductance_G0")


@dataclass(frozen=True)
class Spectrum:
    """One spectrum on a uniform photon-energy grid.

    ``energies`` are bin centers in eV, strictly ascending with uniform
    spacing (within ``GRID_TOL``); ``intensities`` are nonnegative count
    densities in counts/s/eV on the same grid.
    """

    energies: np.ndarray
    intensities: np.ndarray

    def __post_init__(self) -> None:
        e = np.asarray(self.energies, dtype=float)
        i = np.asarray(self.intensities, dtype=float)
        if e.ndim != 1 or e.size < 2:
            raise ValueError("need at least two energy bins")
        if not np.isfinite(e).all():
            raise ValueError("energies must be finite")
        d = np.diff(e)
        if not (d > 0.0).all():
            raise ValueError("energies must be strictly ascending")
        if np.abs(d - d.mean()).max() > GRID_TOL:
            raise ValueError("energy grid must be uniform")
        if i.shape != e.shape:
            raise ValueError("intensities must match the energy grid")
        if not np.isfinite(i).all() or (i < 0.0).any():
            raise ValueError("intensities must be finite and nonnegative")
        e.flags.writeable = False
        i.flags.writeable = False
        object.__setattr__(self, "energies", e)
        object.__setattr__(self, "intensities", i)

    @property
    def bin_width(self) -> float:
        e = self.energies
        return float((e[-1] - e[0]) / (e.size - 1))


@dataclass(frozen=True)
class MapRecord:
    """One displacement step of an approach: where the tip was, what the
    junction conducted, and what it emitted."""

    step: int
    displacement_nm: float
    conductance: float  # units of G0
    spectrum: Spectrum

    def __post_init__(self) -> None:
        if not np.isfinite(self.displacement_nm):
            raise ValueError("displacement must be finite")
        if not self.conductance >= 0.0:
            raise ValueError("conductance must be finite and nonnegative")


@dataclass(frozen=True)
class SpectralMap:
    """Ordered, grid-aligned stack of map records."""

    records: tuple[MapRecord, ...]

    def __post_init__(self) -> None:
        records = tuple(self.records)
        if not records:
            raise ValueError("a map needs at least one record")
        reference = records[0].spectrum.energies
        previous_step = None
        for record in records:
            if previous_step is not None and record.step <= previous_step:
                raise StepOrderError(
                    f"step {record.step} does not increase past {previous_step}"
                )
            previous_step = record.step
            if not np.array_equal(record.spectrum.energies, reference):
                raise GridMismatchError(
                    f"record at step {record.step} uses a different energy grid"
                )
        object.__setattr__(self, "records", records)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    @property
    def energies(self) -> np.ndarray:
        return self.records[0].spectrum.energies


@dataclass(frozen=True)
class Band:
    """Photon-energy window [lo, hi] in eV."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not 0.0 < self.lo < self.hi:
            raise ValueError(f"band bounds must satisfy 0 < lo < hi, got {self}")


def default_bands(voltage: float) -> tuple[Band, Band]:
    """Standard detection bands for a given bias voltage.

    Both windows scale with the quantum cutoff e*V so that the 1e band
    stays below the cutoff and the high-energy band starts exactly at it.
    """
    if voltage <= 0.0:
        raise ValueError("voltage must be positive")
    band_1e = Band(BAND_1E_FRACTIONS[0] * voltage, BAND_1E_FRACTIONS[1] * voltage)
    band_2e = Band(BAND_2E_FRACTIONS[0] * voltage, BAND_2E_FRACTIONS[1] * voltage)
    return band_1e, band_2e


def band_integrate(spectrum: Spectrum, band: Band) -> float:
    """Rectangle-rule intensity over the bins whose centers fall in the band.

    Inclusion is closed on both edges. Returns counts/s.
    """
    e = spectrum.energies
    mask = (e >= band.lo) & (e <= band.hi)
    if not mask.any():
        raise BandOverlapError(
            f"band [{band.lo}, {band.hi}] eV contains no grid bins"
        )
    return float(spectrum.intensities[mask].sum() * spectrum.bin_width)


def intensity_trace(
    spectral_map: SpectralMap, band: Band
) -> list[tuple[float, float]]:
    """(conductance, band intensity) for every record of the map."""
    return [
        (record.conductance, band_integrate(record.spectrum, band))
        for record in spectral_map
    ]


def parse_map(text: str) -> SpectralMap:
    """Parse the spectral-map CSV exchange format.

    The first line carries the shared energy grid
    (``step,displacement_nm,conductance_G0,E:<eV>,...``); every following
    line is one record. Errors carry the 1-based line number.
    """
    lines = text.splitlines()
    if not lines:
        raise FileFormatError(1, "empty input")
    header = lines[0].split(",")
    if tuple(header[:3]) != _HEADER_PREFIX:
        raise FileFormatError(
            1, "header must start with step,displacement_nm,conductance_G0"
        )
    if len(header) < 5:
        raise FileFormatError(1, "need at least two energy columns")
    energies = []
    for column in header[3:]:
        if not column.startswith("E:"):
            raise FileFormatError(1, f"energy column {column!r} must look like E:<eV>")
        try:
            energies.append(float(column[2:]))
        except ValueError:
            raise FileFormatError(1, f"bad energy value in column {column!r}") from None
    grid = np.array(energies)
    if not np.isfinite(grid).all():
        raise FileFormatError(1, "energies must be finite")
    d = np.diff(grid)
    if not (d > 0.0).all():
        raise FileFormatError(1, "energies must be strictly ascending")
    if np.abs(d - d.mean()).max() > GRID_TOL:
        raise FileFormatError(1, "energy grid must be uniform")

    records = []
    previous_step = None
    for number, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 3 + grid.size:
            raise FileFormatError(
                number, f"expected {3 + grid.size} columns, got {len(parts)}"
            )
        try:
            step = int(parts[0])
        except ValueError:
            raise FileFormatError(number, f"bad step index {parts[0]!r}") from None
        try:
            displacement = float(parts[1])
            conductance = float(parts[2])
            intensities = np.array([float(p) for p in parts[3:]])
        except ValueError:
            raise FileFormatError(number, "bad numeric field") from None
        if previous_step is not None and step <= previous_step:
            raise StepOrderError(
                f"line {number}: step {step} does not increase past {previous_step}"
            )
        previous_step = step
        if not conductance >= 0.0:
            raise FileFormatError(number, f"negative conductance {parts[2]}")
        bad = np.flatnonzero(~np.isfinite(intensities) | (intensities < 0.0))
        if bad.size:
            raise FileFormatError(
                number, f"invalid intensity {parts[3 + bad[0]]!r} in column {4 + bad[0]}"
            )
        records.append(
            MapRecord(step, displacement, conductance, Spectrum(grid, intensities))
        )
    if not records:
        raise FileFormatError(2, "expected at least one record line")
    return SpectralMap(tuple(records))


def serialize_map(spectral_map: SpectralMap) -> str:
    """Render a map in the CSV exchange format.

    UTF-8-safe ASCII, LF line endings, trailing newline. Floats use the
    shortest representation that parses back to the identical double, so
    serialization is lossless: a map survives a text round trip bit for
    bit and downstream analysis sees exactly the generated values, and
    ``serialize_map(parse_map(s)) == s`` for files the serializer produced.
    """
    header = ",".join(
        list(_HEADER_PREFIX) + [f"E:{float(e)!r}" for e in spectral_map.energies]
    )
    lines = [header]
    for record in spectral_map:
        fields = [
            str(record.step),
            repr(float(record.displacement_nm)),
            repr(float(record.conductance)),
        ]
        fields.extend(repr(float(v)) for v in record.spectrum.intensities)
        lines.append(",".join(fields))
    return "\n".join(lines) + "\n"
