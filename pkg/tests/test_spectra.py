import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

import fanolight as fl
from fanolight.errors import (
    BandOverlapError,
    FileFormatError,
    GridMismatchError,
    StepOrderError,
)


def flat_spectrum(lo=1.005, hi=2.195, width=0.01, level=100.0):
    n = int(round((hi - lo) / width)) + 1
    energies = lo + np.arange(n) * width
    return fl.Spectrum(energies, np.full(n, level))


def small_map_text():
    return (
        "step,displacement_nm,conductance_G0,E:1.2,E:1.3,E:1.4\n"
        "0,0.0,0.001,10.0,20.0,30.0\n"
        "1,0.01,0.002,11.0,21.0,31.0\n"
    )


def test_spectrum_validation():
    with pytest.raises(ValueError):
        fl.Spectrum(np.array([1.0]), np.array([1.0]))
    with pytest.raises(ValueError):
        fl.Spectrum(np.array([1.0, 0.9]), np.array([1.0, 1.0]))
    with pytest.raises(ValueError):
        fl.Spectrum(np.array([1.0, 1.1, 1.3]), np.array([1.0, 1.0, 1.0]))
    with pytest.raises(ValueError):
        fl.Spectrum(np.array([1.0, 1.1]), np.array([1.0, -1.0]))
    with pytest.raises(ValueError):
        fl.Spectrum(np.array([1.0, 1.1]), np.array([1.0]))
    s = fl.Spectrum([1.0, 1.1, 1.2], [0.0, 1.0, 2.0])
    assert s.bin_width == pytest.approx(0.1, rel=1e-12)
    with pytest.raises(ValueError):
        s.intensities[0] = 5.0  # frozen after construction


def test_band_validation():
    with pytest.raises(ValueError):
        fl.Band(1.5, 1.2)
    with pytest.raises(ValueError):
        fl.Band(0.0, 1.2)
    with pytest.raises(ValueError):
        fl.Band(-1.0, 1.2)


def test_band_integrate_flat():
    s = flat_spectrum()
    # 28 bins of width 0.01 at 100 counts/s/eV inside [1.19, 1.47]
    total = fl.band_integrate(s, fl.Band(1.19, 1.47))
    assert total == pytest.approx(28.0, rel=1e-12)


def test_band_integrate_zero_and_empty():
    s = fl.Spectrum([1.0, 1.1, 1.2], [0.0, 0.0, 0.0])
    assert fl.band_integrate(s, fl.Band(0.9, 1.3)) == 0.0
    with pytest.raises(BandOverlapError):
        fl.band_integrate(s, fl.Band(3.0, 3.5))


def test_band_integrate_closed_edges():
    s = fl.Spectrum([1.0, 1.1, 1.2, 1.3], [1.0, 1.0, 1.0, 1.0])
    # centers sitting exactly on lo/hi are included
    assert fl.band_integrate(s, fl.Band(1.1, 1.2)) == pytest.approx(0.2, rel=1e-9)


def test_band_integrate_additive_disjoint():
    s = flat_spectrum(level=7.0)
    b1 = fl.Band(1.2, 1.3)
    b2 = fl.Band(1.5, 1.7)
    union_mask = ((s.energies >= b1.lo) & (s.energies <= b1.hi)) | (
        (s.energies >= b2.lo) & (s.energies <= b2.hi)
    )
    expected = float(s.intensities[union_mask].sum() * s.bin_width)
    got = fl.band_integrate(s, b1) + fl.band_integrate(s, b2)
    assert got == pytest.approx(expected, rel=1e-12)


@given(
    st.lists(st.floats(min_value=0.0, max_value=1e6), min_size=5, max_size=5),
    st.lists(st.floats(min_value=0.0, max_value=1e6), min_size=5, max_size=5),
    st.floats(min_value=0.0, max_value=100.0),
)
@settings(derandomize=True, max_examples=200)
def test_band_integrate_linear(i1, i2, scale):
    grid = np.linspace(1.0, 1.4, 5)
    band = fl.Band(1.05, 1.35)
    a = fl.band_integrate(fl.Spectrum(grid, i1), band)
    b = fl.band_integrate(fl.Spectrum(grid, i2), band)
    combined = fl.Spectrum(grid, scale * np.array(i1) + np.array(i2))
    assert fl.band_integrate(combined, band) == pytest.approx(
        scale * a + b, rel=1e-9, abs=1e-9
    )


def test_default_bands_values():
    b1, b2 = fl.default_bands(1.6)
    assert (b1.lo, b1.hi) == (pytest.approx(1.19, rel=1e-12), pytest.approx(1.47, rel=1e-12))
    assert (b2.lo, b2.hi) == (pytest.approx(1.60, rel=1e-12), pytest.approx(2.08, rel=1e-12))
    b1, b2 = fl.default_bands(0.8)
    assert (b1.lo, b1.hi) == (pytest.approx(0.595, rel=1e-12), pytest.approx(0.735, rel=1e-12))
    assert (b2.lo, b2.hi) == (pytest.approx(0.80, rel=1e-12), pytest.approx(1.04, rel=1e-12))
    with pytest.raises(ValueError):
        fl.default_bands(0.0)
    with pytest.raises(ValueError):
        fl.default_bands(-1.6)


@given(st.floats(min_value=0.1, max_value=10.0))
@settings(derandomize=True, max_examples=100)
def test_default_bands_straddle_cutoff(voltage):
    b1, b2 = fl.default_bands(voltage)
    assert b1.hi < voltage  # 1e band stays below the quantum cutoff
    assert b2.lo == voltage  # high-energy band starts at it


def test_parse_map_small():
    m = fl.parse_map(small_map_text())
    assert len(m) == 2
    assert_allclose(m.energies, [1.2, 1.3, 1.4])
    first = m.records[0]
    assert first.step == 0
    assert first.conductance == 0.001
    assert_allclose(first.spectrum.intensities, [10.0, 20.0, 30.0])


def test_parse_map_errors_carry_line_numbers():
    bad_intensity = small_map_text().replace("11.0", "-11.0")
    with pytest.raises(FileFormatError) as err:
        fl.parse_map(bad_intensity)
    assert err.value.line == 3
    assert "line 3" in str(err.value)

    bad_step_order = small_map_text().replace("\n1,", "\n0,")
    with pytest.raises(StepOrderError):
        fl.parse_map(bad_step_order)

    wrong_columns = small_map_text().replace("31.0", "31.0,99.0")
    with pytest.raises(FileFormatError) as err:
        fl.parse_map(wrong_columns)
    assert err.value.line == 3

    with pytest.raises(FileFormatError) as err:
        fl.parse_map("wrong,header,line\n")
    assert err.value.line == 1

    with pytest.raises(FileFormatError):
        fl.parse_map("step,displacement_nm,conductance_G0,E:1.2,E:oops\n0,0,0,1,2\n")

    with pytest.raises(FileFormatError):
        fl.parse_map(small_map_text().replace("21.0", "twenty"))

    with pytest.raises(FileFormatError):
        fl.parse_map("")

    header_only = small_map_text().splitlines()[0] + "\n"
    with pytest.raises(FileFormatError):
        fl.parse_map(header_only)


def test_parse_map_rejects_bad_grid():
    text = "step,displacement_nm,conductance_G0,E:1.4,E:1.3\n0,0,0.001,1,2\n"
    with pytest.raises(FileFormatError) as err:
        fl.parse_map(text)
    assert err.value.line == 1
    text = "step,displacement_nm,conductance_G0,E:1.0,E:1.1,E:1.3\n0,0,0.001,1,2,3\n"
    with pytest.raises(FileFormatError):
        fl.parse_map(text)


def test_map_constructor_invariants():
    grid_a = np.array([1.0, 1.1, 1.2])
    grid_b = np.array([1.0, 1.2, 1.4])
    flat = np.ones(3)
    rec = lambda step, grid: fl.MapRecord(step, 0.0, 0.5, fl.Spectrum(grid, flat))
    with pytest.raises(StepOrderError):
        fl.SpectralMap((rec(0, grid_a), rec(0, grid_a)))
    with pytest.raises(GridMismatchError):
        fl.SpectralMap((rec(0, grid_a), rec(1, grid_b)))
    with pytest.raises(ValueError):
        fl.SpectralMap(())
    with pytest.raises(ValueError):
        fl.MapRecord(0, 0.0, -0.5, fl.Spectrum(grid_a, flat))


def test_serialize_round_trip_small():
    m = fl.parse_map(small_map_text())
    text = fl.serialize_map(m)
    again = fl.parse_map(text)
    assert fl.serialize_map(again) == text
    assert len(again) == 2
    assert_allclose(again.records[1].spectrum.intensities, [11.0, 21.0, 31.0])


def test_serialize_round_trip_synthetic():
    for mode in ("none", "poisson"):
        m = fl.synth_map(fl.SynthConfig(noise_mode=mode, n_steps=12))
        text = fl.serialize_map(m)
        m2 = fl.parse_map(text)
        assert fl.serialize_map(m2) == text
        for a, b in zip(m, m2):
            assert a.step == b.step
            assert a.conductance == b.conductance
            assert np.array_equal(a.spectrum.intensities, b.spectrum.intensities)


def test_intensity_trace():
    m = fl.parse_map(small_map_text())
    trace = fl.intensity_trace(m, fl.Band(1.25, 1.45))
    assert [g for g, _ in trace] == [0.001, 0.002]
    assert trace[0][1] == pytest.approx((20.0 + 30.0) * 0.1, rel=1e-12)


def test_intensity_trace_scales_linearly():
    m = fl.parse_map(small_map_text())
    scaled_records = tuple(
        fl.MapRecord(
            r.step,
            r.displacement_nm,
            r.conductance,
            fl.Spectrum(r.spectrum.energies, 3.0 * r.spectrum.intensities),
        )
        for r in m
    )
    scaled = fl.SpectralMap(scaled_records)
    band = fl.Band(1.15, 1.45)
    for (g1, v1), (g2, v2) in zip(
        fl.intensity_trace(m, band), fl.intensity_trace(scaled, band)
    ):
        assert g1 == g2
        assert v2 == pytest.approx(3.0 * v1, rel=1e-12)
