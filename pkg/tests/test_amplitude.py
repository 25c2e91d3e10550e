"""Tests for amplitude bound extraction and spectrum assembly."""

import math

import numpy as np
import pytest

from intervaldft import (
    AmplitudeBounds,
    BoundedSpectrum,
    ComplexInterval,
    Interval,
    IntervalSignal,
    ResourceLimitError,
    amplitude_bounds_box,
    amplitude_bounds_selective,
    bounding_box,
    convex_hull,
    dft_crisp,
    selective,
    spectrum_bounds,
)

from conftest import figure_style_signal, random_interval_signal

RECTANGLE = convex_hull([(0, -2), (2, -2), (2, -1), (0, -1)])
RECT_BOX = ComplexInterval(Interval(0, 2), Interval(-2, -1))


class TestAmplitudeBoundsInvariants:
    def test_ordering_enforced(self):
        with pytest.raises(ValueError):
            AmplitudeBounds(lo=2.0, hi=1.0, method="box", origin_enclosed=False)

    def test_nonnegative(self):
        with pytest.raises(ValueError):
            AmplitudeBounds(lo=-0.5, hi=1.0, method="box", origin_enclosed=False)

    def test_origin_enclosed_forces_zero(self):
        with pytest.raises(ValueError):
            AmplitudeBounds(lo=0.5, hi=1.0, method="box", origin_enclosed=True)

    def test_method_vocabulary(self):
        with pytest.raises(ValueError):
            AmplitudeBounds(lo=0.0, hi=1.0, method="fft", origin_enclosed=False)


class TestSelectiveBounds:
    def test_rectangle_edge_projection(self):
        bounds = amplitude_bounds_selective(RECTANGLE)
        assert bounds.lo == pytest.approx(1.0, abs=1e-12)
        assert bounds.hi == pytest.approx(math.sqrt(8.0), abs=1e-12)
        assert bounds.method == "selective"
        assert not bounds.origin_enclosed

    def test_origin_enclosed_square(self):
        square = convex_hull([(-1, -1), (1, -1), (1, 1), (-1, 1)])
        bounds = amplitude_bounds_selective(square)
        assert bounds.lo == 0.0
        assert bounds.origin_enclosed
        assert bounds.hi == pytest.approx(math.sqrt(2.0), abs=1e-12)

    def test_point_region(self):
        bounds = amplitude_bounds_selective(convex_hull([(3.0, 4.0)]))
        assert bounds.lo == pytest.approx(5.0, abs=1e-12)
        assert bounds.hi == pytest.approx(5.0, abs=1e-12)

    def test_vertex_min_variant(self):
        # Vertex-only rule misses the edge-interior projection at (1, 0).
        square = convex_hull([(1, -1), (3, -1), (3, 1), (1, 1)])
        exact = amplitude_bounds_selective(square)
        compat = amplitude_bounds_selective(square, vertex_min=True)
        assert exact.lo == pytest.approx(1.0, abs=1e-12)
        assert compat.lo == pytest.approx(math.sqrt(2.0), abs=1e-12)
        assert exact.hi == compat.hi


class TestBoxBounds:
    def test_rectangle(self):
        bounds = amplitude_bounds_box(RECT_BOX)
        assert bounds.lo == pytest.approx(1.0, abs=1e-12)
        assert bounds.hi == pytest.approx(math.sqrt(8.0), abs=1e-12)
        assert bounds.method == "box"

    def test_origin_inside(self):
        bounds = amplitude_bounds_box(ComplexInterval(Interval(-1, 1), Interval(-1, 1)))
        assert bounds.lo == 0.0
        assert bounds.origin_enclosed
        assert bounds.hi == pytest.approx(math.sqrt(2.0), abs=1e-12)

    def test_degenerate_box(self):
        bounds = amplitude_bounds_box(ComplexInterval(Interval(3, 3), Interval(4, 4)))
        assert bounds.lo == pytest.approx(5.0, abs=1e-12)
        assert bounds.hi == pytest.approx(5.0, abs=1e-12)

    def test_matches_interval_arithmetic_route(self):
        # Clamp/corner evaluation must agree with squaring both component
        # intervals, adding, and taking the interval square root.
        rng = np.random.default_rng(61)
        for _ in range(300):
            a, b = np.sort(rng.uniform(-10, 10, 2))
            c, d = np.sort(rng.uniform(-10, 10, 2))
            box = ComplexInterval(Interval(a, b), Interval(c, d))
            bounds = amplitude_bounds_box(box)
            via_intervals = (box.re.square() + box.im.square()).sqrt()
            assert bounds.lo == pytest.approx(via_intervals.lo, rel=1e-12, abs=1e-12)
            assert bounds.hi == pytest.approx(via_intervals.hi, rel=1e-12, abs=1e-12)


class TestSpectrumBounds:
    def test_width_zero_equals_crisp_amplitudes(self):
        values = [1.0, -2.0, 0.5, 3.0, -1.0, 2.5]
        signal = IntervalSignal.from_crisp(values)
        reference = [abs(z) for z in dft_crisp(values)]
        for method in ("box", "selective", "brute"):
            spec = spectrum_bounds(signal, method)
            for (k, bounds), ref in zip(spec, reference):
                assert bounds.lo == pytest.approx(ref, abs=1e-10)
                assert bounds.hi == pytest.approx(ref, abs=1e-10)

    def test_selective_nested_in_box(self):
        rng = np.random.default_rng(62)
        signal = random_interval_signal(rng, 24)
        sel = spectrum_bounds(signal, "selective")
        box = spectrum_bounds(signal, "box")
        slack = 1e-9 * (1.0 + box.hi)
        assert np.all(sel.lo >= box.lo - slack)
        assert np.all(sel.hi <= box.hi + slack)

    def test_brute_sandwich_on_short_signal(self):
        rng = np.random.default_rng(63)
        signal = random_interval_signal(rng, 10)
        brute = spectrum_bounds(signal, "brute")
        sel = spectrum_bounds(signal, "selective")
        box = spectrum_bounds(signal, "box")
        tol = 1e-9 * (1.0 + box.hi)
        assert np.allclose(brute.lo, sel.lo, atol=tol.max())
        assert np.allclose(brute.hi, sel.hi, atol=tol.max())
        assert np.all(sel.lo >= box.lo - tol)
        assert np.all(sel.hi <= box.hi + tol)

    def test_widening_with_precision(self):
        values = figure_style_signal(64, seed=3)
        specs = [
            spectrum_bounds(IntervalSignal.from_crisp(values, xi), "selective")
            for xi in (0.5, 1.0, 2.0)
        ]
        for narrow, wide in zip(specs, specs[1:]):
            assert np.all(wide.lo <= narrow.lo + 1e-12)
            assert np.all(wide.hi >= narrow.hi - 1e-12)

    def test_positive_homogeneity(self):
        rng = np.random.default_rng(64)
        signal = random_interval_signal(rng, 16)
        factor = 4.0
        scaled = IntervalSignal(tuple(s.scale(factor) for s in signal))
        base = spectrum_bounds(signal, "selective")
        big = spectrum_bounds(scaled, "selective")
        assert np.allclose(big.lo, factor * base.lo, rtol=1e-12, atol=1e-12)
        assert np.allclose(big.hi, factor * base.hi, rtol=1e-12, atol=1e-12)

    def test_conjugate_symmetry_of_bounds(self):
        rng = np.random.default_rng(65)
        n = 18
        signal = random_interval_signal(rng, n)
        for k in (1, 4, 7):
            fwd = amplitude_bounds_selective(selective(signal, k).final)
            bwd = amplitude_bounds_selective(selective(signal, n - k).final)
            assert fwd.lo == pytest.approx(bwd.lo, abs=1e-9)
            assert fwd.hi == pytest.approx(bwd.hi, abs=1e-9)

            fwd_box = amplitude_bounds_box(bounding_box(signal, k).final)
            bwd_box = amplitude_bounds_box(bounding_box(signal, n - k).final)
            assert fwd_box.lo == pytest.approx(bwd_box.lo, abs=1e-9)
            assert fwd_box.hi == pytest.approx(bwd_box.hi, abs=1e-9)

    def test_k_range_validation(self):
        signal = IntervalSignal.from_crisp([1.0] * 8)
        with pytest.raises(ValueError):
            spectrum_bounds(signal, "box", ks=[0, 5])
        with pytest.raises(ValueError):
            spectrum_bounds(signal, "box", ks=[2, 1])
        with pytest.raises(ValueError):
            spectrum_bounds(signal, "box", ks=[])
        with pytest.raises(ValueError):
            spectrum_bounds(signal, "fft")

    def test_brute_propagates_resource_error(self):
        signal = IntervalSignal.from_crisp(np.zeros(32), 1.0)
        with pytest.raises(ResourceLimitError):
            spectrum_bounds(signal, "brute")

    def test_entries_sorted_and_typed(self):
        signal = IntervalSignal.from_crisp(np.arange(8.0), 0.5)
        spec = spectrum_bounds(signal, "box", ks=(1, 2, 3))
        assert list(spec.ks) == [1, 2, 3]
        assert spec.signal_length == 8
        assert spec.precision == 0.5
        assert len(spec) == 3
        with pytest.raises(ValueError):
            BoundedSpectrum(
                entries=tuple((k, b) for k, b in [(2, spec.entries[0][1]), (1, spec.entries[1][1])]),
                signal_length=8,
                method="box",
            )
