"""Tests for the cross-verification harness."""

import json

import numpy as np
import pytest

from intervaldft import (
    CheckResult,
    IntervalSignal,
    ResourceLimitError,
    VerificationReport,
    verify_hull_in_box,
    verify_mc_enclosure,
    verify_selective_vs_brute,
    verify_signal,
)

from conftest import figure_style_signal, random_interval_signal


class TestSelectiveVsBrute:
    def test_eight_samples_high_k(self):
        rng = np.random.default_rng(70)
        signal = random_interval_signal(rng, 8)
        result = verify_selective_vs_brute(signal, 9)
        assert result.passed
        assert result.discrepancy < 1e-9

    def test_width_zero_signal(self):
        signal = IntervalSignal.from_crisp([1.0, -2.0, 0.5, 3.0])
        result = verify_selective_vs_brute(signal, 1)
        assert result.passed
        assert result.discrepancy == pytest.approx(0.0, abs=1e-15)

    def test_sweep_all_frequencies(self):
        rng = np.random.default_rng(71)
        signal = random_interval_signal(rng, 10)
        for k in range(6):
            result = verify_selective_vs_brute(signal, k)
            assert result.passed, result.summary_line()

    def test_respects_cap(self):
        signal = IntervalSignal.from_crisp(np.zeros(64), 1.0)
        with pytest.raises(ResourceLimitError):
            verify_selective_vs_brute(signal, 1)


class TestHullInBox:
    def test_reference_setup(self):
        signal = IntervalSignal.from_crisp(figure_style_signal(128), 2.0)
        result = verify_hull_in_box(signal, 9)
        assert result.passed
        assert result.discrepancy <= 1e-9

    def test_degenerate_dc(self):
        signal = IntervalSignal.from_crisp(figure_style_signal(32, seed=2), 1.0)
        result = verify_hull_in_box(signal, 0)
        assert result.passed

    def test_random_sweep(self):
        rng = np.random.default_rng(72)
        signal = random_interval_signal(rng, 64)
        for k in range(33):
            result = verify_hull_in_box(signal, k)
            assert result.passed, result.summary_line()


class TestMcEnclosure:
    def test_reference_setup(self):
        signal = IntervalSignal.from_crisp(figure_style_signal(128), 2.0)
        result = verify_mc_enclosure(signal, ks=(3, 9, 21, 60), samples=2000, seed=5)
        assert result.passed
        assert result.discrepancy <= 0.0

    def test_zero_width_signal(self):
        signal = IntervalSignal.from_crisp([1.0, 2.0, 3.0, 4.0])
        result = verify_mc_enclosure(signal, samples=50, seed=1)
        assert result.passed

    def test_single_sample_deterministic(self):
        rng = np.random.default_rng(73)
        signal = random_interval_signal(rng, 12)
        a = verify_mc_enclosure(signal, samples=1, seed=99)
        b = verify_mc_enclosure(signal, samples=1, seed=99)
        assert a == b

    def test_rejects_zero_samples(self):
        signal = IntervalSignal.from_crisp([1.0, 2.0])
        with pytest.raises(ValueError):
            verify_mc_enclosure(signal, samples=0)


class TestReport:
    def test_deterministic_given_seed(self):
        rng = np.random.default_rng(74)
        signal = random_interval_signal(rng, 10)
        a = verify_signal(signal, mc_samples=200, seed=11)
        b = verify_signal(signal, mc_samples=200, seed=11)
        assert a == b
        assert a.passed
        assert a.counts["failed"] == 0
        # hull_in_box + selective_vs_brute per k, plus one MC check
        assert a.counts["total"] == 2 * 6 + 1

    def test_checks_ordered_by_name_then_location(self):
        rng = np.random.default_rng(75)
        signal = random_interval_signal(rng, 8)
        report = verify_signal(signal, mc_samples=10, seed=0)
        keys = [(c.name, c.location or ()) for c in report.checks]
        assert keys == sorted(keys)

    def test_text_and_dict_serialisation(self):
        rng = np.random.default_rng(76)
        signal = random_interval_signal(rng, 6)
        report = verify_signal(signal, mc_samples=25, seed=3)
        text = report.to_text()
        assert "verification:" in text
        assert text.count("PASS") == report.counts["passed"]

        doc = report.to_dict()
        json.dumps(doc)  # must be JSON-serialisable as-is
        assert doc["passed"] is True
        assert doc["counts"]["total"] == len(report.checks)
        assert {c["name"] for c in doc["checks"]} == {
            "hull_in_box",
            "selective_vs_brute",
            "mc_enclosure",
        }

    def test_failing_check_carries_locus(self):
        failing = CheckResult(
            name="mc_enclosure", passed=False, discrepancy=0.25, location=(9, 1234)
        )
        report = VerificationReport.from_checks([failing], seed=0)
        assert not report.passed
        line = report.to_text().splitlines()[-1]
        assert "FAIL" in line and "(9, 1234)" in line
        assert report.to_dict()["checks"][0]["location"] == [9, 1234]

    def test_skips_brute_when_too_long(self):
        signal = IntervalSignal.from_crisp(figure_style_signal(64, seed=4), 0.5)
        report = verify_signal(signal, ks=(1, 2), mc_samples=0)
        assert {c.name for c in report.checks} == {"hull_in_box"}
