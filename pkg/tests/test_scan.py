"""Tests for the seeded region scanner."""

from __future__ import annotations

import pytest

from ikmix import DomainError, Grid
from ikmix.scan import (
    CATEGORIES,
    SCANNABLE_THEOREMS,
    ScanConfig,
    draw_sample,
    run_scan,
)

import numpy as np


def point(*vals):
    """Degenerate [lo, hi] pairs pinning every draw to one spot."""
    return [[v, v] for v in vals]


# the known false-positive spot for the reversed-hazard-ratio gap
# condition: both gaps equal 1, yet the ratio increases near the origin
ALARM_CONFIG = dict(
    theorem="T3.10",
    samples=3,
    seed=11,
    ranges={
        "beta": point(1.0, 2.0),
        "beta_star": point(1.0, 2.0),
        "alpha": [1.0, 1.0],
        "p": point(0.5, 0.5),
        "p_star": point(0.9, 0.1),
    },
)


# ---------------------------------------------------------------------------
# configuration validation
# ---------------------------------------------------------------------------


class TestScanConfig:
    def test_scannable_theorem_order(self):
        assert SCANNABLE_THEOREMS == ("T3.1", "T3.2", "T3.3",
                                      "T3.10", "T3.11", "T3.12")

    def test_unknown_theorem(self):
        with pytest.raises(DomainError, match="scan supports"):
            ScanConfig("T3.6", 10, 1, {})

    def test_samples_positive(self):
        with pytest.raises(DomainError, match="samples"):
            ScanConfig("T3.1", 0, 1, {"alpha": [1, 2], "beta": [1, 2],
                                      "p": [0.1, 1], "p_star": [0.1, 1]})

    def test_seed_is_mandatory_integer(self):
        ranges = {"alpha": [1, 2], "beta": [1, 2],
                  "p": [0.1, 1], "p_star": [0.1, 1]}
        for bad in (None, 1.5, "7", True):
            with pytest.raises(DomainError, match="seed"):
                ScanConfig("T3.1", 10, bad, ranges)

    def test_missing_range_keys(self):
        with pytest.raises(DomainError, match="ranges missing"):
            ScanConfig("T3.1", 10, 1, {"alpha": [1, 2]})

    def test_extra_range_keys(self):
        with pytest.raises(DomainError, match="unknown parameters"):
            ScanConfig("T3.1", 10, 1,
                       {"alpha": [1, 2], "beta": [1, 2], "p": [0.1, 1],
                        "p_star": [0.1, 1], "gamma": [1, 2]})

    def test_range_must_be_ordered_positive(self):
        base = {"beta": [1, 2], "p": [0.1, 1], "p_star": [0.1, 1]}
        with pytest.raises(DomainError, match="0 < lo <= hi"):
            ScanConfig("T3.1", 10, 1, dict(base, alpha=[2, 1]))
        with pytest.raises(DomainError, match="0 < lo <= hi"):
            ScanConfig("T3.1", 10, 1, dict(base, alpha=[0.0, 1]))

    def test_per_component_pair_count_must_match(self):
        base = {"beta": [1, 2], "p": [0.1, 1], "p_star": [0.1, 1]}
        with pytest.raises(DomainError, match="expected 2"):
            ScanConfig("T3.1", 10, 1,
                       dict(base, alpha=[[1, 2], [1, 2], [1, 2]]))

    def test_from_dict_missing_keys(self):
        with pytest.raises(DomainError, match="missing required keys"):
            ScanConfig.from_dict({"theorem": "T3.1", "samples": 5})

    def test_dict_roundtrip(self):
        cfg = ScanConfig.from_dict(ALARM_CONFIG)
        again = ScanConfig.from_dict(cfg.to_dict())
        assert again.to_dict() == cfg.to_dict()

    def test_grid_spec_string_accepted(self):
        cfg = ScanConfig.from_dict(dict(ALARM_CONFIG, grid="1e-2:1e2:500:log"))
        assert cfg.grid == Grid(1e-2, 1e2, 500, "logarithmic")


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------


class TestDrawSample:
    def test_weights_normalised_and_in_range(self):
        cfg = ScanConfig("T3.1", 5, 3,
                         {"alpha": [0.5, 2.0], "beta": [0.3, 0.9],
                          "p": [0.1, 1.0], "p_star": [0.1, 1.0]})
        rng = np.random.Generator(np.random.Philox(3))
        for _ in range(50):
            s = draw_sample(cfg, rng)
            assert abs(sum(s["p"]) - 1.0) < 1e-12
            assert abs(sum(s["p_star"]) - 1.0) < 1e-12
            assert all(0.5 <= a <= 2.0 for a in s["alpha"])
            assert 0.3 <= s["beta"] <= 0.9

    def test_point_mass_ranges_hit_exactly(self):
        cfg = ScanConfig.from_dict(ALARM_CONFIG)
        rng = np.random.Generator(np.random.Philox(0))
        s = draw_sample(cfg, rng)
        assert s["beta"] == (1.0, 2.0)
        assert s["p_star"] == (0.9, 0.1)
        assert s["alpha"] == 1.0


# ---------------------------------------------------------------------------
# scan outcomes
# ---------------------------------------------------------------------------


class TestRunScan:
    def test_determinism(self):
        cfg = ScanConfig("T3.1", 40, 7,
                         {"alpha": [0.3, 3.0], "beta": [0.3, 3.0],
                          "p": [0.05, 1.0], "p_star": [0.05, 1.0]},
                         grid=Grid(1e-3, 1e3, 300))
        r1 = run_scan(cfg)
        r2 = run_scan(cfg)
        assert r1.to_dict() == r2.to_dict()
        r3 = run_scan(ScanConfig("T3.1", 40, 8, cfg.ranges, grid=cfg.grid))
        assert r3.to_dict() != r1.to_dict()

    def test_counts_cover_all_samples(self):
        cfg = ScanConfig("T3.2", 30, 5,
                         {"beta": [0.3, 3.0], "alpha": [0.3, 3.0],
                          "p": [0.05, 1.0], "p_star": [0.05, 1.0]},
                         grid=Grid(1e-3, 1e3, 300))
        report = run_scan(cfg)
        assert set(report.counts) == set(CATEGORIES)
        assert sum(report.counts.values()) == 30

    def test_point_mass_consistent(self, catalog):
        # the ex3.1 scenario satisfies every hypothesis and its order
        # holds, so all draws land in the consistent bucket
        ck = catalog.load("ex3.1")["checker"]
        cfg = ScanConfig("T3.1", 4, 1,
                         {"alpha": point(*ck["alpha"]),
                          "beta": [ck["beta"], ck["beta"]],
                          "p": point(*ck["p"]),
                          "p_star": point(*ck["p_star"])},
                         n_components=3,
                         grid=Grid(1e-3, 1e3, 400))
        report = run_scan(cfg)
        assert report.counts["consistent"] == 4
        assert report.alarm_count == 0

    def test_soundness_alarm_fires_on_known_gap(self):
        report = run_scan(ScanConfig.from_dict(ALARM_CONFIG))
        assert report.counts["soundness_alarm"] == 3
        assert report.alarm_count == 3
        finding = report.soundness_alarms[0]
        assert finding.category == "soundness_alarm"
        assert finding.params["beta"] == [1.0, 2.0] or \
            finding.params["beta"] == (1.0, 2.0)
        assert finding.witness is not None
        assert finding.witness["lhs"] < finding.witness["rhs"]

    def test_alarm_findings_serialise(self):
        report = run_scan(ScanConfig.from_dict(dict(ALARM_CONFIG, samples=1)))
        d = report.to_dict()
        assert d["counts"]["soundness_alarm"] == 1
        w = d["soundness_alarms"][0]["witness"]
        assert set(w) == {"x", "lhs", "rhs"}
        assert isinstance(d["soundness_alarms"][0]["params"]["p"], list)

    def test_failed_hypotheses_with_violation(self, catalog):
        # the ce3.6 scenario breaks the separation hypotheses and its
        # predicted order indeed fails on the grid
        ck = catalog.load("ce3.6")["checker"]
        cfg = ScanConfig("T3.11", 2, 9,
                         {"p": point(*ck["p"]),
                          "alpha": point(*ck["alpha"]),
                          "beta": point(*ck["beta"]),
                          "p_star": point(*ck["p_star"]),
                          "alpha_star": point(*ck["alpha_star"]),
                          "beta_star": point(*ck["beta_star"])},
                         n_components=3,
                         grid=Grid(1e-3, 1e3, 400))
        report = run_scan(cfg)
        assert report.counts["hypotheses_false_order_violated"] == 2
        assert report.alarm_count == 0

    def test_order_holding_without_hypotheses_is_reported(self):
        # identical mixtures on both sides trivially satisfy the order,
        # but aligned alpha and weights break the arrangement hypothesis
        cfg = ScanConfig("T3.1", 3, 2,
                         {"alpha": point(1.0, 2.0),
                          "beta": [0.5, 0.5],
                          "p": point(0.3, 0.7),
                          "p_star": point(0.3, 0.7)},
                         grid=Grid(1e-3, 1e3, 300))
        report = run_scan(cfg)
        assert report.counts["order_holds_without_hypotheses"] == 3
        assert len(report.holds_without_hypotheses) == 3
        assert report.holds_without_hypotheses[0].witness is None
