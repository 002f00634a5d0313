"""Seeded region scans: sample theorem inputs, confront each prediction
with a grid verdict, and sort the outcomes into categories.

The interesting buckets are the two asymmetric ones.  A soundness alarm
is a draw whose hypotheses all hold while the grid check still finds a
violation; for a correct sufficient condition that bucket stays empty.
Draws whose hypotheses fail but whose order holds anyway are reported
too, as a reminder that these conditions are sufficient, not necessary.

The generator is counter-based (Philox), so a seed pins the exact
sample stream on every platform.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .ikdist import DomainError
from .ordercheck import DEFAULT_GRID, Grid, check_order
from .theorems import (
    ConditionReport,
    check_theorem_3_1,
    check_theorem_3_2,
    check_theorem_3_3,
    check_theorem_3_10,
    check_theorem_3_11,
    check_theorem_3_12,
)

__all__ = [
    "SCANNABLE_THEOREMS",
    "CATEGORIES",
    "ScanConfig",
    "ScanFinding",
    "ScanReport",
    "draw_sample",
    "run_scan",
]

# parameter layout per theorem: (name, kind) in draw order; kind is
# "scalar", "vector" (one positive value per component) or "weights"
# (drawn per component, then normalised to sum one)
_PARAM_LAYOUT: dict[str, tuple[tuple[str, str], ...]] = {
    "T3.1": (("alpha", "vector"), ("beta", "scalar"),
             ("p", "weights"), ("p_star", "weights")),
    "T3.2": (("beta", "vector"), ("alpha", "scalar"),
             ("p", "weights"), ("p_star", "weights")),
    "T3.3": (("alpha", "vector"), ("alpha_star", "vector"),
             ("beta", "scalar"), ("p", "weights")),
    "T3.10": (("beta", "vector"), ("beta_star", "vector"),
              ("alpha", "scalar"), ("p", "weights"), ("p_star", "weights")),
    "T3.11": (("p", "weights"), ("alpha", "vector"), ("beta", "vector"),
              ("p_star", "weights"), ("alpha_star", "vector"),
              ("beta_star", "vector")),
    "T3.12": (("p", "weights"), ("alpha", "vector"), ("beta", "vector"),
              ("p_star", "weights"), ("alpha_star", "vector"),
              ("beta_star", "vector")),
}

_CHECKERS = {
    "T3.1": lambda q: check_theorem_3_1(q["alpha"], q["beta"], q["p"], q["p_star"]),
    "T3.2": lambda q: check_theorem_3_2(q["beta"], q["alpha"], q["p"], q["p_star"]),
    "T3.3": lambda q: check_theorem_3_3(q["alpha"], q["alpha_star"], q["beta"], q["p"]),
    "T3.10": lambda q: check_theorem_3_10(q["beta"], q["beta_star"], q["alpha"],
                                          q["p"], q["p_star"]),
    "T3.11": lambda q: check_theorem_3_11(q["p"], q["alpha"], q["beta"],
                                          q["p_star"], q["alpha_star"], q["beta_star"]),
    "T3.12": lambda q: check_theorem_3_12(q["p"], q["alpha"], q["beta"],
                                          q["p_star"], q["alpha_star"], q["beta_star"]),
}

SCANNABLE_THEOREMS = tuple(sorted(
    _PARAM_LAYOUT, key=lambda t: tuple(int(s) for s in t[1:].split("."))))

CATEGORIES = (
    "soundness_alarm",
    "consistent",
    "order_holds_without_hypotheses",
    "hypotheses_false_order_violated",
    "undecided",
)


def _normalise_range(name: str, value, n: int) -> list[tuple[float, float]]:
    """Accept [lo, hi] (shared by all coordinates) or [[lo, hi], ...]."""
    bad = DomainError(
        f"range for {name!r} must be [lo, hi] or a list of n such pairs")
    if not isinstance(value, (list, tuple)) or len(value) == 0:
        raise bad
    if all(isinstance(v, (int, float)) for v in value):
        if len(value) != 2:
            raise bad
        pairs = [(float(value[0]), float(value[1]))] * n
    else:
        if len(value) != n:
            raise DomainError(
                f"range list for {name!r} has {len(value)} pairs, expected {n}")
        pairs = []
        for v in value:
            if not isinstance(v, (list, tuple)) or len(v) != 2:
                raise bad
            pairs.append((float(v[0]), float(v[1])))
    for lo, hi in pairs:
        if not (0.0 < lo <= hi) or not np.isfinite(hi):
            raise DomainError(f"range for {name!r} must satisfy 0 < lo <= hi")
    return pairs


@dataclass(frozen=True)
class ScanConfig:
    theorem: str
    samples: int
    seed: int
    ranges: dict
    n_components: int = 2
    grid: Grid = field(default=DEFAULT_GRID)

    def __post_init__(self) -> None:
        if self.theorem not in _PARAM_LAYOUT:
            raise DomainError(
                f"scan supports {SCANNABLE_THEOREMS}, got {self.theorem!r}")
        if int(self.samples) < 1:
            raise DomainError("samples must be >= 1")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise DomainError("seed must be an integer and is mandatory")
        if int(self.n_components) < 2:
            raise DomainError("n_components must be >= 2")
        object.__setattr__(self, "samples", int(self.samples))
        object.__setattr__(self, "n_components", int(self.n_components))
        layout = _PARAM_LAYOUT[self.theorem]
        missing = [n for n, _ in layout if n not in self.ranges]
        if missing:
            raise DomainError(f"ranges missing for {missing}")
        extra = sorted(set(self.ranges) - {n for n, _ in layout})
        if extra:
            raise DomainError(f"ranges given for unknown parameters {extra}")
        # normalise eagerly so config errors surface before sampling
        norm = {}
        for name, kind in layout:
            n = 1 if kind == "scalar" else self.n_components
            norm[name] = _normalise_range(name, self.ranges[name], n)
        object.__setattr__(self, "ranges", norm)

    @classmethod
    def from_dict(cls, d: dict) -> "ScanConfig":
        grid = d.get("grid")
        if grid is None:
            g = DEFAULT_GRID
        elif isinstance(grid, str):
            g = Grid.from_spec(grid)
        else:
            g = Grid(**grid)
        missing = [k for k in ("theorem", "samples", "seed", "ranges")
                   if k not in d]
        if missing:
            raise DomainError(f"scan config missing required keys {missing}")
        return cls(theorem=d["theorem"], samples=d["samples"], seed=d["seed"],
                   ranges=d["ranges"], n_components=d.get("n_components", 2),
                   grid=g)

    @classmethod
    def from_file(cls, path) -> "ScanConfig":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        return {"theorem": self.theorem, "samples": self.samples,
                "seed": self.seed, "n_components": self.n_components,
                "ranges": {k: [list(p) for p in v] for k, v in self.ranges.items()},
                "grid": self.grid.to_dict()}


def draw_sample(config: ScanConfig, rng: np.random.Generator) -> dict:
    """One parameter set, drawn in the fixed layout order."""
    out: dict = {}
    for name, kind in _PARAM_LAYOUT[config.theorem]:
        pairs = config.ranges[name]
        vals = [rng.uniform(lo, hi) if hi > lo else lo for lo, hi in pairs]
        if kind == "scalar":
            out[name] = float(vals[0])
        elif kind == "weights":
            total = sum(vals)
            out[name] = tuple(v / total for v in vals)
        else:
            out[name] = tuple(float(v) for v in vals)
    return out


@dataclass(frozen=True)
class ScanFinding:
    index: int
    params: dict
    category: str
    witness: dict | None = None

    def to_dict(self) -> dict:
        return {"index": self.index, "params": _jsonable(self.params),
                "category": self.category, "witness": self.witness}


def _jsonable(params: dict) -> dict:
    return {k: (list(v) if isinstance(v, tuple) else v) for k, v in params.items()}


@dataclass(frozen=True)
class ScanReport:
    config: ScanConfig
    counts: dict
    soundness_alarms: tuple[ScanFinding, ...]
    holds_without_hypotheses: tuple[ScanFinding, ...]

    @property
    def alarm_count(self) -> int:
        return len(self.soundness_alarms)

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "counts": dict(self.counts),
            "soundness_alarms": [f.to_dict() for f in self.soundness_alarms],
            "holds_without_hypotheses": [f.to_dict()
                                         for f in self.holds_without_hypotheses],
        }


def _categorise(report: ConditionReport, verdict_status: str) -> str:
    if verdict_status == "inconclusive":
        return "undecided"
    violated = verdict_status == "violated"
    if report.all_held:
        return "soundness_alarm" if violated else "consistent"
    return ("hypotheses_false_order_violated" if violated
            else "order_holds_without_hypotheses")


def run_scan(config: ScanConfig) -> ScanReport:
    rng = np.random.Generator(np.random.Philox(config.seed))
    checker = _CHECKERS[config.theorem]
    counts = {c: 0 for c in CATEGORIES}
    alarms: list[ScanFinding] = []
    free_holds: list[ScanFinding] = []
    for index in range(config.samples):
        params = draw_sample(config, rng)
        report = checker(params)
        po = report.orientation
        verdict = check_order(po.kind, po.lhs, po.rhs, config.grid)
        category = _categorise(report, verdict.status)
        counts[category] += 1
        if category == "soundness_alarm":
            alarms.append(ScanFinding(
                index, params, category,
                verdict.witness.to_dict() if verdict.witness else None))
        elif category == "order_holds_without_hypotheses":
            free_holds.append(ScanFinding(index, params, category))
    return ScanReport(config, counts, tuple(alarms), tuple(free_holds))
