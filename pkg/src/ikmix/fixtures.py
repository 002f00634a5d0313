"""Fixture catalog: the worked scenarios shipped with the package.

Each fixture JSON pins one scenario end to end: the checker inputs, the
expected hypothesis booleans, the expected grid verdict for the predicted
order, optionally spot values of mixture functionals, and optionally
T-transform product checks.  run_fixture replays all of it and reports
each comparison separately, so a failure says exactly which expectation
broke.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .ikdist import DomainError
from .majorization import (
    ParamMatrix2xN,
    TTransform,
    apply_t_transform,
    infer_t_transform_2x2,
)
from .mixture import (
    mixture_cdf,
    mixture_pdf,
    mixture_reversed_hazard,
    mixture_sf,
)
from .ordercheck import DEFAULT_GRID, Grid, check_order
from .theorems import (
    ConditionReport,
    check_theorem_3_1,
    check_theorem_3_2,
    check_theorem_3_3,
    check_theorem_3_4_or_3_5,
    check_theorem_3_7_to_3_9,
    check_theorem_3_10,
    check_theorem_3_11,
    check_theorem_3_12,
)

__all__ = ["FixtureCatalog", "FixtureResult", "CheckOutcome", "run_fixture"]

_ENTRYWISE_TOL = 1e-12
_OMEGA_TOL = 1e-12

_QUANTITY_FNS = {
    "cdf": mixture_cdf,
    "pdf": mixture_pdf,
    "sf": mixture_sf,
    "rh": mixture_reversed_hazard,
}


@dataclass(frozen=True)
class CheckOutcome:
    label: str
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        return {"label": self.label, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class FixtureResult:
    fixture_id: str
    checks: tuple[CheckOutcome, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckOutcome]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {"fixture_id": self.fixture_id, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks]}


def _dispatch_checker(theorem: str, kwargs: dict) -> ConditionReport:
    if theorem == "T3.1":
        return check_theorem_3_1(kwargs["alpha"], kwargs["beta"],
                                 kwargs["p"], kwargs["p_star"])
    if theorem == "T3.2":
        return check_theorem_3_2(kwargs["beta"], kwargs["alpha"],
                                 kwargs["p"], kwargs["p_star"])
    if theorem == "T3.3":
        return check_theorem_3_3(kwargs["alpha"], kwargs["alpha_star"],
                                 kwargs["beta"], kwargs["p"])
    if theorem in ("T3.4", "T3.5"):
        return check_theorem_3_4_or_3_5(
            ParamMatrix2xN.from_dict(kwargs["p_mat"]),
            ParamMatrix2xN.from_dict(kwargs["q_mat"]),
            [TTransform.from_dict(t) for t in kwargs["ts"]],
            kwargs["beta"])
    if theorem in ("T3.7", "T3.8", "T3.9"):
        return check_theorem_3_7_to_3_9(
            ParamMatrix2xN.from_dict(kwargs["p_mat"]),
            ParamMatrix2xN.from_dict(kwargs["q_mat"]),
            [TTransform.from_dict(t) for t in kwargs["ts"]],
            kwargs["alpha"], kwargs.get("variant", theorem[1:]))
    if theorem == "T3.10":
        return check_theorem_3_10(kwargs["beta"], kwargs["beta_star"],
                                  kwargs["alpha"], kwargs["p"], kwargs["p_star"])
    if theorem == "T3.11":
        return check_theorem_3_11(kwargs["p"], kwargs["alpha"], kwargs["beta"],
                                  kwargs["p_star"], kwargs["alpha_star"],
                                  kwargs["beta_star"])
    if theorem == "T3.12":
        return check_theorem_3_12(kwargs["p"], kwargs["alpha"], kwargs["beta"],
                                  kwargs["p_star"], kwargs["alpha_star"],
                                  kwargs["beta_star"])
    raise DomainError(f"no checker wired for {theorem!r}")


def run_fixture(fixture: dict, grid: Grid = DEFAULT_GRID) -> FixtureResult:
    fid = fixture["id"]
    checks: list[CheckOutcome] = []

    report = _dispatch_checker(fixture["theorem"], fixture["checker"])

    # 1. hypothesis booleans, compared exactly
    got = {h.name: h.held for h in report.hypotheses}
    for name, want in fixture["expected_hypotheses"].items():
        have = got.get(name)
        checks.append(CheckOutcome(
            f"hypothesis:{name}",
            have is want,
            f"expected {want}, checker reported {have}",
        ))
    extra = sorted(set(got) - set(fixture["expected_hypotheses"]))
    if extra:
        checks.append(CheckOutcome(
            "hypothesis:coverage", False,
            f"checker produced unexpected hypotheses {extra}"))

    # 2. grid verdict for the predicted orientation
    po = report.orientation
    verdict = check_order(po.kind, po.lhs, po.rhs, grid)
    want_status = fixture["expected_verdict"]
    ok = verdict.status == want_status
    detail = f"expected {want_status}, got {verdict.status}"
    if verdict.status == "violated" and verdict.witness is not None:
        w = verdict.witness
        detail += (f" (witness x={w.x:.6g}, lhs={w.lhs:.6g}, rhs={w.rhs:.6g})")
    if want_status == "violated" and verdict.status == "violated":
        ok = verdict.witness is not None
        if not ok:
            detail = "violated verdict arrived without a witness"
    checks.append(CheckOutcome(f"verdict:{po.kind}", ok, detail))

    # 3. spot values
    for ev in fixture.get("expected_values", ()):
        x = ev["x"]
        want = ev["value"]
        atol = ev.get("atol", 0.0)
        rtol = ev.get("rtol", 0.0)
        if ev["quantity"] == "sfdiff":
            minuend = po.lhs if ev["minuend"] == "lhs" else po.rhs
            subtrahend = po.lhs if ev["subtrahend"] == "lhs" else po.rhs
            have = mixture_sf(x, minuend) - mixture_sf(x, subtrahend)
            label = f"value:sfdiff@x={x:g}"
        else:
            fn = _QUANTITY_FNS[ev["quantity"]]
            m = po.lhs if ev["mixture"] == "lhs" else po.rhs
            have = fn(x, m)
            label = f"value:{ev['quantity']}({ev['mixture']})@x={x:g}"
        ok = abs(have - want) <= atol + rtol * abs(want)
        checks.append(CheckOutcome(
            label, ok,
            f"expected {want!r} within atol={atol:g} rtol={rtol:g}, got {have!r}"))

    # 4. T-transform products and omega recovery
    for i, tt in enumerate(fixture.get("t_transforms", ())):
        src = ParamMatrix2xN.from_dict(tt["from"])
        want_prod = ParamMatrix2xN.from_dict(tt["product"])
        got_prod = apply_t_transform(src, TTransform(tt["omega"], tuple(tt["pair"])))
        worst = max(abs(a - b) for a, b in
                    zip(got_prod.row1 + got_prod.row2, want_prod.row1 + want_prod.row2))
        checks.append(CheckOutcome(
            f"t_transform:{i}:product", worst <= _ENTRYWISE_TOL,
            f"max entrywise deviation {worst:.3e}"))
        if src.n == 2:
            inferred = infer_t_transform_2x2(src, want_prod)
            want_omega = tt["inferred_omega"]
            ok = inferred is not None and abs(inferred.omega - want_omega) <= _OMEGA_TOL
            checks.append(CheckOutcome(
                f"t_transform:{i}:omega", ok,
                f"expected omega {want_omega!r}, inferred "
                f"{None if inferred is None else inferred.omega!r}"))

    return FixtureResult(fid, tuple(checks))


class FixtureCatalog:
    """Loads and replays the shipped scenario fixtures."""

    def __init__(self) -> None:
        root = resources.files("ikmix") / "fixtures"
        manifest = json.loads((root / "manifest.json").read_text())
        self._fixtures: dict[str, dict] = {}
        self._order: list[str] = []
        for entry in manifest["fixtures"]:
            data = json.loads((root / entry["file"]).read_text())
            if data["id"] != entry["id"]:
                raise DomainError(
                    f"manifest id {entry['id']!r} vs file id {data['id']!r}")
            self._fixtures[entry["id"]] = data
            self._order.append(entry["id"])

    def ids(self) -> list[str]:
        return list(self._order)

    def load(self, fixture_id: str) -> dict:
        try:
            return self._fixtures[fixture_id]
        except KeyError:
            raise DomainError(f"unknown fixture {fixture_id!r}; "
                              f"known ids: {', '.join(self._order)}") from None

    def checker_report(self, fixture_id: str) -> ConditionReport:
        """Run just the hypothesis checker, without the grid verdict."""
        fx = self.load(fixture_id)
        return _dispatch_checker(fx["theorem"], fx["checker"])

    def run(self, fixture_id: str, grid: Grid = DEFAULT_GRID) -> FixtureResult:
        return run_fixture(self.load(fixture_id), grid)

    def run_all(self, grid: Grid = DEFAULT_GRID) -> list[FixtureResult]:
        return [self.run(fid, grid) for fid in self._order]
