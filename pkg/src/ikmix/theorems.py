"""Sufficient-condition checkers for ordering finite IK mixtures.

Each checker evaluates the hypotheses of one sufficient condition from the
catalog (T3.1 through T3.12 plus the corollaries C3.1, C3.2, C3.3) on
concrete parameters and reports them one by one.  The checkers never
decide an order themselves; when every hypothesis holds they expose the
predicted order in the normal form lhs <= rhs for the named order kind,
and verify_prediction hands that claim to the grid engine.

Hypothesis comparisons between real numbers carry 1e-12 slack so ties
count as satisfied.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ikdist import DomainError, IKParams
from .majorization import (
    ParamMatrix2xN,
    TTransform,
    apply_t_transform,
    chain_majorization_verify,
    in_script_l,
    majorizes,
    weak_submajorizes,
    weak_supermajorizes,
)
from .mixture import FiniteMixture, mixture_from_matrix
from .ordercheck import DEFAULT_GRID, Grid, OrderVerdict, check_order

__all__ = [
    "Hypothesis",
    "PredictedOrder",
    "ConditionReport",
    "VerificationOutcome",
    "THEOREM_IDS",
    "check_theorem_3_1",
    "check_theorem_3_2",
    "check_theorem_3_3",
    "check_theorem_3_4_or_3_5",
    "check_theorem_3_6",
    "check_theorem_3_7_to_3_9",
    "check_theorem_3_10",
    "check_theorem_3_11",
    "check_theorem_3_12",
    "check_corollary_3_1",
    "check_corollary_3_2",
    "check_corollary_3_3",
    "verify_prediction",
]

_SLACK = 1e-12

THEOREM_IDS = (
    "T3.1", "T3.2", "T3.3", "T3.4", "T3.5", "T3.6",
    "T3.7", "T3.8", "T3.9", "T3.10", "T3.11", "T3.12",
    "C3.1", "C3.2", "C3.3",
)


@dataclass(frozen=True)
class Hypothesis:
    name: str
    held: bool
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "held": self.held, "detail": self.detail}


@dataclass(frozen=True)
class PredictedOrder:
    """Normal form: lhs <= rhs in the named order."""

    kind: str
    lhs: FiniteMixture
    rhs: FiniteMixture
    lhs_label: str
    rhs_label: str

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "lhs_label": self.lhs_label,
            "rhs_label": self.rhs_label,
            "lhs": self.lhs.to_dict(),
            "rhs": self.rhs.to_dict(),
        }


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a hypothesis check.

    `orientation` always records which order the condition would conclude;
    `predicted_order` exposes it only when every hypothesis held, which is
    the honest public claim.
    """

    theorem_id: str
    hypotheses: tuple[Hypothesis, ...]
    orientation: PredictedOrder

    @property
    def all_held(self) -> bool:
        return all(h.held for h in self.hypotheses)

    @property
    def predicted_order(self) -> PredictedOrder | None:
        return self.orientation if self.all_held else None

    def hypothesis(self, name: str) -> Hypothesis:
        for h in self.hypotheses:
            if h.name == name:
                return h
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "hypotheses": [h.to_dict() for h in self.hypotheses],
            "all_held": self.all_held,
            "predicted_order": self.predicted_order.to_dict() if self.all_held else None,
        }


@dataclass(frozen=True)
class VerificationOutcome:
    """Grid confrontation of a predicted order.

    status: consistent | contradiction | not_applicable | undecided.
    undecided covers an inconclusive grid verdict; it is neither support
    nor refutation.
    """

    status: str
    verdict: OrderVerdict | None = None

    def to_dict(self) -> dict:
        return {"status": self.status,
                "verdict": self.verdict.to_dict() if self.verdict else None}


def verify_prediction(report: ConditionReport, grid: Grid = DEFAULT_GRID) -> VerificationOutcome:
    if not report.all_held:
        return VerificationOutcome(status="not_applicable")
    po = report.predicted_order
    verdict = check_order(po.kind, po.lhs, po.rhs, grid)
    status = {
        "holds_on_grid": "consistent",
        "violated": "contradiction",
        "inconclusive": "undecided",
    }[verdict.status]
    return VerificationOutcome(status=status, verdict=verdict)


# ---------------------------------------------------------------------------
# small builders
# ---------------------------------------------------------------------------


def _vec(v, name: str) -> tuple[float, ...]:
    arr = np.asarray(v, dtype=float)
    if arr.ndim != 1 or arr.size == 0 or not np.all(np.isfinite(arr)) or np.any(arr <= 0):
        raise DomainError(f"{name} must be a nonempty positive finite vector")
    return tuple(float(x) for x in arr)


def _mix_alpha(weights, alphas, beta: float) -> FiniteMixture:
    return FiniteMixture(tuple(weights), tuple(IKParams(a, beta) for a in alphas))


def _mix_beta(weights, betas, alpha: float) -> FiniteMixture:
    return FiniteMixture(tuple(weights), tuple(IKParams(alpha, b) for b in betas))


def _mix_full(weights, alphas, betas) -> FiniteMixture:
    return FiniteMixture(tuple(weights),
                         tuple(IKParams(a, b) for a, b in zip(alphas, betas)))


def _script_l_hyp(name: str, row1, row2, what: str) -> Hypothesis:
    pm = ParamMatrix2xN(tuple(row1), tuple(row2))
    held = in_script_l(pm)
    return Hypothesis(name, held, f"{what} rows {'are' if held else 'are not'} oppositely ordered")


def _beta_unit_hyp(beta: float) -> Hypothesis:
    held = 0.0 < beta < 1.0
    return Hypothesis("beta_in_unit_interval", held, f"beta = {beta!r}")


def _pairwise_gaps(v: tuple[float, ...]) -> np.ndarray:
    arr = np.asarray(v)
    if arr.size < 2:
        raise DomainError("gap hypothesis needs at least two components")
    diff = np.abs(arr[:, None] - arr[None, :])
    return diff[np.triu_indices(arr.size, k=1)]


# ---------------------------------------------------------------------------
# weight-vector conditions (common beta / common alpha)
# ---------------------------------------------------------------------------


def check_theorem_3_1(alpha, beta: float, p, p_star) -> ConditionReport:
    """Weight shift under a common beta; concludes mixture(p*) <= mixture(p)
    in the usual stochastic order."""
    alpha = _vec(alpha, "alpha")
    p = _vec(p, "p")
    p_star = _vec(p_star, "p_star")
    sub = weak_submajorizes(p, p_star)
    hyps = (
        _script_l_hyp("alpha_p_in_script_l", p, alpha, "(p, alpha)"),
        _script_l_hyp("alpha_p_star_in_script_l", p_star, alpha, "(p*, alpha)"),
        Hypothesis("p_star_weakly_submajorized_by_p", sub,
                   "ascending suffix sums of p dominate those of p*" if sub
                   else "some ascending suffix sum of p falls below p*'s"),
    )
    orientation = PredictedOrder(
        "st",
        _mix_alpha(p_star, alpha, beta), _mix_alpha(p, alpha, beta),
        "mixture with shifted weights p*", "mixture with original weights p",
    )
    return ConditionReport("T3.1", hyps, orientation)


def check_corollary_3_1(alpha, beta: float, p, p_star) -> ConditionReport:
    """Plain-majorization variant of T3.1 (same conclusion)."""
    alpha = _vec(alpha, "alpha")
    p = _vec(p, "p")
    p_star = _vec(p_star, "p_star")
    maj = majorizes(p, p_star)
    hyps = (
        _script_l_hyp("alpha_p_in_script_l", p, alpha, "(p, alpha)"),
        _script_l_hyp("alpha_p_star_in_script_l", p_star, alpha, "(p*, alpha)"),
        Hypothesis("p_star_majorized_by_p", maj,
                   f"majorizes(p, p*) = {maj}"),
    )
    orientation = PredictedOrder(
        "st",
        _mix_alpha(p_star, alpha, beta), _mix_alpha(p, alpha, beta),
        "mixture with shifted weights p*", "mixture with original weights p",
    )
    return ConditionReport("C3.1", hyps, orientation)


def check_theorem_3_2(beta, alpha: float, p, p_star) -> ConditionReport:
    """Weight shift under a common alpha; concludes mixture(p) <= mixture(p*)
    in the usual stochastic order."""
    beta = _vec(beta, "beta")
    p = _vec(p, "p")
    p_star = _vec(p_star, "p_star")
    sup = weak_supermajorizes(p, p_star)
    hyps = (
        _script_l_hyp("beta_p_in_script_l", p, beta, "(p, beta)"),
        _script_l_hyp("beta_p_star_in_script_l", p_star, beta, "(p*, beta)"),
        Hypothesis("p_star_weakly_supermajorized_by_p", sup,
                   "ascending prefix sums of p stay below those of p*" if sup
                   else "some ascending prefix sum of p exceeds p*'s"),
    )
    orientation = PredictedOrder(
        "st",
        _mix_beta(p, beta, alpha), _mix_beta(p_star, beta, alpha),
        "mixture with original weights p", "mixture with shifted weights p*",
    )
    return ConditionReport("T3.2", hyps, orientation)


def check_theorem_3_3(alpha, alpha_star, beta: float, p) -> ConditionReport:
    """Shape shift in the alpha vector under fixed weights and a shared
    beta inside (0,1); concludes mixture(alpha*) <= mixture(alpha)."""
    alpha = _vec(alpha, "alpha")
    alpha_star = _vec(alpha_star, "alpha_star")
    p = _vec(p, "p")
    sup = weak_supermajorizes(alpha, alpha_star)
    hyps = (
        _beta_unit_hyp(beta),
        _script_l_hyp("alpha_p_in_script_l", p, alpha, "(p, alpha)"),
        _script_l_hyp("alpha_star_p_in_script_l", p, alpha_star, "(p, alpha*)"),
        Hypothesis("alpha_star_weakly_supermajorized_by_alpha", sup,
                   "ascending prefix sums of alpha stay below those of alpha*" if sup
                   else "some ascending prefix sum of alpha exceeds alpha*'s"),
    )
    orientation = PredictedOrder(
        "st",
        _mix_alpha(p, alpha_star, beta), _mix_alpha(p, alpha, beta),
        "mixture with shifted shapes alpha*", "mixture with original shapes alpha",
    )
    return ConditionReport("T3.3", hyps, orientation)


# ---------------------------------------------------------------------------
# T-transform chain conditions on 2xN matrices
# ---------------------------------------------------------------------------


def _chain_hyp(p: ParamMatrix2xN, q: ParamMatrix2xN, ts: tuple[TTransform, ...]) -> Hypothesis:
    ok = chain_majorization_verify(p, q, ts)
    return Hypothesis("chain_reproduces_q", ok,
                      f"{len(ts)} transform(s) {'reproduce' if ok else 'do not reproduce'} q from p")


def check_theorem_3_4_or_3_5(p_mat: ParamMatrix2xN, q_mat: ParamMatrix2xN,
                             ts, beta: float) -> ConditionReport:
    """(weights, alpha) matrix chained onto q by T-transforms with shared
    beta in (0,1); concludes mixture(q) <= mixture(p) in the usual order.
    One transform reports as T3.4, a longer chain as T3.5."""
    ts = tuple(ts)
    hyps = (
        _beta_unit_hyp(beta),
        Hypothesis("p_mat_in_script_l", in_script_l(p_mat),
                   "rows of (p, alpha) are oppositely ordered" if in_script_l(p_mat)
                   else "rows of (p, alpha) are not oppositely ordered"),
        _chain_hyp(p_mat, q_mat, ts),
    )
    orientation = PredictedOrder(
        "st",
        mixture_from_matrix(q_mat.row1, q_mat.row2, varying="alpha", fixed=beta),
        mixture_from_matrix(p_mat.row1, p_mat.row2, varying="alpha", fixed=beta),
        "mixture built from the transformed matrix q",
        "mixture built from the source matrix p",
    )
    return ConditionReport("T3.4" if len(ts) == 1 else "T3.5", hyps, orientation)


def check_theorem_3_6(p_mat: ParamMatrix2xN, ts, beta: float) -> ConditionReport:
    """Staged variant: the chain may leave the oppositely-ordered class only
    at its final step.  q is the chain result itself, so the hypotheses are
    the stagewise memberships."""
    ts = tuple(ts)
    if not ts:
        raise DomainError("staged chain needs at least one transform")
    hyps = [_beta_unit_hyp(beta)]
    stage = p_mat
    for i, t in enumerate(ts):
        ok = in_script_l(stage)
        hyps.append(Hypothesis(
            f"stage_{i}_in_script_l", ok,
            f"matrix before transform {i + 1} {'is' if ok else 'is not'} oppositely ordered"))
        stage = apply_t_transform(stage, t)
    q_mat = stage
    orientation = PredictedOrder(
        "st",
        mixture_from_matrix(q_mat.row1, q_mat.row2, varying="alpha", fixed=beta),
        mixture_from_matrix(p_mat.row1, p_mat.row2, varying="alpha", fixed=beta),
        "mixture built from the chain result",
        "mixture built from the source matrix p",
    )
    return ConditionReport("T3.6", tuple(hyps), orientation)


def check_theorem_3_7_to_3_9(p_mat: ParamMatrix2xN, q_mat: ParamMatrix2xN,
                             ts, alpha: float, variant: str = "3.7") -> ConditionReport:
    """(weights, beta) matrix chained onto q under a common alpha; concludes
    mixture(p) <= mixture(q) in the usual order.  variant selects the
    reporting id: 3.7 single transform, 3.8 chain, 3.9 staged chain with
    intermediate memberships."""
    if variant not in ("3.7", "3.8", "3.9"):
        raise DomainError(f"variant must be 3.7, 3.8 or 3.9, got {variant!r}")
    ts = tuple(ts)
    hyps = [Hypothesis("p_mat_in_script_l", in_script_l(p_mat),
                       "rows of (p, beta) are oppositely ordered" if in_script_l(p_mat)
                       else "rows of (p, beta) are not oppositely ordered")]
    if variant == "3.9":
        stage = p_mat
        for i, t in enumerate(ts[:-1]):
            stage = apply_t_transform(stage, t)
            ok = in_script_l(stage)
            hyps.append(Hypothesis(
                f"stage_{i + 1}_in_script_l", ok,
                f"matrix after transform {i + 1} {'is' if ok else 'is not'} oppositely ordered"))
    hyps.append(_chain_hyp(p_mat, q_mat, ts))
    orientation = PredictedOrder(
        "st",
        mixture_from_matrix(p_mat.row1, p_mat.row2, varying="beta", fixed=alpha),
        mixture_from_matrix(q_mat.row1, q_mat.row2, varying="beta", fixed=alpha),
        "mixture built from the source matrix p",
        "mixture built from the transformed matrix q",
    )
    return ConditionReport(f"T{variant}", tuple(hyps), orientation)


def check_corollary_3_2(p_mat: ParamMatrix2xN, q_mat: ParamMatrix2xN,
                        ts, beta: float) -> ConditionReport:
    """Chain of T-transforms acting on one fixed column pair (their product
    is again a single T-transform); otherwise as T3.5."""
    ts = tuple(ts)
    pairs = {tuple(sorted(t.pair)) for t in ts}
    common = len(pairs) == 1
    hyps = (
        _beta_unit_hyp(beta),
        Hypothesis("p_mat_in_script_l", in_script_l(p_mat),
                   f"in_script_l(p) = {in_script_l(p_mat)}"),
        Hypothesis("common_pair_chain", common,
                   f"transforms act on column pairs {sorted(pairs)}"),
        _chain_hyp(p_mat, q_mat, ts),
    )
    orientation = PredictedOrder(
        "st",
        mixture_from_matrix(q_mat.row1, q_mat.row2, varying="alpha", fixed=beta),
        mixture_from_matrix(p_mat.row1, p_mat.row2, varying="alpha", fixed=beta),
        "mixture built from the transformed matrix q",
        "mixture built from the source matrix p",
    )
    return ConditionReport("C3.2", hyps, orientation)


def check_corollary_3_3(p_mat: ParamMatrix2xN, q_mat: ParamMatrix2xN,
                        ts, alpha: float) -> ConditionReport:
    """Common-pair chain on a (weights, beta) matrix; otherwise as T3.8."""
    ts = tuple(ts)
    pairs = {tuple(sorted(t.pair)) for t in ts}
    common = len(pairs) == 1
    hyps = (
        Hypothesis("p_mat_in_script_l", in_script_l(p_mat),
                   f"in_script_l(p) = {in_script_l(p_mat)}"),
        Hypothesis("common_pair_chain", common,
                   f"transforms act on column pairs {sorted(pairs)}"),
        _chain_hyp(p_mat, q_mat, ts),
    )
    orientation = PredictedOrder(
        "st",
        mixture_from_matrix(p_mat.row1, p_mat.row2, varying="beta", fixed=alpha),
        mixture_from_matrix(q_mat.row1, q_mat.row2, varying="beta", fixed=alpha),
        "mixture built from the source matrix p",
        "mixture built from the transformed matrix q",
    )
    return ConditionReport("C3.3", hyps, orientation)


# ---------------------------------------------------------------------------
# spread and separation conditions
# ---------------------------------------------------------------------------


def check_theorem_3_10(beta, beta_star, alpha: float, p, p_star) -> ConditionReport:
    """Gap condition on the beta vectors under a common alpha; claims the
    reversed-hazard-ratio order mixture(beta; p) <= mixture(beta*; p*)."""
    beta = _vec(beta, "beta")
    beta_star = _vec(beta_star, "beta_star")
    p = _vec(p, "p")
    p_star = _vec(p_star, "p_star")
    max_gap = float(np.max(_pairwise_gaps(beta)))
    min_gap_star = float(np.min(_pairwise_gaps(beta_star)))
    held = max_gap <= min_gap_star + _SLACK
    hyps = (
        Hypothesis("beta_gap_dominated_by_beta_star_gap", held,
                   f"max pairwise |beta gap| = {max_gap!r} vs "
                   f"min pairwise |beta* gap| = {min_gap_star!r}"),
    )
    orientation = PredictedOrder(
        "r_rh",
        _mix_beta(p, beta, alpha), _mix_beta(p_star, beta_star, alpha),
        "mixture with tightly clustered betas", "mixture with spread betas",
    )
    return ConditionReport("T3.10", hyps, orientation)


def check_theorem_3_11(p, alpha, beta, p_star, alpha_star, beta_star) -> ConditionReport:
    """Separation condition for the reversed hazard order between two fully
    heterogeneous mixtures: mixture(alpha, beta; p) <= mixture(alpha*, beta*; p*)."""
    p = _vec(p, "p")
    alpha = _vec(alpha, "alpha")
    beta = _vec(beta, "beta")
    p_star = _vec(p_star, "p_star")
    alpha_star = _vec(alpha_star, "alpha_star")
    beta_star = _vec(beta_star, "beta_star")
    a_ok = max(alpha_star) <= min(alpha) + _SLACK
    prod = tuple(a * b for a, b in zip(alpha, beta))
    prod_star = tuple(a * b for a, b in zip(alpha_star, beta_star))
    p_ok = max(prod) <= min(prod_star) + _SLACK
    hyps = (
        Hypothesis("alpha_star_max_below_alpha_min", a_ok,
                   f"max(alpha*) = {max(alpha_star)!r} vs min(alpha) = {min(alpha)!r}"),
        Hypothesis("alpha_beta_products_below_starred", p_ok,
                   f"max(alpha*beta) = {max(prod)!r} vs min(alpha**beta*) = {min(prod_star)!r}"),
    )
    orientation = PredictedOrder(
        "rh",
        _mix_full(p, alpha, beta), _mix_full(p_star, alpha_star, beta_star),
        "mixture with larger alphas", "mixture with larger alpha*beta products",
    )
    return ConditionReport("T3.11", hyps, orientation)


def check_theorem_3_12(p, alpha, beta, p_star, alpha_star, beta_star) -> ConditionReport:
    """Separation condition for the likelihood ratio order:
    mixture(alpha*, beta*; p*) <= mixture(alpha, beta; p)."""
    p = _vec(p, "p")
    alpha = _vec(alpha, "alpha")
    beta = _vec(beta, "beta")
    p_star = _vec(p_star, "p_star")
    alpha_star = _vec(alpha_star, "alpha_star")
    beta_star = _vec(beta_star, "beta_star")
    a_ok = max(alpha) <= min(alpha_star) + _SLACK
    prod = tuple(a * b for a, b in zip(alpha, beta))
    prod_star = tuple(a * b for a, b in zip(alpha_star, beta_star))
    p_ok = min(prod) >= max(prod_star) - _SLACK
    hyps = (
        Hypothesis("alpha_max_below_alpha_star_min", a_ok,
                   f"max(alpha) = {max(alpha)!r} vs min(alpha*) = {min(alpha_star)!r}"),
        Hypothesis("alpha_beta_products_above_starred", p_ok,
                   f"min(alpha*beta) = {min(prod)!r} vs max(alpha**beta*) = {max(prod_star)!r}"),
    )
    orientation = PredictedOrder(
        "lr",
        _mix_full(p_star, alpha_star, beta_star), _mix_full(p, alpha, beta),
        "mixture with smaller alpha*beta products", "mixture with larger products",
    )
    return ConditionReport("T3.12", hyps, orientation)
