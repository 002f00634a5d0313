"""Majorization preorders, the coupled-matrix class script-L, and T-transforms.

Conventions, fixed once here and relied on everywhere else:

* order statistics are taken ascending, x_(1) <= ... <= x_(n);
* majorizes(a, b) means every ascending prefix sum of a is <= the matching
  prefix sum of b, with equal totals;
* weak_supermajorizes(a, b) drops the equal-total requirement but extends
  the prefix inequality to i = n;
* weak_submajorizes(a, b) asks the ascending suffix sums of a to dominate
  those of b;
* a T-transform T = w*I + (1-w)*Pi acts on a 2xN matrix by right
  multiplication, i.e. it mixes two columns.  Column pairs are addressed
  with 1-based indices, matching the JSON wire format
  {"omega": w, "pair": [i, j]}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ikdist import DomainError

__all__ = [
    "ParamMatrix2xN",
    "TTransform",
    "majorizes",
    "weak_supermajorizes",
    "weak_submajorizes",
    "in_script_l",
    "apply_t_transform",
    "chain_majorization_verify",
    "infer_t_transform_2x2",
    "schur_probe",
]

_PREFIX_TOL = 1e-12
_PAIR_SLACK = 1e-12
_CHAIN_TOL = 1e-10
_OMEGA_AGREE = 1e-9


def _vec(v, name: str) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise DomainError(f"{name} must be a nonempty 1-d vector")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite")
    return arr


def _pair(a, b):
    x = _vec(a, "a")
    y = _vec(b, "b")
    if x.size != y.size:
        raise DomainError(f"length mismatch: {x.size} vs {y.size}")
    return np.sort(x), np.sort(y)


def majorizes(a, b) -> bool:
    """a majorizes b: ascending prefix sums of a never exceed b's, totals equal."""
    x, y = _pair(a, b)
    ca, cb = np.cumsum(x), np.cumsum(y)
    if abs(ca[-1] - cb[-1]) > _PREFIX_TOL:
        return False
    return bool(np.all(ca[:-1] <= cb[:-1] + _PREFIX_TOL))


def weak_supermajorizes(a, b) -> bool:
    x, y = _pair(a, b)
    return bool(np.all(np.cumsum(x) <= np.cumsum(y) + _PREFIX_TOL))


def weak_submajorizes(a, b) -> bool:
    x, y = _pair(a, b)
    # suffix sums over the ascending arrangement
    sa = np.cumsum(x[::-1])
    sb = np.cumsum(y[::-1])
    return bool(np.all(sa >= sb - _PREFIX_TOL))


@dataclass(frozen=True)
class ParamMatrix2xN:
    """Positive 2xN matrix; row1 is typically a weight vector, row2 a shape
    parameter vector."""

    row1: tuple[float, ...]
    row2: tuple[float, ...]

    def __post_init__(self) -> None:
        r1 = tuple(float(v) for v in self.row1)
        r2 = tuple(float(v) for v in self.row2)
        if len(r1) == 0 or len(r1) != len(r2):
            raise DomainError("rows must be nonempty and equally long")
        for v in r1 + r2:
            if not math.isfinite(v) or v <= 0:
                raise DomainError(f"matrix entries must be positive, got {v!r}")
        object.__setattr__(self, "row1", r1)
        object.__setattr__(self, "row2", r2)

    @property
    def n(self) -> int:
        return len(self.row1)

    @classmethod
    def from_dict(cls, obj: dict) -> "ParamMatrix2xN":
        try:
            return cls(tuple(obj["row1"]), tuple(obj["row2"]))
        except (KeyError, TypeError) as exc:
            raise DomainError(f"matrix dict needs row1/row2: {exc}") from exc

    def to_dict(self) -> dict:
        return {"row1": list(self.row1), "row2": list(self.row2)}


@dataclass(frozen=True)
class TTransform:
    """T = omega*I + (1-omega)*Pi on one column pair; 1-based indices."""

    omega: float
    pair: tuple[int, int]

    def __post_init__(self) -> None:
        w = float(self.omega)
        if not math.isfinite(w) or not (0.0 <= w <= 1.0):
            raise DomainError(f"omega must lie in [0, 1], got {w!r}")
        i, j = (int(self.pair[0]), int(self.pair[1]))
        if i == j or i < 1 or j < 1:
            raise DomainError(f"pair must be two distinct 1-based indices, got {self.pair!r}")
        object.__setattr__(self, "omega", w)
        object.__setattr__(self, "pair", (i, j))

    @classmethod
    def from_dict(cls, obj: dict) -> "TTransform":
        try:
            return cls(float(obj["omega"]), (obj["pair"][0], obj["pair"][1]))
        except (KeyError, TypeError, IndexError) as exc:
            raise DomainError(f"t-transform dict needs omega/pair: {exc}") from exc

    def to_dict(self) -> dict:
        return {"omega": self.omega, "pair": [self.pair[0], self.pair[1]]}


def in_script_l(pm: ParamMatrix2xN) -> bool:
    """Membership in script-L: the two rows are oppositely ordered, i.e.
    (row1_i - row1_j) * (row2_i - row2_j) <= 0 for every column pair, with
    1e-12 slack for ties."""
    r1 = np.asarray(pm.row1)
    r2 = np.asarray(pm.row2)
    d1 = r1[:, None] - r1[None, :]
    d2 = r2[:, None] - r2[None, :]
    return bool(np.all(d1 * d2 <= _PAIR_SLACK))


def apply_t_transform(pm: ParamMatrix2xN, t: TTransform) -> ParamMatrix2xN:
    i, j = t.pair[0] - 1, t.pair[1] - 1
    if i >= pm.n or j >= pm.n:
        raise DomainError(f"pair {t.pair} out of range for n={pm.n}")
    w = t.omega
    rows = []
    for row in (list(pm.row1), list(pm.row2)):
        ci, cj = row[i], row[j]
        row[i] = w * ci + (1.0 - w) * cj
        row[j] = (1.0 - w) * ci + w * cj
        rows.append(tuple(row))
    return ParamMatrix2xN(rows[0], rows[1])


def chain_majorization_verify(
    p: ParamMatrix2xN, q: ParamMatrix2xN, ts: list[TTransform] | tuple[TTransform, ...]
) -> bool:
    """True iff applying ts in order to p reproduces q entrywise within 1e-10."""
    if p.n != q.n:
        return False
    cur = p
    for t in ts:
        cur = apply_t_transform(cur, t)
    for got, want in zip(cur.row1 + cur.row2, q.row1 + q.row2):
        if abs(got - want) > _CHAIN_TOL:
            return False
    return True


def infer_t_transform_2x2(p: ParamMatrix2xN, q: ParamMatrix2xN) -> TTransform | None:
    """Recover the single T-transform carrying a 2x2 matrix p onto q.

    Each row independently determines omega through
    q[0] = omega*p[0] + (1-omega)*p[1]; a row with p[0] == p[1] only
    constrains q to match that constant.  Returns None when the rows
    disagree by more than 1e-9, when omega falls outside [0, 1], or when a
    degenerate row fails its consistency check.
    """
    if p.n != 2 or q.n != 2:
        raise DomainError("infer_t_transform_2x2 expects 2x2 matrices")
    omegas = []
    for prow, qrow in ((p.row1, q.row1), (p.row2, q.row2)):
        denom = prow[0] - prow[1]
        if abs(denom) <= 1e-15 * max(abs(prow[0]), abs(prow[1])):
            if abs(qrow[0] - prow[0]) > _OMEGA_AGREE or abs(qrow[1] - prow[1]) > _OMEGA_AGREE:
                return None
            continue
        omegas.append((qrow[0] - prow[1]) / denom)
    if not omegas:
        return TTransform(1.0, (1, 2))
    if len(omegas) == 2 and abs(omegas[0] - omegas[1]) > _OMEGA_AGREE:
        return None
    omega = omegas[0]
    if omega < -_PREFIX_TOL or omega > 1.0 + _PREFIX_TOL:
        return None
    t = TTransform(min(1.0, max(0.0, omega)), (1, 2))
    # omega came from the first columns only; insist the reconstruction
    # matches everywhere, otherwise q is not a T-transform image at all
    rec = apply_t_transform(p, t)
    for got, want in zip(rec.row1 + rec.row2, q.row1 + q.row2):
        if abs(got - want) > _OMEGA_AGREE * max(1.0, abs(want)):
            return None
    return t


def schur_probe(f, a, b) -> bool:
    """Given majorizes(a, b), report whether f respects the order, i.e.
    f(a) >= f(b) up to 1e-12.  Raises if the precondition fails."""
    if not majorizes(a, b):
        raise DomainError("schur_probe requires majorizes(a, b)")
    return bool(f(a) >= f(b) - _PREFIX_TOL)
