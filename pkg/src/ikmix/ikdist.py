"""Inverted-Kumaraswamy distribution on x > 0.

With shape parameters alpha, beta > 0 and t(x) = (1+x)^(-alpha),
u(x) = 1 - t(x), the distribution is

    cdf(x) = u(x)^beta
    pdf(x) = alpha * beta * (1+x)^(-(alpha+1)) * u(x)^(beta-1)
    sf(x)  = 1 - u(x)^beta
    reversed hazard(x) = pdf/cdf = alpha * beta * (1+x)^(-(alpha+1)) / u(x)

The beta power cancels exactly in the reversed hazard, and the quantile
inverts the cdf in closed form.  Everything here is evaluated through
log1p/expm1 so that the extremes (x near 0, x very large, beta large)
neither underflow silently nor lose the leading digits:

    u(x)      = -expm1(-alpha * log1p(x))
    log u(x)  = log(-expm1(.)) or log1p(-exp(.)), whichever keeps digits
    cdf(x)    = exp(beta * log u(x))
    sf(x)     = -expm1(beta * log u(x))

All evaluators accept a float or an array of x values and return a
matching float or array.  Invalid x (negative, NaN, infinite) raises
DomainError rather than propagating NaNs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DomainError",
    "IKParams",
    "ik_cdf",
    "ik_pdf",
    "ik_sf",
    "ik_reversed_hazard",
    "ik_quantile",
]


class DomainError(ValueError):
    """An argument lies outside the supported domain."""


@dataclass(frozen=True)
class IKParams:
    """Shape-parameter pair; both entries must be positive finite reals."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise DomainError(f"{name} must be a real number, got {v!r}")
            if not math.isfinite(v) or v <= 0:
                raise DomainError(f"{name} must be positive and finite, got {v!r}")
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "beta", float(self.beta))


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------


def _as_x(x, *, minimum: float = 0.0):
    """Validate x and return (array, was_scalar).

    minimum=0.0 admits the boundary x=0; minimum>0 excludes it (reversed
    hazard is undefined there).
    """
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    flat = np.atleast_1d(arr)
    if flat.size == 0:
        raise DomainError("empty x array")
    if not np.all(np.isfinite(flat)):
        raise DomainError("x must be finite")
    if minimum == 0.0:
        if np.any(flat < 0.0):
            raise DomainError("x must be >= 0")
    else:
        if np.any(flat <= 0.0):
            raise DomainError("x must be > 0")
    return arr if not scalar else arr.reshape(1), scalar


def _ret(values: np.ndarray, scalar: bool):
    return float(values[0]) if scalar else values


def _log_u(xs: np.ndarray, alpha: float) -> np.ndarray:
    """log u(x) for u = 1 - (1+x)^(-alpha); -inf exactly at x = 0.

    Split at t = 1/2: for t = (1+x)^(-alpha) close to 1 the expm1 form
    log(-expm1(-y)) keeps the leading digits of the tiny u, while for t
    close to 0 the log1p form log1p(-exp(-y)) keeps the tiny log u.
    Each branch is relative-accurate on its half, which the other is not.
    """
    y = alpha * np.log1p(xs)
    with np.errstate(divide="ignore"):
        small_u = np.log(-np.expm1(-y))
        large_u = np.log1p(-np.exp(-y))
    return np.where(y > math.log(2.0), large_u, small_u)


# ---------------------------------------------------------------------------
# evaluators
# ---------------------------------------------------------------------------


def ik_cdf(x, params: IKParams):
    """Distribution function; exactly 0.0 at x = 0 and increasing to 1."""
    xs, scalar = _as_x(x)
    out = np.exp(params.beta * _log_u(xs, params.alpha))
    return _ret(out, scalar)


def ik_sf(x, params: IKParams):
    """Survival function 1 - cdf, computed as -expm1(beta * log u).

    The expm1 route keeps full precision in the far right tail where the
    cdf is within an ulp of 1.
    """
    xs, scalar = _as_x(x)
    out = -np.expm1(params.beta * _log_u(xs, params.alpha))
    return _ret(out, scalar)


def ik_pdf(x, params: IKParams):
    """Density on x >= 0.

    The x = 0 boundary depends on beta: the density vanishes for beta > 1,
    equals alpha*beta for beta = 1, and diverges for beta < 1.  The
    divergent case returns float('inf') deliberately; callers that cannot
    tolerate a boundary infinity should not evaluate at 0.
    """
    xs, scalar = _as_x(x)
    a, b = params.alpha, params.beta
    L = np.log1p(xs)
    log_ab = math.log(a) + math.log(b)
    if b == 1.0:
        logf = log_ab - (a + 1.0) * L
    else:
        # (b-1) * log u is +inf at x=0 for b<1 and -inf for b>1, which
        # exponentiates to the correct boundary value in both cases.
        logf = log_ab - (a + 1.0) * L + (b - 1.0) * _log_u(xs, a)
    with np.errstate(over="ignore"):
        out = np.exp(logf)
    return _ret(out, scalar)


def ik_reversed_hazard(x, params: IKParams):
    """pdf/cdf on x > 0; the beta power cancels so only 1/u remains."""
    xs, scalar = _as_x(x, minimum=np.finfo(float).tiny)
    a, b = params.alpha, params.beta
    L = np.log1p(xs)
    u = -np.expm1(-a * L)
    out = a * b * np.exp(-(a + 1.0) * L) / u
    return _ret(out, scalar)


def ik_quantile(u, params: IKParams):
    """Inverse cdf on probabilities strictly inside (0, 1).

    x = (1 - u^(1/beta))^(-1/alpha) - 1, arranged so that the inner
    1 - u^(1/beta) is an expm1 (sharp for u near 1 or large beta) and the
    outer -1 is an expm1 (sharp for x near 0).
    """
    arr = np.asarray(u, dtype=float)
    scalar = arr.ndim == 0
    flat = np.atleast_1d(arr)
    if flat.size == 0:
        raise DomainError("empty probability array")
    if not np.all(np.isfinite(flat)) or np.any(flat <= 0.0) or np.any(flat >= 1.0):
        raise DomainError("quantile argument must lie strictly in (0, 1)")
    us = arr.reshape(1) if scalar else arr
    w = -np.expm1(np.log(us) / params.beta)  # 1 - u^(1/beta)
    out = np.expm1(-np.log(w) / params.alpha)
    return _ret(out, scalar)
