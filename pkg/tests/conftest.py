from __future__ import annotations

import numpy as np
import pytest

from ikmix import FiniteMixture, FixtureCatalog, IKParams


@pytest.fixture(scope="session")
def catalog() -> FixtureCatalog:
    return FixtureCatalog()


def random_params(rng: np.random.Generator,
                  alpha_range=(0.3, 4.0), beta_range=(0.3, 4.0)) -> IKParams:
    return IKParams(rng.uniform(*alpha_range), rng.uniform(*beta_range))


def random_mixture(rng: np.random.Generator, n: int | None = None,
                   alpha_range=(0.3, 4.0), beta_range=(0.3, 4.0)) -> FiniteMixture:
    if n is None:
        n = int(rng.integers(2, 4))
    raw = rng.uniform(0.05, 1.0, size=n)
    weights = tuple(raw / raw.sum())
    comps = tuple(random_params(rng, alpha_range, beta_range) for _ in range(n))
    return FiniteMixture(weights, comps)


def random_script_l2(rng: np.random.Generator, row2_range=(0.3, 4.0)):
    """A random member of the oppositely-ordered 2x2 class: weights
    ascending, second row descending."""
    w = float(rng.uniform(0.05, 0.45))
    lo = float(rng.uniform(*row2_range))
    hi = float(rng.uniform(lo, row2_range[1]))
    return (w, 1.0 - w), (hi, lo)
