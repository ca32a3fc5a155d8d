import math

import numpy as np

from kurapinn.runtime.models.errors import DomainError
from kurapinn.sampling.models.ic_set import ICSet


def ic_sample(n_points: int, seed: int) -> ICSet:
    # Stratified: one uniform draw inside each of the N_0 strata of [0, 2π)
    if n_points < 1:
        raise DomainError(f"Need at least one initial-condition point, got {n_points}")

    rng = np.random.Generator(np.random.PCG64(seed))
    theta = (np.arange(n_points) + rng.random(n_points)) / n_points * (2 * math.pi)
    return ICSet(theta=theta, seed=seed)
