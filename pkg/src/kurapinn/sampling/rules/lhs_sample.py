import logging
import math

import numpy as np

from kurapinn.runtime.models.errors import DomainError
from kurapinn.sampling.models.collocation_set import CollocationSet

logger = logging.getLogger(__name__)


def lhs_sample(n_points: int, T: float, seed: int) -> CollocationSet:
    """Latin-hypercube sample of [0, 2π) × [0, T).

    Each coordinate gets one point per stratum of width 2π/N (resp. T/N); the
    pairing of strata and the position inside each stratum are random.
    """
    if n_points < 1:
        raise DomainError(f"Need at least one collocation point, got {n_points}")

    rng = np.random.Generator(np.random.PCG64(seed))
    theta_strata = rng.permutation(n_points)
    t_strata = rng.permutation(n_points)
    theta = (theta_strata + rng.random(n_points)) / n_points * (2 * math.pi)
    t = (t_strata + rng.random(n_points)) / n_points * T

    logger.debug(f"Sampled {n_points} collocation points (seed={seed})")
    return CollocationSet(theta=theta, t=t, T=T, seed=seed)
