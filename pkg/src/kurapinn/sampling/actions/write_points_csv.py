import logging
import os
import typing as T

import numpy as np
import pandas

from kurapinn.sampling.models.collocation_set import CollocationSet
from kurapinn.sampling.models.ic_set import ICSet

logger = logging.getLogger(__name__)


def write_points_csv(points: T.Union[CollocationSet, ICSet], filename: str) -> None:
    t = points.t if isinstance(points, CollocationSet) else np.zeros_like(points.theta)
    os.makedirs(os.path.dirname(os.path.abspath(filename)), exist_ok=True)
    pandas.DataFrame({"theta": points.theta, "t": t}).to_csv(
        filename, index=False, float_format="%.17g"
    )
    logger.info(f"Wrote {points.n_points} points to {filename}")
