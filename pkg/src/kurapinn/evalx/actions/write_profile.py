import logging
import os

import numpy as np
import pandas

logger = logging.getLogger(__name__)


def write_profile(
    theta: np.ndarray, t_values: np.ndarray, values: np.ndarray, filename: str
) -> None:
    """Wide table: one `theta` column and one `u(t=...)` column per time."""
    os.makedirs(os.path.dirname(os.path.abspath(filename)), exist_ok=True)
    columns = {"theta": theta}
    for n, t in enumerate(t_values):
        columns[f"u(t={t:g})"] = values[:, n]
    pandas.DataFrame(columns).to_csv(filename, index=False, float_format="%.17g")
    logger.info(f"Wrote profile ({len(theta)}x{len(t_values)}) to {filename}")
