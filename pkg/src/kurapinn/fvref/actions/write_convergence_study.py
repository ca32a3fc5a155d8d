import logging
import os

import pandas

from kurapinn.fvref.models.convergence_study import ConvergenceStudy

logger = logging.getLogger(__name__)


def write_convergence_study(study: ConvergenceStudy, filename: str) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(filename)), exist_ok=True)
    frame = pandas.DataFrame(
        {
            "M": [row.M for row in study.rows],
            "M_fine": [row.M_fine for row in study.rows],
            "error": [row.error for row in study.rows],
            "order": [row.order for row in study.rows],
        }
    )
    frame.to_csv(filename, index=False, float_format="%.17g")
    logger.info(f"Wrote convergence study with {len(study.rows)} rows to {filename}")
