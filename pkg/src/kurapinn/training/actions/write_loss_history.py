import logging
import os

import pandas

from kurapinn.training.models.loss_history import LossHistory

logger = logging.getLogger(__name__)


def write_loss_history(history: LossHistory, filename: str) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(filename)), exist_ok=True)
    frame = pandas.DataFrame(
        {
            "epoch": range(1, len(history) + 1),
            "L_res": history.l_res,
            "L_IC": history.l_ic,
            "L_total": history.l_total,
        }
    )
    # repr precision so that repeated runs can be compared bitwise
    frame.to_csv(filename, index=False, float_format="%.17g")
    logger.info(f"Wrote loss history ({len(history)} epochs) to {filename}")
