import json
import logging
import os

import numpy as np
import pandas

from kurapinn.evalx.models.error_report import ErrorReport

logger = logging.getLogger(__name__)


def write_error_report(report: ErrorReport, filename: str) -> None:
    """Per-level RMS as CSV, with the scalar summary in a '.json' sibling."""
    os.makedirs(os.path.dirname(os.path.abspath(filename)), exist_ok=True)
    times = report.times if report.times is not None else np.arange(report.rms_per_level.size)
    pandas.DataFrame({"t": times, "rms": report.rms_per_level}).to_csv(
        filename, index=False, float_format="%.17g"
    )

    summary = dict(
        energy_norm=report.energy_norm,
        max_abs_error=report.max_abs_error,
        n_eval=report.n_eval,
        tv_ratio=report.tv_ratio,
    )
    summary_filename = os.path.splitext(filename)[0] + ".json"
    with open(summary_filename, "w", encoding="utf-8") as f:
        json.dump(summary, f, indent=2)
    logger.info(f"Wrote error report to {filename} and {summary_filename}")
