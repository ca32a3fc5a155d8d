import typing as T

import numpy as np

from kurapinn.evalx.models.error_report import ErrorReport
from kurapinn.evalx.rules.total_variation import total_variation
from kurapinn.runtime.models.errors import GridMismatchError


def error_report_from_fields(
    predicted: np.ndarray,
    reference: np.ndarray,
    times: T.Optional[np.ndarray] = None,
) -> ErrorReport:
    """The energy norm sqrt(mean((u_Φ - u_ex)²)) over all nodes, plus diagnostics."""
    predicted = np.asarray(predicted, dtype=np.float64)
    reference = np.asarray(reference, dtype=np.float64)
    if predicted.shape != reference.shape:
        raise GridMismatchError(
            f"Prediction shape {predicted.shape} differs from reference {reference.shape}"
        )

    diff = predicted - reference
    if diff.ndim == 1:
        diff = diff[:, None]
    tv_ratio = _tv_ratio(predicted, reference) if reference.ndim == 2 else None

    return ErrorReport(
        energy_norm=float(np.sqrt(np.mean(diff**2))),
        max_abs_error=float(np.max(np.abs(diff))),
        rms_per_level=np.sqrt(np.mean(diff**2, axis=0)),
        n_eval=int(diff.size),
        times=times,
        tv_ratio=tv_ratio,
    )


def _tv_ratio(predicted: np.ndarray, reference: np.ndarray) -> T.Optional[float]:
    ratios = []
    for n in range(reference.shape[1]):
        reference_tv = total_variation(reference[:, n])
        if reference_tv > 0:
            ratios.append(total_variation(predicted[:, n]) / reference_tv)
    return float(np.mean(ratios)) if ratios else None
