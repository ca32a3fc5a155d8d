import json
import logging
import os

import numpy as np

from kurapinn.fvref.models.ref_solution import RefSolution

logger = logging.getLogger(__name__)

REF_FORMAT = "kurapinn-fvref"
REF_VERSION = 1


def ref_header(ref: RefSolution) -> dict:
    return dict(
        format=REF_FORMAT,
        version=REF_VERSION,
        M=ref.grid.M,
        N_t=ref.grid.n_levels,
        T=ref.grid.T,
        K=ref.problem.K,
        ic=ref.problem.ic.value,
        eps=ref.problem.eps,
        cfl=ref.cfl,
        scheme=ref.scheme,
        negative_overshoot=ref.negative_overshoot,
        n_substeps=ref.n_substeps,
    )


def save_ref_solution(ref: RefSolution, filename: str) -> None:
    """Write `ref` as CSV when the name ends in .csv, else in the binary layout.

    Binary: one JSON header line, then M*N_t little-endian float64 in row-major
    order (row = cell). CSV: '# key=value' header lines, then one row per cell.
    """
    os.makedirs(os.path.dirname(os.path.abspath(filename)), exist_ok=True)
    header = ref_header(ref)

    if filename.endswith(".csv"):
        with open(filename, "w", encoding="utf-8") as f:
            for key, value in header.items():
                f.write(f"# {key}={json.dumps(value)}\n")
            np.savetxt(f, ref.values, delimiter=",", fmt="%.17g")
    else:
        with open(filename, "wb") as f:
            f.write(json.dumps(header, sort_keys=True).encode("utf-8") + b"\n")
            f.write(np.ascontiguousarray(ref.values, dtype="<f8").tobytes())

    logger.info(f"Saved reference solution ({ref.grid.M}x{ref.grid.n_levels}) to {filename}")
