import io
import json
import logging

import numpy as np

from kurapinn.fvref.actions.save_ref_solution import REF_FORMAT
from kurapinn.fvref.models.fv_grid import FvGrid
from kurapinn.fvref.models.ref_solution import RefSolution
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.runtime.models.errors import FormatError

logger = logging.getLogger(__name__)


def load_ref_solution(filename: str) -> RefSolution:
    try:
        if filename.endswith(".csv"):
            header, values = _read_csv(filename)
        else:
            header, values = _read_binary(filename)
    except FileNotFoundError as e:
        raise FormatError(f"Reference solution not found: {filename}") from e

    if header.get("format") != REF_FORMAT:
        raise FormatError(f"{filename} is not a kurapinn reference solution")
    M, n_levels = int(header["M"]), int(header["N_t"])
    if values.size != M * n_levels:
        raise FormatError(
            f"{filename} holds {values.size} values, header says {M}x{n_levels}"
        )
    values = values.reshape(M, n_levels)
    if not np.all(np.isfinite(values)):
        raise FormatError(f"{filename} contains non-finite values")

    problem = ProblemSpec.from_dict(header)
    ref = RefSolution(
        grid=FvGrid(M=M, n_levels=n_levels, T=float(header["T"])),
        values=values,
        problem=problem,
        cfl=float(header["cfl"]),
        scheme=header["scheme"],
        negative_overshoot=bool(header["negative_overshoot"]),
        n_substeps=int(header.get("n_substeps", 0)),
    )
    logger.info(f"Loaded reference solution {filename} ({M}x{n_levels})")
    return ref


def _read_binary(filename: str):
    with open(filename, "rb") as f:
        header_line = f.readline()
        payload = f.read()
    try:
        header = json.loads(header_line.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise FormatError(f"Unreadable header in {filename}: {e}") from e
    if len(payload) % 8:
        raise FormatError(f"{filename} payload is not a whole number of float64")
    return header, np.frombuffer(payload, dtype="<f8").copy()


def _read_csv(filename: str):
    header = {}
    rows = []
    with open(filename, "r", encoding="utf-8") as f:
        for line in f:
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition("=")
                try:
                    header[key] = json.loads(value)
                except json.JSONDecodeError as e:
                    raise FormatError(f"Bad header line in {filename}: {line!r}") from e
            elif line.strip():
                rows.append(line)
    if not rows:
        return header, np.zeros(0)
    try:
        values = np.loadtxt(io.StringIO("".join(rows)), delimiter=",", ndmin=2)
    except ValueError as e:
        raise FormatError(f"Malformed values in {filename}: {e}") from e
    if values.shape[1] != int(header.get("N_t", values.shape[1])):
        raise FormatError(f"{filename} rows have {values.shape[1]} columns")
    return header, values.ravel()
