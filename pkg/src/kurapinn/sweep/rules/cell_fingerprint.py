import hashlib
import json

from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.sweep.models.sweep_cell import SweepCell
from kurapinn.training.models.train_config import TrainConfig


def cell_fingerprint(cell: SweepCell, spec: ProblemSpec, template: TrainConfig) -> str:
    """Readable cell label plus a short hash of everything that affects the result."""
    identity = dict(
        cell=cell.label,
        problem=spec.to_dict(),
        n_ic=template.n_ic,
        n_quad=template.n_quad,
        learning_rate=template.learning_rate,
        lambda_res=template.lambda_res,
        lambda_ic=template.lambda_ic,
        resample_colloc=template.resample_colloc,
        early_stop_patience=template.early_stop_patience,
        early_stop_min_delta=template.early_stop_min_delta,
    )
    digest = hashlib.blake2b(
        json.dumps(identity, sort_keys=True).encode("utf-8"), digest_size=4
    ).hexdigest()
    return f"{cell.label}-{digest}"
