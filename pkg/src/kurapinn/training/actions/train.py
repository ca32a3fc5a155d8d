import logging
import math
import time

from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.rules.init_params import RNG_ALGORITHM, init_params
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.physics.models.quadrature_rule import QuadratureRule
from kurapinn.physics.rules.loss_total import loss_total
from kurapinn.runtime.models.errors import NonFiniteError
from kurapinn.runtime.utils.derive_seed import derive_seed
from kurapinn.sampling.rules.ic_sample import ic_sample
from kurapinn.sampling.rules.lhs_sample import lhs_sample
from kurapinn.training.models.adam_state import AdamState
from kurapinn.training.models.loss_history import LossHistory
from kurapinn.training.models.train_config import TrainConfig
from kurapinn.training.models.train_report import TrainReport
from kurapinn.training.rules.adam_step import adam_step
from kurapinn.training.rules.compute_loss_and_grad import compute_loss_and_grad
from kurapinn.training.rules.early_stop_monitor import early_stop_monitor

logger = logging.getLogger(__name__)


def train(
    net_config: NetConfig, problem_spec: ProblemSpec, train_config: TrainConfig
) -> TrainReport:
    colloc_seed = derive_seed(train_config.seed, "colloc")
    ic_seed = derive_seed(train_config.seed, "ic")
    colloc = lhs_sample(train_config.n_colloc, problem_spec.T, colloc_seed)
    ic_set = ic_sample(train_config.n_ic, ic_seed)
    quad = QuadratureRule(n_nodes=train_config.n_quad)

    params = init_params(net_config)
    state = AdamState.zeros(net_config.param_count)
    history = LossHistory()
    checkpoints = {}
    checkpoint_epochs = set(train_config.checkpoint_epochs)
    stopped_early = False

    logger.info(
        f"Training {net_config.activation.value} net L={net_config.depth} "
        f"n={net_config.width} ({net_config.param_count} parameters) for "
        f"{train_config.epochs} epochs on {colloc.n_points} collocation points"
    )

    start = time.perf_counter()
    epoch = 0
    for epoch in range(1, train_config.epochs + 1):
        if train_config.resample_colloc and epoch > 1:
            colloc = lhs_sample(
                train_config.n_colloc,
                problem_spec.T,
                derive_seed(train_config.seed, f"colloc:{epoch}"),
            )

        try:
            l_res, l_ic, grad = compute_loss_and_grad(
                params, net_config, problem_spec, train_config, quad, colloc, ic_set
            )
        except NonFiniteError as e:
            raise NonFiniteError(
                f"Epoch {epoch}: {e}", epoch=epoch, last_finite_params=params
            ) from e

        l_total = loss_total(
            train_config.lambda_res, train_config.lambda_ic, l_res, l_ic
        )
        if not all(math.isfinite(x) for x in (l_res, l_ic, l_total)):
            raise NonFiniteError(
                f"Non-finite loss at epoch {epoch}", epoch=epoch, last_finite_params=params
            )
        history.append(l_res, l_ic, l_total)

        params, state = adam_step(params, grad, state, epoch, train_config)
        if epoch in checkpoint_epochs:
            checkpoints[epoch] = params

        if logger.isEnabledFor(logging.DEBUG):
            logger.debug(
                f"epoch {epoch}: L_res={l_res:.6e} L_IC={l_ic:.6e} L_total={l_total:.6e}"
            )
        elif epoch % train_config.log_every == 0:
            logger.info(f"epoch {epoch}/{train_config.epochs}: L_total={l_total:.6e}")

        if train_config.early_stop_patience is not None and early_stop_monitor(
            history.l_total,
            train_config.early_stop_patience,
            train_config.early_stop_min_delta,
        ):
            logger.info(f"Early stopping at epoch {epoch}")
            stopped_early = True
            break

    elapsed = time.perf_counter() - start
    logger.info(f"Training finished after {epoch} epochs in {elapsed:.1f} s")

    return TrainReport(
        history=history,
        wall_clock_seconds=elapsed,
        params=params,
        epochs_completed=len(history),
        checkpoints=checkpoints,
        stopped_early=stopped_early,
        colloc_seed=colloc_seed,
        ic_seed=ic_seed,
        rng_algorithm=RNG_ALGORITHM,
    )
