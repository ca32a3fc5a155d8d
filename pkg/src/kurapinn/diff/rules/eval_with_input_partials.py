import typing as T

import numpy as np

from kurapinn.diff.models.value_with_partials import ValueWithPartials
from kurapinn.diff.rules.trace_params import trace_params
from kurapinn.net.models.net_config import NetConfig
from kurapinn.net.models.param_set import ParamSet
from kurapinn.runtime.models.errors import NonFiniteError


def eval_with_input_partials(
    params: ParamSet, config: NetConfig, theta: float, t: float
) -> ValueWithPartials:
    u, du_dtheta, du_dt = eval_batch_with_input_partials(
        params, config, np.array([theta]), np.array([t])
    )
    return ValueWithPartials(
        u=float(u[0]), du_dtheta=float(du_dtheta[0]), du_dt=float(du_dt[0])
    )


def eval_batch_with_input_partials(
    params: ParamSet, config: NetConfig, theta: np.ndarray, t: np.ndarray
) -> T.Tuple[np.ndarray, np.ndarray, np.ndarray]:
    traced = trace_params(params, config, requires_grad=False)
    output = traced.evaluate(theta, t, with_partials=True)
    values = (output.u.value, output.du_dtheta.value, output.du_dt.value)
    for name, value in zip(("u", "du_dtheta", "du_dt"), values):
        if not np.all(np.isfinite(value)):
            raise NonFiniteError(f"Non-finite {name} in input partials")
    return values
