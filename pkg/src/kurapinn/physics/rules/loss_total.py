from kurapinn.runtime.models.errors import ConfigError


def loss_total(
    lambda_res: float, lambda_ic: float, l_res: float, l_ic: float
) -> float:
    if lambda_res < 0 or lambda_ic < 0:
        raise ConfigError(
            f"Loss weights must be >= 0, got lambda_res={lambda_res}, "
            f"lambda_ic={lambda_ic}"
        )
    return lambda_res * l_res + lambda_ic * l_ic
