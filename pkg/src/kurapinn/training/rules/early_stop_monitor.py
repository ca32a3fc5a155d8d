import typing as T


def early_stop_monitor(
    history: T.Sequence[float], patience: int, min_delta: float
) -> bool:
    """True when the last `patience` losses beat the earlier best by at most min_delta."""
    if len(history) <= patience:
        return False
    best_before = min(history[:-patience])
    best_recent = min(history[-patience:])
    return best_before - best_recent <= min_delta
