from kurapinn.training.rules.early_stop_monitor import early_stop_monitor


def test_strictly_decreasing_history_keeps_going():
    history = [1.0 / k for k in range(1, 20)]
    assert not early_stop_monitor(history, patience=3, min_delta=0.0)


def test_flat_history_stops():
    assert early_stop_monitor([0.5] * 6, patience=5, min_delta=0.0)


def test_short_history_never_stops():
    assert not early_stop_monitor([0.5] * 5, patience=5, min_delta=0.0)


def test_stops_once_improvement_drops_below_min_delta():
    history = [1.0, 0.5, 0.4999, 0.4998]
    stops = [early_stop_monitor(history[: k + 1], 2, 1e-2) for k in range(len(history))]
    assert stops == [False, False, False, True]
