import typing as T

from kurapinn.sweep.models.claim_check import FAIL, PASS, SKIPPED, ClaimCheck
from kurapinn.sweep.models.sweep_record import SweepRecord

HEADLINE_THRESHOLD = 5e-4
EPOCH_GAIN = 1.3
RELU_FACTOR = 10.0
COLLOC_BAND = 0.25


def claim_checks(records: T.Sequence[SweepRecord]) -> T.List[ClaimCheck]:
    ok = [r for r in records if r.is_ok]
    return [
        _headline_accuracy(ok),
        _epoch_trend(ok),
        _width_trend(ok),
        _relu_failure(records, ok),
        _collocation_saturation(ok),
    ]


def _select(records, **conditions) -> T.Dict[int, SweepRecord]:
    # One record per seed
    return {
        r.seed: r
        for r in records
        if all(getattr(r, key) == value for key, value in conditions.items())
    }


def _paired(name, first, second, compare, describe) -> ClaimCheck:
    seeds = sorted(set(first) & set(second))
    if not seeds:
        return ClaimCheck(name=name, status=SKIPPED, detail="cells not in sweep")
    failures = [s for s in seeds if not compare(first[s], second[s])]
    details = "; ".join(describe(first[s], second[s]) for s in seeds)
    return ClaimCheck(name=name, status=FAIL if failures else PASS, detail=details)


def _headline_accuracy(ok) -> ClaimCheck:
    name = "headline accuracy (tanh 4x128, N_r=1024, 4096 epochs)"
    cells = _select(ok, activation="tanh", depth=4, width=128, n_colloc=1024, epochs=4096)
    if not cells:
        return ClaimCheck(name=name, status=SKIPPED, detail="cell not in sweep")
    worst = max(r.energy_norm for r in cells.values())
    return ClaimCheck(
        name=name,
        status=PASS if worst <= HEADLINE_THRESHOLD else FAIL,
        detail=f"energy norm {worst:.3e} (threshold {HEADLINE_THRESHOLD:.0e})",
    )


def _epoch_trend(ok) -> ClaimCheck:
    base = dict(activation="tanh", depth=4, width=64, n_colloc=1024)
    return _paired(
        "epoch trend (tanh 4x64: 4096 vs 2048 epochs)",
        _select(ok, epochs=2048, **base),
        _select(ok, epochs=4096, **base),
        lambda short, long: long.energy_norm <= short.energy_norm / EPOCH_GAIN,
        lambda short, long: f"{short.energy_norm:.3e} -> {long.energy_norm:.3e}",
    )


def _width_trend(ok) -> ClaimCheck:
    base = dict(activation="tanh", depth=4, epochs=4096, n_colloc=1024)
    return _paired(
        "width trend (tanh L=4, 4096 epochs: n=128 vs n=64)",
        _select(ok, width=64, **base),
        _select(ok, width=128, **base),
        lambda narrow, wide: wide.energy_norm <= narrow.energy_norm,
        lambda narrow, wide: f"{narrow.energy_norm:.3e} -> {wide.energy_norm:.3e}",
    )


def _collocation_saturation(ok) -> ClaimCheck:
    base = dict(activation="tanh", depth=4, width=128, epochs=4096)

    def saturated(sparse, dense):
        return (
            abs(dense.energy_norm - sparse.energy_norm) / sparse.energy_norm
            <= COLLOC_BAND
        )

    return _paired(
        "collocation saturation (tanh 4x128: N_r 2048 vs 1024)",
        _select(ok, n_colloc=1024, **base),
        _select(ok, n_colloc=2048, **base),
        saturated,
        lambda sparse, dense: f"{sparse.energy_norm:.3e} -> {dense.energy_norm:.3e}",
    )


def _relu_failure(records, ok) -> ClaimCheck:
    name = "ReLU failure (every ReLU cell >= 10x best tanh)"
    relu = [r for r in records if r.activation == "relu"]
    tanh = [r for r in ok if r.activation == "tanh"]
    if not relu or not tanh:
        return ClaimCheck(name=name, status=SKIPPED, detail="needs ReLU and tanh cells")
    best_tanh = min(r.energy_norm for r in tanh)
    # A ReLU cell that did not even finish counts as failing to capture the solution
    captured = [
        r for r in relu if r.is_ok and r.energy_norm < RELU_FACTOR * best_tanh
    ]
    return ClaimCheck(
        name=name,
        status=FAIL if captured else PASS,
        detail=(
            f"best tanh {best_tanh:.3e}; best ReLU "
            f"{min((r.energy_norm for r in relu if r.is_ok), default=float('nan')):.3e}"
        ),
    )
