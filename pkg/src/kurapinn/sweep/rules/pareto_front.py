import typing as T

from kurapinn.sweep.models.sweep_record import SweepRecord


def pareto_front(records: T.Sequence[SweepRecord]) -> T.List[SweepRecord]:
    """Ok records not beaten on both training time and energy norm, ordered by time."""
    candidates = [r for r in records if r.is_ok]
    front = [r for r in candidates if not any(_dominates(o, r) for o in candidates)]
    return sorted(front, key=lambda r: (r.wall_clock_seconds, r.energy_norm))


def _dominates(a: SweepRecord, b: SweepRecord) -> bool:
    no_worse = (
        a.wall_clock_seconds <= b.wall_clock_seconds and a.energy_norm <= b.energy_norm
    )
    better = a.wall_clock_seconds < b.wall_clock_seconds or a.energy_norm < b.energy_norm
    return no_worse and better
