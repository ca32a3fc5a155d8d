import io
import typing as T

import pandas

from kurapinn.runtime.models.errors import ConfigError
from kurapinn.sweep.models.claim_check import FAIL
from kurapinn.sweep.models.sweep_record import RECORD_COLUMNS, SweepRecord
from kurapinn.sweep.rules.claim_checks import claim_checks
from kurapinn.sweep.rules.pareto_front import pareto_front

REPORT_FORMATS = ("csv", "summary")


def report(records: T.Sequence[SweepRecord], format: str = "summary") -> str:
    if format not in REPORT_FORMATS:
        raise ConfigError(f"Unknown report format '{format}', expected {REPORT_FORMATS}")
    if format == "csv":
        return records_csv(records)
    return _summary(records)


def records_csv(records: T.Sequence[SweepRecord]) -> str:
    frame = pandas.DataFrame([r.to_row() for r in records], columns=RECORD_COLUMNS)
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False)
    return buffer.getvalue()


def _summary(records: T.Sequence[SweepRecord]) -> str:
    lines = [f"Sweep records: {len(records)}"]
    by_status = {}
    for r in records:
        by_status[r.status.value] = by_status.get(r.status.value, 0) + 1
    for status, count in sorted(by_status.items()):
        lines.append(f"  {status}: {count}")

    shared = [r for r in records if r.parallelism > 1]
    if shared:
        lines.append(
            f"NOTE: {len(shared)} records were trained with parallelism > 1; "
            "their wall-clock times are not comparable"
        )

    lines.append("")
    lines.append("Pareto front (training time vs energy norm):")
    if any(r.is_ok for r in records):
        for r in pareto_front(records):
            lines.append(
                f"  {r.fingerprint}: {r.wall_clock_seconds:.1f} s, "
                f"energy norm {r.energy_norm:.3e}"
            )
    else:
        lines.append("  (no successful records)")

    lines.append("")
    lines.append("Claim checks:")
    checks = claim_checks(records)
    for check in checks:
        lines.append(f"  [{check.status.upper()}] {check.name}: {check.detail}")
    failed = [c for c in checks if c.status == FAIL]
    if failed:
        lines.append(f"FAILED claim checks: {len(failed)}")
    return "\n".join(lines) + "\n"
