import json
import logging
import os
import typing as T

import pandas

from kurapinn.sweep.models.sweep_record import RECORD_COLUMNS, SweepRecord

logger = logging.getLogger(__name__)

LEDGER_FILENAME = "records.csv"
CELLS_DIRNAME = "cells"


def read_ledger(out_dir: str) -> T.List[SweepRecord]:
    """The newest record of every cell in the store, in ledger order."""
    filename = os.path.join(out_dir, LEDGER_FILENAME)
    if not os.path.exists(filename):
        return []
    frame = pandas.read_csv(filename, keep_default_na=True, float_precision="round_trip")
    # A forced rerun appends a newer row for the same cell
    frame = frame.drop_duplicates(subset="fingerprint", keep="last")
    records = [SweepRecord.from_row(row) for row in frame.to_dict(orient="records")]
    logger.info(f"Read {len(records)} records from {filename}")
    return records


def append_record(out_dir: str, record: SweepRecord, metadata: T.Dict) -> None:
    """Append one row to the ledger and write the cell's metadata JSON."""
    os.makedirs(os.path.join(out_dir, CELLS_DIRNAME), exist_ok=True)
    filename = os.path.join(out_dir, LEDGER_FILENAME)
    frame = pandas.DataFrame([record.to_row()], columns=RECORD_COLUMNS)
    frame.to_csv(
        filename,
        mode="a",
        header=not os.path.exists(filename),
        index=False,
        float_format="%.17g",
    )

    metadata_filename = os.path.join(out_dir, CELLS_DIRNAME, f"{record.fingerprint}.json")
    with open(metadata_filename, "w", encoding="utf-8") as f:
        json.dump(dict(record=record.to_row(), **metadata), f, indent=2, default=str)
    logger.debug(f"Recorded {record.fingerprint} ({record.status.value})")
