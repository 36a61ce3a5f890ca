"""
Machine-readable output: one JSON object per line, or CSV with a header.

Keys keep insertion order and floats are pre-rounded, so identical inputs give
byte-identical output.
"""

import csv
import json
from typing import Any, Dict, Iterable, Sequence, TextIO


def dump_json(record: Dict[str, Any]) -> str:
    return json.dumps(record, ensure_ascii=True)


def write_json_lines(records: Iterable[Dict[str, Any]], stream: TextIO) -> None:
    for record in records:
        stream.write(dump_json(record) + "\n")


def write_csv(records: Iterable[Dict[str, Any]], fields: Sequence[str], stream: TextIO) -> None:
    writer = csv.DictWriter(stream, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerow({key: record.get(key, '') for key in fields})
