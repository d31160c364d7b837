"""
I/O utilities for swagnet.

This module provides helpers for writing run artifacts: JSON documents,
CSV tables with fixed float formatting, and content hashes of written files.
"""

import csv
import hashlib
import json
import os
from typing import Any, Dict, Iterable, List, Optional, Sequence

CSV_FLOAT_FORMAT = "{:.9g}"


def _ensure_parent(filename: str) -> None:
    os.makedirs(os.path.dirname(filename) if os.path.dirname(filename) else '.', exist_ok=True)


def save_json(data: Dict, filename: str, indent: Optional[int] = 2) -> str:
    """
    Save a JSON document.

    Floats are written with ``repr`` (shortest round-trip), so reading the
    file back reproduces every value bitwise.

    Args:
        data: JSON-serializable data
        filename: Path to save the data to
        indent: Indentation passed to ``json.dump``

    Returns:
        Path to the saved file
    """
    _ensure_parent(filename)
    with open(filename, 'w') as f:
        json.dump(data, f, indent=indent, allow_nan=False)
        f.write("\n")
    return filename


def load_json(filename: str) -> Dict:
    """Load a JSON document; raises FileNotFoundError for a missing path."""
    with open(filename, 'r') as f:
        return json.load(f)


def format_value(value: Any) -> str:
    if isinstance(value, float):
        return CSV_FLOAT_FORMAT.format(value)
    return str(value)


def write_csv(filename: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """
    Write a CSV table, floats formatted with 9 significant digits.

    Args:
        filename: Path to save the table to
        header: Column names
        rows: Row values; ``None`` is written as an empty cell

    Returns:
        Path to the saved file
    """
    _ensure_parent(filename)
    with open(filename, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(["" if v is None else format_value(v) for v in row])
    return filename


def read_csv(filename: str) -> List[Dict[str, str]]:
    """Read a CSV table written by ``write_csv`` as a list of row dicts."""
    with open(filename, 'r', newline='') as f:
        return list(csv.DictReader(f))


def git_blob_hash(filename: str) -> str:
    """SHA-1 of the file contents framed the way git hashes blobs."""
    with open(filename, 'rb') as f:
        payload = f.read()
    digest = hashlib.sha1()
    digest.update(f"blob {len(payload)}\0".encode())
    digest.update(payload)
    return digest.hexdigest()
