"""
Utilities module for swagnet.

This module provides helpers for writing and reading run artifacts.
"""

from swagnet.utils.io import (
    format_value,
    git_blob_hash,
    load_json,
    read_csv,
    save_json,
    write_csv,
)

__all__ = [
    'format_value',
    'git_blob_hash',
    'load_json',
    'read_csv',
    'save_json',
    'write_csv',
]
