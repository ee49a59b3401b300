"""Parsers for group files."""

from parsers.group_file import (
    GroupFile,
    PointStabilizerSpec,
    load_group,
    load_group_file,
    write_json,
)

__all__ = ["GroupFile", "PointStabilizerSpec", "load_group", "load_group_file", "write_json"]
