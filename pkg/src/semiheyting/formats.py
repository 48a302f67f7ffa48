"""Table documents: a bit-exact text format and a JSON twin.

Text layout, newline-terminated with single spaces and no trailing
whitespace::

    shht 1
    n=3
    2 2 2
    0 2 2
    0 1 2

JSON layout::

    {"format":"shht","version":1,"n":3,"table":[[2,2,2],[0,2,2],[0,1,2]]}

`parse` is the exact inverse of `serialize` on every well-formed table.
Syntax problems raise `TableParseError` (with line/position where it
makes sense); structurally sound documents with bad content (non-square
table, entry out of range, missing size) raise `TableValidationError`.
"""

from __future__ import annotations

import json

import numpy as np

from .tables import as_table

__all__ = [
    "TableParseError",
    "TableValidationError",
    "parse",
    "serialize",
]

_MAGIC = "shht"
_VERSION = 1


class TableParseError(ValueError):
    """Input does not match the document grammar."""


class TableValidationError(ValueError):
    """Well-formed document whose content is not a table."""


def serialize(table, fmt: str = "text") -> bytes:
    """Encode a table in the given format ('text' or 'json')."""
    t = as_table(table)
    n = t.shape[0]
    if fmt == "text":
        lines = [f"{_MAGIC} {_VERSION}", f"n={n}"]
        lines.extend(" ".join(str(v) for v in row) for row in t.tolist())
        return ("\n".join(lines) + "\n").encode("ascii")
    if fmt == "json":
        doc = {"format": _MAGIC, "version": _VERSION, "n": n, "table": t.tolist()}
        return json.dumps(doc, separators=(",", ":")).encode("ascii")
    raise ValueError(f"unknown format {fmt!r}: expected 'text' or 'json'")


def parse(data, fmt: str = "auto") -> np.ndarray:
    """Decode a table document; with fmt='auto' sniff text vs JSON."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    elif isinstance(data, (bytearray, memoryview)):
        data = bytes(data)
    if fmt == "auto":
        head = data.lstrip()
        if head.startswith(b"s"):
            fmt = "text"
        elif head.startswith(b"{"):
            fmt = "json"
        else:
            raise TableParseError(
                "unrecognized document: expected a 'shht' header or a JSON object"
            )
    if fmt == "text":
        return _parse_text(data)
    if fmt == "json":
        return _parse_json(data)
    raise ValueError(f"unknown format {fmt!r}: expected 'text', 'json' or 'auto'")


def _check_range(value: int, i: int, k: int, n: int) -> None:
    if value >= n:
        raise TableValidationError(f"cell ({i},{k}): index {value} >= n={n}")
    if value < 0:
        raise TableValidationError(f"cell ({i},{k}): index {value} < 0")


def _parse_text(data: bytes) -> np.ndarray:
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as exc:
        raise TableParseError(f"not an ascii document: {exc}") from None
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()  # terminator of the final line, not an empty row

    if not lines or lines[0].split() != [_MAGIC, str(_VERSION)]:
        got = lines[0] if lines else ""
        head = got.split()
        if len(head) == 2 and head[0] == _MAGIC:
            raise TableParseError(f"line 1: unsupported version {head[1]!r}")
        raise TableParseError(f"line 1: expected '{_MAGIC} {_VERSION}', got {got!r}")

    if len(lines) < 2 or not lines[1].startswith("n="):
        raise TableParseError("line 2: expected the chain size as 'n=<integer>'")
    try:
        n = int(lines[1][2:])
    except ValueError:
        raise TableParseError(
            f"line 2: chain size {lines[1][2:]!r} is not an integer"
        ) from None
    if n < 1:
        raise TableValidationError(f"chain size must be >= 1, got {n}")

    rows = []
    for i in range(n):
        lineno = 3 + i
        if lineno - 1 >= len(lines):
            raise TableParseError(
                f"unexpected end of input: expected {n} rows, found {i}"
            )
        fields = lines[lineno - 1].split()
        if len(fields) != n:
            raise TableParseError(f"row {i} has {len(fields)} of {n} entries")
        row = []
        for k, field in enumerate(fields):
            try:
                value = int(field)
            except ValueError:
                raise TableParseError(
                    f"line {lineno}, field {k}: {field!r} is not an integer"
                ) from None
            _check_range(value, i, k, n)
            row.append(value)
        rows.append(row)

    for extra, line in enumerate(lines[2 + n :], start=3 + n):
        if line.strip():
            raise TableParseError(f"line {extra}: trailing content {line!r}")

    return as_table(rows)


def _parse_json(data: bytes) -> np.ndarray:
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise TableParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("format") != _MAGIC:
        raise TableParseError("not a table document: missing format marker 'shht'")
    if doc.get("version") != _VERSION:
        raise TableParseError(f"unsupported version {doc.get('version')!r}")
    if "n" not in doc:
        raise TableValidationError("missing chain size 'n'")
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise TableValidationError(f"chain size must be a positive integer, got {n!r}")
    table = doc.get("table")
    if not isinstance(table, list) or len(table) != n:
        found = len(table) if isinstance(table, list) else type(table).__name__
        raise TableValidationError(f"table must have {n} rows, found {found}")
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            found = len(row) if isinstance(row, list) else type(row).__name__
            raise TableValidationError(f"row {i} has {found} of {n} entries")
        for k, value in enumerate(row):
            if isinstance(value, bool) or not isinstance(value, int):
                raise TableValidationError(
                    f"cell ({i},{k}): {value!r} is not an integer"
                )
            _check_range(value, i, k, n)
    return as_table(table)
