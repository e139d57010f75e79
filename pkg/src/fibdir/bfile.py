"""Reader for OEIS b-files ("n value" per line, '#' comments)."""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError

__all__ = ["parse_bfile", "read_bfile"]


def parse_bfile(text: str) -> list[tuple[int, int]]:
    """Parse b-file text into ``(index, value)`` pairs.

    Blank lines and lines whose first non-blank character is '#' are skipped.
    Data lines must hold exactly two integers; indices must strictly increase.
    """
    rows: list[tuple[int, int]] = []
    last = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "#" in line:
            raise ParseError("comment marker inside a data line", lineno)
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'n value', got {len(parts)} fields", lineno)
        try:
            n, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", lineno) from None
        if last is not None and n <= last:
            raise ParseError(f"index {n} does not increase (previous {last})", lineno)
        rows.append((n, v))
        last = n
    return rows


def read_bfile(path) -> list[tuple[int, int]]:
    return parse_bfile(Path(path).read_text(encoding="utf-8"))
