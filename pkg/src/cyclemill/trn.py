"""TRN text format: a decimal vertex count followed by n rows of '0'/'1' characters."""

from __future__ import annotations

from .core import MAX_VERTICES, Tournament


class TrnParseError(ValueError):
    """Input is not a well-formed TRN document."""


def dumps(t: Tournament) -> str:
    lines = [str(t.n)]
    for i in range(t.n):
        row = t.rows[i]
        lines.append("".join("1" if row >> j & 1 else "0" for j in range(t.n)))
    return "\n".join(lines) + "\n"


def loads(text: str) -> Tournament:
    """Parse a TRN document. Strict: any byte outside the format is an error."""
    body = text[:-1] if text.endswith("\n") else text
    lines = body.split("\n")
    header = lines[0]
    if not header or not header.isascii() or not header.isdigit():
        raise TrnParseError(f"bad vertex count line: {header!r}")
    n = int(header)
    if not 1 <= n <= MAX_VERTICES:
        raise TrnParseError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    if len(lines) != n + 1:
        raise TrnParseError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for i, line in enumerate(lines[1:]):
        if len(line) != n or any(ch not in "01" for ch in line):
            raise TrnParseError(f"row {i} is not {n} characters of 0/1: {line!r}")
        if line[i] != "0":
            raise TrnParseError(f"row {i} has a nonzero diagonal entry")
        rows.append(int(line[::-1], 2) if line.strip("0") else 0)
    for i in range(n):
        for j in range(i + 1, n):
            a = rows[i] >> j & 1
            b = rows[j] >> i & 1
            if a == b:
                which = "both" if a else "neither"
                raise TrnParseError(f"{which} of the arcs between {i} and {j} present")
    return Tournament(rows)
