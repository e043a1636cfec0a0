"""Plain-text square matrices of exact rationals.

Line one holds the dimension n; each of the next n lines holds n
whitespace-separated entries in ``p/q`` or ``p`` form.  Blank lines are
skipped.  Parse errors report 1-based line numbers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .algebra import format_scalar, parse_scalar


def parse_matrix(text: str) -> List[List[Fraction]]:
    """Parse the matrix format; raises ValueError with a line number."""
    numbered = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip()
    ]
    if not numbered:
        raise ValueError("empty input: expected a dimension line")
    header_number, header = numbered[0]
    try:
        n = int(header)
    except ValueError:
        raise ValueError(f"line {header_number}: expected the dimension, got {header!r}") from None
    if n < 0:
        raise ValueError(f"line {header_number}: dimension must be non-negative, got {n}")
    body = numbered[1:]
    if len(body) < n:
        raise ValueError(f"expected {n} matrix rows, found {len(body)}")
    if len(body) > n:
        number, _ = body[n]
        raise ValueError(f"line {number}: unexpected content after {n} matrix rows")
    matrix = []
    for row_index, (number, line) in enumerate(body):
        tokens = line.split()
        if len(tokens) != n:
            raise ValueError(f"line {number}: expected {n} entries, got {len(tokens)}")
        try:
            matrix.append([parse_scalar(token) for token in tokens])
        except ValueError as exc:
            raise ValueError(f"line {number}: {exc}") from None
    return matrix


def format_matrix(matrix: Sequence[Sequence]) -> str:
    """Render a matrix in the same format parse_matrix reads."""
    lines = [str(len(matrix))]
    for row in matrix:
        lines.append(" ".join(format_scalar(Fraction(e)) for e in row))
    return "\n".join(lines) + "\n"


def read_matrix(path) -> List[List[Fraction]]:
    """Parse a matrix file; errors carry the file name."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        return parse_matrix(text)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None
