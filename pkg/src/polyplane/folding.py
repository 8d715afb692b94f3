"""Folding bit sequences into rectangular arrays and back.

The diagonal scheme places 1-indexed term k at row (k-1) mod rows,
column (k-1) mod cols; by the Chinese remainder theorem this covers every
cell exactly once iff rows and cols are coprime.  row_major fills left to
right, top to bottom; col_major top to bottom, left to right.
"""

from __future__ import annotations

import math
from typing import Iterable

from .sequences import BitSeq

SCHEMES = ("diagonal", "row_major", "col_major")


class BitGrid:
    """An immutable rows x cols array of bits."""

    __slots__ = ("cells",)

    def __init__(self, rows: Iterable[Iterable]):
        cells = tuple(tuple(int(b) for b in row) for row in rows)
        if not cells or not cells[0]:
            raise ValueError("grid must have at least one row and one column")
        if any(len(row) != len(cells[0]) for row in cells):
            raise ValueError("grid rows must all have the same length")
        if any(b not in (0, 1) for row in cells for b in row):
            raise ValueError("cells must be 0 or 1")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_lines(cls, text: str) -> "BitGrid":
        return cls(line for line in text.splitlines() if line)

    def __setattr__(self, name, value):
        raise AttributeError("BitGrid is immutable")

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0])

    def __getitem__(self, r):
        return self.cells[r]

    def __eq__(self, other):
        if not isinstance(other, BitGrid):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __str__(self) -> str:
        return "\n".join("".join(str(b) for b in row) for row in self.cells)

    def __repr__(self) -> str:
        return f"BitGrid({[''.join(str(b) for b in row) for row in self.cells]})"


def _positions(rows: int, cols: int, scheme: str) -> list[tuple[int, int]]:
    if scheme == "diagonal":
        if math.gcd(rows, cols) != 1:
            raise ValueError(
                f"rows and cols must be coprime for the diagonal scheme (gcd={math.gcd(rows, cols)})"
            )
        return [(t % rows, t % cols) for t in range(rows * cols)]
    if scheme == "row_major":
        return [(t // cols, t % cols) for t in range(rows * cols)]
    if scheme == "col_major":
        return [(t % rows, t // rows) for t in range(rows * cols)]
    raise ValueError(f"unknown scheme {scheme!r}")


def fold(s, rows: int, cols: int, scheme: str) -> BitGrid:
    """Arrange a sequence of rows*cols bits into a grid."""
    if not isinstance(s, BitSeq):
        s = BitSeq(s)
    if rows < 1 or cols < 1:
        raise ValueError("rows and cols must be positive")
    positions = _positions(rows, cols, scheme)  # validates scheme and coprimality first
    if len(s) != rows * cols:
        raise ValueError(f"sequence length {len(s)} != rows*cols = {rows * cols}")
    cells = [[0] * cols for _ in range(rows)]
    for t, (r, c) in enumerate(positions):
        cells[r][c] = s[t]
    return BitGrid(cells)


def unfold(g: BitGrid, scheme: str) -> BitSeq:
    """Read a grid back into the sequence that fold() would have consumed."""
    return BitSeq(g.cells[r][c] for r, c in _positions(g.rows, g.cols, scheme))
