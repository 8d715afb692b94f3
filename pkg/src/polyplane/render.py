"""Deterministic pattern renderers: character grids, PBM bitmaps, SVG.

Column index is always the x exponent, increasing rightward.  With
origin top_left the first output row is y = 0; bottom_left mirrors the
rows.  PBM output is the plain-text P1 format, byte for byte.  SVG
output is a flat list of rect elements, one per lit cell; a perspective
config shrinks cell widths and heights geometrically along the axes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import PatternPoly, Window


@dataclass(frozen=True)
class Perspective:
    """Per-axis geometric decay of cell size: column k is rx^k wide."""

    rx: float = 1.0
    ry: float = 1.0

    def __post_init__(self) -> None:
        if not (0 < self.rx <= 1 and 0 < self.ry <= 1):
            raise ValueError("decay ratios must lie in (0, 1]")


@dataclass(frozen=True)
class RenderConfig:
    glyph_on: str = "#"
    glyph_off: str = "."
    origin: str = "top_left"  # or "bottom_left"
    cell: float = 16.0  # base cell size in SVG user units
    perspective: Perspective | None = None

    def __post_init__(self) -> None:
        if len(self.glyph_on) != 1 or len(self.glyph_off) != 1:
            raise ValueError("glyphs must be single characters")
        if self.glyph_on == self.glyph_off:
            raise ValueError("on and off glyphs must differ")
        if self.origin not in ("top_left", "bottom_left"):
            raise ValueError(f"unknown origin {self.origin!r}")
        if self.cell <= 0:
            raise ValueError("cell size must be positive")


DEFAULT_CONFIG = RenderConfig()


def _row_order(window: Window, config: RenderConfig) -> range:
    if config.origin == "top_left":
        return range(window.n + 1)
    return range(window.n, -1, -1)


def render_ascii(p: PatternPoly, window: Window, config: RenderConfig = DEFAULT_CONFIG) -> str:
    """Character-grid rendering, one line per row."""
    lines = []
    for j in _row_order(window, config):
        lines.append(
            "".join(
                config.glyph_on if (i, j) in p.support else config.glyph_off
                for i in range(window.m + 1)
            )
        )
    return "\n".join(lines)


def render_pbm(p: PatternPoly, window: Window) -> bytes:
    """Plain PBM (P1) bytes; 1 marks a pattern point, row 0 is y = 0."""
    lines = ["P1", f"{window.width} {window.height}"]
    for j in range(window.n + 1):
        lines.append(" ".join("1" if (i, j) in p.support else "0" for i in range(window.m + 1)))
    return ("\n".join(lines) + "\n").encode("ascii")


def _fmt(value: float) -> str:
    return format(value, "g")


def render_svg(p: PatternPoly, window: Window, config: RenderConfig = DEFAULT_CONFIG) -> str:
    """SVG rendering: exactly one rect per lit cell.

    Cell sizes follow the display position: column k is cell*rx^k wide
    and display row l is cell*ry^l tall, positions cumulative, so a
    ratio below 1 makes pixels shrink rightward/downward.
    """
    persp = config.perspective or Perspective()
    widths = [config.cell * persp.rx**k for k in range(window.m + 1)]
    heights = [config.cell * persp.ry**l for l in range(window.n + 1)]
    total_w = sum(widths)
    total_h = sum(heights)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(total_w)}" height="{_fmt(total_h)}" '
        f'viewBox="0 0 {_fmt(total_w)} {_fmt(total_h)}">',
    ]
    y = 0.0
    for l, j in enumerate(_row_order(window, config)):
        x = 0.0
        for k in range(window.m + 1):
            if (k, j) in p.support:
                lines.append(
                    f'<rect x="{_fmt(x)}" y="{_fmt(y)}" '
                    f'width="{_fmt(widths[k])}" height="{_fmt(heights[l])}" fill="#000"/>'
                )
            x += widths[k]
        y += heights[l]
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
