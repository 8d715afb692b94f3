import random
import re
import xml.etree.ElementTree as ET

import pytest

from polyplane.dsl import evaluate, parse
from polyplane.poly import ZERO, PatternPoly, Window
from polyplane.render import Perspective, RenderConfig, render_ascii, render_pbm, render_svg

CROSS = PatternPoly([(2, 0), (2, 1), (2, 2), (2, 3), (1, 2), (3, 2)])


def read_pbm(data: bytes) -> list[list[int]]:
    """Minimal plain-PBM reader, used only to round-trip the writer."""
    tokens = data.decode("ascii").split()
    assert tokens[0] == "P1"
    width, height = int(tokens[1]), int(tokens[2])
    bits = [int(t) for t in tokens[3:]]
    assert len(bits) == width * height
    return [bits[r * width : (r + 1) * width] for r in range(height)]


def test_ascii_tiny_grid():
    got = render_ascii(PatternPoly([(0, 0), (1, 1)]), Window(2, 1))
    assert got == "#..\n.#."


def test_ascii_cross_golden():
    assert render_ascii(CROSS, Window(4, 3)) == "..#..\n..#..\n.###.\n..#.."


def test_ascii_empty_pattern():
    assert render_ascii(ZERO, Window(2, 2)) == "...\n...\n..."


def test_ascii_shape_and_population():
    rng = random.Random(53)
    for _ in range(25):
        w = Window(rng.randrange(1, 7), rng.randrange(1, 7))
        p = PatternPoly(
            (rng.randrange(w.m + 1), rng.randrange(w.n + 1)) for _ in range(rng.randrange(9))
        )
        text = render_ascii(p, w)
        lines = text.split("\n")
        assert len(lines) == w.n + 1
        assert all(len(line) == w.m + 1 for line in lines)
        assert text.count("#") == len(p)


def test_ascii_bottom_left_is_vertical_mirror():
    cfg = RenderConfig(origin="bottom_left")
    rng = random.Random(59)
    for _ in range(10):
        w = Window(rng.randrange(1, 6), rng.randrange(1, 6))
        p = PatternPoly(
            (rng.randrange(w.m + 1), rng.randrange(w.n + 1)) for _ in range(6)
        )
        top = render_ascii(p, w).split("\n")
        bottom = render_ascii(p, w, cfg).split("\n")
        assert bottom == top[::-1]


def test_ascii_custom_glyphs():
    cfg = RenderConfig(glyph_on="@", glyph_off=" ")
    assert render_ascii(PatternPoly([(0, 0)]), Window(1, 0), cfg) == "@ "


def test_pbm_single_point_golden():
    assert render_pbm(PatternPoly([(0, 0)]), Window(1, 1)) == b"P1\n2 2\n1 0\n0 0\n"


def test_pbm_empty_golden():
    assert render_pbm(ZERO, Window(0, 0)) == b"P1\n1 1\n0\n"


def test_pbm_checkerboard_has_ten_ones():
    board = evaluate(parse("1/(1+xy) + x^2/(1+xy) + y^2/(1+xy) + x^4/(1+xy)"), Window(4, 3))
    data = render_pbm(board, Window(4, 3))
    body = data.split(b"\n", 2)[2]  # skip the magic and dimensions lines
    assert body.count(b"1") == 10


def test_pbm_round_trip():
    rng = random.Random(61)
    for _ in range(20):
        w = Window(rng.randrange(0, 6), rng.randrange(0, 6))
        p = PatternPoly(
            (rng.randrange(w.m + 1), rng.randrange(w.n + 1)) for _ in range(rng.randrange(8))
        )
        rows = read_pbm(render_pbm(p, w))
        recovered = PatternPoly(
            (i, j) for j, row in enumerate(rows) for i, b in enumerate(row) if b
        )
        assert recovered == p


def test_svg_single_rect():
    text = render_svg(PatternPoly([(0, 0)]), Window(0, 0))
    assert text.count("<rect") == 1
    ET.fromstring(text)  # well-formed


def test_svg_rect_count_matches_support():
    board = evaluate(parse("1/(1+xy) + x^2/(1+xy) + y^2/(1+xy) + x^4/(1+xy)"), Window(4, 3))
    text = render_svg(board, Window(4, 3))
    assert text.count("<rect") == 10


def test_svg_geometric_column_widths():
    w = Window(4, 3)
    full = PatternPoly((i, j) for i in range(5) for j in range(4))
    cfg = RenderConfig(cell=10.0, perspective=Perspective(rx=0.8, ry=1.0))
    text = render_svg(full, w, cfg)
    assert text.count("<rect") == 20
    rects = [
        (float(m.group(1)), float(m.group(2)), float(m.group(3)), float(m.group(4)))
        for m in re.finditer(r'<rect x="([^"]+)" y="([^"]+)" width="([^"]+)" height="([^"]+)"', text)
    ]
    row0 = sorted((x, width) for x, y, width, _ in rects if y == 0.0)
    expected_x = 0.0
    for k, (x, width) in enumerate(row0):
        assert x == pytest.approx(expected_x, abs=1e-9)
        assert width == pytest.approx(10.0 * 0.8**k, abs=1e-9)
        expected_x += width
    heights = {h for _, _, _, h in rects}
    assert heights == {10.0}  # ry = 1.0 keeps rows uniform


def test_svg_uniform_dimensions():
    text = render_svg(ZERO, Window(3, 1), RenderConfig(cell=8.0))
    root = ET.fromstring(text)
    assert root.get("width") == "32"
    assert root.get("height") == "16"
    assert text.count("<rect") == 0


def test_config_validation():
    with pytest.raises(ValueError):
        RenderConfig(glyph_on="##")
    with pytest.raises(ValueError):
        RenderConfig(glyph_on=".", glyph_off=".")
    with pytest.raises(ValueError):
        RenderConfig(origin="center")
    with pytest.raises(ValueError):
        RenderConfig(cell=0)
    with pytest.raises(ValueError):
        Perspective(rx=0.0)
    with pytest.raises(ValueError):
        Perspective(ry=1.5)
