"""Command-line front end.

Exit codes: 0 success, 1 domain error (reported on stderr), 2 usage
error.  Nothing is written to stdout on failure.
"""

from __future__ import annotations

import argparse
import sys

from .dsl import evaluate, parse, parse_poly
from .folding import SCHEMES, fold
from .ordering import ORDERINGS, decode, encode
from .poly import PatternPoly, Window
from .render import Perspective, RenderConfig, render_ascii, render_pbm, render_svg
from .ring import QuotientRing
from .sequences import BitSeq, dseq, poly_reciprocal_seq

FORMATS = ("terms", "ascii", "pbm", "svg")


def _grid_arg(text: str) -> tuple[int, int]:
    try:
        m, n = (int(part) for part in text.lower().split("x"))
        if m < 0 or n < 0:
            raise ValueError
        return m, n
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected MxN with nonnegative integers, got {text!r}")


def _size_arg(text: str) -> tuple[int, int]:
    try:
        w, h = (int(part) for part in text.lower().split("x"))
        if w < 1 or h < 1:
            raise ValueError
        return w - 1, h - 1  # cell counts to inclusive max exponents
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected WxH with positive integers, got {text!r}")


def _mod_arg(text: str) -> tuple[int, int]:
    try:
        m, n = (int(part) for part in text.split(","))
        if m < 1 or n < 1:
            raise ValueError
        return m, n
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected M,N with positive integers, got {text!r}")


def _bits_arg(text: str) -> BitSeq:
    try:
        return BitSeq(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _add_window_args(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--grid", type=_grid_arg, metavar="MxN",
                       help="inclusive max exponents of the visible grid")
    group.add_argument("--size", type=_size_arg, dest="grid", metavar="WxH",
                       help="grid size in cells (W = m+1, H = n+1)")
    sub.add_argument("--mode", choices=("window", "wrap"), default="window",
                     help="series truncation (window) or torus arithmetic (wrap)")


def _add_expr_args(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--expr", help="pattern expression")
    group.add_argument("--stdin", action="store_true", help="read the expression from stdin")


def _add_render_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--origin", choices=("top-left", "bottom-left"), default="top-left")
    sub.add_argument("--glyph-on", default="#", metavar="CH")
    sub.add_argument("--glyph-off", default=".", metavar="CH")
    sub.add_argument("--cell", type=float, default=16.0, help="SVG base cell size")
    sub.add_argument("--rx", type=float, default=None, help="SVG column width decay ratio")
    sub.add_argument("--ry", type=float, default=None, help="SVG row height decay ratio")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyplane",
        description="two-dimensional binary patterns as GF(2) polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    expand = sub.add_parser("expand", help="evaluate a pattern expression on a grid")
    _add_expr_args(expand)
    _add_window_args(expand)
    expand.add_argument("--format", choices=FORMATS, default="terms")
    _add_render_args(expand)

    render = sub.add_parser("render", help="render a pattern expression")
    _add_expr_args(render)
    _add_window_args(render)
    render.add_argument("--format", choices=FORMATS, default="ascii")
    _add_render_args(render)

    order = sub.add_parser("order", help="order of a ring element")
    order.add_argument("--element", required=True, help="polynomial text, e.g. '1+x'")
    order.add_argument("--mod", required=True, type=_mod_arg, metavar="M,N")

    table = sub.add_parser("table", help="multiplication table of the monomial basis")
    table.add_argument("--mod", required=True, type=_mod_arg, metavar="M,N")

    invert = sub.add_parser("invert", help="ring inverse of an element")
    invert.add_argument("--element", required=True)
    invert.add_argument("--mod", required=True, type=_mod_arg, metavar="M,N")

    fold_cmd = sub.add_parser("map", help="fold a bit sequence into an array")
    fold_cmd.add_argument("--seq", required=True, type=_bits_arg)
    fold_cmd.add_argument("--rows", required=True, type=int)
    fold_cmd.add_argument("--cols", required=True, type=int)
    fold_cmd.add_argument("--scheme", required=True, choices=SCHEMES)

    dseq_cmd = sub.add_parser("dseq", help="prime reciprocal bit sequence")
    dseq_cmd.add_argument("--p", required=True, type=int, help="odd prime")
    dseq_cmd.add_argument("--count", required=True, type=int)

    lfsr = sub.add_parser("lfsr", help="shift-register sequence of 1/q(x)")
    lfsr.add_argument("--poly", required=True, help="univariate polynomial, e.g. '1+x+x^3'")
    lfsr.add_argument("--count", required=True, type=int)

    enc = sub.add_parser("encode", help="polynomial to bit string")
    enc.add_argument("--poly", required=True)
    enc.add_argument("--ordering", choices=ORDERINGS, default="diagonal")
    enc.add_argument("--length", type=int, default=None)

    dec = sub.add_parser("decode", help="bit string to polynomial")
    dec.add_argument("--bits", required=True, type=_bits_arg)
    dec.add_argument("--ordering", choices=ORDERINGS, default="diagonal")

    return parser


def _window(args: argparse.Namespace) -> Window:
    m, n = args.grid
    return Window(m, n, args.mode)


def _config(args: argparse.Namespace) -> RenderConfig:
    perspective = None
    if args.rx is not None or args.ry is not None:
        perspective = Perspective(
            args.rx if args.rx is not None else 1.0,
            args.ry if args.ry is not None else 1.0,
        )
    return RenderConfig(
        glyph_on=args.glyph_on,
        glyph_off=args.glyph_off,
        origin=args.origin.replace("-", "_"),
        cell=args.cell,
        perspective=perspective,
    )


def _run_expand(args: argparse.Namespace) -> str | bytes:
    window = _window(args)
    text = args.expr if args.expr is not None else sys.stdin.read()
    pattern = evaluate(parse(text), window)
    if args.format == "terms":
        return f"{pattern}\n"
    if args.format == "ascii":
        return render_ascii(pattern, window, _config(args)) + "\n"
    if args.format == "pbm":
        return render_pbm(pattern, window)
    return render_svg(pattern, window, _config(args))


def _run_order(args: argparse.Namespace) -> str:
    m, n = args.mod
    ring = QuotientRing(m, n)
    element = ring.reduce(parse_poly(args.element))
    return f"{ring.order(element)}\n"


def _run_table(args: argparse.Namespace) -> str:
    m, n = args.mod
    ring = QuotientRing(m, n)
    table = ring.mul_table()
    labels = [str(PatternPoly.monomial(i, j)) for i, j in ring.basis]
    grid = [["*", *labels]]
    for label, row in zip(labels, table):
        grid.append([label, *[str(cell) for cell in row]])
    widths = [max(len(grid[r][c]) for r in range(len(grid))) for c in range(len(grid[0]))]
    lines = [
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in grid
    ]
    return "\n".join(lines) + "\n"


def _run_invert(args: argparse.Namespace) -> str:
    m, n = args.mod
    ring = QuotientRing(m, n)
    inverse = ring.inverse(ring.reduce(parse_poly(args.element)))
    if inverse is None:
        raise ValueError(f"{args.element!r} is not invertible mod ({m},{n})")
    return f"{inverse}\n"


def _run_map(args: argparse.Namespace) -> str:
    return f"{fold(args.seq, args.rows, args.cols, args.scheme)}\n"


def _run_dseq(args: argparse.Namespace) -> str:
    return f"{dseq(args.p, args.count)}\n"


def _run_lfsr(args: argparse.Namespace) -> str:
    return f"{poly_reciprocal_seq(parse_poly(args.poly), args.count)}\n"


def _run_encode(args: argparse.Namespace) -> str:
    return f"{encode(parse_poly(args.poly), args.ordering, args.length)}\n"


def _run_decode(args: argparse.Namespace) -> str:
    return f"{decode(args.bits, args.ordering)}\n"


_HANDLERS = {
    "expand": _run_expand,
    "render": _run_expand,
    "order": _run_order,
    "table": _run_table,
    "invert": _run_invert,
    "map": _run_map,
    "dseq": _run_dseq,
    "lfsr": _run_lfsr,
    "encode": _run_encode,
    "decode": _run_decode,
}


def run(argv=None) -> int:
    """Parse argv and execute; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        output = _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if isinstance(output, bytes):
        sys.stdout.buffer.write(output)
        sys.stdout.buffer.flush()
    else:
        sys.stdout.write(output)
        sys.stdout.flush()
    return 0


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))
