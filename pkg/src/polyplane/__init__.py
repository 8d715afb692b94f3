"""polyplane: two-dimensional binary patterns as GF(2) polynomials."""

from .dsl import ParseError, PatternExpr, Term, evaluate, parse, parse_poly, tokenize
from .folding import SCHEMES, BitGrid, fold, unfold
from .ordering import ORDERINGS, decode, encode, index_of, monomial_at
from .poly import ONE, X, Y, ZERO, PatternPoly, Window
from .render import Perspective, RenderConfig, render_ascii, render_pbm, render_svg
from .ring import QuotientRing
from .sequences import BitSeq, dseq, period, poly_reciprocal_seq
from .series import RationalTerm, check_denominator, eval_sum, eval_term, reciprocal

__version__ = "0.1.0"

__all__ = [
    "BitGrid",
    "BitSeq",
    "ONE",
    "ORDERINGS",
    "ParseError",
    "PatternExpr",
    "PatternPoly",
    "Perspective",
    "QuotientRing",
    "RationalTerm",
    "RenderConfig",
    "SCHEMES",
    "Term",
    "Window",
    "X",
    "Y",
    "ZERO",
    "check_denominator",
    "decode",
    "dseq",
    "encode",
    "eval_sum",
    "eval_term",
    "evaluate",
    "fold",
    "index_of",
    "monomial_at",
    "parse",
    "parse_poly",
    "period",
    "poly_reciprocal_seq",
    "reciprocal",
    "render_ascii",
    "render_pbm",
    "render_svg",
    "tokenize",
    "unfold",
]
