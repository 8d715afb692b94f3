"""Windowed power-series expansion of rational pattern terms.

1/q is the unique formal series c with q*c = 1: its constant coefficient
is 1 and every other coefficient is the GF(2) sum of earlier coefficients
selected by the non-constant terms of q.  "Earlier" is the (y, then x)
grading, which is why a denominator is admissible only when it has a
constant term and every other term (a, b) satisfies b > 0, or b = 0 with
a > 0.  Laurent x-terms such as x^-1*y reach rightward into previous
rows, so rows are computed on a widened band; the band margins below
guarantee that every coefficient inside the window is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .poly import ONE, ZERO, PatternPoly, Window, term_text


def check_denominator(q: PatternPoly) -> None:
    """Raise ValueError unless 1/q exists as a one-sided formal series."""
    if (0, 0) not in q.support:
        raise ValueError("denominator has no constant term")
    for a, b in q.support:
        if (a, b) == (0, 0):
            continue
        if b < 0 or (b == 0 and a <= 0):
            raise ValueError(
                f"denominator term {term_text((a, b))} is not positive in the (y, x) grading"
            )


@dataclass(frozen=True)
class RationalTerm:
    """A fraction numerator/denominator of GF(2) polynomials.

    The numerator may use Laurent exponents; the denominator must be
    admissible (see :func:`check_denominator`), which is validated on
    construction.
    """

    numerator: PatternPoly
    denominator: PatternPoly

    def __post_init__(self) -> None:
        check_denominator(self.denominator)


def _expand(num: PatternPoly, den: PatternPoly, window: Window) -> PatternPoly:
    # Window-exact expansion of num * (1/den); den is assumed admissible.
    if not num:
        return ZERO
    xs = [i for i, _ in num.support]
    ys = [j for _, j in num.support]
    depth = window.n - min(ys)  # deepest series row any numerator shift can use
    if depth < 0:
        return ZERO

    row_taps = sorted(a for a, b in den.support if b == 0 and a > 0)
    lower_taps = [(a, b) for a, b in den.support if b > 0]
    reach = max((abs(a) for a, _ in lower_taps), default=0)

    # Needed series columns are the window columns shifted by the numerator;
    # each row step may consult `reach` extra columns on either side.
    lo = min(0, -max(xs)) - depth * reach
    hi = max(0, window.m - min(xs)) + depth * reach
    width = hi - lo + 1
    mask = (1 << width) - 1

    rows: list[int] = []
    for j in range(depth + 1):
        acc = (1 << -lo) if j == 0 else 0  # seed: coefficient 1 at (0, 0)
        for a, b in lower_taps:
            if b <= j:
                src = rows[j - b]
                acc ^= (src << a) if a >= 0 else (src >> -a)
        acc &= mask
        if row_taps:
            # resolve c[i] = acc[i] + sum over taps of c[i - a], left to right
            row = 0
            for t in range(width):
                bit = acc >> t & 1
                for a in row_taps:
                    if t >= a:
                        bit ^= row >> (t - a) & 1
                if bit:
                    row |= 1 << t
        else:
            row = acc
        rows.append(row)

    cells: set = set()
    for u, v in num.support:
        for j in range(max(v, 0), window.n + 1):
            src = rows[j - v]
            for i in range(window.m + 1):
                si = i - u
                if lo <= si <= hi and src >> (si - lo) & 1:
                    key = (i, j)
                    if key in cells:
                        cells.remove(key)
                    else:
                        cells.add(key)
    return PatternPoly(cells)


def reciprocal(q: PatternPoly, window: Window) -> PatternPoly:
    """Expansion of 1/q truncated to the window."""
    check_denominator(q)
    return _expand(ONE, q, window)


def eval_term(term: RationalTerm, window: Window) -> PatternPoly:
    """Expansion of numerator/denominator truncated to the window."""
    if window.mode != "window":
        raise ValueError("eval_term needs a window-mode Window; wrap-mode division is a ring operation")
    return _expand(term.numerator, term.denominator, window)


def eval_sum(terms: Iterable[RationalTerm], window: Window) -> PatternPoly:
    """GF(2) sum of the expansions of all terms."""
    acc = ZERO
    for term in terms:
        acc = acc + eval_term(term, window)
    return acc
