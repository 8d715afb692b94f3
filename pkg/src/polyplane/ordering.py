"""Linear enumerations of grid monomials and the bit codec they induce.

Three orders over nonnegative exponent pairs, each a bijection with the
index line::

    diagonal        1, x, y, x^2, xy, y^2, x^3, x^2y, xy^2, y^3, x^4, ...
    boustrophedon   1, x, y, y^2, xy, x^2, x^3, x^2y, xy^2, y^3, y^4, ...
    meander         1, x, xy, y, y^2, xy^2, x^2y^2, x^2y, x^2, x^3, ...

diagonal and boustrophedon walk antidiagonals i+j = d, the former always
toward y, the latter alternating direction.  meander walks square shells
max(i, j) = s, serpentine: odd shells run (s,0) -> (s,s) -> (0,s), even
shells the reverse way around.

A polynomial encodes to the bit string whose k-th bit says whether the
k-th monomial is present; trailing zero bits are dropped unless an
explicit length is given.
"""

from __future__ import annotations

from math import isqrt

from .poly import Monomial, PatternPoly
from .sequences import BitSeq

ORDERINGS = ("diagonal", "boustrophedon", "meander")


def _check_ordering(ordering: str) -> None:
    if ordering not in ORDERINGS:
        raise ValueError(f"unknown ordering {ordering!r}; pick one of {', '.join(ORDERINGS)}")


def monomial_at(ordering: str, k: int) -> Monomial:
    """The k-th monomial (0-indexed) of the given enumeration order."""
    _check_ordering(ordering)
    if k < 0:
        raise ValueError("index must be nonnegative")
    if ordering == "meander":
        s = isqrt(k)
        r = k - s * s
        if s % 2 == 1:
            return (s, r) if r <= s else (2 * s - r, s)
        return (r, s) if r <= s else (s, 2 * s - r)
    d = (isqrt(8 * k + 1) - 1) // 2
    r = k - d * (d + 1) // 2
    if ordering == "diagonal" or d % 2 == 1:
        return (d - r, r)
    return (r, d - r)  # boustrophedon runs even antidiagonals from the y side


def index_of(ordering: str, mono: Monomial) -> int:
    """Position of a monomial in the enumeration; inverse of monomial_at."""
    _check_ordering(ordering)
    i, j = mono
    if i < 0 or j < 0:
        raise ValueError("negative exponents have no index")
    if ordering == "meander":
        s = max(i, j)
        base = s * s
        if s % 2 == 1:
            return base + j if i == s else base + s + (s - i)
        return base + i if j == s else base + s + (s - j)
    d = i + j
    base = d * (d + 1) // 2
    if ordering == "diagonal" or d % 2 == 1:
        return base + j
    return base + i


def encode(p: PatternPoly, ordering: str, length: int | None = None) -> BitSeq:
    """Bit string of a polynomial: bit k set iff the k-th monomial is present."""
    _check_ordering(ordering)
    for i, j in p.support:
        if i < 0 or j < 0:
            raise ValueError("polynomials with negative exponents cannot be encoded")
    indices = {index_of(ordering, mono) for mono in p.support}
    needed = max(indices) + 1 if indices else 0
    if length is None:
        length = needed
    elif length < needed:
        raise ValueError(f"length {length} too small: the support needs {needed} bits")
    return BitSeq(1 if k in indices else 0 for k in range(length))


def decode(bits, ordering: str) -> PatternPoly:
    """Polynomial whose support is the set bits of the string."""
    _check_ordering(ordering)
    if not isinstance(bits, BitSeq):
        bits = BitSeq(bits)
    return PatternPoly(monomial_at(ordering, k) for k, b in enumerate(bits) if b)
