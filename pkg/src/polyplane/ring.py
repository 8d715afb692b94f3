"""Arithmetic in the finite ring GF(2)[x, y] / (x^m - 1, y^n - 1).

Exponents wrap around an m x n torus, so every polynomial reduces to a
residue supported on 0 <= i < m, 0 <= j < n.  The ring has 2^(m*n)
elements.  Monomials form a multiplicative group isomorphic to
Z_m x Z_n; general elements may be units or zero divisors, and both
kinds get a well-defined notion of order (see :meth:`QuotientRing.order`).

Invertibility is decided by Gaussian elimination over GF(2) on the
multiplication-by-a matrix; its null space supplies zero-divisor
witnesses (:meth:`QuotientRing.annihilator`).
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterator

from .poly import ONE, PatternPoly, diag_key

MAX_TABLE_CELLS = 64  # m*n bound for mul_table
MAX_ENUM_BITS = 24  # m*n bound for enumerate_nonzero


class QuotientRing:
    """The ring of bivariate GF(2) polynomials with x^m = 1 and y^n = 1."""

    def __init__(self, m: int, n: int):
        if m < 1 or n < 1:
            raise ValueError("moduli must be positive")
        self.m = m
        self.n = n

    def __repr__(self) -> str:
        return f"QuotientRing({self.m}, {self.n})"

    def __eq__(self, other):
        if not isinstance(other, QuotientRing):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n)

    def __hash__(self):
        return hash((QuotientRing, self.m, self.n))

    @property
    def size(self) -> int:
        """Number of ring elements, 2^(m*n)."""
        return 1 << (self.m * self.n)

    @cached_property
    def basis(self) -> tuple:
        """Residue monomials (i, j) in antidiagonal order; (0, 0) first."""
        box = [(i, j) for i in range(self.m) for j in range(self.n)]
        return tuple(sorted(box, key=diag_key))

    # -- element arithmetic ------------------------------------------------

    def reduce(self, p: PatternPoly) -> PatternPoly:
        """Canonical residue: exponents mod (m, n), colliding terms cancel."""
        acc: set = set()
        for i, j in p.support:
            key = (i % self.m, j % self.n)
            if key in acc:
                acc.remove(key)
            else:
                acc.add(key)
        return PatternPoly._raw(frozenset(acc))

    def mul(self, a: PatternPoly, b: PatternPoly) -> PatternPoly:
        """Product in the ring."""
        return self.reduce(a * b)

    def mul_table(self) -> list[list[PatternPoly]]:
        """Full multiplication table over the monomial basis.

        Guarded to m*n <= 64; row g, column h holds g*h in basis order.
        """
        if self.m * self.n > MAX_TABLE_CELLS:
            raise ValueError(f"table too large: m*n must be at most {MAX_TABLE_CELLS}")
        gens = [PatternPoly.monomial(i, j) for i, j in self.basis]
        return [[self.mul(g, h) for h in gens] for g in gens]

    def order(self, a: PatternPoly) -> int:
        """Order of a nonzero element.

        Units get the least k >= 1 with a^k = 1.  Zero divisors get the
        least k >= 2 with a^k = a, the index at which the power sequence
        first returns to a.  Raises ValueError for 0 and for elements
        whose powers never return to a (possible when m or n is even,
        where nilpotents exist).
        """
        a = self.reduce(a)
        if not a:
            raise ValueError("the zero element has no order")
        if self.is_invertible(a):
            power = a
            k = 1
            while power != ONE:
                power = self.mul(power, a)
                k += 1
            return k
        seen = {a}
        power = self.mul(a, a)
        k = 2
        while power != a:
            if power in seen:
                raise ValueError(f"powers of {a} never return to it (nilpotent part)")
            seen.add(power)
            power = self.mul(power, a)
            k += 1
        return k

    # -- linear algebra over GF(2) ------------------------------------------

    def _mul_matrix(self, a: PatternPoly) -> list[int]:
        # rows[r] bit c == coefficient of basis[r] in a * basis[c]
        index = {mono: t for t, mono in enumerate(self.basis)}
        rows = [0] * len(self.basis)
        for col, (bi, bj) in enumerate(self.basis):
            for mono in self.reduce(a.shift(bi, bj)).support:
                rows[index[mono]] |= 1 << col
        return rows

    def _gauss(self, a: PatternPoly) -> tuple[list[int], list[int], int]:
        # Gauss-Jordan on the multiplication matrix augmented (bit N) with
        # the coordinates of 1; returns (reduced rows, pivot columns, N).
        n_cols = len(self.basis)
        rows = self._mul_matrix(a)
        rows[0] |= 1 << n_cols  # basis[0] is (0, 0), the coordinate vector of 1
        pivots: list[int] = []
        rank = 0
        for col in range(n_cols):
            hit = next((r for r in range(rank, n_cols) if rows[r] >> col & 1), None)
            if hit is None:
                continue
            rows[rank], rows[hit] = rows[hit], rows[rank]
            for r in range(n_cols):
                if r != rank and rows[r] >> col & 1:
                    rows[r] ^= rows[rank]
            pivots.append(col)
            rank += 1
        return rows, pivots, n_cols

    def inverse(self, a: PatternPoly) -> PatternPoly | None:
        """Multiplicative inverse, or None when a is not a unit."""
        a = self.reduce(a)
        rows, pivots, n_cols = self._gauss(a)
        if len(pivots) < n_cols:
            return None  # singular: a*b = 1 has no solution
        support = frozenset(
            self.basis[col] for row, col in enumerate(pivots) if rows[row] >> n_cols & 1
        )
        return PatternPoly._raw(support)

    def is_invertible(self, a: PatternPoly) -> bool:
        """True iff multiplication by a permutes the ring."""
        return self.inverse(a) is not None

    def annihilator(self, a: PatternPoly) -> PatternPoly | None:
        """A nonzero b with a*b = 0, or None when a is a unit.

        Taken from the null space of the multiplication matrix, so it
        exists for every zero divisor (and for 0 itself).
        """
        a = self.reduce(a)
        rows, pivots, n_cols = self._gauss(a)
        if len(pivots) == n_cols:
            return None
        free = next(c for c in range(n_cols) if c not in pivots)
        coords = {free}
        for row, col in enumerate(pivots):
            if rows[row] >> free & 1:
                coords.add(col)
        return PatternPoly._raw(frozenset(self.basis[c] for c in coords))

    # -- enumeration ---------------------------------------------------------

    def enumerate_nonzero(self) -> Iterator[PatternPoly]:
        """All 2^(m*n) - 1 nonzero elements, in ascending bit-pattern order
        over the antidiagonal monomial basis.  Guarded to m*n <= 24."""
        if self.m * self.n > MAX_ENUM_BITS:
            raise ValueError(f"enumeration too large: m*n must be at most {MAX_ENUM_BITS}")
        basis = self.basis

        def generate() -> Iterator[PatternPoly]:
            for code in range(1, 1 << len(basis)):
                support = frozenset(
                    basis[t] for t in range(len(basis)) if code >> t & 1
                )
                yield PatternPoly._raw(support)

        return generate()
