"""Exact linear algebra and the degree-graded basis analysis.

``RationalMatrix`` does plain Gaussian elimination over Q with Fraction
entries; ``BitMatrix`` packs rows into Python ints for elimination over
GF(2). On top of these sit the basis family (grown from the empty forest
by grafting and by multiplying with the leaf), the change-of-basis matrix
to the y-ending word basis, and per-degree kernel computation.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .diamond import sigma_forest
from .hopf import HElem
from .trees import EMPTY_FOREST, Forest, LEAF, bplus, enumerate_forests, forest_product
from .words import Poly


class RationalMatrix:
    """A dense exact matrix over Q."""

    def __init__(self, entries: list[list[Fraction | int]]):
        if entries:
            width = len(entries[0])
            if any(len(row) != width for row in entries):
                raise ValueError("ragged rows")
        self.entries = [[Fraction(e) for e in row] for row in entries]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([list(col) for col in zip(*self.entries)] if self.entries else [])

    def rref(self) -> tuple["RationalMatrix", list[int]]:
        """Reduced row-echelon form and the pivot column indices."""
        m = [row[:] for row in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pivot_row = next((i for i in range(r, len(m)) if m[i][c]), None)
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            inv = 1 / m[r][c]
            m[r] = [e * inv for e in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c]:
                    factor = m[i][c]
                    m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
        return RationalMatrix(m), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def solve(self, rhs: list[Fraction | int]) -> list[Fraction]:
        """Solve A v = rhs; requires a unique solution."""
        if len(rhs) != self.rows:
            raise ValueError("right-hand side length mismatch")
        augmented = RationalMatrix(
            [row + [Fraction(b)] for row, b in zip(self.entries, rhs)]
        )
        red, pivots = augmented.rref()
        if self.cols in pivots:
            raise ValueError("inconsistent system")
        if len(pivots) != self.cols:
            raise ValueError("system is underdetermined")
        sol = [Fraction(0)] * self.cols
        for r, c in enumerate(pivots):
            sol[c] = red.entries[r][self.cols]
        return sol

    def nullspace(self) -> list[list[Fraction]]:
        """Basis of the right kernel, one vector per free column, in
        ascending free-column order; free entries normalized to 1."""
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [Fraction(0)] * self.cols
            v[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -red.entries[r][fc]
            basis.append(v)
        return basis

    def mod2(self) -> "BitMatrix":
        rows = []
        for row in self.entries:
            bits = 0
            for c, e in enumerate(row):
                if e.denominator != 1:
                    raise ValueError("entry is not an integer")
                if e.numerator % 2:
                    bits |= 1 << c
            rows.append(bits)
        return BitMatrix(rows, self.cols)


class BitMatrix:
    """A matrix over GF(2) with bit-packed rows."""

    def __init__(self, rows: list[int], cols: int):
        self.row_bits = list(rows)
        self.cols = cols

    @property
    def rows(self) -> int:
        return len(self.row_bits)

    def rank(self) -> int:
        rows = [r for r in self.row_bits if r]
        rank = 0
        for c in range(self.cols):
            mask = 1 << c
            pivot = next((i for i, r in enumerate(rows) if r & mask), None)
            if pivot is None:
                continue
            pivot_row = rows.pop(pivot)
            rows = [r ^ pivot_row if r & mask else r for r in rows]
            rank += 1
        return rank

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.cols


@lru_cache(maxsize=None)
def basis_forests(d: int) -> tuple[Forest, ...]:
    """The degree-d basis family, grown by grafting and leaf-multiplication."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    if d == 0:
        return (EMPTY_FOREST,)
    prev = basis_forests(d - 1)
    grown = {bplus(u).as_forest() for u in prev}
    grown |= {forest_product(LEAF.as_forest(), u) for u in prev}
    return tuple(sorted(grown, key=lambda f: f.encoding))


def words_ending_in_y(d: int) -> tuple[str, ...]:
    """All degree-d words ending in y, lexicographic with x < y."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    return tuple("".join(p) + "y" for p in product("xy", repeat=d - 1))


def _word_coeffs(p: Poly, basis: tuple[str, ...]) -> list[Fraction | int]:
    index = {w: i for i, w in enumerate(basis)}
    coeffs: list[Fraction | int] = [0] * len(basis)
    for w, c in p.terms.items():
        coeffs[index[w]] = c
    return coeffs


def basis_matrix(d: int) -> RationalMatrix:
    """Rows: polynomial values of the degree-d basis family, expressed over
    the y-ending word basis (lexicographic columns)."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    wbasis = words_ending_in_y(d)
    return RationalMatrix(
        [_word_coeffs(sigma_forest(u), wbasis) for u in basis_forests(d)]
    )


def check_mod2_invertible(d: int) -> bool:
    return basis_matrix(d).mod2().is_invertible()


def decompose(f: HElem, d: int) -> dict[Forest, Fraction]:
    """Coefficients expressing f's polynomial value over the degree-d basis
    family's values. Input must be d-homogeneous."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    deg = f.homogeneous_degree()
    if deg is None or (not f.is_zero() and deg != d):
        raise ValueError(f"input is not {d}-homogeneous")
    wbasis = words_ending_in_y(d)
    target = Poly.zero()
    for forest, c in f.terms.items():
        target = target + c * sigma_forest(forest)
    sol = basis_matrix(d).transpose().solve(_word_coeffs(target, wbasis))
    return dict(zip(basis_forests(d), sol))


def sigma_kernel(d: int) -> list[HElem]:
    """Basis of the degree-d relations: combinations of degree-d forests
    whose polynomial value vanishes. Deterministic reduced-echelon output,
    free columns in canonical forest order."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    forests = enumerate_forests(d)
    wbasis = words_ending_in_y(d)
    # columns indexed by forests, rows by word basis
    columns = [_word_coeffs(sigma_forest(f), wbasis) for f in forests]
    mat = RationalMatrix([list(row) for row in zip(*columns)])
    return [
        HElem({f: c for f, c in zip(forests, vec) if c})
        for vec in mat.nullspace()
    ]
