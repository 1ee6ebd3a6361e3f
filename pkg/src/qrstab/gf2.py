"""Dense bit-packed GF(2) matrices and circulant constructors.

Rows are stored as little-endian uint64 words, so elimination works a word
at a time.  Matrices are immutable from the outside: every operation returns
a fresh instance and never mutates its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeMismatch

WORD = 64


def _n_words(cols: int) -> int:
    return (cols + WORD - 1) // WORD


def _pack(dense: np.ndarray) -> np.ndarray:
    """(m, n) 0/1 array -> (m, words) uint64, little-endian within rows."""
    m, n = dense.shape
    padded = np.zeros((m, _n_words(n) * WORD), dtype=np.uint8)
    padded[:, :n] = dense & 1
    packed = np.packbits(padded, axis=1, bitorder="little")
    return packed.view(np.uint64)


def _unpack(words: np.ndarray, cols: int) -> np.ndarray:
    bits = np.unpackbits(words.view(np.uint8), axis=1, bitorder="little")
    return bits[:, :cols].copy()


def _lowest_set_bit(words: np.ndarray) -> int | None:
    for wj, word in enumerate(map(int, words)):
        if word:
            return wj * WORD + (word & -word).bit_length() - 1
    return None


class Gf2Matrix:
    """Binary matrix with word-packed rows.

    Use the ``from_*`` constructors; the raw constructor takes a packed word
    array and trusts that padding bits beyond ``cols`` are zero.
    """

    __slots__ = ("rows", "cols", "_words")

    def __init__(self, rows: int, cols: int, words: np.ndarray):
        self.rows = rows
        self.cols = cols
        self._words = words

    # ---------------- constructors ----------------

    @classmethod
    def from_dense(cls, dense) -> "Gf2Matrix":
        dense = np.atleast_2d(np.asarray(dense, dtype=np.uint8))
        return cls(dense.shape[0], dense.shape[1], _pack(dense))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Gf2Matrix":
        return cls(rows, cols, np.zeros((rows, _n_words(cols)), dtype=np.uint64))

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @classmethod
    def ones(cls, rows: int, cols: int) -> "Gf2Matrix":
        return cls.from_dense(np.ones((rows, cols), dtype=np.uint8))

    # ---------------- accessors ----------------

    def to_dense(self) -> np.ndarray:
        return _unpack(self._words, self.cols)

    def words(self) -> np.ndarray:
        """Packed row words (copy; callers may scribble on it)."""
        return self._words.copy()

    def get(self, i: int, j: int) -> int:
        return int(self._words[i, j // WORD] >> np.uint64(j % WORD)) & 1

    def row_weights(self) -> np.ndarray:
        return np.bitwise_count(self._words).sum(axis=1).astype(np.int64)

    def column_weights(self) -> np.ndarray:
        return self.to_dense().sum(axis=0).astype(np.int64)

    def is_zero(self) -> bool:
        return not self._words.any()

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Gf2Matrix):
            return NotImplemented
        return (self.shape == other.shape) and bool(np.array_equal(self._words, other._words))

    def __hash__(self):  # pragma: no cover - not used as dict keys
        return hash((self.rows, self.cols, self._words.tobytes()))

    def __repr__(self) -> str:
        return f"Gf2Matrix({self.rows}x{self.cols})"

    # ---------------- algebra ----------------

    def __add__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        return Gf2Matrix(self.rows, self.cols, self._words ^ other._words)

    def __matmul__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        """Product over GF(2) via popcount of row/column word intersections."""
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        bt = other.transpose()._words
        out = np.empty((self.rows, other.cols), dtype=np.uint8)
        for i in range(self.rows):
            out[i] = np.bitwise_count(self._words[i] & bt).sum(axis=1) & 1
        return Gf2Matrix.from_dense(out)

    def transpose(self) -> "Gf2Matrix":
        return Gf2Matrix.from_dense(self.to_dense().T)

    def hstack(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.rows != other.rows:
            raise ShapeMismatch("row counts differ")
        return Gf2Matrix.from_dense(np.hstack([self.to_dense(), other.to_dense()]))

    def take_rows(self, indices) -> "Gf2Matrix":
        idx = np.asarray(indices, dtype=np.int64)
        return Gf2Matrix(len(idx), self.cols, self._words[idx].copy())

    def columns(self, lo: int, hi: int) -> "Gf2Matrix":
        return Gf2Matrix.from_dense(self.to_dense()[:, lo:hi])

    # ---------------- elimination ----------------

    def rank(self) -> int:
        return len(self.rref().pivot_cols)

    def rref(self) -> "RrefResult":
        """Reduced row echelon form over GF(2).

        ``independent_rows`` is the first-wins spanning subset: scanning top
        to bottom, a row is listed iff it is independent of all rows listed
        before it.
        """
        w = self._words.copy()
        m = self.rows
        r = 0
        pivot_cols: list[int] = []
        for c in range(self.cols):
            if r >= m:
                break
            wj, bj = divmod(c, WORD)
            colbits = (w[r:, wj] >> np.uint64(bj)) & np.uint64(1)
            nz = np.nonzero(colbits)[0]
            if nz.size == 0:
                continue
            pr = r + int(nz[0])
            if pr != r:
                w[[r, pr]] = w[[pr, r]]
            col_all = (w[:, wj] >> np.uint64(bj)) & np.uint64(1)
            elim = np.nonzero(col_all)[0]
            elim = elim[elim != r]
            if elim.size:
                w[elim] ^= w[r]
            pivot_cols.append(c)
            r += 1
        return RrefResult(Gf2Matrix(self.rows, self.cols, w),
                          tuple(pivot_cols), tuple(self.independent_row_subset()))

    def independent_row_subset(self) -> list[int]:
        """First-wins independent spanning rows, scanning top to bottom."""
        basis: list[tuple[int, np.ndarray]] = []  # (pivot col, reduced row)
        keep: list[int] = []
        for i in range(self.rows):
            v = self._words[i].copy()
            for pc, b in basis:
                wj, bj = divmod(pc, WORD)
                if (int(v[wj]) >> bj) & 1:
                    v ^= b
            pivot = _lowest_set_bit(v)
            if pivot is not None:
                basis.append((pivot, v))
                keep.append(i)
        return keep

    def in_row_space(self, row: "Gf2Matrix") -> bool:
        """True iff the single-row matrix lies in this matrix's row space."""
        if row.cols != self.cols:
            raise ShapeMismatch("column counts differ")
        stacked = Gf2Matrix(self.rows + 1, self.cols,
                            np.vstack([self._words, row._words]))
        return stacked.rank() == self.rank()


@dataclass(frozen=True)
class RrefResult:
    matrix: Gf2Matrix
    pivot_cols: tuple[int, ...]
    independent_rows: tuple[int, ...]


# ---------------- circulants ----------------


@dataclass(frozen=True)
class SupportPoly:
    """A binary polynomial modulo x**p - 1, stored as its exponent support."""

    modulus: int
    support: frozenset[int]

    def __post_init__(self):
        if not all(0 <= e < self.modulus for e in self.support):
            object.__setattr__(self, "support",
                               frozenset(e % self.modulus for e in self.support))

    @property
    def weight(self) -> int:
        return len(self.support)

    def __add__(self, other: "SupportPoly") -> "SupportPoly":
        return SupportPoly(self.modulus, self.support ^ other.support)

    def __mul__(self, other: "SupportPoly") -> "SupportPoly":
        """Product modulo x**p - 1, coefficients mod 2."""
        p = self.modulus
        counts: dict[int, int] = {}
        for a in self.support:
            for b in other.support:
                e = (a + b) % p
                counts[e] = counts.get(e, 0) ^ 1
        return SupportPoly(p, frozenset(e for e, c in counts.items() if c))

    def reciprocal(self) -> "SupportPoly":
        """Exponent negation; the circulant of the reciprocal is the transpose."""
        return SupportPoly(self.modulus, frozenset((-e) % self.modulus for e in self.support))


def support_poly(modulus: int, exponents) -> SupportPoly:
    return SupportPoly(modulus, frozenset(int(e) % modulus for e in exponents))


def cpm(p: int, d: int) -> Gf2Matrix:
    """Circulant permutation matrix: entry (i, (i + d) mod p) = 1."""
    d %= p
    dense = np.zeros((p, p), dtype=np.uint8)
    rows = np.arange(p)
    dense[rows, (rows + d) % p] = 1
    return Gf2Matrix.from_dense(dense)


def circulant(poly: SupportPoly) -> Gf2Matrix:
    """Mod-2 sum of cpm(p, e) over the support; each row is the previous
    row shifted right by one."""
    p = poly.modulus
    dense = np.zeros((p, p), dtype=np.uint8)
    rows = np.arange(p)
    for e in poly.support:
        dense[rows, (rows + e) % p] ^= 1
    return Gf2Matrix.from_dense(dense)


def integer_product_sum(h1: Gf2Matrix, h2: Gf2Matrix) -> np.ndarray:
    """H1 @ H2.T + H2 @ H1.T over the integers (not mod 2)."""
    a = h1.to_dense().astype(np.int64)
    b = h2.to_dense().astype(np.int64)
    return a @ b.T + b @ a.T
