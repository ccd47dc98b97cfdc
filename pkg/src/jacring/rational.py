"""Exact rational linear algebra: sparse matrices, row reduction, Vandermonde
solving and incremental subspace bookkeeping.

All coefficients are `fractions.Fraction`, so every result is exact; equality
tests throughout the package are structural, never tolerance-based.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegenerateBasisError, ShapeError

# Exact rational scalar.  Fraction already guarantees the canonical form we
# need: lowest terms, positive denominator, zero stored as 0/1.
Rat = Fraction


class RatMatrix:
    """Sparse matrix over the rationals: mapping (row, col) -> nonzero Fraction."""

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (r, c), v in entries.items():
                self[r, c] = v

    def __getitem__(self, rc):
        return self.entries.get(rc, Fraction(0))

    def __setitem__(self, rc, value):
        r, c = rc
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise ShapeError(f"index {rc} out of bounds for {self.rows}x{self.cols}")
        value = Fraction(value)
        if value == 0:
            self.entries.pop(rc, None)
        else:
            self.entries[rc] = value

    def __eq__(self, other):
        return (
            isinstance(other, RatMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"RatMatrix({self.rows}x{self.cols}, {len(self.entries)} entries)"

    @classmethod
    def from_rows(cls, data, cols=None):
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        m = cls(rows, cols)
        for r, row in enumerate(data):
            if len(row) != cols:
                raise ShapeError("ragged row data")
            for c, v in enumerate(row):
                m[r, c] = v
        return m

    def to_rows(self):
        return [[self[r, c] for c in range(self.cols)] for r in range(self.rows)]


def rref(m):
    """Reduced row-echelon form over Q.

    Returns (reduced matrix, rank, pivot column list).  Exact Gaussian
    elimination; the input matrix is not modified.
    """
    rows = m.to_rows()
    nrows, ncols = m.rows, m.cols
    pivots = []
    piv_r = 0
    for c in range(ncols):
        if piv_r >= nrows:
            break
        sel = None
        for r in range(piv_r, nrows):
            if rows[r][c] != 0:
                sel = r
                break
        if sel is None:
            continue
        rows[piv_r], rows[sel] = rows[sel], rows[piv_r]
        pv = rows[piv_r][c]
        rows[piv_r] = [x / pv for x in rows[piv_r]]
        for r in range(nrows):
            if r != piv_r and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[piv_r])]
        pivots.append(c)
        piv_r += 1
    return RatMatrix.from_rows(rows, ncols), piv_r, pivots


def solve_vandermonde(samples, exponents, values):
    """Solve values_j = sum_k samples_j**exponents_k * c_k for the components c_k.

    `values` is a list of coefficient vectors (one per sample); the result is
    one component vector per exponent.  Exact; raises DegenerateBasisError on
    repeated exponents (singular system).
    """
    if len(samples) != len(values):
        raise ShapeError("need one value vector per sample")
    if len(set(exponents)) != len(exponents):
        raise DegenerateBasisError(f"repeated exponents {exponents}")
    if len(samples) != len(exponents):
        raise ShapeError("need as many samples as exponents")
    if len(set(samples)) != len(samples) or any(n == 0 for n in samples):
        raise DegenerateBasisError("samples must be distinct and nonzero")
    k = len(exponents)
    if k == 0:
        return []
    width = len(values[0])
    if any(len(v) != width for v in values):
        raise ShapeError("value vectors must share one ambient dimension")
    # Augmented system [V | values], V_{jk} = samples_j ** exponents_k.
    aug = [
        [Fraction(samples[j]) ** e for e in exponents] + list(values[j])
        for j in range(k)
    ]
    reduced, rank, _ = rref(RatMatrix.from_rows(aug, k + width))
    if rank < k:
        raise DegenerateBasisError("singular Vandermonde system")
    rows = reduced.to_rows()
    return [rows[i][k:] for i in range(k)]


class Subspace:
    """Incrementally built subspace of Q^n, kept as an echelonized basis.

    Supports exact membership testing and exact dimension; vectors are
    sequences of Fractions of a fixed ambient dimension.
    """

    def __init__(self, dim):
        self.ambient_dim = dim
        self._rows = []  # echelon rows, leading coefficient 1
        self._pivots = []  # pivot column of each row, strictly increasing order not required

    @property
    def dim(self):
        return len(self._rows)

    def _reduce(self, vec):
        v = [Fraction(x) for x in vec]
        if len(v) != self.ambient_dim:
            raise ShapeError(
                f"vector of length {len(v)} in ambient dimension {self.ambient_dim}"
            )
        for row, p in zip(self._rows, self._pivots):
            if v[p] != 0:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def add(self, vec):
        """Extend the span by vec; returns True iff the dimension grew."""
        v = self._reduce(vec)
        for p in range(self.ambient_dim):
            if v[p] != 0:
                inv = v[p]
                self._rows.append([x / inv for x in v])
                self._pivots.append(p)
                return True
        return False

    def contains(self, vec):
        return all(x == 0 for x in self._reduce(vec))

    def basis(self):
        return [list(r) for r in self._rows]


def subspace_closure(vectors):
    """Span of a list of vectors: returns (echelon basis, dimension).

    All vectors must share one ambient dimension; the empty list gives the
    zero subspace of ambient dimension 0.
    """
    if not vectors:
        return [], 0
    space = Subspace(len(vectors[0]))
    for v in vectors:
        space.add(v)
    return space.basis(), space.dim
