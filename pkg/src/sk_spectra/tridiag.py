"""Generic tridiagonal matrices and the continuant determinant recurrence.

A matrix of order n+1 is stored as three bands: ``diag`` (length n+1),
``superdiag`` and ``subdiag`` (length n each).  Entries may live in any
commutative ring: floats, Fractions, or MultiPoly.  Determinants use the
three-term continuant recurrence

    d_k = diag_k * d_{k-1} - subdiag_{k-1} * superdiag_{k-1} * d_{k-2}

iteratively, so cost is O(n) ring multiplications and there is no
recursion depth limit.  ``det_cofactor`` provides an independent dense
oracle (Laplace expansion along the first column, skipping zeros).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import MultiPoly


@dataclass(frozen=True)
class Tridiagonal:
    diag: tuple
    superdiag: tuple
    subdiag: tuple

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(self.diag))
        object.__setattr__(self, "superdiag", tuple(self.superdiag))
        object.__setattr__(self, "subdiag", tuple(self.subdiag))
        if len(self.diag) < 1:
            raise ValueError("matrix order must be at least 1")
        if len(self.superdiag) != len(self.diag) - 1 or len(self.subdiag) != len(self.diag) - 1:
            raise ValueError("band lengths must be (n+1, n, n)")

    @property
    def order(self) -> int:
        return len(self.diag)

    @property
    def n(self) -> int:
        """Band length; the matrix is (n+1) x (n+1)."""
        return len(self.superdiag)

    def to_dense(self) -> list[list]:
        m = self.order
        rows = [[0] * m for _ in range(m)]
        for i in range(m):
            rows[i][i] = self.diag[i]
        for i in range(m - 1):
            rows[i][i + 1] = self.superdiag[i]
            rows[i + 1][i] = self.subdiag[i]
        return rows

    def with_band_entry(self, band: str, index: int, value) -> Tridiagonal:
        """Copy with one band entry replaced (used by corruption tests)."""
        bands = {"diag": list(self.diag),
                 "super": list(self.superdiag),
                 "sub": list(self.subdiag)}
        if band not in bands:
            raise ValueError(f"band must be one of {sorted(bands)}, got {band!r}")
        bands[band][index] = value
        return Tridiagonal(bands["diag"], bands["super"], bands["sub"])

    def det(self):
        """Determinant by the iterative continuant recurrence."""
        d_prev = 1
        d = self.diag[0]
        for k in range(1, self.order):
            d, d_prev = self.diag[k] * d - self.subdiag[k - 1] * self.superdiag[k - 1] * d_prev, d
        return d

    def charpoly(self) -> MultiPoly:
        """Monic characteristic polynomial det(lam*I - M) as a MultiPoly.

        Entries must be exact (MultiPoly, Fraction, or int); use
        :meth:`charpoly_float` for float matrices.
        """
        lam = MultiPoly.variable("lam")
        p_prev = MultiPoly.constant(1)
        p = lam - _lift(self.diag[0])
        for k in range(1, self.order):
            off = _lift(self.subdiag[k - 1]) * _lift(self.superdiag[k - 1])
            p, p_prev = (lam - _lift(self.diag[k])) * p - off * p_prev, p
        return p

    def charpoly_float(self) -> list[float]:
        """Coefficients of det(lam*I - M) in ascending degree, float arithmetic."""
        p_prev = [1.0]
        p = [-float(self.diag[0]), 1.0]
        for k in range(1, self.order):
            d = float(self.diag[k])
            off = float(self.subdiag[k - 1]) * float(self.superdiag[k - 1])
            new = [0.0] * (k + 2)
            for i, c in enumerate(p):
                new[i + 1] += c
                new[i] -= d * c
            for i, c in enumerate(p_prev):
                new[i] -= off * c
            p, p_prev = new, p
        return p


def _lift(entry) -> MultiPoly:
    if isinstance(entry, MultiPoly):
        return entry
    if isinstance(entry, (int, Fraction)):
        return MultiPoly.constant(entry)
    raise TypeError(f"entry {entry!r} cannot be embedded in the exact polynomial ring")


def det_cofactor(rows):
    """Dense determinant by Laplace expansion along the first column.

    Independent of the continuant path; exponential in the worst case but
    fast on banded matrices because zero entries are skipped.  Works over
    any ring whose elements compare against 0.
    """
    m = len(rows)
    if any(len(r) != m for r in rows):
        raise ValueError("matrix must be square")
    if m == 1:
        return rows[0][0]
    total = 0
    sign = 1
    for i in range(m):
        head = rows[i][0]
        if not (head == 0):
            minor = [row[1:] for j, row in enumerate(rows) if j != i]
            total = total + sign * head * det_cofactor(minor)
        sign = -sign
    return total
