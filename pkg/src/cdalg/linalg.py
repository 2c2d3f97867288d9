"""Minimal dense real linear algebra for the structural probes.

Multiplication-operator matrices plus rank and nullspace queries at sizes
up to 2^n x 2^n.  Rank decisions follow a relative singular-value cutoff.
"""

from __future__ import annotations

import numpy as np

from .core import CdElement, basis, multiply
from .errors import NonFinite

DEFAULT_RANK_TOL = 1e-10


class DenseMatrix:
    """Dense real matrix with a read-only row-major payload."""

    __slots__ = ("data",)

    def __init__(self, data) -> None:
        arr = np.array(data, dtype=np.float64)
        if arr.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        if not np.all(np.isfinite(arr)):
            raise NonFinite("matrix entries must be finite")
        arr.flags.writeable = False
        self.data = arr

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def entries(self) -> np.ndarray:
        """Row-major flattened view of the entries."""
        return self.data.ravel()

    def __repr__(self):
        return f"DenseMatrix({self.rows}x{self.cols})"


def _as_array(m) -> np.ndarray:
    if isinstance(m, DenseMatrix):
        return m.data
    return np.asarray(m, dtype=np.float64)


def left_mul_matrix(a: CdElement) -> DenseMatrix:
    """Matrix of y -> a*y; column j holds the coefficients of a*e_j."""
    d = a.coeffs.size
    cols = [multiply(a, basis(a.level, j)).coeffs for j in range(d)]
    return DenseMatrix(np.column_stack(cols))


def right_mul_matrix(a: CdElement) -> DenseMatrix:
    """Matrix of y -> y*a; column j holds the coefficients of e_j*a."""
    d = a.coeffs.size
    cols = [multiply(basis(a.level, j), a).coeffs for j in range(d)]
    return DenseMatrix(np.column_stack(cols))


def _singular_rank(s: np.ndarray, tol: float) -> int:
    if s.size == 0 or s[0] <= 0.0:
        return 0
    return int(np.sum(s > tol * s[0]))


def nullspace(m, tol: float = DEFAULT_RANK_TOL) -> list[np.ndarray]:
    """Orthonormal basis of the right nullspace.

    Singular vectors whose singular value falls below tol times the
    largest singular value count as null; returns [] at full column rank.
    """
    a = _as_array(m)
    _, s, vt = np.linalg.svd(a)
    r = _singular_rank(s, tol)
    return [vt[i].copy() for i in range(r, a.shape[1])]


def rank(m, tol: float = DEFAULT_RANK_TOL) -> int:
    """Numerical rank, cols minus nullspace dimension."""
    a = _as_array(m)
    s = np.linalg.svd(a, compute_uv=False)
    return _singular_rank(s, tol)
