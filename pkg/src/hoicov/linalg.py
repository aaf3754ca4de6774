"""Hermitian positive-definite matrix primitives.

Every matrix is stored as complex128 regardless of field kind; a REAL-kind
matrix keeps exact-zero imaginary parts, and the kind flag tells the measure
layer to apply the real-data 1/2 factor. Positive definiteness is not a type
invariant: it is established at factorization time.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    IndexOverlap,
    KindMismatch,
    NonPositiveDiagonal,
    NotHermitian,
    NotPositiveDefinite,
    PartitionMismatch,
)
from .partition import Partition

# Accepted relative asymmetry before a matrix is rejected as non-Hermitian
# (periodogram averaging introduces rounding-level asymmetry).
SYMMETRY_RTOL = 1e-8
# Cholesky pivot must exceed this fraction of the mean diagonal.
PD_PIVOT_RTOL = 1e-12


class FieldKind(enum.Enum):
    REAL = "real"
    COMPLEX = "complex"


def kind_factor(kind: FieldKind) -> float:
    """Global factor carried by every measure: 1/2 for real data, 1 for complex."""
    return 0.5 if kind is FieldKind.REAL else 1.0


@dataclass(frozen=True)
class HermitianMatrix:
    """p x p Hermitian (or real symmetric) matrix with a field-kind flag."""

    values: np.ndarray
    kind: FieldKind

    def __post_init__(self):
        v = np.array(self.values, dtype=np.complex128)
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise DimensionMismatch(f"expected a square matrix, got shape {v.shape}")
        scale = float(np.max(np.abs(v))) if v.size else 0.0
        asym = float(np.max(np.abs(v - v.conj().T))) if v.size else 0.0
        threshold = SYMMETRY_RTOL * scale
        if asym > threshold:
            raise NotHermitian(asym, threshold)
        v = (v + v.conj().T) / 2.0
        if self.kind is FieldKind.REAL:
            imag = float(np.max(np.abs(v.imag))) if v.size else 0.0
            if imag > threshold:
                raise KindMismatch(
                    f"kind=real but imaginary magnitude up to {imag:.3e}"
                )
            v = v.real.astype(np.complex128)
        d = v.diagonal().real
        for i, di in enumerate(d):
            if not di > 0.0:
                raise NonPositiveDiagonal(i, float(di))
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def p(self) -> int:
        return self.values.shape[0]

    @classmethod
    def identity(cls, p: int, kind: FieldKind = FieldKind.REAL) -> "HermitianMatrix":
        return cls(np.eye(p, dtype=np.complex128), kind)

    @classmethod
    def from_real(cls, values) -> "HermitianMatrix":
        return cls(np.asarray(values, dtype=float), FieldKind.REAL)

    @classmethod
    def from_complex(cls, values) -> "HermitianMatrix":
        return cls(np.asarray(values, dtype=np.complex128), FieldKind.COMPLEX)


@dataclass(frozen=True)
class CholeskyFactor:
    """Lower-triangular factor L with L L* equal to the source matrix."""

    matrix: np.ndarray
    kind: FieldKind

    @property
    def p(self) -> int:
        return self.matrix.shape[0]

    @property
    def log_det(self) -> float:
        """Log-determinant of the source matrix, 2 * sum(ln L_ii)."""
        return float(2.0 * np.sum(np.log(self.matrix.diagonal().real)))

    def reconstruct(self) -> HermitianMatrix:
        return HermitianMatrix(self.matrix @ self.matrix.conj().T, self.kind)


def _cholesky_values(v: np.ndarray) -> np.ndarray:
    p = v.shape[0]
    threshold = PD_PIVOT_RTOL * float(np.mean(v.diagonal().real))
    L = np.zeros_like(v)
    for j in range(p):
        pivot = v[j, j].real - float(np.real(np.vdot(L[j, :j], L[j, :j])))
        if not pivot > threshold:
            raise NotPositiveDefinite(j, pivot)
        L[j, j] = np.sqrt(pivot)
        if j + 1 < p:
            L[j + 1 :, j] = (v[j + 1 :, j] - L[j + 1 :, :j] @ L[j, :j].conj()) / L[j, j]
    return L


def cholesky(h: HermitianMatrix, *, ridge: float | None = None) -> CholeskyFactor:
    """Lower Cholesky factor of a Hermitian PD matrix.

    Raises NotPositiveDefinite with the failing pivot index and value when a
    pivot falls at or below the PD threshold. If `ridge` is given, a single
    repair attempt adds ridge * mean(diag) * I before failing.
    """
    try:
        return CholeskyFactor(_cholesky_values(h.values), h.kind)
    except NotPositiveDefinite:
        if ridge is None or not ridge > 0.0:
            raise
        mean_diag = float(np.mean(h.values.diagonal().real))
        repaired = h.values + (ridge * mean_diag) * np.eye(h.p)
        return CholeskyFactor(_cholesky_values(repaired), h.kind)


def log_det(h: HermitianMatrix, *, ridge: float | None = None) -> float:
    """Log-determinant from Cholesky pivots (never an explicit determinant)."""
    return cholesky(h, ridge=ridge).log_det


def invert(h: HermitianMatrix, *, ridge: float | None = None) -> HermitianMatrix:
    """Inverse via the Cholesky factor, explicitly re-symmetrized."""
    L = cholesky(h, ridge=ridge).matrix
    eye = np.eye(h.p, dtype=np.complex128)
    y = solve_triangular(L, eye, lower=True)
    x = solve_triangular(L.conj().T, y, lower=False)
    return HermitianMatrix((x + x.conj().T) / 2.0, h.kind)


def standardize(h: HermitianMatrix) -> HermitianMatrix:
    """Scale to unit diagonal: H[i,j] / sqrt(H[i,i] * H[j,j])."""
    d = h.values.diagonal().real
    for i, di in enumerate(d):
        if not di > 0.0:
            raise NonPositiveDiagonal(i, float(di))
    s = 1.0 / np.sqrt(d)
    r = (s[:, None] * h.values) * s[None, :]
    np.fill_diagonal(r, 1.0)
    return HermitianMatrix(r, h.kind)


def diag_part(h: HermitianMatrix) -> HermitianMatrix:
    """Copy with all off-diagonal entries zeroed."""
    return HermitianMatrix(np.diag(h.values.diagonal()), h.kind)


def blockdiag_part(h: HermitianMatrix, part: Partition) -> HermitianMatrix:
    """Copy with all off-block entries zeroed."""
    if part.p != h.p:
        raise PartitionMismatch(
            f"partition covers {part.p} indices, matrix has {h.p}"
        )
    out = np.zeros_like(h.values)
    for g in part.groups:
        ix = np.ix_(g, g)
        out[ix] = h.values[ix]
    return HermitianMatrix(out, h.kind)


def _check_indices(h: HermitianMatrix, indices, what: str) -> tuple[int, ...]:
    idx = tuple(int(i) for i in indices)
    for i in idx:
        if not 0 <= i < h.p:
            raise IndexOutOfRange(f"{what} index {i} outside range 0..{h.p - 1}")
    if len(set(idx)) != len(idx):
        raise IndexOverlap(f"duplicate {what} indices in {idx}")
    return idx


def submatrix(h: HermitianMatrix, indices) -> HermitianMatrix:
    """Principal submatrix on the given indices, in the given order."""
    idx = _check_indices(h, indices, "submatrix")
    return HermitianMatrix(h.values[np.ix_(idx, idx)], h.kind)


def schur_complement(h: HermitianMatrix, keep, given, *,
                     ridge: float | None = None) -> HermitianMatrix:
    """Conditional covariance H_kk - H_kg H_gg^{-1} H_gk.

    `keep` and `given` must be disjoint; `given` may be empty, in which case
    the principal submatrix on `keep` is returned unchanged.
    """
    keep = _check_indices(h, keep, "keep")
    given = _check_indices(h, given, "given")
    if set(keep) & set(given):
        raise IndexOverlap(f"keep {keep} and given {given} overlap")
    if not given:
        return submatrix(h, keep)
    a = h.values[np.ix_(keep, keep)]
    b = h.values[np.ix_(keep, given)]
    c = HermitianMatrix(h.values[np.ix_(given, given)], h.kind)
    lg = cholesky(c, ridge=ridge).matrix
    w = solve_triangular(lg, b.conj().T, lower=True)
    return HermitianMatrix(a - w.conj().T @ w, h.kind)


def delete_index(h: HermitianMatrix, i: int) -> HermitianMatrix:
    """(p-1) x (p-1) principal submatrix without row/column i."""
    if not 0 <= i < h.p:
        raise IndexOutOfRange(f"index {i} outside range 0..{h.p - 1}")
    v = np.delete(np.delete(h.values, i, axis=0), i, axis=1)
    return HermitianMatrix(v, h.kind)


def delete_group(h: HermitianMatrix, part: Partition, k: int) -> HermitianMatrix:
    """Principal submatrix without the k-th group, remaining order preserved."""
    if part.p != h.p:
        raise PartitionMismatch(
            f"partition covers {part.p} indices, matrix has {h.p}"
        )
    _, remaining = part.drop_group(k)
    return submatrix(h, remaining)
