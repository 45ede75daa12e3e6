"""Dense Hermitian-matrix helpers: eigendecomposition, trace norm, PSD tests.

All routines operate on small dense complex matrices (dimension up to a few
hundred) and are pure functions, safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Module-wide tolerances; operations that accept an explicit tol override them.
HERMITICITY_TOL = 1e-12
RECONSTRUCTION_TOL = 1e-10
PSD_TOL = 1e-9

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


@dataclass(frozen=True)
class EigenDecomposition:
    """Spectral data of a Hermitian matrix.

    ``eigenvalues`` are real and sorted in nondecreasing order;
    ``eigenvectors`` holds the matching orthonormal eigenvectors as columns.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        """Rebuild the original matrix as sum_k lambda_k |v_k><v_k|."""
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def as_hermitian(m, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Validate ``m`` as a square Hermitian matrix and return it as complex ndarray.

    Raises ValueError when the matrix is not square, is empty, or deviates
    from hermiticity by more than ``tol`` in any entry.
    """
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] < 1:
        raise ValueError("matrix dimension must be at least 1")
    deviation = np.abs(a - a.conj().T).max()
    if deviation > tol:
        raise ValueError(
            f"matrix is not Hermitian: max |m - m^dag| = {deviation:.3e} exceeds tol {tol:.3e}"
        )
    return a


def eigendecompose(m, tol: float = HERMITICITY_TOL) -> EigenDecomposition:
    """Eigendecompose a Hermitian matrix, eigenvalues in nondecreasing order."""
    a = as_hermitian(m, tol)
    eigenvalues, eigenvectors = np.linalg.eigh(a)
    return EigenDecomposition(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def trace_norm(m) -> float:
    """Trace norm of a Hermitian matrix: the sum of absolute eigenvalues."""
    return float(np.abs(eigendecompose(m).eigenvalues).sum())


def is_psd(m, tol: float = PSD_TOL) -> bool:
    """True iff the smallest eigenvalue of Hermitian ``m`` is >= -tol."""
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    return bool(eigendecompose(m).eigenvalues.min() >= -tol)


def pauli_vector(v) -> np.ndarray:
    """The 2x2 Hermitian matrix v . sigma for a real 3-vector v."""
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {v.shape}")
    return v[0] * PAULI_X + v[1] * PAULI_Y + v[2] * PAULI_Z
