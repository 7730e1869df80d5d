"""Dense linear-algebra backbone.

Matrices are plain 2-D ``numpy`` arrays (real or complex); every routine here
is a pure function of its inputs and serves as the ground-truth oracle for the
structured constructions elsewhere in the package.  The eigen/SVD kernels are
backed by LAPACK through :mod:`numpy.linalg`; the Vandermonde solver is a
Bjorck-Pereyra elimination, which stays stable on the geometric node
sequences (powers of a mesh width) this package feeds it.

Default tolerances are module constants and can be overridden per call.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    NoConvergenceError,
    NotHermitianError,
    SingularSystemError,
)

#: relative symmetry defect allowed before a matrix is rejected as Hermitian
HERMITIAN_RTOL = 1e-12


def _as_square(m) -> np.ndarray:
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def hermitian_defect(m) -> float:
    """Return max|A - A*| / max|A| (0 for the zero matrix)."""
    a = _as_square(m)
    scale = np.abs(a).max()
    if scale == 0.0:
        return 0.0
    return np.abs(a - a.conj().T).max() / scale


def is_hermitian(m, rtol: float = HERMITIAN_RTOL) -> bool:
    return hermitian_defect(m) <= rtol


def symmetric_eigenvalues(m, rtol: float = HERMITIAN_RTOL,
                          with_vectors: bool = False):
    """Eigenvalues of a Hermitian matrix, sorted ascending.

    With ``with_vectors=True`` also returns the orthonormal eigenvector
    matrix (columns paired with the eigenvalues).

    Raises ``NotHermitianError`` if the symmetry defect exceeds ``rtol`` and
    ``NoConvergenceError`` if the underlying QR iteration fails.
    """
    a = _as_square(m)
    if hermitian_defect(a) > rtol:
        raise NotHermitianError(
            f"symmetry defect {hermitian_defect(a):.3e} exceeds rtol={rtol:.1e}")
    try:
        if with_vectors:
            w, v = np.linalg.eigh(a)
            return w, v
        return np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(str(exc)) from exc


def general_eigenvalues(m) -> np.ndarray:
    """Eigenvalues of a general square matrix, unordered complex multiset."""
    a = _as_square(m)
    try:
        return np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(str(exc)) from exc


def singular_values(m) -> np.ndarray:
    """Singular values of any matrix, sorted ascending (nonnegative)."""
    a = np.asarray(m)
    if a.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {a.shape}")
    try:
        s = np.linalg.svd(a, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(str(exc)) from exc
    return np.sort(s)


def solve_vandermonde(nodes, rhs) -> np.ndarray:
    """Solve ``rhs_k = sum_t c_t * nodes_k**t`` (t = 1..nu) for c.

    ``nodes`` must be distinct and nonzero; the model carries no constant
    term, so each equation is divided by its node and the remaining pure
    Vandermonde system is solved by Bjorck-Pereyra divided differences.
    """
    x = np.asarray(nodes, dtype=float)
    f = np.asarray(rhs, dtype=float)
    if x.ndim != 1 or x.shape != f.shape:
        raise ValueError("nodes and rhs must be 1-D of equal length")
    n = x.size
    if n == 0:
        raise ValueError("empty system")
    if np.any(x == 0.0):
        raise SingularSystemError("nodes must be nonzero")
    if np.unique(x).size != n:
        raise SingularSystemError("coincident Vandermonde nodes")

    c = f / x
    # Newton divided differences, then Newton-to-monomial conversion.
    for k in range(n - 1):
        for i in range(n - 1, k, -1):
            c[i] = (c[i] - c[i - 1]) / (x[i] - x[i - k - 1])
    for k in range(n - 2, -1, -1):
        for i in range(k, n - 1):
            c[i] -= c[i + 1] * x[k]
    return c


def evaluate_power_model(nodes, coeffs) -> np.ndarray:
    """Forward evaluation ``sum_t c_t * nodes**t`` (t = 1..nu)."""
    x = np.asarray(nodes, dtype=float)
    c = np.asarray(coeffs, dtype=float)
    out = np.zeros_like(x)
    for t in range(c.size, 0, -1):
        out = (out + c[t - 1]) * x
    return out
