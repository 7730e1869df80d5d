"""Symmetric tridiagonal algebras with corner modifications.

A member matrix has constant diagonal ``a`` and off-diagonals ``b`` except
for the corners ``a + eps*b`` (top left) and ``a + phi*b`` (bottom right).
For the nine combinations ``eps, phi in {-1, 0, 1}`` the eigenvalues are
exact samplings of ``g(theta) = a + 2 b cos(theta)`` on tabulated uniform
grids (the classical sine/cosine transform grids).  Corner parameters
outside that set still produce a matrix, but no exact grid; bounds then come
from the neighbouring algebras via interlacing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import UnsupportedAlgebraError

#: eigenvalue grids theta_{j,n} for the nine tabulated algebras
_GRIDS = {
    (-1, -1): lambda j, n: j * np.pi / n,
    (-1, 0): lambda j, n: j * np.pi / (n + 0.5),
    (-1, 1): lambda j, n: (j - 0.5) * np.pi / n,
    (0, -1): lambda j, n: j * np.pi / (n + 0.5),
    (0, 0): lambda j, n: j * np.pi / (n + 1.0),
    (0, 1): lambda j, n: (j - 0.5) * np.pi / (n + 0.5),
    (1, -1): lambda j, n: (j - 0.5) * np.pi / n,
    (1, 0): lambda j, n: (j - 0.5) * np.pi / (n + 0.5),
    (1, 1): lambda j, n: (j - 1.0) * np.pi / n,
}

#: transform names matching the grid table (for reference/reporting)
TRANSFORM_NAMES = {
    (-1, -1): "dst-2", (-1, 0): "dst-6", (-1, 1): "dst-4",
    (0, -1): "dst-5", (0, 0): "dst-1", (0, 1): "dst-7",
    (1, -1): "dct-4", (1, 0): "dct-8", (1, 1): "dct-2",
}


@dataclass(frozen=True)
class TauSpec:
    """Parameters of one corner-modified tridiagonal matrix."""

    a: float
    b: float
    eps: float
    phi: float
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")

    @property
    def tabulated(self) -> bool:
        return (self.eps, self.phi) in _GRIDS

    def symbol(self, theta):
        return self.a + 2.0 * self.b * np.cos(np.asarray(theta, dtype=float))


def tau_matrix(spec: TauSpec) -> np.ndarray:
    """Dense symmetric tridiagonal matrix with the corner modifications."""
    n = spec.n
    m = np.zeros((n, n))
    np.fill_diagonal(m, spec.a)
    for i in range(n - 1):
        m[i, i + 1] = spec.b
        m[i + 1, i] = spec.b
    m[0, 0] += spec.eps * spec.b
    m[-1, -1] += spec.phi * spec.b
    return m


def _grid_key(eps, phi):
    key = (int(round(eps)), int(round(phi)))
    if key not in _GRIDS or abs(eps - key[0]) > 0 or abs(phi - key[1]) > 0:
        raise UnsupportedAlgebraError(
            f"no tabulated grid for (eps, phi) = ({eps}, {phi})")
    return key


def tau_grid(eps, phi, n: int) -> np.ndarray:
    """Tabulated eigenvalue angles, ascending in j = 1..n."""
    key = _grid_key(eps, phi)
    return _GRIDS[key](np.arange(1, n + 1, dtype=float), n)


def tau_eigenvalues(spec: TauSpec) -> np.ndarray:
    """Exact eigenvalues ``a + 2 b cos(theta_j)`` on the tabulated grid."""
    theta = tau_grid(spec.eps, spec.phi, spec.n)
    return spec.symbol(theta)


def tau_eigenvector_grid(eps, phi, n: int) -> np.ndarray:
    """Angle table ``Theta[i, j]`` entering the eigenvector entries.

    Row pattern depends on the top corner: ``(i-1/2)*theta_j`` for
    ``eps = -1``, ``i*theta_j`` for ``eps = 0`` and
    ``(i-1/2)*theta_j + pi/2`` for ``eps = 1``.
    """
    key = _grid_key(eps, phi)
    theta = tau_grid(eps, phi, n)
    i = np.arange(1, n + 1, dtype=float)[:, None]
    if key[0] == -1:
        return (i - 0.5) * theta[None, :]
    if key[0] == 0:
        return i * theta[None, :]
    return (i - 0.5) * theta[None, :] + np.pi / 2.0


def tau_eigenvectors(spec: TauSpec) -> np.ndarray:
    """Normalized eigenvectors, implemented for the (0, 0) algebra only.

    Column j has entries ``sin(i * theta_j)``; other corner cases expose
    their angle tables via :func:`tau_eigenvector_grid` but no entry formula.
    """
    if (spec.eps, spec.phi) != (0, 0):
        raise UnsupportedAlgebraError(
            "eigenvector entries are implemented for the (0, 0) algebra only")
    v = np.sin(tau_eigenvector_grid(0, 0, spec.n))
    return v / np.linalg.norm(v, axis=0, keepdims=True)


# -- grid-ordering (interlacing) report ---------------------------------------

#: consecutive relations of the grid-ordering chain; "<" strict for all j,
#: "=" identical grids, "x" order depends on j (see _MIDDLE_THRESHOLD)
_CHAIN = [
    ((1, 1), "<", (0, 1)),
    ((0, 1), "=", (1, 0)),
    ((1, 0), "<", (-1, 1)),
    ((-1, 1), "=", (1, -1)),
    ((1, -1), "x", (0, 0)),
    ((0, 0), "<", (-1, 0)),
    ((-1, 0), "=", (0, -1)),
    ((0, -1), "<", (-1, -1)),
]


@dataclass
class InterlacingReport:
    """Outcome of the grid-ordering verification for one (a, b, n)."""

    n: int
    relations: list = field(default_factory=list)  # (lhs, op, rhs, per_j_ok)
    chain_holds: bool = True
    eigenvalue_bounds_ok: bool | None = None
    notes: list = field(default_factory=list)

    def failed_relations(self):
        return [(l, op, r) for (l, op, r, ok) in self.relations if not ok.all()]


def tau_interlacing_check(a: float, b: float, n: int) -> InterlacingReport:
    """Verify the grid-ordering chain and the induced eigenvalue bounds.

    The middle comparison between the mixed-corner grid ``(j-1/2)pi/n`` and
    the plain grid ``j pi/(n+1)`` is not one-sided: the mixed grid is below
    for ``j < (n+1)/2``, equal at ``j = (n+1)/2`` and above afterwards.  The
    report encodes that threshold rule; every other relation in the chain is
    strict (or an exact grid identity) for all j.
    """
    if b == 0:
        raise ValueError("b must be nonzero")
    report = InterlacingReport(n=n)
    j = np.arange(1, n + 1, dtype=float)
    tol = 1e-13 * np.pi
    for lhs, op, rhs in _CHAIN:
        gl = _GRIDS[lhs](j, n)
        gr = _GRIDS[rhs](j, n)
        if op == "<":
            ok = gl < gr - tol
        elif op == "=":
            ok = np.abs(gl - gr) <= tol
        else:  # threshold rule
            below = j < (n + 1) / 2.0 - 1e-12
            at = np.abs(j - (n + 1) / 2.0) <= 1e-12
            ok = np.where(below, gl < gr - tol,
                          np.where(at, np.abs(gl - gr) <= tol, gl > gr + tol))
            report.notes.append(
                f"{lhs} vs {rhs}: below/at/above threshold j = (n+1)/2")
        report.relations.append((lhs, op, rhs, ok))
        if not ok.all():
            report.chain_holds = False

    # induced eigenvalue-bound ordering for monotone g: with b < 0 the
    # symbol increases on [0, pi] and each maximum lives at j = n, so the
    # maxima follow the grid order; with b > 0 it decreases, the maxima live
    # at j = 1, and the cascade mirrors (the (1, 1) grid attains g(0)).
    def max_eig(eps, phi):
        return tau_eigenvalues(TauSpec(a, b, eps, phi, n)).max()

    g_sup = a + 2.0 * abs(b)
    if b < 0:
        m10, m00, mmm = max_eig(1, 0), max_eig(0, 0), max_eig(-1, -1)
        report.eigenvalue_bounds_ok = bool(
            (n == 1 or m10 < m00) and m00 <= mmm <= g_sup + 1e-12)
    else:
        m00, m10, m11 = max_eig(0, 0), max_eig(1, 0), max_eig(1, 1)
        report.eigenvalue_bounds_ok = bool(
            (n == 1 or m00 < m10) and m10 <= m11 <= g_sup + 1e-12)
    return report
