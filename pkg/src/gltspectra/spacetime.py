"""All-at-once space-time parabolic matrix: assembly and exact spectra.

The coefficient matrix couples a backward-Euler time difference with a
second-order periodic (or Dirichlet) space difference,

    A = (1/h_t) T_{N_t}(1 - e^{i theta}) (x) I  +  I (x) (1/h_x^2) C_{N_x}(2 - 2 cos xi),

and is never normal for N_t > 1.  Its eigenvalues are known exactly (the
time factor is lower bidiagonal with unit diagonal), and its singular values
decouple, after a Fourier conjugation in space and a permutation, into one
small symmetric tridiagonal block per space frequency.  The top-left entry
of each block misses the ``c_h**2`` shift, which places it just outside the
corner-modified tridiagonal algebras; two-norm bounds therefore come from
the neighbouring algebras via interlacing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal

from .errors import InvalidCaseError, OddNxError, WrongNtError
from .structured import (
    backward_difference_symbol,
    circulant,
    laplacian_symbol,
    toeplitz,
)
from .symbols import MomentarySymbol, spacetime_case_symbol
from . import numerics

_F_Q = laplacian_symbol()
_F_J = backward_difference_symbol()


@dataclass(frozen=True)
class SpaceTimeSystem:
    """Mesh data of one all-at-once system.

    ``c_h = h_x**2 / h_t`` is the mesh ratio steering the scaling regimes.
    """

    nt: int
    nx: int
    ht: float
    hx: float
    bc: str = "periodic"

    def __post_init__(self):
        if self.nt < 1 or self.nx < 1:
            raise ValueError("nt and nx must be positive")
        if not (self.ht > 0 and self.hx > 0):
            raise ValueError("step sizes must be positive")
        if self.bc not in ("periodic", "dirichlet"):
            raise ValueError(f"unknown boundary condition {self.bc!r}")

    @classmethod
    def from_ratio(cls, nt: int, nx: int, c_h: float, hx: float = 1.0,
                   bc: str = "periodic") -> "SpaceTimeSystem":
        if not c_h > 0:
            raise ValueError("c_h must be positive")
        return cls(nt=nt, nx=nx, ht=hx * hx / c_h, hx=hx, bc=bc)

    @property
    def c_h(self) -> float:
        return self.hx * self.hx / self.ht

    @property
    def size(self) -> int:
        return self.nt * self.nx


def space_grid(s: SpaceTimeSystem) -> np.ndarray:
    """Frequencies diagonalizing the space operator: the uniform circulant
    grid ``2 pi (k-1)/N_x`` (periodic) or the sine-I grid ``k pi/(N_x+1)``
    (Dirichlet)."""
    if s.bc == "periodic":
        return 2.0 * np.pi * np.arange(s.nx) / s.nx
    return np.arange(1, s.nx + 1) * np.pi / (s.nx + 1)


def assemble_spacetime(s: SpaceTimeSystem) -> np.ndarray:
    """Dense ``N x N`` matrix of the all-at-once system."""
    time_part = toeplitz(_F_J, s.nt) / s.ht
    if s.bc == "periodic":
        space_part = circulant(_F_Q, s.nx) / (s.hx * s.hx)
    else:
        space_part = toeplitz(_F_Q, s.nx) / (s.hx * s.hx)
    return (np.kron(time_part, np.eye(s.nx))
            + np.kron(np.eye(s.nt), space_part))


def exact_eigenvalues(s: SpaceTimeSystem) -> np.ndarray:
    """All ``N`` eigenvalues, sorted ascending.

    The time factor is lower triangular with constant diagonal, so each
    space frequency contributes ``1/h_t + f_Q(grid_k)/h_x**2`` with
    multiplicity ``N_t`` (a single Jordan block per frequency).
    """
    freq = 1.0 / s.ht + (2.0 - 2.0 * np.cos(space_grid(s))) / s.hx ** 2
    return np.sort(np.repeat(freq, s.nt))


def scaled_spectral_radius(s: SpaceTimeSystem) -> float:
    """Spectral radius of ``h_x**2 A``: ``c_h + max f_Q`` over the space grid
    (equal to ``4 + c_h`` exactly when the grid contains pi, i.e. for even
    ``N_x`` in the periodic case)."""
    if s.bc == "periodic" and s.nx % 2 == 0:
        return 4.0 + s.c_h
    return s.c_h + float((2.0 - 2.0 * np.cos(space_grid(s))).max())


def frequency_block(s: SpaceTimeSystem, k: int) -> np.ndarray:
    """Per-frequency block of the permuted Gram matrix ``h_x**4 A A^T``.

    Symmetric tridiagonal of size ``N_t``: diagonal ``(C_k^2, C_k^2 + c_h^2,
    ..., C_k^2 + c_h^2)``, off-diagonals ``-c_h C_k``, where
    ``C_k = f_Q(grid_k) + c_h``.  Singular values of ``h_x**2 A`` are the
    square roots of the union of all block eigenvalues.
    """
    if not 1 <= k <= s.nx:
        raise ValueError(f"frequency index {k} outside 1..{s.nx}")
    ch = s.c_h
    c_k = 2.0 - 2.0 * np.cos(space_grid(s)[k - 1]) + ch
    m = np.full(s.nt, c_k * c_k + ch * ch)
    m[0] = c_k * c_k
    block = np.diag(m)
    for i in range(s.nt - 1):
        block[i, i + 1] = block[i + 1, i] = -ch * c_k
    return block


def _block_eigenvalues(s: SpaceTimeSystem, k: int) -> np.ndarray:
    ch = s.c_h
    c_k = 2.0 - 2.0 * np.cos(space_grid(s)[k - 1]) + ch
    diag = np.full(s.nt, c_k * c_k + ch * ch)
    diag[0] = c_k * c_k
    if s.nt == 1:
        return diag
    return eigvalsh_tridiagonal(diag, np.full(s.nt - 1, -ch * c_k))


def exact_singular_values(s: SpaceTimeSystem) -> np.ndarray:
    """Singular values of ``h_x**2 A``: sorted union of the square roots of
    the per-frequency block spectra."""
    lam = np.concatenate([_block_eigenvalues(s, k) for k in range(1, s.nx + 1)])
    return np.sort(np.sqrt(np.maximum(lam, 0.0)))


def nt2_singular_values(k: int, s: SpaceTimeSystem) -> tuple[float, float]:
    """Closed form for the two singular values of frequency ``k`` at
    ``N_t = 2``: ``sqrt((2 C_k^2 + c_h^2)/2 -+ (c_h/2) sqrt(4 C_k^2 + c_h^2))``."""
    if s.nt != 2:
        raise WrongNtError(f"closed form requires N_t = 2, got {s.nt}")
    if not 1 <= k <= s.nx:
        raise ValueError(f"frequency index {k} outside 1..{s.nx}")
    ch = s.c_h
    c_k = 2.0 - 2.0 * np.cos(space_grid(s)[k - 1]) + ch
    mid = (2.0 * c_k * c_k + ch * ch) / 2.0
    half_gap = 0.5 * ch * np.sqrt(4.0 * c_k * c_k + ch * ch)
    return float(np.sqrt(mid - half_gap)), float(np.sqrt(mid + half_gap))


def case_symbols(s: SpaceTimeSystem, case: int) -> MomentarySymbol:
    """Momentary symbol of the properly scaled matrix in regime ``case``.

    Case 1 scales by ``h_t`` (time term leads), case 2 by ``h_x**2`` (space
    term leads), case 3 keeps ``c_h`` constant and folds both terms into the
    leading one.  Case 3 therefore requires treating the system's ``c_h`` as
    the regime constant.
    """
    if case not in (1, 2, 3):
        raise InvalidCaseError(f"case must be 1, 2 or 3, got {case}")
    return spacetime_case_symbol(s.c_h, case)


def eigenvalue_symbol_annotation(case: int):
    """Eigenvalue-distribution annotation per regime, kept separate from the
    (singular value) momentary symbol: the case-1 scaled sequence distributes
    as the constant 1 in the eigenvalue sense, case 2 as the space symbol;
    case 3 has no directly derived eigenvalue symbol (non-Hermitian)."""
    if case == 1:
        return ("constant", 1.0)
    if case == 2:
        return ("symbol", _F_Q)
    if case == 3:
        return ("unknown", None)
    raise InvalidCaseError(f"case must be 1, 2 or 3, got {case}")


def singular_sample_grid(s: SpaceTimeSystem) -> tuple[np.ndarray, np.ndarray]:
    """The sampling grid pairing time angles ``j pi/(N_t+1)`` with the space
    frequencies of :func:`space_grid`."""
    theta = np.arange(1, s.nt + 1) * np.pi / (s.nt + 1)
    return theta, space_grid(s)


def momentary_singular_approx(s: SpaceTimeSystem) -> np.ndarray:
    """Sorted samples ``|c_h (1 - e^{i theta}) + f_Q(xi)|`` on the product
    grid of :func:`singular_sample_grid`, approximating the singular values
    of ``h_x**2 A``."""
    theta, xi = singular_sample_grid(s)
    t, x = np.meshgrid(theta, xi, indexing="ij")
    vals = np.abs(s.c_h * (1.0 - np.exp(1j * t)) + (2.0 - 2.0 * np.cos(x)))
    return np.sort(vals.ravel())


def glt_singular_samples(s: SpaceTimeSystem) -> np.ndarray:
    """Sorted samples of the asymptotic symbol alone (``f_Q`` on the space
    grid, each repeated ``N_t`` times)."""
    vals = 2.0 - 2.0 * np.cos(space_grid(s))
    return np.sort(np.repeat(vals, s.nt))


def two_norm_bounds(s: SpaceTimeSystem) -> tuple[float, float, float]:
    """Lower/upper/max bounds for ``||h_x**2 A||_2`` from the interlacing of
    corner-modified tridiagonal algebras.

    With ``g(theta) = (4+c_h)^2 + c_h^2 - 2 c_h (4+c_h) cos(theta)`` the
    squared norm is the top eigenvalue of the peak-frequency block, wedged
    between the exact maxima of its two neighbouring algebras:

        sqrt(g(pi (N_t - 1/2)/(N_t + 1/2)))  <  ||.||_2  <  sqrt(g(pi N_t/(N_t + 1)))

    and everything is below ``sqrt(g(pi)) = 4 + 2 c_h``.  Requires even
    ``N_x`` so the peak frequency ``xi = pi`` is on the grid.
    """
    if s.bc != "periodic":
        raise OddNxError("two-norm bounds are derived for the periodic case")
    if s.nx % 2 != 0:
        raise OddNxError(f"N_x must be even so xi = pi is attained, got {s.nx}")
    ch = s.c_h
    peak = 4.0 + ch

    def g(theta):
        return peak * peak + ch * ch - 2.0 * ch * peak * np.cos(theta)

    nt = s.nt
    lower = float(np.sqrt(g(np.pi * (nt - 0.5) / (nt + 0.5))))
    upper = float(np.sqrt(g(np.pi * nt / (nt + 1.0))))
    return lower, upper, 4.0 + 2.0 * ch


def two_norm(s: SpaceTimeSystem, dense_threshold: int = 200) -> float:
    """The 2-norm of ``h_x**2 A``: dense SVD up to ``dense_threshold``
    unknowns, the exact per-frequency blocks beyond."""
    if s.size <= dense_threshold:
        a = assemble_spacetime(s) * (s.hx * s.hx)
        return float(numerics.singular_values(a)[-1])
    return float(exact_singular_values(s)[-1])
