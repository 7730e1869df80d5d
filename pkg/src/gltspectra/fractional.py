"""Distributed-order fractional Toeplitz sums and eigenvalue expansions.

The discretized distributed-order operator is a weighted sum of fractional
Toeplitz matrices,

    (h^{a_l}/da) T_n = sum_i c_i h^{da (l-i)} T_n(g_{a_i}),    h = 1/n,

with orders ``a_k = 1 + (k - 1/2)/l`` and the fractional symbol
``g_a(theta) = (2 - 2 cos theta)^(a/2)`` (even, continuous, increasing on
[0, pi]).  Eigenvalues of each symmetric Toeplitz factor admit an
asymptotic expansion in the mesh width whose coefficient functions are
recovered on a coarse grid by eigenvalue computations on nested meshes plus
a Vandermonde extrapolation; combining those per-order expansions with the
momentary scalings yields per-index eigenvalue approximations (the
momentary asymptotic expansion, MAE) that collapse to the plain momentary
sampling at expansion depth one.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gamma

import numpy as np

from .errors import (
    ExtrapolationOutOfRangeError,
    GridNotNestedError,
    OrderOutOfRangeError,
)
from .structured import FourierSymbol, laplacian_symbol
from .symbols import MomentarySymbol, SymbolTerm, mesh_power
from . import numerics


# -- fractional symbols -------------------------------------------------------


def _check_order(alpha: float):
    if not 1.0 < alpha <= 2.0:
        raise OrderOutOfRangeError(f"order must lie in (1, 2], got {alpha}")


def _coefficient_array(alpha: float, k_max: int) -> np.ndarray:
    """Coefficients ``hat g_k`` for k = 0..k_max via the stable ratio
    recurrence ``hat g_{k+1} = hat g_k (k - a/2)/(k + a/2 + 1)``."""
    out = np.empty(k_max + 1)
    out[0] = gamma(alpha + 1.0) / gamma(alpha / 2.0 + 1.0) ** 2
    for k in range(k_max):
        out[k + 1] = out[k] * (k - alpha / 2.0) / (k + alpha / 2.0 + 1.0)
    return out


def fractional_symbol(alpha: float) -> FourierSymbol:
    """The symbol ``(2 - 2 cos theta)^(alpha/2)`` for ``1 < alpha <= 2``.

    At ``alpha = 2`` this is the trigonometric polynomial ``2 - 2 cos``;
    below it is non-polynomial but carries its coefficients in closed form.
    """
    _check_order(alpha)
    if alpha == 2.0:
        return laplacian_symbol()
    return FourierSymbol(
        evaluator=lambda th: (2.0 - 2.0 * np.cos(np.asarray(th))) ** (alpha / 2.0)
        + 0j,
        coefficient_fn=lambda k, _a=alpha: _coefficient_array(_a, abs(k))[abs(k)],
        parity="even",
        label=f"(2-2cos)^({alpha:g}/2)")


def fractional_coefficients(alpha: float, k_max: int) -> dict[int, float]:
    """Closed-form Fourier coefficients
    ``(-1)^k Gamma(a+1) / (Gamma(a/2-k+1) Gamma(a/2+k+1))`` for |k| <= k_max."""
    _check_order(alpha)
    arr = _coefficient_array(alpha, k_max)
    out = {0: float(arr[0])}
    for k in range(1, k_max + 1):
        out[k] = out[-k] = float(arr[k])
    return out


def _weighted_toeplitz(alpha: float, n: int, weight: float = 1.0) -> np.ndarray:
    c = weight * _coefficient_array(alpha, n - 1)
    idx = np.abs(np.arange(n)[:, None] - np.arange(n)[None, :])
    return c[idx]


# -- distributed-order sums ---------------------------------------------------


@dataclass(frozen=True)
class DistributedOrderSpec:
    """Quadrature data of one distributed-order sum: ``ell`` fractional
    orders ``1 + (k - 1/2)/ell`` with positive weights (default all one)."""

    ell: int
    coefficients: tuple = ()

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("ell must be positive")
        coeffs = self.coefficients or tuple(1.0 for _ in range(self.ell))
        coeffs = tuple(float(c) for c in coeffs)
        if len(coeffs) != self.ell:
            raise ValueError(f"need {self.ell} coefficients, got {len(coeffs)}")
        if any(c <= 0 for c in coeffs):
            raise ValueError("coefficients must be positive")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def delta_alpha(self) -> float:
        return 1.0 / self.ell

    @property
    def orders(self) -> tuple:
        return tuple(1.0 + (k - 0.5) / self.ell for k in range(1, self.ell + 1))

    def scaling_exponent(self, i: int) -> float:
        """Exponent of ``h`` on order ``i`` (1-based): ``(ell - i)/ell``,
        formed from the integers to avoid cancellation when ``ell = n``."""
        return (self.ell - i) / self.ell


def assemble_distributed(spec: DistributedOrderSpec, n: int) -> np.ndarray:
    """Dense ``n x n`` matrix ``sum_i c_i h^{(ell-i)/ell} T_n(g_{a_i})``.

    Toeplitz structure is linear in the coefficients, so the weighted
    coefficient vectors are summed first and one matrix is materialized.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    h = 1.0 / n
    total = np.zeros(n)
    for i, (alpha, c) in enumerate(zip(spec.orders, spec.coefficients), start=1):
        total += c * h ** spec.scaling_exponent(i) * _coefficient_array(alpha, n - 1)
    idx = np.abs(np.arange(n)[:, None] - np.arange(n)[None, :])
    return total[idx]


def distributed_momentary(spec: DistributedOrderSpec, n: int) -> MomentarySymbol:
    """Momentary symbol ``sum_i h^{(ell-i)/ell} (c_i g_{a_i})``, terms sorted
    by decreasing scaling; its leading term is ``c_ell g_{a_ell}``."""
    terms = []
    for i, (alpha, c) in enumerate(zip(spec.orders, spec.coefficients), start=1):
        sym = fractional_symbol(alpha) * c
        term = SymbolTerm(sym, ("theta",), label=f"{c:g}*g_{alpha:g}")
        terms.append((mesh_power(spec.scaling_exponent(i)), term))
    return MomentarySymbol(terms)


def eigenvalue_grid(n: int) -> np.ndarray:
    """Expansion angles ``j pi / n``, j = 1..n."""
    return np.arange(1, n + 1) * np.pi / n


def momentary_eigenvalue_samples(spec: DistributedOrderSpec, n: int) -> np.ndarray:
    """The momentary symbol sampled on :func:`eigenvalue_grid` (real part;
    the symbol is real and increasing, so the samples arrive sorted)."""
    return _per_order_samples(spec, n, tables=None)


def _per_order_samples(spec: DistributedOrderSpec, n: int, tables) -> np.ndarray:
    """Shared accumulation path for the momentary sampling and the MAE.

    Iterates orders from ``ell`` down to 1 (decreasing scaling) adding
    ``h^exp * (c_i g_{a_i}(theta) + sum_t h^t w_t^{(i)}(theta))``; with
    ``tables=None`` the correction sum is absent and the result is exactly
    the momentary sampling.
    """
    theta = eigenvalue_grid(n)
    h = 1.0 / n
    acc = np.zeros(n)
    for i in range(spec.ell, 0, -1):
        alpha = spec.orders[i - 1]
        c = spec.coefficients[i - 1]
        vals = c * (2.0 - 2.0 * np.cos(theta)) ** (alpha / 2.0)
        if tables is not None:
            table = tables[i - 1]
            interp = interpolate_expansion(table, n)
            for t in range(1, table.depth + 1):
                vals = vals + h ** t * interp[t]
        acc += h ** spec.scaling_exponent(i) * vals
    return acc


# -- asymptotic eigenvalue expansion ------------------------------------------


@dataclass(frozen=True)
class ExpansionTable:
    """Sampled expansion coefficients of one symmetric Toeplitz family.

    ``values[t, j]`` approximates the t-th expansion function at the coarse
    angle ``base_thetas[j]``; row 0 is the symbol itself.  ``grid_sizes``
    must double successively so coarse angles persist on every finer grid.
    """

    base_thetas: np.ndarray
    values: np.ndarray
    grid_sizes: tuple

    def __post_init__(self):
        sizes = tuple(int(m) for m in self.grid_sizes)
        for a, b in zip(sizes, sizes[1:]):
            if b != 2 * a:
                raise GridNotNestedError(f"grid sizes {sizes} must double")
        object.__setattr__(self, "grid_sizes", sizes)
        if self.values.shape != (len(sizes) + 1, self.base_thetas.size):
            raise ValueError("values must have one row per expansion level "
                             "plus the symbol row")

    @property
    def depth(self) -> int:
        return len(self.grid_sizes)

    @property
    def n1(self) -> int:
        return self.base_thetas.size


def expansion_coefficients(f: FourierSymbol, nu: int, n1: int) -> ExpansionTable:
    """Recover ``w_1 .. w_nu`` on the coarse grid ``j pi/n1``.

    For each nested size ``n_k = 2^(k-1) n1`` the sorted eigenvalues of the
    symmetric Toeplitz matrix are computed and the residual against the
    symbol value at the (persisting) coarse angle is modeled as
    ``sum_t h_k^t w_t``; the per-angle Vandermonde systems in the mesh
    widths ``h_k = 1/n_k`` yield the coefficients.

    Requires a real, even symbol increasing on [0, pi] so that
    ascending-sorted eigenvalues pair with ascending angles.
    """
    if nu < 1:
        raise ValueError("nu must be at least 1")
    if n1 < 5:
        raise ValueError("base grid needs at least 5 points")
    if f.parity != "even":
        raise ValueError("expansion requires a real even symbol")
    probe = np.linspace(0.0, np.pi, 1001)
    pv = np.real(f.evaluate(probe))
    if np.any(np.diff(pv) < -1e-12 * max(1.0, np.abs(pv).max())):
        raise ValueError("expansion requires the symbol to be "
                         "nondecreasing on [0, pi]")

    base = eigenvalue_grid(n1)
    symbol_row = np.real(f.evaluate(base))
    sizes = tuple(2 ** (k - 1) * n1 for k in range(1, nu + 1))
    residuals = np.empty((nu, n1))
    for k, nk in enumerate(sizes, start=1):
        lam = numerics.symmetric_eigenvalues(_toeplitz_of(f, nk))
        idx = 2 ** (k - 1) * np.arange(1, n1 + 1) - 1
        residuals[k - 1] = lam[idx] - symbol_row
    widths = np.array([1.0 / nk for nk in sizes])

    values = np.empty((nu + 1, n1))
    values[0] = symbol_row
    for j in range(n1):
        values[1:, j] = numerics.solve_vandermonde(widths, residuals[:, j])
    return ExpansionTable(base_thetas=base, values=values, grid_sizes=sizes)


def _toeplitz_of(f: FourierSymbol, n: int) -> np.ndarray:
    coeffs = f.coefficients_up_to(n - 1)
    vals = np.array([coeffs.get(k, 0.0) for k in range(-(n - 1), n)])
    idx = np.arange(n)
    mat = vals[(idx[:, None] - idx[None, :]) + (n - 1)]
    return mat.real.copy() if np.abs(mat.imag).max() == 0.0 else mat


def interpolate_expansion(table: ExpansionTable, n: int,
                          thetas: np.ndarray | None = None) -> np.ndarray:
    """Extend every expansion row from the coarse grid to ``j pi/n`` (or to
    explicit ``thetas``) by piecewise Lagrange interpolation of degree
    ``min(depth, n1 - 1)``; coarse angles are reproduced exactly."""
    if thetas is None:
        thetas = eigenvalue_grid(n)
    thetas = np.asarray(thetas, dtype=float)
    if np.any(thetas <= 0.0) or np.any(thetas > np.pi + 1e-15):
        raise ExtrapolationOutOfRangeError("angles must lie in (0, pi]")
    deg = min(table.depth, table.n1 - 1)
    out = np.empty((table.depth + 1, thetas.size))
    for t in range(table.depth + 1):
        out[t] = _piecewise_lagrange(table.base_thetas, table.values[t],
                                     deg, thetas)
    return out


def _piecewise_lagrange(xs: np.ndarray, ys: np.ndarray, deg: int,
                        xq: np.ndarray) -> np.ndarray:
    npts = xs.size
    window = deg + 1
    pos = np.searchsorted(xs, xq)
    lo = np.clip(pos - window // 2, 0, npts - window)
    cols = lo[:, None] + np.arange(window)[None, :]
    xw = xs[cols]                      # (nq, window) node windows
    yw = ys[cols]
    diff = xq[:, None] - xw            # (nq, window)
    out = np.zeros_like(xq)
    for a in range(window):
        basis = np.ones_like(xq)
        for b in range(window):
            if a != b:
                basis *= diff[:, b] / (xw[:, a] - xw[:, b])
        out += yw[:, a] * basis
    return out


def mae_eigenvalues(spec: DistributedOrderSpec, n: int, nu: int,
                    n1: int) -> np.ndarray:
    """Momentary asymptotic expansion of the eigenvalues on ``j pi/n``.

    Each order contributes its symbol plus a depth ``nu - 1`` expansion
    correction, all combined with the momentary scalings:

        sum_i h^{(ell-i)/ell} ( c_i g_{a_i}(theta_j)
                                + sum_{t=1}^{nu-1} h^t w_t^{(i)}(theta_j) ).

    Depth one keeps no correction terms, so the result then coincides,
    summand for summand, with the momentary sampling.
    """
    if nu < 1:
        raise ValueError("nu must be at least 1")
    if n <= 2 ** (nu - 1) * n1:
        raise ValueError(f"need n > {2 ** (nu - 1) * n1} for nu={nu}, n1={n1}")
    if nu == 1:
        return _per_order_samples(spec, n, tables=None)
    tables = [
        expansion_coefficients(fractional_symbol(alpha) * c, nu - 1, n1)
        for alpha, c in zip(spec.orders, spec.coefficients)
    ]
    return _per_order_samples(spec, n, tables=tables)


# -- error reporting -----------------------------------------------------------


@dataclass(frozen=True)
class ErrorReport:
    """Exact eigenvalues against the three approximation routes."""

    thetas: np.ndarray
    exact: np.ndarray
    glt: np.ndarray
    momentary: np.ndarray
    mae: np.ndarray

    def errors(self, which: str) -> np.ndarray:
        return np.abs(self.exact - getattr(self, which))

    def summary(self, which: str) -> dict:
        err = self.errors(which)
        interior = err[: max(1, int(np.floor(0.95 * err.size)))]
        return {"max": float(err.max()), "mean": float(err.mean()),
                "mean_interior95": float(interior.mean())}


def error_report(spec: DistributedOrderSpec, n: int, nu: int,
                 n1: int) -> ErrorReport:
    """Per-index absolute errors of the asymptotic-symbol sampling, the
    momentary sampling and the MAE, against the dense symmetric eigensolver.

    The interior summary drops the top 5% of indices, where the expansion
    degrades because the symbols lose smoothness under periodic extension.
    """
    theta = eigenvalue_grid(n)
    exact = numerics.symmetric_eigenvalues(assemble_distributed(spec, n))
    alpha_top = spec.orders[-1]
    glt = spec.coefficients[-1] * (2.0 - 2.0 * np.cos(theta)) ** (alpha_top / 2.0)
    return ErrorReport(
        thetas=theta,
        exact=exact,
        glt=glt,
        momentary=momentary_eigenvalue_samples(spec, n),
        mae=mae_eigenvalues(spec, n, nu, n1),
    )
