"""Toeplitz, circulant, tensor and diagonal-sampling constructions.

A generating function is represented by :class:`FourierSymbol`; the matrix
constructors consume symbols and produce dense numpy arrays.  The sign
convention is fixed throughout the package: entry ``(i, j)`` of a Toeplitz
matrix is the Fourier coefficient of index ``i - j``, i.e. coefficient
``k = +1`` sits on the first subdiagonal.
"""

from __future__ import annotations

from typing import Callable, Mapping

import numpy as np

from .errors import (
    DegreeTooHighError,
    MissingCoefficientsError,
    QuadratureUnderResolvedError,
)

_VALIDATION_SEED = 20260809
_VALIDATION_POINTS = 32


class FourierSymbol:
    """A generating function given by Fourier coefficients and/or a pointwise
    evaluator.

    Parameters
    ----------
    coefficients:
        Map ``k -> complex``.  Supplying this declares the symbol to be a
        trigonometric polynomial with exactly this support; it is never
        inferred.
    evaluator:
        Vectorized callable ``theta -> complex``, for symbols that are not
        trigonometric polynomials (or as a cross-check when both are given).
    coefficient_fn:
        Optional closed form ``k -> complex`` for non-polynomial symbols
        whose coefficients are known analytically.
    parity:
        ``"even"`` (real-valued and even), ``"real"`` (real-valued) or
        ``"none"``.  Coefficient symmetries implied by the flag are checked.
    truncation_tol:
        Agreement required between the coefficient Fourier sum and the
        evaluator at random angles when both representations are present.
    """

    def __init__(self, coefficients: Mapping[int, complex] | None = None,
                 evaluator: Callable | None = None,
                 coefficient_fn: Callable | None = None,
                 parity: str = "none",
                 truncation_tol: float = 1e-10,
                 label: str = ""):
        if coefficients is None and evaluator is None and coefficient_fn is None:
            raise MissingCoefficientsError(
                "a symbol needs coefficients, a coefficient closed form, "
                "or an evaluator")
        if parity not in ("even", "real", "none"):
            raise ValueError(f"unknown parity flag {parity!r}")
        self.coefficients = (None if coefficients is None
                             else {int(k): complex(v)
                                   for k, v in coefficients.items()
                                   if v != 0})
        self.evaluator = evaluator
        self.coefficient_fn = coefficient_fn
        self.parity = parity
        self.truncation_tol = truncation_tol
        self.label = label
        self._validate()

    # -- representation checks -------------------------------------------

    def _validate(self):
        c = self.coefficients
        if c is not None:
            for k, v in c.items():
                if self.parity in ("even", "real"):
                    other = c.get(-k, 0.0)
                    want = v.conjugate() if self.parity == "real" else v
                    if abs(other - want) > 1e-12 * max(1.0, abs(v)):
                        raise ValueError(
                            f"coefficients violate {self.parity} symmetry at k={k}")
        if c is not None and self.evaluator is not None:
            rng = np.random.default_rng(_VALIDATION_SEED)
            theta = rng.uniform(-np.pi, np.pi, _VALIDATION_POINTS)
            diff = np.abs(self.fourier_sum(theta) - np.asarray(
                self.evaluator(theta), dtype=complex))
            if diff.max() > self.truncation_tol:
                raise ValueError(
                    f"coefficient sum and evaluator disagree by {diff.max():.3e} "
                    f"(> {self.truncation_tol:.1e})")

    # -- queries -----------------------------------------------------------

    @property
    def is_polynomial(self) -> bool:
        return self.coefficients is not None

    @property
    def degree(self) -> int:
        if self.coefficients is None:
            raise MissingCoefficientsError("symbol has no declared finite support")
        if not self.coefficients:
            return 0
        return max(abs(k) for k in self.coefficients)

    def coefficient(self, k: int) -> complex:
        if self.coefficients is not None:
            return self.coefficients.get(int(k), 0.0 + 0.0j)
        if self.coefficient_fn is not None:
            return complex(self.coefficient_fn(int(k)))
        raise MissingCoefficientsError(
            "coefficients unavailable; use coefficients_up_to for quadrature")

    def coefficients_up_to(self, k_max: int, M: int | None = None,
                           tol: float = 1e-10) -> dict[int, complex]:
        """All coefficients with ``|k| <= k_max`` from the best source."""
        if self.coefficients is not None or self.coefficient_fn is not None:
            return {k: self.coefficient(k) for k in range(-k_max, k_max + 1)}
        return fourier_coefficients(self.evaluator, k_max, M=M, tol=tol)

    def fourier_sum(self, theta) -> np.ndarray:
        if self.coefficients is None:
            raise MissingCoefficientsError("symbol has no declared finite support")
        th = np.asarray(theta, dtype=float)
        out = np.zeros(th.shape, dtype=complex)
        for k, v in self.coefficients.items():
            out += v * np.exp(1j * k * th)
        return out

    def evaluate(self, theta) -> np.ndarray:
        if self.evaluator is not None:
            return np.asarray(self.evaluator(theta), dtype=complex)
        return self.fourier_sum(theta)

    __call__ = evaluate

    # -- algebra (used by the momentary-symbol calculus) -------------------

    def __add__(self, other) -> "FourierSymbol":
        other = _coerce_symbol(other)
        coeffs = None
        if self.coefficients is not None and other.coefficients is not None:
            coeffs = dict(self.coefficients)
            for k, v in other.coefficients.items():
                coeffs[k] = coeffs.get(k, 0.0) + v
        evaluator = None
        if coeffs is None:
            f, g = self.evaluate, other.evaluate
            evaluator = lambda th: f(th) + g(th)
        return FourierSymbol(coefficients=coeffs, evaluator=evaluator,
                             parity=_join_parity(self.parity, other.parity),
                             label=f"({self.label}+{other.label})")

    def __mul__(self, other) -> "FourierSymbol":
        if np.isscalar(other):
            return self._scaled(other)
        other = _coerce_symbol(other)
        coeffs = None
        if self.coefficients is not None and other.coefficients is not None:
            coeffs = {}
            for k1, v1 in self.coefficients.items():
                for k2, v2 in other.coefficients.items():
                    coeffs[k1 + k2] = coeffs.get(k1 + k2, 0.0) + v1 * v2
        evaluator = None
        if coeffs is None:
            f, g = self.evaluate, other.evaluate
            evaluator = lambda th: f(th) * g(th)
        parity = _join_parity(self.parity, other.parity)
        return FourierSymbol(coefficients=coeffs, evaluator=evaluator,
                             parity=parity,
                             label=f"({self.label}*{other.label})")

    __rmul__ = __mul__

    def _scaled(self, scalar) -> "FourierSymbol":
        s = complex(scalar)
        real_scale = abs(s.imag) == 0.0
        coeffs = (None if self.coefficients is None
                  else {k: s * v for k, v in self.coefficients.items()})
        cf = None
        if self.coefficient_fn is not None:
            base = self.coefficient_fn
            cf = lambda k: s * base(k)
        evaluator = None
        if self.evaluator is not None:
            base_eval = self.evaluator
            evaluator = lambda th: s * np.asarray(base_eval(th), dtype=complex)
        parity = self.parity if real_scale else "none"
        return FourierSymbol(coefficients=coeffs, evaluator=evaluator,
                             coefficient_fn=cf, parity=parity,
                             label=f"({scalar}*{self.label})")

    def __repr__(self):
        kind = "poly" if self.is_polynomial else "general"
        return f"FourierSymbol({self.label or kind})"


def _coerce_symbol(obj) -> FourierSymbol:
    if isinstance(obj, FourierSymbol):
        return obj
    if np.isscalar(obj):
        return constant_symbol(obj)
    raise TypeError(f"cannot interpret {obj!r} as a symbol")


def _join_parity(p1: str, p2: str) -> str:
    if p1 == p2 == "even":
        return "even"
    if p1 in ("even", "real") and p2 in ("even", "real"):
        return "real"
    return "none"


# -- stock symbols ---------------------------------------------------------

def constant_symbol(c) -> FourierSymbol:
    c = complex(c)
    parity = "even" if c.imag == 0.0 else "none"
    return FourierSymbol(coefficients={0: c}, parity=parity, label=f"{c.real:g}")


def backward_difference_symbol() -> FourierSymbol:
    """Backward-Euler time-difference symbol ``1 - exp(i*theta)``."""
    return FourierSymbol(coefficients={0: 1.0, 1: -1.0},
                         evaluator=lambda th: 1.0 - np.exp(1j * np.asarray(th)),
                         label="1-e^(i th)")


def laplacian_symbol() -> FourierSymbol:
    """Centered second-difference symbol ``2 - 2*cos(theta)``."""
    return FourierSymbol(coefficients={-1: -1.0, 0: 2.0, 1: -1.0},
                         evaluator=lambda th: 2.0 - 2.0 * np.cos(np.asarray(th))
                         + 0j,
                         parity="even", label="2-2cos")


def imaginary_sine_symbol() -> FourierSymbol:
    """Centered first-difference symbol ``i*sin(theta)`` (imaginary-valued)."""
    return FourierSymbol(coefficients={1: 0.5, -1: -0.5},
                         evaluator=lambda th: 1j * np.sin(np.asarray(th)),
                         label="i sin")


# -- quadrature --------------------------------------------------------------

def fourier_coefficients(evaluator, k_range: int, M: int | None = None,
                         tol: float = 1e-10) -> dict[int, complex]:
    """Fourier coefficients for ``|k| <= k_range`` by M-point trapezoid.

    The trapezoid rule on the periodic interval is realised as a DFT of the
    samples at ``theta_m = -pi + 2*pi*m/M``.  The computation is repeated at
    resolution ``2M``; if any coefficient moves by more than ``tol`` the
    quadrature is declared under-resolved.
    """
    if k_range < 0:
        raise ValueError("k_range must be nonnegative")
    if M is None:
        M = max(512, 8 * max(k_range, 1))
    M = int(M)
    if M <= 2 * k_range:
        raise ValueError("need more quadrature points than coefficients")

    coarse = _trapezoid_coefficients(evaluator, k_range, M)
    fine = _trapezoid_coefficients(evaluator, k_range, 2 * M)
    drift = max(abs(coarse[k] - fine[k]) for k in coarse)
    if drift > tol:
        raise QuadratureUnderResolvedError(
            f"doubling M={M} moves a coefficient by {drift:.3e} (> {tol:.1e})")
    return fine


def _trapezoid_coefficients(evaluator, k_range: int, M: int) -> dict[int, complex]:
    theta = -np.pi + 2.0 * np.pi * np.arange(M) / M
    samples = np.asarray(evaluator(theta), dtype=complex)
    spec = np.fft.fft(samples) / M
    out = {}
    for k in range(-k_range, k_range + 1):
        # account for the grid starting at -pi rather than 0
        out[k] = ((-1.0) ** k) * spec[k % M]
    return out


# -- matrix constructors ------------------------------------------------------

def toeplitz(f: FourierSymbol, n: int, M: int | None = None,
             tol: float = 1e-10) -> np.ndarray:
    """Dense ``n x n`` Toeplitz matrix with entry ``(i, j) = hat f_{i-j}``."""
    if n < 1:
        raise ValueError("n must be positive")
    coeffs = f.coefficients_up_to(n - 1, M=M, tol=tol)
    ks = np.arange(-(n - 1), n)
    vals = np.array([coeffs.get(int(k), 0.0) for k in ks])
    idx = np.arange(n)
    mat = vals[(idx[:, None] - idx[None, :]) + (n - 1)]
    if np.abs(mat.imag).max() == 0.0:
        return mat.real.copy()
    return mat


def circulant(f: FourierSymbol, n: int, M: int | None = None,
              tol: float = 1e-10) -> np.ndarray:
    """Circulant matrix: entry ``(i, j)`` depends only on ``(i - j) mod n``.

    Coefficients are folded cyclically onto the first column, so for a
    trigonometric polynomial the identity ``C = F diag(f(grid)) F*`` holds
    exactly even when the degree reaches ``n`` (the wrap then stacks
    couplings, e.g. the size-2 second-difference circulant has off-diagonal
    entries -2).  Non-polynomial symbols are truncated at ``|k| <= n-1``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if f.is_polynomial:
        coeffs = f.coefficients
    else:
        coeffs = f.coefficients_up_to(n - 1, M=M, tol=tol)
    col = np.zeros(n, dtype=complex)
    for k, v in coeffs.items():
        col[k % n] += v
    idx = np.arange(n)
    mat = col[(idx[:, None] - idx[None, :]) % n]
    if np.abs(mat.imag).max() == 0.0:
        return mat.real.copy()
    return mat


def circulant_grid(n: int) -> np.ndarray:
    """Uniform angles ``2*pi*(j-1)/n``, j = 1..n."""
    return 2.0 * np.pi * np.arange(n) / n


def circulant_eigenvalues(f: FourierSymbol, n: int) -> np.ndarray:
    """Exact circulant eigenvalues: the symbol sampled on ``circulant_grid``.

    Requires ``f`` to be a declared trigonometric polynomial of degree < n.
    """
    if not f.is_polynomial:
        raise MissingCoefficientsError(
            "exact circulant eigenvalues need a declared trigonometric polynomial")
    if f.degree >= n:
        raise DegreeTooHighError(
            f"degree {f.degree} >= n = {n}; sampling would alias")
    return f.fourier_sum(circulant_grid(n))


def fourier_matrix(n: int) -> np.ndarray:
    """Unitary Fourier matrix, ``F[i, j] = exp(i*(i-1)*theta_j) / sqrt(n)``."""
    i = np.arange(n)[:, None]
    return np.exp(1j * i * circulant_grid(n)[None, :]) / np.sqrt(n)


def tensor_toeplitz(factors, sizes, M: int | None = None,
                    tol: float = 1e-10) -> np.ndarray:
    """Kronecker product ``T_{n_1}(f_1) x ... x T_{n_d}(f_d)``."""
    factors = list(factors)
    sizes = [int(n) for n in sizes]
    if not factors or len(factors) != len(sizes):
        raise ValueError("factors and sizes must be nonempty and equal length")
    out = toeplitz(factors[0], sizes[0], M=M, tol=tol)
    for f, n in zip(factors[1:], sizes[1:]):
        out = np.kron(out, toeplitz(f, n, M=M, tol=tol))
    return out


def diagonal_sampling(a: Callable, n: int) -> np.ndarray:
    """Diagonal sampling matrix ``diag(a(1/n), ..., a(n/n))``."""
    if n < 1:
        raise ValueError("n must be positive")
    x = np.arange(1, n + 1) / n
    return np.diag(np.array([a(t) for t in x], dtype=float))
