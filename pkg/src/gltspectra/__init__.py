"""Structured-matrix spectral analysis toolkit.

Builds Toeplitz, circulant, tensor-product and corner-modified tridiagonal
matrices from generating functions, compares computed spectra against symbol
samplings (asymptotic and momentary), and provides exact spectra, norm
bounds and eigenvalue expansions for the all-at-once space-time parabolic
matrix and for distributed-order fractional Toeplitz sums.
"""

from . import distribution, fractional, numerics, spacetime, structured, symbols, tau
from .errors import GLTSpectraError

__version__ = "0.1.0"

__all__ = [
    "GLTSpectraError",
    "distribution",
    "fractional",
    "numerics",
    "spacetime",
    "structured",
    "symbols",
    "tau",
]
