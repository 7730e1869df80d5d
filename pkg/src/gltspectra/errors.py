"""Exception types shared across the package."""


class GLTSpectraError(Exception):
    """Base class for all package errors."""


class NotHermitianError(GLTSpectraError):
    """Matrix failed the Hermitian symmetry tolerance."""


class NoConvergenceError(GLTSpectraError):
    """An iterative eigenvalue/SVD kernel did not converge."""


class SingularSystemError(GLTSpectraError):
    """Linear system is singular (e.g. coincident Vandermonde nodes)."""


class MissingCoefficientsError(GLTSpectraError):
    """Symbol carries neither Fourier coefficients nor an evaluator."""


class DegreeTooHighError(GLTSpectraError):
    """Trigonometric-polynomial degree too large for the requested size."""


class QuadratureUnderResolvedError(GLTSpectraError):
    """Doubling the quadrature resolution still changes the result."""


class LengthMismatchError(GLTSpectraError):
    """Two sample sets that must be compared have different lengths."""


class MissingVariableError(GLTSpectraError):
    """Symbol evaluation requires a variable that was not supplied."""


class IncompatibleDomainsError(GLTSpectraError):
    """Momentary-symbol operands cannot be combined."""


class UnsupportedAlgebraError(GLTSpectraError):
    """Corner parameters outside the nine tabulated tau algebras."""


class WrongNtError(GLTSpectraError):
    """Closed form only available for two time steps."""


class InvalidCaseError(GLTSpectraError):
    """Unknown scaling-regime case identifier."""


class OddNxError(GLTSpectraError):
    """Two-norm bounds require an even number of space intervals."""


class OrderOutOfRangeError(GLTSpectraError):
    """Fractional order outside (1, 2]."""


class GridNotNestedError(GLTSpectraError):
    """Expansion grids must be nested by successive doubling."""


class ExtrapolationOutOfRangeError(GLTSpectraError):
    """Interpolation query outside the (0, pi] angle range."""
