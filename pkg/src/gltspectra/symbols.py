"""Momentary-symbol calculus.

A momentary symbol refines the asymptotic (GLT) symbol of a matrix-sequence
by keeping the vanishing-scale terms at finite n:

    f_n = f_0 + sum_j c_n^(j) * f_j,        c_n^(0) = 1,

where each scaling sequence ``c_n^(j)`` vanishes faster the larger its
declared order.  Terms are separable products ``a_j(x) * f_j(theta)`` (or
``f_j(theta, xi)`` for two-level sequences); the order-0 term is the GLT
symbol and the calculus is closed under sums, products and scalings.

The module also houses the finite-difference diffusion-convection-advection
assembly that motivates momentary symbols, and the rank-one-perturbed shift
matrices demonstrating eigenvalue sensitivity of non-normal sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    IncompatibleDomainsError,
    InvalidCaseError,
    MissingVariableError,
)
from .structured import (
    FourierSymbol,
    backward_difference_symbol,
    constant_symbol,
    diagonal_sampling,
    imaginary_sine_symbol,
    laplacian_symbol,
    toeplitz,
)


@dataclass(frozen=True)
class ScalingSequence:
    """A positive sequence ``n -> c_n`` with a declared decay order.

    ``order`` is the sort key of the momentary-term list; a term of higher
    order must vanish relative to every lower-order term (checked by
    :meth:`MomentarySymbol.validate`, not symbolically).
    """

    fn: Callable[[int], float]
    order: float
    label: str = ""

    def __call__(self, n: int) -> float:
        v = float(self.fn(n))
        if not v > 0.0:
            raise ValueError(f"scaling {self.label or self.order} must be positive")
        return v

    def __mul__(self, other: "ScalingSequence") -> "ScalingSequence":
        f, g = self.fn, other.fn
        return ScalingSequence(lambda n: float(f(n)) * float(g(n)),
                               self.order + other.order,
                               f"{self.label}*{other.label}")


UNIT_SCALING = ScalingSequence(lambda n: 1.0, 0.0, "1")


def mesh_power(exponent: float, shift: int = 0, coefficient: float = 1.0,
               label: str = "") -> ScalingSequence:
    """Scaling ``coefficient * h**exponent`` with ``h = 1/(n + shift)``."""
    if exponent == 0.0 and coefficient == 1.0:
        return UNIT_SCALING
    return ScalingSequence(
        lambda n: coefficient * (1.0 / (n + shift)) ** exponent,
        exponent, label or f"h^{exponent:g}")


def constant_scaling(value: float, order: float, label: str = "") -> ScalingSequence:
    """A constant treated as vanishing of the given order (regime label)."""
    return ScalingSequence(lambda n: value, order, label or f"{value:g}")


class SymbolTerm:
    """One separable momentary term: symbol part times optional x-factor.

    ``variables`` declares which Fourier variables the symbol part consumes,
    a subset of ``("theta", "xi")``.
    """

    def __init__(self, fn, variables=("theta",), x_factor: Callable | None = None,
                 label: str = ""):
        self.fn = fn
        self.variables = tuple(variables)
        if not set(self.variables) <= {"theta", "xi"}:
            raise ValueError(f"unknown variables {self.variables}")
        self.x_factor = x_factor
        self.label = label

    def evaluate(self, theta=None, xi=None, x=None):
        args = []
        for name, val in (("theta", theta), ("xi", xi)):
            if name in self.variables:
                if val is None:
                    raise MissingVariableError(f"term {self.label!r} needs {name}")
                args.append(np.asarray(val))
        out = np.asarray(self.fn(*args), dtype=complex)
        if self.x_factor is not None:
            if x is None:
                raise MissingVariableError(f"term {self.label!r} needs x")
            out = out * np.asarray(self.x_factor(np.asarray(x)), dtype=complex)
        return out

    __call__ = evaluate

    def __mul__(self, other: "SymbolTerm") -> "SymbolTerm":
        if not isinstance(other, SymbolTerm):
            raise IncompatibleDomainsError(f"cannot multiply term by {other!r}")
        if self.variables == other.variables == ("theta",) and \
                isinstance(self.fn, FourierSymbol) and isinstance(other.fn, FourierSymbol):
            fn = self.fn * other.fn
            variables = ("theta",)
        else:
            f, g = self.fn, other.fn
            variables = tuple(dict.fromkeys(self.variables + other.variables))
            mine, theirs = self.variables, other.variables

            def fn(*args, _f=f, _g=g, _vars=variables, _a=mine, _b=theirs):
                lookup = dict(zip(_vars, args))
                return (np.asarray(_f(*[lookup[v] for v in _a]), dtype=complex)
                        * np.asarray(_g(*[lookup[v] for v in _b]), dtype=complex))

        xf = None
        if self.x_factor is not None and other.x_factor is not None:
            a, b = self.x_factor, other.x_factor
            xf = lambda x: np.asarray(a(x)) * np.asarray(b(x))
        else:
            xf = self.x_factor or other.x_factor
        return SymbolTerm(fn, variables, xf, f"({self.label}*{other.label})")

    def __repr__(self):
        return f"SymbolTerm({self.label or self.variables})"


class MomentarySymbol:
    """Ordered list of (scaling, term) pairs, lowest decay order first."""

    def __init__(self, terms):
        terms = list(terms)
        if not terms:
            raise ValueError("momentary symbol needs at least one term")
        self.terms = tuple(sorted(terms, key=lambda st: st[0].order))

    def evaluate(self, n: int, theta=None, xi=None, x=None):
        total = None
        for scaling, term in self.terms:
            piece = scaling(n) * term.evaluate(theta=theta, xi=xi, x=x)
            total = piece if total is None else total + piece
        return total

    def validate(self, sizes=(100, 1000, 10000)) -> None:
        """Check the declared ordering: higher-order scalings vanish relative
        to lower ones monotonically along ``sizes``."""
        for i in range(len(self.terms) - 1):
            s_low, _ = self.terms[i]
            s_high, _ = self.terms[i + 1]
            if s_high.order == s_low.order:
                continue
            ratios = [s_high(n) / s_low(n) for n in sizes]
            if not all(b < a for a, b in zip(ratios, ratios[1:])):
                raise ValueError(
                    f"scaling order {s_high.order} does not vanish against "
                    f"{s_low.order}: ratios {ratios}")

    def __repr__(self):
        return f"MomentarySymbol({[t.label or s.order for s, t in self.terms]})"


def momentary_evaluate(sym: MomentarySymbol, n: int, theta=None, xi=None, x=None):
    """Evaluate ``f_n = sum_j c_n^(j) f_j`` at the given point(s)."""
    return sym.evaluate(n, theta=theta, xi=xi, x=x)


def glt_limit(sym: MomentarySymbol, check_convergence: bool = True,
              sizes=(100, 1000, 10000)) -> SymbolTerm:
    """The order-0 term (constant scaling): the GLT symbol of the sequence.

    With ``check_convergence`` the uniform convergence ``f_n -> f_0`` is
    asserted numerically on a coarse grid along ``sizes``.
    """
    scaling, term = sym.terms[0]
    if abs(scaling(max(sizes)) - 1.0) > 1e-9:
        raise ValueError("leading momentary term must carry the unit scaling")
    if check_convergence and len(sym.terms) > 1:
        theta = np.linspace(-np.pi, np.pi, 17)
        needs_xi = any("xi" in t.variables for _, t in sym.terms)
        needs_x = any(t.x_factor is not None for _, t in sym.terms)
        kw = {
            "theta": theta,
            "xi": np.linspace(-np.pi, np.pi, 17) if needs_xi else None,
            "x": np.full(theta.shape, 0.5) if needs_x else None,
        }
        f0 = term.evaluate(**kw)
        devs = [np.abs(sym.evaluate(n, **kw) - f0).max() for n in sizes]
        # constant scalings (fixed-regime symbols) keep the deviation flat
        if not all(b <= a * (1.0 + 1e-12) + 1e-15 for a, b in zip(devs, devs[1:])):
            raise ValueError(f"momentary symbol does not converge to its "
                             f"leading term: deviations {devs}")
    return term


def momentary_combine(a: MomentarySymbol, b, op: str) -> MomentarySymbol:
    """Combine two momentary symbols (``add``/``multiply``) or rescale one
    (``scale``, with ``b`` a scalar or a :class:`ScalingSequence`)."""
    if op == "add":
        if not isinstance(b, MomentarySymbol):
            raise IncompatibleDomainsError("add needs two momentary symbols")
        return MomentarySymbol(list(a.terms) + list(b.terms))
    if op == "multiply":
        if not isinstance(b, MomentarySymbol):
            raise IncompatibleDomainsError("multiply needs two momentary symbols")
        terms = []
        for sa, ta in a.terms:
            for sb, tb in b.terms:
                terms.append((sa * sb, ta * tb))
        return MomentarySymbol(terms)
    if op == "scale":
        if isinstance(b, ScalingSequence):
            factor = b
        elif np.isscalar(b):
            factor = ScalingSequence(lambda n: float(b), 0.0, f"{b}")
        else:
            raise IncompatibleDomainsError(
                "scale needs a scalar or a ScalingSequence")
        return MomentarySymbol([(s * factor, t) for s, t in a.terms])
    raise ValueError(f"unknown op {op!r}")


# -- finite-difference diffusion-convection-advection assembly ----------------


def assemble_dca(a: Callable, b: Callable, c: Callable, f: Callable, n: int,
                 alpha: float = 0.0, beta: float = 0.0):
    """Assemble the second-order FD system for
    ``-(a u')' + b u' + c u = f`` on (0, 1) with Dirichlet data alpha, beta.

    Returns ``(X, rhs)`` where ``X`` is the sum of the a-weighted second
    difference (coefficient sampled at half-integer nodes), the centered
    first difference scaled by ``h/2``, and ``h**2`` times the diagonal
    sampling of ``c``; ``rhs`` carries ``h**2 f`` plus the boundary folds.
    """
    h = 1.0 / (n + 1)
    half = np.array([a(k * h / 2.0) for k in range(0, 2 * n + 2)], dtype=float)
    # half[k] = a(x_{k/2}); the assembly uses odd indices 1, 3, ..., 2n+1
    ao = np.array([half[2 * j + 1] for j in range(0, n + 1)])  # a_1, a_3, ...
    bj = np.array([b(j * h) for j in range(1, n + 1)], dtype=float)
    cj = np.array([c(j * h) for j in range(1, n + 1)], dtype=float)
    fj = np.array([f(j * h) for j in range(1, n + 1)], dtype=float)

    X = np.zeros((n, n))
    for j in range(n):
        X[j, j] = ao[j] + ao[j + 1] + h * h * cj[j]
        if j + 1 < n:
            X[j, j + 1] = -ao[j + 1] + (h / 2.0) * bj[j]
            X[j + 1, j] = -ao[j + 1] - (h / 2.0) * bj[j + 1]

    rhs = h * h * fj
    rhs[0] += ao[0] * alpha + (h / 2.0) * bj[0] * alpha
    rhs[-1] += ao[-1] * beta - (h / 2.0) * bj[-1] * beta
    return X, rhs


def dca_momentary(a: Callable, b: Callable, c: Callable, n: int) -> MomentarySymbol:
    """Momentary symbol of the assembled system:
    ``a(x)(2-2cos theta) + h * i b(x) sin theta + h^2 c(x)``, h = 1/(n+1)."""
    terms = [(UNIT_SCALING, SymbolTerm(laplacian_symbol(), ("theta",), a, "a*(2-2cos)"))]
    if any(b(t) != 0.0 for t in (0.25, 0.5, 0.75)):
        terms.append((mesh_power(1.0, shift=1),
                      SymbolTerm(imaginary_sine_symbol(), ("theta",), b, "b*i sin")))
    if any(c(t) != 0.0 for t in (0.25, 0.5, 0.75)):
        terms.append((mesh_power(2.0, shift=1),
                      SymbolTerm(constant_symbol(1.0), ("theta",), c, "c")))
    return MomentarySymbol(terms)


# -- non-normal demonstrators -------------------------------------------------


def perturbed_shift(n: int, alpha: float, weight: Callable | None = None) -> np.ndarray:
    """Forward-shift Toeplitz matrix plus the corner perturbation
    ``n**(-alpha)`` at entry (1, n), optionally left-weighted by a diagonal
    sampling.

    The unperturbed matrix is nilpotent (all eigenvalues zero); the
    perturbed one has eigenvalue moduli exactly ``n**(-alpha/n)`` in the
    unweighted case, however small the perturbation.
    """
    if not alpha > 0:
        raise ValueError("alpha must be positive")
    shift = FourierSymbol(coefficients={1: 1.0}, label="e^(i th)")
    m = toeplitz(shift, n)
    if weight is not None:
        m = diagonal_sampling(weight, n) @ m
    m[0, n - 1] += n ** (-float(alpha))
    return m


# -- space-time regime symbols (built here, consumed by the spacetime module) --


def spacetime_case_symbol(c_h: float, case: int) -> MomentarySymbol:
    """Momentary symbol of the scaled space-time matrix in the given
    mesh-ratio regime.

    Case 1 (``c_h -> inf``, matrix scaled by h_t): leading term
    ``1 - exp(i theta)`` plus the vanishing ``c_h**-1 (2-2cos xi)``.
    Case 2 (``c_h -> 0``, matrix scaled by h_x^2): leading term
    ``2 - 2cos xi`` plus the vanishing ``c_h (1 - exp(i theta))``.
    Case 3 (``c_h`` constant): single term
    ``c_h (1 - exp(i theta)) + (2 - 2cos xi)``.
    """
    if not c_h > 0:
        raise ValueError("c_h must be positive")
    f_time = SymbolTerm(backward_difference_symbol(), ("theta",), label="1-e^(i th)")
    f_space = SymbolTerm(laplacian_symbol(), ("xi",), label="2-2cos xi")
    if case == 1:
        return MomentarySymbol([
            (UNIT_SCALING, f_time),
            (constant_scaling(1.0 / c_h, 1.0, "1/c_h"), f_space),
        ])
    if case == 2:
        return MomentarySymbol([
            (UNIT_SCALING, f_space),
            (constant_scaling(c_h, 1.0, "c_h"), f_time),
        ])
    if case == 3:
        def fn(theta, xi, _c=c_h):
            return (_c * (1.0 - np.exp(1j * np.asarray(theta)))
                    + 2.0 - 2.0 * np.cos(np.asarray(xi)))

        return MomentarySymbol([
            (UNIT_SCALING, SymbolTerm(fn, ("theta", "xi"),
                                      label="c(1-e^(i th))+2-2cos xi")),
        ])
    raise InvalidCaseError(f"case must be 1, 2 or 3, got {case}")
