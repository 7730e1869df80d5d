"""Command-line front end.

Every subcommand computes one report as comma-separated text with a header
row, fixed formatting and deterministic ordering, so identical invocations
produce byte-identical output.  Table-reproduction commands print fixed
8-decimal values; figure-dataset commands print 15-significant-digit
scientific values.  With ``--plot`` a matplotlib rendering of the report is
written next to the delimited output.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .errors import GLTSpectraError
from . import numerics, spacetime, tau
from .fractional import DistributedOrderSpec, error_report
from .symbols import assemble_dca, dca_momentary, perturbed_shift
from .spacetime import SpaceTimeSystem

_NORMS_DEFAULT_NT = "1,10,100,1000"
_NORMS_DEFAULT_CH = "1/8,1,8"


def _ratio(text: str) -> float:
    """Parse a float that may be written as a fraction like ``1/8``."""
    if "/" in text:
        num, den = text.split("/", 1)
        return float(num) / float(den)
    return float(text)


def _ratio_list(text: str):
    return [_ratio(t) for t in text.split(",") if t]


def _int_list(text: str):
    return [int(t) for t in text.split(",") if t]


def _sci(v: float) -> str:
    return f"{v:.14e}"


def _fixed(v: float) -> str:
    return f"{v:.8f}"


def _write_output(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _plot_path(args) -> str | None:
    if args.plot is None:
        return None
    if args.plot != "auto":
        return args.plot
    if args.out is None:
        raise GLTSpectraError("--plot without a path requires --out")
    return str(Path(args.out).with_suffix(".png"))


# -- subcommands ---------------------------------------------------------------


def cmd_spacetime_norms(args) -> int:
    nts = args.nt
    chs = args.ch
    nx = args.nx
    if nx % 2 != 0 or nx < 2:
        raise GLTSpectraError(f"spacetime-norms needs an even nx >= 2, got {nx}")
    if args.bc != "periodic":
        raise GLTSpectraError("spacetime-norms is defined for periodic space")
    lines = ["N_t,c_h,lower,norm2,upper,max_bound"]
    rows = []
    for ch in chs:
        for nt in nts:
            if not ch > 0:
                print(f"spacetime-norms: skipping c_h={ch:g} (c_h must be "
                      f"positive)", file=sys.stderr)
                lines.append(f"{nt},{_fixed(ch)},nan,nan,nan,nan")
                continue
            s = SpaceTimeSystem.from_ratio(nt, nx, ch)
            lower, upper, max_bound = spacetime.two_norm_bounds(s)
            norm2 = spacetime.two_norm(s)
            rows.append({"nt": nt, "c_h": ch, "lower": lower, "norm2": norm2,
                         "upper": upper, "max_bound": max_bound})
            lines.append(f"{nt},{_fixed(ch)},{_fixed(lower)},{_fixed(norm2)},"
                         f"{_fixed(upper)},{_fixed(max_bound)}")
    _write_output("\n".join(lines) + "\n", args.out)
    figure = _plot_path(args)
    if figure and rows:
        from . import plots
        plots.save_norms_figure(rows, figure)
    return 0


def cmd_spacetime_singvals(args) -> int:
    s = SpaceTimeSystem.from_ratio(args.nt, args.nx, args.ch, bc=args.bc)
    sigma = spacetime.exact_singular_values(s)
    momentary = spacetime.momentary_singular_approx(s)
    glt = spacetime.glt_singular_samples(s)
    lines = ["index,sigma,momentary,glt,err_momentary,err_glt"]
    rows = []
    for j in range(s.size):
        em = abs(momentary[j] - sigma[j])
        eg = abs(glt[j] - sigma[j])
        rows.append({"index": j + 1, "sigma": sigma[j], "momentary": momentary[j],
                     "glt": glt[j], "err_momentary": em, "err_glt": eg})
        lines.append(f"{j + 1},{_sci(sigma[j])},{_sci(momentary[j])},"
                     f"{_sci(glt[j])},{_sci(em)},{_sci(eg)}")
    _write_output("\n".join(lines) + "\n", args.out)
    figure = _plot_path(args)
    if figure:
        from . import plots
        plots.save_singvals_figure(
            rows, figure, title=f"N_t={s.nt}, N_x={s.nx}, c_h={s.c_h:g}")
    return 0


def cmd_fractional_mae(args) -> int:
    ell = args.n if args.ell == "n" else int(args.ell)
    spec = DistributedOrderSpec(ell=ell)
    report = error_report(spec, args.n, args.nu, args.n1)
    lines = ["index,exact,glt,momentary,mae,err_glt,err_momentary,err_mae"]
    rows = []
    e_glt = report.errors("glt")
    e_mom = report.errors("momentary")
    e_mae = report.errors("mae")
    for j in range(args.n):
        rows.append({"index": j + 1, "exact": report.exact[j],
                     "glt": report.glt[j], "momentary": report.momentary[j],
                     "mae": report.mae[j], "err_glt": e_glt[j],
                     "err_momentary": e_mom[j], "err_mae": e_mae[j]})
        lines.append(
            f"{j + 1},{_sci(report.exact[j])},{_sci(report.glt[j])},"
            f"{_sci(report.momentary[j])},{_sci(report.mae[j])},"
            f"{_sci(e_glt[j])},{_sci(e_mom[j])},{_sci(e_mae[j])}")
    for stat in ("max", "mean", "mean_interior95"):
        vals = [report.summary(w)[stat] for w in ("glt", "momentary", "mae")]
        lines.append(f"{stat},,,,,{_sci(vals[0])},{_sci(vals[1])},{_sci(vals[2])}")
    _write_output("\n".join(lines) + "\n", args.out)
    figure = _plot_path(args)
    if figure:
        from . import plots
        plots.save_mae_figure(
            rows, figure,
            title=f"ell={args.ell}, n={args.n}, nu={args.nu}, n1={args.n1}")
    return 0


def cmd_tau_bounds(args) -> int:
    spec = tau.TauSpec(a=args.a, b=args.b, eps=args.eps, phi=args.phi, n=args.n)
    theta = tau.tau_grid(args.eps, args.phi, args.n)
    sampled = np.sort(tau.tau_eigenvalues(spec))
    dense = numerics.symmetric_eigenvalues(tau.tau_matrix(spec))
    lines = ["j,theta,lambda_sampled,lambda_dense,abs_err"]
    rows = []
    order = np.argsort(spec.symbol(theta), kind="stable")
    theta_sorted = theta[order]
    worst = 0.0
    for j in range(args.n):
        err = abs(sampled[j] - dense[j])
        worst = max(worst, err)
        rows.append({"j": j + 1, "theta": theta_sorted[j],
                     "lambda_sampled": sampled[j], "lambda_dense": dense[j]})
        lines.append(f"{j + 1},{_sci(theta_sorted[j])},{_sci(sampled[j])},"
                     f"{_sci(dense[j])},{_sci(err)}")
    _write_output("\n".join(lines) + "\n", args.out)
    figure = _plot_path(args)
    if figure:
        from . import plots
        plots.save_tau_figure(
            rows, figure,
            title=f"eps={args.eps}, phi={args.phi}, a={args.a:g}, b={args.b:g}")
    if worst > args.tol:
        raise GLTSpectraError(
            f"grid sampling deviates from the eigensolver by {worst:.3e} "
            f"(tolerance {args.tol:.1e})")
    return 0


def cmd_dca(args) -> int:
    one = lambda x: 1.0
    n = args.n
    x_mat, _ = assemble_dca(one, one, one, one, n)
    sym = dca_momentary(one, one, one, n)
    eig = np.sort(numerics.general_eigenvalues(x_mat).real)
    theta = np.arange(1, n + 1) * np.pi / (n + 1)
    momentary = np.sort(np.abs(sym.evaluate(n, theta=theta, x=np.full(n, 0.5))))
    glt = np.sort(2.0 - 2.0 * np.cos(theta))
    lines = ["index,theta,eigenvalue,momentary,glt,err_momentary,err_glt"]
    rows = []
    for j in range(n):
        em = abs(momentary[j] - eig[j])
        eg = abs(glt[j] - eig[j])
        rows.append({"index": j + 1, "eigenvalue": eig[j],
                     "momentary": momentary[j], "glt": glt[j],
                     "err_momentary": em, "err_glt": eg})
        lines.append(f"{j + 1},{_sci(theta[j])},{_sci(eig[j])},"
                     f"{_sci(momentary[j])},{_sci(glt[j])},{_sci(em)},{_sci(eg)}")
    for name, errs in (("mean_momentary", np.abs(momentary - eig)),
                       ("mean_glt", np.abs(glt - eig))):
        lines.append(f"{name},,,,,{_sci(float(errs.mean()))},")
    _write_output("\n".join(lines) + "\n", args.out)
    figure = _plot_path(args)
    if figure:
        from . import plots
        plots.save_dca_figure(rows, figure, title=f"n={n}, a=b=c=1")
    return 0


def cmd_demos(args) -> int:
    n = args.n
    alpha = args.alpha
    weight = lambda x: 1.0 + x
    lines = ["case,j,modulus_unperturbed,modulus_perturbed"]
    rows = []
    for case, w in (("plain", None), ("weighted", weight)):
        shift = perturbed_shift(n, alpha, weight=w)
        base = shift.copy()
        base[0, n - 1] -= n ** (-float(alpha))
        mod_base = np.sort(np.abs(numerics.general_eigenvalues(base)))
        mod_pert = np.sort(np.abs(numerics.general_eigenvalues(shift)))
        for j in range(n):
            rows.append({"case": case, "j": j + 1,
                         "modulus_unperturbed": mod_base[j],
                         "modulus_perturbed": mod_pert[j]})
            lines.append(f"{case},{j + 1},{_sci(mod_base[j])},{_sci(mod_pert[j])}")
    _write_output("\n".join(lines) + "\n", args.out)
    figure = _plot_path(args)
    if figure:
        from . import plots
        plots.save_demos_figure(rows, figure, title=f"n={n}, alpha={alpha:g}")
    return 0


# -- parser --------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--plot", nargs="?", const="auto", default=None,
                   metavar="PATH", help="also render a figure (default: "
                   "next to --out with .png suffix)")
    p.add_argument("--tol", type=float, default=1e-10,
                   help="verification tolerance where applicable")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gltspectra",
        description="Structured-matrix spectral reports: space-time norms and "
                    "singular values, corner-modified tridiagonal grids, "
                    "momentary-symbol demos, fractional eigenvalue expansions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spacetime-norms",
                       help="2-norm bounds table of the scaled space-time matrix")
    p.add_argument("--nt", type=_int_list, default=_int_list(_NORMS_DEFAULT_NT),
                   help=f"comma list of time sizes (default {_NORMS_DEFAULT_NT})")
    p.add_argument("--ch", type=_ratio_list,
                   default=_ratio_list(_NORMS_DEFAULT_CH),
                   help=f"comma list of mesh ratios (default {_NORMS_DEFAULT_CH})")
    p.add_argument("--nx", type=int, default=8, help="even space size (default 8)")
    p.add_argument("--bc", choices=("periodic", "dirichlet"), default="periodic")
    _add_common(p)
    p.set_defaults(func=cmd_spacetime_norms)

    p = sub.add_parser("spacetime-singvals",
                       help="exact singular values vs momentary/asymptotic samplings")
    p.add_argument("--nt", type=int, required=True)
    p.add_argument("--nx", type=int, required=True)
    p.add_argument("--ch", type=_ratio, default=1.0)
    p.add_argument("--bc", choices=("periodic", "dirichlet"), default="periodic")
    _add_common(p)
    p.set_defaults(func=cmd_spacetime_singvals)

    p = sub.add_parser("fractional-mae",
                       help="eigenvalue approximations of the distributed-order sum")
    p.add_argument("--ell", default="2",
                   help="number of fractional orders, or 'n' to couple it to --n")
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--nu", type=int, default=4)
    p.add_argument("--n1", type=int, default=10)
    _add_common(p)
    p.set_defaults(func=cmd_fractional_mae)

    p = sub.add_parser("tau-bounds",
                       help="tabulated-grid eigenvalues vs the dense eigensolver")
    p.add_argument("--eps", type=int, default=0)
    p.add_argument("--phi", type=int, default=0)
    p.add_argument("--a", type=float, default=2.0)
    p.add_argument("--b", type=float, default=-1.0)
    p.add_argument("--n", type=int, default=8)
    _add_common(p)
    p.set_defaults(func=cmd_tau_bounds)

    p = sub.add_parser("dca-assemble",
                       help="diffusion-convection-advection spectrum vs samplings")
    p.add_argument("--n", type=int, default=100)
    _add_common(p)
    p.set_defaults(func=cmd_dca)

    p = sub.add_parser("example-demos",
                       help="eigenvalue moduli of the rank-one-perturbed shifts")
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--alpha", type=float, default=1.0)
    _add_common(p)
    p.set_defaults(func=cmd_demos)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GLTSpectraError, ValueError, OSError) as exc:
        print(f"gltspectra {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
