"""Figure rendering for the CLI report commands.

Each function takes the already-computed rows of one CSV report and writes a
matplotlib figure next to it.  Rendering is file-only (Agg backend); the CSV
remains the primary, byte-stable artifact.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def _finish(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_norms_figure(rows, path):
    """Bounds and computed 2-norm against N_t, one panel per mesh ratio."""
    ratios = sorted({r["c_h"] for r in rows})
    fig, axes = plt.subplots(1, len(ratios), figsize=(4 * len(ratios), 3.2))
    if len(ratios) == 1:
        axes = [axes]
    for ax, ch in zip(axes, ratios):
        sub = sorted((r for r in rows if r["c_h"] == ch), key=lambda r: r["nt"])
        nts = [r["nt"] for r in sub]
        ax.semilogx(nts, [r["lower"] for r in sub], "v-", label="lower")
        ax.semilogx(nts, [r["norm2"] for r in sub], "o-", label="2-norm")
        ax.semilogx(nts, [r["upper"] for r in sub], "^-", label="upper")
        ax.semilogx(nts, [r["max_bound"] for r in sub], "k--", label="max")
        ax.set_title(f"c_h = {ch:g}")
        ax.set_xlabel("N_t")
    axes[0].set_ylabel("norm of scaled matrix")
    axes[0].legend(fontsize=8)
    _finish(fig, path)


def save_singvals_figure(rows, path, title=""):
    """Exact singular values with their two samplings, plus the error curves."""
    idx = [r["index"] for r in rows]
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6.4, 6.0), sharex=True)
    ax1.plot(idx, [r["sigma"] for r in rows], "o", ms=4, label="singular values")
    ax1.plot(idx, [r["momentary"] for r in rows], "*", ms=6,
             label="momentary sampling")
    ax1.plot(idx, [r["glt"] for r in rows], ".", ms=4, label="asymptotic sampling")
    ax1.set_ylabel("value")
    ax1.legend(fontsize=8)
    if title:
        ax1.set_title(title)
    ax2.semilogy(idx, [max(r["err_momentary"], 1e-18) for r in rows], "*-",
                 label="|momentary - sigma|")
    ax2.semilogy(idx, [max(r["err_glt"], 1e-18) for r in rows], ".-",
                 label="|asymptotic - sigma|")
    ax2.set_xlabel("index")
    ax2.set_ylabel("absolute error")
    ax2.legend(fontsize=8)
    _finish(fig, path)


def save_mae_figure(rows, path, title=""):
    """Eigenvalue approximations and their absolute errors."""
    data = [r for r in rows if isinstance(r["index"], int)]
    idx = [r["index"] for r in data]
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6.4, 6.0), sharex=True)
    ax1.plot(idx, [r["exact"] for r in data], "o", ms=3, label="eigenvalues")
    ax1.plot(idx, [r["glt"] for r in data], ".", ms=3, label="asymptotic")
    ax1.plot(idx, [r["momentary"] for r in data], "+", ms=4, label="momentary")
    ax1.plot(idx, [r["mae"] for r in data], "x", ms=3, label="expansion")
    ax1.set_ylabel("value")
    ax1.legend(fontsize=8)
    if title:
        ax1.set_title(title)
    for key, style in (("err_glt", ".-"), ("err_momentary", "+-"), ("err_mae", "x-")):
        ax2.semilogy(idx, [max(r[key], 1e-18) for r in data], style,
                     label=key, lw=0.8, ms=3)
    ax2.set_xlabel("index")
    ax2.set_ylabel("absolute error")
    ax2.legend(fontsize=8)
    _finish(fig, path)


def save_tau_figure(rows, path, title=""):
    idx = [r["j"] for r in rows]
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    ax.plot(idx, [r["lambda_dense"] for r in rows], "o", ms=4, label="eigensolver")
    ax.plot(idx, [r["lambda_sampled"] for r in rows], "x", ms=5,
            label="grid sampling")
    ax.set_xlabel("j")
    ax.set_ylabel("eigenvalue")
    if title:
        ax.set_title(title)
    ax.legend(fontsize=8)
    _finish(fig, path)


def save_dca_figure(rows, path, title=""):
    data = [r for r in rows if isinstance(r["index"], int)]
    idx = [r["index"] for r in data]
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6.4, 6.0), sharex=True)
    ax1.plot(idx, [r["eigenvalue"] for r in data], "o", ms=3, label="eigenvalues")
    ax1.plot(idx, [r["momentary"] for r in data], "x", ms=4, label="momentary")
    ax1.plot(idx, [r["glt"] for r in data], ".", ms=3, label="asymptotic")
    ax1.set_ylabel("value")
    ax1.legend(fontsize=8)
    if title:
        ax1.set_title(title)
    ax2.semilogy(idx, [max(r["err_momentary"], 1e-18) for r in data], "x-",
                 ms=3, lw=0.8, label="err_momentary")
    ax2.semilogy(idx, [max(r["err_glt"], 1e-18) for r in data], ".-",
                 ms=3, lw=0.8, label="err_glt")
    ax2.set_xlabel("index")
    ax2.set_ylabel("absolute error")
    ax2.legend(fontsize=8)
    _finish(fig, path)


def save_demos_figure(rows, path, title=""):
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    for case, marker in (("plain", "o"), ("weighted", "x")):
        sub = [r for r in rows if r["case"] == case]
        if not sub:
            continue
        ax.plot([r["j"] for r in sub], [r["modulus_perturbed"] for r in sub],
                marker, ms=3, label=f"{case}, perturbed")
        ax.plot([r["j"] for r in sub], [r["modulus_unperturbed"] for r in sub],
                ".", ms=2, label=f"{case}, unperturbed")
    ax.set_xlabel("j")
    ax.set_ylabel("eigenvalue modulus")
    if title:
        ax.set_title(title)
    ax.legend(fontsize=8)
    _finish(fig, path)
