"""Render the CSV-shaped artifacts to PNG files next to the delimited output."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def save_curve_figure(curve, path) -> None:
    """Curve in the complex plane plus the parameterization z(theta)."""
    thetas = [s.theta for s in curve.samples]
    xs = [s.tau * math.cos(s.theta) for s in curve.samples]
    ys = [s.tau * math.sin(s.theta) for s in curve.samples]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9.5, 4.2))
    ax1.plot(xs, ys, "-", color="tab:blue", lw=1.2)
    ax1.plot(xs, [-y for y in ys], "-", color="tab:blue", lw=0.8, alpha=0.45)
    ax1.plot([curve.t_a_limit], [0.0], "o", color="tab:red", ms=5,
             label="double-root point")
    for z in curve.spec.P.zeros:
        ax1.plot([float(z)], [0.0], "x", color="black", ms=6)
    for z in curve.spec.Q.zeros:
        ax1.plot([float(z)], [0.0], "+", color="tab:green", ms=8)
    ax1.axhline(0.0, color="gray", lw=0.5)
    ax1.set_xlabel("Re t")
    ax1.set_ylabel("Im t")
    ax1.set_title("curve and conjugate")
    ax1.legend(loc="best", fontsize=8)
    ax2.plot(thetas, [s.z for s in curve.samples], "-", color="tab:purple")
    ax2.axhline(curve.a_limit, color="tab:red", lw=0.8, ls="--",
                label="endpoint value")
    ax2.set_xlabel("theta")
    ax2.set_ylabel("z(theta)")
    ax2.set_title("parameterization")
    ax2.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_region_figure(rows, path) -> None:
    """Sign field of the weight over the sampled regions.

    rows: iterables of (re, im, weight, tag).
    """
    fig, axes = plt.subplots(1, 2, figsize=(9.5, 4.2))
    for ax, tag in zip(axes, ("sector", "semidisk")):
        pts = [(re, im, w) for re, im, w, t in rows if t == tag]
        if not pts:
            ax.set_visible(False)
            continue
        re, im, w = (np.array(col) for col in zip(*pts))
        lim = max(np.max(np.abs(w)), 1e-30)
        sc = ax.scatter(re, im, c=w, s=4, cmap="RdBu",
                        vmin=-lim, vmax=lim, rasterized=True)
        fig.colorbar(sc, ax=ax, shrink=0.85)
        ax.set_title(f"{tag}: weight sign field")
        ax.set_xlabel("Re t")
        ax.set_ylabel("Im t")
        ax.set_aspect("equal", adjustable="datalim")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_roots_figure(reports, a, path) -> None:
    """Roots of each generated polynomial against the interval endpoint."""
    fig, ax = plt.subplots(figsize=(7.5, 4.5))
    for report in reports:
        for w, flag in zip(report.roots, report.real_flags):
            color = "tab:blue" if flag else "tab:red"
            ax.plot([w.real], [report.m], ".", color=color, ms=4)
    ax.axvline(a, color="tab:green", lw=0.9, ls="--", label="interval endpoint")
    ax.set_xlabel("Re z")
    ax.set_ylabel("m")
    ax.set_title("roots by sequence index (red: classified non-real)")
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
