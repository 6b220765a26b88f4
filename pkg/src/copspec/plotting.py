"""Figure rendering for the report-producing CLI commands.

Figures are written next to the delimited outputs (JSON/CSV) and share
their basename.  matplotlib is imported lazily with the Agg backend so
that the data paths never require a display.
"""

from __future__ import annotations

import numpy as np


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def render_spectrum(samples, radius: float, title: str, path: str) -> None:
    """Scatter the spectral-set samples in the complex plane."""
    plt = _pyplot()
    pts = np.asarray(samples, dtype=complex)
    fig, ax = plt.subplots(figsize=(5.0, 5.0))
    ax.scatter(pts.real, pts.imag, s=12, color="tab:blue", zorder=3)
    limit = 1.25 * max(radius, 1e-3)
    ax.set_xlim(-limit, limit)
    ax.set_ylim(-limit, limit)
    ax.axhline(0.0, color="0.8", lw=0.8)
    ax.axvline(0.0, color="0.8", lw=0.8)
    ax.set_aspect("equal")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_pseudospectrum(re_grid, im_grid, sigma, overlay, title: str,
                          path: str) -> None:
    """Heat map of log10 of the smallest singular value over a rectangle,
    with the closed-form spectrum overlaid."""
    plt = _pyplot()
    sigma = np.asarray(sigma, dtype=float)
    floor = max(sigma[sigma > 0.0].min() if np.any(sigma > 0.0) else 1e-16, 1e-16)
    levels = np.log10(np.maximum(sigma, floor))
    fig, ax = plt.subplots(figsize=(6.0, 5.0))
    mesh = ax.pcolormesh(re_grid, im_grid, levels, shading="auto",
                         cmap="viridis")
    fig.colorbar(mesh, ax=ax, label="log10 sigma_min")
    pts = np.asarray(overlay, dtype=complex)
    ax.plot(pts.real, pts.imag, ".", color="white", ms=2.5,
            label="closed-form spectrum")
    ax.set_aspect("equal")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_title(title)
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
