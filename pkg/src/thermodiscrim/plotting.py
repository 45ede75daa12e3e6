"""Render sweep results to figure files next to their CSV output.

Uses the non-interactive Agg backend; nothing here is needed for the numeric
library and the CLI only imports this module when a figure file is requested.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def render_series(columns, rows, x: str, y: str, series: str | None, path,
                  xlabel: str | None = None, ylabel: str | None = None,
                  logx: bool = False, title: str | None = None) -> None:
    """Line plot of y against x, one line per distinct value of ``series``."""
    idx = {name: i for i, name in enumerate(columns)}
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    if series is None:
        ax.plot([r[idx[x]] for r in rows], [r[idx[y]] for r in rows], lw=1.5)
    else:
        seen = []
        for row in rows:
            key = row[idx[series]]
            if key not in seen:
                seen.append(key)
        for key in seen:
            xs = [r[idx[x]] for r in rows if r[idx[series]] == key]
            ys = [r[idx[y]] for r in rows if r[idx[series]] == key]
            ax.plot(xs, ys, lw=1.5, label=f"{series} = {key:g}")
        ax.legend(frameon=False)
    if logx:
        ax.set_xscale("log")
    ax.set_xlabel(xlabel or x)
    ax.set_ylabel(ylabel or y)
    if title:
        ax.set_title(title)
    ax.spines["right"].set_visible(False)
    ax.spines["top"].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_heatmap(columns, rows, x: str, y: str, z: str, path,
                   xlabel: str | None = None, ylabel: str | None = None,
                   title: str | None = None) -> None:
    """Heat map of z over the (x, y) grid spanned by the rows."""
    idx = {name: i for i, name in enumerate(columns)}
    xs = sorted({r[idx[x]] for r in rows})
    ys = sorted({r[idx[y]] for r in rows})
    xpos = {v: i for i, v in enumerate(xs)}
    ypos = {v: i for i, v in enumerate(ys)}
    grid = [[float("nan")] * len(xs) for _ in ys]
    for r in rows:
        grid[ypos[r[idx[y]]]][xpos[r[idx[x]]]] = r[idx[z]]
    fig, ax = plt.subplots(figsize=(5.4, 4.4))
    mesh = ax.pcolormesh(xs, ys, grid, shading="nearest", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label=z)
    ax.set_xlabel(xlabel or x)
    ax.set_ylabel(ylabel or y)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
