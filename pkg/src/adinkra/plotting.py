"""Matplotlib renderings written next to the text reports."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .graph import ColoredGraph, default_parity  # noqa: E402
from .representations import PALETTE, SemiMagicMatrix  # noqa: E402
from .structure import BicolorReport  # noqa: E402


def _layout(g: ColoredGraph) -> dict[int, tuple[float, float]]:
    if g.height is not None:
        levels = list(g.height)
    else:
        parity = default_parity(g)
        if parity is None:
            step = 2 * math.pi / g.n
            return {v: (math.cos(v * step), math.sin(v * step)) for v in g.vertices()}
        levels = [0 if p == "b" else 1 for p in parity]
    rows: dict[int, list[int]] = {}
    for v, h in zip(g.vertices(), levels):
        rows.setdefault(h, []).append(v)
    width = max(len(r) for r in rows.values())
    pos = {}
    for h, members in rows.items():
        offset = (width - len(members)) / 2
        for k, v in enumerate(members):
            pos[v] = (offset + k, float(h))
    return pos


def plot_adinkra(g: ColoredGraph, path, title: str | None = None) -> None:
    """Draw ``g`` as a Hasse diagram: levels bottom-up, open bosons, filled fermions, dashed signs."""
    pos = _layout(g)
    parity = default_parity(g)
    fig, ax = plt.subplots(figsize=(max(4, 0.8 * g.n ** 0.5 * 3), 4))
    for e in g.edges:
        (x1, y1), (x2, y2) = pos[e.u], pos[e.v]
        ax.plot(
            [x1, x2],
            [y1, y2],
            color=PALETTE[(e.color - 1) % len(PALETTE)],
            linestyle="--" if e.sign < 0 else "-",
            linewidth=1.5,
            zorder=1,
        )
    for v, (x, y) in pos.items():
        filled = parity is not None and parity[v - 1] == "f"
        ax.scatter([x], [y], s=160, facecolor="black" if filled else "white", edgecolor="black", zorder=2)
        ax.annotate(g.label(v), (x, y), textcoords="offset points", xytext=(7, 5), fontsize=8)
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_bicolor(report: BicolorReport, path) -> None:
    """Heat map of the ``m_ij`` table (diagonal left blank)."""
    N = report.colors
    grid = np.full((N, N), np.nan)
    for (i, j), m in report.m_table.items():
        grid[i - 1, j - 1] = grid[j - 1, i - 1] = m
    fig, ax = plt.subplots(figsize=(1 + 0.6 * N, 1 + 0.6 * N))
    im = ax.imshow(grid, cmap="viridis")
    for (i, j), m in report.m_table.items():
        for a, b in ((i, j), (j, i)):
            ax.text(b - 1, a - 1, str(m), ha="center", va="center", color="white", fontsize=8)
    ticks = range(N)
    ax.set_xticks(ticks, [str(t + 1) for t in ticks])
    ax.set_yticks(ticks, [str(t + 1) for t in ticks])
    ax.set_xlabel("color j")
    ax.set_ylabel("color i")
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_matrix(m: SemiMagicMatrix, path) -> None:
    fig, ax = plt.subplots(figsize=(4, 4))
    lim = max(1, m.colors)
    ax.imshow(m.entries, cmap="coolwarm", vmin=-lim, vmax=lim)
    k = 0
    for b in m.blocks[:-1]:
        k += b
        ax.axhline(k - 0.5, color="black", linewidth=0.8)
        ax.axvline(k - 0.5, color="black", linewidth=0.8)
    labels = [str(v) for v in m.order]
    ax.set_xticks(range(m.n), labels)
    ax.set_yticks(range(m.n), labels)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
