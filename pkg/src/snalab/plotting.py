"""Matplotlib renderings of Hasse diagrams and congruence lattices.

Figures are written straight to files with the non-interactive Agg
backend; nothing here opens a window.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def layered_positions(heights: Sequence[int]) -> np.ndarray:
    """Centre each level horizontally, one unit between neighbours."""
    pos = np.zeros((len(heights), 2))
    levels: dict[int, list[int]] = {}
    for x, h in enumerate(heights):
        levels.setdefault(h, []).append(x)
    for h, xs in levels.items():
        for k, x in enumerate(xs):
            pos[x] = (k - (len(xs) - 1) / 2, h)
    return pos


def draw_hasse(ax, names: Sequence[str], covers: Iterable[tuple[int, int]], heights: Sequence[int],
               highlight: Iterable[int] = (), fontsize: float = 10):
    pos = layered_positions(heights)
    for a, b in covers:
        ax.plot(*pos[[a, b]].T, color="0.45", lw=1.0, zorder=1)
    marked = set(highlight)
    for x, nm in enumerate(names):
        box = dict(boxstyle="round,pad=0.25", fc="#fde9c9" if x in marked else "white",
                   ec="#b35900" if x in marked else "0.3", lw=0.8)
        ax.text(*pos[x], nm, ha="center", va="center", fontsize=fontsize, bbox=box, zorder=2)
    span = max(1.0, np.ptp(pos[:, 0]) if len(pos) else 1.0)
    ax.set_xlim(pos[:, 0].min() - 0.8, pos[:, 0].min() + span + 0.8)
    ax.set_ylim(-0.6, max(heights, default=0) + 0.6)
    ax.set_axis_off()
    return ax


def _covers_and_heights(order: np.ndarray):
    lt = order & ~np.eye(len(order), dtype=bool)
    cov = lt & ~((lt.astype(int) @ lt.astype(int)) > 0)
    heights = [0] * len(order)
    for x in sorted(range(len(order)), key=lambda x: lt[:, x].sum()):
        below = np.flatnonzero(cov[:, x])
        heights[x] = 1 + max(heights[b] for b in below) if len(below) else 0
    return [tuple(map(int, e)) for e in np.argwhere(cov)], heights


def hasse_figure(A, path, title: str | None = None, highlight: Iterable[int] = ()) -> Path:
    """Save the Hasse diagram of ``A`` (lattice, sr-lattice or SNA) to ``path``."""
    L = getattr(A, "lattice", A)
    h = L.heights()
    width = max(3.0, 1.3 * max(np.bincount(h)))
    fig, ax = plt.subplots(figsize=(width, 1.1 * (max(h) + 1) + 0.6))
    draw_hasse(ax, L.names, L.covers(), h, highlight, fontsize=9 if L.n > 12 else 10)
    ax.set_title(title or getattr(A, "name", None) or "", fontsize=11)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def congruence_figure(T, partitions, filters, path, title: str | None = None) -> Path:
    """The congruence lattice ordered by refinement, each node labelled by
    the class of 1 that determines it."""
    k = len(partitions)
    order = np.array([[partitions[i] <= partitions[j] for j in range(k)] for i in range(k)], dtype=bool)
    labels = ["{" + ",".join(F.names()) + "}" if len(F) <= 3 else f"|F|={len(F)}" for F in filters]
    covers, h = _covers_and_heights(order)
    fig, ax = plt.subplots(figsize=(max(3.0, 1.8 * max(np.bincount(h))), 1.1 * (max(h) + 1) + 0.6))
    draw_hasse(ax, labels, covers, h, fontsize=8)
    ax.set_title(title or "congruences", fontsize=11)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
