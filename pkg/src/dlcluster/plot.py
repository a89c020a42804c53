"""Deterministic SVG scatter plots of 2-D clusterings, with a legend and
a pie inset showing cluster proportions."""

import math

import numpy as np

PALETTE = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
    "#aec7e8", "#ffbb78", "#98df8a", "#ff9896", "#c5b0d5",
]

WIDTH, HEIGHT = 760, 560
PLOT_W = 560  # the right margin holds the legend and the pie inset


def _color(j):
    return PALETTE[j % len(PALETTE)]


def _pie_wedge(cx, cy, r, a0, a1, color):
    x0, y0 = cx + r * math.cos(a0), cy + r * math.sin(a0)
    x1, y1 = cx + r * math.cos(a1), cy + r * math.sin(a1)
    large = 1 if (a1 - a0) > math.pi else 0
    return (f'<path d="M{cx:.2f},{cy:.2f} L{x0:.2f},{y0:.2f} '
            f'A{r:.2f},{r:.2f} 0 {large} 1 {x1:.2f},{y1:.2f} Z" '
            f'fill="{color}"/>')


def scatter_svg(points, labels):
    """Render the clustered scatter as an SVG document string."""
    points = np.asarray(points, dtype=float)
    labels = np.asarray(labels, dtype=int)
    if points.ndim != 2 or points.shape[1] != 2:
        raise ValueError(f"plotting needs 2-D data, got shape {points.shape}")
    if labels.shape != (points.shape[0],):
        raise ValueError("labels must have one entry per point")

    lo = points.min(axis=0)
    hi = points.max(axis=0)
    span = np.maximum(hi - lo, 1e-9)

    def sx(x):
        return 30 + (x - lo[0]) / span[0] * (PLOT_W - 60)

    def sy(y):
        return HEIGHT - 30 - (y - lo[1]) / span[1] * (HEIGHT - 60)

    clusters = np.unique(labels)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" '
           f'width="{WIDTH}" height="{HEIGHT}">',
           f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>']
    for x, y, lab in zip(points[:, 0], points[:, 1], labels):
        out.append(f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="2" '
                   f'fill="{_color(int(lab))}"/>')

    # Legend.
    for i, j in enumerate(clusters):
        y = 30 + 22 * i
        out.append(f'<rect x="{PLOT_W + 20}" y="{y - 10}" width="12" '
                   f'height="12" fill="{_color(int(j))}"/>')
        out.append(f'<text x="{PLOT_W + 38}" y="{y}" font-size="13" '
                   f'font-family="sans-serif">cluster {int(j)}</text>')

    # Pie inset of cluster proportions.
    cx, cy, r = PLOT_W + 110, HEIGHT - 120, 70
    total = len(labels)
    angle = -math.pi / 2
    for j in clusters:
        frac = int(np.sum(labels == j)) / total
        a1 = angle + frac * 2 * math.pi
        if frac >= 1.0:
            out.append(f'<circle cx="{cx}" cy="{cy}" r="{r}" '
                       f'fill="{_color(int(j))}"/>')
        else:
            out.append(_pie_wedge(cx, cy, r, angle, a1, _color(int(j))))
        angle = a1
    out.append("</svg>")
    return "\n".join(out) + "\n"


def save_scatter_svg(points, labels, path):
    with open(path, "w") as fh:
        fh.write(scatter_svg(points, labels))
