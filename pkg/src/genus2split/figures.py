"""Rendering sampled invariant points to image files.

Invariant values span many orders of magnitude, so coordinates are drawn on
a sign-preserving log scale before plotting.
"""

from __future__ import annotations

import math


def _symlog(x):
    return math.copysign(math.log10(1.0 + abs(x)), x)


def render_point_cloud(points, path, labels=("i1", "i2", "i3"), title="invariant samples"):
    """Scatter a list of (x, y, z) float triples into a 3D figure at `path`."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig = plt.figure(figsize=(7, 6))
    ax = fig.add_subplot(projection="3d")
    xs = [_symlog(p[0]) for p in points]
    ys = [_symlog(p[1]) for p in points]
    zs = [_symlog(p[2]) for p in points]
    ax.scatter(xs, ys, zs, s=8, depthshade=True)
    ax.set_xlabel(f"symlog {labels[0]}")
    ax.set_ylabel(f"symlog {labels[1]}")
    ax.set_zlabel(f"symlog {labels[2]}")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
