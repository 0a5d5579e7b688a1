"""SVG figures of a model with a region, its hull and its complement components."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.collections import PatchCollection  # noqa: E402
from matplotlib.patches import Circle, Rectangle  # noqa: E402

from .cellspace import canonical, dimension  # noqa: E402
from .regions import complement_split, in_family, solid_hull  # noqa: E402

THIN = 0.14

# layer name -> face color; drawn bottom to top
LAYERS = (
    ("space", "#e8e8e8"),
    ("infinity", "#4d4d4d"),
    ("unbounded-complement", "#a6cee3"),
    ("bounded-complement", "#fdbf6f"),
    ("hull", "#b2df8a"),
    ("set", "#1f4e9c"),
)


def cell_patch(c, color):
    """Pixel (x, y) is the unit square at ((x-1)/2, (y-1)/2); lower cells are thin."""
    if dimension(c) == 0:
        return Circle((c[0] / 2, c[1] / 2), THIN * 0.75, facecolor=color, edgecolor="none")
    spans = []
    for v in c:
        spans.append(((v - 1) / 2, 1.0) if v & 1 else (v / 2 - THIN / 2, THIN))
    (x0, w), (y0, h) = spans
    return Rectangle((x0, y0), w, h, facecolor=color, edgecolor="none")


def layers(model, A):
    A = frozenset(A)
    out = {"space": model.X, "infinity": model.infinity}
    if A and A != model.X:
        bounded, unbounded = complement_split(model, A)
        out["bounded-complement"] = frozenset().union(*bounded)
        out["unbounded-complement"] = frozenset().union(*unbounded)
        if in_family(model, A, "A*_c"):
            out["hull"] = solid_hull(model, A) - A
    out["set"] = A
    return out


def render_svg(model, A, path, title=""):
    plt.rcParams["svg.hashsalt"] = "solidtm"
    plt.rcParams["svg.fonttype"] = "none"
    fig, ax = plt.subplots(figsize=(0.6 * model.width + 1.5, 0.6 * model.height + 1.2))
    groups = layers(model, A)
    for name, color in LAYERS:
        cells = groups.get(name)
        if not cells:
            continue
        # pixels first so edges and vertices stay visible on top
        ordered = sorted(canonical(cells), key=lambda c: -dimension(c))
        coll = PatchCollection([cell_patch(c, color) for c in ordered], match_original=True)
        coll.set_gid(name)
        coll.set_label(name)
        ax.add_collection(coll)
    ax.set_xlim(-0.3, model.width + 0.3)
    ax.set_ylim(-0.3, model.height + 0.3)
    ax.set_aspect("equal")
    ax.set_xticks(range(model.width + 1))
    ax.set_yticks(range(model.height + 1))
    ax.tick_params(labelsize=7)
    if title:
        ax.set_title(title, fontsize=9)
    handles = [Rectangle((0, 0), 1, 1, facecolor=c) for n, c in LAYERS if groups.get(n)]
    labels = [n for n, c in LAYERS if groups.get(n)]
    ax.legend(handles, labels, loc="upper left", bbox_to_anchor=(1.01, 1), fontsize=7, frameon=False)
    fig.savefig(path, format="svg", bbox_inches="tight", metadata={"Date": None})
    plt.close(fig)
    return path
