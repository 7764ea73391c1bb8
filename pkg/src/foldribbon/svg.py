"""Deterministic SVG pictures of folded ribbons.

Faces are painted bottom to top in an order consistent with the layering,
creases are dashed and the centerline is broken where it passes under
another strand.
"""
from dataclasses import dataclass
import heapq
import math

from .diagram import find_crossings

PALETTE = ("#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee", "#aa3377")


@dataclass(frozen=True)
class RenderSpec:
    width: int = 600
    height: int = 600
    margin: float = 20.0
    stroke: float = 2.0
    crease_stroke: float = 1.0
    gap: float = 0.3
    opacity: float = 0.35

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("canvas size must be positive")
        if not 0 <= self.opacity <= 1:
            raise ValueError("opacity must lie in [0, 1]")
        if not 0 < self.gap < 0.5:
            raise ValueError("gap fraction must lie in (0, 0.5)")
        if self.margin < 0:
            raise ValueError("margin must be non-negative")


def paint_order(num_faces, layering):
    """Faces bottom first; ties and cycles fall back to the smallest index."""
    below = {f: set() for f in range(num_faces)}  # faces that must be drawn before f
    for (a, b), top in layering.items():
        bottom = b if top == a else a
        below[top].add(bottom)
    indeg = {f: len(below[f]) for f in below}
    above = {f: [] for f in below}
    for f, bs in below.items():
        for b in bs:
            above[b].append(f)
    ready = [f for f in below if indeg[f] == 0]
    heapq.heapify(ready)
    order, done = [], set()
    while len(order) < num_faces:
        if not ready:
            f = min(set(below) - done)
        else:
            f = heapq.heappop(ready)
            if f in done:
                continue
        done.add(f)
        order.append(f)
        for g in above[f]:
            indeg[g] -= 1
            if indeg[g] == 0 and g not in done:
                heapq.heappush(ready, g)
    return order


def _fmt(x):
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(R, layering=None, spec=RenderSpec()):
    """SVG text for ribbon geometry ``R``; ``layering`` maps face pairs to the top face."""
    K = R.diagram
    layering = {} if layering is None else layering
    pts = [p for f in R.faces for p in f.polygon] + [K.vertex(v) for v in range(K.num_edges)]
    xmin, xmax = min(p[0] for p in pts), max(p[0] for p in pts)
    ymin, ymax = min(p[1] for p in pts), max(p[1] for p in pts)
    span = max(xmax - xmin, ymax - ymin, 1e-12)
    scale = min(spec.width - 2 * spec.margin, spec.height - 2 * spec.margin) / span

    def tx(p):
        return (spec.margin + (p[0] - xmin) * scale, spec.height - spec.margin - (p[1] - ymin) * scale)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" height="{spec.height}" '
           f'viewBox="0 0 {spec.width} {spec.height}">']
    out.append('<g class="faces">')
    for f in paint_order(len(R.faces), layering):
        face = R.faces[f]
        colour = PALETTE[K.component_of(f) % len(PALETTE)]
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in map(tx, face.polygon))
        out.append(f'<polygon data-face="{f}" points="{coords}" fill="{colour}" '
                   f'fill-opacity="{spec.opacity}" stroke="{colour}" stroke-width="{_fmt(spec.crease_stroke)}"/>')
    out.append("</g>")

    out.append('<g class="creases">')
    for v in sorted(R.creases):
        c = R.creases[v]
        if not c.is_fold:
            continue
        (x1, y1), (x2, y2) = tx(c.left), tx(c.right)
        out.append(f'<line data-vertex="{v}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                   f'stroke="#333333" stroke-width="{_fmt(spec.crease_stroke)}" stroke-dasharray="4 3"/>')
    out.append("</g>")

    # parameters along each edge at which it passes under another strand
    unders = {}
    for c in find_crossings(K):
        a, b = K.edges[c.under_edge]
        L = K.edge_length(c.under_edge)
        t = math.dist(a, c.point) / L
        unders.setdefault(c.under_edge, []).append(t)
    out.append('<g class="centerline" fill="none" stroke="#000000" '
               f'stroke-width="{_fmt(spec.stroke)}" stroke-linecap="round">')
    for e in range(K.num_edges):
        a, b = K.edges[e]
        L = K.edge_length(e)
        half = 0.5 * spec.gap * R.width / L if L > 0 else 0.0
        cuts, t0 = [], 0.0
        for t in sorted(unders.get(e, [])):
            cuts.append((t0, max(t0, t - half)))
            t0 = min(1.0, t + half)
        cuts.append((t0, 1.0))
        for s, u in cuts:
            if u - s <= 0:
                continue
            p = (a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1]))
            q = (a[0] + u * (b[0] - a[0]), a[1] + u * (b[1] - a[1]))
            (x1, y1), (x2, y2) = tx(p), tx(q)
            out.append(f'<line data-edge="{e}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
