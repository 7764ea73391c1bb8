"""Oriented polygonal knot diagrams.

Edges are numbered globally: component 0 owns edges ``0..n0-1``, component
1 the next ``n1`` ids, and so on.  Vertex ``e`` is the start of edge ``e``,
so a vertex id doubles as the id of its outgoing edge.
"""
from dataclasses import dataclass, field
from functools import cached_property
import enum
import math
from typing import Mapping, Sequence

from . import predicates as pr
from .predicates import EPS


class DiagramError(ValueError):
    pass


class MissingAssignment(DiagramError):
    """A transversal crossing has no over/under assignment."""


class DegenerateIntersection(DiagramError):
    """Partial overlap, touching edges or a triple point."""


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    STRAIGHT = "straight"


@dataclass(frozen=True)
class CrossingData:
    point: tuple
    over_edge: int
    under_edge: int
    sign: int

    @property
    def edges(self):
        return tuple(sorted((self.over_edge, self.under_edge)))


def _pair(a, b):
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True, eq=False)
class PolyDiagram:
    """Closed polygonal diagram with explicit crossing information.

    ``crossing_assignments`` maps ``(edge_a, edge_b, index)`` with
    ``edge_a < edge_b`` to the id of the edge that passes over.  Two straight
    segments meet at most once, so ``index`` is always 0 for diagrams built
    here; it is kept for the interchange format.  ``degenerate_overlaps``
    maps a fully coincident edge pair to the edge lying on top.
    """

    components: tuple
    crossing_assignments: Mapping = field(default_factory=dict)
    degenerate_overlaps: Mapping = field(default_factory=dict)

    def __post_init__(self):
        comps = []
        for comp in self.components:
            pts = tuple((float(p[0]), float(p[1])) for p in comp)
            if len(pts) < 2:
                raise DiagramError("every component needs at least two vertices")
            for i, p in enumerate(pts):
                if not (math.isfinite(p[0]) and math.isfinite(p[1])):
                    raise DiagramError(f"non-finite coordinate {p}")
                q = pts[(i + 1) % len(pts)]
                if pr.norm(pr.sub(p, q)) <= EPS:
                    raise DiagramError(f"consecutive vertices coincide at {p}")
            comps.append(pts)
        object.__setattr__(self, "components", tuple(comps))
        ca = {}
        for key, over in dict(self.crossing_assignments).items():
            a, b, idx = key if len(key) == 3 else (*key, 0)
            a, b = _pair(int(a), int(b))
            if int(over) not in (a, b):
                raise DiagramError(f"over edge {over} not in crossing pair {(a, b)}")
            ca[(a, b, int(idx))] = int(over)
        object.__setattr__(self, "crossing_assignments", ca)
        do = {}
        for (a, b), over in dict(self.degenerate_overlaps).items():
            a, b = _pair(int(a), int(b))
            if int(over) not in (a, b):
                raise DiagramError(f"over edge {over} not in overlap pair {(a, b)}")
            do[(a, b)] = int(over)
        object.__setattr__(self, "degenerate_overlaps", do)

    # -- topology -------------------------------------------------------
    @cached_property
    def offsets(self):
        out, k = [], 0
        for comp in self.components:
            out.append(k)
            k += len(comp)
        return tuple(out)

    @property
    def num_edges(self):
        return sum(len(c) for c in self.components)

    def component_of(self, e):
        for c in range(len(self.components) - 1, -1, -1):
            if e >= self.offsets[c]:
                return c
        raise IndexError(e)

    def component_edges(self, c):
        return range(self.offsets[c], self.offsets[c] + len(self.components[c]))

    def next_edge(self, e):
        c = self.component_of(e)
        off, n = self.offsets[c], len(self.components[c])
        return off + (e - off + 1) % n

    def prev_edge(self, e):
        c = self.component_of(e)
        off, n = self.offsets[c], len(self.components[c])
        return off + (e - off - 1) % n

    def vertex(self, v):
        c = self.component_of(v)
        return self.components[c][v - self.offsets[c]]

    @cached_property
    def edges(self):
        """List of ``(start, end)`` point pairs indexed by global edge id."""
        out = []
        for comp in self.components:
            n = len(comp)
            out.extend((comp[i], comp[(i + 1) % n]) for i in range(n))
        return out

    def adjacent(self, a, b):
        return self.next_edge(a) == b or self.next_edge(b) == a

    def edge_length(self, e):
        a, b = self.edges[e]
        return pr.norm(pr.sub(b, a))

    def edge_direction(self, e):
        a, b = self.edges[e]
        return pr.unit(pr.sub(b, a))

    # -- derived diagrams ---------------------------------------------
    def with_crossings(self, assignments):
        return PolyDiagram(self.components, assignments, self.degenerate_overlaps)

    def scaled(self, lam):
        comps = [[(lam * x, lam * y) for x, y in c] for c in self.components]
        return PolyDiagram(comps, self.crossing_assignments, self.degenerate_overlaps)

    def reversed(self, which=None):
        """Reverse the orientation of the listed components (default: all).

        Returns the new diagram and the old-to-new edge id map.
        """
        which = set(range(len(self.components)) if which is None else which)
        comps, emap = [], {}
        for c, comp in enumerate(self.components):
            n, off = len(comp), self.offsets[c]
            if c in which:
                comps.append([comp[(-j) % n] for j in range(n)])
                for i in range(n):
                    emap[off + i] = off + (-i - 1) % n
            else:
                comps.append(list(comp))
                for i in range(n):
                    emap[off + i] = off + i
        ca = {(emap[a], emap[b], idx): emap[o]
              for (a, b, idx), o in self.crossing_assignments.items()}
        do = {(emap[a], emap[b]): emap[o] for (a, b), o in self.degenerate_overlaps.items()}
        return PolyDiagram(comps, ca, do), emap

    # -- geometry -------------------------------------------------------
    @cached_property
    def intersections(self):
        """Transversal intersections of non-adjacent edges, without over/under.

        Returns a sorted list of ``((a, b), point)``.  Raises
        :class:`DegenerateIntersection` for anything that is neither a clean
        crossing nor a sanctioned full coincidence.
        """
        edges = self.edges
        out = []
        for a in range(len(edges)):
            for b in range(a + 1, len(edges)):
                if self.adjacent(a, b):
                    continue
                p0, p1 = edges[a]
                q0, q1 = edges[b]
                kind = pr.segments_cross(p0, p1, q0, q1)
                if kind == "none":
                    continue
                if kind == "collinear":
                    if (a, b) in self.degenerate_overlaps and _coincident(p0, p1, q0, q1):
                        continue
                    raise DegenerateIntersection(f"edges {a} and {b} overlap")
                if kind == "touch":
                    raise DegenerateIntersection(f"edges {a} and {b} touch")
                t, _ = pr.line_intersection(p0, p1, q0, q1)
                pt = (p0[0] + t * (p1[0] - p0[0]), p0[1] + t * (p1[1] - p0[1]))
                for v in (p0, p1, q0, q1):
                    if pr.norm(pr.sub(pt, v)) <= EPS:
                        raise DegenerateIntersection(
                            f"edges {a} and {b} cross at a vertex {pt}")
                out.append(((a, b), pt))
        for i in range(len(out)):
            for j in range(i + 1, len(out)):
                if pr.norm(pr.sub(out[i][1], out[j][1])) <= EPS:
                    raise DegenerateIntersection(f"triple point near {out[i][1]}")
        for (a, b) in self.degenerate_overlaps:
            if not _coincident(*edges[a], *edges[b]):
                raise DegenerateIntersection(f"recorded overlap {(a, b)} is not coincident")
        return out


def _coincident(p0, p1, q0, q1):
    d = pr.norm
    return (d(pr.sub(p0, q0)) <= EPS and d(pr.sub(p1, q1)) <= EPS) or \
        (d(pr.sub(p0, q1)) <= EPS and d(pr.sub(p1, q0)) <= EPS)


def diagram_length(K):
    """Total Euclidean length over all components."""
    return math.fsum(K.edge_length(e) for e in range(K.num_edges))


def fold_angle(K, v):
    """Fold angle at vertex ``v`` and the side the outgoing edge turns to.

    The angle is measured between the rays toward the previous and next
    vertex, so a straight vertex has angle pi and a full double-back 0.
    Double-backs report ``Side.LEFT``.
    """
    prev_pt = K.vertex(K.prev_edge(v))
    here = K.vertex(v)
    next_pt = K.vertex(K.next_edge(v))
    r1 = pr.sub(prev_pt, here)
    r2 = pr.sub(next_pt, here)
    theta = math.atan2(abs(pr.cross(r1, r2)), pr.dot(r1, r2))
    if theta >= math.pi - EPS:
        return math.pi, Side.STRAIGHT
    if theta <= EPS:
        return 0.0, Side.LEFT
    o = pr.orient2d(prev_pt, here, next_pt)
    if o == 0:
        # float atan2 and exact orientation disagree only within EPS of pi or 0
        return (math.pi, Side.STRAIGHT) if pr.dot(r1, r2) < 0 else (0.0, Side.LEFT)
    return theta, (Side.LEFT if o > 0 else Side.RIGHT)


def fold_vertices(K):
    """Vertices whose fold angle is below pi."""
    return [v for v in range(K.num_edges) if fold_angle(K, v)[1] is not Side.STRAIGHT]


def crossing_sign(d_over, d_under):
    """+1 when (over direction, under direction) is a positively oriented frame."""
    c = pr.cross(d_over, d_under)
    return 1 if c > 0 else -1


def find_crossings(K):
    """Signed crossings of non-adjacent edges, sorted by edge pair."""
    out = []
    for (a, b), pt in K.intersections:
        try:
            over = K.crossing_assignments[(a, b, 0)]
        except KeyError:
            raise MissingAssignment(f"no over/under for edges {a} and {b} at {pt}") from None
        under = b if over == a else a
        sign = crossing_sign(K.edge_direction(over), K.edge_direction(under))
        out.append(CrossingData(pt, over, under, sign))
    return out


def crossing_signature(K):
    """Combinatorial crossing pattern: ``{(a, b): (over, sign)}``."""
    return {c.edges: (c.over_edge, c.sign) for c in find_crossings(K)}


def component_linking(K):
    """Pairwise linking numbers between diagram components."""
    out = {}
    for c in find_crossings(K):
        ca, cb = K.component_of(c.over_edge), K.component_of(c.under_edge)
        if ca != cb:
            key = _pair(ca, cb)
            out[key] = out.get(key, 0) + c.sign
    return {k: v // 2 for k, v in out.items()}


def polygon_diagram(points: Sequence, crossings=None):
    """Convenience constructor for a single-component diagram."""
    return PolyDiagram((tuple(points),), crossings or {})
