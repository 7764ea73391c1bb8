"""Width-w folded ribbon over a polygonal diagram.

At a fold vertex the crease is centred on the vertex, perpendicular to the
angle bisector, and has length ``w / cos(theta/2)``.  The face of an edge is
the part of the width-w strip around the edge that lies between the creases
at its two ends; both faces meeting at a crease sit on the same side of it.
Folding reflects the strip, so the left boundary of one face continues as
the right boundary of the next.
"""
from dataclasses import dataclass
import enum
import math

from . import predicates as pr
from .diagram import Side, fold_angle
from .predicates import EPS


class RibbonError(ValueError):
    pass


class ZeroWidth(RibbonError):
    pass


class MissingFoldChoice(RibbonError):
    pass


class Fold(enum.Enum):
    OVER = "over"
    UNDER = "under"

    @classmethod
    def parse(cls, s):
        s = str(s).strip().lower()
        if s in ("o", "over", "overfold"):
            return cls.OVER
        if s in ("u", "under", "underfold"):
            return cls.UNDER
        raise ValueError(f"unknown fold type {s!r}")

    def flipped(self):
        return Fold.UNDER if self is Fold.OVER else Fold.OVER


class BandType(enum.Enum):
    ANNULUS = "annulus"
    MOEBIUS = "moebius"


def folds_from_pattern(K, pattern):
    """Folding information from one O/U letter per vertex, in vertex order.

    Letters at straight vertices are ignored ('-' is accepted there).
    """
    letters = list(pattern)
    if len(letters) != K.num_edges:
        raise ValueError(f"pattern has {len(letters)} letters for {K.num_edges} vertices")
    out = {}
    for v, ch in enumerate(letters):
        if fold_angle(K, v)[1] is Side.STRAIGHT:
            continue
        out[v] = ch if isinstance(ch, Fold) else Fold.parse(ch)
    return out


def pattern_string(K, F):
    return "".join("-" if v not in F else ("O" if F[v] is Fold.OVER else "U")
                   for v in range(K.num_edges))


def reverse_ribbon(K, F, which=None):
    """Reverse orientation of components; overfolds become underfolds there."""
    K2, emap = K.reversed(which)
    F2 = {}
    for v, f in F.items():
        c = K.component_of(v)
        if which is None or c in set(which):
            # vertex v (start of old edge v) becomes the start of new edge emap[prev(v)]
            F2[emap[K.prev_edge(v)]] = f.flipped()
        else:
            F2[v] = f
    return K2, F2


@dataclass(frozen=True)
class Crease:
    """Fold line (or, at a straight vertex, the width-w cross segment).

    ``left`` lies on the left offset of the incoming edge, ``right`` on its
    right offset.
    """
    vertex: int
    left: tuple
    right: tuple
    theta: float
    is_fold: bool

    @property
    def length(self):
        return pr.norm(pr.sub(self.left, self.right))


@dataclass(frozen=True)
class Face:
    """Ribbon piece of one edge; ``polygon`` is counterclockwise when simple."""
    edge: int
    polygon: tuple
    halfplanes: tuple
    left: tuple
    right: tuple
    simple: bool


@dataclass(frozen=True)
class BoundarySegment:
    start: tuple
    end: tuple
    face: int
    side: str


@dataclass(frozen=True)
class Boundary:
    component: int
    segments: tuple

    @property
    def points(self):
        return [s.start for s in self.segments]


@dataclass(frozen=True, eq=False)
class RibbonGeometry:
    diagram: object
    width: float
    folds: dict
    creases: dict
    faces: tuple

    @property
    def fold_creases(self):
        return [c for c in self.creases.values() if c.is_fold]


def build_ribbon(K, w, F):
    """Creases, faces and offsets of the width-``w`` ribbon over ``K``."""
    if not w > 0:
        raise ZeroWidth(f"width must be positive, got {w}")
    h = 0.5 * w
    creases = {}
    outs = {}
    for v in range(K.num_edges):
        theta, side = fold_angle(K, v)
        here = K.vertex(v)
        d_in = K.edge_direction(K.prev_edge(v))
        d_out = K.edge_direction(v)
        n_in = pr.left_normal(d_in)
        if side is Side.STRAIGHT:
            pl = (here[0] + h * n_in[0], here[1] + h * n_in[1])
            pr_ = (here[0] - h * n_in[0], here[1] - h * n_in[1])
            creases[v] = Crease(v, pl, pr_, math.pi, False)
            outs[v] = (pl, pr_)
            continue
        if v not in F:
            raise MissingFoldChoice(f"no fold choice at vertex {v}")
        b = pr.unit(pr.sub(d_out, d_in))
        cos_half = -pr.dot(d_in, b)
        t = h * pr.dot(n_in, b) / cos_half
        pl = (here[0] + h * n_in[0] + t * d_in[0], here[1] + h * n_in[1] + t * d_in[1])
        pr_ = (here[0] - h * n_in[0] - t * d_in[0], here[1] - h * n_in[1] - t * d_in[1])
        creases[v] = Crease(v, pl, pr_, theta, True)
        # the fold swaps sides: left of the incoming edge is right of the outgoing
        outs[v] = (pr_, pl)
    faces = []
    for e in range(K.num_edges):
        nxt = K.next_edge(e)
        v0, v1 = K.edges[e]
        d = K.edge_direction(e)
        n = pr.left_normal(d)
        left_start, right_start = outs[e]
        left_end, right_end = creases[nxt].left, creases[nxt].right
        s = lambda p: pr.dot(pr.sub(p, v0), d)
        tol = EPS * max(w, 1.0)
        simple = s(left_start) <= s(left_end) + tol and s(right_start) <= s(right_end) + tol
        hp = [
            (n[0], n[1], pr.dot(n, v0) + h),
            (-n[0], -n[1], -pr.dot(n, v0) + h),
        ]
        for cr, anchor, sgn in ((creases[e], v0, -1.0), (creases[nxt], v1, 1.0)):
            m = pr.left_normal(pr.unit(pr.sub(cr.left, cr.right)))
            if pr.dot(m, d) < 0:
                m = (-m[0], -m[1])
            hp.append((sgn * m[0], sgn * m[1], sgn * pr.dot(m, anchor)))
        faces.append(Face(
            edge=e,
            polygon=(right_start, right_end, left_end, left_start),
            halfplanes=tuple(hp),
            left=(left_start, left_end),
            right=(right_start, right_end),
            simple=simple,
        ))
    return RibbonGeometry(K, float(w), dict(F), creases, tuple(faces))


def _walk(R, c, start_side):
    K = R.diagram
    edges = list(K.component_edges(c))
    e, side = edges[0], start_side
    segs = []
    while True:
        face = R.faces[e]
        a, b = face.left if side == "left" else face.right
        segs.append(BoundarySegment(a, b, e, side))
        e = K.next_edge(e)
        if R.creases[e].is_fold:
            side = "right" if side == "left" else "left"
        if e == edges[0] and side == start_side:
            return segs
        if len(segs) > 2 * len(edges):
            raise RuntimeError("boundary walk did not close")


def boundary_components(R, component=None):
    """Closed boundary curves, found by walking offsets across creases.

    Each boundary is oriented parallel to the centerline.  A component
    yields two curves for an annulus and one (running twice around) for a
    Moebius band.
    """
    K = R.diagram
    comps = range(len(K.components)) if component is None else [component]
    out = []
    for c in comps:
        first = _walk(R, c, "left")
        out.append(Boundary(c, tuple(first)))
        if len(first) == len(K.components[c]):
            out.append(Boundary(c, tuple(_walk(R, c, "right"))))
    return out


def band_type(K, component=0):
    """Moebius iff the component has an odd number of fold vertices."""
    n = sum(1 for v in K.component_edges(component)
            if fold_angle(K, v)[1] is not Side.STRAIGHT)
    return BandType.MOEBIUS if n % 2 else BandType.ANNULUS


def face_area(face):
    pts = face.polygon
    return 0.5 * abs(sum(pr.cross(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))))


def mirror_ribbon(K, F):
    """Reflect the ribbon through the plane: every crossing and fold flips."""
    flipped = {}
    for (a, b, idx), over in K.crossing_assignments.items():
        flipped[(a, b, idx)] = b if over == a else a
    overlaps = {(a, b): (b if over == a else a) for (a, b), over in K.degenerate_overlaps.items()}
    K2 = type(K)(K.components, flipped, overlaps)
    return K2, {v: f.flipped() for v, f in F.items()}
