"""Decide whether a folded ribbon is allowed and find its largest width.

Every face is convex (a strip cut by two crease half-planes), so two faces
overlap in at most one connected region and one boolean per overlapping
pair fully describes the layering.  The booleans are constrained by

* fold choices on the two faces meeting at each crease,
* the diagram's over/under data at each centerline crossing,
* the no-piercing rule: a face whose interior meets a crease (or the cut
  between two collinear pieces at a straight vertex) lies above both or
  below both faces joined there,
* acyclicity: three faces sharing an interior point are not ordered in a
  cycle.  A relation on a set of faces that pairwise overlap at a common
  cell is a linear order iff no triple in it is cyclic, so checking triples
  with a common interior point covers every cell of the arrangement.
"""
from dataclasses import dataclass, field
import math

from . import sat
from .diagram import diagram_length, find_crossings
from .predicates import EPS
from .ribbon import Fold, build_ribbon


class NoPositiveWidth(ValueError):
    pass


@dataclass(frozen=True)
class ImmersionFailure:
    edge: int
    kind: str = "ImmersionFailure"


@dataclass(frozen=True)
class PiercingFailure:
    vertex: int
    face: int
    point: tuple
    kind: str = "PiercingFailure"


@dataclass(frozen=True)
class CycleFailure:
    faces: tuple
    point: tuple
    kind: str = "CycleFailure"


@dataclass(frozen=True)
class CrossingMismatch:
    pair: tuple
    point: tuple
    reasons: tuple = ()
    kind: str = "CrossingMismatch"


@dataclass(frozen=True)
class OverlapComponent:
    faces: tuple
    region: tuple
    contains_crossing: bool = False
    meets_crease: bool = False


@dataclass
class ValidityReport:
    allowed: bool
    width: float
    layering: dict = field(default_factory=dict)
    overlaps: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    def above(self, a, b):
        """True when face ``a`` lies above face ``b`` in the layering."""
        key = (a, b) if a < b else (b, a)
        return self.layering[key] == a


# -- convex polygon helpers --------------------------------------------------

def clip(poly, halfplanes, shrink=0.0):
    """Clip a convex polygon by half-planes ``nx*x + ny*y <= c - shrink``."""
    pts = list(poly)
    for nx, ny, c in halfplanes:
        c = c - shrink
        if not pts:
            break
        out = []
        n = len(pts)
        for i in range(n):
            p, q = pts[i], pts[(i + 1) % n]
            fp = nx * p[0] + ny * p[1] - c
            fq = nx * q[0] + ny * q[1] - c
            if fp <= 0:
                out.append(p)
            if (fp < 0 < fq) or (fq < 0 < fp):
                t = fp / (fp - fq)
                out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
        pts = out
    return pts


def thickness(poly):
    """``2 * area / perimeter``; within a factor two of the inradius."""
    if len(poly) < 3:
        return 0.0
    area = 0.0
    per = 0.0
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        area += p[0] * q[1] - p[1] * q[0]
        per += math.hypot(q[0] - p[0], q[1] - p[1])
    if per == 0.0:
        return 0.0
    return abs(area) / per


def centroid(poly):
    n = len(poly)
    return (sum(p[0] for p in poly) / n, sum(p[1] for p in poly) / n)


def segment_meets_interior(a, b, halfplanes, tol):
    """Whether the open segment ``ab`` passes through the interior of a face."""
    t0, t1 = 0.0, 1.0
    d = (b[0] - a[0], b[1] - a[1])
    for nx, ny, c in halfplanes:
        fa = nx * a[0] + ny * a[1] - (c - tol)
        fd = nx * d[0] + ny * d[1]
        if fd == 0.0:
            if fa >= 0:
                return None
            continue
        t = -fa / fd
        if fd > 0:
            t1 = min(t1, t)
        else:
            t0 = max(t0, t)
        if t1 <= t0:
            return None
    length = math.hypot(d[0], d[1])
    if (t1 - t0) * length <= tol:
        return None
    tm = 0.5 * (t0 + t1)
    return (a[0] + tm * d[0], a[1] + tm * d[1])


def _bbox(poly):
    xs = [p[0] for p in poly]
    ys = [p[1] for p in poly]
    return min(xs), min(ys), max(xs), max(ys)


# -- constraint assembly -----------------------------------------------------

class _Problem:
    def __init__(self, R):
        self.R = R
        K = R.diagram
        faces = R.faces
        extent = max(max(abs(x), abs(y)) for f in faces for x, y in f.polygon)
        self.tol = EPS * R.width + 1e-12 * max(extent, 1.0)
        tol = self.tol
        boxes = [_bbox(f.polygon) for f in faces]
        self.overlaps = {}
        m = len(faces)
        for i in range(m):
            bi = boxes[i]
            for j in range(i + 1, m):
                bj = boxes[j]
                if bi[2] < bj[0] or bj[2] < bi[0] or bi[3] < bj[1] or bj[3] < bi[1]:
                    continue
                region = clip(faces[i].polygon, faces[j].halfplanes)
                if thickness(region) > tol:
                    self.overlaps[(i, j)] = region
        self.var = {pair: k + 1 for k, pair in enumerate(sorted(self.overlaps))}
        self.groups = []  # (kind, info, clauses)

        for v, cr in sorted(R.creases.items()):
            a, b = K.prev_edge(v), v
            if cr.is_fold and a != b and self._has(a, b):
                top = b if R.folds[v] is Fold.OVER else a
                bottom = a if top == b else b
                self.groups.append(("fold", (v, top, bottom), [[self.lit(top, bottom)]]))

        self.crossings = find_crossings(K)
        for c in self.crossings:
            if self._has(c.over_edge, c.under_edge):
                self.groups.append(("crossing", c, [[self.lit(c.over_edge, c.under_edge)]]))
        for (a, b), over in sorted(K.degenerate_overlaps.items()):
            under = b if over == a else a
            if self._has(a, b):
                self.groups.append(("overlap", (a, b, over), [[self.lit(over, under)]]))

        self.meets = {}
        for v, cr in sorted(R.creases.items()):
            a, b = K.prev_edge(v), v
            for g in range(m):
                if g in (a, b):
                    continue
                pt = segment_meets_interior(cr.left, cr.right, faces[g].halfplanes, tol)
                if pt is None or not (self._has(g, a) and self._has(g, b)):
                    continue
                x, y = self.lit(g, a), self.lit(g, b)
                self.meets.setdefault(tuple(sorted((g, a))), True)
                self.meets.setdefault(tuple(sorted((g, b))), True)
                self.groups.append(("pierce", (v, g, pt), [[-x, y], [x, -y]]))

        pairs = sorted(self.overlaps)
        nbrs = {}
        for i, j in pairs:
            nbrs.setdefault(i, set()).add(j)
        for i, j in pairs:
            for k in sorted(nbrs.get(j, ())):
                if k not in nbrs.get(i, ()):
                    continue
                region = clip(self.overlaps[(i, j)], faces[k].halfplanes)
                if thickness(region) <= tol:
                    continue
                xij, xjk, xik = self.var[(i, j)], self.var[(j, k)], self.var[(i, k)]
                self.groups.append(("cycle", ((i, j, k), centroid(region)),
                                    [[-xij, -xjk, xik], [xij, xjk, -xik]]))

    def _has(self, a, b):
        return ((a, b) if a < b else (b, a)) in self.var

    def lit(self, a, b):
        """Literal meaning "face a is above face b"."""
        if a < b:
            return self.var[(a, b)]
        return -self.var[(b, a)]

    def solve(self, groups=None):
        groups = self.groups if groups is None else groups
        clauses = [c for g in groups for c in g[2]]
        return sat.solve(len(self.var), clauses)

    def core(self):
        """Deletion-filtered minimal unsatisfiable subset of constraint groups."""
        keep = list(self.groups)
        i = 0
        while i < len(keep):
            trial = keep[:i] + keep[i + 1:]
            if self.solve(trial) is None:
                keep = trial
            else:
                i += 1
        return keep


def immersion_failures(R):
    return [ImmersionFailure(f.edge) for f in R.faces if not f.simple]


def _failures_from_core(core):
    out = []
    for kind, info, _ in core:
        if kind == "cycle":
            out.append(CycleFailure(info[0], info[1]))
        elif kind == "pierce":
            v, g, pt = info
            out.append(PiercingFailure(v, g, pt))
    if not out:
        pins = [(kind, info) for kind, info, _ in core]
        pairs = set()
        for kind, info in pins:
            if kind == "crossing":
                pairs.add((info.edges, info.point))
        if pairs:
            for pair, pt in sorted(pairs):
                out.append(CrossingMismatch(pair, pt, tuple(k for k, _ in pins)))
        else:
            out.append(CrossingMismatch((), None, tuple(k for k, _ in pins)))
    return out


def _layering_from(problem, model):
    out = {}
    for (a, b), var in problem.var.items():
        out[(a, b)] = a if model[var] else b
    return out


def check_allowed(K, w, F, diagnose=True):
    """Full validity report for the ribbon of width ``w`` with folds ``F``."""
    R = build_ribbon(K, w, F)
    bad = immersion_failures(R)
    if bad:
        return ValidityReport(False, float(w), failures=bad)
    prob = _Problem(R)
    model = prob.solve()
    crossing_pairs = {c.edges for c in prob.crossings}
    overlaps = [OverlapComponent(pair, tuple(reg), pair in crossing_pairs,
                                 pair in prob.meets)
                for pair, reg in sorted(prob.overlaps.items())]
    if model is None:
        failures = _failures_from_core(prob.core()) if diagnose else [None]
        return ValidityReport(False, float(w), overlaps=overlaps, failures=failures)
    layering = _layering_from(prob, model)
    for c in prob.crossings:
        key = c.edges
        if key in layering and layering[key] != c.over_edge:
            raise AssertionError(f"layering contradicts crossing {c}")
    return ValidityReport(True, float(w), layering=layering, overlaps=overlaps)


def is_allowed(K, w, F):
    R = build_ribbon(K, w, F)
    if any(not f.simple for f in R.faces):
        return False
    return _Problem(R).solve() is not None


@dataclass(frozen=True)
class WidthResult:
    """Outcome of width maximisation.

    ``width`` is the largest certified-allowed width found (``math.inf``
    when the ribbon stays allowed through every doubling); the supremum lies
    in ``[lo, hi]``.  ``samples`` records the monotonicity spot checks.
    """
    width: float
    lo: float
    hi: float
    unbounded: bool
    samples: tuple = ()

    @property
    def monotone(self):
        return all(ok for _, ok in self.samples)

    def __float__(self):
        return float(self.width)


UNBOUNDED_DOUBLINGS = 40


def max_width(K, F, tol=1e-7, lo=None, hi=None, sample=True):
    """Largest allowed width by bracketed bisection.

    Assumes that allowed at ``w`` implies allowed below ``w``; the result
    carries spot checks at 0.99, 0.5 and 0.01 of the answer so a violation
    shows up.  Optional ``lo``/``hi`` seed the bracket (``lo`` must be
    allowed, ``hi`` not).
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    shortest = min(K.edge_length(e) for e in range(K.num_edges))
    if lo is None:
        lo = 1e-6 * shortest
        if not is_allowed(K, lo, F):
            raise NoPositiveWidth(f"not allowed even at width {lo:g}")
    if hi is None:
        hi = max(diagram_length(K), 2 * lo)
        doublings = 0
        while is_allowed(K, hi, F):
            lo = hi
            if doublings == UNBOUNDED_DOUBLINGS:
                return WidthResult(math.inf, lo, math.inf, True)
            hi *= 2.0
            doublings += 1
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if is_allowed(K, mid, F):
            lo = mid
        else:
            hi = mid
    samples = ()
    if sample:
        samples = tuple((f * lo, is_allowed(K, f * lo, F)) for f in (0.99, 0.5, 0.01))
    return WidthResult(lo, lo, hi, False, samples)
