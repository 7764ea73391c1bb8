"""Constructors for the diagrams and grids used throughout the package."""
from functools import lru_cache
import itertools
import math

from .diagram import PolyDiagram
from .grid import GridDiagram
from .layering import max_width
from .ribbon import Fold, folds_from_pattern


class BadParameters(ValueError):
    pass


class BadPatternLength(BadParameters):
    pass


def regular_polygon(n, side=1.0):
    """Counterclockwise regular n-gon with its first edge horizontal at the bottom."""
    R = side / (2.0 * math.sin(math.pi / n))
    start = -math.pi / 2 - math.pi / n
    return [(R * math.cos(start + 2 * math.pi * k / n), R * math.sin(start + 2 * math.pi * k / n))
            for k in range(n)]


def ngon_unknot(n, fold_pattern):
    """Unit-side regular n-gon; ``fold_pattern[i]`` is the fold at vertex i."""
    if n < 3:
        raise BadParameters("n-gon unknots need n >= 3")
    pattern = list(fold_pattern)
    if len(pattern) != n:
        raise BadPatternLength(f"{len(pattern)} folds given for {n} vertices")
    K = PolyDiagram((tuple(regular_polygon(n)),))
    return K, folds_from_pattern(K, pattern)


def two_stick_unknot(length=1.0):
    """Two coincident edges folded at both ends; an annulus of any width.

    Edge 0 lies on top, so vertex 0 is an overfold and vertex 1 an
    underfold.
    """
    if not length > 0:
        raise BadParameters("length must be positive")
    K = PolyDiagram((((0.0, 0.0), (float(length), 0.0)),), {}, {(0, 1): 0})
    return K, {0: Fold.OVER, 1: Fold.UNDER}


def _pentagram(R):
    pts = [(R * math.cos(math.pi / 2 + k * 4 * math.pi / 5),
            R * math.sin(math.pi / 2 + k * 4 * math.pi / 5)) for k in range(5)]
    K = PolyDiagram((tuple(pts),))
    # alternate along each edge: over at its first crossing, under at its second
    hits = {}
    for (a, b), pt in K.intersections:
        for e in (a, b):
            start = K.edges[e][0]
            hits.setdefault(e, []).append((math.dist(start, pt), (a, b)))
    assign = {}
    for e, lst in sorted(hits.items()):
        first = min(lst)[1]
        assign[(*first, 0)] = e
    return K.with_crossings(assign)


@lru_cache(maxsize=None)
def _best_pentagram_pattern():
    K = _pentagram(1.0)
    best = None
    for letters in itertools.product("OU", repeat=5):
        F = folds_from_pattern(K, letters)
        w = max_width(K, F, tol=1e-6, sample=False).width
        if best is None or w > best[0] + 1e-9:
            best = (w, "".join(letters))
    return best[1]


def pentagram_trefoil(circumradius=1.0):
    """Five-edge star {5/2} trefoil with alternating crossings.

    The folding information is the one of the 32 patterns with the largest
    certified width (ties go to the lexicographically first pattern).
    """
    if not circumradius > 0:
        raise BadParameters("circumradius must be positive")
    K = _pentagram(float(circumradius))
    return K, folds_from_pattern(K, _best_pentagram_pattern())


def torus_grid(p, q):
    """Grid of size p+q: X on the diagonal, O shifted q columns cyclically."""
    if not (p > q >= 2 and math.gcd(p, q) == 1):
        raise BadParameters(f"need coprime p > q >= 2, got {(p, q)}")
    n = p + q
    return GridDiagram(n, tuple(range(1, n + 1)),
                       tuple(1 + (i + q - 1) % n for i in range(1, n + 1)))


def twist_grid(n):
    """Staircase grid of size n+4 for the twist knot with n half-twists.

    Row 1 holds the long clasp arm, rows 2..n+1 a staircase of span-two
    rows with alternating X/O order, and three closing rows whose order
    depends on the parity of n.  Ribbonlength is exactly 8n + 16.
    """
    if n < 1:
        raise BadParameters("twist knots need n >= 1")
    g = n + 4
    x, o = [0] * g, [0] * g
    x[0], o[0] = 0, 3
    for k in range(1, n + 1):
        if k % 2:
            o[k], x[k] = k + 1, k + 3
        else:
            x[k], o[k] = k + 1, k + 3
    if n % 2 == 0:
        x[n + 1], o[n + 1] = 1, n + 2
        o[n + 3], x[n + 3] = 1, n + 3
    else:
        o[n + 1], x[n + 1] = 1, n + 2
        x[n + 3], o[n + 3] = 1, n + 3
    o[n + 2], x[n + 2] = 0, 2
    return GridDiagram(g, tuple(c + 1 for c in x), tuple(c + 1 for c in o))
