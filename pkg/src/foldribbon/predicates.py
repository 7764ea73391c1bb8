"""Orientation and intersection predicates with an exact fallback.

The float determinant is trusted only when it clears a forward error bound;
otherwise the sign is recomputed with rationals, which is exact for any
pair of doubles.
"""
from fractions import Fraction
import math

#: tolerance used for "straight" fold angles and point coincidence
EPS = 1e-9

_EPSILON = 2.0 ** -53
_CCW_ERRBOUND = (3.0 + 16.0 * _EPSILON) * _EPSILON


def orient2d(a, b, c):
    """Sign of the signed area of triangle ``abc``: +1 ccw, -1 cw, 0 collinear."""
    detleft = (a[0] - c[0]) * (b[1] - c[1])
    detright = (a[1] - c[1]) * (b[0] - c[0])
    det = detleft - detright
    bound = _CCW_ERRBOUND * (abs(detleft) + abs(detright))
    if det > bound:
        return 1
    if -det > bound:
        return -1
    ax, ay = Fraction(a[0]), Fraction(a[1])
    bx, by = Fraction(b[0]), Fraction(b[1])
    cx, cy = Fraction(c[0]), Fraction(c[1])
    exact = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx)
    return (exact > 0) - (exact < 0)


def cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def norm(u):
    return math.hypot(u[0], u[1])


def unit(u):
    n = math.hypot(u[0], u[1])
    return (u[0] / n, u[1] / n)


def left_normal(u):
    return (-u[1], u[0])


def point_segment_distance(p, a, b):
    ab = sub(b, a)
    denom = dot(ab, ab)
    if denom == 0.0:
        return norm(sub(p, a))
    t = min(1.0, max(0.0, dot(sub(p, a), ab) / denom))
    return math.hypot(p[0] - a[0] - t * ab[0], p[1] - a[1] - t * ab[1])


def segments_cross(a, b, c, d):
    """Classify segments ``ab`` and ``cd``.

    Returns ``"proper"`` for a transversal crossing at interior points of
    both, ``"none"`` when they are disjoint, ``"collinear"`` when they lie
    on one line and share more than a point, and ``"touch"`` otherwise.
    """
    o1 = orient2d(a, b, c)
    o2 = orient2d(a, b, d)
    o3 = orient2d(c, d, a)
    o4 = orient2d(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return "proper"
    if o1 == 0 and o2 == 0:
        # parametrize along the dominant axis of ab
        axis = 0 if abs(b[0] - a[0]) >= abs(b[1] - a[1]) else 1
        lo1, hi1 = sorted((a[axis], b[axis]))
        lo2, hi2 = sorted((c[axis], d[axis]))
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if hi > lo:
            return "collinear"
        if hi == lo:
            return "touch"
        return "none"
    if (o1 == 0 and _on_segment(a, b, c)) or (o2 == 0 and _on_segment(a, b, d)) \
            or (o3 == 0 and _on_segment(c, d, a)) or (o4 == 0 and _on_segment(c, d, b)):
        return "touch"
    return "none"


def _on_segment(a, b, p):
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and \
        min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def line_intersection(a, b, c, d):
    """Intersection parameters ``(t, u)`` of lines ``a + t(b-a)`` and ``c + u(d-c)``."""
    r = sub(b, a)
    s = sub(d, c)
    denom = cross(r, s)
    if denom == 0.0:
        return None
    qp = sub(c, a)
    return cross(qp, s) / denom, cross(qp, r) / denom
