import math

import pytest
from hypothesis import assume, given, strategies as st

from foldribbon import (BandType, Fold, MissingFoldChoice, ZeroWidth, band_type, boundary_components, build_ribbon,
                        fold_angle, folds_from_pattern, ngon_unknot, pentagram_trefoil, polygon_diagram,
                        two_stick_unknot)
from foldribbon.ribbon import face_area, pattern_string, reverse_ribbon

from oracles import quad_is_simple, signed_area

coord = st.floats(-10, 10, allow_nan=False)


@st.composite
def polygons(draw, min_n=3, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pts = [draw(st.tuples(coord, coord)) for _ in range(n)]
    for i in range(n):
        assume(math.dist(pts[i], pts[i - 1]) > 0.2)
    K = polygon_diagram(pts)
    for v in range(n):
        assume(0.05 < fold_angle(K, v)[0] < math.pi - 0.05)
    return K


@given(polygons(), st.floats(0.01, 5.0), st.data())
def test_crease_length_formula(K, w, data):
    F = folds_from_pattern(K, data.draw(st.text("OU", min_size=K.num_edges, max_size=K.num_edges)))
    R = build_ribbon(K, w, F)
    for v, c in R.creases.items():
        assert c.length == pytest.approx(w / math.cos(c.theta / 2), rel=1e-9)
        mid = ((c.left[0] + c.right[0]) / 2, (c.left[1] + c.right[1]) / 2)
        assert math.dist(mid, K.vertex(v)) <= 1e-9 * max(1.0, w)


@given(polygons(), st.floats(0.01, 20.0))
def test_face_simplicity_matches_polygon_oracle(K, w):
    F = {v: Fold.OVER for v in range(K.num_edges)}
    R = build_ribbon(K, w, F)
    for f in R.faces:
        # skip near-ties where a crease endpoint sits on the other crease
        a, b, c, d = f.polygon
        assume(min(math.dist(a, b), math.dist(c, d)) > 1e-6 * max(1.0, w))
        assume(abs(signed_area(f.polygon)) > 1e-6)
        assert f.simple == quad_is_simple(f.polygon)


def test_straight_vertex_cross_segment():
    K = polygon_diagram([(0, 0), (1, 0), (2, 0), (1, 1)])
    F = folds_from_pattern(K, "O-OO")
    assert 1 not in F
    R = build_ribbon(K, 0.2, F)
    c = R.creases[1]
    assert not c.is_fold
    assert c.left == pytest.approx((1, 0.1)) and c.right == pytest.approx((1, -0.1))


def test_fold_swaps_sides():
    K, F = ngon_unknot(4, "OOOO")
    R = build_ribbon(K, 0.1, F)
    # left start of edge 1 is the right end point of the crease at vertex 1
    assert R.faces[1].left[0] == R.creases[1].right
    assert R.faces[0].left[1] == R.creases[1].left


def test_errors():
    K, F = ngon_unknot(3, "OOO")
    with pytest.raises(ZeroWidth):
        build_ribbon(K, 0.0, F)
    with pytest.raises(MissingFoldChoice):
        build_ribbon(K, 0.1, {0: Fold.OVER})


@pytest.mark.parametrize("n", range(3, 10))
def test_band_type_parity_and_walk(n):
    K, F = ngon_unknot(n, "O" * n)
    bt = band_type(K)
    assert bt is (BandType.MOEBIUS if n % 2 else BandType.ANNULUS)
    assert len(boundary_components(build_ribbon(K, 0.01, F))) == (1 if n % 2 else 2)


def test_two_stick_is_annulus():
    K, F = two_stick_unknot()
    assert band_type(K) is BandType.ANNULUS
    assert len(boundary_components(build_ribbon(K, 1.0, F))) == 2


def test_boundary_closes():
    K, F = pentagram_trefoil()
    (B,) = boundary_components(build_ribbon(K, 0.2, F))
    segs = B.segments
    assert len(segs) == 10
    for s, t in zip(segs, segs[1:] + segs[:1]):
        assert math.dist(s.end, t.start) < 1e-12


def test_pattern_helpers():
    K, F = ngon_unknot(5, "OUOUU")
    assert pattern_string(K, F) == "OUOUU"
    K2, F2 = reverse_ribbon(K, F)
    assert sorted(f.value for f in F2.values()) == sorted(f.flipped().value for f in F.values())
    assert Fold.parse("over") is Fold.OVER and Fold.parse("U") is Fold.UNDER
    with pytest.raises(ValueError):
        Fold.parse("sideways")


def test_face_area_unit_square_strip():
    K, F = ngon_unknot(4, "OOOO")
    R = build_ribbon(K, 0.2, F)
    # each face is a trapezoid of width 0.2 between 45 degree creases
    assert face_area(R.faces[0]) == pytest.approx(0.2 * 1.0, rel=1e-12)
