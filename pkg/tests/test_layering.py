import itertools
import math

import pytest
from hypothesis import given, strategies as st

from foldribbon import (CycleFailure, ImmersionFailure, NoPositiveWidth, PiercingFailure, check_allowed,
                        is_allowed, max_width, ngon_unknot, pentagram_trefoil, two_stick_unknot)
from foldribbon.sat import solve

from fixtures import contradictory_two_stick, piercing_fixture

ROOT3 = math.sqrt(3.0)


def brute_force_sat(n, clauses):
    for bits in itertools.product([False, True], repeat=n):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in clauses):
            return True
    return False


@st.composite
def cnf(draw):
    n = draw(st.integers(1, 7))
    lit = st.integers(1, n).flatmap(lambda v: st.sampled_from([v, -v]))
    clauses = draw(st.lists(st.lists(lit, min_size=1, max_size=3), max_size=25))
    return n, clauses


@given(cnf())
def test_sat_agrees_with_brute_force(inst):
    n, clauses = inst
    model = solve(n, clauses)
    assert (model is not None) == brute_force_sat(n, clauses)
    if model is not None:
        assert all(any(model.get(abs(l), False) == (l > 0) for l in c) for c in clauses)


def test_sat_empty_clause():
    assert solve(2, [[1], []]) is None


def test_triangle_same_folds():
    K, F = ngon_unknot(3, "OOO")
    assert check_allowed(K, 0.5, F).allowed
    rep = check_allowed(K, 0.6, F)
    assert not rep.allowed
    assert [type(f) for f in rep.failures] == [CycleFailure]
    assert sorted(rep.failures[0].faces) == [0, 1, 2]
    # the cycle is witnessed at the centroid region of the triangle
    assert math.dist(rep.failures[0].point, (0.0, 0.0)) < 0.1


def test_triangle_one_different_fold():
    K, F = ngon_unknot(3, "OOU")
    rep = check_allowed(K, 1.7, F)
    assert rep.allowed
    assert len(rep.layering) == 3
    rep = check_allowed(K, 1.8, F)
    assert not rep.allowed
    assert all(isinstance(f, ImmersionFailure) for f in rep.failures)


def test_layering_honours_folds():
    K, F = ngon_unknot(3, "OOU")
    rep = check_allowed(K, 1.0, F)
    # overfold at vertex 1: outgoing face 1 above incoming face 0
    assert rep.above(1, 0)
    # underfold at vertex 2: outgoing face 2 below incoming face 1
    assert rep.above(1, 2)


def test_piercing_rejected():
    K, F = piercing_fixture()
    rep = check_allowed(K, 1.0, F)
    assert not rep.allowed
    (fail,) = rep.failures
    assert isinstance(fail, PiercingFailure)
    assert fail.vertex == 0 and fail.face == 3
    assert abs(fail.point[0]) < 1e-9
    assert check_allowed(K, 0.5, F).allowed


def test_crossing_agreement():
    K, F = pentagram_trefoil()
    rep = check_allowed(K, 0.3, F)
    assert rep.allowed
    from foldribbon import find_crossings
    for c in find_crossings(K):
        assert rep.above(c.over_edge, c.under_edge)


def test_no_positive_width():
    K, F = contradictory_two_stick()
    assert not is_allowed(K, 1e-9, F)
    with pytest.raises(NoPositiveWidth):
        max_width(K, F)


def test_unbounded_two_stick():
    K, F = two_stick_unknot(2.0)
    res = max_width(K, F)
    assert res.unbounded and res.width == math.inf
    assert is_allowed(K, 2e6, F)


@pytest.mark.parametrize("n, expected", [(3, 1 / ROOT3)] + [(n, math.tan(math.pi / n)) for n in (4, 5, 6, 8)])
def test_max_width_regular(n, expected):
    # the triangle is limited by its triple overlap, larger n by adjacent faces
    K, F = ngon_unknot(n, "O" * n)
    res = max_width(K, F, tol=1e-8)
    assert res.width == pytest.approx(expected, abs=1e-7)
    assert res.monotone
    assert res.lo <= res.width <= res.hi and res.hi - res.lo <= 1e-8


def test_max_width_one_different():
    K, F = ngon_unknot(3, "UOO")
    assert max_width(K, F, tol=1e-8).width == pytest.approx(ROOT3, abs=1e-7)


@given(st.integers(3, 9), st.data())
def test_small_width_existence(n, data):
    pattern = data.draw(st.text("OU", min_size=n, max_size=n))
    K, F = ngon_unknot(n, pattern)
    assert is_allowed(K, 1e-6, F)


@given(st.integers(3, 6), st.data())
def test_allowed_is_downward_closed(n, data):
    pattern = data.draw(st.text("OU", min_size=n, max_size=n))
    K, F = ngon_unknot(n, pattern)
    w = max_width(K, F, tol=1e-5, sample=False).width
    for f in data.draw(st.lists(st.floats(0.001, 0.999), min_size=1, max_size=4)):
        assert is_allowed(K, f * w, F)


def test_overlap_records():
    K, F = ngon_unknot(3, "OOO")
    rep = check_allowed(K, 0.5, F)
    assert {o.faces for o in rep.overlaps} == {(0, 1), (0, 2), (1, 2)}
    assert not any(o.contains_crossing or o.meets_crease for o in rep.overlaps)
    K, F = pentagram_trefoil()
    rep = check_allowed(K, 0.3, F)
    assert sum(o.contains_crossing for o in rep.overlaps) == 5
