import json
import math

import pytest
from hypothesis import assume, given, strategies as st

from foldribbon import PolyDiagram, check_allowed, ngon_unknot, pentagram_trefoil, two_stick_unknot
from foldribbon.formats import (FormatError, dump_diagram, dump_ribbon, dumps, load_diagram, load_ribbon,
                                report_to_dict)

from fixtures import piercing_fixture

coord = st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False)


@given(st.lists(st.tuples(coord, coord), min_size=2, max_size=8))
def test_diagram_round_trip_exact(pts):
    assume(all(math.dist(pts[i - 1], pts[i]) > 1e-6 for i in range(len(pts))))
    K = PolyDiagram((tuple(pts),))
    K2 = load_diagram(dump_diagram(K))
    assert K2.components == K.components


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_seventeen_digits_round_trip(x):
    assert float(dumps(x)) == x


def test_ribbon_round_trip():
    for K, F in (pentagram_trefoil(), two_stick_unknot(), ngon_unknot(4, "OUOU")):
        K2, F2, w = load_ribbon(dump_ribbon(K, F, 0.25))
        assert K2.components == K.components
        assert K2.crossing_assignments == K.crossing_assignments
        assert K2.degenerate_overlaps == K.degenerate_overlaps
        assert F2 == F and w == 0.25


def test_document_fields():
    K, F = pentagram_trefoil()
    d = json.loads(dump_ribbon(K, F, 0.5))
    assert set(d) == {"components", "crossings", "degenerate_overlaps", "width", "folds"}
    assert set(d["crossings"][0]) == {"edge_a", "edge_b", "index", "over"}
    assert d["folds"]["0"] in ("over", "under")


def test_missing_width_is_none():
    K, F = ngon_unknot(3, "OOO")
    assert load_ribbon(dump_ribbon(K, F))[2] is None


@pytest.mark.parametrize("text", ["[1, 2]", "{", '{"crossings": []}', '{"components": [[["a", 0]]]}'])
def test_bad_documents(text):
    with pytest.raises(FormatError):
        load_ribbon(text)


def test_report_document():
    K, F = piercing_fixture()
    d = report_to_dict(check_allowed(K, 1.0, F))
    assert d["allowed"] is False
    assert d["failures"][0]["kind"] == "PiercingFailure"
    assert len(d["failures"][0]["point"]) == 2
    text = dumps(d, real="{:.6f}")
    assert json.loads(text)["width"] == 1.0


def test_non_finite_written_as_null():
    assert dumps([math.inf, 1.5]) == "[null, 1.5]"
