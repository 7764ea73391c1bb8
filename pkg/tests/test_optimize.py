import math

import pytest

from foldribbon import (InfeasibleStart, OptimizerParams, band_type, crossing_signature, minimize_ribbonlength,
                        ngon_unknot, perturb, ribbon_linking_number, two_stick_unknot)

TARGET = 3 * math.sqrt(3)


def test_triangle_recovers_optimum():
    K, F = ngon_unknot(3, "OOO")
    K0 = perturb(K, 0.05, seed=7)
    res = minimize_ribbonlength(K0, F)
    assert res.ribbonlength == pytest.approx(TARGET, rel=1e-3)
    ribs = [t.ribbonlength for t in res.trace]
    assert all(b < a for a, b in zip(ribs, ribs[1:]))
    assert res.trace[0].iteration == 0
    assert band_type(res.diagram) is band_type(K0)
    assert ribbon_linking_number(res.diagram, 0.5 * res.width, F) == ribbon_linking_number(K0, 0.01, F)


def test_perturb_is_seeded():
    K, _ = ngon_unknot(4, "OOOO")
    assert perturb(K, 0.1, seed=3).components == perturb(K, 0.1, seed=3).components
    assert perturb(K, 0.1, seed=3).components != perturb(K, 0.1, seed=4).components
    assert perturb(K, 0.0, seed=1).components == K.components


def test_signature_preserved_square():
    K, F = ngon_unknot(4, "OOOO")
    res = minimize_ribbonlength(perturb(K, 0.05, seed=2), F,
                                OptimizerParams(min_step=1e-3, max_iterations=100))
    assert crossing_signature(res.diagram) == {}
    assert res.ribbonlength <= 4.0 * 1.01


def test_unbounded_start_rejected():
    K, F = two_stick_unknot()
    with pytest.raises(InfeasibleStart):
        minimize_ribbonlength(K, F)


@pytest.mark.parametrize("kw", [dict(initial_step=0), dict(decay=1.0), dict(max_iterations=0)])
def test_params_validated(kw):
    with pytest.raises(ValueError):
        OptimizerParams(**kw)
