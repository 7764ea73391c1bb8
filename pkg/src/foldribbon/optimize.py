"""Local ribbonlength minimisation over vertex positions.

Moves displace one vertex at a time in eight compass directions and halve
the step when a full sweep finds nothing.  The crossing pattern, the fold
vertices and their turn directions are held fixed, so the ribbon stays in
the same link-equivalence class as the starting one.
"""
from dataclasses import dataclass, field
import math

import numpy as np

from .diagram import DiagramError, PolyDiagram, crossing_signature, diagram_length, fold_angle
from .layering import NoPositiveWidth, is_allowed, max_width

_DIRECTIONS = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)] + [
    (sx / math.sqrt(2.0), sy / math.sqrt(2.0)) for sx, sy in ((1, 1), (-1, 1), (-1, -1), (1, -1))]

TIE = 1e-12


class InfeasibleStart(ValueError):
    pass


@dataclass(frozen=True)
class OptimizerParams:
    initial_step: float = 0.05
    decay: float = 0.5
    min_step: float = 1e-4
    max_iterations: int = 500
    width_tol: float = 1e-9

    def __post_init__(self):
        for name in ("initial_step", "min_step", "max_iterations", "width_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if not 0 < self.decay < 1:
            raise ValueError("decay must lie in (0, 1)")


@dataclass(frozen=True)
class TraceEntry:
    iteration: int
    ribbonlength: float
    width: float
    step: float


@dataclass
class OptimizeResult:
    diagram: PolyDiagram
    width: float
    ribbonlength: float
    trace: list = field(default_factory=list)


def _turns(K):
    return tuple(fold_angle(K, v)[1] for v in range(K.num_edges))


def _moved(K, v, delta):
    c = K.component_of(v)
    comps = [list(comp) for comp in K.components]
    i = v - K.offsets[c]
    x, y = comps[c][i]
    comps[c][i] = (x + delta[0], y + delta[1])
    return PolyDiagram(comps, K.crossing_assignments, K.degenerate_overlaps)


def _refine(K, F, lo, tol):
    """Largest allowed width above a known allowed ``lo``."""
    hi = lo * 1.01
    while is_allowed(K, hi, F):
        lo, hi = hi, hi * 1.01
    return max_width(K, F, tol=tol * lo, lo=lo, hi=hi, sample=False).width


def minimize_ribbonlength(K, F, params=OptimizerParams()):
    """Coordinate descent on Len(K) / max_width(K, F).

    A candidate is accepted only if its crossing signature and turn
    directions match the start and it is allowed at the width that would
    make its ribbonlength strictly smaller than the current one.
    """
    try:
        start = max_width(K, F, tol=params.width_tol, sample=False)
    except NoPositiveWidth as exc:
        raise InfeasibleStart(str(exc)) from exc
    if start.unbounded:
        raise InfeasibleStart("width is unbounded; ribbonlength has no positive minimiser")
    signature = crossing_signature(K)
    turns = _turns(K)
    w = start.width
    rib = diagram_length(K) / w
    trace = [TraceEntry(0, rib, w, 0.0)]
    shortest = min(K.edge_length(e) for e in range(K.num_edges))
    step = params.initial_step * shortest
    floor = params.min_step * shortest
    it = 0
    while step >= floor and it < params.max_iterations:
        it += 1
        improved = False
        for v in range(K.num_edges):
            for dx, dy in _DIRECTIONS:
                try:
                    cand = _moved(K, v, (step * dx, step * dy))
                    if crossing_signature(cand) != signature or _turns(cand) != turns:
                        continue
                except DiagramError:
                    continue
                length = diagram_length(cand)
                w_needed = length / (rib * (1.0 - TIE))
                if not is_allowed(cand, w_needed, F):
                    continue
                w_new = _refine(cand, F, w_needed, params.width_tol)
                K, w, rib = cand, w_new, length / w_new
                trace.append(TraceEntry(it, rib, w, step))
                improved = True
                break
        if not improved:
            step *= params.decay
    return OptimizeResult(K, w, rib, trace)


def perturb(K, scale, seed=None):
    """Displace every vertex by up to ``scale`` times the shortest edge per axis."""
    rng = np.random.default_rng(seed)
    shortest = min(K.edge_length(e) for e in range(K.num_edges))
    comps = []
    for comp in K.components:
        d = rng.uniform(-scale * shortest, scale * shortest, size=(len(comp), 2))
        comps.append([(x + dx, y + dy) for (x, y), (dx, dy) in zip(comp, d)])
    return PolyDiagram(comps, K.crossing_assignments, K.degenerate_overlaps)
