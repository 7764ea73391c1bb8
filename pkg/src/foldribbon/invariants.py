"""Ribbonlength, ribbon linking number, band type and bound audits."""
from dataclasses import dataclass, field
import math

from . import predicates as pr
from .diagram import component_linking, crossing_sign, diagram_length, find_crossings
from .layering import check_allowed
from .ribbon import band_type, boundary_components, build_ribbon


class NotAllowed(ValueError):
    pass


class UnresolvedCrossing(RuntimeError):
    """A centerline/boundary crossing between faces with no recorded overlap."""


def ribbonlength(K, w):
    if not w > 0:
        from .ribbon import ZeroWidth
        raise ZeroWidth(f"width must be positive, got {w}")
    return diagram_length(K) / w


def _allowed_report(K, w, F, report):
    if report is None:
        report = check_allowed(K, w, F)
    if not report.allowed:
        raise NotAllowed(f"ribbon of width {w} is not allowed: {report.failures}")
    return report


def boundary_crossings(R, boundary, report):
    """Signed crossings between a boundary curve and its own centerline."""
    K = R.diagram
    out = []
    edges = list(K.component_edges(boundary.component))
    for seg in boundary.segments:
        j = seg.face
        dj = K.edge_direction(j)
        for i in edges:
            if i == j:
                continue
            a, b = K.edges[i]
            hit = pr.line_intersection(a, b, seg.start, seg.end)
            if hit is None:
                continue
            t, u = hit
            if not (0.0 <= t < 1.0 and 0.0 <= u < 1.0):
                continue
            key = (i, j) if i < j else (j, i)
            if key not in report.layering:
                raise UnresolvedCrossing(f"edge {i} meets boundary of face {j} outside any overlap")
            di = K.edge_direction(i)
            if report.layering[key] == i:
                sign = crossing_sign(di, dj)
            else:
                sign = crossing_sign(dj, di)
            pt = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
            out.append((pt, i, j, sign))
    return out


def ribbon_linking_number(K, w, F, report=None):
    """Half the signed centerline/boundary crossing count, per boundary curve.

    Returns one integer per boundary curve, components in order; an annulus
    contributes two values and a Moebius band one.
    """
    report = _allowed_report(K, w, F, report)
    R = build_ribbon(K, w, F)
    out = []
    for B in boundary_components(R):
        total = sum(s for *_, s in boundary_crossings(R, B, report))
        if total % 2:
            raise AssertionError(f"odd signed crossing sum {total} on boundary of component {B.component}")
        out.append(total // 2)
    return tuple(out)


@dataclass
class RibbonInvariants:
    ribbonlength: float
    linking_numbers: tuple
    band_types: tuple
    diagram_crossing_count: int
    warnings: list = field(default_factory=list)

    @property
    def band_type(self):
        if len(self.band_types) != 1:
            raise ValueError("band_type is per component for links; use band_types")
        return self.band_types[0]

    @property
    def linking_number(self):
        """The value used in comparisons (``None`` when annulus boundaries disagree)."""
        vals = set(self.linking_numbers)
        return self.linking_numbers[0] if len(vals) == 1 else None


def ribbon_invariants(K, w, F, report=None):
    report = _allowed_report(K, w, F, report)
    lks = ribbon_linking_number(K, w, F, report)
    bands = tuple(band_type(K, c) for c in range(len(K.components)))
    warnings = []
    R = build_ribbon(K, w, F)
    per_comp = {}
    for B, lk in zip(boundary_components(R), lks):
        per_comp.setdefault(B.component, []).append(lk)
    for c, vals in per_comp.items():
        if len(set(vals)) > 1:
            warnings.append(f"component {c}: annulus boundaries give linking numbers {vals}")
    return RibbonInvariants(ribbonlength(K, w), lks, bands, len(find_crossings(K)), warnings)


# -- equivalence -------------------------------------------------------------

DISTINGUISHED = "distinguished"
NOT_DISTINGUISHED = "not_distinguished"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class LevelEvidence:
    status: str
    witness: str = ""


@dataclass(frozen=True)
class EquivalenceEvidence:
    link: LevelEvidence
    topological: LevelEvidence
    diagram: LevelEvidence


def _same_diagram(K1, K2):
    return K1.components == K2.components and \
        K1.crossing_assignments == K2.crossing_assignments and \
        K1.degenerate_overlaps == K2.degenerate_overlaps


def compare_equivalence(r1, r2):
    """Compare two allowed ribbons ``(K, w, F)`` at the three equivalence levels.

    Knot equivalence itself is never decided: the diagram level only
    separates ribbons whose component count or inter-component linking
    differ, and is otherwise ``unknown`` unless the diagrams are identical.
    """
    (K1, w1, F1), (K2, w2, F2) = r1, r2
    inv1, inv2 = ribbon_invariants(K1, w1, F1), ribbon_invariants(K2, w2, F2)

    if _same_diagram(K1, K2):
        diag = LevelEvidence(NOT_DISTINGUISHED, "identical diagrams")
    elif len(K1.components) != len(K2.components):
        diag = LevelEvidence(DISTINGUISHED,
                             f"{len(K1.components)} vs {len(K2.components)} components")
    else:
        l1 = sorted(map(abs, component_linking(K1).values()))
        l2 = sorted(map(abs, component_linking(K2).values()))
        if l1 != l2:
            diag = LevelEvidence(DISTINGUISHED, f"component linking {l1} vs {l2}")
        else:
            diag = LevelEvidence(UNKNOWN, "knot equivalence is not decided")

    if inv1.band_types != inv2.band_types:
        topo = LevelEvidence(DISTINGUISHED, f"band types {[b.value for b in inv1.band_types]}"
                                            f" vs {[b.value for b in inv2.band_types]}")
    elif diag.status == DISTINGUISHED:
        topo = LevelEvidence(DISTINGUISHED, "diagrams differ")
    else:
        topo = LevelEvidence(NOT_DISTINGUISHED, f"both {[b.value for b in inv1.band_types]}")

    lk1, lk2 = inv1.linking_numbers, inv2.linking_numbers
    if lk1 != lk2:
        link = LevelEvidence(DISTINGUISHED, f"linking numbers {list(lk1)} vs {list(lk2)}")
    elif topo.status == DISTINGUISHED:
        link = LevelEvidence(DISTINGUISHED, topo.witness)
    else:
        link = LevelEvidence(NOT_DISTINGUISHED, f"linking numbers {list(lk1)}")
    return EquivalenceEvidence(link, topo, diag)


# -- known families and bounds -----------------------------------------------

@dataclass(frozen=True)
class KnownFamily:
    kind: str
    params: tuple = ()

    @classmethod
    def torus(cls, p, q):
        if not (p >= 2 and q >= 2 and math.gcd(p, q) == 1):
            raise ValueError("torus knot needs coprime p, q >= 2")
        return cls("torus", (int(p), int(q)))

    @classmethod
    def twist(cls, n):
        if n < 1:
            raise ValueError("twist knot needs n >= 1")
        return cls("twist", (int(n),))

    @classmethod
    def unknot(cls):
        return cls("unknot")

    @property
    def crossing_number(self):
        if self.kind == "torus":
            p, q = self.params
            return min(p * (q - 1), q * (p - 1))
        if self.kind == "twist":
            return self.params[0] + 2
        return 0

    @property
    def grid_index_bound(self):
        return self.crossing_number + 2


@dataclass(frozen=True)
class BoundAudit:
    ribbonlength: float
    crossing_number: int
    linear: int
    grid_chain: int
    quadratic: int
    grid_number: int = None
    holds: dict = field(default_factory=dict)

    @property
    def ratio(self):
        """Empirical Rib / Cr, the slope a linear upper bound would need."""
        return self.ribbonlength / self.crossing_number if self.crossing_number else math.inf


def audit_bounds(K, w, family, grid_number=None):
    """Evaluate the crossing-number upper bounds on one ribbon.

    ``linear`` is 8 Cr, ``grid_chain`` is 2 (Cr+1)(Cr+2) and ``quadratic``
    12 Cr^2.  With a grid number g the bound 2 g (g-1) is audited as well.
    """
    rib = ribbonlength(K, w)
    cr = family.crossing_number
    linear, chain, quad = 8 * cr, 2 * (cr + 1) * (cr + 2), 12 * cr * cr
    tol = 1e-9 * max(1.0, rib)
    holds = {
        "linear": rib <= linear + tol,
        "grid_chain": rib <= chain + tol,
        "quadratic": rib <= quad + tol,
        "chain_ordered": chain <= quad if cr >= 2 else None,
    }
    if grid_number is not None:
        holds["grid"] = rib <= 2 * grid_number * (grid_number - 1) + tol
    return BoundAudit(rib, cr, linear, chain, quad, grid_number, holds)
