"""Folded ribbon knots: geometry, validity, width and invariants."""
from .diagram import (CrossingData, DegenerateIntersection, DiagramError, MissingAssignment, PolyDiagram, Side,
                      crossing_sign, crossing_signature, diagram_length, find_crossings, fold_angle,
                      fold_vertices, polygon_diagram)
from .generators import (BadParameters, BadPatternLength, ngon_unknot, pentagram_trefoil, regular_polygon,
                         torus_grid, twist_grid, two_stick_unknot)
from .grid import (BadDimensions, ColumnViolation, GridDiagram, GridError, RowViolation, SharedCell, format_grid,
                   grid_ribbonlength, grid_to_diagram, parse_grid)
from .invariants import (KnownFamily, NotAllowed, RibbonInvariants, audit_bounds, compare_equivalence,
                         ribbon_invariants, ribbon_linking_number, ribbonlength)
from .layering import (CrossingMismatch, CycleFailure, ImmersionFailure, NoPositiveWidth, PiercingFailure,
                       ValidityReport, WidthResult, check_allowed, is_allowed, max_width)
from .optimize import InfeasibleStart, OptimizeResult, OptimizerParams, minimize_ribbonlength, perturb
from .ribbon import (BandType, Fold, MissingFoldChoice, RibbonGeometry, ZeroWidth, band_type,
                     boundary_components, build_ribbon, folds_from_pattern, mirror_ribbon, reverse_ribbon)
from .svg import RenderSpec, render_svg

__version__ = "0.1.0"
