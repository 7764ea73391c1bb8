"""Command-line front end: ``foldribbon <subcommand> ...``.

Inputs are ribbon documents (JSON) or grid text, read from a path or from
standard input, so commands can be chained with pipes.  Reports go to
standard output as JSON with 6-decimal reals.  Exit status is 0 on success,
1 when the ribbon fails a domain check and 2 for usage or parse errors.
"""
import argparse
import sys

from . import formats
from .diagram import DiagramError, diagram_length
from .generators import BadParameters, ngon_unknot, pentagram_trefoil, torus_grid, twist_grid, two_stick_unknot
from .grid import GridError, format_grid, grid_ribbonlength, grid_to_diagram, parse_grid
from .invariants import KnownFamily, NotAllowed, audit_bounds, compare_equivalence, ribbon_invariants
from .layering import NoPositiveWidth, check_allowed, max_width
from .optimize import InfeasibleStart, OptimizerParams, minimize_ribbonlength, perturb
from .ribbon import RibbonError, build_ribbon, folds_from_pattern, pattern_string
from .svg import RenderSpec, render_svg

REAL = "{:.6f}"


class UsageError(Exception):
    pass


class DomainFailure(Exception):
    pass


def _report(obj):
    return formats.dumps(obj, real=REAL, indent=1) + "\n"


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from exc


class Loaded:
    """A ribbon read from JSON or grid text, with CLI overrides applied."""

    def __init__(self, text, args):
        self.grid = None
        if text.lstrip().startswith("{"):
            self.K, self.F, self.width = formats.load_ribbon(text)
        else:
            self.grid = parse_grid(text)
            self.K, self.F = grid_to_diagram(self.grid)
            self.width = 1.0
        if getattr(args, "folds", None):
            self.F = folds_from_pattern(self.K, args.folds)
        if getattr(args, "width", None) is not None:
            self.width = args.width

    def need_width(self):
        if self.width is None:
            raise UsageError("no width: pass --width or include one in the document")
        return self.width


def _load(args, attr="input"):
    path = getattr(args, attr)
    if getattr(args, "file", None):
        path = args.file
    return Loaded(_read(path), args)


def _emit(args, text):
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands -------------------------------------------------------------

def cmd_gen(args):
    kind = args.kind
    if kind == "ngon":
        if args.n is None:
            raise UsageError("gen ngon needs --n")
        folds = args.folds or "O" * args.n
        K, F = ngon_unknot(args.n, folds)
        text = formats.dump_ribbon(K, F, args.width)
    elif kind == "two-stick":
        K, F = two_stick_unknot(args.length)
        text = formats.dump_ribbon(K, F, args.width)
    elif kind == "pentagram":
        K, F = pentagram_trefoil(args.radius)
        text = formats.dump_ribbon(K, F, args.width)
    elif kind == "torus":
        if args.p is None or args.q is None:
            raise UsageError("gen torus needs --p and --q")
        text = format_grid(torus_grid(args.p, args.q))
    else:
        if args.n is None:
            raise UsageError("gen twist needs --n")
        text = format_grid(twist_grid(args.n))
    _emit(args, text)
    return 0


def cmd_grid(args):
    G = parse_grid(_read(args.file or args.input))
    K, F = grid_to_diagram(G)
    _emit(args, formats.dump_ribbon(K, F, 1.0))
    sys.stderr.write(f"grid n={G.n} rib={grid_ribbonlength(G)}\n")
    return 0


def cmd_check(args):
    r = _load(args)
    report = check_allowed(r.K, r.need_width(), r.F)
    _emit(args, _report(formats.report_to_dict(report)))
    return 0 if report.allowed else 1


def cmd_measure(args):
    r = _load(args)
    if r.width is None:
        res = max_width(r.K, r.F, tol=args.tol)
        if res.unbounded:
            raise DomainFailure("width is unbounded; pass --width to measure at a fixed width")
        r.width = res.width
    inv = ribbon_invariants(r.K, r.width, r.F)
    doc = {
        "ribbonlength": inv.ribbonlength,
        "width": float(r.width),
        "linking_numbers": list(inv.linking_numbers),
        "band_types": [b.value for b in inv.band_types],
        "crossings": inv.diagram_crossing_count,
        "folds": pattern_string(r.K, r.F),
        "warnings": inv.warnings,
    }
    if r.grid is not None:
        doc["grid_n"] = r.grid.n
        doc["grid_ribbonlength"] = grid_ribbonlength(r.grid)
    _emit(args, _report(doc))
    return 0


def cmd_maxwidth(args):
    r = _load(args)
    res = max_width(r.K, r.F, tol=args.tol)
    doc = {"max_width": res.width, "unbounded": res.unbounded, "tol": f"{args.tol:g}",
           "monotone": res.monotone}
    if not res.unbounded:
        doc["ribbonlength"] = diagram_length(r.K) / res.width
    _emit(args, _report(doc))
    return 0


def cmd_optimize(args):
    r = _load(args)
    K = r.K
    if args.perturb:
        K = perturb(K, args.perturb, seed=args.seed)
    params = OptimizerParams(initial_step=args.step, min_step=args.min_step,
                             max_iterations=args.max_iterations)
    res = minimize_ribbonlength(K, r.F, params)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(formats.dump_ribbon(res.diagram, r.F, res.width))
    sys.stdout.write(_report({
        "ribbonlength": res.ribbonlength,
        "width": res.width,
        "trace": [{"iteration": t.iteration, "rib": t.ribbonlength, "w": t.width} for t in res.trace],
    }))
    return 0


def _ribbon_for_compare(r, tol):
    if r.width is None:
        res = max_width(r.K, r.F, tol=tol)
        r.width = 1.0 if res.unbounded else res.width
    return (r.K, r.width, r.F)


def cmd_compare(args):
    a = Loaded(_read(args.first), args)
    b = Loaded(_read(args.second), args)
    ev = compare_equivalence(_ribbon_for_compare(a, args.tol), _ribbon_for_compare(b, args.tol))
    _emit(args, _report({level: {"status": getattr(ev, level).status,
                                 "witness": getattr(ev, level).witness}
                         for level in ("link", "topological", "diagram")}))
    return 0


def _family(spec):
    try:
        kind, _, rest = spec.partition(":")
        if kind == "unknot":
            return KnownFamily.unknot()
        if kind == "twist":
            return KnownFamily.twist(int(rest))
        if kind == "torus":
            p, q = (int(x) for x in rest.split(","))
            return KnownFamily.torus(p, q)
    except ValueError as exc:
        raise UsageError(f"bad family {spec!r}: {exc}") from exc
    raise UsageError(f"unknown family {spec!r}; use unknot, twist:N or torus:P,Q")


def cmd_audit(args):
    r = _load(args)
    fam = _family(args.family)
    g = args.grid_number if args.grid_number is not None else (r.grid.n if r.grid else None)
    if r.width is None:
        r.width = max_width(r.K, r.F, tol=args.tol).width
    a = audit_bounds(r.K, r.width, fam, g)
    doc = {"ribbonlength": a.ribbonlength, "crossing_number": a.crossing_number,
           "linear_bound": a.linear, "grid_chain_bound": a.grid_chain,
           "quadratic_bound": a.quadratic, "ratio": a.ratio, "holds": a.holds}
    if g is not None:
        doc["grid_number"] = g
        doc["grid_bound"] = 2 * g * (g - 1)
    _emit(args, _report(doc))
    return 0


def cmd_svg(args):
    r = _load(args)
    w = r.need_width()
    report = check_allowed(r.K, w, r.F)
    if not report.allowed:
        raise NotAllowed(f"ribbon of width {w} is not allowed: {report.failures}")
    spec = RenderSpec(width=args.size, height=args.size, gap=args.gap)
    _emit(args, render_svg(build_ribbon(r.K, w, r.F), report.layering, spec))
    return 0


# -- parser ------------------------------------------------------------------

def _positive(s):
    try:
        x = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {s}") from None
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {s}")
    return x


def build_parser():
    p = argparse.ArgumentParser(prog="foldribbon", description="Folded ribbon knots: validity, width and invariants.")
    sub = p.add_subparsers(dest="command", required=True)

    def ribbon_cmd(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("input", nargs="?", default="-", help="ribbon JSON or grid text (default: stdin)")
        sp.add_argument("--file", help="same as the positional input")
        sp.add_argument("--width", type=_positive)
        sp.add_argument("--folds", help="one O/U letter per vertex")
        sp.add_argument("--tol", type=_positive, default=1e-7)
        sp.add_argument("--out")
        sp.set_defaults(fn=fn)
        return sp

    g = sub.add_parser("gen", help="emit a generated diagram or grid")
    g.add_argument("kind", choices=["ngon", "two-stick", "pentagram", "torus", "twist"])
    g.add_argument("--n", type=int)
    g.add_argument("--p", type=int)
    g.add_argument("--q", type=int)
    g.add_argument("--folds")
    g.add_argument("--length", type=_positive, default=1.0)
    g.add_argument("--radius", type=_positive, default=1.0)
    g.add_argument("--width", type=_positive)
    g.add_argument("--out")
    g.set_defaults(fn=cmd_gen)

    gr = sub.add_parser("grid", help="convert grid text to a width-1 ribbon document")
    gr.add_argument("input", nargs="?", default="-")
    gr.add_argument("--file")
    gr.add_argument("--out")
    gr.set_defaults(fn=cmd_grid)

    ribbon_cmd("check", cmd_check, "validity report at a width")
    ribbon_cmd("measure", cmd_measure, "ribbonlength, linking numbers and band type")
    ribbon_cmd("maxwidth", cmd_maxwidth, "largest allowed width")
    a = ribbon_cmd("audit", cmd_audit, "compare ribbonlength with crossing-number bounds")
    a.add_argument("--family", required=True, help="unknot, twist:N or torus:P,Q")
    a.add_argument("--grid-number", type=int)
    s = ribbon_cmd("svg", cmd_svg, "render an allowed ribbon as SVG")
    s.add_argument("--size", type=int, default=600)
    s.add_argument("--gap", type=float, default=0.3, help="under-strand gap as a fraction of the width")

    o = ribbon_cmd("optimize", cmd_optimize, "locally minimise ribbonlength")
    o.add_argument("--seed", type=int)
    o.add_argument("--perturb", type=float, default=0.0, help="perturb the start by this fraction first")
    o.add_argument("--step", type=_positive, default=0.05)
    o.add_argument("--min-step", type=_positive, default=1e-4)
    o.add_argument("--max-iterations", type=int, default=500)

    c = sub.add_parser("compare", help="equivalence evidence for two ribbons")
    c.add_argument("first")
    c.add_argument("second")
    c.add_argument("--tol", type=_positive, default=1e-7)
    c.add_argument("--out")
    c.set_defaults(fn=cmd_compare)
    return p


def run_cli(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except (UsageError, formats.FormatError, GridError, BadParameters, DiagramError,
            RibbonError, ValueError) as exc:
        if isinstance(exc, (NotAllowed, NoPositiveWidth, InfeasibleStart)):
            sys.stderr.write(f"error: {exc}\n")
            return 1
        sys.stderr.write(f"usage error: {exc}\n")
        parser.print_usage(sys.stderr)
        return 2
    except DomainFailure as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main():
    sys.exit(run_cli())
