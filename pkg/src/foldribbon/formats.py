"""JSON interchange for diagrams, ribbons and reports.

Diagram and ribbon documents write reals with 17 significant digits, so a
write/read round trip is exact.  Reports use fixed 6-decimal reals.
"""
import json
import math

from .diagram import PolyDiagram
from .ribbon import Fold


class FormatError(ValueError):
    pass


def dumps(obj, real="{:.17g}", indent=None, _level=0):
    """JSON text with every float rendered through ``real``."""
    pad = "" if indent is None else "\n" + " " * (indent * (_level + 1))
    end = "" if indent is None else "\n" + " " * (indent * _level)
    sep = ", " if indent is None else ","
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return json.dumps(None)
        return real.format(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [pad + json.dumps(str(k)) + ": " + dumps(v, real, indent, _level + 1)
                 for k, v in obj.items()]
        return "{" + sep.join(items) + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        # keep coordinate pairs on one line
        if indent is not None and all(isinstance(x, (int, float)) for x in obj):
            return "[" + ", ".join(dumps(x, real) for x in obj) + "]"
        return "[" + sep.join(pad + dumps(x, real, indent, _level + 1) for x in obj) + end + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def diagram_to_dict(K):
    return {
        "components": [[[x, y] for x, y in comp] for comp in K.components],
        "crossings": [{"edge_a": a, "edge_b": b, "index": idx, "over": over}
                      for (a, b, idx), over in sorted(K.crossing_assignments.items())],
        "degenerate_overlaps": [{"edge_a": a, "edge_b": b, "over": over}
                                for (a, b), over in sorted(K.degenerate_overlaps.items())],
    }


def diagram_from_dict(d):
    try:
        comps = [[(float(p[0]), float(p[1])) for p in comp] for comp in d["components"]]
        crossings = {(int(c["edge_a"]), int(c["edge_b"]), int(c.get("index", 0))): int(c["over"])
                     for c in d.get("crossings", [])}
        overlaps = {(int(c["edge_a"]), int(c["edge_b"])): int(c["over"])
                    for c in d.get("degenerate_overlaps", [])}
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise FormatError(f"malformed diagram document: {exc}") from exc
    return PolyDiagram(comps, crossings, overlaps)


def ribbon_to_dict(K, F=None, width=None):
    d = diagram_to_dict(K)
    if width is not None:
        d["width"] = float(width)
    if F is not None:
        d["folds"] = {str(v): F[v].value for v in sorted(F)}
    return d


def ribbon_from_dict(d):
    K = diagram_from_dict(d)
    try:
        F = {int(v): Fold.parse(s) for v, s in d.get("folds", {}).items()}
        w = d.get("width")
        w = None if w is None else float(w)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"malformed ribbon document: {exc}") from exc
    return K, F, w


def dump_diagram(K, indent=1):
    return dumps(diagram_to_dict(K), indent=indent) + "\n"


def load_diagram(text):
    return diagram_from_dict(_parse(text))


def dump_ribbon(K, F=None, width=None, indent=1):
    return dumps(ribbon_to_dict(K, F, width), indent=indent) + "\n"


def load_ribbon(text):
    return ribbon_from_dict(_parse(text))


def _parse(text):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(d, dict):
        raise FormatError("document must be a JSON object")
    return d


def report_to_dict(report):
    """Structured form of a :class:`~foldribbon.layering.ValidityReport`."""
    fails = []
    for f in report.failures:
        item = {"kind": f.kind}
        if f.kind == "ImmersionFailure":
            item["edge"] = f.edge
        elif f.kind == "PiercingFailure":
            item.update(vertex=f.vertex, face=f.face, point=list(f.point))
        elif f.kind == "CycleFailure":
            item.update(faces=list(f.faces), point=list(f.point))
        else:
            item.update(pair=list(f.pair), point=None if f.point is None else list(f.point),
                        constraints=list(f.reasons))
        fails.append(item)
    return {
        "allowed": report.allowed,
        "width": report.width,
        "failures": fails,
        "layering": [{"faces": [a, b], "above": top} for (a, b), top in sorted(report.layering.items())],
    }
