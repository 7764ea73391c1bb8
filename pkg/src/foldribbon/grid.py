"""Grid diagrams and their standard conversion to folded ribbons.

Rows and columns are 1-based; row 1 is the top line of the text form.  The
knot runs from O to X along each row and from X to O along each column, and
vertical strands always pass over horizontal ones.  The resulting ribbon
has width 1, the side of a grid cell.
"""
from dataclasses import dataclass

from .diagram import PolyDiagram
from .ribbon import Fold


class GridError(ValueError):
    pass


class BadDimensions(GridError):
    pass


class RowViolation(GridError):
    pass


class ColumnViolation(GridError):
    pass


class SharedCell(GridError):
    pass


@dataclass(frozen=True)
class GridDiagram:
    n: int
    x_cols: tuple
    o_cols: tuple

    def __post_init__(self):
        n = int(self.n)
        xs, os_ = tuple(int(c) for c in self.x_cols), tuple(int(c) for c in self.o_cols)
        if n < 1 or len(xs) != n or len(os_) != n:
            raise BadDimensions(f"need {n} X and O columns")
        full = list(range(1, n + 1))
        if sorted(xs) != full:
            raise ColumnViolation("X columns are not a permutation")
        if sorted(os_) != full:
            raise ColumnViolation("O columns are not a permutation")
        for r in range(n):
            if xs[r] == os_[r]:
                raise SharedCell(f"X and O share row {r + 1}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "x_cols", xs)
        object.__setattr__(self, "o_cols", os_)

    def x_row(self, c):
        return self.x_cols.index(c) + 1

    def o_row(self, c):
        return self.o_cols.index(c) + 1

    def transpose(self):
        """Reflect in the main diagonal, exchanging the roles of X and O."""
        return GridDiagram(self.n,
                           tuple(self.o_row(c) for c in range(1, self.n + 1)),
                           tuple(self.x_row(c) for c in range(1, self.n + 1)))

    def permutation_cycles(self):
        """Cycles of rows visited by the O->X->O tracing; one per component."""
        seen, cycles = set(), []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc, r = [], start
            while r not in seen:
                seen.add(r)
                cyc.append(r)
                r = self.o_row(self.x_cols[r - 1])
            cycles.append(cyc)
        return cycles


def parse_grid(text):
    lines = [ln.rstrip("\r") for ln in str(text).split("\n")]
    if lines and lines[-1] == "":
        lines.pop()
    n = len(lines)
    if n == 0 or any(len(ln) != n for ln in lines):
        raise BadDimensions(f"expected a square of characters, got {[len(l) for l in lines]}")
    xs, os_ = [], []
    for r, ln in enumerate(lines, 1):
        bad = set(ln) - set(".XO")
        if bad:
            raise BadDimensions(f"row {r}: unexpected characters {sorted(bad)}")
        if ln.count("X") != 1 or ln.count("O") != 1:
            raise RowViolation(f"row {r} must contain exactly one X and one O")
        xs.append(ln.index("X") + 1)
        os_.append(ln.index("O") + 1)
    for c in range(n):
        col = "".join(ln[c] for ln in lines)
        if col.count("X") != 1 or col.count("O") != 1:
            raise ColumnViolation(f"column {c + 1} must contain exactly one X and one O")
    return GridDiagram(n, tuple(xs), tuple(os_))


def format_grid(G):
    rows = []
    for r in range(G.n):
        row = ["."] * G.n
        row[G.x_cols[r] - 1] = "X"
        row[G.o_cols[r] - 1] = "O"
        rows.append("".join(row))
    return "\n".join(rows) + "\n"


def grid_ribbonlength(G):
    """Sum of the row and column X-O distances, in cell units."""
    rows = sum(abs(x - o) for x, o in zip(G.x_cols, G.o_cols))
    cols = sum(abs(G.x_row(c) - G.o_row(c)) for c in range(1, G.n + 1))
    return rows + cols


def cell_center(G, r, c):
    return (c - 0.5, G.n - r + 0.5)


def grid_to_diagram(G):
    """Trace the grid into a polygonal diagram plus folding information.

    Every marker is a right-angle corner.  Crossings put the vertical edge
    on top; at each corner the vertical face is placed over the horizontal
    face, which is an overfold when the outgoing edge is vertical.
    """
    comps = []
    for cyc in G.permutation_cycles():
        pts = []
        for r in cyc:
            pts.append(cell_center(G, r, G.o_cols[r - 1]))
            pts.append(cell_center(G, r, G.x_cols[r - 1]))
        comps.append(pts)
    K = PolyDiagram(comps)
    vertical = {e: e % 2 == 1 for e in range(K.num_edges)}
    # component offsets are even, so parity of the global id gives the direction
    assign = {}
    for (a, b), _ in K.intersections:
        assign[(a, b, 0)] = a if vertical[a] else b
    K = K.with_crossings(assign)
    folds = {v: Fold.OVER if vertical[v] else Fold.UNDER for v in range(K.num_edges)}
    return K, folds
