"""Tiny DPLL solver: unit propagation plus chronological backtracking.

Clauses are lists of non-zero ints in DIMACS style.  Layering instances have
a few dozen variables, so no clause learning is attempted.
"""


def solve(num_vars, clauses):
    """Return a satisfying assignment ``{var: bool}`` or ``None``."""
    clauses = [list(dict.fromkeys(c)) for c in clauses]
    for c in clauses:
        if not c:
            return None
    watch = {}
    for idx, c in enumerate(clauses):
        for lit in c:
            watch.setdefault(-lit, []).append(idx)
    assign = {}
    trail = []

    def value(lit):
        v = assign.get(abs(lit))
        if v is None:
            return None
        return v if lit > 0 else not v

    def propagate(queue):
        while queue:
            lit = queue.pop()
            # clauses that contain -lit may have become unit or empty
            for idx in watch.get(lit, ()):
                unassigned = None
                n_free = 0
                sat = False
                for l2 in clauses[idx]:
                    val = value(l2)
                    if val is True:
                        sat = True
                        break
                    if val is None:
                        n_free += 1
                        unassigned = l2
                if sat:
                    continue
                if n_free == 0:
                    return False
                if n_free == 1:
                    assign[abs(unassigned)] = unassigned > 0
                    trail.append(abs(unassigned))
                    queue.append(unassigned)
        return True

    def set_lit(lit):
        assign[abs(lit)] = lit > 0
        trail.append(abs(lit))
        return propagate([lit])

    units = [c[0] for c in clauses if len(c) == 1]
    for lit in units:
        val = value(lit)
        if val is False:
            return None
        if val is None and not set_lit(lit):
            return None

    # iterative DPLL over variables in index order
    order = [v for v in range(1, num_vars + 1)]
    stack = []  # (trail length before decision, var, tried_both)

    def next_free():
        for v in order:
            if v not in assign:
                return v
        return None

    while True:
        v = next_free()
        if v is None:
            return {k: assign.get(k, False) for k in range(1, num_vars + 1)}
        mark = len(trail)
        ok = set_lit(v)
        stack.append((mark, v, False))
        while not ok:
            # backtrack to the most recent decision with an untried branch
            while stack and stack[-1][2]:
                mark, _, _ = stack.pop()
                _undo(assign, trail, mark)
            if not stack:
                return None
            mark, var, _ = stack.pop()
            _undo(assign, trail, mark)
            stack.append((mark, var, True))
            ok = set_lit(-var)


def _undo(assign, trail, mark):
    while len(trail) > mark:
        del assign[trail.pop()]
