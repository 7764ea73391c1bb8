"""Ribbonlength of grid diagrams against crossing-number bounds.

Every grid gives a folded ribbon of width 1 whose length is the sum of the
X-O distances.  Twist knots have a staircase grid that meets the linear
bound 8 Cr exactly; torus knots sit comfortably below it.
"""
import math

from foldribbon import (KnownFamily, audit_bounds, grid_ribbonlength, grid_to_diagram, ribbon_invariants,
                        torus_grid, twist_grid, format_grid)

print(format_grid(twist_grid(3)))

print(" knot      grid  rib  8*Cr  2g(g-1)  Lk")
for n in range(1, 6):
    G = twist_grid(n)
    K, F = grid_to_diagram(G)
    a = audit_bounds(K, 1.0, KnownFamily.twist(n), grid_number=G.n)
    lk = ribbon_invariants(K, 1.0, F).linking_numbers
    print(f" T_{n:<7} {G.n:>4} {a.ribbonlength:>4.0f} {a.linear:>5} {2 * G.n * (G.n - 1):>8}  {lk}")

for p in range(3, 9):
    for q in range(2, p):
        if math.gcd(p, q) != 1:
            continue
        G = torus_grid(p, q)
        cr = KnownFamily.torus(p, q).crossing_number
        print(f" T({p},{q})   {G.n:>4} {grid_ribbonlength(G):>4} {8 * cr:>5} {2 * G.n * (G.n - 1):>8}")
