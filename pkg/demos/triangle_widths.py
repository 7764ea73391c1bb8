"""How wide can a folded triangle be?

A unit equilateral triangle folded the same way at all three corners stops
being allowed once the three corner overlaps meet in the middle: their
stacking would have to be cyclic there.  Changing one fold breaks the cycle
and the ribbon can grow until its faces stop being simple.
"""
import math

from foldribbon import check_allowed, max_width, ngon_unknot, ribbon_invariants

for pattern in ("OOO", "OOU"):
    K, F = ngon_unknot(3, pattern)
    res = max_width(K, F, tol=1e-9)
    print(f"{pattern}: max width {res.width:.9f}, ribbonlength {3 / res.width:.9f}")
    # just past the threshold the solver explains why
    rep = check_allowed(K, res.width * 1.02, F)
    print("   just above:", [f.kind for f in rep.failures])
    inv = ribbon_invariants(K, 0.5 * res.width, F)
    print(f"   band {inv.band_type.value}, linking number {inv.linking_number}")

print(f"reference values: 1/sqrt(3) = {1 / math.sqrt(3):.9f}, sqrt(3) = {math.sqrt(3):.9f}")

# Regular n-gons with a single fold type follow n cot(pi/n) from n = 4 on.
for n in range(4, 9):
    K, F = ngon_unknot(n, "O" * n)
    w = max_width(K, F, tol=1e-9).width
    print(f"n={n}: rib {n / w:.6f}  n cot(pi/n) {n / math.tan(math.pi / n):.6f}")
