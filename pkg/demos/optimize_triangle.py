"""Shake a triangle and let coordinate descent pull it back.

The optimizer moves one vertex at a time and accepts a move only if the
ribbon stays allowed at the width that makes it strictly shorter, so the
trace decreases monotonically toward 3 sqrt(3).
"""
import math

from foldribbon import minimize_ribbonlength, ngon_unknot, perturb

K, F = ngon_unknot(3, "OOO")
target = 3 * math.sqrt(3)
for seed in range(5):
    start = perturb(K, 0.05, seed=seed)
    res = minimize_ribbonlength(start, F)
    first = res.trace[0].ribbonlength
    print(f"seed {seed}: {first:.6f} -> {res.ribbonlength:.9f} in {len(res.trace) - 1} accepted moves "
          f"(gap {res.ribbonlength - target:.1e})")

# A closer look at one run
res = minimize_ribbonlength(perturb(K, 0.05, seed=0), F)
for t in res.trace[:: max(1, len(res.trace) // 8)]:
    print(f"  iter {t.iteration:3d}  rib {t.ribbonlength:.6f}  w {t.width:.6f}  step {t.step:.2e}")
