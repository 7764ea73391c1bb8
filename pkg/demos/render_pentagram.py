"""Draw the five-stick trefoil at a few widths.

The fold pattern is the one of the 32 choices certified at the largest
width.  Pass an output directory as the first argument (default: the
current directory).
"""
import pathlib
import sys

from foldribbon import build_ribbon, check_allowed, max_width, pentagram_trefoil, render_svg

out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else ".")
K, F = pentagram_trefoil()
res = max_width(K, F, tol=1e-9)
print("fold pattern:", "".join(F[v].value[0].upper() for v in range(5)))
print(f"max width {res.width:.9f}, ribbonlength {sum(K.edge_length(e) for e in range(5)) / res.width:.9f}")

for frac in (0.3, 0.7, 1.0):
    w = frac * res.width
    rep = check_allowed(K, w, F)
    path = out / f"pentagram_{int(frac * 100):03d}.svg"
    path.write_text(render_svg(build_ribbon(K, w, F), rep.layering))
    print("wrote", path)
