"""The classical triple-point arrangements composed of a pencil, side by side.

For each entry: number of lines d, triple points |T|, the subarrangement
triple-point counts, the computed superabundance s (the dimension of the
epsilon-eigenspace of H^1,0 of the Milnor fiber), b1(F) and the theorem's
prediction.

Run:  python demos/02_catalog_report.py
"""

from triplemono import catalog
from triplemono.errors import HypothesisViolation
from triplemono.monodromy import analyze, classify

print(f"{'entry':12s} {'d':>3s} {'|T|':>4s} {'(T1,T2,T3)':>11s} {'s':>2s} {'b1':>3s}  branch (predicted s)  char. poly")
for e in catalog.all_entries():
    r = analyze(e.arrangement)
    p = classify(e.arrangement)
    sizes = "-" if p.pencil is None else str(p.pencil.sizes()).replace(" ", "")
    print(
        f"{e.name:12s} {r.d:3d} {r.n_triple:4d} {sizes:>11s} {r.s:2d} {r.b1_F:3d}  "
        f"{p.branch.value:13s} ({p.predicted_s})      {r.char_poly_str()}"
    )

# the full Hesse configuration has points of multiplicity 4 and is rejected
try:
    analyze(catalog.hesse_full())
except HypothesisViolation as exc:
    print("\nhesse12:", exc)
