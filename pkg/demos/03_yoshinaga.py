"""The 18-line arrangement with 48 triple points.

Q1 = (x^3 - y^3)(x + y - cz)(wx + (1-w)y + cz)((1-w)x + wy + cz) and its two
cyclic shifts Q2 = Q1(y, z, x), Q3 = Q1(z, x, y) satisfy Q1 + Q2 + Q3 = 0,
so the 18 lines form a pencil.  The pencil has 36 base points and each
subarrangement has 4 triple points of its own; every union T_i + T_j of two
of these 4-point sets lies on a smooth conic, which forces s = 2.

Run:  python demos/03_yoshinaga.py [c]
"""

import sys
from fractions import Fraction

from triplemono import catalog
from triplemono.monodromy import analyze, classify, coker_rho_prime, rho_prime_kernel
from triplemono.pencil import search_pencil
from triplemono.polygeom import cyclic_tau

c = Fraction(sys.argv[1]) if len(sys.argv) > 1 else Fraction(10)
e = catalog.build("yoshinaga18", c=c)
a = e.arrangement

p = search_pencil(a)
print("pencil partition found by search:", p.partition)
for i, q in enumerate(p.Q, 1):
    print(f"Q{i} = {q}")
print("Q2 == tau(Q1):", p.Q[1] == cyclic_tau(p.Q[0]), "  Q1 + Q2 - Q3 == 0:", (p.Q[0] + p.Q[1] - p.Q[2]).is_zero())
print("|T0| =", len(p.T0), "  |T1|, |T2|, |T3| =", p.sizes())
print("T1 =", ", ".join(map(str, p.T1)))

pred = classify(a, pencil=p)
for ev in pred.conics:
    print(f"{ev.points_set}: conic {ev.conic}, smooth {ev.smooth}, at most {ev.max_collinear} collinear")

r = analyze(a)
print("s =", r.s, " predicted", pred.predicted_s, f"({pred.branch})")
print("coker(rho') =", coker_rho_prime(p), " so coker(rho) = coker(rho') + 1 =", coker_rho_prime(p) + 1)
print("kernel of rho' has", len(rho_prime_kernel(p)), "pairs of cubics")
