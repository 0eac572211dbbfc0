"""Random triple-only arrangements: the theorem against the rank computation.

Random rational lines, many of them forced through existing intersection
points, are filtered to the double/triple-point hypothesis.  For each one
the pencil search decides the theorem branch and the superabundance is
computed independently; they must agree.

Run:  python demos/04_random_arrangements.py [count] [seed]
"""

import random
import sys
from collections import Counter

from triplemono.monodromy import cross_validate
from triplemono.verify import random_triple_only_arrangement

count = int(sys.argv[1]) if len(sys.argv) > 1 else 60
rng = random.Random(int(sys.argv[2]) if len(sys.argv) > 2 else 1)

tally = Counter()
failures = 0
for _ in range(count):
    d = 3 * rng.randint(1, 4)
    v = cross_validate(random_triple_only_arrangement(rng, d))
    tally[(d, v.report.n_triple, v.prediction.branch.value, v.report.s)] += 1
    failures += not v.ok

print(f"{'d':>3s} {'|T|':>4s}  {'branch':12s} {'s':>2s}  count")
for (d, t, branch, s), n in sorted(tally.items()):
    print(f"{d:3d} {t:4d}  {branch:12s} {s:2d}  {n}")
print("all checks passed" if not failures else f"{failures} arrangement(s) failed a check")
