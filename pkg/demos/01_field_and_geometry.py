"""Arithmetic in Q(w) and the plane geometry built on it.

w is a primitive 6th root of unity, w^2 = w - 1.  The cube roots of unity
are w - 1 and -w, which is what lets x^3 - y^3 split into lines.

Run:  python demos/01_field_and_geometry.py
"""

from triplemono import ONE, OMEGA, W
from triplemono.exactfield import format_element, parse_element
from triplemono.polygeom import (
    HomogeneousPolynomial,
    ProjectiveLine,
    conic_through,
    evaluation_matrix,
    line_meet,
)
from triplemono.linalg import rank

print("w^2 =", W * W, "  w^3 =", W ** 3, "  w^6 =", W ** 6)
print("1/w =", W.inv(), "  norm(2+3w) =", (2 + 3 * W).norm())
print("parse('1-w') * w =", parse_element("1-w") * W)

# x^3 - y^3 = (x - y)(x - omega y)(x - omega^2 y)
x = HomogeneousPolynomial.linear(1, 0, 0)
y = HomogeneousPolynomial.linear(0, 1, 0)
prod = (x - y) * (x - y * OMEGA) * (x - y * OMEGA * OMEGA)
print("(x-y)(x-wy)(x-w^2y) with omega = w-1:", prod)

# the three lines meet at (0:0:1)
L = [ProjectiveLine((ONE, -r, 0)) for r in (ONE, OMEGA, OMEGA * OMEGA)]
print("their meets:", {str(line_meet(a, b)) for a, b in [(L[0], L[1]), (L[1], L[2]), (L[0], L[2])]})

# five points determine a conic; a sixth one usually does not lie on it
pts = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)]
print("conic through five points:", conic_through(pts))
print("with (2,-1,5) added:", conic_through(pts + [(2, -1, 5)]))
print("rank of their evaluation matrix against conics:", rank(evaluation_matrix(pts, 2)))
print("canonical text of -1/2+3w:", format_element(parse_element("-1/2+3w")))
