"""Homogeneous forms in x, y, z over Q(w), projective points and lines.

Monomials of a fixed degree are always listed in graded lexicographic order
with x > y > z, so evaluation matrices and kernel vectors are reproducible.
"""

from __future__ import annotations

from functools import lru_cache, total_ordering
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .exactfield import ONE, ZERO, FieldElement, as_element, format_element
from .linalg import bareiss_rank, kernel, rank

__all__ = [
    "monomials",
    "dim_forms",
    "HomogeneousPolynomial",
    "ProjectivePoint",
    "ProjectiveLine",
    "Conic",
    "DegenerateInput",
    "evaluate",
    "multiply",
    "cyclic_tau",
    "tau_point",
    "line_meet",
    "line_through",
    "collinear",
    "evaluation_matrix",
    "integral_representative",
    "integral_evaluation_rows",
    "rank",
    "imposes_independent_conditions",
    "conic_through",
    "conic_is_smooth",
    "det3",
]


class DegenerateInput(ValueError):
    pass


@lru_cache(maxsize=None)
def monomials(k: int) -> tuple[tuple[int, int, int], ...]:
    """Exponent triples of total degree k, grlex with x > y > z; empty for k < 0."""
    if k < 0:
        return ()
    return tuple((i, j, k - i - j) for i in range(k, -1, -1) for j in range(k - i, -1, -1))


def dim_forms(k: int) -> int:
    return (k + 1) * (k + 2) // 2 if k >= 0 else 0


def det3(rows: Sequence[Sequence[FieldElement]]) -> FieldElement:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _canonical_triple(coords) -> tuple[FieldElement, FieldElement, FieldElement]:
    coords = tuple(as_element(c) for c in coords)
    if len(coords) != 3:
        raise ValueError("expected three homogeneous coordinates")
    for c in reversed(coords):
        if c:
            if c == ONE:
                return coords
            s = c.inv()
            return tuple(x * s for x in coords)
    raise DegenerateInput("all homogeneous coordinates are zero")


@total_ordering
class _Projective:
    __slots__ = ("_coords",)

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = coords[0]
        object.__setattr__(self, "_coords", _canonical_triple(coords))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def coords(self) -> tuple[FieldElement, FieldElement, FieldElement]:
        return self._coords

    def __iter__(self):
        return iter(self._coords)

    def __getitem__(self, i):
        return self._coords[i]

    def __eq__(self, other):
        if type(other) is type(self):
            return self._coords == other._coords
        return NotImplemented

    def __lt__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._coords < other._coords

    def __hash__(self):
        return hash((type(self).__name__, self._coords))

    def __str__(self):
        return "(" + ":".join(format_element(c) for c in self._coords) + ")"

    def __repr__(self):
        return f"{type(self).__name__}{self}"


class ProjectivePoint(_Projective):
    """A point of P^2, stored with its last nonzero coordinate equal to 1."""

    __slots__ = ()


class ProjectiveLine(_Projective):
    """The line a*x + b*y + c*z = 0, coefficients normalized like points."""

    __slots__ = ()

    def contains(self, p: ProjectivePoint) -> bool:
        a, b, c = self._coords
        x, y, z = p.coords
        return not (a * x + b * y + c * z)

    def form(self) -> HomogeneousPolynomial:
        return HomogeneousPolynomial.linear(*self._coords)

    def __str__(self):
        return "[" + ":".join(format_element(c) for c in self._coords) + "]"


class HomogeneousPolynomial:
    """A homogeneous form in x, y, z; ``terms`` maps exponent triples to nonzero coefficients."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[tuple[int, int, int], object] | None = None):
        self.degree = degree
        clean = {}
        for mon, c in (terms or {}).items():
            if sum(mon) != degree or min(mon) < 0:
                raise ValueError(f"monomial {mon} does not have degree {degree}")
            c = as_element(c)
            if c:
                clean[tuple(mon)] = c
        self.terms = clean

    @classmethod
    def zero(cls, degree: int) -> HomogeneousPolynomial:
        return cls(degree)

    @classmethod
    def linear(cls, a, b, c) -> HomogeneousPolynomial:
        return cls(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    @classmethod
    def from_vector(cls, degree: int, vec: Sequence[FieldElement]) -> HomogeneousPolynomial:
        return cls(degree, dict(zip(monomials(degree), vec)))

    def coefficient(self, mon) -> FieldElement:
        return self.terms.get(tuple(mon), ZERO)

    def vector(self) -> list[FieldElement]:
        """Coefficients in grlex order of the monomials of this degree."""
        return [self.terms.get(m, ZERO) for m in monomials(self.degree)]

    def is_zero(self) -> bool:
        return not self.terms

    def primitive(self) -> HomogeneousPolynomial:
        """Scalar multiple with integral coefficients, no common integer factor, leading part positive."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = lcm(den, c.re_part.denominator, c.w_part.denominator)
        g = gcd(*(int(v * den) for c in self.terms.values() for v in (c.re_part, c.w_part)))
        lead = self.leading_coefficient()
        sign = -1 if (lead.re_part or lead.w_part) < 0 else 1
        return self * FieldElement(Fraction(sign * den, g))

    def leading_coefficient(self) -> FieldElement:
        for m in monomials(self.degree):
            if m in self.terms:
                return self.terms[m]
        return ZERO

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPolynomial):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def _check(self, other):
        if self.degree != other.degree and self.terms and other.terms:
            raise ValueError("cannot add forms of different degrees")

    def __add__(self, other):
        self._check(other)
        deg = self.degree if self.terms else other.degree
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return HomogeneousPolynomial(deg, out)

    def __neg__(self):
        return HomogeneousPolynomial(self.degree, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HomogeneousPolynomial):
            return multiply(self, other)
        c = as_element(other)
        return HomogeneousPolynomial(self.degree, {m: v * c for m, v in self.terms.items()})

    __rmul__ = __mul__

    def __call__(self, p) -> FieldElement:
        return evaluate(self, p)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"HomogeneousPolynomial({self.degree}, {self})"


def format_polynomial(f: HomogeneousPolynomial) -> str:
    if not f.terms:
        return "0"
    parts = []
    for mon in monomials(f.degree):
        c = f.terms.get(mon)
        if c is None:
            continue
        vars_ = "*".join(
            v if e == 1 else f"{v}^{e}" for v, e in zip("xyz", mon) if e
        )
        if c.is_rational():
            neg = c.re_part < 0
            mag = abs(c.re_part)
            ctxt = format_element(FieldElement(mag)) if (mag != 1 or not vars_) else ""
        else:
            neg = False
            ctxt = f"({format_element(c)})"
        term = "*".join(t for t in (ctxt, vars_) if t)
        parts.append(("-", term) if neg else ("+", term))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


def _coords(p) -> tuple:
    if isinstance(p, _Projective):
        return p.coords
    return tuple(as_element(c) for c in p)


def _powers(v: FieldElement, k: int) -> list[FieldElement]:
    out = [ONE]
    for _ in range(k):
        out.append(out[-1] * v)
    return out


def evaluate(f: HomogeneousPolynomial, p) -> FieldElement:
    """Value of ``f`` at the stored representative of ``p``."""
    if not f.terms:
        return ZERO
    x, y, z = _coords(p)
    k = f.degree
    px, py, pz = _powers(x, k), _powers(y, k), _powers(z, k)
    total = ZERO
    for (i, j, l), c in f.terms.items():
        total = total + c * px[i] * py[j] * pz[l]
    return total


def multiply(f: HomogeneousPolynomial, g: HomogeneousPolynomial) -> HomogeneousPolynomial:
    out: dict = {}
    for (a, b, c), u in f.terms.items():
        for (d, e, h), v in g.terms.items():
            m = (a + d, b + e, c + h)
            out[m] = out.get(m, ZERO) + u * v
    return HomogeneousPolynomial(f.degree + g.degree, out)


def cyclic_tau(f: HomogeneousPolynomial) -> HomogeneousPolynomial:
    """The form f(y, z, x)."""
    return HomogeneousPolynomial(f.degree, {(k, i, j): c for (i, j, k), c in f.terms.items()})


def tau_point(p: ProjectivePoint) -> ProjectivePoint:
    """Point map matching ``cyclic_tau`` on zero sets: f(p) = 0 iff tau(f)(tau_point(p)) = 0."""
    x, y, z = p.coords
    return ProjectivePoint(z, x, y)


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def line_meet(L1: ProjectiveLine, L2: ProjectiveLine) -> ProjectivePoint:
    c = _cross(L1.coords, L2.coords)
    if not any(c):
        raise DegenerateInput(f"lines {L1} and {L2} coincide")
    return ProjectivePoint(c)


def line_through(p: ProjectivePoint, q: ProjectivePoint) -> ProjectiveLine:
    c = _cross(p.coords, q.coords)
    if not any(c):
        raise DegenerateInput(f"points {p} and {q} coincide")
    return ProjectiveLine(c)


def collinear(p, q, r) -> bool:
    return not det3([_coords(p), _coords(q), _coords(r)])


def evaluation_matrix(points: Iterable, k: int) -> list[list[FieldElement]]:
    """Rows: points in input order; columns: degree-k monomials in grlex order."""
    mons = monomials(k)
    M = []
    for p in points:
        x, y, z = _coords(p)
        px, py, pz = _powers(x, k), _powers(y, k), _powers(z, k)
        M.append([px[i] * py[j] * pz[l] for i, j, l in mons])
    return M


def integral_representative(p) -> tuple[tuple[int, int], ...]:
    """Coordinates of ``p`` scaled to Z[w] pairs with no common integer factor."""
    coords = _coords(p)
    den = 1
    for c in coords:
        den = lcm(den, c.re_part.denominator, c.w_part.denominator)
    ints = [(int(c.re_part * den), int(c.w_part * den)) for c in coords]
    g = gcd(*(v for pair in ints for v in pair))
    return tuple((a // g, b // g) for a, b in ints)


def _zw_powers(v, k):
    out = [(1, 0)]
    a, b = v
    for _ in range(k):
        c, d = out[-1]
        bd = b * d
        out.append((a * c - bd, a * d + b * c + bd))
    return out


def integral_evaluation_rows(points: Iterable, k: int) -> list[list[tuple[int, int]]]:
    """Evaluation matrix at integral representatives, entries as Z[w] pairs.

    Each row is a nonzero multiple of the corresponding row of
    ``evaluation_matrix``, so both have the same rank.
    """
    mons = monomials(k)
    rows = []
    for p in points:
        px, py, pz = (_zw_powers(v, k) for v in integral_representative(p))
        row = []
        for i, j, l in mons:
            (a, b), (c, d), (e, f) = px[i], py[j], pz[l]
            bd = b * d
            u, v = a * c - bd, a * d + b * c + bd
            vf = v * f
            row.append((u * e - vf, u * f + v * e + vf))
        rows.append(row)
    return rows


def imposes_independent_conditions(points: Sequence, k: int) -> bool:
    points = list(points)
    if not points:
        return True
    return bareiss_rank(integral_evaluation_rows(points, k)) == min(len(points), dim_forms(k))


class Conic:
    __slots__ = ("form",)

    def __init__(self, form: HomogeneousPolynomial):
        if form.degree != 2 or form.is_zero():
            raise ValueError("a conic needs a nonzero quadratic form")
        self.form = form

    def symmetric_matrix(self) -> list[list[FieldElement]]:
        f = self.form.coefficient
        half = FieldElement(1, 0) / 2
        a, b, c = f((2, 0, 0)), f((0, 2, 0)), f((0, 0, 2))
        xy, xz, yz = f((1, 1, 0)) * half, f((1, 0, 1)) * half, f((0, 1, 1)) * half
        return [[a, xy, xz], [xy, b, yz], [xz, yz, c]]

    def is_smooth(self) -> bool:
        return conic_is_smooth(self)

    def contains(self, p) -> bool:
        return not evaluate(self.form, p)

    def normalized(self) -> Conic:
        """Scaled so the grlex-leading coefficient is 1."""
        return Conic(self.form * self.form.leading_coefficient().inv())

    def __eq__(self, other):
        if not isinstance(other, Conic):
            return NotImplemented
        return self.normalized().form == other.normalized().form

    def __hash__(self):
        return hash(self.normalized().form)

    def __str__(self):
        return str(self.form.primitive())

    def __repr__(self):
        return f"Conic({self})"


def conic_through(points: Sequence) -> Conic | None:
    """A conic through every point, or None.

    When the conics through the points form a space of dimension > 1, the
    kernel vector of the first free column (after row reduction) is used.
    The result is scaled so its leading grlex coefficient is 1.
    """
    points = list(points)
    M = evaluation_matrix(points, 2)
    basis = kernel(M, ncols=6)
    if not basis:
        return None
    return Conic(HomogeneousPolynomial.from_vector(2, basis[0])).normalized()


def conic_is_smooth(c: Conic) -> bool:
    return bool(det3(c.symmetric_matrix()))
