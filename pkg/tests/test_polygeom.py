import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from triplemono.catalog import yoshinaga_lines
from triplemono.exactfield import ONE, W, ZERO, FieldElement
from triplemono.linalg import rank
from triplemono.polygeom import (
    Conic,
    DegenerateInput,
    HomogeneousPolynomial,
    ProjectiveLine,
    ProjectivePoint,
    collinear,
    conic_is_smooth,
    conic_through,
    cyclic_tau,
    dim_forms,
    evaluate,
    evaluation_matrix,
    imposes_independent_conditions,
    line_meet,
    line_through,
    monomials,
    multiply,
    tau_point,
)

from oracles import sympy_rank
from strategies import forms, nonzero_elements, points

x, y, z = (HomogeneousPolynomial.linear(*row) for row in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def poly(degree, **terms):
    """poly(2, x2=1, xz=10) style constructor for readable expectations."""
    out = {}
    for name, c in terms.items():
        e = [0, 0, 0]
        i = 0
        while i < len(name):
            v = "xyz".index(name[i])
            i += 1
            k = ""
            while i < len(name) and name[i].isdigit():
                k += name[i]
                i += 1
            e[v] += int(k or 1)
        out[tuple(e)] = c
    return HomogeneousPolynomial(degree, out)


def P(*c):
    return ProjectivePoint(c)


class TestPoints:
    def test_canonical_representative(self):
        assert P(2, 4, 2).coords == (ONE, FieldElement(2), ONE)
        assert P(3, 0, 0) == P(1, 0, 0)
        assert P(0, 2, 0).coords == (ZERO, ONE, ZERO)
        assert P(W, W, W) == P(1, 1, 1)

    def test_zero_point_rejected(self):
        with pytest.raises(DegenerateInput):
            P(0, 0, 0)

    def test_str(self):
        assert str(P(-10, -10, 1)) == "(-10:-10:1)"


class TestEvaluate:
    def test_examples(self):
        assert evaluate(x - y, P(1, 1, 1)) == ZERO
        assert evaluate(poly(2, y2=1, xz=10), P(-10, -10, 1)) == ZERO
        assert evaluate(poly(3, x3=1, y3=-1), P(0, 0, 1)) == ZERO
        assert evaluate(poly(2, x2=1, yz=3), P(2, 1, 1)) == FieldElement(7)

    @given(forms(), forms(), points())
    def test_multiplicative(self, f, g, p):
        assert evaluate(multiply(f, g), p) == evaluate(f, p) * evaluate(g, p)


class TestMultiply:
    def test_difference_of_squares(self):
        assert multiply(x - y, x + y) == poly(2, x2=1, y2=-1)

    def test_yoshinaga_factor_product(self):
        lines = yoshinaga_lines(10)[:6]
        prod = HomogeneousPolynomial(0, {(0, 0, 0): 1})
        for L in lines:
            prod = multiply(prod, HomogeneousPolynomial.linear(*L))
        expected = poly(6, x6=1, y6=-1, x4yz=30, xy4z=-30, x3z3=-1000, y3z3=1000)
        assert prod == expected

    def test_degree_bookkeeping(self):
        assert multiply(poly(2, x2=1), poly(3, yz2=1)).degree == 5
        assert multiply(HomogeneousPolynomial.zero(2), x).is_zero()

    def test_mixed_degree_addition_rejected(self):
        with pytest.raises(ValueError):
            x + poly(2, x2=1)


class TestTau:
    def test_substitution(self):
        # f(x, y, z) = x^2 y  ->  f(y, z, x) = y^2 z
        assert cyclic_tau(poly(3, x2y=1)) == poly(3, y2z=1)

    @given(forms())
    def test_order_three(self, f):
        assert cyclic_tau(cyclic_tau(cyclic_tau(f))) == f
        assert cyclic_tau(f).degree == f.degree

    @given(forms(max_degree=2), forms(max_degree=2))
    def test_ring_morphism(self, f, g):
        assert cyclic_tau(multiply(f, g)) == multiply(cyclic_tau(f), cyclic_tau(g))
        if f.degree == g.degree:
            assert cyclic_tau(f + g) == cyclic_tau(f) + cyclic_tau(g)

    @given(forms(), points())
    def test_point_action(self, f, p):
        assert (evaluate(f, p) == 0) == (evaluate(cyclic_tau(f), tau_point(p)) == 0)


class TestIncidence:
    def test_line_meet(self):
        L = ProjectiveLine
        assert line_meet(L((1, -1, 0)), L((0, 1, -1))) == P(1, 1, 1)
        assert line_meet(L((1, -1, 0)), L((1, 1, 0))) == P(0, 0, 1)
        assert line_meet(L((1, 1, -10)), L((1, -1, 0))) == P(5, 5, 1)
        with pytest.raises(DegenerateInput):
            line_meet(L((1, 2, 3)), L((2, 4, 6)))

    def test_collinear(self):
        assert not collinear(P(1, 0, 1), P(0, 1, 1), P(1, 1, 1))
        assert collinear(P(0, 0, 1), P(0, 1, 1), P(0, 1, 0))
        p, q = P(1, 2, 3), P(3, 1, 2)
        assert collinear(p, p, q)

    @given(points(), points(), points())
    def test_collinear_iff_third_point_on_joining_line(self, p, q, r):
        assume(p != q)
        assert collinear(p, q, r) == line_through(p, q).contains(r)

    @given(points(), points())
    def test_join_and_meet(self, p, q):
        assume(p != q)
        L = line_through(p, q)
        assert L.contains(p) and L.contains(q)
        assert evaluate(L.form(), p) == ZERO


class TestEvaluationMatrix:
    def test_shapes(self):
        assert evaluation_matrix([P(1, 2, 3)], 0) == [[ONE]]
        M = evaluation_matrix([P(1, 2, 3), P(0, 1, 0)], -1)
        assert M == [[], []]
        assert len(monomials(3)) == dim_forms(3) == 10
        assert dim_forms(-1) == dim_forms(-5) == 0

    def test_grlex_order(self):
        assert monomials(2) == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))

    def test_a3_triple_points(self):
        T = [P(1, 1, 1), P(-1, 1, 1), P(1, -1, 1), P(1, 1, -1)]
        M = evaluation_matrix(T, 1)
        assert len(M) == 4 and all(len(r) == 3 for r in M)
        assert rank(M) == sympy_rank(M) == 3

    def test_hesse_cubics(self, entries):
        from triplemono.arrangement import build_lattice, certify_triple_only, triple_points

        T = triple_points(certify_triple_only(build_lattice(entries["hesse"].arrangement)))
        M = evaluation_matrix(T, 3)
        assert (len(M), len(M[0])) == (9, 10)
        assert rank(M) == sympy_rank(M) == 8

    @given(st.lists(points(), min_size=1, max_size=7), st.integers(0, 3), st.data())
    def test_rank_invariant_under_rescaling(self, pts, k, data):
        M = evaluation_matrix(pts, k)
        scaled = []
        for row in M:
            lam = data.draw(nonzero_elements)
            # rescaling the representative by lam multiplies the row by lam^k
            scaled.append([lam ** k * v for v in row])
        assert rank(scaled) == rank(M)


class TestImposedConditions:
    def test_examples(self):
        assert imposes_independent_conditions([P(1, 0, 0), P(0, 1, 0), P(0, 0, 1), P(1, 1, 1)], 1)
        five_on_a_line = [P(0, t, 1) for t in range(5)]
        assert not imposes_independent_conditions(five_on_a_line + [P(1, 2, 7), P(3, -1, 2)], 3)
        assert imposes_independent_conditions([], 4)

    def test_matches_rank_definition(self):
        rng = random.Random(5)
        for _ in range(30):
            pts = [P(rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(rng.randint(1, 8))]
            k = rng.randint(0, 3)
            expected = sympy_rank(evaluation_matrix(pts, k)) == min(len(pts), dim_forms(k))
            assert imposes_independent_conditions(pts, k) == expected


class TestConics:
    def test_yoshinaga_T1_T2(self, entries):
        from triplemono.pencil import validate_partition

        e = entries["yoshinaga18"]
        p = validate_partition(e.arrangement, e.documented_partition)
        c = conic_through(list(p.T1) + list(p.T2))
        assert c == Conic(poly(2, y2=1, xz=10))
        assert str(c) == "10*x*z + y^2"

    def test_five_general_points(self):
        pts = [P(1, 0, 0), P(0, 1, 0), P(0, 0, 1), P(1, 1, 1), P(1, 2, 3)]
        c = conic_through(pts)
        assert c is not None and all(c.contains(p) for p in pts)
        # uniqueness: the kernel is one dimensional
        assert rank(evaluation_matrix(pts, 2)) == 5

    def test_six_generic_points(self):
        pts = [P(1, 0, 0), P(0, 1, 0), P(0, 0, 1), P(1, 1, 1), P(1, 2, 3), P(2, -1, 5)]
        assert conic_through(pts) is None

    def test_deterministic_when_underdetermined(self):
        pts = [P(1, 0, 0), P(0, 1, 0)]
        assert conic_through(pts) == conic_through(list(pts))
        assert conic_through(pts).form == conic_through(list(reversed(pts))).form

    def test_smoothness(self):
        c = Conic(poly(2, y2=1, xz=10))
        assert c.symmetric_matrix() == [[0, 0, 5], [0, 1, 0], [5, 0, 0]]
        assert conic_is_smooth(c)
        assert not conic_is_smooth(Conic(poly(2, xy=1)))
        assert not conic_is_smooth(Conic(poly(2, x2=1)))

    @given(st.lists(points(), min_size=1, max_size=7))
    def test_exists_iff_rank_at_most_five(self, pts):
        c = conic_through(pts)
        assert (c is not None) == (rank(evaluation_matrix(pts, 2)) <= 5)
        if c is not None:
            assert all(c.contains(p) for p in pts)


class TestPolynomialBasics:
    def test_primitive(self):
        f = poly(2, xz=Fraction(1, 10), y2=Fraction(-1, 100))
        assert f.primitive() == poly(2, xz=10, y2=-1)
        assert str(poly(1, x=1, y=-1)) == "x - y"
