"""Executable checks over the catalog: the pipeline plus entry-specific identities."""

from __future__ import annotations

import random
from itertools import combinations
from fractions import Fraction

from . import catalog
from .arrangement import Arrangement, build_lattice, certify_triple_only
from .errors import HypothesisViolation
from .exactfield import ONE, ZERO, FieldElement
from .linalg import rank
from .monodromy import Check, analyze, cross_validate
from .pencil import search_pencil, validate_partition
from .polygeom import (
    Conic,
    HomogeneousPolynomial,
    ProjectiveLine,
    ProjectivePoint,
    conic_through,
    cyclic_tau,
    det3,
    evaluate,
    line_meet,
    line_through,
    tau_point,
)

__all__ = [
    "milnor_number_binary_form",
    "concurrent_lines_milnor_number",
    "random_coordinate_change",
    "random_point",
    "random_triple_only_arrangement",
    "verify_entry",
    "verify_catalog",
]


def _d_du(f: HomogeneousPolynomial) -> HomogeneousPolynomial:
    return HomogeneousPolynomial(f.degree - 1, {(i - 1, j, k): c * i for (i, j, k), c in f.terms.items() if i})


def _d_dv(f: HomogeneousPolynomial) -> HomogeneousPolynomial:
    return HomogeneousPolynomial(f.degree - 1, {(i, j - 1, k): c * j for (i, j, k), c in f.terms.items() if j})


def milnor_number_binary_form(f: HomogeneousPolynomial) -> int:
    """dim C[u, v] / (f_u, f_v) for a binary form f (no z), computed degree by degree.

    Requires an isolated singularity; the quotient vanishes from degree
    2(deg f) - 3 on.
    """
    if any(k for (_, _, k) in f.terms):
        raise ValueError("expected a form in the first two variables only")
    fu, fv = _d_du(f), _d_dv(f)
    e = f.degree - 1
    mu = 0
    for k in range(0, 2 * e):
        gens = []
        for a in range(k - e + 1):
            b = k - e - a
            mon = HomogeneousPolynomial(k - e, {(a, b, 0): ONE})
            for g in (fu, fv):
                h = g * mon
                gens.append([h.coefficient((i, k - i, 0)) for i in range(k, -1, -1)])
        r = rank(gens) if gens else 0
        mu += (k + 1) - r
    return mu


def concurrent_lines_milnor_number(a: Arrangement) -> int:
    """Milnor number of the binary form defining concurrent lines, after moving the common point to (0:0:1)."""
    lat = build_lattice(a)
    if len(lat.points) != 1:
        raise ValueError("the lines are not concurrent")
    p = lat.points[0].point
    if p[2] != ONE:
        raise ValueError("common point at infinity of the z-chart is not supported")
    f = HomogeneousPolynomial(0, {(0, 0, 0): ONE})
    for L in a.lines:
        a_, b_, c_ = L.coords
        assert not (a_ * p[0] + b_ * p[1] + c_)
        f = f * HomogeneousPolynomial.linear(a_, b_, ZERO)
    return milnor_number_binary_form(f)


def _random_element(rng: random.Random, span: int = 3) -> FieldElement:
    return FieldElement(Fraction(rng.randint(-span, span), rng.randint(1, 2)), rng.randint(-1, 1))


def random_coordinate_change(rng: random.Random) -> list[list[FieldElement]]:
    while True:
        M = [[_random_element(rng) for _ in range(3)] for _ in range(3)]
        if det3(M):
            return M


def random_point(rng: random.Random, span: int = 6) -> ProjectivePoint:
    while True:
        c = [rng.randint(-span, span) for _ in range(3)]
        if any(c):
            return ProjectivePoint(c)


def random_triple_only_arrangement(rng: random.Random, d: int, span: int = 6) -> Arrangement:
    """Random rational lines, about half of them forced through an existing intersection point.

    Candidates with a point of multiplicity >= 4 are discarded and redrawn.
    """
    while True:
        lines: list[ProjectiveLine] = []
        while len(lines) < d:
            if len(lines) >= 2 and rng.random() < 0.5:
                i, j = rng.sample(range(len(lines)), 2)
                p = line_meet(lines[i], lines[j])
                q = random_point(rng, span)
                if q == p:
                    continue
                L = line_through(p, q)
            else:
                L = ProjectiveLine(random_point(rng, span).coords)
            if L not in lines:
                lines.append(L)
        a = Arrangement(lines, f"random{d}")
        try:
            certify_triple_only(build_lattice(a))
        except HypothesisViolation:
            continue
        return a


def _entry_specific(entry) -> list[Check]:
    out = []
    if entry.name == "yoshinaga18":
        c = entry.parameters["c"]
        a = entry.arrangement
        cert = certify_triple_only(build_lattice(a))
        p = validate_partition(a, entry.documented_partition, cert)
        ce = FieldElement(c)
        ex1 = HomogeneousPolynomial(
            6,
            {
                (6, 0, 0): 1,
                (0, 6, 0): -1,
                (4, 1, 1): 3 * ce,
                (1, 4, 1): -3 * ce,
                (3, 0, 3): -ce ** 3,
                (0, 3, 3): ce ** 3,
            },
        )
        Q1 = p.Q[0]
        out.append(Check("ex1_expansion", Q1 == ex1, f"Q1 = {Q1}"))
        tau_sum = Q1 + cyclic_tau(Q1) + cyclic_tau(cyclic_tau(Q1))
        out.append(Check("tau_cyclic_sum_zero", tau_sum.is_zero(), "Q1 + tau Q1 + tau^2 Q1 = 0"))
        T1 = sorted(ProjectivePoint(t) for t in catalog.yoshinaga_T1(c))
        out.append(Check("T1_matches_documented", sorted(p.T1) == T1, ", ".join(map(str, sorted(p.T1)))))
        out.append(Check("T2_is_tau_T1", sorted(p.T2) == sorted(tau_point(t) for t in p.T1)))
        out.append(Check("T3_is_tau_T2", sorted(p.T3) == sorted(tau_point(t) for t in p.T2)))
        unions = {"T1∪T2": p.T1 + p.T2, "T2∪T3": p.T2 + p.T3, "T1∪T3": p.T1 + p.T3}
        for name, q in catalog.yoshinaga_conics(c).items():
            pts = unions[name]
            conic = Conic(q)
            on = all(not evaluate(q, t) for t in pts)
            out.append(Check(f"conic_{name}_contains_8_points", on and len(pts) == 8, str(q)))
            out.append(Check(f"conic_{name}_smooth", conic.is_smooth(), f"det = {det3(conic.symmetric_matrix())}"))
            found = conic_through(pts)
            out.append(Check(f"conic_{name}_recovered", found == conic, str(found)))
    elif entry.name == "hesse":
        fibers = catalog.hesse_fibers()
        for name, lines in fibers.items():
            lat = build_lattice(Arrangement(lines))
            out.append(Check(f"fiber_{name}_is_triangle", len(lat.points) == 3))
        reports = set()
        for choice in combinations(catalog.HESSE_FIBERS, 3):
            e = catalog.build("hesse", fibers=choice)
            r = analyze(e.arrangement)
            reports.add((r.s, r.n_triple, r.b1_F, r.char_poly))
        out.append(Check("all_fiber_choices_agree", len(reports) == 1, str(sorted(reports))))
    elif entry.name == "concurrent3":
        mu = concurrent_lines_milnor_number(entry.arrangement)
        r = analyze(entry.arrangement)
        out.append(Check("b1_equals_milnor_number", mu == r.b1_F == 4, f"mu = {mu}, b1 = {r.b1_F}"))
    return out


def verify_entry(entry, invariance_trials: int = 2, seed: int = 0) -> list[Check]:
    """Pipeline checks for one catalog entry."""
    exp = entry.expected
    a = entry.arrangement
    cert = certify_triple_only(build_lattice(a))
    rep = analyze(a, cert)
    checks = [
        Check("s", rep.s == exp.s, f"s = {rep.s}, expected {exp.s}"),
        Check("b1_F", rep.b1_F == (a.d - 1) + 2 * exp.s, f"b1 = {rep.b1_F}"),
        Check("triple_points", rep.n_triple == exp.n_triple, f"|T| = {rep.n_triple}"),
    ]
    found = search_pencil(a, cert)
    checks.append(
        Check(
            "search_recovers_partition",
            found is not None and found.partition == entry.documented_partition,
            "none" if found is None else str(found.partition),
        )
    )
    if found is not None:
        checks.append(Check("base_locus", len(found.T0) == exp.n_base, f"|T0| = {len(found.T0)}"))
        checks.append(Check("subarrangement_sizes", found.sizes() == exp.sizes, str(found.sizes())))
    cv = cross_validate(a, cert)
    checks.append(Check("branch", cv.prediction.branch == exp.branch, str(cv.prediction.branch)))
    checks.extend(cv.checks)
    checks.extend(_entry_specific(entry))
    rng = random.Random(f"{seed}:{entry.name}")
    for t in range(invariance_trials):
        M = random_coordinate_change(rng)
        order = list(range(a.d))
        rng.shuffle(order)
        moved = a.transformed(M).permuted(order)
        s2 = analyze(moved).s
        checks.append(Check(f"invariance_{t}", s2 == rep.s, f"s = {s2} after coordinate change"))
    return checks


def verify_catalog(names=None, invariance_trials: int = 2) -> dict[str, list[Check]]:
    names = names or catalog.NAMES
    return {n: verify_entry(catalog.build(n), invariance_trials) for n in names}
