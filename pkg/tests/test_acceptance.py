"""Acceptance criteria, one test per criterion.

Every test appends a one-line verdict to ``VERDICTS``; the conftest hook
prints them at the end of the run (and they are echoed with ``-s``).
"""

import io
import json
import random
import subprocess
import sys
import time
from functools import lru_cache

import pytest

from triplemono import catalog
from triplemono.arrangement import build_lattice, certify_triple_only, triple_points
from triplemono.cli import main
from triplemono.exactfield import ONE, ZERO, FieldElement
from triplemono.fileio import format_arrangement, parse_arrangement
from triplemono.linalg import rank
from triplemono.monodromy import (
    Branch,
    analyze,
    check_vanishing_sj,
    classify,
    coker_rho_prime,
    max_collinear,
    superabundance,
)
from triplemono.pencil import canonical_partition, search_pencil, validate_partition
from triplemono.polygeom import (
    Conic,
    HomogeneousPolynomial,
    ProjectiveLine,
    ProjectivePoint,
    conic_through,
    cyclic_tau,
    det3,
    evaluate,
    evaluation_matrix,
    imposes_independent_conditions,
    line_meet,
    line_through,
    tau_point,
)
from triplemono.verify import (
    concurrent_lines_milnor_number,
    random_coordinate_change,
    random_point,
    random_triple_only_arrangement,
)

VERDICTS: list[str] = []

PENCIL_ENTRIES = ["a3", "ceva", "hesse", "d4section", "yoshinaga18"]


def verdict(number, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {detail}"
    VERDICTS.append(line)
    print(line)
    assert ok, line


@lru_cache(maxsize=None)
def random_corpus():
    """100 triple-only arrangements with d = 3m <= 12, about half with forced triple points."""
    rng = random.Random(2024)
    return tuple(random_triple_only_arrangement(rng, 3 * (1 + k % 4)) for k in range(100))


def test_criterion_01_eigenspace_dimensions(entries):
    golden = {"a3": 1, "ceva": 2, "hesse": 1, "d4section": 1, "yoshinaga18": 2, "concurrent3": 1}
    got = {name: analyze(entries[name].arrangement).s for name in golden}
    verdict(1, got == golden, f"dim H^1,0(F)_eps = {got}")


def test_criterion_02_betti_numbers(entries):
    golden = {"concurrent3": 4, "a3": 7, "ceva": 12, "hesse": 10, "d4section": 13, "yoshinaga18": 21}
    got = {}
    for name in golden:
        r = analyze(entries[name].arrangement)
        assert r.b1_F == (r.d - 1) + 2 * r.s
        got[name] = r.b1_F
    mu = concurrent_lines_milnor_number(entries["concurrent3"].arrangement)
    ok = got == golden and mu == (3 - 1) ** 2 == got["concurrent3"]
    verdict(2, ok, f"b1(F) = {got}; Milnor number of three concurrent lines = {mu}")


def test_criterion_03_yoshinaga_structure(entries):
    e = entries["yoshinaga18"]
    p = validate_partition(e.arrangement, e.documented_partition)
    c = FieldElement(10)
    ex1 = HomogeneousPolynomial(
        6,
        {(6, 0, 0): 1, (0, 6, 0): -1, (4, 1, 1): 3 * c, (1, 4, 1): -3 * c, (3, 0, 3): -c ** 3, (0, 3, 3): c ** 3},
    )
    Q1 = p.Q[0]
    tau_sum_zero = (Q1 + cyclic_tau(Q1) + cyclic_tau(cyclic_tau(Q1))).is_zero()
    T1 = {ProjectivePoint(t) for t in catalog.yoshinaga_T1(10)}
    sizes_ok = len(p.T0) == 36 and p.sizes() == (4, 4, 4)
    orbit_ok = {tau_point(t) for t in p.T1} == set(p.T2) and {tau_point(t) for t in p.T2} == set(p.T3)
    sets = {"T1∪T2": p.T1 + p.T2, "T2∪T3": p.T2 + p.T3, "T1∪T3": p.T1 + p.T3}
    conics_ok = True
    for name, q in catalog.yoshinaga_conics(10).items():
        conic = Conic(q)
        conics_ok &= len(sets[name]) == 8 and all(conic.contains(t) for t in sets[name])
        conics_ok &= det3(conic.symmetric_matrix()) != ZERO
        conics_ok &= conic_through(sets[name]) == conic
    ok = Q1 == ex1 and tau_sum_zero and sizes_ok and set(p.T1) == T1 and orbit_ok and conics_ok
    verdict(
        3,
        ok,
        f"Q1 = {Q1}; tau-sum zero {tau_sum_zero}; |T0| = {len(p.T0)}, |T_i| = {p.sizes()}; "
        f"T1 documented {set(p.T1) == T1}; three smooth conics {conics_ok}",
    )


def test_criterion_04_coker_identity(entries):
    rows = {}
    for name in PENCIL_ENTRIES:
        e = entries[name]
        p = validate_partition(e.arrangement, e.documented_partition)
        rows[name] = (analyze(e.arrangement).s, coker_rho_prime(p) + 1)
    ok = all(s == c for s, c in rows.values())
    verdict(4, ok, "s vs coker(rho')+1: " + ", ".join(f"{n} {s}={c}" for n, (s, c) in rows.items()))


def test_criterion_05_vanishing(entries):
    got = {}
    for name in PENCIL_ENTRIES:
        e = entries[name]
        p = validate_partition(e.arrangement, e.documented_partition)
        if p.m >= 3:
            got[name] = [superabundance(T, p.m - 3) for T in (p.T1, p.T2, p.T3)]
            assert check_vanishing_sj(p) == (got[name] == [0, 0, 0])
    ok = len(got) == 4 and all(v == [0, 0, 0] for v in got.values())
    verdict(5, ok, f"s_(m-3)(T_j) = {got}")


def test_criterion_06_upper_bound(entries):
    worst = []
    for e in entries.values():
        r = analyze(e.arrangement)
        worst.append(2 * r.s <= 3 * r.m - 1)
    corpus = random_corpus()
    n_forced = 0
    for a in corpus:
        r = analyze(a)
        worst.append(2 * r.s <= 3 * r.m - 1)
        n_forced += r.n_triple > 0
    ok = all(worst) and len(corpus) == 100
    verdict(
        6,
        ok,
        f"s <= (3m-1)/2 on {len(entries)} catalog entries and {len(corpus)} random arrangements "
        f"({n_forced} with triple points)",
    )


def test_criterion_07_theorem_vs_rank(entries):
    mismatches = []
    for name, e in entries.items():
        if classify(e.arrangement).predicted_s != analyze(e.arrangement).s:
            mismatches.append(name)
    pencil_free = 0
    for k, a in enumerate(random_corpus()):
        pred, rep = classify(a), analyze(a)
        if pred.branch is Branch.NOT_PENCIL:
            pencil_free += 1
            if pred.predicted_s != 0:
                mismatches.append(f"random {k}: predicted {pred.predicted_s}")
        if pred.predicted_s != rep.s:
            mismatches.append(f"random {k}")
    verdict(
        7,
        not mismatches and pencil_free > 0,
        f"predicted_s = s on all catalog entries and {len(random_corpus())} random arrangements "
        f"({pencil_free} pencil free); mismatches {mismatches}",
    )


def random_point_off(rng, q):
    while True:
        p = random_point(rng)
        if p != q:
            return p


def test_criterion_08_imposed_conditions():
    rng = random.Random(8)
    # 7 points with 5 collinear
    five_ok = True
    for _ in range(10):
        L = ProjectiveLine(random_point(rng).coords)
        on_line = set()
        while len(on_line) < 5:
            q = random_point(rng)
            M = line_through(q, random_point_off(rng, q))
            if M != L:
                on_line.add(line_meet(L, M))
        extra = []
        while len(extra) < 2:
            q = random_point(rng)
            if not L.contains(q) and q not in extra:
                extra.append(q)
        pts = list(on_line) + extra
        five_ok &= not imposes_independent_conditions(pts, 3) and rank(evaluation_matrix(pts, 3)) < 7
    # 7 points with at most 3 collinear, some with an explicit collinear triple
    trials = 0
    general_ok = True
    while trials < 50:
        pts = []
        if trials % 2:
            L = ProjectiveLine(random_point(rng).coords)
            while len(pts) < 3:
                q = random_point(rng)
                M = line_through(q, random_point_off(rng, q))
                if M != L:
                    p = line_meet(L, M)
                    if p not in pts:
                        pts.append(p)
        while len(pts) < 7:
            q = random_point(rng)
            if q not in pts:
                pts.append(q)
        if max_collinear(pts) > 3:
            continue
        trials += 1
        general_ok &= imposes_independent_conditions(pts, 3)
    # 8 points on a smooth conic
    conic_ok = True
    for _ in range(10):
        M = random_coordinate_change(rng)
        pts = set()
        while len(pts) < 8:
            t = FieldElement(rng.randint(-20, 20), rng.choice([0, rng.randint(-3, 3)])) / rng.randint(1, 5)
            v = (t * t, t, ONE)  # on xz = y^2 with x, y, z = t^2, t, 1
            pts.add(ProjectivePoint([sum((M[i][j] * v[j] for j in range(3)), ZERO) for i in range(3)]))
        pts = list(pts)
        conic = conic_through(pts)
        conic_ok &= conic is not None and conic.is_smooth() and superabundance(pts, 3) >= 1
    verdict(
        8,
        five_ok and general_ok and conic_ok,
        f"5 collinear of 7 fail on cubics {five_ok}; 50 random 7-point sets independent {general_ok}; "
        f"8 points on a smooth conic superabundant {conic_ok}",
    )


@pytest.mark.parametrize("name", catalog.NAMES)
def test_criterion_09_invariance(entries, name):
    e = entries[name]
    a = e.arrangement
    s = analyze(a).s
    rng = random.Random(f"invariance:{name}")
    values = set()
    for _ in range(20):
        order = list(range(a.d))
        rng.shuffle(order)
        values.add(analyze(a.transformed(random_coordinate_change(rng)).permuted(order)).s)
    # representative rescaling: rows built from random nonzero multiples of each point
    T = triple_points(certify_triple_only(build_lattice(a)))
    k = max(2 * (a.d // 3) - 3, 0)
    base = rank(evaluation_matrix(T, k))
    ranks = set()
    for _ in range(5):
        reps = []
        for t in T:
            lam = FieldElement(rng.randint(1, 9) * rng.choice([1, -1]), rng.randint(-3, 3)) / rng.randint(1, 4)
            reps.append(tuple(lam * c for c in t.coords))
        ranks.add(rank(evaluation_matrix(reps, k)))
    ok = values == {s} and ranks == {base}
    verdict(9, ok, f"{name}: s under 20 coordinate changes + permutations {sorted(values)}; "
            f"rank under rescaled representatives {sorted(ranks)} (expected {base})")


def test_criterion_10_pencil_search(entries):
    recovered = {}
    times = {}
    for name in PENCIL_ENTRIES + ["concurrent3"]:
        e = entries[name]
        t0 = time.perf_counter()
        p = search_pencil(e.arrangement)
        times[name] = time.perf_counter() - t0
        recovered[name] = p is not None and p.partition == canonical_partition(e.documented_partition)
    agree = {}
    for name in ("concurrent3", "a3", "ceva", "hesse"):
        a = entries[name].arrangement
        agree[name] = search_pencil(a, strategy="enumerate") == search_pencil(a)
    rng = random.Random(10)
    for k in range(10):
        a = random_triple_only_arrangement(rng, rng.choice([3, 6, 9]))
        agree[f"random{k}"] = search_pencil(a, strategy="enumerate") == search_pencil(a)
    ok = all(recovered.values()) and all(agree.values()) and times["yoshinaga18"] < 30
    verdict(
        10,
        ok,
        f"documented partitions recovered {recovered}; yoshinaga18 search {times['yoshinaga18']:.2f}s; "
        f"enumeration agrees on {sum(agree.values())}/{len(agree)}",
    )


def test_criterion_11_determinism(entries, tmp_path):
    round_trip = {}
    for name, e in entries.items():
        text = format_arrangement(e.arrangement)
        path = tmp_path / f"{name}.arr"
        path.write_text(text)
        out = io.StringIO()
        code = main(["export", str(path)], out=out)
        round_trip[name] = code == 0 and out.getvalue() == text and format_arrangement(parse_arrangement(text)) == text
    runs = []
    for seed in ("0", "12345"):
        res = subprocess.run(
            [sys.executable, "-m", "triplemono", "analyze", "--catalog", "yoshinaga18", "--json", "--check-prop1"],
            capture_output=True,
            env={"PYTHONHASHSEED": seed, "PATH": ""},
            check=True,
        )
        runs.append(res.stdout)
    json.loads(runs[0])
    ok = all(round_trip.values()) and runs[0] == runs[1]
    verdict(11, ok, f"round trip byte-exact {round_trip}; two analyze --json runs identical {runs[0] == runs[1]}")
