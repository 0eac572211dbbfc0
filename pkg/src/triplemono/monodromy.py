"""Monodromy eigenspace dimensions of the Milnor fiber of a triple-point arrangement.

For d = 3m lines with only double and triple points, the eigenvalue-epsilon
part of H^1(F) has dimension ``s``, the superabundance of the triple points
with respect to forms of degree 2m - 3.  ``analyze`` computes ``s`` by a rank
computation; ``classify`` predicts it from the pencil structure alone and
``cross_validate`` compares the two.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Sequence

from .arrangement import Arrangement, TripleOnlyCertificate, build_lattice, certify_triple_only
from .exactfield import ZERO
from .linalg import bareiss_rank, kernel, rank
from .pencil import PencilStructure, search_pencil
from .polygeom import (
    Conic,
    HomogeneousPolynomial,
    ProjectivePoint,
    collinear,
    conic_through,
    dim_forms,
    evaluate,
    evaluation_matrix,
    integral_evaluation_rows,
)

__all__ = [
    "MonodromyReport",
    "Branch",
    "TheoremPrediction",
    "ConicEvidence",
    "Check",
    "ValidationReport",
    "superabundance",
    "analyze",
    "rho_prime_matrix",
    "coker_rho_prime",
    "rho_prime_kernel",
    "check_vanishing_sj",
    "max_collinear",
    "classify",
    "cross_validate",
]


@dataclass(frozen=True)
class MonodromyReport:
    d: int
    m: int | None
    n_triple: int
    s: int
    h10_eps: int
    h01_eps: int
    h10_epsbar: int
    h01_epsbar: int
    b1_F: int
    char_poly: tuple[int, int]
    trivial_monodromy: bool

    def char_poly_str(self) -> str:
        def power(base, e):
            return base if e == 1 else f"{base}^{e}"

        e1, e2 = self.char_poly
        out = power("(t-1)", e1)
        if e2:
            out += "*" + power("(t^2+t+1)", e2)
        return out


class Branch(str, enum.Enum):
    NOT_PENCIL = "NOT_PENCIL"
    SMALL = "SMALL"
    MAX_CEVA = "MAX_CEVA"
    MAX48_CONICS = "MAX48_CONICS"
    MAX48_GENERIC = "MAX48_GENERIC"
    # m > 6: no prediction available
    OUT_OF_RANGE = "OUT_OF_RANGE"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ConicEvidence:
    points_set: str
    conic: Conic | None
    smooth: bool | None
    max_collinear: int


@dataclass(frozen=True)
class TheoremPrediction:
    branch: Branch
    predicted_s: int | None
    pencil: PencilStructure | None = None
    conics: tuple[ConicEvidence, ...] = ()


def superabundance(points: Sequence, k: int) -> int:
    points = list(points)
    if k < 0:
        return len(points)
    if not points:
        return 0
    return len(points) - bareiss_rank(integral_evaluation_rows(points, k))


def _certify(a: Arrangement, cert):
    return cert if cert is not None else certify_triple_only(build_lattice(a))


def analyze(a: Arrangement, cert: TripleOnlyCertificate | None = None) -> MonodromyReport:
    cert = _certify(a, cert)
    d = a.d
    T = [lp.point for lp in cert.triple_points]
    if d % 3:
        return MonodromyReport(d, None, len(T), 0, 0, 0, 0, 0, d - 1, (d - 1, 0), True)
    m = d // 3
    s = superabundance(T, 2 * m - 3)
    return MonodromyReport(
        d=d,
        m=m,
        n_triple=len(T),
        s=s,
        h10_eps=s,
        h01_eps=0,
        h10_epsbar=0,
        h01_epsbar=s,
        b1_F=(d - 1) + 2 * s,
        char_poly=(d - 1, s),
        trivial_monodromy=(s == 0),
    )


def rho_prime_matrix(p: PencilStructure) -> list[list]:
    """Block matrix of (h1, h2) -> (h1|T2, h2|T1, (h1 - h2)|T3) in the pair basis."""
    k = p.m - 3
    n = dim_forms(k)
    zeros = [ZERO] * n
    rows = []
    for row in evaluation_matrix(p.T2, k):
        rows.append(row + zeros)
    for row in evaluation_matrix(p.T1, k):
        rows.append(zeros + row)
    for row in evaluation_matrix(p.T3, k):
        rows.append(row + [-x for x in row])
    return rows


def coker_rho_prime(p: PencilStructure) -> int:
    n_rows = len(p.T1) + len(p.T2) + len(p.T3)
    if p.m < 3 or n_rows == 0:
        return n_rows
    return n_rows - rank(rho_prime_matrix(p))


def rho_prime_kernel(p: PencilStructure) -> list[tuple[HomogeneousPolynomial, HomogeneousPolynomial]]:
    """Basis of pairs (h1, h2) of degree m-3 forms killed by the pencil map."""
    k = p.m - 3
    n = dim_forms(k)
    if n == 0:
        return []
    basis = kernel(rho_prime_matrix(p), ncols=2 * n)
    return [
        (HomogeneousPolynomial.from_vector(k, v[:n]), HomogeneousPolynomial.from_vector(k, v[n:]))
        for v in basis
    ]


def check_vanishing_sj(p: PencilStructure) -> bool:
    if p.m < 3:
        raise ValueError("the vanishing of s_{m-3}(T_j) is only meaningful for m >= 3")
    return all(superabundance(Tj, p.m - 3) == 0 for Tj in (p.T1, p.T2, p.T3))


def max_collinear(points: Sequence[ProjectivePoint]) -> int:
    """Largest number of the given points on a common line."""
    points = list(points)
    if len(points) <= 2:
        return len(points)
    best = 2
    for i, j in combinations(range(len(points)), 2):
        count = 2 + sum(
            1 for k in range(len(points)) if k != i and k != j and collinear(points[i], points[j], points[k])
        )
        best = max(best, count)
    return best


_UNIONS = (("T1∪T2", 1, 2), ("T2∪T3", 2, 3), ("T1∪T3", 1, 3))


def classify(
    a: Arrangement,
    cert: TripleOnlyCertificate | None = None,
    pencil: PencilStructure | None = None,
) -> TheoremPrediction:
    """Predict s from the pencil structure and the conic condition only."""
    cert = _certify(a, cert)
    if a.d % 3:
        return TheoremPrediction(Branch.NOT_PENCIL, 0)
    if pencil is None:
        pencil = search_pencil(a, cert)
    if pencil is None:
        return TheoremPrediction(Branch.NOT_PENCIL, 0)
    m = pencil.m
    n_triple = len(cert.triple_points)
    if m > 6:
        return TheoremPrediction(Branch.OUT_OF_RANGE, None, pencil)
    if m < 6 or n_triple < 48:
        if m == 3 and pencil.sizes() == (1, 1, 1):
            return TheoremPrediction(Branch.MAX_CEVA, 2, pencil)
        return TheoremPrediction(Branch.SMALL, 1, pencil)
    evidence = []
    for name, i, j in _UNIONS:
        pts = list(pencil.T[i]) + list(pencil.T[j])
        conic = conic_through(pts)
        evidence.append(
            ConicEvidence(
                points_set=name,
                conic=conic,
                smooth=None if conic is None else conic.is_smooth(),
                max_collinear=max_collinear(pts),
            )
        )
    if all(e.conic is not None for e in evidence):
        return TheoremPrediction(Branch.MAX48_CONICS, 2, pencil, tuple(evidence))
    return TheoremPrediction(Branch.MAX48_GENERIC, 1, pencil, tuple(evidence))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    report: MonodromyReport
    prediction: TheoremPrediction
    checks: list[Check] = field(default_factory=list)
    witness: Path | None = None

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


def _kernel_in_H(p: PencilStructure) -> bool:
    for h1, h2 in rho_prime_kernel(p):
        if any(evaluate(h1, t) for t in p.T2):
            return False
        if any(evaluate(h2, t) for t in p.T1):
            return False
        if any(evaluate(h1 - h2, t) for t in p.T3):
            return False
    return True


def cross_validate(
    a: Arrangement,
    cert: TripleOnlyCertificate | None = None,
    witness_dir: str | Path | None = None,
) -> ValidationReport:
    """Compare the rank computation with the theorem's prediction and the pencil identities.

    Mismatches are recorded as failed checks, never raised.  A mismatch in the
    MAX48_GENERIC branch is written to ``witness_dir`` when given.
    """
    cert = _certify(a, cert)
    rep = analyze(a, cert)
    pred = classify(a, cert)
    checks = []
    if rep.m is not None:
        bound = (3 * rep.m - 1) / 2
        checks.append(Check("upper_bound", rep.s <= bound, f"s = {rep.s} <= {bound}"))
    if pred.predicted_s is not None:
        checks.append(
            Check(
                "theorem_vs_rank",
                pred.predicted_s == rep.s,
                f"branch {pred.branch}: predicted {pred.predicted_s}, computed {rep.s}",
            )
        )
    p = pred.pencil
    if p is not None and p.m >= 2:
        c = coker_rho_prime(p)
        checks.append(Check("coker_identity", rep.s == c + 1, f"s = {rep.s}, coker rho' + 1 = {c + 1}"))
        checks.append(Check("rho_prime_kernel_in_H", _kernel_in_H(p), "kernel pairs satisfy the H conditions"))
    if p is not None and p.m >= 3:
        checks.append(Check("vanishing_s_m3_Tj", check_vanishing_sj(p), "s_{m-3}(T_j) = 0 for j = 1, 2, 3"))
    result = ValidationReport(rep, pred, checks)
    if pred.branch is Branch.MAX48_GENERIC and pred.predicted_s != rep.s and witness_dir is not None:
        from .fileio import format_arrangement  # fileio imports this module

        path = Path(witness_dir) / f"witness_{a.label or 'arrangement'}.arr"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(format_arrangement(a))
        result.witness = path
    return result


def base_locus_dimension_identity(m: int) -> bool:
    """dim S_{2m-3} + 1 == m^2 + 2 dim S_{m-3}; the count behind coker(rho) = coker(rho') + 1."""
    return dim_forms(2 * m - 3) + 1 == m * m + 2 * dim_forms(m - 3)
