"""Line arrangements in P^2 and their intersection lattices."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .exactfield import ZERO
from .errors import HypothesisViolation, InvalidArrangement
from .polygeom import DegenerateInput, ProjectiveLine, ProjectivePoint, line_meet

__all__ = [
    "MAX_LINES",
    "Arrangement",
    "LatticePoint",
    "IntersectionLattice",
    "TripleOnlyCertificate",
    "build_lattice",
    "certify_triple_only",
    "triple_points",
]

MAX_LINES = 64


@dataclass(frozen=True)
class Arrangement:
    lines: tuple[ProjectiveLine, ...]
    label: str = ""

    def __init__(self, lines: Iterable, label: str = ""):
        try:
            lines = tuple(l if isinstance(l, ProjectiveLine) else ProjectiveLine(l) for l in lines)
        except DegenerateInput as exc:
            raise InvalidArrangement(f"zero line: {exc}") from exc
        object.__setattr__(self, "lines", lines)
        object.__setattr__(self, "label", label)
        self.validate()

    def validate(self) -> None:
        if len(self.lines) < 2:
            raise InvalidArrangement(f"an arrangement needs at least 2 lines, got {len(self.lines)}")
        if len(self.lines) > MAX_LINES:
            raise InvalidArrangement(f"{len(self.lines)} lines exceeds the limit of {MAX_LINES}")
        seen: dict[ProjectiveLine, int] = {}
        for i, L in enumerate(self.lines):
            if L in seen:
                raise InvalidArrangement(f"lines {seen[L]} and {i} are equal: {L}")
            seen[L] = i

    @property
    def d(self) -> int:
        return len(self.lines)

    def __len__(self):
        return len(self.lines)

    def permuted(self, order: Sequence[int]) -> Arrangement:
        return Arrangement([self.lines[i] for i in order], self.label)

    def transformed(self, matrix) -> Arrangement:
        """Apply a coordinate change acting on line coefficient vectors by l -> l * matrix."""
        new = []
        for L in self.lines:
            a = L.coords
            new.append([sum((a[i] * matrix[i][j] for i in range(3)), ZERO) for j in range(3)])
        return Arrangement(new, self.label)


@dataclass(frozen=True)
class LatticePoint:
    point: ProjectivePoint
    incident: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.incident)


@dataclass(frozen=True)
class IntersectionLattice:
    d: int
    points: tuple[LatticePoint, ...]

    def multiplicity_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for lp in self.points:
            counts[lp.multiplicity] = counts.get(lp.multiplicity, 0) + 1
        return counts

    def pair_count_ok(self) -> bool:
        return sum(comb(lp.multiplicity, 2) for lp in self.points) == comb(self.d, 2)

    def of_multiplicity(self, k: int) -> list[LatticePoint]:
        return [lp for lp in self.points if lp.multiplicity == k]


@dataclass(frozen=True)
class TripleOnlyCertificate:
    lattice: IntersectionLattice
    double_points: tuple[LatticePoint, ...]
    triple_points: tuple[LatticePoint, ...] = field(default=())


def build_lattice(a: Arrangement) -> IntersectionLattice:
    """Group all pairwise intersections by point, sorted by canonical coordinates."""
    a.validate()
    groups: dict[ProjectivePoint, set[int]] = {}
    lines = a.lines
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            p = line_meet(lines[i], lines[j])
            s = groups.setdefault(p, set())
            s.add(i)
            s.add(j)
    pts = tuple(LatticePoint(p, tuple(sorted(groups[p]))) for p in sorted(groups))
    lat = IntersectionLattice(len(lines), pts)
    assert lat.pair_count_ok(), "pair-count identity violated"
    return lat


def certify_triple_only(lat: IntersectionLattice) -> TripleOnlyCertificate:
    for lp in lat.points:
        if lp.multiplicity >= 4:
            raise HypothesisViolation(
                f"point of multiplicity {lp.multiplicity} at {lp.point} (lines {list(lp.incident)}): "
                "the monodromy formula requires an arrangement with only double and triple points"
            )
    return TripleOnlyCertificate(
        lat,
        tuple(lat.of_multiplicity(2)),
        tuple(lat.of_multiplicity(3)),
    )


def triple_points(cert: TripleOnlyCertificate) -> list[ProjectivePoint]:
    return [lp.point for lp in cert.triple_points]
