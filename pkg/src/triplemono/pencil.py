"""Reduced-pencil structure Q = Q1*Q2*Q3 with Q3 = Q1 + Q2.

A partition of the 3m lines into three groups of m lines is a pencil when the
three products of linear forms span a 2-dimensional space.  Its triple points
then split into the m^2 base points T0 (one line from each group) and the
sets T1, T2, T3 of triple points internal to each group.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Sequence

from .arrangement import Arrangement, TripleOnlyCertificate, build_lattice, certify_triple_only
from .errors import DegeneratePencil, NotAPencil
from .exactfield import ONE
from .linalg import kernel, rank
from .polygeom import HomogeneousPolynomial, ProjectivePoint, evaluate, multiply

__all__ = [
    "PencilStructure",
    "SubarrangementProfile",
    "canonical_partition",
    "parse_partition",
    "format_partition",
    "validate_partition",
    "search_pencil",
    "profile",
]

Partition = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class PencilStructure:
    m: int
    partition: Partition
    Q: tuple[HomogeneousPolynomial, HomogeneousPolynomial, HomogeneousPolynomial]
    T0: tuple[ProjectivePoint, ...]
    T1: tuple[ProjectivePoint, ...]
    T2: tuple[ProjectivePoint, ...]
    T3: tuple[ProjectivePoint, ...]

    @property
    def T(self) -> tuple[tuple[ProjectivePoint, ...], ...]:
        return (self.T0, self.T1, self.T2, self.T3)

    def sizes(self) -> tuple[int, int, int]:
        return (len(self.T1), len(self.T2), len(self.T3))

    def all_triple_points(self) -> list[ProjectivePoint]:
        return sorted(self.T0 + self.T1 + self.T2 + self.T3)


@dataclass(frozen=True)
class SubarrangementProfile:
    sizes: tuple[int, int, int]
    sigma: int

    @property
    def kinds(self) -> tuple[str, ...]:
        names = {0: "generic", 1: "special"}
        return tuple(names.get(k, f"{k}-special") for k in self.sizes)


def canonical_partition(parts: Sequence[Sequence[int]]) -> Partition:
    return tuple(sorted(tuple(sorted(p)) for p in parts))


def parse_partition(text: str) -> Partition:
    """Parse ``"0,1;2,3;4,5"`` into three index tuples (order kept)."""
    groups = text.strip().split(";")
    if len(groups) != 3:
        raise ValueError(f"a partition has three groups separated by ';', got {text!r}")
    try:
        return tuple(tuple(int(t) for t in g.split(",") if t.strip()) for g in groups)
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}") from exc


def format_partition(parts: Sequence[Sequence[int]]) -> str:
    return ";".join(",".join(str(i) for i in p) for p in parts)


def _product(a: Arrangement, idx: Sequence[int]) -> HomogeneousPolynomial:
    return reduce(multiply, (a.lines[i].form() for i in idx), HomogeneousPolynomial(0, {(0, 0, 0): ONE}))


def _check_shape(d: int, parts) -> int:
    if d % 3:
        raise NotAPencil(f"{d} lines is not a multiple of 3")
    m = d // 3
    flat = sorted(i for p in parts for i in p)
    if len(parts) != 3 or flat != list(range(d)):
        raise NotAPencil(f"{format_partition(parts)} does not partition lines 0..{d - 1}")
    if any(len(p) != m for p in parts):
        raise NotAPencil(f"every group must have {m} lines")
    return m


def validate_partition(
    a: Arrangement,
    parts: Sequence[Sequence[int]],
    cert: TripleOnlyCertificate | None = None,
) -> PencilStructure:
    """Check that ``parts`` composes a reduced pencil and compute T0..T3.

    The products are rescaled so that Q3 = Q1 + Q2 holds exactly and Q1 has
    grlex-leading coefficient 1.
    """
    parts = tuple(tuple(sorted(p)) for p in parts)
    m = _check_shape(a.d, parts)
    if cert is None:
        cert = certify_triple_only(build_lattice(a))

    q = [_product(a, p) for p in parts]
    vecs = [f.vector() for f in q]
    for i, j in combinations(range(3), 2):
        if rank([vecs[i], vecs[j]]) < 2:
            raise NotAPencil(f"products of groups {i + 1} and {j + 1} are proportional")
    if rank(vecs) != 2:
        raise NotAPencil(
            f"partition {format_partition(parts)}: the three line products are linearly independent"
        )
    # k1*q1 + k2*q2 + k3*q3 = 0 with k3 != 0 since q1, q2 are independent
    (k1, k2, k3), = kernel([list(col) for col in zip(*vecs)], ncols=3)
    alpha, beta = -k1 / k3, -k2 / k3
    Q1, Q2, Q3 = q[0] * alpha, q[1] * beta, q[2]
    t = Q1.leading_coefficient().inv()
    Q1, Q2, Q3 = Q1 * t, Q2 * t, Q3 * t
    assert (Q1 + Q2 - Q3).is_zero()

    part_of = {}
    for k, p in enumerate(parts):
        for i in p:
            part_of[i] = k
    for lp in cert.double_points:
        i, j = lp.incident
        if part_of[i] != part_of[j]:
            raise DegeneratePencil(
                f"double point {lp.point} joins lines from groups {part_of[i] + 1} and {part_of[j] + 1}"
            )
    T = ([], [], [], [])
    for lp in cert.triple_points:
        groups = sorted(part_of[i] for i in lp.incident)
        if groups == [0, 1, 2]:
            T[0].append(lp.point)
        elif groups[0] == groups[2]:
            T[groups[0] + 1].append(lp.point)
        else:
            raise DegeneratePencil(
                f"triple point {lp.point} has lines from groups {[g + 1 for g in groups]}"
            )
    if len(T[0]) != m * m:
        raise DegeneratePencil(f"base locus has {len(T[0])} points, expected m^2 = {m * m}")
    Qs = (Q1, Q2, Q3)
    for t0 in T[0]:
        if any(evaluate(f, t0) for f in Qs):
            raise DegeneratePencil(f"base point {t0} is not on every curve of the pencil")
    for i in range(3):
        for t_i in T[i + 1]:
            for j in range(3):
                if j != i and not evaluate(Qs[j], t_i):
                    raise DegeneratePencil(
                        f"a line of group {j + 1} passes through the triple point {t_i} of group {i + 1}"
                    )
    return PencilStructure(
        m=m,
        partition=parts,
        Q=Qs,
        T0=tuple(T[0]),
        T1=tuple(T[1]),
        T2=tuple(T[2]),
        T3=tuple(T[3]),
    )


def _try(a, parts, cert):
    try:
        return validate_partition(a, parts, cert)
    except NotAPencil:
        return None


def _enumerate_partitions(d: int):
    """All partitions of range(d) into three groups of d/3, groups ordered by least element."""
    m = d // 3
    rest0 = list(range(1, d))
    for tail0 in combinations(rest0, m - 1):
        p0 = (0,) + tail0
        rem = [i for i in range(d) if i not in p0]
        first, others = rem[0], rem[1:]
        for tail1 in combinations(others, m - 1):
            p1 = (first,) + tail1
            p2 = tuple(i for i in rem if i not in p1)
            yield (p0, p1, p2)


def _propagated_partitions(d: int, cert: TripleOnlyCertificate):
    """Partitions compatible with the incidence constraints of a pencil.

    Two lines from different groups always meet at a base point, which lies on
    a line of the third group.  So both lines of a double point share a group,
    and the lines of a triple point are in one group or in three.
    """
    m = d // 3
    parent = list(range(d))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for lp in cert.double_points:
        i, j = (find(k) for k in lp.incident)
        if i != j:
            parent[max(i, j)] = min(i, j)
    blocks: dict[int, list[int]] = {}
    for i in range(d):
        blocks.setdefault(find(i), []).append(i)
    order = sorted(blocks.values(), key=lambda b: b[0])
    if any(len(b) > m for b in order):
        return
    block_of = {i: k for k, b in enumerate(order) for i in b}
    triples = [tuple(block_of[i] for i in lp.incident) for lp in cert.triple_points]
    watch: list[list[tuple[int, int, int]]] = [[] for _ in order]
    for tr in triples:
        for b in set(tr):
            watch[b].append(tr)

    assign = [-1] * len(order)
    load = [0, 0, 0]

    def consistent(b: int) -> bool:
        # a triple with two lines in one group and one elsewhere is impossible
        for tr in watch[b]:
            known = [assign[x] for x in tr if assign[x] >= 0]
            if len(known) == 3 and len(set(known)) == 2:
                return False
        return True

    def rec(k: int, used: int):
        if k == len(order):
            if load == [m, m, m]:
                parts = [[], [], []]
                for blk, g in zip(order, assign):
                    parts[g].extend(blk)
                yield tuple(tuple(sorted(p)) for p in parts)
            return
        size = len(order[k])
        for g in range(min(used + 1, 3)):
            if load[g] + size > m:
                continue
            assign[k] = g
            load[g] += size
            if consistent(k):
                yield from rec(k + 1, max(used, g + 1))
            load[g] -= size
            assign[k] = -1

    yield from rec(0, 0)


def search_pencil(
    a: Arrangement,
    cert: TripleOnlyCertificate | None = None,
    strategy: str = "propagate",
) -> PencilStructure | None:
    """The valid pencil structure with lexicographically least canonical partition, or None.

    ``strategy="enumerate"`` validates every balanced partition and is only
    practical for small arrangements; it exists to cross-check the pruned
    search.
    """
    if a.d % 3:
        return None
    if cert is None:
        cert = certify_triple_only(build_lattice(a))
    if strategy == "propagate":
        candidates = _propagated_partitions(a.d, cert)
    elif strategy == "enumerate":
        candidates = _enumerate_partitions(a.d)
    else:
        raise ValueError(f"unknown search strategy {strategy!r}")
    best = None
    for parts in candidates:
        parts = canonical_partition(parts)
        if best is not None and parts >= best.partition:
            continue
        found = _try(a, parts, cert)
        if found is not None:
            best = found
    return best


def profile(p: PencilStructure) -> SubarrangementProfile:
    sizes = p.sizes()
    sigma = min(sizes[i] + sizes[j] for i, j in combinations(range(3), 2))
    return SubarrangementProfile(sizes, sigma)
