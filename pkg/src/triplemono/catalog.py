"""Exact constructions of the classical triple-point arrangements composed of a pencil.

Every entry carries its documented partition into three subarrangements and
the values the pipeline must reproduce.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arrangement import Arrangement, build_lattice, certify_triple_only
from .errors import ArrangementError, ParameterRejected
from .exactfield import OMEGA, OMEGA2, ONE, W, ZERO, FieldElement, as_element
from .monodromy import Branch
from .pencil import validate_partition
from .polygeom import HomogeneousPolynomial

__all__ = [
    "NAMES",
    "Expected",
    "CatalogEntry",
    "build",
    "all_entries",
    "hesse_fibers",
    "hesse_full",
    "yoshinaga_lines",
    "yoshinaga_T1",
    "yoshinaga_conics",
]

NAMES = ("concurrent3", "a3", "ceva", "hesse", "d4section", "yoshinaga18")


@dataclass(frozen=True)
class Expected:
    s: int
    n_triple: int
    n_base: int
    sizes: tuple[int, int, int]
    branch: Branch


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    parameters: dict
    arrangement: Arrangement
    documented_partition: tuple[tuple[int, ...], ...]
    expected: Expected


def _thirds(m: int):
    return tuple(tuple(range(k * m, (k + 1) * m)) for k in range(3))


def _concurrent3():
    lines = [(1, -1, 0), (0, 1, -1), (1, 0, -1)]
    return lines, Expected(1, 1, 1, (0, 0, 0), Branch.SMALL)


def _a3():
    lines = [(1, -1, 0), (1, 1, 0), (0, 1, -1), (0, 1, 1), (1, 0, -1), (1, 0, 1)]
    return lines, Expected(1, 4, 4, (0, 0, 0), Branch.SMALL)


def _cube_difference(i: int, j: int):
    """The three lines of u^3 - v^3 = (u - v)(u - omega v)(u - omega^2 v) in variables i, j."""
    out = []
    for r in (ONE, OMEGA, OMEGA2):
        c = [ZERO, ZERO, ZERO]
        c[i], c[j] = ONE, -r
        out.append(tuple(c))
    return out


def _ceva():
    lines = _cube_difference(0, 1) + _cube_difference(1, 2) + _cube_difference(0, 2)
    return lines, Expected(2, 12, 9, (1, 1, 1), Branch.MAX_CEVA)


HESSE_FIBERS = ("xyz", "1", "omega", "omega2")


def hesse_fibers() -> dict[str, list[tuple]]:
    """The four singular fibers of a(x^3 + y^3 + z^3) + b*xyz as triangles of lines.

    x^3 + y^3 + z^3 - 3*lam*xyz with lam^3 = 1 splits as the product over
    k of (x + lam*omega^k y + omega^(2k) z).
    """
    fibers = {"xyz": [(ONE, ZERO, ZERO), (ZERO, ONE, ZERO), (ZERO, ZERO, ONE)]}
    for name, lam in (("1", ONE), ("omega", OMEGA), ("omega2", OMEGA2)):
        fibers[name] = [(ONE, lam * OMEGA ** k, OMEGA ** (2 * k)) for k in range(3)]
    return fibers


def _hesse(fibers: Sequence[str] = ("xyz", "1", "omega")):
    fibers = tuple(fibers)
    if len(fibers) != 3 or len(set(fibers)) != 3 or not set(fibers) <= set(HESSE_FIBERS):
        raise ParameterRejected(f"choose three distinct Hesse fibers out of {HESSE_FIBERS}, got {fibers}")
    table = hesse_fibers()
    lines = [L for f in fibers for L in table[f]]
    return lines, Expected(1, 9, 9, (0, 0, 0), Branch.SMALL)


def hesse_full() -> Arrangement:
    """All twelve lines of the four singular Hesse fibers (nine points of multiplicity 4)."""
    table = hesse_fibers()
    return Arrangement([L for f in HESSE_FIBERS for L in table[f]], "hesse12")


def _d4section(hyperplane=(2, 3, 5)):
    al, be, ga = (as_element(v) for v in hyperplane)
    X, Y, Z = (ONE, ZERO, ZERO), (ZERO, ONE, ZERO), (ZERO, ZERO, ONE)
    T = (al, be, ga)

    def comb(u, su, v):
        return tuple(a + su * b for a, b in zip(u, v))

    # a = x^2, b = y^2, c = z^2, d = t^2;  (a-b)(c-d) + (a-c)(d-b) + (a-d)(b-c) = 0
    part1 = [comb(X, -1, Y), comb(X, 1, Y), comb(Z, -1, T), comb(Z, 1, T)]
    part2 = [comb(X, -1, Z), comb(X, 1, Z), comb(T, -1, Y), comb(T, 1, Y)]
    part3 = [comb(X, -1, T), comb(X, 1, T), comb(Y, -1, Z), comb(Y, 1, Z)]
    return part1 + part2 + part3, Expected(1, 16, 16, (0, 0, 0), Branch.SMALL)


def _tau_line(L):
    a, b, c = L
    return (c, a, b)


def yoshinaga_lines(c) -> list[tuple]:
    """Eighteen lines: the factors of Q1 and of its two cyclic shifts."""
    c = as_element(c)
    w5 = ONE - W
    A1 = _cube_difference(0, 1) + [
        (ONE, ONE, -c),
        (W, w5, c),
        (w5, W, c),
    ]
    A2 = [_tau_line(L) for L in A1]
    A3 = [_tau_line(L) for L in A2]
    return A1 + A2 + A3


def yoshinaga_T1(c) -> list[tuple]:
    c = as_element(c)
    w5 = ONE - W
    return [(ZERO, ZERO, ONE), (-c, -c, ONE), (w5 * c, W * c, ONE), (W * c, w5 * c, ONE)]


def yoshinaga_conics(c):
    """Forms q3 = y^2 + cxz, q1 = z^2 + cxy, q2 = x^2 + cyz through T1∪T2, T2∪T3, T1∪T3."""
    c = as_element(c)
    q3 = HomogeneousPolynomial(2, {(0, 2, 0): ONE, (1, 0, 1): c})
    q1 = HomogeneousPolynomial(2, {(0, 0, 2): ONE, (1, 1, 0): c})
    q2 = HomogeneousPolynomial(2, {(2, 0, 0): ONE, (0, 1, 1): c})
    return {"T1∪T2": q3, "T2∪T3": q1, "T1∪T3": q2}


def _yoshinaga(c=10):
    c = Fraction(c) if not isinstance(c, FieldElement) else c
    if not as_element(c):
        raise ParameterRejected("yoshinaga18 needs c != 0")
    return yoshinaga_lines(c), Expected(2, 48, 36, (4, 4, 4), Branch.MAX48_CONICS)


_BUILDERS = {
    "concurrent3": (_concurrent3, {}),
    "a3": (_a3, {}),
    "ceva": (_ceva, {}),
    "hesse": (_hesse, {"fibers": ("xyz", "1", "omega")}),
    "d4section": (_d4section, {"hyperplane": (2, 3, 5)}),
    "yoshinaga18": (_yoshinaga, {"c": 10}),
}


def _fmt_params(params: dict) -> str:
    def fmt(v):
        if isinstance(v, (tuple, list)):
            return ",".join(fmt(x) for x in v)
        return str(as_element(v)) if not isinstance(v, str) else v

    return " ".join(f"{k}={fmt(v)}" for k, v in params.items()) or "defaults"


def build(name: str, **parameters) -> CatalogEntry:
    """Construct a catalog arrangement and check it has the documented structure.

    Raises ParameterRejected when the parameters give a degenerate
    configuration (coincident lines, a point of multiplicity >= 4, a wrong
    base locus, or triple-point counts different from the documented ones).
    """
    if name not in _BUILDERS:
        raise KeyError(f"unknown catalog entry {name!r}; choose from {NAMES}")
    fn, defaults = _BUILDERS[name]
    unknown = set(parameters) - set(defaults)
    if unknown:
        raise ParameterRejected(f"{name} does not take parameters {sorted(unknown)}")
    params = {**defaults, **{k: v for k, v in parameters.items() if v is not None}}
    lines, expected = fn(**params)
    m = len(lines) // 3
    label = name
    where = f"{name} ({_fmt_params(params)})"
    try:
        arr = Arrangement(lines, label)
        cert = certify_triple_only(build_lattice(arr))
    except ArrangementError as exc:
        raise ParameterRejected(f"{where}: {exc}") from exc
    partition = _thirds(m)
    try:
        pencil = validate_partition(arr, partition, cert)
    except ArrangementError as exc:
        raise ParameterRejected(f"{where}: documented partition fails: {exc}") from exc
    if len(cert.triple_points) != expected.n_triple:
        raise ParameterRejected(
            f"{where}: {len(cert.triple_points)} triple points, expected {expected.n_triple}"
        )
    if pencil.sizes() != expected.sizes:
        raise ParameterRejected(f"{where}: subarrangement triple points {pencil.sizes()}")
    return CatalogEntry(name, params, arr, partition, expected)


def all_entries() -> list[CatalogEntry]:
    return [build(n) for n in NAMES]
