"""Milnor fiber monodromy of line arrangements with only double and triple points."""

from .arrangement import Arrangement, build_lattice, certify_triple_only, triple_points
from .catalog import build as build_catalog_entry
from .exactfield import OMEGA, OMEGA2, ONE, W, ZERO, FieldElement
from .monodromy import Branch, analyze, classify, coker_rho_prime, cross_validate, superabundance
from .pencil import search_pencil, validate_partition
from .polygeom import HomogeneousPolynomial, ProjectiveLine, ProjectivePoint

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "Branch",
    "FieldElement",
    "HomogeneousPolynomial",
    "OMEGA",
    "OMEGA2",
    "ONE",
    "ProjectiveLine",
    "ProjectivePoint",
    "W",
    "ZERO",
    "analyze",
    "build_catalog_entry",
    "build_lattice",
    "certify_triple_only",
    "classify",
    "coker_rho_prime",
    "cross_validate",
    "search_pencil",
    "superabundance",
    "triple_points",
    "validate_partition",
]
