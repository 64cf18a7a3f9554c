"""Exact polyhedral geometry over lexicographically ordered value groups.

Builds admissible fans over Q^(k), slices them into recession complexes, and
reports the combinatorics of the associated multi-stage toric degenerations:
component counts, star fans, dual-monoid Hilbert bases and adjacency graphs.
"""

from .admissible import (
    AdmissibleCone,
    AdmissibleConstraint,
    AdmissibleFan,
    cone_over_cell,
    cone_over_complex,
    is_admissible,
    recession,
    validate_fan,
)
from .algebra import (
    FormalLaurent,
    GeneratorSet,
    ValuedMonomial,
    component_vanishes,
    formal_mul,
    formal_pow,
    generic_monoid_member,
    is_member,
    tilted_generators,
    vertex_valuation,
    weight,
)
from .errors import (
    DimensionMismatch,
    EmptyPolyhedron,
    GeometryError,
    HasLineality,
    InputError,
    InvalidComplex,
    InvalidFan,
    LexfanError,
    NotAVertex,
    NotPlottable,
    UnboundedWeight,
)
from .fans import (
    Cone,
    RationalFan,
    hilbert_basis,
    is_complete_fan,
    recession_cone,
    star_fan,
)
from .ordered import (
    LexVec,
    Multiplier,
    TowerProfile,
    apply_multiplier,
    arch_level,
    epsilon,
    is_monotone_multiplier,
    lex_cmp,
    truncate,
)
from .polyhedra import (
    Face,
    Halfspace,
    Point,
    PolyComplex,
    Polyhedron,
    QuotientMap,
    dimension,
    enumerate_faces,
    feasible,
    lineality,
    pointed_quotient,
    validate_complex,
    vertices,
)
from .report import ComponentData, FiberReport, LevelData, fiber_report

__version__ = "0.1.0"
