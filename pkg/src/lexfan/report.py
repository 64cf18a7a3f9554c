"""Per-level degeneration reports: recession complexes, stars, adjacency."""

from __future__ import annotations

from dataclasses import dataclass

from .admissible import AdmissibleFan, validate_fan
from .errors import GeometryError, InvalidFan
from .fans import Cone, RationalFan, hilbert_basis, is_complete_fan, star_fan
from .polyhedra import Point, PolyComplex


@dataclass(frozen=True)
class ComponentData:
    """One irreducible-component descriptor: a vertex, its star, Hilbert data."""

    vertex: Point
    star: RationalFan
    hilbert: tuple[tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]], ...]
    # hilbert: per maximal star cone, (sorted rays, dual-monoid basis)


@dataclass(frozen=True)
class LevelData:
    level: int
    complex: PolyComplex
    vertices: tuple[Point, ...]
    components: tuple[ComponentData, ...]
    adjacency: tuple[tuple[int, int], ...]
    cell_dims: tuple[int, ...]

    @property
    def component_count(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class FiberReport:
    n: int
    k: int
    levels: tuple[LevelData, ...]
    generic_fan: RationalFan
    generic_complete: bool

    @property
    def component_counts(self) -> list[int]:
        return [lv.component_count for lv in self.levels]


def _level_data(complex_: PolyComplex, level: int) -> LevelData:
    vertex_cells = complex_.vertex_cells()
    vertices = tuple(pt for _, pt in vertex_cells)
    index_of = {pt: i for i, pt in enumerate(vertices)}
    components = []
    for pt in vertices:
        star = star_fan(complex_, pt)
        hilbert = []
        for cone in star.maximal_cones():
            basis = tuple(hilbert_basis(cone))
            hilbert.append((tuple(sorted(cone.rays)), basis))
        components.append(
            ComponentData(vertex=pt, star=star, hilbert=tuple(hilbert))
        )
    edges = set()
    dims = []
    for cell in complex_.cells:
        d = cell.dimension()
        dims.append(d)
        if d == 1:
            ends = cell.vertices()
            if len(ends) == 2:
                a, b = ends
                if a not in index_of or b not in index_of:
                    raise GeometryError("edge endpoint missing from vertex cells")
                i, j = sorted((index_of[a], index_of[b]))
                edges.add((i, j))
    return LevelData(
        level=level,
        complex=complex_,
        vertices=vertices,
        components=tuple(components),
        adjacency=tuple(sorted(edges)),
        cell_dims=tuple(dims),
    )


def fiber_report(sigma: AdmissibleFan) -> FiberReport:
    """The full multi-stage degeneration report for a validated fan."""
    ok, violations = validate_fan(sigma)
    if not ok:
        raise InvalidFan(violations)
    levels = []
    for level in range(sigma.k + 1):
        levels.append(_level_data(sigma.recession_complex(level), level))
    top = sigma.recession_complex(sigma.k)
    generic_fan = RationalFan(
        sigma.n,
        [Cone.from_inequalities(sigma.n, [h.u for h in cell.halfspaces]) for cell in top.cells],
    )
    return FiberReport(
        n=sigma.n,
        k=sigma.k,
        levels=tuple(levels),
        generic_fan=generic_fan,
        generic_complete=is_complete_fan(generic_fan),
    )
