"""Weight functions and tilted-algebra data for valued monomial sets.

Coefficients are never materialized: a formal Laurent element is just a
finite set of exponents with the valuations of their (unseen) coefficients.
That is exactly the data the weight function, membership tests and generator
constructions consume, and it makes the no-cancellation product exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import linalg
from .errors import (
    DimensionMismatch,
    EmptyPolyhedron,
    GeometryError,
    HasLineality,
    LexfanError,
    NotAVertex,
    UnboundedWeight,
)
from .fans import Cone, hilbert_basis, recession_cone
from .admissible import AdmissibleFan
from .ordered import LexVec, truncate
from .polyhedra import Point, Polyhedron


@dataclass(frozen=True)
class ValuedMonomial:
    """An exponent u with the valuation of its coefficient."""

    u: tuple[int, ...]
    val: LexVec

    def __init__(self, u, val):
        object.__setattr__(self, "u", tuple(int(x) for x in u))
        val = val if isinstance(val, LexVec) else LexVec(val)
        object.__setattr__(self, "val", val)


class FormalLaurent:
    """A finite set of valued monomials with pairwise distinct exponents."""

    def __init__(self, terms):
        out: dict[tuple[int, ...], ValuedMonomial] = {}
        for t in terms:
            if not isinstance(t, ValuedMonomial):
                t = ValuedMonomial(*t)
            if t.u in out:
                raise LexfanError(f"duplicate exponent {t.u} in formal Laurent element")
            out[t.u] = t
        self.terms = tuple(sorted(out.values(), key=lambda t: t.u))
        if self.terms:
            n = len(self.terms[0].u)
            k = self.terms[0].val.k
            if any(len(t.u) != n or t.val.k != k for t in self.terms):
                raise DimensionMismatch("terms have mixed shapes")

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __repr__(self):
        return f"FormalLaurent({len(self.terms)} terms)"


def formal_mul(f: FormalLaurent, g: FormalLaurent) -> FormalLaurent:
    """Min-plus support product: Minkowski-sum exponents, min valuation sums."""
    acc: dict[tuple[int, ...], LexVec] = {}
    for a in f:
        for b in g:
            u = tuple(x + y for x, y in zip(a.u, b.u))
            v = a.val + b.val
            cur = acc.get(u)
            if cur is None or v < cur:
                acc[u] = v
    return FormalLaurent(ValuedMonomial(u, v) for u, v in acc.items())


def formal_pow(f: FormalLaurent, m: int) -> FormalLaurent:
    if m < 1:
        raise LexfanError("power must be a positive integer")
    out = f
    for _ in range(m - 1):
        out = formal_mul(out, f)
    return out


def vertex_valuation(w: Point, f: FormalLaurent) -> LexVec:
    """min over terms of val + <u, w>: the monomial valuation at one point."""
    if not f.terms:
        raise LexfanError("empty formal Laurent element has no valuation")
    return min(t.val + w.pair(t.u) for t in f)


def _bounded_below_directions(p: Polyhedron) -> tuple[tuple[int, ...], ...]:
    """Generators of the recession cone; <u, .> is bounded below on p iff
    u pairs nonnegatively with all of them."""
    return recession_cone(p).generators()


def _quotient_vertices(p: Polyhedron):
    quot, qmap = p.pointed_quotient()
    return quot, qmap, quot.vertices()


def weight(p: Polyhedron, f: FormalLaurent) -> LexVec:
    """inf over p of val + <u, w> per term, minimized over terms.

    For a pointed polyhedron the infimum is attained at a vertex; unpointed
    input is reduced through its pointed quotient first.  A term whose
    exponent pairs negatively with an unbounded direction makes the infimum
    -infinity, which is rejected.
    """
    if p.is_empty:
        raise EmptyPolyhedron("empty")
    if not f.terms:
        raise LexfanError("empty formal Laurent element has no weight")
    rec_gens = _bounded_below_directions(p)
    for t in f:
        if any(linalg.dot_int(t.u, d) < 0 for d in rec_gens):
            raise UnboundedWeight(f"unbounded below: exponent {t.u}")
    quot, qmap, verts = _quotient_vertices(p)
    best = None
    for t in f:
        u2 = qmap.descend(t.u)
        if u2 is None:
            raise UnboundedWeight(f"unbounded below: exponent {t.u}")
        for w in verts:
            v = t.val + w.pair(u2)
            if best is None or v < best:
                best = v
    return best


def is_member(p: Polyhedron, m: ValuedMonomial) -> bool:
    """Monomial membership in the tilted algebra: val + <u, v> >= 0 on all of p."""
    if p.is_empty:
        raise EmptyPolyhedron("empty")
    rec_gens = _bounded_below_directions(p)
    if any(linalg.dot_int(m.u, d) < 0 for d in rec_gens):
        return False
    quot, qmap, verts = _quotient_vertices(p)
    u2 = qmap.descend(m.u)
    if u2 is None:
        return False
    return all(m.val + w.pair(u2) >= LexVec.zero(p.k) for w in verts)


@dataclass(frozen=True)
class GeneratorSet:
    """Monomial generators (u, required valuation) with their vertex provenance."""

    pairs: tuple[tuple[tuple[int, ...], LexVec], ...]
    by_vertex: tuple[tuple[Point, tuple[tuple[tuple[int, ...], LexVec], ...]], ...]


def tilted_generators(p: Polyhedron) -> GeneratorSet:
    """Per vertex v_j, one generator per Hilbert-basis element u_i of the dual
    monoid of its star cone, with valuation -<u_i, v_j> (so the pairing at the
    defining vertex is exactly zero)."""
    if p.is_empty:
        raise EmptyPolyhedron("empty")
    if not p.is_pointed:
        raise HasLineality("has lineality; apply pointed_quotient first")
    by_vertex = []
    pairs: dict[tuple[tuple[int, ...], tuple], tuple[tuple[int, ...], LexVec]] = {}
    for v in p.vertices():
        tight = [h.u for h in p.halfspaces if v.pair(h.u) == h.gamma]
        star = Cone.from_inequalities(p.n, tight)
        gens = []
        for u in hilbert_basis(star):
            val = -v.pair(u)
            gens.append((u, val))
            pairs.setdefault((u, val.entries), (u, val))
        by_vertex.append((v, tuple(gens)))
    ordered = tuple(sorted(pairs.values(), key=lambda g: (g[0], g[1].entries)))
    return GeneratorSet(pairs=ordered, by_vertex=tuple(by_vertex))


def generic_monoid_member(p: Polyhedron, u) -> bool:
    """Membership of u in the dual monoid of the recession cone of p.

    Decided two ways (dual pairing on recession generators; existence of a
    valuation making the monomial a member) and cross-checked.
    """
    if p.is_empty:
        raise EmptyPolyhedron("empty")
    u = tuple(int(x) for x in u)
    rec_gens = _bounded_below_directions(p)
    via_dual = all(linalg.dot_int(u, d) >= 0 for d in rec_gens)

    quot, qmap, verts = _quotient_vertices(p)
    u2 = qmap.descend(u)
    if u2 is None:
        via_val = False
    else:
        big = max((-w.pair(u2) for w in verts), default=LexVec.zero(p.k))
        via_val = is_member(p, ValuedMonomial(u, big))
    if via_dual != via_val:
        raise GeometryError(
            f"dual-pairing and valuation routes disagree for exponent {u}"
        )
    return via_dual


def component_vanishes(
    sigma: AdmissibleFan, level: int, w: Point, f: FormalLaurent
) -> bool:
    """Does f vanish on the component of the level-i fiber attached to w?

    True when the level-i truncation of the vertex valuation is strictly
    positive.  Terms must be regular at the component: truncated term
    valuations nonnegative at w.
    """
    complex_ = sigma.recession_complex(level)
    vertex_pts = [pt for _, pt in complex_.vertex_cells()]
    if w not in vertex_pts:
        raise NotAVertex(f"not a vertex of the level-{level} recession complex")
    zero = LexVec.zero(sigma.k)
    for t in f:
        tv = t.val + w.pair(t.u)
        if not truncate(tv, level) >= zero:
            raise UnboundedWeight(
                f"term {t.u} is not regular at level {level} (truncated valuation < 0)"
            )
    nu = vertex_valuation(w, f)
    return truncate(nu, level) > zero
