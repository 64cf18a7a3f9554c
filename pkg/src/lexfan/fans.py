"""Ordinary rational cones and fans: stars, completeness, dual-monoid bases.

Cones here are {0}-rational: halfspaces through the origin, plus generator
descriptions.  They carry no more information than classical fans over Q, so
everything reduces to exact integer/rational linear algebra at desk scale.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cached_property, cmp_to_key

from . import linalg
from .errors import GeometryError, HasLineality, InvalidFan, NotAVertex
from .feasible import EQ, GE, solve_lex_system
from .ordered import LexVec
from .polyhedra import Halfspace, Point, PolyComplex, Polyhedron


class Cone:
    """A rational polyhedral cone in Q^q with both descriptions available."""

    def __init__(self, q: int, ineqs=None, rays=None):
        self.q = int(q)
        if ineqs is None and rays is None:
            raise ValueError("need inequalities or rays")
        self._ineqs = None if ineqs is None else tuple(
            linalg.primitive(u) for u in ineqs if any(u)
        )
        self._rays_in = None if rays is None else tuple(
            linalg.primitive(r) for r in rays if any(r)
        )

    @classmethod
    def from_inequalities(cls, q: int, rows) -> "Cone":
        return cls(q, ineqs=rows)

    @classmethod
    def from_rays(cls, q: int, rays) -> "Cone":
        return cls(q, rays=rays)

    @cached_property
    def lineality_basis(self) -> tuple[tuple[int, ...], ...]:
        if self._ineqs is not None:
            return tuple(linalg.kernel_basis(list(self._ineqs), self.q))
        # cone(R) contains the line through d iff both d and -d are in it
        rays = self._rays_in or ()
        sub = Polyhedron(
            self.q, 1, [Halfspace(u, LexVec([0])) for u in self.inequalities]
        )
        return tuple(sub.lineality()[1])

    @property
    def is_pointed(self) -> bool:
        return not self.lineality_basis

    @cached_property
    def inequalities(self) -> tuple[tuple[int, ...], ...]:
        """Halfspace description with gamma = 0 (equalities appear as +/- pairs)."""
        if self._ineqs is not None:
            return self._ineqs
        rays = self._rays_in or ()
        span_perp = linalg.kernel_basis(list(rays), self.q)
        rows: list[tuple[int, ...]] = []
        for w in span_perp:
            rows.append(tuple(w))
            rows.append(tuple(-x for x in w))
        r = self.q - len(span_perp)
        if r > 0:
            seen = set(rows)
            for subset in itertools.combinations(rays, r - 1):
                mat = [list(t) for t in subset] + [list(w) for w in span_perp]
                ker = linalg.kernel_basis(mat, self.q) if mat else [
                    tuple(row) for row in linalg.identity_int(self.q)
                ]
                if len(ker) != 1:
                    continue
                u = linalg.primitive(ker[0])
                dots = [linalg.dot_int(u, g) for g in rays]
                if all(d >= 0 for d in dots):
                    cand = u
                elif all(d <= 0 for d in dots):
                    cand = tuple(-x for x in u)
                else:
                    continue
                if cand not in seen:
                    seen.add(cand)
                    rows.append(cand)
        return tuple(sorted(set(rows)))

    @cached_property
    def rays(self) -> tuple[tuple[int, ...], ...]:
        """Extreme rays (primitive); requires a pointed cone."""
        if not self.is_pointed:
            raise HasLineality("cone has lineality; no extreme-ray description")
        if self._rays_in is not None and self._ineqs is None:
            # drop generators that are already nonneg combinations of the rest
            rays = list(dict.fromkeys(self._rays_in))
            keep = []
            for i, g in enumerate(rays):
                others = rays[:i] + rays[i + 1 :]
                if not others or not _in_cone_combination(others, g):
                    keep.append(g)
            return tuple(sorted(keep))
        rows = self.inequalities
        if not rows:
            if self.q == 0:
                return ()
            raise HasLineality("cone has lineality; no extreme-ray description")
        found = set()
        size = self.q - 1
        if size <= 0:
            subsets = [()]
        else:
            subsets = itertools.combinations(range(len(rows)), size)
        for subset in subsets:
            mat = [list(rows[i]) for i in subset]
            ker = (
                linalg.kernel_basis(mat, self.q)
                if mat
                else [tuple(r) for r in linalg.identity_int(self.q)]
            )
            if len(ker) != 1:
                continue
            d = linalg.primitive(ker[0])
            for cand in (d, tuple(-x for x in d)):
                if all(linalg.dot_int(u, cand) >= 0 for u in rows):
                    found.add(cand)
        return tuple(sorted(found))

    def generators(self) -> tuple[tuple[int, ...], ...]:
        """Rays plus +/- lineality basis: a finite generating set in all cases."""
        lin = self.lineality_basis
        if not lin:
            return self.rays
        sub = Polyhedron(
            self.q, 1, [Halfspace(u, LexVec([0])) for u in self.inequalities]
        )
        quot, qmap = sub.pointed_quotient()
        inner = Cone.from_inequalities(qmap.q, [h.u for h in quot.halfspaces])
        lifted = [
            tuple(sum(qmap.section[i][c] * r[c] for c in range(qmap.q)) for i in range(self.q))
            for r in inner.rays
        ]
        out = list(lifted)
        for d in lin:
            out.append(tuple(d))
            out.append(tuple(-x for x in d))
        return tuple(sorted(set(linalg.primitive(g) for g in out if any(g))))

    @cached_property
    def dim(self) -> int:
        gens = self.generators()
        return linalg.rank([list(g) for g in gens]) if gens else 0

    @cached_property
    def key(self):
        if self.is_pointed:
            return (self.q, frozenset(self.rays))
        return (self.q, frozenset(self.generators()))

    def contains_vector(self, d) -> bool:
        return all(linalg.dot_int(u, d) >= 0 for u in self.inequalities)

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains_vector(g) for g in other.generators())

    def intersect(self, other: "Cone") -> "Cone":
        return Cone.from_inequalities(self.q, self.inequalities + other.inequalities)

    @cached_property
    def _face_cones(self) -> tuple["Cone", ...]:
        poly = Polyhedron(self.q, 1, [Halfspace(u, LexVec([0])) for u in self.inequalities])
        out = {}
        for face in poly.faces():
            fp = poly.face_polyhedron(face.tight)
            cone = Cone.from_inequalities(self.q, [h.u for h in fp.halfspaces])
            out[cone.key] = cone
        return tuple(out.values())

    def faces(self) -> tuple["Cone", ...]:
        return self._face_cones

    def face_keys(self) -> set:
        return {c.key for c in self._face_cones}

    def __eq__(self, other):
        return isinstance(other, Cone) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        try:
            return f"Cone(q={self.q}, rays={sorted(self.rays)})"
        except HasLineality:
            return f"Cone(q={self.q}, unpointed)"


def _in_cone_combination(gens, target) -> bool:
    """Is target a nonnegative rational combination of gens?  Exact LP at k=1."""
    if not gens:
        return all(x == 0 for x in target)
    m = len(gens)
    q = len(target)
    cons = []
    for i in range(m):
        coeffs = tuple(1 if j == i else 0 for j in range(m))
        cons.append((coeffs, (Fraction(0),), GE))
    for c in range(q):
        coeffs = tuple(Fraction(g[c]) for g in gens)
        cons.append((coeffs, (Fraction(target[c]),), EQ))
    ok, _ = solve_lex_system(m, 1, cons)
    return ok


class RationalFan:
    """A finite face-closed collection of pointed rational cones."""

    def __init__(self, q: int, cones, validate: bool = True):
        self.q = int(q)
        dedup: dict = {}
        for c in cones:
            if not isinstance(c, Cone):
                c = Cone.from_rays(self.q, c)
            if c.q != self.q:
                raise InvalidFan([f"cone ambient rank {c.q} != fan rank {self.q}"])
            dedup.setdefault(c.key, c)
        self.cones = tuple(dedup.values())
        if validate:
            ok, violations = self.check()
            if not ok:
                raise InvalidFan(violations)

    def check(self) -> tuple[bool, list[str]]:
        violations = []
        keys = {c.key for c in self.cones}
        for i, c in enumerate(self.cones):
            if not c.is_pointed:
                violations.append(f"cone {i} contains a line")
        if violations:
            return False, violations
        for i, c in enumerate(self.cones):
            for f in c.faces():
                if f.key not in keys:
                    violations.append(f"face {sorted(f.rays)} of cone {i} missing")
        for i, a in enumerate(self.cones):
            for j in range(i + 1, len(self.cones)):
                b = self.cones[j]
                inter = a.intersect(b)
                if inter.key not in keys:
                    violations.append(f"intersection of cones {i}, {j} not in fan")
                elif inter.key not in a.face_keys() or inter.key not in b.face_keys():
                    violations.append(f"intersection of cones {i}, {j} is not a common face")
        return (not violations), violations

    def incidence(self) -> list[tuple[int, int]]:
        """Pairs (i, j), i != j, with cone i a face of cone j."""
        out = []
        for j, c in enumerate(self.cones):
            keys = c.face_keys()
            for i, f in enumerate(self.cones):
                if i != j and f.key in keys:
                    out.append((i, j))
        return sorted(out)

    def maximal_cones(self) -> list[Cone]:
        out = []
        for c in self.cones:
            proper_face_of_other = any(
                o is not c and c.key in o.face_keys() and o.key != c.key for o in self.cones
            )
            if not proper_face_of_other:
                out.append(c)
        out.sort(key=lambda c: sorted(c.rays))
        return out

    def all_rays(self) -> list[tuple[int, ...]]:
        rays = set()
        for c in self.cones:
            rays.update(c.rays)
        return sorted(rays)

    def __repr__(self):
        return f"RationalFan(q={self.q}, {len(self.cones)} cones)"


def _cyclic_ray_sort(rays):
    def half(v):
        x, y = v
        return 0 if (y > 0 or (y == 0 and x > 0)) else 1

    def cmp(a, b):
        ha, hb = half(a), half(b)
        if ha != hb:
            return -1 if ha < hb else 1
        cross = a[0] * b[1] - a[1] * b[0]
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    return sorted(rays, key=cmp_to_key(cmp))


def is_complete_fan(fan: RationalFan) -> bool:
    """Support covers all of Q^q: rank-wise closure tests (see module doc)."""
    q = fan.q
    if q == 0:
        return bool(fan.cones)
    if q == 1:
        rays = set(fan.all_rays())
        return (1,) in rays and (-1,) in rays
    maximal = fan.maximal_cones()
    if not maximal or any(c.dim != q for c in maximal):
        return False
    if q == 2:
        rays = _cyclic_ray_sort(fan.all_rays())
        if len(rays) < 3:
            return False
        two_cone_keys = {c.key for c in maximal}
        expected = set()
        for i, r in enumerate(rays):
            s = rays[(i + 1) % len(rays)]
            cross = r[0] * s[1] - r[1] * s[0]
            if cross <= 0:
                return False
            key = (2, frozenset((r, s)))
            if key not in two_cone_keys:
                return False
            expected.add(key)
        return expected == two_cone_keys
    facet_count: dict = {}
    for c in maximal:
        for f in c.faces():
            if f.dim == q - 1:
                facet_count[f.key] = facet_count.get(f.key, 0) + 1
    return bool(facet_count) and all(v == 2 for v in facet_count.values())


def star_fan(complex_: PolyComplex, w: Point) -> RationalFan:
    """Fan of tight-constraint direction cones of all cells containing w."""
    vertex_pts = [pt for _, pt in complex_.vertex_cells()]
    if w not in vertex_pts:
        raise NotAVertex(f"{w!r} is not a vertex of the complex")
    cones = []
    for idx in complex_.cells_containing(w):
        cell = complex_.cells[idx]
        tight = [h.u for h in cell.halfspaces if w.pair(h.u) == h.gamma]
        cones.append(Cone.from_inequalities(complex_.n, tight))
    closed: dict = {}
    for c in cones:
        closed.setdefault(c.key, c)
        for f in c.faces():
            closed.setdefault(f.key, f)
    return RationalFan(complex_.n, closed.values())


def recession_cone(p: Polyhedron) -> Cone:
    """The cone of unbounded rational directions {d : <u, d> >= 0 for all u}."""
    return Cone.from_inequalities(p.n, [h.u for h in p.halfspaces if any(h.u)])


def _zonotope_lattice_points(rays, q: int):
    lo = [sum(min(0, r[c]) for r in rays) for c in range(q)]
    hi = [sum(max(0, r[c]) for r in rays) for c in range(q)]
    m = len(rays)
    simplicial = m == q and linalg.rank([list(r) for r in rays]) == q
    for coords in itertools.product(*(range(lo[c], hi[c] + 1) for c in range(q))):
        if simplicial:
            sol = linalg.solve_unique(
                [[rays[j][c] for j in range(m)] for c in range(q)],
                [[coords[c]] for c in range(q)],
            )
            if sol is not None and all(0 <= lam[0] <= 1 for lam in sol):
                yield coords
            continue
        cons = []
        for i in range(m):
            unit = tuple(1 if j == i else 0 for j in range(m))
            cons.append((unit, (Fraction(0),), GE))
            cons.append((tuple(-x for x in unit), (Fraction(-1),), GE))
        for c in range(q):
            cons.append((tuple(Fraction(r[c]) for r in rays), (Fraction(coords[c]),), EQ))
        ok, _ = solve_lex_system(m, 1, cons)
        if ok:
            yield coords


def hilbert_basis(sigma: Cone) -> list[tuple[int, ...]]:
    """Minimal generating set of the dual monoid S_sigma of a pointed cone.

    The dual cone is split into its unit lattice and a pointed part; the
    pointed part's basis comes from lattice points of the zonotope spanned by
    its extreme rays, filtered down to the irreducible elements, and is lifted
    back along a unimodular section.  Units contribute a +/- lattice basis.
    """
    if not sigma.is_pointed:
        raise HasLineality("dual monoid computed for pointed cones only")
    q = sigma.q
    gens = sigma.rays
    dual_poly = Polyhedron(q, 1, [Halfspace(g, LexVec([0])) for g in gens])
    units = dual_poly.lineality()[1]
    out: set[tuple[int, ...]] = set()
    for l in units:
        out.add(tuple(l))
        out.add(tuple(-x for x in l))
    quot, qmap = dual_poly.pointed_quotient()
    if qmap.q > 0:
        pointed_dual = Cone.from_inequalities(qmap.q, [h.u for h in quot.halfspaces])
        rays = pointed_dual.rays
        if rays:
            ineqs = pointed_dual.inequalities
            candidates = [
                x for x in _zonotope_lattice_points(rays, qmap.q) if any(x)
            ]

            def in_dual(x):
                return all(linalg.dot_int(u, x) >= 0 for u in ineqs)

            irreducible = []
            cand_set = set(candidates)
            for x in candidates:
                reducible = False
                for a in cand_set:
                    if a == x:
                        continue
                    b = tuple(xx - aa for xx, aa in zip(x, a))
                    if any(b) and in_dual(b):
                        reducible = True
                        break
                if not reducible:
                    irreducible.append(x)
            for y in irreducible:
                lifted = tuple(
                    sum(qmap.section[i][c] * y[c] for c in range(qmap.q))
                    for i in range(q)
                )
                out.add(lifted)
    return sorted(out)
