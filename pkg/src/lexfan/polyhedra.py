"""Rational halfspaces, polyhedra and complexes over the lex-ordered Q^(k).

A halfspace is a pair (u, gamma) with u an integer vector in the character
lattice and gamma in Q^(k); it cuts out {v : <u, v> >= gamma} where points v
are n x k rational matrices and the pairing takes lex-vector values.  Faces
are canonicalized by their maximal tight sets, and dimension is the flag rank
of the face poset (which over a lex order is not the same thing as the
Q-affine dimension of the point set).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd

from . import linalg
from .errors import (
    DimensionMismatch,
    EmptyPolyhedron,
    GeometryError,
    HasLineality,
)
from .feasible import EQ, GE, GT, solve_lex_system
from .ordered import LexVec


@dataclass(frozen=True)
class Halfspace:
    """The constraint <u, v> >= gamma."""

    u: tuple[int, ...]
    gamma: LexVec

    def __init__(self, u, gamma):
        object.__setattr__(self, "u", tuple(int(x) for x in u))
        gamma = gamma if isinstance(gamma, LexVec) else LexVec(gamma)
        object.__setattr__(self, "gamma", gamma)

    @property
    def n(self) -> int:
        return len(self.u)

    @property
    def k(self) -> int:
        return self.gamma.k

    def flip(self) -> "Halfspace":
        """The opposite halfspace <u, v> <= gamma, as <-u, v> >= -gamma."""
        return Halfspace(tuple(-x for x in self.u), -self.gamma)


class Point:
    """An element of Hom(M, Q^(k)): one LexVec value per lattice coordinate."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(Fraction(x) for x in row) for row in rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def k(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def pair(self, u) -> LexVec:
        if len(u) != self.n:
            raise DimensionMismatch(f"pairing rank mismatch: {len(u)} vs {self.n}")
        k = self.k
        acc = [Fraction(0)] * k
        for c, row in zip(u, self.rows):
            if c:
                for j in range(k):
                    acc[j] += c * row[j]
        return LexVec(acc)

    def __eq__(self, other):
        return isinstance(other, Point) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Point({[[str(x) for x in row] for row in self.rows]})"


@dataclass(frozen=True)
class Face:
    """A nonempty face, identified by its maximal tight constraint set."""

    tight: frozenset[int]
    point: Point
    dim: int


def _normalize_halfspaces(halfspaces, k: int):
    """Primitive u, strongest gamma per u, trivial constraints dropped.

    Inconsistent zero constraints (0 >= gamma with gamma > 0) are kept so the
    polyhedron comes out empty.
    """
    zero = LexVec.zero(k)
    best: dict[tuple[int, ...], LexVec] = {}
    inconsistent = None
    for hs in halfspaces:
        if not any(hs.u):
            if hs.gamma > zero and inconsistent is None:
                inconsistent = hs
            continue
        g = 0
        for x in hs.u:
            g = gcd(g, abs(x))
        u = tuple(x // g for x in hs.u)
        gamma = hs.gamma.scale(Fraction(1, g)) if g > 1 else hs.gamma
        cur = best.get(u)
        if cur is None or gamma > cur:
            best[u] = gamma
    out = [Halfspace(u, gamma) for u, gamma in best.items()]
    if inconsistent is not None:
        out.append(inconsistent)
    out.sort(key=lambda h: (h.u, h.gamma.entries))
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def _contains_cached(n: int, k: int, sup_key, sub_key) -> bool:
    sub_system = [(u, gamma, GE) for u, gamma in sub_key]
    for u, gamma in sup_key:
        violated = (tuple(-c for c in u), tuple(-g for g in gamma), GT)
        ok, _ = solve_lex_system(n, k, sub_system + [violated])
        if ok:
            return False
    return True


class Polyhedron:
    """Intersection of finitely many halfspaces; empty system = all of N."""

    def __init__(self, n: int, k: int, halfspaces=()):
        self.n = int(n)
        self.k = int(k)
        hss = []
        for hs in halfspaces:
            if not isinstance(hs, Halfspace):
                hs = Halfspace(*hs)
            if hs.n != self.n or hs.k != self.k:
                raise DimensionMismatch(
                    f"halfspace shape ({hs.n}, {hs.k}) does not match (n={n}, k={k})"
                )
            hss.append(hs)
        self.halfspaces = _normalize_halfspaces(hss, self.k)
        self.key = (
            self.n,
            self.k,
            tuple((h.u, h.gamma.entries) for h in self.halfspaces),
        )
        ok, wit = solve_lex_system(self.n, self.k, self._system())
        self._witness = Point(wit) if ok else None

    def _system(self, extra=()):
        sys = [(h.u, h.gamma.entries, GE) for h in self.halfspaces]
        sys.extend(extra)
        return sys

    @property
    def is_empty(self) -> bool:
        return self._witness is None

    @property
    def witness(self) -> Point | None:
        return self._witness

    def __eq__(self, other):
        if not isinstance(other, Polyhedron):
            return NotImplemented
        return self.key == other.key or self.same_set(other)

    def __hash__(self):
        # Hash only on shape: semantically equal polyhedra may differ in key.
        return hash((self.n, self.k))

    def __repr__(self):
        return f"Polyhedron(n={self.n}, k={self.k}, {len(self.halfspaces)} halfspaces)"

    def contains_point(self, p: Point) -> bool:
        if p.n != self.n or p.k != self.k:
            raise DimensionMismatch("point shape does not match polyhedron")
        return all(p.pair(h.u) >= h.gamma for h in self.halfspaces)

    def contains(self, other: "Polyhedron") -> bool:
        """Set containment: every point of ``other`` lies in ``self``."""
        if (self.n, self.k) != (other.n, other.k):
            raise DimensionMismatch("polyhedra live in different spaces")
        if other.is_empty:
            return True
        if self.is_empty:
            return False
        w = other.witness
        if not self.contains_point(w):
            return False
        sup_key = tuple((h.u, h.gamma.entries) for h in self.halfspaces)
        sub_key = tuple((h.u, h.gamma.entries) for h in other.halfspaces)
        return _contains_cached(self.n, self.k, sup_key, sub_key)

    def same_set(self, other: "Polyhedron") -> bool:
        if self.key == other.key:
            return True
        return self.contains(other) and other.contains(self)

    def intersect(self, other: "Polyhedron") -> "Polyhedron":
        if (self.n, self.k) != (other.n, other.k):
            raise DimensionMismatch("polyhedra live in different spaces")
        return Polyhedron(self.n, self.k, self.halfspaces + other.halfspaces)

    # -- faces ------------------------------------------------------------

    def _face_system(self, tight):
        sys = []
        for i, h in enumerate(self.halfspaces):
            rel = EQ if i in tight else GE
            sys.append((h.u, h.gamma.entries, rel))
        return sys

    def _canonical_face(self, tight: frozenset):
        """Maximal tight set and a relative-interior point, or None if empty."""
        ok, wit = solve_lex_system(self.n, self.k, self._face_system(tight))
        if not ok:
            return None
        w0 = Point(wit)
        implied = set(tight)
        interior = [wit]
        for i, h in enumerate(self.halfspaces):
            if i in tight:
                continue
            if w0.pair(h.u) != h.gamma:
                continue
            strict = (h.u, h.gamma.entries, GT)
            ok2, wit2 = solve_lex_system(self.n, self.k, self._face_system(tight) + [strict])
            if ok2:
                interior.append(wit2)
            else:
                implied.add(i)
        if len(interior) == 1:
            return frozenset(implied), w0
        m = Fraction(1, len(interior))
        avg = tuple(
            tuple(m * sum(w[r][c] for w in interior) for c in range(self.k))
            for r in range(self.n)
        )
        return frozenset(implied), Point(avg)

    @cached_property
    def _face_data(self):
        if self.is_empty:
            return {}, {}, frozenset()
        top = self._canonical_face(frozenset())
        assert top is not None
        found = {top[0]: top[1]}
        queue = [top[0]]
        while queue:
            t = queue.pop()
            for i in range(len(self.halfspaces)):
                if i in t:
                    continue
                res = self._canonical_face(t | {i})
                if res is None:
                    continue
                t2, p2 = res
                if t2 not in found:
                    found[t2] = p2
                    queue.append(t2)
        dims: dict[frozenset, int] = {}
        for t in sorted(found, key=lambda s: -len(s)):
            subs = [dims[s] for s in dims if s > t]
            dims[t] = max(subs) + 1 if subs else 0
        return found, dims, top[0]

    def faces(self) -> list[Face]:
        """All nonempty faces, canonicalized; [] for the empty polyhedron."""
        found, dims, _ = self._face_data
        out = [Face(t, p, dims[t]) for t, p in found.items()]
        out.sort(key=lambda f: (f.dim, sorted(f.tight)))
        return out

    def face_polyhedron(self, tight) -> "Polyhedron":
        hss = list(self.halfspaces)
        for i in tight:
            hss.append(self.halfspaces[i].flip())
        return Polyhedron(self.n, self.k, hss)

    def dimension(self) -> int:
        """Flag rank: the longest chain of nonempty faces below the top face."""
        if self.is_empty:
            raise EmptyPolyhedron("empty")
        found, dims, top = self._face_data
        return dims[top]

    # -- lineality, quotients, vertices ------------------------------------

    @cached_property
    def _lineality(self):
        us = [h.u for h in self.halfspaces if any(h.u)]
        vperp = linalg.saturate_rowspace(us, self.n)
        vz = linalg.kernel_basis(us, self.n)
        return [tuple(b) for b in vperp], [tuple(b) for b in vz]

    def lineality(self) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
        """(basis of V_perp in M, basis of the lineality lattice V_Z in N)."""
        return self._lineality

    @property
    def is_pointed(self) -> bool:
        return not self._lineality[1]

    def pointed_quotient(self) -> tuple["Polyhedron", "QuotientMap"]:
        """Quotient by the largest linear subspace, in lattice coordinates."""
        us = [h.u for h in self.halfspaces if any(h.u)]
        n = self.n
        if not self._lineality[1]:
            ident = linalg.identity_int(n)
            qmap = QuotientMap(
                n=n,
                q=n,
                proj=tuple(tuple(r) for r in ident),
                section=tuple(tuple(r) for r in ident),
                lineality=(),
            )
            return self, qmap
        if us:
            _, v, r = linalg.column_hermite(us)
        else:
            v, r = linalg.identity_int(n), 0
        v_inv = linalg.int_inverse(v)
        proj = tuple(tuple(v_inv[row]) for row in range(r))
        section = tuple(tuple(v[i][c] for c in range(r)) for i in range(n))
        qmap = QuotientMap(
            n=n,
            q=r,
            proj=proj,
            section=section,
            lineality=tuple(self._lineality[1]),
        )
        hss = []
        for h in self.halfspaces:
            if not any(h.u):
                hss.append(Halfspace((0,) * r if r else (), h.gamma))
                continue
            u2 = qmap.descend(h.u)
            if u2 is None:
                raise GeometryError("constraint direction not orthogonal to lineality")
            hss.append(Halfspace(u2, h.gamma))
        return Polyhedron(r, self.k, hss), qmap

    @cached_property
    def _vertex_data(self):
        if self.is_empty:
            raise EmptyPolyhedron("empty")
        if not self.is_pointed:
            raise HasLineality("has lineality")
        found, dims, _ = self._face_data
        full_rank = {}
        for t, p in found.items():
            us = [self.halfspaces[i].u for i in t]
            if us and linalg.rank(us) == self.n:
                u_rows = us
                g_rows = [self.halfspaces[i].gamma.entries for i in t]
                sol = linalg.solve_unique(u_rows, g_rows)
                if sol is None:
                    raise GeometryError("vertex system inconsistent")
                full_rank[t] = Point(sol)
        dim0 = {t for t, d in dims.items() if d == 0}
        if dim0 != set(full_rank):
            raise GeometryError(
                "flag-rank-0 faces diverge from full-rank tight sets"
            )
        return sorted(full_rank.values(), key=lambda p: p.rows)

    def vertices(self) -> list[Point]:
        """The 0-dimensional faces of a pointed nonempty polyhedron."""
        return list(self._vertex_data)


@dataclass(frozen=True)
class QuotientMap:
    """Lattice data identifying N/V_Z with Z^q (all matrices integral)."""

    n: int
    q: int
    proj: tuple[tuple[int, ...], ...]
    section: tuple[tuple[int, ...], ...]
    lineality: tuple[tuple[int, ...], ...]

    def descend(self, u) -> tuple[int, ...] | None:
        """Rewrite u in quotient-dual coordinates; None if u does not kill V_Z."""
        for d in self.lineality:
            if linalg.dot_int(u, d) != 0:
                return None
        # u' = (V^T u) restricted to the first q coordinates
        return tuple(
            sum(self.section[i][c] * u[i] for i in range(self.n)) for c in range(self.q)
        )

    def project_point(self, p: Point) -> Point:
        rows = [
            [sum(Fraction(self.proj[r][i]) * p.rows[i][c] for i in range(self.n))
             for c in range(p.k)]
            for r in range(self.q)
        ]
        return Point(rows)

    def lift_point(self, p: Point) -> Point:
        rows = [
            [sum(Fraction(self.section[i][c]) * p.rows[c][j] for c in range(self.q))
             for j in range(p.k)]
            for i in range(self.n)
        ]
        return Point(rows)


def feasible(system) -> tuple[bool, Point | None]:
    """Decide a mixed system of (Halfspace, rel) with rel in {">=", "=", ">"}."""
    system = list(system)
    if not system:
        raise ValueError("empty system has no ambient dimensions")
    n, k = system[0][0].n, system[0][0].k
    cons = []
    for hs, rel in system:
        if hs.n != n or hs.k != k:
            raise DimensionMismatch("constraints share no common (n, k)")
        cons.append((hs.u, hs.gamma.entries, rel))
    ok, wit = solve_lex_system(n, k, cons)
    return (True, Point(wit)) if ok else (False, None)


def enumerate_faces(p: Polyhedron) -> list[Face]:
    return p.faces()


def dimension(p: Polyhedron) -> int:
    return p.dimension()


def vertices(p: Polyhedron) -> list[Point]:
    return p.vertices()


def lineality(p: Polyhedron):
    return p.lineality()


def pointed_quotient(p: Polyhedron):
    return p.pointed_quotient()


class PolyComplex:
    """A finite collection of cells, with containment incidences."""

    def __init__(self, n: int, k: int, cells=()):
        self.n = int(n)
        self.k = int(k)
        cs = []
        for c in cells:
            if not isinstance(c, Polyhedron):
                c = Polyhedron(self.n, self.k, c)
            if (c.n, c.k) != (self.n, self.k):
                raise DimensionMismatch("cell shape does not match complex")
            cs.append(c)
        self.cells = tuple(cs)

    def __repr__(self):
        return f"PolyComplex(n={self.n}, k={self.k}, {len(self.cells)} cells)"

    @cached_property
    def incidence(self) -> tuple[tuple[int, int], ...]:
        """Pairs (i, j), i != j, with cell i contained in cell j."""
        out = []
        for i, a in enumerate(self.cells):
            for j, b in enumerate(self.cells):
                if i != j and b.contains(a):
                    out.append((i, j))
        return tuple(out)

    def vertex_cells(self) -> list[tuple[int, Point]]:
        """(index, point) for each 0-dimensional cell, sorted by point."""
        out = []
        for i, c in enumerate(self.cells):
            if not c.is_empty and c.dimension() == 0:
                pts = c.vertices() if c.is_pointed else None
                if pts is None or len(pts) != 1:
                    raise GeometryError(f"0-dimensional cell {i} is not a single point")
                out.append((i, pts[0]))
        out.sort(key=lambda t: t[1].rows)
        return out

    def cells_containing(self, p: Point) -> list[int]:
        return [i for i, c in enumerate(self.cells) if not c.is_empty and c.contains_point(p)]


def validate_complex(c: PolyComplex) -> tuple[bool, list[str]]:
    """Check the complex axioms; returns (ok, violations)."""
    violations: list[str] = []
    cells = c.cells
    for i, cell in enumerate(cells):
        if cell.is_empty:
            violations.append(f"cell {i} is empty")
    live = [i for i, cell in enumerate(cells) if not cell.is_empty]
    for pos, i in enumerate(live):
        for j in live[pos + 1 :]:
            if cells[i].same_set(cells[j]):
                violations.append(f"cells {i} and {j} are the same set")

    def find(target: Polyhedron):
        for i in live:
            if cells[i].same_set(target):
                return i
        return None

    for i in live:
        for face in cells[i].faces():
            fp = cells[i].face_polyhedron(face.tight)
            if find(fp) is None:
                violations.append(
                    f"face of cell {i} (tight {sorted(face.tight)}) missing from complex"
                )
    for pos, i in enumerate(live):
        for j in live[pos + 1 :]:
            inter = cells[i].intersect(cells[j])
            if inter.is_empty:
                continue
            if find(inter) is None:
                violations.append(f"intersection of cells {i} and {j} not in complex")
    return (not violations), violations
