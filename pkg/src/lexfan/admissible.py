"""Formal admissible cones and fans over N x E, and their recession slices.

A cone here is a finite system of pairs (u, gamma) read as
<u, v> + phi(gamma) >= 0 over all order-preserving multipliers phi.  No
geometry is computed upstairs: all semantics route through the k+1 recession
slices phi = epsilon_i, which substitute <u, v> >= -epsilon_i(gamma).  Two
formal cones are the same exactly when all their slices agree as point sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from . import linalg
from .errors import DimensionMismatch, InvalidComplex, InvalidFan, LexfanError
from .fans import Cone, RationalFan
from .ordered import LexVec, truncate
from .polyhedra import Halfspace, PolyComplex, Polyhedron, validate_complex


@dataclass(frozen=True)
class AdmissibleConstraint:
    """The formal halfspace <u, v> + phi(gamma) >= 0."""

    u: tuple[int, ...]
    gamma: LexVec

    def __init__(self, u, gamma):
        object.__setattr__(self, "u", tuple(int(x) for x in u))
        gamma = gamma if isinstance(gamma, LexVec) else LexVec(gamma)
        object.__setattr__(self, "gamma", gamma)

    def flip(self) -> "AdmissibleConstraint":
        return AdmissibleConstraint(tuple(-x for x in self.u), -self.gamma)


def _normalize_constraints(constraints, k: int):
    """Primitive u; same-u pairs keep the minimal gamma (strongest at every
    slice, since the truncations are order-preserving); trivially-true zero
    constraints dropped, falsifiable ones kept."""
    zero = LexVec.zero(k)
    best: dict[tuple[int, ...], LexVec] = {}
    zero_u: list[AdmissibleConstraint] = []
    for c in constraints:
        if not any(c.u):
            if c.gamma < zero:
                zero_u.append(AdmissibleConstraint(c.u, c.gamma))
            continue
        g = 0
        for x in c.u:
            g = gcd(g, abs(x))
        u = tuple(x // g for x in c.u)
        gamma = c.gamma if g == 1 else c.gamma.scale(Fraction(1, g))
        cur = best.get(u)
        if cur is None or gamma < cur:
            best[u] = gamma
    out = [AdmissibleConstraint(u, g) for u, g in best.items()]
    seen = set()
    for c in zero_u:
        key = (c.u, c.gamma.entries)
        if key not in seen:
            seen.add(key)
            out.append(c)
    out.sort(key=lambda c: (c.u, c.gamma.entries))
    return tuple(out)


class AdmissibleCone:
    """A formal halfspace system in N x E."""

    def __init__(self, n: int, k: int, constraints=()):
        self.n = int(n)
        self.k = int(k)
        cs = []
        for c in constraints:
            if not isinstance(c, AdmissibleConstraint):
                c = AdmissibleConstraint(*c)
            if len(c.u) != self.n or c.gamma.k != self.k:
                raise DimensionMismatch("constraint shape does not match cone")
            cs.append(c)
        self.constraints = _normalize_constraints(cs, self.k)
        self.key = (self.n, self.k, tuple((c.u, c.gamma.entries) for c in self.constraints))

    def recession(self, level: int) -> Polyhedron:
        """Slice at phi = epsilon_level: <u, v> >= -epsilon_level(gamma)."""
        if not 0 <= level <= self.k:
            raise LexfanError(f"level {level} out of range 0..{self.k}")
        hss = [
            Halfspace(c.u, -truncate(c.gamma, level)) for c in self.constraints
        ]
        return Polyhedron(self.n, self.k, hss)

    @cached_property
    def slices(self) -> tuple[Polyhedron, ...]:
        return tuple(self.recession(i) for i in range(self.k + 1))

    @cached_property
    def slice_keys(self):
        return tuple(s.key for s in self.slices)

    def is_admissible(self) -> bool:
        """No line of N x {0}: the constraint directions span M rationally."""
        us = [list(c.u) for c in self.constraints if any(c.u)]
        return linalg.rank(us) == self.n if us else self.n == 0

    def tighten(self, subset) -> "AdmissibleCone":
        cs = list(self.constraints)
        for i in subset:
            cs.append(self.constraints[i].flip())
        return AdmissibleCone(self.n, self.k, cs)

    @cached_property
    def _pure_inequality_indices(self) -> tuple[int, ...]:
        keyset = {(c.u, c.gamma.entries) for c in self.constraints}
        out = []
        for i, c in enumerate(self.constraints):
            f = c.flip()
            if (f.u, f.gamma.entries) not in keyset:
                out.append(i)
        return tuple(out)

    def formal_faces(self) -> list["AdmissibleCone"]:
        """All tight-subset replacements, deduplicated syntactically."""
        pure = self._pure_inequality_indices
        seen = {}
        for r in range(len(pure) + 1):
            for subset in itertools.combinations(pure, r):
                face = self.tighten(subset)
                seen.setdefault(face.key, face)
        return list(seen.values())

    def same_set(self, other: "AdmissibleCone") -> bool:
        """Identification rule: all k+1 recession slices agree as point sets."""
        if (self.n, self.k) != (other.n, other.k):
            return False
        if self.key == other.key:
            return True
        for a, b in zip(self.slices, other.slices):
            if a.key != b.key and not a.same_set(b):
                return False
        return True

    def __repr__(self):
        return f"AdmissibleCone(n={self.n}, k={self.k}, {len(self.constraints)} constraints)"


class AdmissibleFan:
    """A finite collection of formal cones, closed under formal faces."""

    def __init__(self, n: int, k: int, cones=()):
        self.n = int(n)
        self.k = int(k)
        out: list[AdmissibleCone] = []
        for c in cones:
            if not isinstance(c, AdmissibleCone):
                c = AdmissibleCone(self.n, self.k, c)
            if (c.n, c.k) != (self.n, self.k):
                raise DimensionMismatch("cone shape does not match fan")
            if not any(c.same_set(have) for have in out):
                out.append(c)
        self.cones = tuple(out)

    def __repr__(self):
        return f"AdmissibleFan(n={self.n}, k={self.k}, {len(self.cones)} cones)"

    def contains_cone(self, cone: AdmissibleCone) -> bool:
        return any(cone.same_set(have) for have in self.cones)

    def recession_complex(self, level: int) -> PolyComplex:
        cells: list[Polyhedron] = []
        for c in self.cones:
            cell = c.recession(level)
            if cell.is_empty:
                continue
            if not any(cell.key == have.key or cell.same_set(have) for have in cells):
                cells.append(cell)
        return PolyComplex(self.n, self.k, cells)


def cone_over_cell(p: Polyhedron) -> AdmissibleCone:
    """Negate the constants so the slice at the identity recovers the cell."""
    return AdmissibleCone(
        p.n, p.k, [AdmissibleConstraint(h.u, -h.gamma) for h in p.halfspaces]
    )


def cone_over_complex(c: PolyComplex) -> AdmissibleFan:
    """Cones over all cells, closed under formal faces."""
    ok, violations = validate_complex(c)
    if not ok:
        raise InvalidComplex(violations)
    cones: list[AdmissibleCone] = []
    for cell in c.cells:
        base = cone_over_cell(cell)
        cones.append(base)
        cones.extend(base.formal_faces())
    return AdmissibleFan(c.n, c.k, cones)


def recession(obj, level: int):
    """Slice a cone or fan at phi = epsilon_level."""
    if isinstance(obj, AdmissibleCone):
        return obj.recession(level)
    if isinstance(obj, AdmissibleFan):
        if not 0 <= level <= obj.k:
            raise LexfanError(f"level {level} out of range 0..{obj.k}")
        return obj.recession_complex(level)
    raise TypeError(f"cannot take recession of {type(obj).__name__}")


def is_admissible(sigma: AdmissibleCone) -> bool:
    return sigma.is_admissible()


def validate_fan(sigma: AdmissibleFan) -> tuple[bool, list[str]]:
    """Face closure, admissibility, per-level complex axioms, pointed top fan."""
    violations: list[str] = []
    for i, cone in enumerate(sigma.cones):
        if not cone.is_admissible():
            violations.append(f"cone {i} is not admissible (directions do not span)")
    for i, cone in enumerate(sigma.cones):
        for face in cone.formal_faces():
            if not sigma.contains_cone(face):
                violations.append(f"formal face of cone {i} missing from fan")
    for level in range(sigma.k + 1):
        complex_ = sigma.recession_complex(level)
        ok, errs = validate_complex(complex_)
        if not ok:
            violations.extend(f"level {level}: {e}" for e in errs)
    top = sigma.recession_complex(sigma.k)
    for j, cell in enumerate(top.cells):
        if not cell.is_pointed:
            violations.append(f"top-level cell {j} is not pointed")
    if not violations:
        try:
            RationalFan(
                sigma.n,
                [
                    Cone.from_inequalities(sigma.n, [h.u for h in cell.halfspaces])
                    for cell in top.cells
                ],
            )
        except InvalidFan as exc:
            violations.extend(f"top-level fan: {v}" for v in exc.violations)
    return (not violations), violations
