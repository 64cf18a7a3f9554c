"""JSON wire formats.  All rationals travel as canonical "p/q" strings.

Integers are accepted as input shorthand; emission is always gcd-reduced
"p/q" with positive denominator, and list orders are deterministic, so
emitted documents are byte-stable and round-trip exactly.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .admissible import AdmissibleCone, AdmissibleConstraint, AdmissibleFan
from .algebra import FormalLaurent, GeneratorSet, ValuedMonomial
from .errors import InputError
from .fans import RationalFan
from .ordered import LexVec
from .polyhedra import Halfspace, Point, PolyComplex, Polyhedron
from .report import FiberReport

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(x, where: str = "value") -> Fraction:
    if isinstance(x, bool):
        raise InputError(f"{where}: expected a rational, got a boolean")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str) and _RATIONAL_RE.match(x.strip()):
        return Fraction(x.strip())
    raise InputError(f'{where}: expected an integer or "p/q" string, got {x!r}')


def format_rational(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def parse_int(x, where: str = "value") -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{where}: expected an integer, got {x!r}")
    return x


def _parse_list(x, where: str) -> list:
    if not isinstance(x, list):
        raise InputError(f"{where}: expected a list, got {type(x).__name__}")
    return x


def lexvec_from_json(x, k: int, where: str = "gamma") -> LexVec:
    entries = _parse_list(x, where)
    if len(entries) != k:
        raise InputError(f"{where}: expected {k} entries, got {len(entries)}")
    return LexVec(parse_rational(e, f"{where}[{i}]") for i, e in enumerate(entries))


def lexvec_to_json(v: LexVec) -> list[str]:
    return [format_rational(e) for e in v.entries]


def point_from_json(x, n: int, k: int, where: str = "point") -> Point:
    rows = _parse_list(x, where)
    if len(rows) != n:
        raise InputError(f"{where}: expected {n} rows, got {len(rows)}")
    out = []
    for i, row in enumerate(rows):
        row = _parse_list(row, f"{where}[{i}]")
        if len(row) != k:
            raise InputError(f"{where}[{i}]: expected {k} entries, got {len(row)}")
        out.append([parse_rational(e, f"{where}[{i}][{j}]") for j, e in enumerate(row)])
    return Point(out)


def point_to_json(p: Point) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in p.rows]


def halfspace_from_json(x, n: int, k: int, where: str = "halfspace") -> Halfspace:
    if not isinstance(x, dict):
        raise InputError(f"{where}: expected an object with 'u' and 'gamma'")
    u = _parse_list(x.get("u"), f"{where}.u")
    if len(u) != n:
        raise InputError(f"{where}.u: expected {n} entries, got {len(u)}")
    u = [parse_int(c, f"{where}.u[{i}]") for i, c in enumerate(u)]
    gamma = lexvec_from_json(x.get("gamma"), k, f"{where}.gamma")
    return Halfspace(u, gamma)


def halfspace_to_json(h: Halfspace) -> dict:
    return {"u": list(h.u), "gamma": lexvec_to_json(h.gamma)}


def _shape(doc: dict, where: str = "document") -> tuple[int, int]:
    n = parse_int(doc.get("n"), f"{where}.n")
    k = parse_int(doc.get("k"), f"{where}.k")
    if n < 0 or k < 0:
        raise InputError(f"{where}: n and k must be nonnegative")
    return n, k


def polyhedron_from_json(doc: dict) -> Polyhedron:
    n, k = _shape(doc)
    hss = _parse_list(doc.get("halfspaces"), "halfspaces")
    return Polyhedron(
        n, k, [halfspace_from_json(h, n, k, f"halfspaces[{i}]") for i, h in enumerate(hss)]
    )


def polyhedron_to_json(p: Polyhedron) -> dict:
    return {
        "n": p.n,
        "k": p.k,
        "halfspaces": [halfspace_to_json(h) for h in p.halfspaces],
    }


def complex_from_json(doc: dict) -> PolyComplex:
    n, k = _shape(doc)
    cells = _parse_list(doc.get("cells"), "cells")
    out = []
    for i, cell in enumerate(cells):
        hss = _parse_list(cell, f"cells[{i}]")
        out.append(
            Polyhedron(
                n,
                k,
                [halfspace_from_json(h, n, k, f"cells[{i}][{j}]") for j, h in enumerate(hss)],
            )
        )
    return PolyComplex(n, k, out)


def complex_to_json(c: PolyComplex, incidence: bool = True) -> dict:
    doc = {
        "n": c.n,
        "k": c.k,
        "cells": [[halfspace_to_json(h) for h in cell.halfspaces] for cell in c.cells],
    }
    if incidence:
        doc["incidence"] = [list(pair) for pair in c.incidence]
    return doc


def fan_from_json(doc: dict) -> AdmissibleFan:
    n, k = _shape(doc)
    cones = _parse_list(doc.get("cones"), "cones")
    out = []
    for i, cone in enumerate(cones):
        cs = _parse_list(cone, f"cones[{i}]")
        constraints = []
        for j, c in enumerate(cs):
            h = halfspace_from_json(c, n, k, f"cones[{i}][{j}]")
            constraints.append(AdmissibleConstraint(h.u, h.gamma))
        out.append(AdmissibleCone(n, k, constraints))
    return AdmissibleFan(n, k, out)


def fan_expected_rec(doc: dict) -> dict[int, PolyComplex]:
    """Optional golden data: per-level recession complexes keyed by level."""
    raw = doc.get("expected_rec")
    if raw is None:
        return {}
    if not isinstance(raw, dict):
        raise InputError("expected_rec: expected an object keyed by level")
    n, k = _shape(doc)
    out = {}
    for key, cdoc in sorted(raw.items()):
        try:
            level = int(key)
        except (TypeError, ValueError):
            raise InputError(f"expected_rec.{key}: level keys must be integers") from None
        if not isinstance(cdoc, dict):
            raise InputError(f"expected_rec.{key}: expected a complex document")
        merged = {"n": cdoc.get("n", n), "k": cdoc.get("k", k), "cells": cdoc.get("cells")}
        out[level] = complex_from_json(merged)
    return out


def complex_expected_incidence(doc: dict) -> list[tuple[int, int]] | None:
    raw = doc.get("incidence")
    if raw is None:
        return None
    pairs = _parse_list(raw, "incidence")
    out = []
    for i, pair in enumerate(pairs):
        pair = _parse_list(pair, f"incidence[{i}]")
        if len(pair) != 2:
            raise InputError(f"incidence[{i}]: expected a pair of cell indices")
        out.append((parse_int(pair[0], f"incidence[{i}][0]"), parse_int(pair[1], f"incidence[{i}][1]")))
    return sorted(out)


def fan_to_json(f: AdmissibleFan) -> dict:
    return {
        "n": f.n,
        "k": f.k,
        "cones": [
            [{"u": list(c.u), "gamma": lexvec_to_json(c.gamma)} for c in cone.constraints]
            for cone in f.cones
        ],
    }


def laurent_from_json(doc: dict, n: int | None = None, k: int | None = None) -> FormalLaurent:
    terms = _parse_list(doc.get("terms"), "terms")
    out = []
    for i, t in enumerate(terms):
        if not isinstance(t, dict):
            raise InputError(f"terms[{i}]: expected an object with 'u' and 'val'")
        u = _parse_list(t.get("u"), f"terms[{i}].u")
        u = [parse_int(c, f"terms[{i}].u[{j}]") for j, c in enumerate(u)]
        if n is not None and len(u) != n:
            raise InputError(f"terms[{i}].u: expected {n} entries, got {len(u)}")
        val = _parse_list(t.get("val"), f"terms[{i}].val")
        if k is not None and len(val) != k:
            raise InputError(f"terms[{i}].val: expected {k} entries, got {len(val)}")
        val = LexVec(parse_rational(e, f"terms[{i}].val[{j}]") for j, e in enumerate(val))
        out.append(ValuedMonomial(u, val))
    return FormalLaurent(out)


def laurent_to_json(f: FormalLaurent) -> dict:
    return {
        "terms": [{"u": list(t.u), "val": lexvec_to_json(t.val)} for t in f.terms]
    }


def rational_fan_to_json(f: RationalFan) -> dict:
    cones = sorted(
        ([list(r) for r in sorted(c.rays)] for c in f.cones),
        key=lambda rays: (len(rays), rays),
    )
    return {"q": f.q, "cones_by_rays": cones}


def generators_to_json(g: GeneratorSet) -> dict:
    return {
        "generators": [
            {"u": list(u), "val": lexvec_to_json(val)} for u, val in g.pairs
        ],
        "by_vertex": [
            {
                "vertex": point_to_json(v),
                "generators": [
                    {"u": list(u), "val": lexvec_to_json(val)} for u, val in gens
                ],
            }
            for v, gens in g.by_vertex
        ],
    }


def fiber_report_to_json(r: FiberReport) -> dict:
    levels = []
    for lv in r.levels:
        levels.append(
            {
                "level": lv.level,
                "component_count": lv.component_count,
                "vertices": [point_to_json(p) for p in lv.vertices],
                "adjacency": [list(e) for e in lv.adjacency],
                "cells_by_dim": {
                    str(d): lv.cell_dims.count(d) for d in sorted(set(lv.cell_dims))
                },
                "components": [
                    {
                        "vertex": point_to_json(c.vertex),
                        "star_rays": [list(x) for x in c.star.all_rays()],
                        "hilbert": [
                            {
                                "cone_rays": [list(x) for x in rays],
                                "basis": [list(x) for x in basis],
                            }
                            for rays, basis in c.hilbert
                        ],
                    }
                    for c in lv.components
                ],
            }
        )
    return {
        "n": r.n,
        "k": r.k,
        "levels": levels,
        "generic_fan": rational_fan_to_json(r.generic_fan),
        "generic_complete": r.generic_complete,
    }


def fiber_report_to_text(r: FiberReport) -> str:
    lines = [f"degeneration report: n={r.n}, k={r.k}, levels 0..{r.k}"]
    for lv in r.levels:
        lines.append(f"level {lv.level}: {lv.component_count} component(s)")
        for i, c in enumerate(lv.components):
            coords = "; ".join(",".join(row) for row in point_to_json(c.vertex))
            lines.append(f"  vertex {i}: [{coords}]")
            for rays, basis in c.hilbert:
                rtxt = " ".join(str(list(x)) for x in rays) or "origin"
                btxt = " ".join(str(list(x)) for x in basis)
                lines.append(f"    star cone rays {rtxt}: dual monoid basis {btxt}")
        if lv.adjacency:
            adj = ", ".join(f"{i}-{j}" for i, j in lv.adjacency)
            lines.append(f"  adjacency: {adj}")
        else:
            lines.append("  adjacency: none")
    lines.append(
        f"generic fan: {len(r.generic_fan.cones)} cones, "
        + ("complete" if r.generic_complete else "not complete")
    )
    return "\n".join(lines) + "\n"


def detect_kind(doc) -> str:
    if not isinstance(doc, dict):
        raise InputError("top level: expected a JSON object")
    for key, kind in (
        ("halfspaces", "polyhedron"),
        ("cells", "complex"),
        ("cones", "fan"),
        ("terms", "laurent"),
    ):
        if key in doc:
            return kind
    raise InputError(
        "top level: expected one of 'halfspaces', 'cells', 'cones', 'terms'"
    )


def load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
