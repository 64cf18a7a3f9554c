"""Command-line surface: parse JSON inputs, dispatch, emit deterministic docs.

Exit codes: 0 success, 1 validation failure, 2 malformed input or usage.
"""

from __future__ import annotations

import argparse
import sys

from . import io as lio
from . import svg
from .admissible import cone_over_cell, cone_over_complex, validate_fan
from .algebra import ValuedMonomial, is_member, tilted_generators, weight
from .errors import InputError, InvalidComplex, InvalidFan, LexfanError
from .fans import star_fan
from .io import dumps, format_rational, parse_rational
from .polyhedra import Point, validate_complex
from .report import fiber_report


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path: str, expected: tuple[str, ...]):
    doc = lio.load_document(path)
    kind = lio.detect_kind(doc)
    if kind not in expected:
        raise InputError(f"{path}: expected {' or '.join(expected)} document, got {kind}")
    if kind == "polyhedron":
        return kind, lio.polyhedron_from_json(doc)
    if kind == "complex":
        return kind, lio.complex_from_json(doc)
    if kind == "fan":
        return kind, lio.fan_from_json(doc)
    return kind, lio.laurent_from_json(doc)


def _parse_point(text: str, n: int, k: int) -> Point:
    rows = [row for row in text.split(";") if row.strip()]
    if len(rows) != n:
        raise InputError(f"--vertex: expected {n} row(s) separated by ';'")
    out = []
    for row in rows:
        entries = [e.strip() for e in row.split(",")]
        if len(entries) != k:
            raise InputError(f"--vertex: expected {k} entries per row")
        out.append([parse_rational(e, "--vertex") for e in entries])
    return Point(out)


def _cmd_validate(args) -> int:
    doc = lio.load_document(args.input)
    kind = lio.detect_kind(doc)
    if kind == "complex":
        obj = lio.complex_from_json(doc)
        ok, violations = validate_complex(obj)
        expected = lio.complex_expected_incidence(doc)
        if expected is not None and sorted(obj.incidence) != expected:
            ok = False
            violations.append("incidence does not match the document's expected pairs")
    elif kind == "fan":
        obj = lio.fan_from_json(doc)
        ok, violations = validate_fan(obj)
        for level, expected in lio.fan_expected_rec(doc).items():
            got = obj.recession_complex(level)
            matched = len(got.cells) == len(expected.cells) and all(
                any(cell.same_set(other) for other in got.cells)
                for cell in expected.cells
            )
            if not matched:
                ok = False
                violations.append(f"level {level} does not match expected_rec")
    else:
        raise InputError(f"{args.input}: expected complex or fan document, got {kind}")
    if args.format == "machine":
        _emit(args, dumps({"kind": kind, "valid": ok, "violations": violations}))
    else:
        lines = [f"{kind}: {'valid' if ok else 'INVALID'}"]
        lines.extend(f"  {v}" for v in violations)
        _emit(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


def _cmd_recession(args) -> int:
    _, fan = _load(args.input, ("fan",))
    complex_ = fan.recession_complex(args.level)
    _emit(args, dumps(lio.complex_to_json(complex_)))
    return 0


def _cmd_vertices(args) -> int:
    _, poly = _load(args.input, ("polyhedron",))
    pts = poly.vertices()
    if args.format == "machine":
        _emit(args, dumps({"vertices": [lio.point_to_json(p) for p in pts]}))
    else:
        lines = ["; ".join(",".join(format_rational(x) for x in row) for row in p.rows) for p in pts]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_faces(args) -> int:
    _, poly = _load(args.input, ("polyhedron",))
    doc = {
        "faces": [
            {
                "tight": sorted(f.tight),
                "dim": f.dim,
                "point": lio.point_to_json(f.point),
            }
            for f in poly.faces()
        ]
    }
    _emit(args, dumps(doc))
    return 0


def _cmd_star(args) -> int:
    _, complex_ = _load(args.input, ("complex",))
    w = _parse_point(args.vertex, complex_.n, complex_.k)
    fan = star_fan(complex_, w)
    _emit(args, dumps(lio.rational_fan_to_json(fan)))
    return 0


def _cmd_fiber_report(args) -> int:
    _, fan = _load(args.input, ("fan",))
    rep = fiber_report(fan)
    if args.format == "machine":
        _emit(args, dumps(lio.fiber_report_to_json(rep)))
    else:
        _emit(args, lio.fiber_report_to_text(rep))
    return 0


def _cmd_weight(args) -> int:
    _, poly = _load(args.input, ("polyhedron",))
    _, laurent = _load(args.laurent, ("laurent",))
    w = weight(poly, laurent)
    if args.format == "machine":
        _emit(args, dumps({"weight": lio.lexvec_to_json(w)}))
    else:
        _emit(args, ",".join(format_rational(x) for x in w.entries) + "\n")
    return 0


def _cmd_member(args) -> int:
    _, poly = _load(args.input, ("polyhedron",))
    u = []
    for part in args.u.split(","):
        part = part.strip()
        try:
            u.append(int(part))
        except ValueError:
            raise InputError(f"--u: expected integers, got {part!r}") from None
    if len(u) != poly.n:
        raise InputError(f"--u: expected {poly.n} entries")
    val_entries = [parse_rational(e.strip(), "--val") for e in args.val.split(",")]
    if len(val_entries) != poly.k:
        raise InputError(f"--val: expected {poly.k} entries")
    verdict = is_member(poly, ValuedMonomial(u, val_entries))
    if args.format == "machine":
        _emit(args, dumps({"member": verdict}))
    else:
        _emit(args, ("true" if verdict else "false") + "\n")
    return 0


def _cmd_generators(args) -> int:
    _, poly = _load(args.input, ("polyhedron",))
    gens = tilted_generators(poly)
    _emit(args, dumps(lio.generators_to_json(gens)))
    return 0


def _cmd_cone_over(args) -> int:
    kind, obj = _load(args.input, ("complex", "polyhedron"))
    if kind == "complex":
        fan = cone_over_complex(obj)
    else:
        cone = cone_over_cell(obj)
        from .admissible import AdmissibleFan

        fan = AdmissibleFan(obj.n, obj.k, [cone] + cone.formal_faces())
    _emit(args, dumps(lio.fan_to_json(fan)))
    return 0


def _cmd_plot(args) -> int:
    kind, obj = _load(args.input, ("complex", "fan"))
    _emit(args, svg.plot(obj, level=args.level))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexfan",
        description="Polyhedral geometry over lexicographically ordered value groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("input", help="input JSON document")
        p.add_argument("--output", help="write to this path instead of stdout")
        p.add_argument(
            "--format", choices=("text", "machine"), default="text",
            help="report encoding (default text)",
        )
        p.set_defaults(func=func)
        return p

    add("validate", _cmd_validate, help="check complex or fan axioms")
    p = add("recession", _cmd_recession, help="slice a fan at a tower level")
    p.add_argument("--level", type=int, required=True)
    add("vertices", _cmd_vertices, help="vertices of a pointed polyhedron")
    add("faces", _cmd_faces, help="canonical nonempty faces of a polyhedron")
    p = add("star", _cmd_star, help="star fan of a complex vertex")
    p.add_argument("--vertex", required=True, help="rows ';'-separated, entries ','-separated")
    add("fiber-report", _cmd_fiber_report, help="full degeneration report of a fan")
    p = add("weight", _cmd_weight, help="weight of a formal Laurent element on a polyhedron")
    p.add_argument("laurent", help="formal Laurent JSON document")
    p = add("member", _cmd_member, help="tilted-algebra membership of one monomial")
    p.add_argument("--u", required=True, help="exponent, comma-separated integers")
    p.add_argument("--val", required=True, help="coefficient valuation, comma-separated rationals")
    add("generators", _cmd_generators, help="tilted-algebra generator set")
    add("cone-over", _cmd_cone_over, help="admissible fan over a complex or cell")
    p = add("plot", _cmd_plot, help="SVG rendering of a complex or fan slice")
    p.add_argument("--level", type=int, default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidComplex, InvalidFan) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LexfanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
