"""Deterministic SVG rendering of planar complexes.

Two shapes are supported.  For n=1 with k<=2 the canvas axes are the two lex
coordinates of the value plane (leading coordinate horizontal); bounded
1-cells are drawn as straight chords between their endpoints and unbounded
ones as horizontal rays, which keeps the picture a faithful schematic of the
chain combinatorics.  For n=2 with k=1 the drawing is the honest planar
complex: exact vertices, edges and ray directions, bounded 2-cells filled.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key

from .admissible import AdmissibleFan
from .errors import NotPlottable
from .fans import recession_cone
from .polyhedra import PolyComplex, Polyhedron

WIDTH, HEIGHT = 600.0, 450.0
PAD = 40.0


def _cell_xy(cell_points, n, k):
    out = []
    for p in cell_points:
        if n == 1:
            x = p.rows[0][0]
            y = p.rows[0][1] if k == 2 else Fraction(0)
        else:
            x = p.rows[0][0]
            y = p.rows[1][0]
        out.append((x, y))
    return out


def _ray_direction(cell: Polyhedron, n: int):
    rec = recession_cone(cell)
    rays = rec.rays
    if len(rays) != 1:
        return None
    d = rays[0]
    if n == 1:
        return (Fraction(d[0]), Fraction(0))
    return (Fraction(d[0]), Fraction(d[1]))


def _fmt(x: float) -> str:
    return f"{x:.2f}"


class _Canvas:
    def __init__(self, xs, ys):
        if xs:
            lo_x, hi_x = min(xs), max(xs)
            lo_y, hi_y = min(ys), max(ys)
        else:
            lo_x = lo_y = Fraction(-1)
            hi_x = hi_y = Fraction(1)
        if lo_x == hi_x:
            lo_x, hi_x = lo_x - 1, hi_x + 1
        if lo_y == hi_y:
            lo_y, hi_y = lo_y - 1, hi_y + 1
        span_x = hi_x - lo_x
        span_y = hi_y - lo_y
        self.lo_x = lo_x - span_x / 4
        self.hi_x = hi_x + span_x / 4
        self.lo_y = lo_y - span_y / 4
        self.hi_y = hi_y + span_y / 4

    def to_px(self, x: Fraction, y: Fraction) -> tuple[float, float]:
        sx = (WIDTH - 2 * PAD) / float(self.hi_x - self.lo_x)
        sy = (HEIGHT - 2 * PAD) / float(self.hi_y - self.lo_y)
        px = PAD + float(x - self.lo_x) * sx
        py = HEIGHT - PAD - float(y - self.lo_y) * sy
        return px, py

    def clip_ray(self, x, y, dx, dy):
        """Point where the ray from (x, y) in direction (dx, dy) exits the box."""
        ts = []
        if dx > 0:
            ts.append(Fraction(self.hi_x - x) / dx)
        elif dx < 0:
            ts.append(Fraction(self.lo_x - x) / dx)
        if dy > 0:
            ts.append(Fraction(self.hi_y - y) / dy)
        elif dy < 0:
            ts.append(Fraction(self.lo_y - y) / dy)
        t = min(ts) if ts else Fraction(0)
        return x + t * dx, y + t * dy


def _sorted_polygon(points):
    cx = sum(p[0] for p in points) / len(points)
    cy = sum(p[1] for p in points) / len(points)

    def half(p):
        dx, dy = p[0] - cx, p[1] - cy
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(a, b):
        ha, hb = half(a), half(b)
        if ha != hb:
            return -1 if ha < hb else 1
        ax, ay = a[0] - cx, a[1] - cy
        bx, by = b[0] - cx, b[1] - cy
        cross = ax * by - ay * bx
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    return sorted(points, key=cmp_to_key(cmp))


def render_complex(complex_: PolyComplex) -> str:
    """SVG document for a complex of supported shape; deterministic layout."""
    n, k = complex_.n, complex_.k
    if not ((n == 1 and k <= 2) or (n == 2 and k == 1)):
        raise NotPlottable(f"not plottable: n={n}, k={k}")
    cells = [c for c in complex_.cells if not c.is_empty]
    dims = [c.dimension() for c in cells]
    verts_by_cell = [c.vertices() if c.is_pointed else [] for c in cells]
    all_xy = []
    for pts in verts_by_cell:
        all_xy.extend(_cell_xy(pts, n, k))
    canvas = _Canvas([p[0] for p in all_xy], [p[1] for p in all_xy])

    fills, lines, dots, labels = [], [], [], []
    for cell, dim, pts in sorted(
        zip(cells, dims, verts_by_cell),
        key=lambda t: (t[1], tuple(sorted(p.rows for p in t[2]))),
    ):
        xy = _cell_xy(pts, n, k)
        if dim == 0 and len(xy) == 1:
            px, py = canvas.to_px(*xy[0])
            dots.append(
                f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="4" fill="#1a1a1a" />'
            )
            coords = ", ".join(str(v) for v in (pts[0].rows[0] if n == 1 else (pts[0].rows[0][0], pts[0].rows[1][0])))
            labels.append(
                f'<text x="{_fmt(px + 7)}" y="{_fmt(py - 7)}" font-size="12" '
                f'font-family="monospace" fill="#1a1a1a">({coords})</text>'
            )
        elif dim == 1:
            if len(xy) == 2:
                (x1, y1), (x2, y2) = sorted(xy)
                p1, p2 = canvas.to_px(x1, y1), canvas.to_px(x2, y2)
            elif len(xy) == 1:
                d = _ray_direction(cell, n)
                if d is None:
                    continue
                x2, y2 = canvas.clip_ray(xy[0][0], xy[0][1], d[0], d[1])
                p1, p2 = canvas.to_px(*xy[0]), canvas.to_px(x2, y2)
            else:
                continue
            lines.append(
                f'<line x1="{_fmt(p1[0])}" y1="{_fmt(p1[1])}" '
                f'x2="{_fmt(p2[0])}" y2="{_fmt(p2[1])}" '
                f'stroke="#2255aa" stroke-width="2.5" />'
            )
        elif dim == 2 and n == 2 and len(xy) >= 3:
            bounded = not recession_cone(cell).generators()
            if not bounded:
                continue
            poly = _sorted_polygon(xy)
            pix = [canvas.to_px(x, y) for x, y in poly]
            path = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in pix)
            fills.append(f'<polygon points="{path}" fill="#dce7f5" stroke="none" />')

    axis = []
    if canvas.lo_y <= 0 <= canvas.hi_y:
        a = canvas.to_px(canvas.lo_x, Fraction(0))
        b = canvas.to_px(canvas.hi_x, Fraction(0))
        axis.append(
            f'<line x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" x2="{_fmt(b[0])}" y2="{_fmt(b[1])}" '
            f'stroke="#bbbbbb" stroke-width="1" />'
        )
    if canvas.lo_x <= 0 <= canvas.hi_x:
        a = canvas.to_px(Fraction(0), canvas.lo_y)
        b = canvas.to_px(Fraction(0), canvas.hi_y)
        axis.append(
            f'<line x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" x2="{_fmt(b[0])}" y2="{_fmt(b[1])}" '
            f'stroke="#bbbbbb" stroke-width="1" />'
        )

    body = "\n".join(axis + fills + lines + dots + labels)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(WIDTH)}" '
        f'height="{int(HEIGHT)}" viewBox="0 0 {int(WIDTH)} {int(HEIGHT)}">\n'
        f'<rect width="{int(WIDTH)}" height="{int(HEIGHT)}" fill="white" />\n'
        f"{body}\n</svg>\n"
    )


def plot(obj, level: int | None = None) -> str:
    """Render a complex, or a recession slice of an admissible fan."""
    if isinstance(obj, AdmissibleFan):
        return render_complex(obj.recession_complex(0 if level is None else level))
    if isinstance(obj, PolyComplex):
        return render_complex(obj)
    raise NotPlottable(f"cannot plot {type(obj).__name__}")
