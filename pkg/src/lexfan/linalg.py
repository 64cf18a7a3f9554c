"""Exact linear algebra over Q and Z used by the polyhedral layer.

Everything here works on plain tuples/lists of Fractions or ints; no floating
point.  The integer routines (column Hermite reduction, kernel lattices,
unimodular completions) are what make lattice-exact quotients possible.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Row = tuple[Fraction, ...]


def frac_matrix(rows) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    m = [row[:] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows) -> int:
    if not rows:
        return 0
    return len(rref(frac_matrix(rows))[1])


def solve_unique(a_rows, b_cols) -> list[list[Fraction]] | None:
    """Solve A*X = B exactly where A has full column rank.

    ``a_rows`` is m x n, ``b_cols`` is m x k; returns the unique n x k solution
    or None when the system is inconsistent or the rank is deficient.
    """
    a = frac_matrix(a_rows)
    b = frac_matrix(b_cols)
    n = len(a[0]) if a else 0
    k = len(b[0]) if b else 0
    aug = [a[i] + b[i] for i in range(len(a))]
    m, pivots = rref(aug)
    col_pivots = [p for p in pivots if p < n]
    if len(col_pivots) != n:
        return None
    for i in range(len(m)):
        if all(m[i][c] == 0 for c in range(n)) and any(m[i][n + j] != 0 for j in range(k)):
            return None
    x = [[Fraction(0)] * k for _ in range(n)]
    for r, p in enumerate(pivots):
        if p < n:
            for j in range(k):
                x[p][j] = m[r][n + j]
    return x


def _vec_gcd(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(int(x)))
    return g


def primitive(v) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries (direction kept)."""
    v = tuple(int(x) for x in v)
    g = _vec_gcd(v)
    if g <= 1:
        return v
    return tuple(x // g for x in v)


def rational_to_primitive(v) -> tuple[int, ...]:
    """Scale a rational vector by a positive rational to a primitive integer vector."""
    fv = [Fraction(x) for x in v]
    denom = 1
    for x in fv:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    iv = [int(x * denom) for x in fv]
    return primitive(iv)


def identity_int(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def column_hermite(a_rows) -> tuple[list[list[int]], list[list[int]], int]:
    """Column-reduce an integer matrix by unimodular column operations.

    Returns (H, V, r) with A*V = H, V unimodular, the first r columns of H
    carrying the pivots and the remaining columns identically zero.  The last
    n - r columns of V are therefore a basis of the integer kernel lattice
    {x in Z^n : A x = 0} (which is saturated).
    """
    h = [[int(x) for x in row] for row in a_rows]
    m = len(h)
    n = len(h[0]) if h else 0
    v = identity_int(n)
    col = 0
    for row in range(m):
        if col >= n:
            break
        while True:
            nz = [c for c in range(col, n) if h[row][c] != 0]
            if not nz:
                break
            if len(nz) == 1:
                c = nz[0]
                if c != col:
                    for mat in (h, v):
                        for rr in mat:
                            rr[col], rr[c] = rr[c], rr[col]
                break
            c0 = min(nz, key=lambda c: abs(h[row][c]))
            if c0 != col:
                for mat in (h, v):
                    for rr in mat:
                        rr[col], rr[c0] = rr[c0], rr[col]
            for c in range(col, n):
                if c == col or h[row][c] == 0:
                    continue
                q = h[row][c] // h[row][col]
                if q:
                    for mat in (h, v):
                        for rr in mat:
                            rr[c] -= q * rr[col]
        if h[row][col] != 0:
            if h[row][col] < 0:
                for mat in (h, v):
                    for rr in mat:
                        rr[col] = -rr[col]
            col += 1
    return h, v, col


def kernel_basis(a_rows, n: int | None = None) -> list[tuple[int, ...]]:
    """Basis of the saturated integer kernel lattice of an integer matrix."""
    rows = [list(r) for r in a_rows]
    if n is None:
        if not rows:
            raise ValueError("kernel_basis needs explicit n for an empty matrix")
        n = len(rows[0])
    if not rows:
        return [tuple(row) for row in identity_int(n)]
    _, v, r = column_hermite(rows)
    return [tuple(v[i][c] for i in range(n)) for c in range(r, n)]


def saturate_rowspace(a_rows, n: int | None = None) -> list[tuple[int, ...]]:
    """Basis of (Q-span of the rows) intersected with Z^n, i.e. the saturation."""
    rows = [list(r) for r in a_rows]
    if n is None:
        if not rows:
            raise ValueError("saturate_rowspace needs explicit n for an empty matrix")
        n = len(rows[0])
    ker = kernel_basis(rows, n)
    if not ker:
        return [tuple(row) for row in identity_int(n)]
    return kernel_basis(ker, n)


def int_inverse(v_rows) -> list[list[int]]:
    """Inverse of a unimodular integer matrix (exact, stays integral)."""
    n = len(v_rows)
    sol = solve_unique(v_rows, identity_int(n))
    if sol is None:
        raise ValueError("matrix is singular")
    inv = []
    for row in sol:
        out = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            out.append(int(x))
        inv.append(out)
    return inv


def mat_vec_int(a_rows, v) -> tuple[int, ...]:
    return tuple(sum(a_rows[i][j] * v[j] for j in range(len(v))) for i in range(len(a_rows)))


def dot_int(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))
