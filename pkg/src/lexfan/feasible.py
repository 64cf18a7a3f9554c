"""Feasibility of lex-linear systems by Fourier-Motzkin elimination.

A system is a finite set of constraints  sum_j c_j * x_j  (>= | > | =)  rhs
where the c_j are rationals, each variable x_j takes values in Q^(k), and the
rhs is a vector of Q^(k) compared lexicographically.  Elimination only ever
adds constraints and rescales by positive rationals, both of which are
order-compatible in Q^(k), so the procedure is sound and complete and yields
an exact witness by back-substitution.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DimensionMismatch, GeometryError

GE, GT, EQ = ">=", ">", "="

# One internal constraint: (coeffs, rhs, strict) meaning sum c_j x_j >= rhs
# (or > rhs when strict), coeffs integer-primitive.
Constraint = tuple[tuple[int, ...], tuple[Fraction, ...], bool]
Witness = tuple[tuple[Fraction, ...], ...]


def _tadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _tscale(q, a):
    return tuple(q * x for x in a)


def _normalize_one(coeffs, rhs, strict) -> Constraint | None:
    """Scale to primitive integer coefficients; None for all-zero coefficients."""
    if all(c == 0 for c in coeffs):
        return None
    denom = 1
    fcs = [Fraction(c) for c in coeffs]
    for c in fcs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ics = [int(c * denom) for c in fcs]
    g = 0
    for c in ics:
        g = gcd(g, abs(c))
    scale = Fraction(denom, g)
    return (
        tuple(c // g for c in ics),
        tuple(Fraction(r) * scale for r in rhs),
        bool(strict),
    )


def _consolidate(cons: list[Constraint], zeros: list[tuple[tuple[Fraction, ...], bool]]):
    """Keep the strongest bound per coefficient vector; returns None if a
    zero-coefficient constraint is already violated."""
    for rhs, strict in zeros:
        origin = tuple(Fraction(0) for _ in rhs)
        if strict:
            if not rhs < origin:
                return None
        elif not rhs <= origin:
            return None
    best: dict[tuple[int, ...], tuple[tuple[Fraction, ...], bool]] = {}
    for coeffs, rhs, strict in cons:
        cur = best.get(coeffs)
        if cur is None or (rhs, strict) > cur:
            best[coeffs] = (rhs, strict)
    return [(c, r, s) for c, (r, s) in best.items()]


def _split_zero(raw) -> tuple[list[Constraint], list[tuple[tuple[Fraction, ...], bool]]]:
    cons, zeros = [], []
    for coeffs, rhs, strict in raw:
        norm = _normalize_one(coeffs, rhs, strict)
        if norm is None:
            zeros.append((tuple(Fraction(r) for r in rhs), bool(strict)))
        else:
            cons.append(norm)
    return cons, zeros


@lru_cache(maxsize=1 << 18)
def _solve(n: int, k: int, system: frozenset[Constraint]) -> Witness | None:
    stack: list[tuple[int, list[Constraint], list[Constraint]]] = []
    cons = list(system)
    for var in reversed(range(n)):
        lowers = [c for c in cons if c[0][var] > 0]
        uppers = [c for c in cons if c[0][var] < 0]
        rest = [c for c in cons if c[0][var] == 0]
        stack.append((var, lowers, uppers))
        raw = list(rest)
        for lc, lr, ls in lowers:
            for uc, ur, us in uppers:
                a = Fraction(-uc[var])
                b = Fraction(lc[var])
                coeffs = tuple(a * x + b * y for x, y in zip(lc, uc))
                rhs = _tadd(_tscale(a, lr), _tscale(b, ur))
                raw.append((coeffs, rhs, ls or us))
        split, zeros = _split_zero(raw)
        cons = _consolidate(split, zeros)
        if cons is None:
            return None
    if cons:
        raise GeometryError("variables remain after elimination")

    zero = tuple(Fraction(0) for _ in range(k))
    one = (Fraction(1),) + (Fraction(0),) * (k - 1) if k else ()
    values: list[tuple[Fraction, ...] | None] = [None] * n
    for var, lowers, uppers in reversed(stack):

        def bound(c: Constraint):
            coeffs, rhs, strict = c
            acc = rhs
            for j, cj in enumerate(coeffs):
                if j != var and cj != 0:
                    acc = _tadd(acc, _tscale(Fraction(-cj), values[j]))
            # dividing by a negative coefficient turns the >= into an upper bound
            return _tscale(Fraction(1, coeffs[var]), acc), strict

        lo = None
        for c in lowers:
            v, s = bound(c)
            if lo is None or (v, s) > lo:
                lo = (v, s)
        up = None
        for c in uppers:
            v, s = bound(c)
            if up is None or v < up[0] or (v == up[0] and s and not up[1]):
                up = (v, s)
        if lo is None and up is None:
            values[var] = zero
        elif up is None:
            values[var] = _tadd(lo[0], one) if lo[1] else lo[0]
        elif lo is None:
            values[var] = _tadd(up[0], _tscale(Fraction(-1), one)) if up[1] else up[0]
        else:
            if lo[0] < up[0]:
                values[var] = _tscale(Fraction(1, 2), _tadd(lo[0], up[0]))
            elif lo[0] == up[0] and not lo[1] and not up[1]:
                values[var] = lo[0]
            else:
                raise GeometryError("inconsistent interval survived elimination")
    return tuple(values)  # type: ignore[arg-type]


def solve_lex_system(n: int, k: int, constraints) -> tuple[bool, Witness | None]:
    """Decide a lex-linear system; returns (feasible, witness matrix or None).

    ``constraints`` is an iterable of (coeffs, rhs, rel) with rel one of
    ">=", ">", "=".  The witness is an n-tuple of k-tuples of Fractions.
    """
    raw: list[tuple[tuple, tuple, bool]] = []
    for coeffs, rhs, rel in constraints:
        coeffs = tuple(Fraction(c) for c in coeffs)
        rhs = tuple(Fraction(r) for r in rhs)
        if len(coeffs) != n or len(rhs) != k:
            raise DimensionMismatch(
                f"constraint shape ({len(coeffs)}, {len(rhs)}) does not match (n={n}, k={k})"
            )
        if rel == GE:
            raw.append((coeffs, rhs, False))
        elif rel == GT:
            raw.append((coeffs, rhs, True))
        elif rel == EQ:
            raw.append((coeffs, rhs, False))
            raw.append((tuple(-c for c in coeffs), tuple(-r for r in rhs), False))
        else:
            raise ValueError(f"unknown relation {rel!r}")
    split, zeros = _split_zero(raw)
    cons = _consolidate(split, zeros)
    if cons is None:
        return False, None
    witness = _solve(n, k, frozenset(cons))
    if witness is None:
        return False, None
    return True, witness


def evaluate(coeffs, witness) -> tuple[Fraction, ...]:
    """Value of sum c_j x_j at a witness matrix."""
    k = len(witness[0]) if witness else 0
    acc = tuple(Fraction(0) for _ in range(k))
    for c, row in zip(coeffs, witness):
        if c != 0:
            acc = _tadd(acc, _tscale(Fraction(c), row))
    return acc


def clear_cache() -> None:
    _solve.cache_clear()
