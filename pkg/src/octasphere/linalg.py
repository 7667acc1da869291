"""Small exact linear-algebra helpers over Fraction (Gaussian elimination)."""

from __future__ import annotations

from fractions import Fraction


def solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve A x = b exactly; None if inconsistent.

    If the system is underdetermined, free variables are set to 0 (the
    returned vector is still an exact solution).
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    piv_cols = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if a[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = a[i][n]
    return x


def rank_exact(rows: list[list[Fraction]]) -> int:
    m = len(rows)
    if m == 0:
        return 0
    n = len(rows[0])
    a = [[Fraction(v) for v in row] for row in rows]
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(r + 1, m):
            if a[i][c] != 0:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        r += 1
        if r == m:
            break
    return r


def fit_affine(points: list[tuple], values: list[Fraction]) -> list[Fraction] | None:
    """Fit v = c0 + c1*x1 + ... + ck*xk exactly through all (point, value) pairs."""
    rows = [[Fraction(1)] + [Fraction(x) for x in p] for p in points]
    sol = solve_exact(rows, [Fraction(v) for v in values])
    if sol is None:
        return None
    for p, v in zip(points, values):
        if sol[0] + sum(c * Fraction(x) for c, x in zip(sol[1:], p)) != Fraction(v):
            return None
    return sol


def fit_poly2(points: list[tuple], values: list[Fraction]) -> dict | None:
    """Fit an exact polynomial of total degree <= 2 in (l0, l1, l2).

    Returns {exponent-triple: coeff} or None if no degree-2 polynomial
    interpolates all samples.
    """
    monos = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1),
             (2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)]
    rows = []
    for p in points:
        l0, l1, l2 = (Fraction(x) for x in p)
        rows.append([l0 ** e0 * l1 ** e1 * l2 ** e2 for (e0, e1, e2) in monos])
    sol = solve_exact(rows, [Fraction(v) for v in values])
    if sol is None:
        return None
    for row, v in zip(rows, values):
        if sum(c * x for c, x in zip(sol, row)) != Fraction(v):
            return None
    return {m: c for m, c in zip(monos, sol) if c != 0}
