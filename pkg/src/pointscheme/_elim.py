"""Fraction-free elimination over an integral domain.

Entries only need ``+``, ``-``, ``*`` and an exact-division callable.  The same
routines serve rationals, Laurent scalars and polynomials.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

Div = Callable[[object, object], object]


def _is_zero(x) -> bool:
    return x == 0 if isinstance(x, (int, Fraction)) else x.is_zero()


def default_div(a, b):
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return Fraction(a) / b
    return a.exact_div(b)


def bareiss_det(matrix: Sequence[Sequence], one, div: Div = default_div):
    """Determinant of a square matrix by Bareiss elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("bareiss_det needs a square matrix")
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            for p in range(k + 1, n):
                if not _is_zero(a[p][k]):
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return one - one
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = div(piv * a[i][j] - a[i][k] * a[k][j], prev)
            a[i][k] = one - one
        prev = piv
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def fraction_free_rref(matrix: Sequence[Sequence], one, div: Div = default_div):
    """Fraction-free Gauss-Jordan form.

    Returns ``(rows, pivot_columns, d)``.  Every pivot entry of ``rows`` equals
    ``d``, the determinant of the pivot submatrix; entries above and below the
    pivots are zero.
    """
    a = [list(row) for row in matrix]
    m = len(a)
    ncols = len(a[0]) if m else 0
    zero = one - one
    prev = one
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if not _is_zero(a[i][c])), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(m):
            if i == r:
                continue
            f = a[i][c]
            for j in range(ncols):
                if j == c:
                    continue
                a[i][j] = div(piv * a[i][j] - f * a[r][j], prev)
            a[i][c] = zero
        prev = piv
        pivots.append(c)
        r += 1
    return a, pivots, prev


def rank(matrix: Sequence[Sequence], one, div: Div = default_div) -> int:
    if not matrix:
        return 0
    return len(fraction_free_rref(matrix, one, div)[1])


def nullspace(matrix: Sequence[Sequence], ncols: int, one, div: Div = default_div) -> list[list]:
    """Kernel basis with entries in the ring (no fractions introduced)."""
    zero = one - one
    if not matrix:
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    rows, pivots, d = fraction_free_rref(matrix, one, div)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = d
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][f]
        basis.append(v)
    return basis
