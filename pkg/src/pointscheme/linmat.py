"""The matrix of linear forms attached to a presentation, and its maximal minors.

Substituting x_i x_j -> a_i b_j turns relation k into a bilinear form
g_k(a, b) = a^T B_k b.  Collecting the coefficients of b_j gives the m x n
matrix D with (D b)_k = g_k(a, b); its entries are linear forms in a.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

from . import _elim
from .multipoly import MultiPoly
from .relparse import Presentation, Relation
from .scalars import ONE, LaurentScalar

__all__ = [
    "Bilinear",
    "LinearFormMatrix",
    "MinorSet",
    "multilinearize",
    "build_matrix",
    "determinant",
    "maximal_minors",
]


@dataclass(frozen=True)
class Bilinear:
    """Coefficient matrix of g(a, b) = sum_ij coeffs[i][j] a_i b_j."""

    coeffs: tuple

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def evaluate(self, alpha: Sequence, beta: Sequence, q0=None):
        if q0 is None:
            total = LaurentScalar()
            for i, row in enumerate(self.coeffs):
                for j, c in enumerate(row):
                    if c and alpha[i] and beta[j]:
                        total = total + c * (Fraction(alpha[i]) * Fraction(beta[j]))
            return total
        total = Fraction(0)
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c and alpha[i] and beta[j]:
                    total += c(q0) * alpha[i] * beta[j]
        return total

    def as_poly(self) -> MultiPoly:
        """g(a, b) as a polynomial in 2n variables (a first, then b)."""
        n = self.n
        d = {}
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    m = [0] * (2 * n)
                    m[i] += 1
                    m[n + j] += 1
                    d[tuple(m)] = c
        return MultiPoly(2 * n, d)


def multilinearize(r: Relation, n: int) -> Bilinear:
    rows = [[LaurentScalar() for _ in range(n)] for _ in range(n)]
    for (i, j), c in r.words.items():
        rows[i][j] = c
    return Bilinear(tuple(tuple(row) for row in rows))


@dataclass(frozen=True)
class LinearFormMatrix:
    """m x n matrix whose entries are linear forms in a1..an."""

    entries: tuple

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def nvars(self) -> int:
        return self.entries[0][0].nvars

    def row(self, k: int) -> tuple:
        return self.entries[k]

    def submatrix(self, rows: Sequence[int]) -> list[list[MultiPoly]]:
        return [list(self.entries[k]) for k in rows]

    def substitute_zero(self, var: int) -> "LinearFormMatrix":
        return LinearFormMatrix(
            tuple(tuple(e.substitute_zero(var) for e in row) for row in self.entries)
        )

    def specialize_q(self, q0) -> "LinearFormMatrix":
        return LinearFormMatrix(tuple(tuple(e.specialize_q(q0) for e in row) for row in self.entries))

    def at(self, alpha: Sequence, q0=None) -> list[list]:
        """Numeric matrix D(alpha); Fractions if ``q0`` is given, else Laurent scalars."""
        return [[e.evaluate(alpha, q0) for e in row] for row in self.entries]

    def permute_rows(self, order: Sequence[int]) -> "LinearFormMatrix":
        return LinearFormMatrix(tuple(self.entries[k] for k in order))

    def render(self, var: str = "a") -> list[list[str]]:
        return [[e.render(var) for e in row] for row in self.entries]


def build_matrix(p: Presentation) -> LinearFormMatrix:
    """Row k, column j holds sum_i c^(k)_ij a_i."""
    n = p.n
    avars = [MultiPoly.var(i, n) for i in range(n)]
    rows = []
    for r in p.relations:
        row = [MultiPoly.zero(n) for _ in range(n)]
        for (i, j), c in r.words.items():
            row[j] = row[j] + avars[i].scale(c)
        rows.append(tuple(row))
    return LinearFormMatrix(tuple(rows))


def _poly_div(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a.exact_div(b)


def determinant(square: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(square)
    if n == 0:
        raise ValueError("empty matrix")
    one = MultiPoly.constant(square[0][0].nvars, ONE)
    return _elim.bareiss_det(square, one, _poly_div)


@dataclass(frozen=True)
class MinorSet:
    """All maximal minors, plus the distinct nonzero ones up to scalar factors.

    ``reduced`` holds ``(rows, scalar, canonical)`` for the first row subset
    producing each distinct canonical minor, in row-subset order.
    """

    minors: tuple
    reduced: tuple
    matrix: LinearFormMatrix | None = None

    @property
    def nonzero_reduced(self) -> list[MultiPoly]:
        return [canon for _, _, canon in self.reduced]

    def nonzero(self) -> list[tuple[tuple, MultiPoly]]:
        return [(rows, p) for rows, p in self.minors if p]

    def __len__(self):
        return len(self.minors)


def maximal_minors(D: LinearFormMatrix, workers: int | None = None) -> MinorSet:
    """Every n x n minor of D (row subsets in lexicographic order)."""
    m, n = D.rows, D.cols
    if m < n:
        raise ValueError(f"{m} rows < {n} columns: no maximal minors")
    subsets = list(combinations(range(m), n))
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            dets = list(ex.map(lambda rows: determinant(D.submatrix(rows)), subsets))
    else:
        dets = [determinant(D.submatrix(rows)) for rows in subsets]
    assert len(dets) == comb(m, n)
    minors = tuple(zip(subsets, dets))
    seen = set()
    reduced = []
    for rows, p in minors:
        if not p:
            continue
        scalar, canon = p.normalized()
        key = canon.render()
        if key in seen:
            continue
        seen.add(key)
        reduced.append((rows, scalar, canon))
    return MinorSet(minors, tuple(reduced), D)
