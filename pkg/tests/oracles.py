"""Reference implementations used only as test oracles.

They are deliberately naive: cofactor expansion, subset enumeration, dense
elimination mod p.  None of them touch the package's own algorithms.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product

from pointscheme.multipoly import MultiPoly
from pointscheme.scalars import LaurentScalar


def cofactor_det(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    total = None
    for j in range(n):
        if not M[0][j]:
            continue
        sub = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * cofactor_det(sub)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else M[0][0] * 0


def hitting_sets(supports, n):
    """All inclusion-minimal variable sets meeting every support, by brute force."""
    hits = []
    for k in range(n + 1):
        for s in combinations(range(n), k):
            ss = set(s)
            if all(ss & sup for sup in supports) and not any(h <= ss for h in hits):
                hits.append(ss)
    return {frozenset(h) for h in hits}


SCALARS = [
    LaurentScalar.const(1), LaurentScalar.const(-1), LaurentScalar.const(2),
    LaurentScalar.const(Fraction(1, 3)), LaurentScalar.q(), -LaurentScalar.q(),
    LaurentScalar.q(-1), LaurentScalar.q() + 1, LaurentScalar.q() - LaurentScalar.q(-1),
]


def random_linear_form(rng: random.Random, n: int, density: float = 0.5) -> MultiPoly:
    terms = {}
    for i in range(n):
        if rng.random() < density:
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = rng.choice(SCALARS) * rng.randint(-2, 2)
    return MultiPoly(n, terms)


def random_relation_text(rng: random.Random, n: int, max_words: int = 4) -> str:
    """A random nonzero quadratic relation in the text format."""
    coef = ["1", "-1", "2", "q", "q^-1", "(q + 1)", "(q - q^-1)", "1/2", "-3*q^2"]
    while True:
        words = {}
        for _ in range(rng.randint(1, max_words)):
            i, j = rng.randrange(n), rng.randrange(n)
            words[(i, j)] = rng.choice(coef)
        parts = [f"{c}*x{i + 1}*x{j + 1}" for (i, j), c in words.items()]
        return " + ".join(parts)


def random_presentation_text(rng: random.Random, n: int, m: int, max_words: int = 4,
                             constraint: str | None = None) -> str:
    lines = ["generators: " + " ".join(f"x{i + 1}" for i in range(n))]
    if constraint:
        lines.append(f"constraint: {constraint}")
    lines += [f"rel: {random_relation_text(rng, n, max_words)}" for _ in range(m)]
    return "\n".join(lines) + "\n"


# --- arithmetic mod p ---------------------------------------------------------------

def mod_p(x: Fraction, p: int) -> int:
    return x.numerator * pow(x.denominator, -1, p) % p


def scalar_mod_p(s: LaurentScalar, q0: int, p: int) -> int:
    return sum(mod_p(c, p) * pow(q0, e, p) for e, c in s.terms) % p


def poly_mod_p(f: MultiPoly, point, q0: int, p: int) -> int:
    total = 0
    for m, c in f.terms.items():
        v = scalar_mod_p(c, q0, p)
        for x, e in zip(point, m):
            v = v * pow(x, e, p) % p
        total += v
    return total % p


def rank_mod_p(M, p: int) -> int:
    M = [list(r) for r in M]
    rank, cols = 0, len(M[0]) if M else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(M)) if M[r][c] % p), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], -1, p)
        for r in range(len(M)):
            if r != rank and M[r][c] % p:
                f = M[r][c] * inv % p
                M[r] = [(a - f * b) % p for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def matrix_from_relations(presentation, alpha, q0: int, p: int):
    """D(alpha) mod p built straight from relation coefficients: row k, column j
    holds sum_i c_ij alpha_i for the k-th relation."""
    n = presentation.n
    rows = []
    for r in presentation.relations:
        row = [0] * n
        for (i, j), c in r.words.items():
            row[j] = (row[j] + scalar_mod_p(c, q0, p) * alpha[i]) % p
        rows.append(row)
    return rows


def projective_points(n: int, p: int):
    """One representative per point of P^(n-1)(F_p)."""
    for lead in range(n):
        for rest in product(range(p), repeat=n - lead - 1):
            yield (0,) * lead + (1,) + rest
