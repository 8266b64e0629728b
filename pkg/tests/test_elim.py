import random
from fractions import Fraction

import pytest

from pointscheme import _elim
from pointscheme.linmat import determinant
from oracles import cofactor_det, random_linear_form


def _rand_matrix(rng, r, c):
    return [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) if rng.random() < 0.7 else Fraction(0)
             for _ in range(c)] for _ in range(r)]


def test_rational_det_matches_cofactor():
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randint(1, 5)
        M = _rand_matrix(rng, n, n)
        assert _elim.bareiss_det(M, Fraction(1)) == cofactor_det(M)


def test_rank_and_nullspace():
    rng = random.Random(2)
    for _ in range(300):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        M = _rand_matrix(rng, r, c)
        basis = _elim.nullspace(M, c, Fraction(1))
        assert len(basis) == c - _elim.rank(M, Fraction(1))
        for v in basis:
            assert any(v)
            assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in M)


def test_rank_against_sympy():
    sympy = pytest.importorskip("sympy")
    rng = random.Random(3)
    for _ in range(100):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        M = _rand_matrix(rng, r, c)
        assert _elim.rank(M, Fraction(1)) == sympy.Matrix(M).rank()


def test_symbolic_det_matches_cofactor():
    rng = random.Random(4)
    for _ in range(60):
        n = rng.randint(1, 4)
        M = [[random_linear_form(rng, 4) for _ in range(n)] for _ in range(n)]
        ref = cofactor_det(M)
        assert determinant(M) == ref
