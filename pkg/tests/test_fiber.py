import random
from fractions import Fraction

import pytest

from pointscheme.corpus import PRESENTATIONS
from pointscheme.fiber import generic_kernel, kernel_at, sample_off_components, sample_on_component
from pointscheme.linmat import build_matrix
from pointscheme.relparse import parse_presentation
from pointscheme.report import analyze
from pointscheme.scalars import Q, LaurentScalar
from pointscheme.scheme import SchemeComponent


def setup(name):
    p = parse_presentation(PRESENTATIONS[name])
    return p, build_matrix(p)


def test_known_fibers():
    _, D = setup("prop1")
    r = kernel_at(D, [1, 0, 0, 0], 2)
    assert r.rank == 3 and r.beta == (1, 0, 0, 0)
    _, D = setup("prop3")
    assert kernel_at(D, [0, 1, 0, 0], 3).beta == (0, 1, 0, 0)


def test_generic_point_has_no_fiber():
    _, D = setup("prop1")
    r = kernel_at(D, [1, 2, 3, 5], 2)
    assert r.rank == 4 and r.beta is None and r.kernel_basis == ()


def test_symbolic_q_kernel():
    _, D = setup("prop1")
    r = kernel_at(D, [1, 0, 0, 0])
    assert r.field == "Q(q)" and r.rank == 3
    assert r.beta == (LaurentScalar.const(1), LaurentScalar(), LaurentScalar(), LaurentScalar())


def test_symbolic_kernel_on_quadric_point():
    # (1, 1, 1, 1) lies on x2*x3 = x1*x4
    p, D = setup("prop1")
    r = kernel_at(D, [1, 1, 1, 1])
    assert r.rank == 3
    for rel in p.relations:
        total = LaurentScalar()
        for (i, j), c in rel.words.items():
            total = total + c * r.beta[j]
        assert total.is_zero()


def test_generic_kernel_on_line():
    p, D = setup("prop2")
    r = generic_kernel(D, SchemeComponent(4, (1, 2)))
    assert r.field == "Q(q)(a)"
    for v in r.kernel_basis:
        for k, row in enumerate(D.substitute_zero(1).substitute_zero(2).entries):
            acc = None
            for e, b in zip(row, v):
                t = e * b
                acc = t if acc is None else acc + t
            assert acc.is_zero()


def test_rejects_bad_input():
    p, D = setup("prop1")
    with pytest.raises(ValueError):
        kernel_at(D, [0, 0, 0, 0], 2)
    with pytest.raises(ValueError):
        kernel_at(D, [1, 0, 0], 2)
    with pytest.raises(ValueError):
        kernel_at(D, [1, 0, 0, 0], 1, p.constraints)
    with pytest.raises(ValueError):
        kernel_at(D, [1, 0, 0, 0], 0)


@pytest.mark.parametrize("name", list(PRESENTATIONS))
def test_sampled_points(name):
    p = parse_presentation(PRESENTATIONS[name])
    a = analyze(p)
    rng = random.Random(31)
    for q0 in (Fraction(2), Fraction(-3), Fraction(5, 2)):
        for c in a.scheme.components:
            for _ in range(6):
                pt = sample_on_component(c, q0, rng)
                assert c.contains_point(pt, q0)
                r = kernel_at(a.matrix, pt, q0, p.constraints)
                assert r.rank <= 3
                for v in r.kernel_basis:
                    for rel in p.relations:
                        assert sum(cf(q0) * pt[i] * v[j] for (i, j), cf in rel.words.items()) == 0
        for _ in range(6):
            pt = sample_off_components(a.scheme.components, 4, q0, rng)
            assert kernel_at(a.matrix, pt, q0, p.constraints).rank == 4
