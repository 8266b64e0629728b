import random
from fractions import Fraction

import pytest

from pointscheme.multipoly import (
    MultiPoly, NotDivisibleError, QuadraticForm, factored_parts, render_factored, split_quadratic_form,
)
from pointscheme.relparse import parse_poly
from pointscheme.scalars import Q, LaurentScalar
from oracles import random_linear_form


def P(text, n=4):
    return parse_poly(text, n, var="a")


def a(i, n=4):
    return MultiPoly.var(i, n)


def test_render_term_order():
    # degree first, then reverse lexicographic with a1 > a2 > ... > an
    assert (a(1) * a(2) - a(0) * a(3)).render() == "a2*a3 - a1*a4"
    assert (a(0) ** 2 - a(1) * a(2)).render() == "a1^2 - a2*a3"
    assert (a(0) ** 3 + a(0) + 1).render() == "a1^3 + a1 + 1"


def test_arithmetic_and_division():
    f = a(0) + a(1).scale(Q)
    g = a(2) - a(3)
    prod = f * g
    assert prod.exact_div(f) == g
    assert prod.exact_div(g) == f
    with pytest.raises(NotDivisibleError):
        (prod + 1).exact_div(f)


def test_evaluate_is_homomorphism():
    rng = random.Random(5)
    for _ in range(100):
        f = random_linear_form(rng, 4) * random_linear_form(rng, 4) + random_linear_form(rng, 4)
        g = random_linear_form(rng, 4)
        pt = [Fraction(rng.randint(-5, 5)) for _ in range(4)]
        q0 = Fraction(rng.choice([2, 3, -1, Fraction(1, 2)]))
        assert (f * g).evaluate(pt, q0) == f.evaluate(pt, q0) * g.evaluate(pt, q0)
        assert f.specialize_q(q0).evaluate(pt, q0) == f.evaluate(pt, q0)
        assert f.evaluate(pt)(q0) == f.evaluate(pt, q0)


def test_normalization_is_unit_invariant():
    f = P("(q^2 - 1)*a2*a3 - (q^2 - 1)*a1*a4")
    for u in [LaurentScalar.q(3), LaurentScalar.const(-7), LaurentScalar.const(Fraction(2, 3)) * Q]:
        assert f.scale(u).canonical() == f.canonical()
    s, c = f.normalized()
    assert c.scale(s) == f
    assert c.render() == "a2*a3 - a1*a4"


def test_substitution_and_derivative():
    f = P("a1^2*a3 - a2*a3*a4 + a4^3")
    assert f.substitute_zero(2) == P("a4^3")
    assert f.diff(0) == P("2*a1*a3")
    assert f.monomial_content() == (0, 0, 0, 0)
    assert P("a1^2*a3 - a1*a3^2").monomial_content() == (1, 0, 1, 0)


def test_permute_composition():
    f = P("a1^2*a3 - q*a2*a4")
    perm = [2, 0, 3, 1]
    inv = [perm.index(i) for i in range(4)]
    assert f.permute(perm).permute(inv) == f


def test_quadratic_form_ranks():
    assert QuadraticForm.from_poly(P("a1^2 - a2*a3")).rank() == 3
    assert QuadraticForm.from_poly(P("a2*a3 - a1*a4")).rank() == 4
    assert QuadraticForm.from_poly(P("a1^2 + 2*q*a1*a2 + q^2*a2^2")).rank() == 1


@pytest.mark.parametrize("text,kind", [
    ("a1^2 - a2*a3", "irreducible"),
    ("a1^2 + 2*q*a1*a2 + q^2*a2^2", "square"),
    ("a1^2 - q^2*a2^2", "product"),
    ("a1*a2", "product"),
    ("(a1 + q*a3)*(a2 - a4)", "product"),
    ("a1^2 - q*a2^2", "closure_split"),
    ("a1^2 - 2*a2^2", "closure_split"),
])
def test_split_quadratic_form(text, kind):
    f = P(text)
    fac = split_quadratic_form(f)
    assert fac.kind == kind
    if kind in ("square", "product"):
        assert fac.expand() == f


def test_split_random_products():
    rng = random.Random(6)
    for _ in range(150):
        l1, l2 = random_linear_form(rng, 4, 0.6), random_linear_form(rng, 4, 0.6)
        f = l1 * l2
        if not f or f.total_degree() != 2:
            continue
        fac = split_quadratic_form(f)
        assert fac.kind in ("square", "product")
        assert fac.expand() == f


def test_factored_rendering():
    f = P("(q^2 - 1)*a3^2*(a2*a3 - a1*a4)")
    assert render_factored(f) == "(q^2 - 1)*a3^2*(a2*a3 - a1*a4)"
    assert render_factored(f, with_scalar=False) == "a3^2*(a2*a3 - a1*a4)"
    assert render_factored(P("-a1*a2*(a1^2 - a2*a3)")) == "-a1*a2*(a1^2 - a2*a3)"
    scalar, mono, cof = factored_parts(f)
    assert mono == (0, 0, 2, 0) and [c.render() for c in cof] == ["a2*a3 - a1*a4"]
