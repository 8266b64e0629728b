import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pointscheme.corpus import PRESENTATIONS
from pointscheme.relparse import ParseError, parse_expression, parse_presentation, render_presentation
from pointscheme.scalars import Q, LaurentScalar
from oracles import random_presentation_text


def test_expression_expansion():
    w = parse_expression("x4*x1 - x1*x4 - (q - q^-1)*x2*x3", 4)
    assert w == {(3, 0): LaurentScalar.const(1), (0, 3): LaurentScalar.const(-1),
                 (1, 2): -(Q - LaurentScalar.q(-1))}


def test_products_of_sums_expand():
    w = parse_expression("(x1 + q*x2)*(x1 - x2)", 2)
    assert w == {(0, 0): LaurentScalar.const(1), (0, 1): LaurentScalar.const(-1),
                 (1, 0): Q, (1, 1): -Q}


def test_squares_and_division_by_units():
    w = parse_expression("x1^2 / q", 2)
    assert w == {(0, 0): LaurentScalar.q(-1)}


@pytest.mark.parametrize("text,needle", [
    ("generators: x1 x2\nrel: x1*x2*x1\n", "cubic"),
    ("generators: x1 x2\nrel: x1\n", "linear"),
    ("generators: x1 x2\nrel: x1*x3\n", "x3"),
    ("generators: x1 x2\nrel: x1*x2 - x1*x2\n", "zero"),
    ("generators: x1 x2\nrel: x1*x2 / (q + 1)\n", ""),
    ("generators: x1 x2\nrel: x1 x2\n", ""),
    ("rel: x1*x2\n", "generators"),
    ("generators: x1 x2\n", "relation"),
    ("generators: x1 x2\nconstraint: x1\nrel: x1*x2\n", ""),
])
def test_parse_errors(text, needle):
    with pytest.raises(ParseError) as e:
        parse_presentation(text)
    assert needle in str(e.value)
    assert e.value.line >= 1 or needle in ("generators", "relation")


def test_error_carries_position():
    with pytest.raises(ParseError) as e:
        parse_presentation("generators: x1 x2\n# comment\nrel: x1*x2 + x2*x2*x1\n")
    assert e.value.line == 3


def test_corpus_roundtrip():
    for text in PRESENTATIONS.values():
        p = parse_presentation(text)
        assert parse_presentation(render_presentation(p)) == p


def test_random_roundtrip():
    rng = random.Random(9)
    for _ in range(200):
        n = rng.randint(1, 5)
        text = random_presentation_text(rng, n, rng.randint(1, 6), constraint=rng.choice([None, "q + 1", "q^2 - 1"]))
        try:
            p = parse_presentation(text)
        except ParseError:
            continue  # random words may cancel to zero
        assert parse_presentation(render_presentation(p)) == p


coef = st.sampled_from(["1", "-2", "q", "q^-2", "(q + 1)", "3/4*q", "(1 - q^3)"])


@st.composite
def presentations(draw):
    n = draw(st.integers(1, 4))
    rels = []
    for _ in range(draw(st.integers(1, 4))):
        words = draw(st.lists(st.tuples(coef, st.integers(1, n), st.integers(1, n)), min_size=1, max_size=4))
        rels.append(" + ".join(f"{c}*x{i}*x{j}" for c, i, j in words))
    return "generators: " + " ".join(f"x{i}" for i in range(1, n + 1)) + "\n" + "".join(
        f"rel: {r}\n" for r in rels)


@given(presentations())
@settings(max_examples=150, deadline=None)
def test_roundtrip_property(text):
    try:
        p = parse_presentation(text)
    except ParseError:
        return
    again = parse_presentation(render_presentation(p))
    assert again == p
    assert render_presentation(again) == render_presentation(p)
