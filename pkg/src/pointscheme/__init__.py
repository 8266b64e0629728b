"""Point schemes of quadratic algebras, computed exactly.

Typical use::

    from pointscheme import parse_presentation, analyze
    a = analyze(parse_presentation(text))
    print(a.scheme.render())
"""
from .fiber import FiberResult, generic_kernel, kernel_at
from .linmat import LinearFormMatrix, MinorSet, build_matrix, maximal_minors
from .multipoly import MultiPoly, split_quadratic_form
from .relparse import ParseError, Presentation, parse_presentation, render_presentation
from .report import Analysis, analyze, to_json
from .scalars import LaurentScalar, QConstraintSet, is_unit_under
from .scheme import SchemeComponent, SchemeDescription, decompose, monomial_primes

__version__ = "0.1.0"

__all__ = [
    "Analysis",
    "FiberResult",
    "LaurentScalar",
    "LinearFormMatrix",
    "MinorSet",
    "MultiPoly",
    "ParseError",
    "Presentation",
    "QConstraintSet",
    "SchemeComponent",
    "SchemeDescription",
    "analyze",
    "build_matrix",
    "decompose",
    "generic_kernel",
    "is_unit_under",
    "kernel_at",
    "maximal_minors",
    "monomial_primes",
    "parse_presentation",
    "render_presentation",
    "split_quadratic_form",
    "to_json",
]
