"""Built-in presentations: six quadratic algebras on four generators.

Each entry carries the presentation text and the golden report produced by
``pointscheme minors`` followed by ``pointscheme scheme``.  Goldens live in
this module so the ``corpus`` command needs no files on disk.
"""
from __future__ import annotations

PRESENTATIONS = {
    "prop1": """\
# q nonzero, q^2 != 1
generators: x1 x2 x3 x4
constraint: q^2 - 1
rel: x2*x1 - q*x1*x2
rel: x2*x3 - x3*x2
rel: x3*x1 - q*x1*x3
rel: x4*x1 - x1*x4 - (q - q^-1)*x2*x3
rel: x4*x2 - q*x2*x4
rel: x4*x3 - q*x3*x4
""",
    "prop2": """\
# q nonzero
generators: x1 x2 x3 x4
rel: x1*x2 - x2*x1
rel: x3*x2 - x2*x3
rel: x1*x3 - x3*x1
rel: x4*x1 - x1*x4 + q*(x4*x3 - x1*x2)
rel: x4*x2 - x2*x4
rel: x4*x3 - x3*x4
""",
    "prop3": """\
# q nonzero, q != -1
generators: x1 x2 x3 x4
constraint: q + 1
rel: x1*x2 - x2*x1
rel: x2*x3 - x3*x2
rel: x1*x3 - x3*x1
rel: x1*x4 - x4*x1
rel: x2*x4 - x4*x2 - q*(x1^2 - x2*x4)
rel: x4*x3 - x3*x4
""",
    "prop4": """\
generators: x1 x2 x3 x4
rel: x1*x2 - x2*x1
rel: x3*x2 - x2*x3
rel: x1*x3 - x3*x1
rel: x1*x4 - x4*x1 - x1^2 + x4*x3
rel: x2*x4 - x4*x2
rel: x3*x4 - x4*x3
""",
    "prop5": """\
generators: x1 x2 x3 x4
rel: x1*x2 - x2*x1
rel: x2*x3 - x3*x2
rel: x1*x3 - x3*x1
rel: x1*x4 - x4*x1 - x1^2 + x2*x3
rel: x2*x4 - x4*x2
rel: x3*x4 - x4*x3
""",
    "prop6": """\
generators: x1 x2 x3 x4
rel: x1*x2 - x2*x1
rel: x2*x3 - x3*x2
rel: x1*x3 - x3*x1
rel: x1*x4 - x4*x1
rel: x2*x4 - x4*x2
rel: x3*x4 - x4*x3 - x1^2 + x2*x3
""",
}

GOLDEN: dict[str, str] = {
    "prop1": """\
## minors
a2^2*(a2*a3 - a1*a4)    # rows 1,2,4,5; scalar -q^2 + 1
a2*a3*(a2*a3 - a1*a4)    # rows 1,2,4,6; scalar -q^2 + 1
a1*a2*(a2*a3 - a1*a4)    # rows 1,3,4,5; scalar q^3 - q
a1*a3*(a2*a3 - a1*a4)    # rows 1,3,4,6; scalar q^3 - q
a2*a4*(a2*a3 - a1*a4)    # rows 1,4,5,6; scalar -q^2 + 1
a3^2*(a2*a3 - a1*a4)    # rows 2,3,4,6; scalar q^2 - 1
a3*a4*(a2*a3 - a1*a4)    # rows 3,4,5,6; scalar -q^2 + 1
## scheme
V(x2, x3)
V(x2*x3 - x1*x4)
""",
    "prop2": """\
## minors
a2^2*(a1*a2 - a3*a4)    # rows 1,2,4,5; scalar -q
a2*a3*(a1*a2 - a3*a4)    # rows 1,2,4,6; scalar -q
a1*a2*(a1*a2 - a3*a4)    # rows 1,3,4,5; scalar q
a1*a3*(a1*a2 - a3*a4)    # rows 1,3,4,6; scalar q
a2*a4*(a1*a2 - a3*a4)    # rows 1,4,5,6; scalar q
a3^2*(a1*a2 - a3*a4)    # rows 2,3,4,6; scalar q
a3*a4*(a1*a2 - a3*a4)    # rows 3,4,5,6; scalar q
## scheme
V(x2, x3)  [double]
V(x1*x2 - x3*x4)
V(x1*x2 - x3*x4) contains the double line V(x2, x3)
""",
    "prop3": """\
# the case split that isolates V(x1, x3) is on x1 (zero or not)
## minors
a1*a2*(a1^2 - a2*a4)    # rows 1,2,4,5; scalar q
a2*a3*(a1^2 - a2*a4)    # rows 1,2,5,6; scalar q
a1^2*(a1^2 - a2*a4)    # rows 1,3,4,5; scalar q
a1*a3*(a1^2 - a2*a4)    # rows 1,3,5,6; scalar q
a1*a4*(a1^2 - a2*a4)    # rows 1,4,5,6; scalar q
a3^2*(a1^2 - a2*a4)    # rows 2,3,5,6; scalar -q
a3*a4*(a1^2 - a2*a4)    # rows 2,4,5,6; scalar -q
## scheme
V(x1, x3)
V(x1^2 - x2*x4)
""",
    "prop4": """\
## minors
a2^2*(a1^2 - a3*a4)    # rows 1,2,4,5; scalar 1
a2*a3*(a1^2 - a3*a4)    # rows 1,2,4,6; scalar 1
a1*a2*(a1^2 - a3*a4)    # rows 1,3,4,5; scalar -1
a1*a3*(a1^2 - a3*a4)    # rows 1,3,4,6; scalar -1
a2*a4*(a1^2 - a3*a4)    # rows 1,4,5,6; scalar 1
a3^2*(a1^2 - a3*a4)    # rows 2,3,4,6; scalar -1
a3*a4*(a1^2 - a3*a4)    # rows 3,4,5,6; scalar 1
## scheme
V(x2, x3)
V(x1^2 - x3*x4)
""",
    "prop5": """\
## minors
a2^2*(a1^2 - a2*a3)    # rows 1,2,4,5; scalar -1
a2*a3*(a1^2 - a2*a3)    # rows 1,2,4,6; scalar -1
a1*a2*(a1^2 - a2*a3)    # rows 1,3,4,5; scalar -1
a1*a3*(a1^2 - a2*a3)    # rows 1,3,4,6; scalar -1
a2*a4*(a1^2 - a2*a3)    # rows 1,4,5,6; scalar 1
a3^2*(a1^2 - a2*a3)    # rows 2,3,4,6; scalar 1
a3*a4*(a1^2 - a2*a3)    # rows 3,4,5,6; scalar 1
## scheme
V(x2, x3)
V(x1^2 - x2*x3)
""",
    "prop6": """\
## minors
a1*a2*(a1^2 - a2*a3)    # rows 1,2,4,6; scalar 1
a2^2*(a1^2 - a2*a3)    # rows 1,2,5,6; scalar 1
a1^2*(a1^2 - a2*a3)    # rows 1,3,4,6; scalar 1
a1*a3*(a1^2 - a2*a3)    # rows 2,3,4,6; scalar -1
a2*a3*(a1^2 - a2*a3)    # rows 2,3,5,6; scalar -1
a2*a4*(a1^2 - a2*a3)    # rows 2,4,5,6; scalar -1
a1*a4*(a1^2 - a2*a3)    # rows 3,4,5,6; scalar -1
## scheme
V(x1, x2)  [double]
V(x1^2 - x2*x3)
V(x1^2 - x2*x3) contains the double line V(x1, x2)
""",
}


def strip_comments(report: str) -> str:
    """Drop whole-line ``#`` comments, which goldens may carry as annotations."""
    return "".join(l for l in report.splitlines(True) if not l.startswith("# "))
