"""Text and JSON reports for the pipeline."""
from __future__ import annotations

from dataclasses import dataclass

from .linmat import LinearFormMatrix, MinorSet, build_matrix, maximal_minors
from .multipoly import MultiPoly, _mono_str, factored_parts, render_factored
from .relparse import Presentation, parse_poly
from .scheme import SchemeComponent, SchemeDescription, decompose

SCHEMA_VERSION = 1


@dataclass
class Analysis:
    presentation: Presentation
    matrix: LinearFormMatrix
    minors: MinorSet | None
    scheme: SchemeDescription


def analyze(p: Presentation, split_budget: int | None = None, strategy: str = "cofactor",
            workers: int | None = None) -> Analysis:
    D = build_matrix(p)
    if D.rows < D.cols:
        return Analysis(p, D, None, decompose(D, p.constraints, split_budget, strategy))
    ms = maximal_minors(D, workers=workers)
    return Analysis(p, D, ms, decompose(ms, p.constraints, split_budget, strategy))


def render_minors(a: Analysis, expanded: bool = False) -> str:
    if a.minors is None:
        return "# fewer relations than generators: no maximal minors"
    lines = []
    for rows, scalar, canon in a.minors.reduced:
        body = canon.render("a") if expanded else render_factored(canon, "a", with_scalar=False)
        rows_s = ",".join(str(r + 1) for r in rows)
        lines.append(f"{body}    # rows {rows_s}; scalar {scalar}")
    return "\n".join(lines)


def render_scheme(a: Analysis) -> str:
    return a.scheme.render("x")


def _minor_json(rows, scalar, canon: MultiPoly) -> dict:
    full = canon.scale(scalar)
    unit, mono, cofactors = factored_parts(full)
    return {
        "rows": [r + 1 for r in rows],
        "factored": {
            "unit": str(unit),
            "monomial": _mono_str(mono, "a") or "1",
            "cofactors": [c.render("a") for c in cofactors],
        },
        "expanded": full.render("a"),
    }


def component_json(comp: SchemeComponent, double: bool) -> dict:
    out = {"kind": comp.kind, "vars": [f"x{s + 1}" for s in comp.zeros]}
    if comp.equation is not None:
        out["equation"] = comp.equation.render("x")
    out["double"] = double
    return out


def component_from_json(d: dict, n: int) -> SchemeComponent:
    zeros = tuple(int(v[1:]) - 1 for v in d.get("vars", []))
    eq = parse_poly(d["equation"], n) if "equation" in d else None
    return SchemeComponent(n, zeros, eq)


def to_json(a: Analysis) -> dict:
    p = a.presentation
    s = a.scheme
    return {
        "schema": SCHEMA_VERSION,
        "generators": list(p.labels),
        "constraints": ["q"] + [str(c) for c in p.constraints],
        "minors": [_minor_json(*r) for r in a.minors.reduced] if a.minors else [],
        "components": [component_json(c, bool(s.double and s.double[i])) for i, c in enumerate(s.components)],
        "containments": [list(pair) for pair in s.containments],
        "warnings": list(s.warnings),
    }


def golden_report(a: Analysis) -> str:
    return "## minors\n" + render_minors(a) + "\n## scheme\n" + render_scheme(a) + "\n"
