"""Decompose the vanishing locus of the maximal minors into components.

The minors of every presentation we care about share one polynomial
cofactor C, so the locus is V(C) together with the coordinate subspaces cut
out by the leftover monomials.  When that shortcut does not apply we case
split on a coordinate (a_v = 0 or a_v != 0) and recurse.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .linmat import LinearFormMatrix, MinorSet, maximal_minors
from .multipoly import MultiPoly, split_quadratic_form
from .scalars import QConstraintSet, split_unit_part

__all__ = [
    "EmptyVarietyError",
    "SchemeComponent",
    "SchemeDescription",
    "strip_units",
    "common_cofactor",
    "monomial_primes",
    "contains",
    "is_double",
    "decompose",
]

log = logging.getLogger(__name__)


class EmptyVarietyError(ValueError):
    """A constant (unit) monomial was given: the variety is empty."""


@dataclass(frozen=True)
class SchemeComponent:
    """V(a_s for s in zeros) intersected with V(equation).

    ``zeros`` are 0-based coordinate indices.  With no equation this is a
    coordinate subspace (or the whole space when ``zeros`` is empty).  An
    equation never involves the coordinates in ``zeros``.
    """

    nvars: int
    zeros: tuple = ()
    equation: MultiPoly | None = None

    def __post_init__(self):
        object.__setattr__(self, "zeros", tuple(sorted(set(self.zeros))))

    @property
    def kind(self) -> str:
        if self.equation is not None:
            return "hypersurface"
        return "subspace" if self.zeros else "ambient"

    def sort_key(self):
        rank = {"subspace": 0, "hypersurface": 1, "ambient": 2}[self.kind]
        eq = self.equation.render() if self.equation is not None else ""
        return (rank, len(self.zeros), self.zeros, eq)

    def contains_point(self, point: Sequence, q0) -> bool:
        if any(point[s] != 0 for s in self.zeros):
            return False
        return self.equation is None or self.equation.evaluate(point, q0) == 0

    def permute(self, perm: Sequence[int]) -> "SchemeComponent":
        eq = self.equation.permute(perm).canonical() if self.equation is not None else None
        return SchemeComponent(self.nvars, tuple(perm[s] for s in self.zeros), eq)

    def render(self, var: str = "x") -> str:
        if self.kind == "ambient":
            return f"P^{self.nvars - 1}"
        parts = [f"{var}{s + 1}" for s in self.zeros]
        if self.equation is not None:
            parts.append(self.equation.render(var))
        return "V(" + ", ".join(parts) + ")"

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class SchemeDescription:
    """Union of components.

    ``containments`` holds index pairs ``(inner, outer)``; ``double`` flags
    components kept although contained in another one because the minors
    vanish to second order along them.
    """

    nvars: int
    components: tuple
    containments: tuple = ()
    double: tuple = ()
    warnings: tuple = ()

    def render(self, var: str = "x") -> str:
        lines = []
        for i, comp in enumerate(self.components):
            line = comp.render(var)
            if self.double and self.double[i]:
                line += "  [double]"
            lines.append(line)
        for a, b in self.containments:
            lines.append(
                f"{self.components[b].render(var)} contains the double line "
                f"{self.components[a].render(var)}"
                if self.double[a] and self.components[a].equation is None
                and self.nvars - len(self.components[a].zeros) == 2
                else f"{self.components[a].render(var)} is contained in {self.components[b].render(var)}"
            )
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines)

    def component_set(self) -> set:
        return {(c.zeros, c.equation.render() if c.equation is not None else None) for c in self.components}


# --- minors to equations --------------------------------------------------------------


def strip_units(ms: MinorSet | Iterable[MultiPoly], c: QConstraintSet,
                warnings: list | None = None) -> list[MultiPoly]:
    """Divide every nonzero minor by the part of its scalar content that is a unit.

    Scalar factors that the constraints do not force to be nonzero are kept
    (multiplied back onto the canonical polynomial) and reported.
    """
    if isinstance(ms, MinorSet):
        polys = [canon.scale(scalar) for _, scalar, canon in ms.reduced]
    else:
        polys = [p for p in ms if p]
    out = []
    seen = set()
    for p in polys:
        scalar, canon = p.normalized()
        _, rest = split_unit_part(scalar, c)
        if rest.degree_span() > 0:
            if warnings is not None:
                warnings.append(f"parameter-dependent factor kept: ({rest}) in {canon.render()}")
            canon = canon.scale(rest)
        key = canon.render()
        if key not in seen:
            seen.add(key)
            out.append(canon)
    return out


@dataclass
class Cofactor:
    cofactor: MultiPoly | None
    monomials: list = field(default_factory=list)
    residuals: list = field(default_factory=list)


def common_cofactor(reduced: Sequence[MultiPoly]) -> Cofactor:
    """Split each polynomial as monomial * residual and test for one shared residual.

    ``cofactor`` is set iff every residual is the same non-constant
    polynomial up to a scalar.
    """
    monos, residuals = [], []
    for p in reduced:
        mono = p.monomial_content()
        monos.append(mono)
        residuals.append(p.divide_monomial(mono).canonical())
    keys = {r.render() for r in residuals}
    shared = None
    if len(keys) == 1 and not residuals[0].is_constant():
        shared = residuals[0]
    return Cofactor(shared, monos, residuals)


def _minimize(sets: Iterable[frozenset]) -> list[frozenset]:
    uniq = sorted(set(sets), key=len)
    out: list[frozenset] = []
    for s in uniq:
        if not any(t <= s for t in out):
            out.append(s)
    return out


def monomial_primes(monomials: Sequence[Sequence[int]]) -> list[frozenset]:
    """Minimal primes of a monomial ideal, as sets of vanishing coordinates.

    These are the minimal hitting sets of the monomial supports (Berge's
    incremental transversal algorithm).
    """
    if not monomials:
        raise ValueError("monomial_primes needs at least one monomial")
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in monomials]
    if any(not s for s in supports):
        raise EmptyVarietyError("a constant monomial generates the unit ideal")
    edges = _minimize(supports)
    transversals = [frozenset()]
    for edge in edges:
        nxt = []
        for t in transversals:
            if t & edge:
                nxt.append(t)
            else:
                nxt.extend(t | {v} for v in edge)
        transversals = _minimize(nxt)
    return sorted(transversals, key=lambda s: (len(s), sorted(s)))


# --- containment ------------------------------------------------------------------------


def _restricted_factors(g: MultiPoly) -> tuple[list[MultiPoly], bool]:
    """Distinct factors of ``g`` whose joint vanishing is V(g); flag completeness.

    ``complete`` means each returned factor divides h iff it vanishes on
    V(h)'s relevant part, i.e. it is irreducible or squarefree.
    """
    deg = g.total_degree()
    if deg <= 1:
        return [g], True
    if deg == 2 and g.homogeneous_degree() == 2:
        fac = split_quadratic_form(g)
        if fac.kind == "square":
            return [fac.factors[0]], True
        if fac.kind == "product":
            return list(dict.fromkeys(fac.factors)), True
        return [g], True
    return [g], False


def contains(a: SchemeComponent, b: SchemeComponent) -> bool | None:
    """Set-theoretic ``a ⊆ b``; ``None`` when the factor class is exceeded."""
    if b.kind == "ambient":
        return True
    if a.kind == "ambient":
        return False
    for s in b.zeros:
        if s not in a.zeros:
            return False
    if b.equation is None:
        return True
    h = b.equation.substitute_zeros(a.zeros)
    if h.is_zero():
        return True
    if a.equation is None:
        return False
    factors, complete = _restricted_factors(a.equation)
    if all(f.divides(h) for f in factors):
        return True
    return False if complete else None


def is_double(comp: SchemeComponent, minors: Sequence[MultiPoly]) -> bool:
    """First-order vanishing of every minor along a coordinate subspace.

    Evaluates f(p + eps*v) to first order at the generic point p of the
    subspace: both f(p) and every directional derivative off the subspace
    must vanish, i.e. f lies in the square of the subspace's ideal.
    """
    if comp.equation is not None or not comp.zeros:
        return False
    for f in minors:
        if not f.substitute_zeros(comp.zeros).is_zero():
            return False
        for s in comp.zeros:
            if not f.diff(s).substitute_zeros(comp.zeros).is_zero():
                return False
    return True


# --- decomposition --------------------------------------------------------------------


class _Solver:
    def __init__(self, n: int, warnings: list, strategy: str = "cofactor"):
        if strategy not in ("cofactor", "split"):
            raise ValueError(f"unknown strategy {strategy!r}")
        self.n = n
        self.warnings = warnings
        self.strategy = strategy

    def subspace(self, zeros) -> list[SchemeComponent]:
        zeros = frozenset(zeros)
        if len(zeros) >= self.n:
            return []  # V(a_1, ..., a_n) is empty in projective space
        return [SchemeComponent(self.n, tuple(zeros))]

    def factor_components(self, f: MultiPoly, zeros: frozenset) -> list[SchemeComponent]:
        f = f.canonical()
        deg = f.total_degree()
        if deg <= 0:
            return []
        if f.is_monomial():
            return self.subspace(zeros | f.support())
        if deg == 1:
            return [SchemeComponent(self.n, tuple(zeros), f)]
        if deg == 2 and f.homogeneous_degree() == 2:
            fac = split_quadratic_form(f)
            if fac.kind in ("square", "product"):
                out = []
                for lin in dict.fromkeys(fac.factors):
                    out.extend(self.factor_components(lin, zeros))
                return out
            if fac.kind == "closure_split":
                self.warnings.append(
                    f"{f.render('x')} splits into two planes only over the algebraic closure"
                )
            return [SchemeComponent(self.n, tuple(zeros), f)]
        self.warnings.append(f"degree-{deg} factor {f.render('x')} kept as an unfactored hypersurface")
        return [SchemeComponent(self.n, tuple(zeros), f)]

    def solve(self, polys: list[MultiPoly], zeros: frozenset, nonzero: frozenset,
              budget: int) -> list[SchemeComponent]:
        # a_v != 0 for v in nonzero: divide those powers out
        cleaned = {}
        for p in polys:
            p = p.substitute_zeros(zeros)
            if p.is_zero():
                continue
            mono = p.monomial_content()
            strip = tuple(e if i in nonzero else 0 for i, e in enumerate(mono))
            p = p.divide_monomial(strip).canonical()
            cleaned.setdefault(p.render(), p)
        polys = list(cleaned.values())
        if not polys:
            return self.subspace(zeros) if zeros else [SchemeComponent(self.n)]
        if any(p.is_constant() for p in polys):
            return []
        cof = common_cofactor(polys)
        if all(r.is_constant() for r in cof.residuals):
            return self._from_monomials(cof.monomials, zeros)
        counts = Counter(
            i for m in cof.monomials for i, e in enumerate(m)
            if e and i not in zeros and i not in nonzero
        )
        split = budget > 0 and bool(counts)
        if not (split and self.strategy == "split"):
            if cof.cofactor is not None:
                out = self.factor_components(cof.cofactor, zeros)
                return out + self._from_monomials(cof.monomials, zeros)
            shared = self._shared_factor(cof.residuals)
            if shared is not None:
                rest = [p.exact_div(shared) for p in polys]
                return self.factor_components(shared, zeros) + self.solve(rest, zeros, nonzero, budget)
        if not split:
            reason = "split budget exhausted" if counts else "no coordinate left to split on"
            self.warnings.append(
                f"{reason}; unresolved system dropped: "
                + "; ".join(p.render("x") for p in polys)
            )
            return []
        best = max(counts.values())
        v = min(i for i, k in counts.items() if k == best)
        log.debug("case split on x%d (zeros=%s, nonzero=%s)", v + 1, sorted(zeros), sorted(nonzero))
        zero_branch = self.solve([p.substitute_zero(v) for p in polys], zeros | {v}, nonzero, budget - 1)
        nonzero_branch = self.solve(polys, zeros, nonzero | {v}, budget - 1)
        return zero_branch + nonzero_branch

    def _from_monomials(self, monomials, zeros) -> list[SchemeComponent]:
        try:
            primes = monomial_primes(monomials)
        except EmptyVarietyError:
            return []
        out = []
        for s in primes:
            out.extend(self.subspace(zeros | s))
        return out

    @staticmethod
    def _shared_factor(residuals: list[MultiPoly]) -> MultiPoly | None:
        nonconst = [r for r in residuals if not r.is_constant()]
        if len(nonconst) != len(residuals):
            return None
        base = min(nonconst, key=lambda r: (r.total_degree(), r.render()))
        factors, _ = _restricted_factors(base)
        for f in factors:
            if f.total_degree() > 0 and all(f.divides(r) for r in nonconst):
                return f
        return None


def decompose(ms: MinorSet | LinearFormMatrix, c: QConstraintSet | None = None,
              split_budget: int | None = None, strategy: str = "cofactor") -> SchemeDescription:
    """Components of the locus where the matrix of linear forms drops rank.

    ``strategy="cofactor"`` factors out a cofactor shared by all minors as
    soon as one exists; ``"split"`` case-splits on coordinates first and only
    falls back to cofactors when no coordinate is left to split on.
    """
    c = c or QConstraintSet()
    D = ms if isinstance(ms, LinearFormMatrix) else ms.matrix
    n = D.cols
    warnings: list[str] = []
    if D.rows < n:
        warnings.append(f"only {D.rows} relation{'s' if D.rows != 1 else ''} for {n} generators: every point qualifies")
        return SchemeDescription(n, (SchemeComponent(n),), (), (False,), tuple(warnings))
    if isinstance(ms, LinearFormMatrix):
        ms = maximal_minors(D)
    budget = n if split_budget is None else split_budget
    minors = strip_units(ms, c, warnings)
    solver = _Solver(n, warnings, strategy)
    raw = solver.solve(minors, frozenset(), frozenset(), budget)
    return _assemble(n, raw, minors, warnings)


def _assemble(n, raw, minors, warnings) -> SchemeDescription:
    comps = sorted(set(raw), key=SchemeComponent.sort_key)
    keep = []
    doubled = set()
    for i, a in enumerate(comps):
        pruned = False
        for j, b in enumerate(comps):
            if i == j:
                continue
            inside = contains(a, b)
            if inside and j < i and contains(b, a):
                continue  # same set written twice; the earlier copy stays
            if inside is None:
                warnings.append(f"cannot decide whether {a} lies in {b}")
            elif inside:
                if is_double(a, minors):
                    doubled.add(i)
                else:
                    pruned = True
                    break
        if not pruned:
            keep.append(i)
    kept = [comps[i] for i in keep]
    double = tuple(i in doubled for i in keep)
    containments = []
    for ia, a in enumerate(kept):
        if not double[ia]:
            continue
        for ib, b in enumerate(kept):
            if ia != ib and contains(a, b):
                containments.append((ia, ib))
    return SchemeDescription(n, tuple(kept), tuple(containments), double, tuple(dict.fromkeys(warnings)))
