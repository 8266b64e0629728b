"""The b-side of a point: the kernel of D(a).

For a point a of the scheme, D(a) b = 0 has a nonzero solution b, the partner
coordinate of the point module.  Kernels are computed by fraction-free
elimination, so a symbolic q (or symbolic free coordinates on a coordinate
subspace) never introduces fractions of polynomials.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _elim
from .linmat import LinearFormMatrix
from .multipoly import MultiPoly
from .scalars import ONE, LaurentScalar, QConstraintSet
from .scheme import SchemeComponent

__all__ = [
    "FiberResult",
    "kernel_at",
    "generic_kernel",
    "sample_on_component",
    "sample_off_components",
]


@dataclass(frozen=True)
class FiberResult:
    """Rank of D at a point and a basis of its kernel.

    ``field`` names where the entries live: ``"Q"`` (q specialised),
    ``"Q(q)"`` (symbolic q, entries are Laurent scalars) or
    ``"Q(q)(a)"`` (entries are polynomials in the free coordinates).
    """

    rank: int
    kernel_basis: tuple
    field: str = "Q"

    @property
    def beta(self):
        """The kernel vector when it is one-dimensional, else None."""
        return self.kernel_basis[0] if len(self.kernel_basis) == 1 else None


def _normalize_rational(v: list) -> tuple:
    lead = next(x for x in v if x != 0)
    return tuple(Fraction(x) / lead for x in v)


def _normalize_laurent(v: list) -> tuple:
    g = LaurentScalar()
    for x in v:
        g = g.gcd(x)
    lead = next(x for x in v if x)
    scaled = [x.exact_div(g) for x in v]
    unit, _ = lead.exact_div(g).normalized()
    return tuple(x.exact_div(unit) for x in scaled)


def _normalize_poly(v: list) -> tuple:
    nz = [x for x in v if x]
    nvars = nz[0].nvars
    mono = tuple(min(x.monomial_content()[i] for x in nz) for i in range(nvars))
    g = LaurentScalar()
    for x in nz:
        g = g.gcd(x.scalar_content())
    gpoly = MultiPoly.constant(nvars, g)
    out = [x.divide_monomial(mono).exact_div(gpoly) if x else x for x in v]
    lead = next(x for x in out if x)
    _, lc = lead.leading_term()
    unit, _ = lc.normalized()
    return tuple(x.exact_div(MultiPoly.constant(nvars, unit)) if x else x for x in out)


def _check_q(q0, constraints: QConstraintSet | None):
    if q0 is None:
        return None
    q0 = Fraction(q0)
    if not (constraints or QConstraintSet()).admits(q0):
        raise ValueError(f"q = {q0} violates the nonvanishing constraints")
    return q0


def kernel_at(D: LinearFormMatrix, alpha: Sequence, q0=None,
              constraints: QConstraintSet | None = None) -> FiberResult:
    """Solve D(alpha) b = 0 exactly for a rational point alpha.

    With ``q0`` the computation is over Q; without it q stays symbolic.
    Kernel vectors are scaled so their first nonzero entry is 1 (over Q) or
    a canonical unit (over Q[q, 1/q]).
    """
    alpha = [Fraction(x) for x in alpha]
    if len(alpha) != D.cols:
        raise ValueError(f"alpha has {len(alpha)} coordinates, expected {D.cols}")
    if all(x == 0 for x in alpha):
        raise ValueError("alpha = 0 is not a projective point")
    q0 = _check_q(q0, constraints)
    M = D.at(alpha, q0)
    n = D.cols
    if q0 is not None:
        basis = _elim.nullspace(M, n, Fraction(1))
        return FiberResult(n - len(basis), tuple(_normalize_rational(v) for v in basis), "Q")
    basis = _elim.nullspace(M, n, ONE)
    return FiberResult(n - len(basis), tuple(_normalize_laurent(v) for v in basis), "Q(q)")


def generic_kernel(D: LinearFormMatrix, component: SchemeComponent, q0=None,
                   constraints: QConstraintSet | None = None) -> FiberResult:
    """Kernel at the generic point of a coordinate subspace.

    The free coordinates stay symbolic; entries of the kernel vectors are
    polynomials in them (over Q, or over Q[q, 1/q] when q is symbolic).
    """
    if component.equation is not None:
        raise ValueError("symbolic fibers are only supported on coordinate subspaces")
    q0 = _check_q(q0, constraints)
    Dz = D
    for s in component.zeros:
        Dz = Dz.substitute_zero(s)
    if q0 is not None:
        Dz = Dz.specialize_q(q0)
    n = D.cols
    one = MultiPoly.constant(D.nvars, ONE)
    rows = [list(r) for r in Dz.entries]
    basis = _elim.nullspace(rows, n, one, lambda a, b: a.exact_div(b))
    return FiberResult(n - len(basis), tuple(_normalize_poly(v) for v in basis), "Q(q)(a)")


# --- sampling ----------------------------------------------------------------------


def _rand_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        if x or not nonzero:
            return x


def _rational_sqrt(x: Fraction) -> Fraction | None:
    from math import isqrt

    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    return Fraction(rn, rd) if rn * rn == n and rd * rd == d else None


def _univariate(f: MultiPoly, point: list, k: int, q0) -> list[Fraction]:
    """Coefficients (low to high) of f restricted to the line varying coordinate k."""
    coeffs: dict[int, Fraction] = {}
    for m, c in f.terms.items():
        v = c(q0)
        for i, e in enumerate(m):
            if i != k and e:
                v *= point[i] ** e
        coeffs[m[k]] = coeffs.get(m[k], Fraction(0)) + v
    deg = max(coeffs) if coeffs else 0
    return [coeffs.get(i, Fraction(0)) for i in range(deg + 1)]


def _point_on_hypersurface(f: MultiPoly, free: list[int], q0, rng: random.Random,
                           tries: int = 400) -> list[Fraction] | None:
    n = f.nvars
    linear_vars = [k for k in free if f.degree_in(k) == 1]
    for _ in range(tries):
        point = [Fraction(0)] * n
        for i in free:
            point[i] = _rand_rational(rng)
        if linear_vars:
            k = rng.choice(linear_vars)
            c = _univariate(f, point, k, q0)
            if len(c) < 2 or c[1] == 0:
                continue
            point[k] = -c[0] / c[1]
        else:
            k = rng.choice(free)
            c = _univariate(f, point, k, q0)
            c += [Fraction(0)] * (3 - len(c))
            if len(c) > 3:
                continue
            a2, a1, a0 = c[2], c[1], c[0]
            if a2 == 0:
                if a1 == 0:
                    continue
                point[k] = -a0 / a1
            else:
                r = _rational_sqrt(a1 * a1 - 4 * a2 * a0)
                if r is None:
                    continue
                point[k] = (-a1 + (r if rng.random() < 0.5 else -r)) / (2 * a2)
        if any(point) and f.evaluate(point, q0) == 0:
            return point
    return None


def _through_point(f: MultiPoly, p0: list, free: list[int], q0, rng: random.Random):
    """Second intersection of a random line through p0 with the quadric f."""
    n = f.nvars
    for _ in range(100):
        v = [Fraction(0)] * n
        for i in free:
            v[i] = _rand_rational(rng)
        fv = f.evaluate(v, q0)
        if fv == 0:
            continue
        grad = sum(f.diff(i).evaluate(p0, q0) * v[i] for i in free)
        t = -grad / fv
        pt = [a + t * b for a, b in zip(p0, v)]
        if any(pt):
            return pt
    return None


def sample_on_component(comp: SchemeComponent, q0, rng: random.Random) -> list[Fraction]:
    """A random rational point of the component (q specialised to q0)."""
    n = comp.nvars
    free = [i for i in range(n) if i not in comp.zeros]
    if comp.equation is None:
        while True:
            point = [Fraction(0)] * n
            for i in free:
                point[i] = _rand_rational(rng)
            if any(point):
                return point
    f = comp.equation
    pt = _point_on_hypersurface(f, free, q0, rng)
    if pt is not None and f.total_degree() == 2 and rng.random() < 0.5:
        other = _through_point(f, pt, free, q0, rng)
        if other is not None:
            pt = other
    if pt is None:
        raise RuntimeError(f"could not find a rational point on {comp}")
    return pt


def sample_off_components(components: Sequence[SchemeComponent], n: int, q0,
                          rng: random.Random) -> list[Fraction]:
    """A random rational point lying on none of the components."""
    while True:
        point = [_rand_rational(rng) for _ in range(n)]
        if any(point) and not any(c.contains_point(point, q0) for c in components):
            return point
