"""Sparse polynomials in commuting coordinates a1..an over Laurent scalars.

Terms are kept in graded reverse lexicographic order (a1 > a2 > ... > an),
which renders quadrics the familiar way round, e.g. ``a2*a3 - a1*a4``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import _elim
from .scalars import (
    ONE,
    LaurentScalar,
    NotDivisibleError,
    QConstraintSet,
    as_scalar,
)

__all__ = [
    "Monomial",
    "MultiPoly",
    "QuadraticForm",
    "Factorization",
    "grevlex_key",
    "split_quadratic_form",
    "factored_parts",
    "render_factored",
]

Monomial = tuple  # exponent vector


def grevlex_key(exps: Sequence[int]):
    """Sort key: larger key means larger monomial in graded reverse lex."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_str(exps: Monomial, var: str) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(f"{var}{i + 1}")
        elif e > 1:
            parts.append(f"{var}{i + 1}^{e}")
    return "*".join(parts)


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to scalars."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        self.nvars = nvars
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != nvars or any(e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m} for {nvars} variables")
            c = as_scalar(c)
            if not c.is_zero():
                clean[m] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MultiPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int) -> "MultiPoly":
        """The coordinate ``a_{i+1}`` (0-based index ``i``)."""
        exps = [0] * nvars
        exps[i] = 1
        return cls._raw(nvars, {tuple(exps): ONE})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "MultiPoly":
        return cls(len(exps), {tuple(exps): coeff})

    # queries ------------------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in descending monomial order."""
        return sorted(self._terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def leading_term(self) -> tuple[Monomial, LaurentScalar]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms.items(), key=lambda t: grevlex_key(t[0]))

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def homogeneous_degree(self) -> int | None:
        degs = {sum(m) for m in self._terms}
        return degs.pop() if len(degs) == 1 else None

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self._terms), default=-1)

    def support(self) -> set[int]:
        return {i for m in self._terms for i, e in enumerate(m) if e}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_coeff(self) -> LaurentScalar:
        return self._terms.get((0,) * self.nvars, LaurentScalar())

    def coefficient(self, exps: Sequence[int]) -> LaurentScalar:
        return self._terms.get(tuple(exps), LaurentScalar())

    # arithmetic ----------------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different numbers of variables")
            return other
        s = as_scalar(other)
        if s is NotImplemented:
            return NotImplemented
        return MultiPoly.constant(self.nvars, s)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = dict(self._terms)
        for m, c in other._terms.items():
            s = d.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                d.pop(m, None)
            else:
                d[m] = s
        return MultiPoly._raw(self.nvars, d)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict = {}
        for m1, c1 in self._terms.items():
            t1 = c1.terms
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                dd = acc.get(m)
                if dd is None:
                    dd = acc[m] = {}
                for e1, a in t1:
                    for e2, b in c2.terms:
                        e = e1 + e2
                        v = dd.get(e)
                        dd[e] = a * b if v is None else v + a * b
        out = {}
        for m, dd in acc.items():
            c = LaurentScalar._from_clean(dd)
            if c.terms:
                out[m] = c
        return MultiPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, s) -> "MultiPoly":
        s = as_scalar(s)
        if s.is_zero():
            return MultiPoly.zero(self.nvars)
        return MultiPoly._raw(self.nvars, {m: c * s for m, c in self._terms.items()})

    def divmod(self, other: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        """Division by leading terms; returns ``(quotient, remainder)``.

        Coefficient division must be exact in Q[q, 1/q]; a term whose
        coefficient does not divide is moved to the remainder.
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lm, lc = other.leading_term()
        others = list(other._terms.items())
        quot: dict = {}
        rem: dict = {}
        cur = dict(self._terms)
        while cur:
            m = max(cur, key=grevlex_key)
            c = cur[m]
            if _mono_divides(lm, m):
                try:
                    qc = c.exact_div(lc)
                except NotDivisibleError:
                    qc = None
                if qc is not None:
                    qm = tuple(x - y for x, y in zip(m, lm))
                    quot[qm] = quot.get(qm, LaurentScalar()) + qc
                    del cur[m]
                    for om, oc in others:
                        if om == lm:
                            continue
                        t = _mono_mul(qm, om)
                        v = cur.get(t)
                        v = -(qc * oc) if v is None else v - qc * oc
                        if v.is_zero():
                            cur.pop(t, None)
                        else:
                            cur[t] = v
                    continue
            rem[m] = c
            del cur[m]
        return MultiPoly(self.nvars, quot), MultiPoly(self.nvars, rem)

    def exact_div(self, other) -> "MultiPoly":
        """Exact quotient; raises :class:`NotDivisibleError` carrying the remainder."""
        other = self._coerce(other)
        q, r = self.divmod(other)
        if r:
            raise NotDivisibleError(
                f"{other} does not divide {self} (remainder {r})", remainder=r
            )
        return q

    def divides(self, other: "MultiPoly") -> bool:
        return not other.divmod(self)[1]

    # structure -------------------------------------------------------------------

    def monomial_content(self) -> Monomial:
        """Componentwise minimum of the exponent vectors."""
        if not self._terms:
            raise ValueError("monomial content of the zero polynomial")
        ms = list(self._terms)
        return tuple(min(m[i] for m in ms) for i in range(self.nvars))

    def divide_monomial(self, mono: Sequence[int]) -> "MultiPoly":
        mono = tuple(mono)
        out = {}
        for m, c in self._terms.items():
            if not _mono_divides(mono, m):
                raise NotDivisibleError(f"monomial {mono} does not divide {self}")
            out[tuple(x - y for x, y in zip(m, mono))] = c
        return MultiPoly._raw(self.nvars, out)

    def scalar_content(self) -> LaurentScalar:
        """Normalised gcd of all coefficients (a Laurent scalar)."""
        g = LaurentScalar()
        for c in self._terms.values():
            g = g.gcd(c)
            if g.degree_span() == 0:
                break
        return g

    def normalized(self) -> tuple[LaurentScalar, "MultiPoly"]:
        """Return ``(scalar, canonical)`` with ``self == scalar * canonical``.

        ``canonical`` is the same polynomial up to a nonzero element of Q(q):
        its coefficients have no common polynomial factor in q, the leading
        coefficient has lowest q-exponent 0 and all rational coefficients are
        coprime integers with a positive lowest-q coefficient on the leading
        term.  Two polynomials are proportional over Q(q) iff their canonical
        forms coincide.
        """
        if not self._terms:
            return ONE, self
        content = self.scalar_content()
        prim = {m: c.exact_div(content) for m, c in self._terms.items()}
        lead_m = max(prim, key=grevlex_key)
        lead = prim[lead_m]
        from .scalars import _integer_scale

        s = _integer_scale(coef for c in prim.values() for _, coef in c.terms)
        if lead.terms[0][1] < 0:
            s = -s
        unit = LaurentScalar(((-lead.min_exponent, s),))
        canon = MultiPoly._raw(self.nvars, {m: c * unit for m, c in prim.items()})
        inv_unit = LaurentScalar(((lead.min_exponent, 1 / s),))
        return content * inv_unit, canon

    def canonical(self) -> "MultiPoly":
        return self.normalized()[1]

    def substitute_zero(self, var: int) -> "MultiPoly":
        """Set coordinate ``var`` (0-based) to zero; the variable count is kept."""
        if not 0 <= var < self.nvars:
            raise IndexError(var)
        return MultiPoly._raw(self.nvars, {m: c for m, c in self._terms.items() if m[var] == 0})

    def substitute_zeros(self, vars_: Iterable[int]) -> "MultiPoly":
        vs = set(vars_)
        return MultiPoly._raw(
            self.nvars, {m: c for m, c in self._terms.items() if not any(m[v] for v in vs)}
        )

    def diff(self, var: int) -> "MultiPoly":
        out = {}
        for m, c in self._terms.items():
            if m[var]:
                nm = list(m)
                nm[var] -= 1
                out[tuple(nm)] = c * m[var]
        return MultiPoly._raw(self.nvars, out)

    def specialize_q(self, q0) -> "MultiPoly":
        """Substitute a rational value for q in every coefficient."""
        return MultiPoly(self.nvars, {m: LaurentScalar.const(c(q0)) for m, c in self._terms.items()})

    def evaluate(self, point: Sequence, q0=None):
        """Value at a point.

        With ``q0`` the result is a Fraction; otherwise the point must be
        rational and the result is a :class:`LaurentScalar`.
        """
        if len(point) != self.nvars:
            raise ValueError("point has the wrong length")
        if q0 is None:
            total = LaurentScalar()
            for m, c in self._terms.items():
                v = Fraction(1)
                for x, e in zip(point, m):
                    if e:
                        v *= Fraction(x) ** e
                if v:
                    total = total + c * v
            return total
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c(q0)
            for x, e in zip(point, m):
                if e:
                    v *= x**e
            total += v
        return total

    def compose(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Substitute ``images[i]`` for coordinate i."""
        nv = images[0].nvars
        out = MultiPoly.zero(nv)
        for m, c in self._terms.items():
            t = MultiPoly.constant(nv, c)
            for img, e in zip(images, m):
                if e:
                    t = t * img**e
            out = out + t
        return out

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        """Rename coordinate i to ``perm[i]``."""
        out = {}
        for m, c in self._terms.items():
            nm = [0] * self.nvars
            for i, e in enumerate(m):
                nm[perm[i]] = e
            out[tuple(nm)] = c
        return MultiPoly._raw(self.nvars, out)

    # comparison / rendering -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        s = as_scalar(other)
        if s is NotImplemented:
            return NotImplemented
        return self._terms == MultiPoly.constant(self.nvars, s)._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def render(self, var: str = "a") -> str:
        """Expanded canonical text, e.g. ``a2*a3^3 - a1*a3^2*a4``."""
        if not self._terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.items()):
            mono = _mono_str(m, var)
            neg = False
            if c.is_single_term() and c.terms[0][1] < 0:
                neg, c = True, -c
            if not mono:
                body = str(c) if c.is_single_term() else f"({c})"
            elif c.is_one():
                body = mono
            elif c.is_single_term():
                body = f"{c}*{mono}"
            else:
                body = f"({c})*{mono}"
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"MultiPoly({self.render()!r})"


# --- quadratic forms ---------------------------------------------------------


@dataclass(frozen=True)
class QuadraticForm:
    """Symmetric Gram matrix G with form = sum_ij G[i][j] a_i a_j."""

    gram: tuple

    @classmethod
    def from_poly(cls, f: MultiPoly) -> "QuadraticForm":
        if f.is_zero() or f.homogeneous_degree() != 2:
            raise ValueError(f"not a nonzero quadratic form: {f}")
        n = f.nvars
        g = [[LaurentScalar() for _ in range(n)] for _ in range(n)]
        for m, c in f.terms.items():
            idx = [i for i, e in enumerate(m) for _ in range(e)]
            i, j = idx
            if i == j:
                g[i][i] = c
            else:
                half = c * Fraction(1, 2)
                g[i][j] = half
                g[j][i] = half
        return cls(tuple(tuple(r) for r in g))

    @property
    def n(self) -> int:
        return len(self.gram)

    def to_poly(self) -> MultiPoly:
        n = self.n
        d = {}
        for i in range(n):
            for j in range(n):
                c = self.gram[i][j]
                if c:
                    m = [0] * n
                    m[i] += 1
                    m[j] += 1
                    m = tuple(m)
                    d[m] = d.get(m, LaurentScalar()) + c
        return MultiPoly(n, d)

    def rank(self) -> int:
        return _elim.rank(self.gram, ONE)


@dataclass(frozen=True)
class Factorization:
    """Result of splitting a quadratic form.

    ``kind`` is ``"irreducible"`` (rank >= 3), ``"square"`` (rank 1),
    ``"product"`` (rank 2, explicit factors) or ``"closure_split"`` (rank 2,
    factors only exist after adjoining a square root).  For the explicit kinds
    ``f == scalar * prod(factors)``.
    """

    kind: str
    rank: int
    scalar: LaurentScalar
    factors: tuple

    def expand(self) -> MultiPoly:
        out = None
        for fac in self.factors:
            out = fac if out is None else out * fac
        return out.scale(self.scalar)


def _linear_from(coeffs: Sequence[LaurentScalar], n: int) -> MultiPoly:
    d = {}
    for j, c in enumerate(coeffs):
        if c:
            m = [0] * n
            m[j] = 1
            d[tuple(m)] = c
    return MultiPoly(n, d)


def split_quadratic_form(f: MultiPoly | QuadraticForm, c: QConstraintSet | None = None) -> Factorization:
    """Classify a quadratic form by the rank of its Gram matrix over Q(q).

    Rank 1 gives the square of a linear form, rank 2 a product of two linear
    forms when the needed square root exists in Q[q, 1/q], rank >= 3 an
    irreducible quadric.  The rank is the generic one over Q(q), so the
    constraint set ``c`` does not change the answer.
    """
    form = f if isinstance(f, QuadraticForm) else QuadraticForm.from_poly(f)
    poly = f if isinstance(f, MultiPoly) else form.to_poly()
    n = form.n
    g = form.gram
    r = form.rank()
    if r >= 3:
        return Factorization("irreducible", r, ONE, (poly,))
    diag = next((i for i in range(n) if g[i][i]), None)
    if r == 1:
        # g_ii * f = (sum_j g_ij a_j)^2
        lin = _linear_from(g[diag], n).canonical()
        scalar = poly.exact_div(lin * lin).constant_coeff()
        return Factorization("square", 1, scalar, (lin, lin))
    # rank 2
    if diag is None:
        i, j = next((i, j) for i in range(n) for j in range(n) if g[i][j])
        other = _linear_from([g[i][k] if k != i else LaurentScalar() for k in range(n)], n).canonical()
        rest = poly.exact_div(other)
        s, rest = rest.normalized()
        return _product(poly, rest, other)
    i = diag
    gii = g[i][i]
    lin = _linear_from(g[i], n)
    # gii * f = lin^2 - R, R of rank 1
    rem = lin * lin - poly.scale(gii)
    if rem.is_zero():  # pragma: no cover - would mean rank 1
        raise AssertionError("rank mismatch in split_quadratic_form")
    rem_fac = split_quadratic_form(rem)
    if rem_fac.kind != "square":  # pragma: no cover
        raise AssertionError("residual of a rank-2 form must have rank 1")
    m = rem_fac.factors[0]
    root = rem_fac.scalar.sqrt()
    if root is None:
        return Factorization("closure_split", 2, ONE, (poly,))
    l1 = (lin - m.scale(root)).canonical()
    l2 = (lin + m.scale(root)).canonical()
    return _product(poly, l1, l2)


def _product(poly: MultiPoly, l1: MultiPoly, l2: MultiPoly) -> Factorization:
    a, b = sorted([l1, l2], key=lambda p: grevlex_key(p.leading_term()[0]), reverse=True)
    scalar = poly.exact_div(a * b).constant_coeff()
    return Factorization("product", 2, scalar, (a, b))



def factored_parts(p: MultiPoly) -> tuple[LaurentScalar, Monomial, list[MultiPoly]]:
    """``p == scalar * monomial * prod(cofactors)``, cofactors canonical."""
    scalar, canon = p.normalized()
    mono = canon.monomial_content()
    residual = canon.divide_monomial(mono)
    if residual.is_constant():
        return scalar * residual.constant_coeff(), mono, []
    cofactors = [residual]
    if residual.total_degree() == 2 and residual.homogeneous_degree() == 2:
        fac = split_quadratic_form(residual)
        if fac.kind in ("square", "product"):
            scalar = scalar * fac.scalar
            cofactors = list(fac.factors)
    return scalar, mono, cofactors


def render_factored(p: MultiPoly, var: str = "a", with_scalar: bool = True) -> str:
    """Factored text such as ``(q^2 - 1)*a3^2*(a2*a3 - a1*a4)``."""
    if p.is_zero():
        return "0"
    scalar, mono, cofactors = factored_parts(p)
    parts = []
    sign = ""
    if with_scalar and not scalar.is_one():
        if scalar == -1:
            sign = "-"
        elif scalar.is_single_term():
            parts.append(str(scalar))
        else:
            parts.append(f"({scalar})")
    mono_s = _mono_str(mono, var)
    if mono_s:
        parts.append(mono_s)
    for c in cofactors:
        parts.append(f"({c.render(var)})" if len(c) > 1 else c.render(var))
    return sign + ("*".join(parts) if parts else "1")
