"""Exact scalars: rationals and Laurent polynomials in a single parameter ``q``.

Rationals are :class:`fractions.Fraction`.  A :class:`LaurentScalar` is an
element of Q[q, 1/q], stored as a sorted tuple of ``(exponent, coefficient)``
pairs with no zero coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

__all__ = [
    "Rational",
    "LaurentScalar",
    "QConstraintSet",
    "NotDivisibleError",
    "as_scalar",
    "is_unit_under",
    "split_unit_part",
    "ZERO",
    "ONE",
    "Q",
]

Rational = Fraction

MAX_EXPONENT = 2**31 - 1


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division has a nonzero remainder."""

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


# --- dense univariate helpers over Q (lists, lowest degree first) ------------

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pdivmod(a: list, b: list) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    quot = [Fraction(0)] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        c = a[-1] / lead
        quot[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
        a.pop()
        _trim(a)
    return _trim(quot), a


def _pgcd(a: list, b: list) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def _check_exponent(e: int) -> int:
    if not -MAX_EXPONENT <= e <= MAX_EXPONENT:
        raise OverflowError(f"q exponent {e} out of range")
    return e


@dataclass(frozen=True)
class LaurentScalar:
    """Element of Q[q, 1/q]."""

    terms: tuple = ()

    # construction -----------------------------------------------------------

    @classmethod
    def from_dict(cls, d: Mapping[int, object]) -> "LaurentScalar":
        items = []
        for e, c in d.items():
            c = Fraction(c)
            if c != 0:
                items.append((_check_exponent(int(e)), c))
        items.sort()
        return cls(tuple(items))

    @classmethod
    def _from_clean(cls, d: dict) -> "LaurentScalar":
        """``d`` maps int exponents to Fractions; zero entries are dropped."""
        items = sorted((e, c) for e, c in d.items() if c)
        if items and (items[0][0] < -MAX_EXPONENT or items[-1][0] > MAX_EXPONENT):
            _check_exponent(items[0][0])
            _check_exponent(items[-1][0])
        return cls(tuple(items))

    @classmethod
    def const(cls, c) -> "LaurentScalar":
        c = Fraction(c)
        return cls(((0, c),)) if c else cls(())

    @classmethod
    def q(cls, power: int = 1) -> "LaurentScalar":
        return cls(((_check_exponent(power), Fraction(1)),))

    @classmethod
    def from_poly(cls, coeffs: Iterable, shift: int = 0) -> "LaurentScalar":
        return cls.from_dict({i + shift: c for i, c in enumerate(coeffs)})

    # basic queries ----------------------------------------------------------

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_one(self) -> bool:
        return self.terms == ((0, Fraction(1)),)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def is_laurent_unit(self) -> bool:
        """True for c*q^k with c != 0 (the units of Q[q, 1/q])."""
        return len(self.terms) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.terms[0][1] if self.terms else Fraction(0)

    @property
    def min_exponent(self) -> int:
        return self.terms[0][0]

    @property
    def max_exponent(self) -> int:
        return self.terms[-1][0]

    def poly_part(self) -> list:
        """Dense coefficient list of q^-min_exponent * self (lowest degree first)."""
        if not self.terms:
            return []
        lo = self.min_exponent
        out = [Fraction(0)] * (self.max_exponent - lo + 1)
        for e, c in self.terms:
            out[e - lo] = c
        return out

    def degree_span(self) -> int:
        return self.max_exponent - self.min_exponent if self.terms else -1

    def __call__(self, q0) -> Fraction:
        q0 = Fraction(q0)
        if q0 == 0 and self.terms and self.min_exponent < 0:
            raise ZeroDivisionError("negative power of q evaluated at q = 0")
        return sum((c * q0**e for e, c in self.terms), Fraction(0))

    evaluate = __call__

    # arithmetic -------------------------------------------------------------

    def __add__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        d = dict(self.terms)
        for e, c in other.terms:
            v = d.get(e)
            d[e] = c if v is None else v + c
        return LaurentScalar._from_clean(d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return LaurentScalar()
        d: dict[int, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                v = d.get(e)
                d[e] = c1 * c2 if v is None else v + c1 * c2
        return LaurentScalar._from_clean(d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_laurent_unit():
                raise NotDivisibleError(f"({self})^{k} is not a Laurent polynomial")
            (e, c), = self.terms
            return LaurentScalar(((_check_exponent(e * k), c**k),))
        out = LaurentScalar.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_div(self, other) -> "LaurentScalar":
        """Quotient ``self / other``; raises if ``other`` does not divide ``self``."""
        other = as_scalar(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero LaurentScalar")
        if self.is_zero():
            return LaurentScalar()
        quot, rem = _pdivmod(self.poly_part(), other.poly_part())
        if rem:
            raise NotDivisibleError(
                f"{other} does not divide {self}",
                remainder=LaurentScalar.from_poly(rem, self.min_exponent),
            )
        return LaurentScalar.from_poly(quot, self.min_exponent - other.min_exponent)

    def divides(self, other) -> bool:
        try:
            as_scalar(other).exact_div(self)
        except NotDivisibleError:
            return False
        return True

    __floordiv__ = exact_div

    def __truediv__(self, other):
        return self.exact_div(other)

    def gcd(self, other) -> "LaurentScalar":
        """Greatest common divisor, normalised (see :meth:`normalized`)."""
        other = as_scalar(other)
        if self.is_zero():
            return other.normalized()[1] if other else LaurentScalar()
        if other.is_zero():
            return self.normalized()[1]
        return LaurentScalar.from_poly(_pgcd(self.poly_part(), other.poly_part())).normalized()[1]

    def sqrt(self) -> "LaurentScalar | None":
        """Exact square root in Q[q, 1/q], or None if there is none."""
        if self.is_zero():
            return LaurentScalar()
        lo = self.min_exponent
        if lo % 2 or self.degree_span() % 2:
            return None
        p = self.poly_part()
        lead = p[-1]
        r = _rational_sqrt(lead)
        if r is None:
            return None
        # coefficients of the root, highest degree first
        d = (len(p) - 1) // 2
        root = [Fraction(0)] * (d + 1)
        root[d] = r
        for k in range(1, d + 1):
            # coefficient of q^(2d-k) in root^2 must match p
            acc = p[2 * d - k]
            for i in range(1, k):
                acc -= root[d - i] * root[d - k + i]
            root[d - k] = acc / (2 * r)
        cand = LaurentScalar.from_poly(root, lo // 2)
        return cand if cand * cand == self else None

    def normalized(self) -> tuple["LaurentScalar", "LaurentScalar"]:
        """Split into ``(unit, canonical)`` with ``self == unit * canonical``.

        The canonical form has lowest exponent 0, coprime integer coefficients
        and a positive coefficient on its lowest power of q.
        """
        if self.is_zero():
            return LaurentScalar.const(1), self
        unit_c = _integer_scale(c for _, c in self.terms)
        if self.terms[0][1] < 0:
            unit_c = -unit_c
        shift = self.min_exponent
        canon = LaurentScalar(tuple((e - shift, c * unit_c) for e, c in self.terms))
        return LaurentScalar(((shift, 1 / unit_c),)), canon

    # rendering --------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = _fmt_rat(mag)
            else:
                qp = "q" if e == 1 else f"q^{e}"
                body = qp if mag == 1 else f"{_fmt_rat(mag)}*{qp}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentScalar({str(self)!r})"

    def is_single_term(self) -> bool:
        return len(self.terms) == 1

    def __eq__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)


def _fmt_rat(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _rational_sqrt(c: Fraction) -> Fraction | None:
    from math import isqrt

    if c < 0:
        return None
    n, d = c.numerator, c.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _integer_scale(coeffs: Iterable[Fraction]) -> Fraction:
    """Positive rational s such that s*c are coprime integers."""
    coeffs = list(coeffs)
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    num = 0
    for c in coeffs:
        num = gcd(num, c.numerator * (den // c.denominator))
    return Fraction(den, num)


def as_scalar(x) -> LaurentScalar:
    if isinstance(x, LaurentScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentScalar.const(x)
    return NotImplemented


ZERO = LaurentScalar()
ONE = LaurentScalar.const(1)
Q = LaurentScalar.q()


@dataclass(frozen=True)
class QConstraintSet:
    """Scalars asserted nonzero.  ``q`` itself is always implicitly nonzero."""

    nonzero: tuple = field(default=())

    def __post_init__(self):
        cleaned = tuple(as_scalar(c) for c in self.nonzero)
        for c in cleaned:
            if c.is_zero():
                raise ValueError("a nonvanishing constraint cannot be the zero polynomial")
        object.__setattr__(self, "nonzero", cleaned)

    def admits(self, q0) -> bool:
        """True iff specialising q to ``q0`` keeps every constraint nonzero."""
        q0 = Fraction(q0)
        if q0 == 0:
            return False
        return all(c(q0) != 0 for c in self.nonzero)

    def is_unit(self, s: LaurentScalar) -> bool:
        return is_unit_under(s, self)

    def __iter__(self):
        return iter(self.nonzero)

    def __len__(self):
        return len(self.nonzero)


def split_unit_part(s: LaurentScalar, c: QConstraintSet) -> tuple[LaurentScalar, LaurentScalar]:
    """Write ``s = unit * rest`` where ``unit`` is nonzero under ``c``.

    ``unit`` collects q-powers, the rational content and every factor shared
    with the product of the constraints; ``rest`` is normalised and is
    constant exactly when ``s`` is a unit under ``c``.  No factorisation is
    needed: the gcd with the constraint product is divided out until it is
    trivial.
    """
    s = as_scalar(s)
    if s.is_zero():
        raise ValueError("zero scalar has no unit part")
    prod = ONE
    for con in c.nonzero:
        prod = prod * con
    rest = LaurentScalar.from_poly(s.poly_part())
    while rest.degree_span() > 0:
        g = rest.gcd(prod)
        if g.degree_span() <= 0:
            break
        rest = rest.exact_div(g)
    rest = rest.normalized()[1]
    return s.exact_div(rest), rest


def is_unit_under(s: LaurentScalar, c: QConstraintSet) -> bool:
    """Whether ``s`` is guaranteed nonzero once every constraint in ``c`` is.

    True iff every irreducible factor of ``s`` other than q divides the
    product of the constraints.
    """
    return split_unit_part(s, c)[1].degree_span() == 0
