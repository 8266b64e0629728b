"""Parser and renderer for quadratic algebra presentations.

File format (UTF-8, ``#`` starts a comment)::

    generators: x1 x2 x3 x4
    constraint: q^2 - 1          # asserted nonzero; q != 0 is implicit
    rel: x2*x1 - q*x1*x2
    rel: x4*x1 - x1*x4 - (q - q^-1)*x2*x3

Relations are sums of ``coef * xi * xj`` terms.  Coefficients are Laurent
expressions in ``q`` built from integers, ``/``, ``^`` (or ``**``) and
parentheses.  Multiplication must be written with ``*``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .multipoly import MultiPoly
from .scalars import ONE, LaurentScalar, NotDivisibleError, QConstraintSet

__all__ = [
    "ParseError",
    "Relation",
    "Presentation",
    "parse_presentation",
    "parse_expression",
    "parse_poly",
    "render_presentation",
    "render_relation",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        loc = f"line {line}, column {col}: " if line else ""
        super().__init__(loc + message)


@dataclass(frozen=True)
class Relation:
    """A quadratic relation sum c_ij x_i x_j; indices are 0-based."""

    words: dict = field(hash=False)

    def __post_init__(self):
        for (i, j), c in self.words.items():
            if c.is_zero():
                raise ValueError(f"zero coefficient stored for word x{i + 1}*x{j + 1}")
        if not self.words:
            raise ValueError("relation is zero")

    def coefficient(self, i: int, j: int) -> LaurentScalar:
        return self.words.get((i, j), LaurentScalar())

    def max_index(self) -> int:
        return max(max(w) for w in self.words)


@dataclass(frozen=True)
class Presentation:
    n: int
    relations: tuple
    constraints: QConstraintSet = field(default_factory=QConstraintSet)
    labels: tuple = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"x{i + 1}" for i in range(self.n)))
        object.__setattr__(self, "relations", tuple(self.relations))
        if not self.relations:
            raise ValueError("a presentation needs at least one relation")
        for r in self.relations:
            if r.max_index() >= self.n:
                raise ValueError("relation uses a generator beyond n")

    @property
    def m(self) -> int:
        return len(self.relations)


# --- tokenizer -----------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<gen>x\d+)|(?P<q>q)(?![A-Za-z0-9_])|(?P<pow>\*\*|\^)"
    r"|(?P<op>[-+*/()])|(?P<bad>\S))"
)


def _tokenize(text: str, line: int, col0: int):
    toks = []
    pos = 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None or mt.end() == pos:
            break
        kind = mt.lastgroup
        val = mt.group(kind)
        col = col0 + mt.start(kind) + 1
        if kind == "bad":
            word = re.match(r"[A-Za-z_]\w*", text[mt.start(kind):])
            shown = word.group(0) if word else val
            if word and shown.startswith("x"):
                raise ParseError(f"unknown generator {shown!r}", line, col)
            raise ParseError(f"unexpected {shown!r}", line, col)
        toks.append((kind, val, col))
        pos = mt.end()
    toks.append(("end", "", col0 + len(text) + 1))
    return toks


# --- noncommutative expression values ------------------------------------------------
# dict: word (tuple of 0-based generator indices) -> LaurentScalar


def _nc_add(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for w, c in b.items():
        s = out.get(w, LaurentScalar()) + (c if sign > 0 else -c)
        if s.is_zero():
            out.pop(w, None)
        else:
            out[w] = s
    return out


def _nc_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = w1 + w2
            out[w] = out.get(w, LaurentScalar()) + c1 * c2
    return {w: c for w, c in out.items() if not c.is_zero()}


def _scalar_of(v: dict):
    if not v:
        return LaurentScalar()
    if set(v) == {()}:
        return v[()]
    return None


class _Parser:
    def __init__(self, text: str, n: int | None, line: int, col0: int):
        self.toks = _tokenize(text, line, col0)
        self.i = 0
        self.n = n
        self.line = line

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.line, tok[2])

    def expect_op(self, op):
        t = self.take()
        if t[1] != op:
            raise self.error(f"expected {op!r}, found {t[1] or 'end of line'!r}", t)

    def parse(self) -> dict:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        v = self.expr()
        if self.peek()[0] != "end":
            t = self.peek()
            if t[0] in ("gen", "q", "num", "op") and t[1] not in "+-*/)":
                raise self.error(f"missing '*' before {t[1]!r} (juxtaposition is not multiplication)")
            raise self.error(f"unexpected {t[1]!r}")
        return v

    def expr(self) -> dict:
        v = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            v = _nc_add(v, self.term(), 1 if op == "+" else -1)
        return v

    def term(self) -> dict:
        v = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            tok = self.peek()
            rhs = self.unary()
            if op == "*":
                v = _nc_mul(v, rhs)
            else:
                s = _scalar_of(rhs)
                if s is None:
                    raise self.error("can only divide by a scalar", tok)
                if s.is_zero():
                    raise self.error("division by zero", tok)
                try:
                    inv = s ** -1
                except NotDivisibleError:
                    raise self.error(f"division by {s} leaves Q[q, 1/q]", tok) from None
                v = {w: c * inv for w, c in v.items()}
        return v

    def unary(self) -> dict:
        t = self.peek()
        if t[0] == "op" and t[1] in ("+", "-"):
            self.take()
            v = self.unary()
            return v if t[1] == "+" else {w: -c for w, c in v.items()}
        return self.power()

    def power(self) -> dict:
        base = self.atom()
        if self.peek()[0] == "pow":
            self.take()
            sign = 1
            t = self.peek()
            if t[0] == "op" and t[1] in ("+", "-"):
                self.take()
                sign = -1 if t[1] == "-" else 1
            t = self.take()
            if t[0] != "num":
                raise self.error("exponent must be an integer literal", t)
            k = sign * int(t[1])
            if k < 0:
                s = _scalar_of(base)
                if s is None or not s.is_laurent_unit():
                    raise self.error("negative exponent needs a monomial in q", t)
                return {(): s**k}
            out = {(): ONE}
            for _ in range(k):
                out = _nc_mul(out, base)
            return out
        return base

    def atom(self) -> dict:
        t = self.take()
        kind, val, col = t
        if kind == "num":
            return {(): LaurentScalar.const(int(val))} if int(val) else {}
        if kind == "q":
            return {(): LaurentScalar.q()}
        if kind == "gen":
            k = int(val[1:])
            if self.n is None:
                raise self.error("generators are not allowed here", t)
            if not 1 <= k <= self.n:
                raise self.error(f"unknown generator {val!r}", t)
            return {(k - 1,): ONE}
        if kind == "op" and val == "(":
            v = self.expr()
            self.expect_op(")")
            return v
        raise self.error(f"unexpected {val or 'end of line'!r}", t)


def parse_expression(text: str, n: int | None = None, *, line: int = 0, col0: int = 0) -> dict:
    """Expand an expression into ``{word: coefficient}``; words are index tuples."""
    return _Parser(text, n, line, col0).parse()


def parse_scalar(text: str) -> LaurentScalar:
    v = parse_expression(text)
    return _scalar_of(v)


def parse_poly(text: str, n: int, var: str = "x") -> MultiPoly:
    """Parse a commutative polynomial written in ``x1..xn`` (or ``a1..an``)."""
    if var != "x":
        text = re.sub(rf"\b{re.escape(var)}(\d+)", r"x\1", text)
    terms: dict = {}
    for word, c in parse_expression(text, n).items():
        exps = [0] * n
        for i in word:
            exps[i] += 1
        exps = tuple(exps)
        terms[exps] = terms.get(exps, LaurentScalar()) + c
    return MultiPoly(n, terms)


_LINE = re.compile(r"^\s*(?P<key>[A-Za-z_]+)\s*:(?P<body>.*)$")


def parse_presentation(text: str) -> Presentation:
    """Parse the presentation format into a validated :class:`Presentation`."""
    n = None
    relations = []
    constraints = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        mt = _LINE.match(line)
        if not mt:
            col = len(line) - len(line.lstrip()) + 1
            raise ParseError("expected 'generators:', 'constraint:' or 'rel:'", lineno, col)
        key = mt.group("key")
        body = mt.group("body")
        col0 = mt.start("body")
        if key == "generators":
            if n is not None:
                raise ParseError("generators declared twice", lineno, 1)
            names = body.split()
            if not names:
                raise ParseError("no generators declared", lineno, col0 + 1)
            for k, name in enumerate(names, start=1):
                if name != f"x{k}":
                    col = col0 + body.index(name) + 1
                    raise ParseError(f"generators must be x1..xn in order; got {name!r}", lineno, col)
            n = len(names)
        elif key == "constraint":
            v = parse_expression(body, None, line=lineno, col0=col0)
            s = _scalar_of(v)
            if s is None:
                raise ParseError("malformed constraint: must be a scalar in q", lineno, col0 + 1)
            if s.is_zero():
                raise ParseError("malformed constraint: the zero polynomial cannot be nonzero", lineno, col0 + 1)
            constraints.append(s)
        elif key == "rel":
            if n is None:
                raise ParseError("'rel:' before 'generators:'", lineno, 1)
            v = parse_expression(body, n, line=lineno, col0=col0)
            if not v:
                raise ParseError("relation cancels to zero", lineno, col0 + 1)
            words = {}
            for w, c in v.items():
                if len(w) != 2:
                    kind = {0: "constant", 1: "linear", 3: "cubic"}.get(len(w), f"degree-{len(w)}")
                    shown = "*".join(f"x{i + 1}" for i in w) or str(c)
                    raise ParseError(f"{kind} term {shown!r}; relations must be quadratic", lineno, col0 + 1)
                words[w] = c
            relations.append(Relation(words))
        else:
            raise ParseError(f"unknown directive {key!r}", lineno, 1)
    if n is None:
        raise ParseError("missing 'generators:' line")
    if not relations:
        raise ParseError("no relations given")
    return Presentation(n, tuple(relations), QConstraintSet(tuple(constraints)))


def _coef_word(c: LaurentScalar, word: str, first: bool) -> str:
    neg = c.is_single_term() and c.terms[0][1] < 0
    mag = -c if neg else c
    if mag.is_one():
        body = word
    elif mag.is_single_term():
        body = f"{mag}*{word}"
    else:
        body = f"({mag})*{word}"
    if first:
        return ("-" if neg else "") + body
    return (" - " if neg else " + ") + body


def render_relation(r: Relation, labels=None) -> str:
    out = []
    for k, ((i, j), c) in enumerate(r.words.items()):
        wi = labels[i] if labels else f"x{i + 1}"
        wj = labels[j] if labels else f"x{j + 1}"
        out.append(_coef_word(c, f"{wi}*{wj}", k == 0))
    return "".join(out)


def render_presentation(p: Presentation) -> str:
    lines = ["generators: " + " ".join(p.labels)]
    for c in p.constraints:
        lines.append(f"constraint: {c}")
    for r in p.relations:
        lines.append("rel: " + render_relation(r, p.labels))
    return "\n".join(lines) + "\n"
