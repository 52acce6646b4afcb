"""Polynomial rings, sparse exact polynomials, and monomial orders.

A polynomial is stored as a map from exponent tuples to nonzero field
coefficients.  Values are immutable after construction and safe to share.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .fields import Field, FieldError

GREVLEX = "grevlex"
LEX = "lex"

MAX_EXPONENT = 10**6


class RingMismatchError(ValueError):
    pass


class ParseError(ValueError):
    pass


def order_key(order: str, nvars: int):
    """Sort key on exponent tuples; larger key = larger monomial."""
    if order == GREVLEX:
        def key(e):
            return (sum(e), tuple(-x for x in reversed(e)))
    elif order == LEX:
        def key(e):
            return e
    else:
        raise ValueError(f"unknown monomial order {order!r}")
    return key


def monomial_cmp(u, v, order: str) -> int:
    """Total order on equal-length exponent vectors: -1, 0, or 1."""
    if len(u) != len(v):
        raise ValueError("exponent vectors have different lengths")
    key = order_key(order, len(u))
    ku, kv = key(tuple(u)), key(tuple(v))
    return (ku > kv) - (ku < kv)


class PolyRing:
    """k[x_1..x_m] with a fixed monomial order."""

    def __init__(self, field: Field, variables, order: str = GREVLEX):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be distinct")
        order_key(order, len(variables))  # validates
        self.field = field
        self.variables = variables
        self.order = order
        self.key = order_key(order, len(variables))
        self._zero_exp = (0,) * len(variables)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {self._zero_exp: self.field.one})

    def const(self, c) -> "Poly":
        c = self.field.of(c)
        return Poly(self, {self._zero_exp: c} if c else {})

    def var(self, i: int) -> "Poly":
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): self.field.one})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exp, coeff=None) -> "Poly":
        exp = tuple(exp)
        if len(exp) != self.nvars or any(x < 0 for x in exp):
            raise ValueError("bad exponent vector")
        c = self.field.one if coeff is None else self.field.of(coeff)
        return Poly(self, {exp: c} if c else {})

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.variables == other.variables and self.order == other.order)

    def __hash__(self):
        return hash((self.field, self.variables, self.order))

    def __repr__(self):
        f = "Q" if self.field.p is None else f"F{self.field.p}"
        return f"{f}[{','.join(self.variables)}] {self.order}"


class Poly:
    """Sparse multivariate polynomial with exact coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- queries ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_exp in self.terms)

    def is_unit_constant(self) -> bool:
        return len(self.terms) == 1 and self.ring._zero_exp in self.terms

    def lead(self):
        """(exponent, coeff) of the leading term under the ring order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=self.ring.key)
        return e, self.terms[e]

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def constant_value(self):
        return self.terms.get(self.ring._zero_exp, self.ring.field.zero)

    # -- arithmetic ------------------------------------------------------
    def _check(self, other: "Poly"):
        if self.ring != other.ring:
            raise RingMismatchError("polynomials from different rings")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.ring.field
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = F.add(t.get(e, F.zero), c)
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return Poly(self.ring, t)

    def __neg__(self) -> "Poly":
        F = self.ring.field
        return Poly(self.ring, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.ring.field
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if any(x > MAX_EXPONENT for x in e):
                    raise OverflowError("exponent exceeds supported bound")
                v = F.add(t.get(e, F.zero), F.mul(c1, c2))
                if v:
                    t[e] = v
                else:
                    t.pop(e, None)
        return Poly(self.ring, t)

    def scale(self, c) -> "Poly":
        F = self.ring.field
        c = F.of(c)
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {e: F.mul(v, c) for e, v in self.terms.items()})

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        r = self.ring.one()
        for _ in range(n):
            r = r * self
        return r

    def __eq__(self, other):
        return isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- text form -------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.ring.variables
        parts = []
        for e in sorted(self.terms, key=self.ring.key, reverse=True):
            c = self.terms[e]
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            cs = str(c)
            if factors and cs == "1":
                body = "*".join(factors)
            elif factors and cs == "-1":
                body = "-" + "*".join(factors)
            else:
                body = "*".join([cs] + factors)
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    __repr__ = __str__


class IdealGens:
    """An ideal a = (a_1, .., a_n) given by its generator list."""

    def __init__(self, ring: PolyRing, gens):
        gens = [g for g in gens]
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
        gens = [g for g in gens if not g.is_zero()]
        self.ring = ring
        self.gens = gens

    @property
    def n(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")" if self.gens else "(0)"

    __repr__ = __str__

    def power(self, k: int) -> "IdealGens":
        if k == 0:
            return IdealGens(self.ring, [self.ring.one()])
        out = list(self.gens)
        for _ in range(k - 1):
            out = [a * b for a in out for b in self.gens]
            # dedupe identical products (a_i a_j = a_j a_i)
            seen, uniq = set(), []
            for p in out:
                key = frozenset(p.terms.items())
                if key not in seen:
                    seen.add(key)
                    uniq.append(p)
            out = uniq
        return IdealGens(self.ring, out)

    def sum(self, other: "IdealGens") -> "IdealGens":
        return IdealGens(self.ring, list(self.gens) + list(other.gens))

    def product(self, other: "IdealGens") -> "IdealGens":
        return IdealGens(self.ring, [a * b for a in self.gens for b in other.gens])


# ---------------------------------------------------------------------------
# Parsing: `ring F101[x,y,z] grevlex;`, polynomials `3*x^2*y - 1/2*z`.
# ---------------------------------------------------------------------------

_RING_RE = re.compile(
    r"^\s*(?:ring\s+)?(Q|F(\d+))\s*\[\s*([A-Za-z_]\w*(?:\s*,\s*[A-Za-z_]\w*)*)\s*\]"
    r"(?:\s+(grevlex|lex))?\s*;?\s*$")


def parse_ring(text: str) -> PolyRing:
    m = _RING_RE.match(text)
    if not m:
        raise ParseError(f"bad ring literal: {text!r}")
    field = Field() if m.group(1) == "Q" else Field(int(m.group(2)))
    variables = [v.strip() for v in m.group(3).split(",")]
    order = m.group(4) or GREVLEX
    return PolyRing(field, variables, order)


_TOKEN_RE = re.compile(r"\s*(\d+/\d+|\d+|[A-Za-z_]\w*|\^|\*|\+|-|\(|\))")


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or not m.group(1):
            raise ParseError(f"bad character at position {pos} in {text!r}")
        out.append((m.group(1), pos))
        pos = m.end()
    return out


class _PolyParser:
    """Recursive-descent parser: expr := term (('+'|'-') term)*."""

    def __init__(self, ring: PolyRing, tokens):
        self.ring = ring
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expr(self) -> Poly:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.next()[0] == "-":
                sign = -sign
        p = self.term().scale(sign)
        while self.peek() in ("+", "-"):
            sign = 1
            while self.peek() in ("+", "-"):
                if self.next()[0] == "-":
                    sign = -sign
            p = p + self.term().scale(sign)
        return p

    def term(self) -> Poly:
        p = self.factor()
        while self.peek() == "*":
            self.next()
            p = p * self.factor()
        return p

    def factor(self) -> Poly:
        tok, pos = self.next() if self.i < len(self.toks) else (None, -1)
        if tok is None:
            raise ParseError("unexpected end of polynomial")
        if tok == "(":
            p = self.expr()
            if self.peek() != ")":
                raise ParseError(f"missing ')' near position {pos}")
            self.next()
        elif tok[0].isdigit():
            c = Fraction(tok) if "/" in tok else int(tok)
            if self.ring.field.p is not None and isinstance(c, Fraction):
                if c.denominator % self.ring.field.p == 0:
                    raise ParseError(f"denominator not invertible at position {pos}")
                c = c.numerator * pow(c.denominator, -1, self.ring.field.p)
            p = self.ring.const(c)
        elif tok[0].isalpha() or tok[0] == "_":
            try:
                idx = self.ring.variables.index(tok)
            except ValueError:
                raise ParseError(f"unknown variable {tok!r} at position {pos}") from None
            p = self.ring.var(idx)
        else:
            raise ParseError(f"unexpected token {tok!r} at position {pos}")
        if self.peek() == "^":
            self.next()
            etok, epos = self.next() if self.i < len(self.toks) else (None, -1)
            if etok is None or not etok.isdigit():
                raise ParseError(f"bad exponent near position {epos}")
            p = p ** int(etok)
        return p


def parse_poly(ring: PolyRing, text: str) -> Poly:
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty polynomial")
    parser = _PolyParser(ring, toks)
    p = parser.expr()
    if parser.i != len(toks):
        raise ParseError(f"trailing input at position {toks[parser.i][1]} in {text!r}")
    return p


def parse_ideal(ring: PolyRing, text: str) -> IdealGens:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError(f"ideal literal must be parenthesized: {text!r}")
    inner = text[1:-1].strip()
    if not inner or inner == "0":
        return IdealGens(ring, [])
    # split on commas at depth 0
    parts, depth, cur = [], 0, []
    for ch in inner:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return IdealGens(ring, [parse_poly(ring, p) for p in parts])
