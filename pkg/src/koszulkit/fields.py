"""Exact coefficient fields: prime fields F_p and the rationals."""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


class Field:
    """Exact field arithmetic; elements are ints (F_p) or Fractions (Q)."""

    def __init__(self, p: int | None = None):
        if p is not None:
            if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
                raise FieldError(f"{p} is not prime")
        self.p = p

    @property
    def kind(self) -> str:
        return "rationals" if self.p is None else "prime"

    def of(self, x):
        """Coerce an int/Fraction into canonical form."""
        if self.p is None:
            return Fraction(x)
        return int(x) % self.p

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("field inverse of zero")
        if self.p is None:
            return 1 / a
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    def fmt(self, a) -> str:
        return str(a)


QQ = Field()
F101 = Field(101)
