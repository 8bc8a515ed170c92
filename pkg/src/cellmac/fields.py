"""Coefficient fields for exact linear algebra.

Two kinds of field are supported: the rationals (characteristic 0,
elements are fractions.Fraction) and prime fields GF(p) (elements are
ints in 0..p-1).  A field object carries the characteristic and the
conversions; matrices dispatch on it.
"""

from fractions import Fraction

from .errors import PreconditionError


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """A coefficient field: ℚ when char == 0, GF(char) otherwise."""

    def __init__(self, char=0):
        if char != 0 and not is_prime(char):
            raise PreconditionError(f"characteristic must be 0 or prime, got {char}")
        self.char = char

    def __call__(self, x):
        """Coerce an int or Fraction into this field."""
        if self.char == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.char == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.char}")
            return x.numerator * pow(x.denominator, -1, self.char) % self.char
        return int(x) % self.char

    @property
    def zero(self):
        return Fraction(0) if self.char == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.char == 0 else 1

    def add(self, a, b):
        return a + b if self.char == 0 else (a + b) % self.char

    def sub(self, a, b):
        return a - b if self.char == 0 else (a - b) % self.char

    def mul(self, a, b):
        return a * b if self.char == 0 else (a * b) % self.char

    def neg(self, a):
        return -a if self.char == 0 else (-a) % self.char

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a) if self.char == 0 else pow(int(a), -1, self.char)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __eq__(self, other):
        return isinstance(other, Field) and self.char == other.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return "QQ" if self.char == 0 else f"GF({self.char})"


QQ = Field(0)


def GF(p):
    return Field(p)
