"""Exact scalar arithmetic: the rationals and prime fields.

A field descriptor owns the arithmetic; scalar values are plain Python
objects (fractions.Fraction for QQ, canonical ints in range(p) for GF(p)).
Every container (LinMap, Subspace, structure data) carries one descriptor,
and operations refuse to mix descriptors, so all scalars in a computation
share one field.
"""

from __future__ import annotations

from fractions import Fraction


class FieldMismatchError(ValueError):
    """Two containers over different field descriptors were combined."""


class Field:
    """Base descriptor.  Subclasses implement exact arithmetic on raw scalars."""

    char = None
    name = "?"

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        raise NotImplementedError

    def parse(self, token):
        raise NotImplementedError

    def fmt(self, a):
        raise NotImplementedError

    def __repr__(self):
        return self.name


class RationalField(Field):
    char = 0
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in QQ")
        return 1 / Fraction(a)

    def from_int(self, n):
        return Fraction(n)

    def parse(self, token):
        return Fraction(token)

    def fmt(self, a):
        return str(a)


class PrimeField(Field):
    """GF(p), elements stored as canonical ints in range(p)."""

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"not a prime: {p}")
        self.p = p
        self.char = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"inverse of 0 in {self.name}")
        return pow(a, self.p - 2, self.p)

    def from_int(self, n):
        return n % self.p

    def parse(self, token):
        # accept "a" or "a/b" with b invertible
        if "/" in token:
            num, den = token.split("/", 1)
            return self.mul(self.from_int(int(num)), self.inv(self.from_int(int(den))))
        return self.from_int(int(token))

    def fmt(self, a):
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()

_gf_cache = {}


def GF(p):
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def same_field(a, b):
    if a != b:
        raise FieldMismatchError(f"field mismatch: {a} vs {b}")
    return a
