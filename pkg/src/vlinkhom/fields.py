"""Exact ground fields: the rationals and prime fields GF(p).

Field elements are plain Python values (``fractions.Fraction`` for QQ,
``int`` in ``[0, p)`` for GF(p)); the field object supplies the arithmetic.
No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError, NotInvertible


class RationalField:
    """The field of rationals; elements are ``Fraction`` in lowest terms."""

    characteristic = 0
    name = "q"

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise NotInvertible("element", a)
        return 1 / Fraction(a)

    def div(self, a, b):
        return a * self.inv(b)

    def is_zero(self, a):
        return a == 0

    def parse(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse rational {text!r}") from exc

    def to_str(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for a prime p; elements are ints in ``[0, p)``."""

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise InputError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"f{p}" if p == 2 else f"fp:{p}"
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise NotInvertible("element", a)
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def parse(self, text):
        try:
            num = text.strip()
            if "/" in num:
                top, bot = num.split("/")
                return self.div(int(top) % self.p, int(bot) % self.p)
            return int(num) % self.p
        except ValueError as exc:
            raise InputError(f"cannot parse GF({self.p}) element {text!r}") from exc

    def to_str(self, a):
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()
GF2 = PrimeField(2)


def field_by_name(name):
    """Resolve the CLI field selector: ``q``, ``f2`` or ``fp:<prime>``."""
    name = name.strip().lower()
    if name == "q":
        return QQ
    if name == "f2":
        return GF2
    if name.startswith("fp:"):
        return PrimeField(int(name[3:]))
    raise InputError(f"unknown field {name!r} (expected q, f2 or fp:P)")
