"""Exact scalar arithmetic over the rationals and prime fields.

Scalars are plain Python values (``fractions.Fraction`` over Q, ``int``
residues in ``[0, p)`` over F_p); a :class:`Field` object owns all the
arithmetic.  Both representations are canonical, so scalar equality is
structural and values can be hashed freely.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import BadFieldTag, BadScalar, DivisionByZero, UnsupportedField

#: Primes up to this bound get their m-th roots by scanning all residues;
#: larger primes go through the multiplicative-group route.
DEFAULT_ENUMERATION_BOUND = 10**6

# Deterministic Miller-Rabin witness set, valid for every n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?\Z")
_RESIDUE_RE = re.compile(r"\d+\Z")
_FIELD_TAG_RE = re.compile(r"F(\d+)\Z")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def integer_nth_root(n: int, m: int) -> tuple[int, bool]:
    """Floor of the m-th root of n >= 0, with an exactness flag."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if m < 1:
        raise ValueError("m must be positive")
    if n in (0, 1) or m == 1:
        return n, True
    lo, hi = 1, 1 << ((n.bit_length() + m - 1) // m)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**m <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo, lo**m == n


class Field:
    """Common interface for the two supported exact fields."""

    characteristic: int
    tag: str

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def scalar(self, value):
        """Coerce an int (or an existing scalar) into canonical form."""
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def div(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def pow(self, a, k: int):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, value) -> str:
        raise NotImplementedError

    def sort_key(self, value):
        """Total order on scalars, used only to make outputs deterministic."""
        raise NotImplementedError

    def nth_roots(self, m: int, c) -> list:
        """All field solutions of x**m = c, sorted by :meth:`sort_key`."""
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({self.tag!r})"


class Rationals(Field):
    """The field Q with Fraction values (always reduced, denominator > 0)."""

    characteristic = 0
    tag = "Q"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def scalar(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise BadScalar(f"cannot coerce {value!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if not b:
            raise DivisionByZero("division by zero in Q")
        return a / b

    def inv(self, a):
        if not a:
            raise DivisionByZero("zero is not invertible in Q")
        return 1 / a

    def pow(self, a, k: int):
        if k < 0 and not a:
            raise DivisionByZero("zero is not invertible in Q")
        return a**k

    def parse(self, text: str):
        if not _RATIONAL_RE.fullmatch(text):
            raise BadScalar(f"not a rational literal: {text!r}")
        return Fraction(text)

    def format(self, value) -> str:
        return str(value)

    def sort_key(self, value):
        return value

    def nth_roots(self, m: int, c) -> list:
        if m < 1:
            raise ValueError("m must be positive")
        if not c:
            return [Fraction(0)]
        num, den = c.numerator, c.denominator
        if num < 0 and m % 2 == 0:
            return []
        root_num, num_ok = integer_nth_root(abs(num), m)
        root_den, den_ok = integer_nth_root(den, m)
        if not (num_ok and den_ok):
            return []
        root = Fraction(-root_num if num < 0 else root_num, root_den)
        if m % 2 == 1:
            return [root]
        return [-root, root]

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    """The field F_p with int residues in [0, p)."""

    def __init__(self, p: int, enumeration_bound: int = DEFAULT_ENUMERATION_BOUND):
        if not is_prime(p):
            raise UnsupportedField(f"{p} is not prime")
        self.characteristic = p
        self.enumeration_bound = enumeration_bound

    @property
    def tag(self) -> str:
        return f"F{self.characteristic}"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 % self.characteristic

    def scalar(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise BadScalar(f"cannot coerce {value!r} into {self.tag}")
        return value % self.characteristic

    def add(self, a, b):
        return (a + b) % self.characteristic

    def sub(self, a, b):
        return (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b % self.characteristic

    def neg(self, a):
        return -a % self.characteristic

    def div(self, a, b):
        if not b:
            raise DivisionByZero(f"division by zero in {self.tag}")
        return a * pow(b, -1, self.characteristic) % self.characteristic

    def inv(self, a):
        if not a:
            raise DivisionByZero(f"zero is not invertible in {self.tag}")
        return pow(a, -1, self.characteristic)

    def pow(self, a, k: int):
        if k < 0 and not a:
            raise DivisionByZero(f"zero is not invertible in {self.tag}")
        return pow(a, k, self.characteristic)

    def parse(self, text: str):
        if not _RESIDUE_RE.fullmatch(text):
            raise BadScalar(f"not a residue literal: {text!r}")
        value = int(text)
        if value >= self.characteristic:
            raise BadScalar(f"residue {value} out of range for {self.tag}")
        return value

    def format(self, value) -> str:
        return str(value)

    def sort_key(self, value):
        return value

    def nth_roots(self, m: int, c) -> list:
        if m < 1:
            raise ValueError("m must be positive")
        p = self.characteristic
        if not c:
            return [0]
        if p <= self.enumeration_bound:
            return [x for x in range(1, p) if pow(x, m, p) == c]
        return self._roots_via_generator(m, c)

    def _roots_via_generator(self, m: int, c) -> list:
        # x^m = c has gcd(m, p-1) solutions iff c^((p-1)/g) = 1, found by
        # taking a discrete log with respect to a primitive root.
        p = self.characteristic
        q = p - 1
        g = math.gcd(m, q)
        if pow(c, q // g, p) != 1:
            return []
        gamma = self._primitive_root()
        t = self._discrete_log(gamma, c)
        step = q // g
        y0 = (t // g) * pow(m // g, -1, step) % step
        return sorted(pow(gamma, y0 + k * step, p) for k in range(g))

    def _primitive_root(self) -> int:
        p = self.characteristic
        q = p - 1
        factors = _prime_factors(q)
        for a in range(2, p):
            if all(pow(a, q // f, p) != 1 for f in factors):
                return a
        raise AssertionError("no primitive root found for a prime modulus")

    def _discrete_log(self, base: int, target: int) -> int:
        # Baby-step giant-step over the full multiplicative group.
        p = self.characteristic
        order = p - 1
        step = math.isqrt(order) + 1
        table = {}
        cur = 1
        for j in range(step):
            table.setdefault(cur, j)
            cur = cur * base % p
        giant = pow(base, -step, p)
        cur = target
        for i in range(step + 1):
            if cur in table:
                return (i * step + table[cur]) % order
            cur = cur * giant % p
        raise AssertionError("discrete log must exist for a primitive root")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("F", self.characteristic))


def _prime_factors(n: int) -> list[int]:
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


#: Shared instance of the rational field.
QQ = Rationals()


def field_from_tag(tag: str) -> Field:
    """Resolve a field tag string: ``"Q"`` or ``"F<p>"`` with p prime."""
    if tag == "Q":
        return QQ
    match = _FIELD_TAG_RE.fullmatch(tag)
    if not match:
        raise BadFieldTag(f"unknown field tag {tag!r}")
    p = int(match.group(1))
    if not is_prime(p):
        raise BadFieldTag(f"field tag {tag!r} does not name a prime field")
    return PrimeField(p)
