"""Exact arithmetic in Q(zeta_m).

Elements are kept in the power basis 1, z, ..., z^(phi(m)-1) as integer
numerators over one positive common denominator, reduced to lowest terms, so
equality of values is equality of representations.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd


class NotRational(ArithmeticError):
    """A value expected to lie in Q has an irrational component."""


class ConductorMismatch(ValueError):
    pass


def _divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


def _poly_divexact(a, b):
    # integer polynomials, b monic; lowest-first
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        q[i - db] = c
        if c:
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return tuple(q)


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple:
    """Phi_m with integer coefficients, lowest degree first."""
    if m < 1:
        raise ValueError("conductor must be positive")
    num = (-1,) + (0,) * (m - 1) + (1,)
    for d in _divisors(m)[:-1]:
        num = _poly_divexact(num, cyclotomic_poly(d))
    return num


@lru_cache(maxsize=None)
def totient(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple:
    """Row j holds the coordinates of z^j for 0 <= j < 2m."""
    phi = totient(m)
    cyc = cyclotomic_poly(m)
    rows = []
    cur = [1] + [0] * (phi - 1) if phi else []
    for _ in range(2 * m):
        rows.append(tuple(cur))
        # multiply by z and reduce with the monic relation Phi_m(z) = 0
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * cyc[i] for i, c in enumerate(cur)]
    return tuple(rows)


def _reduce(vec, m):
    """Reduce a coefficient list of length < 2m to the power basis."""
    phi = totient(m)
    if len(vec) <= phi:
        return list(vec) + [0] * (phi - len(vec))
    out = list(vec[:phi])
    table = _power_table(m)
    for j in range(phi, len(vec)):
        c = vec[j]
        if c:
            row = table[j]
            for i in range(phi):
                out[i] += c * row[i]
    return out


class CycloNum:
    """An element of Q(zeta_m)."""

    __slots__ = ("m", "num", "den")

    def __init__(self, m: int, num, den: int = 1):
        num = tuple(num)
        if len(num) != totient(m):
            raise ValueError(f"expected {totient(m)} coordinates for conductor {m}")
        if den <= 0:
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            num, den = tuple(-v for v in num), -den
        g = den
        for v in num:
            if g == 1:
                break
            g = gcd(g, v)
        if g > 1:
            num = tuple(v // g for v in num)
            den //= g
        self.m = m
        self.num = num
        self.den = den

    # constructors

    @classmethod
    def from_rational(cls, m: int, value) -> "CycloNum":
        value = Fraction(value)
        phi = totient(m)
        return cls(m, (value.numerator,) + (0,) * (phi - 1), value.denominator)

    @classmethod
    def zero(cls, m: int) -> "CycloNum":
        return cls(m, (0,) * totient(m))

    @classmethod
    def one(cls, m: int) -> "CycloNum":
        return cls.from_rational(m, 1)

    @classmethod
    def from_coords(cls, m: int, coords) -> "CycloNum":
        fr = [Fraction(c) for c in coords]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        return cls(m, tuple(int(c * den) for c in fr), den)

    # inspection

    @property
    def coords(self) -> list:
        return [Fraction(v, self.den) for v in self.num]

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return self.m == other.m and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.num, self.den))

    def __repr__(self):
        return f"CycloNum(m={self.m}, coords={[str(c) for c in self.coords]})"

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other.m != self.m:
                raise ConductorMismatch(f"conductors {self.m} and {other.m} differ")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.from_rational(self.m, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d1, d2 = self.den, other.den
        if d1 == d2:
            return CycloNum(self.m, [a + b for a, b in zip(self.num, other.num)], d1)
        return CycloNum(self.m, [a * d2 + b * d1 for a, b in zip(self.num, other.num)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.m, [-a for a in self.num], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return CycloNum(self.m, [a * other.numerator for a in self.num], self.den * other.denominator)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return cyclo_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = CycloNum.one(self.m)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def mul_root(self, k: int) -> "CycloNum":
        """Multiply by zeta_m^k."""
        m = self.m
        k %= m
        if k == 0:
            return self
        vec = [0] * (k + len(self.num))
        vec[k:] = self.num
        if len(vec) > 2 * m:
            raise AssertionError("unreachable: k < m and len(num) <= m")
        return CycloNum(m, _reduce(vec, m), self.den)

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.m)
        return sum(v * z**i for i, v in enumerate(self.num)) / self.den


def from_power_vector(m: int, vec, den: int = 1) -> CycloNum:
    """sum_j vec[j] zeta_m^j / den for a coefficient list of length < 2m."""
    if len(vec) >= 2 * m:
        raise ValueError("vector too long for one reduction step")
    return CycloNum(m, _reduce(list(vec), m), den)


def root_of_unity(m: int, k: int) -> CycloNum:
    """zeta_m^k, with k taken mod m."""
    if m < 1:
        raise ValueError("conductor must be positive")
    return CycloNum(m, _power_table(m)[k % m])


def cyclo_mul(a: CycloNum, b: CycloNum) -> CycloNum:
    if a.m != b.m:
        raise ConductorMismatch(f"conductors {a.m} and {b.m} differ")
    if a.is_zero() or b.is_zero():
        return CycloNum.zero(a.m)
    an, bn = a.num, b.num
    conv = [0] * (len(an) + len(bn) - 1)
    for i, x in enumerate(an):
        if x:
            for j, y in enumerate(bn):
                if y:
                    conv[i + j] += x * y
    return CycloNum(a.m, _reduce(conv, a.m), a.den * b.den)


def to_rational(a: CycloNum) -> Fraction:
    if not a.is_rational():
        raise NotRational(f"{a!r} is not rational")
    return Fraction(a.num[0], a.den)
