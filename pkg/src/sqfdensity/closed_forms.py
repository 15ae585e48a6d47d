"""Closed-form densities for each family, with the special functions they use.

Every case split below is written out branch by branch; the character-sum
engine is the independent route that cross-checks them.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .characters import (
    OnePlusY,
    c_chi,
    char_exp,
    characters,
    legendre,
)
from .cyclotomic import CycloNum, root_of_unity, to_rational
from .families import (
    A1_FIXED,
    A1_FIXED_AN_UNIT,
    A1_UNIT_AN_UNIT,
    A1A2_FIXED,
    ALL,
    AN1_UNIT_AN_UNIT,
    AN_FIXED_UNIT,
    AN_UNIT,
    DensityResult,
    SigmaFamily,
)


def _require_odd(p):
    if p == 2:
        raise ValueError("this function is defined for odd primes only")


def _ceil_half(k):
    return (k + 1) // 2


# --- special functions ---------------------------------------------------


def iota(n: int, p: int, b: int) -> int:
    if n % p:
        return 0
    return p - 1 if b % p == 0 else -1


def delta(n: int, p: int, b: int) -> int:
    """The three-case Gauss-sum value; zero exactly when n is even and b = 0."""
    _require_odd(p)
    if n < 0:
        raise ValueError("n must be non-negative")
    b %= p
    m1 = legendre(-1, p)
    if n % 2:
        s = m1 ** ((n - 1) // 2)
        if b:
            return -s * p ** ((n + 1) // 2)
        return s * (p - 1) * p ** ((n + 1) // 2)
    return legendre(b, p) * m1 ** (n // 2) * p ** (n // 2 + 1)


def h_func(n: int, p: int, t: int, b: int) -> int:
    """Sum over 0 <= k <= n-2 of delta terms, split on whether p divides n - k."""
    _require_odd(p)
    two = legendre(2, p)
    total = 0
    for k in range(n - 1):
        sign = (-1) ** _ceil_half(k)
        tw = two ** (k // 2)
        if (n - k) % p:
            total += sign * legendre(n - k, p) * tw * delta(_ceil_half(k) + t + 1, p, b)
        else:
            total += sign * tw * p * delta(_ceil_half(k) + t, p, b)
    return total


def kappa(n: int, p: int, b: int) -> int:
    _require_odd(p)
    b %= p
    if b == 0:
        raise ValueError("kappa needs a unit argument")
    g = gcd(n, p - 1)
    # b is an n-th power iff b^((p-1)/g) = 1
    return g - 1 if pow(b, (p - 1) // g, p) == 1 else -1


def eta(p: int, b: int) -> int:
    return p - 1 if b % p == 0 else -1


# --- families ------------------------------------------------------------


def _a1_fixed(p, n, b1, with_iota=True):
    P = Fraction(p)
    if (n, p) == (2, 2):
        if b1 % 2:
            return DensityResult(Fraction(1), Fraction(0), Fraction(1), "closed")
        return DensityResult(Fraction(0), Fraction(0), Fraction(1, 2), "closed")
    pmax = 1 - 1 / P**2
    p0 = 1 - 1 / P
    if p == 2:
        p1 = Fraction(0)
    elif n == 2:
        p1 = (P - 1) / P**2
    else:
        sgn = (-1) ** n
        p1 = (P - 1) ** 2 / (P**2 * (P + 1)) - sgn * (P - 1) ** 2 / (P**n * (P + 1))
        if with_iota:
            p1 += sgn * (P - 1) * iota(n, p, b1) / P**n
    return DensityResult(p0, p1, pmax, "closed")


def _all(p, n):
    # the a1-average of the a1-fixed formula: the iota term averages to zero,
    # and at (n, p) = (2, 2) the two parities average to (1/2, 3/4)
    if (n, p) == (2, 2):
        return DensityResult(Fraction(1, 2), Fraction(0), Fraction(3, 4), "closed")
    return _a1_fixed(p, n, 0, with_iota=False)


def _a1a2_fixed(p, n, b1, b2):
    base = _a1_fixed(p, n, b1)
    if p == 2:
        return base
    P = Fraction(p)
    h = n // 2
    two = legendre(2, p)
    if n % p == 0:
        if b1 % p:
            return base
        d = delta(_ceil_half(n) + 1, p, 2 * b2)
        corr = (-1) ** h * two**h * d
        pmax = base.p_max + Fraction(corr) / P ** (n + h)
        p0 = base.p0_sqf + Fraction(corr) / P**n
        p1 = base.p1_sqf + (-1) ** n * (1 - 1 / P) / P**n * h_func(n, p, 1, 2 * b2)
        return DensityResult(p0, p1, pmax, "closed")
    inv_n = pow(n, -1, p)
    x = (2 * b2 - (1 - inv_n) * b1 * b1) % p
    ln = legendre(n, p)
    corr = (-1) ** h * ln * two**h * delta(_ceil_half(n), p, x)
    pmax = base.p_max + Fraction(corr) / P ** (n + h)
    p0 = base.p0_sqf + Fraction(corr) / P**n
    p1 = base.p1_sqf + (-1) ** n * (1 - 1 / P) / P**n * ln * h_func(n, p, 0, x)
    return DensityResult(p0, p1, pmax, "closed")


def _an_unit(p, n):
    P = Fraction(p)
    q = P**2 + P + 1
    if n % 2:
        pmax = 1 - 1 / q + 1 / (q * P ** (3 * (n - 1) // 2))
    else:
        pmax = 1 - 1 / q - (P + 1) / (q * P ** (3 * n // 2 - 1))
    sgn = (-1) ** n
    p0 = P / (P + 1) * (1 - sgn / P**n)
    if p == 2:
        p1 = Fraction(0)
    else:
        p1 = (P - 1) ** 2 / (P * (P + 1) ** 2) - sgn / P**n * (
            (n - 1) * (P - 1) ** 2 / (P + 1) - P * (P - 1) * (P + 3) / (P + 1) ** 2
        )
    return DensityResult(p0, p1, pmax, "closed")


def _an_fixed_unit(p, n, bn):
    base = _an_unit(p, n)
    if p == 2:
        return base
    P = Fraction(p)
    k = kappa(n, p, bn)
    if n % 2:
        return DensityResult(base.p0_sqf, base.p1_sqf - (P - 1) / P**n * k, base.p_max, "closed")
    ls = legendre(bn, p)
    pmax = base.p_max - ls / P ** (3 * n // 2 - 1)
    p0 = base.p0_sqf - ls / P ** (n - 1)
    p1 = base.p1_sqf + (P - 1) / P**n * k - (P - 1) ** 2 / P**n * (Fraction(n, 2) - 1) * ls
    return DensityResult(p0, p1, pmax, "closed")


def _a1_fixed_an_unit(p, n, b1):
    base = _an_unit(p, n)
    P = Fraction(p)
    e = eta(p, b1)
    sgn = (-1) ** n
    h = n // 2
    if p == 2:
        pmax = base.p_max - Fraction(sgn * e, 2 ** (n + h - 1))
        p0 = base.p0_sqf - Fraction(sgn * e, 2 ** (n - 1))
        return DensityResult(p0, Fraction(0), pmax, "closed")
    pmax = base.p_max + sgn * e / ((P - 1) * P ** (n + h - 1))
    p0 = base.p0_sqf + sgn * e / ((P - 1) * P ** (n - 1))
    p1 = base.p1_sqf - sgn * (n - 1 - p * (n // p)) * e / P**n
    return DensityResult(p0, p1, pmax, "closed")


def closed_density(family: SigmaFamily, p: int, n: int) -> DensityResult:
    family.validate(p, n)
    kind = family.kind
    if kind == ALL:
        return _all(p, n)
    if kind == A1_FIXED:
        return _a1_fixed(p, n, family.b1 % p)
    if kind == A1A2_FIXED:
        return _a1a2_fixed(p, n, family.b1 % p, family.b2 % p)
    if kind == AN_UNIT:
        return _an_unit(p, n)
    if kind == AN_FIXED_UNIT:
        return _an_fixed_unit(p, n, family.bn % p)
    if kind == A1_FIXED_AN_UNIT:
        return _a1_fixed_an_unit(p, n, family.b1 % p)
    if kind in (A1_UNIT_AN_UNIT, AN1_UNIT_AN_UNIT):
        # both double-unit families have the densities of a1 = 1 with an a unit
        return _a1_fixed_an_unit(p, n, 1)
    raise ValueError(kind)  # pragma: no cover


# --- intermediate character sums for the a1, a2 family --------------------


def _y2_nontrivial(p):
    """Characters of 1 + y F_p[y]/(y^3) that are nontrivial on y^2 + 1."""
    g = OnePlusY(p)
    gen = g.elem((0, 1))
    return [chi for chi in characters(g) if char_exp(chi, gen) != 0]


def step1_char_sums(p: int, n: int, b1: int, b2: int) -> DensityResult:
    """The corrections (P0, P1, Pmax) that turn the a1-fixed densities into the
    (a1, a2)-fixed ones, by direct summation over characters nontrivial on
    y^2 + 1.  Zero for p = 2."""
    if p == 2:
        return DensityResult(Fraction(0), Fraction(0), Fraction(0), "closed")
    g = OnePlusY(p)
    gamma0 = g.elem((b1, b2))
    h = n // 2
    zero = CycloNum.zero(p)
    s_top = zero
    s_one = zero
    for chi in _y2_nontrivial(p):
        w = root_of_unity(p, -char_exp(chi, gamma0))
        c1, c2 = c_chi(chi), c_chi(chi**2)
        s_top = s_top + w * c1 ** (n - 2 * h) * c2**h
        inner = zero
        for k in range(n - 1):
            term = c_chi(chi ** (n - k)) * c1 ** (k - 2 * (k // 2)) * c2 ** (k // 2)
            inner = inner + (term if _ceil_half(k) % 2 == 0 else -term)
        s_one = s_one + w * inner
    P = Fraction(p)
    top = to_rational(s_top)
    one = to_rational(s_one)
    pmax = (-1) ** h * top / P ** (n + h)
    p0 = (-1) ** h * top / P**n
    p1 = (-1) ** n * (1 - 1 / P) / P**n * one
    return DensityResult(p0, p1, pmax, "closed")


def step2_literal(p: int, gamma, ms) -> CycloNum:
    """sum over chi nontrivial on y^2 + 1 of chi(gamma)^{-1} prod_j C_{chi^{m_j}}."""
    _require_odd(p)
    g = OnePlusY(p)
    gam = g.elem(gamma)
    total = CycloNum.zero(p)
    for chi in _y2_nontrivial(p):
        term = root_of_unity(p, -char_exp(chi, gam))
        for m in ms:
            term = term * c_chi(chi**m)
        total = total + term
    return total


def step2_char_sum(p: int, gamma, ms) -> int:
    """Closed form of :func:`step2_literal` (an integer)."""
    _require_odd(p)
    a1, a2 = gamma[0] % p, gamma[1] % p
    ms = list(ms)
    k = len(ms)
    t = sum(1 for m in ms if m % p == 0)
    m_sigma = sum(ms)
    m_pi = 1
    for m in ms:
        if m % p:
            m_pi *= m
    if m_sigma % p == 0:
        if a1:
            return 0
        return legendre(m_pi, p) * p**t * delta(k - t + 1, p, 2 * a2)
    inv = pow(m_sigma, -1, p)
    x = (2 * a2 - (1 - inv) * a1 * a1) % p
    return legendre(m_sigma * m_pi, p) * p**t * delta(k - t, p, x)
