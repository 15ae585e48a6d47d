"""Truncated power series with coefficients in Q(zeta_m), and the generating
series L_{chi o psi}(T) = sum_u chi(psi(u)) T^deg(u) over monic u.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characters import (
    PHI1,
    PHI1_UNIT,
    PHI2,
    EV0,
    LOGDERIV0_UNIT,
    TRIVIAL_HOM,
    TRIVIAL_HOM_UNIT,
    Character,
    GroupElem,
    HomTag,
    c_chi,
    char_exp,
    hom_payload,
)
from .cyclotomic import CycloNum, root_of_unity
from .fp_poly import monic_polys

# The all-one function, on all monic u or on those with x not dividing u.
ALL_ONE = TRIVIAL_HOM
ALL_ONE_UNIT = TRIVIAL_HOM_UNIT


class NonUnitConstantTerm(ArithmeticError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"enumeration needs {required} candidates, budget is {budget}")
        self.required = required
        self.budget = budget


class UnsupportedSeries(ValueError):
    pass


@dataclass(frozen=True)
class TruncSeries:
    """sum_{k <= trunc} coeffs[k] T^k."""

    m: int
    trunc: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError("need exactly trunc + 1 coefficients")

    @classmethod
    def from_values(cls, m: int, trunc: int, values) -> "TruncSeries":
        """Build from CycloNums or rationals; missing high terms are zero."""
        out = []
        for v in list(values)[: trunc + 1]:
            out.append(v if isinstance(v, CycloNum) else CycloNum.from_rational(m, v))
        out += [CycloNum.zero(m)] * (trunc + 1 - len(out))
        return cls(m, trunc, tuple(out))

    @classmethod
    def one(cls, m: int, trunc: int) -> "TruncSeries":
        return cls.from_values(m, trunc, [1])

    def __getitem__(self, k: int) -> CycloNum:
        return self.coeffs[k] if 0 <= k <= self.trunc else CycloNum.zero(self.m)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        _check(self, other)
        return TruncSeries(self.m, self.trunc, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        return TruncSeries(self.m, self.trunc, tuple(c * other for c in self.coeffs))

    def truncate(self, trunc: int) -> "TruncSeries":
        return TruncSeries.from_values(self.m, trunc, self.coeffs)


def _check(a: TruncSeries, b: TruncSeries):
    if a.m != b.m or a.trunc != b.trunc:
        raise ValueError(f"series shapes differ: (m={a.m}, N={a.trunc}) vs (m={b.m}, N={b.trunc})")


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    _check(a, b)
    N = a.trunc
    out = [CycloNum.zero(a.m)] * (N + 1)
    nz_b = [(j, y) for j, y in enumerate(b.coeffs) if not y.is_zero()]
    for i, x in enumerate(a.coeffs):
        if x.is_zero():
            continue
        for j, y in nz_b:
            if i + j > N:
                break
            out[i + j] = out[i + j] + x * y
    return TruncSeries(a.m, N, tuple(out))


def series_recip(s: TruncSeries) -> TruncSeries:
    """1/s, requiring constant term exactly 1."""
    if s.coeffs[0] != 1:
        raise NonUnitConstantTerm("reciprocal needs constant term 1")
    N = s.trunc
    nz = [(j, c) for j, c in enumerate(s.coeffs) if j and not c.is_zero()]
    out = [CycloNum.one(s.m)] + [None] * N
    for k in range(1, N + 1):
        acc = CycloNum.zero(s.m)
        for j, c in nz:
            if j > k:
                break
            if not out[k - j].is_zero():
                acc = acc - c * out[k - j]
        out[k] = acc
    return TruncSeries(s.m, N, tuple(out))


def subst_zT2(s: TruncSeries, z) -> TruncSeries:
    """s(z T^2): coefficient k moves to degree 2k with factor z^k; overflow dropped."""
    z = Fraction(z)
    N = s.trunc
    out = [CycloNum.zero(s.m)] * (N + 1)
    for k in range(N // 2 + 1):
        out[2 * k] = s.coeffs[k] * z**k
    return TruncSeries(s.m, N, tuple(out))


def geometric(m: int, N: int, ratio: CycloNum, sign: int = 1) -> TruncSeries:
    """1/(1 - sign*ratio*T) truncated at N."""
    vals = [CycloNum.one(m)]
    for _ in range(N):
        vals.append(vals[-1] * ratio * sign)
    return TruncSeries(m, N, tuple(vals))


# --- generating series ---------------------------------------------------

_NONTRIVIAL_TAGS = (PHI1, PHI2, EV0, PHI1_UNIT, LOGDERIV0_UNIT)


def l_series_closed(tag: HomTag, chi: Character, p: int, N: int, m: int | None = None) -> TruncSeries:
    """Closed form of L_{chi o psi}(T) truncated at degree N.

    ``m`` is the conductor of the coefficients; it defaults to the exponent
    of chi's group and may be any multiple of it.
    """
    if m is None:
        m = chi.group.exponent
    trivial = chi.is_trivial or tag in (ALL_ONE, ALL_ONE_UNIT)
    if trivial and tag in (ALL_ONE, ALL_ONE_UNIT) and not chi.is_trivial:
        raise UnsupportedSeries("the all-one series takes only the trivial character")
    if trivial:
        # 1/(1 - pT), times (1 - T) on the unit domain
        vals = [Fraction(p) ** k for k in range(N + 1)]
        if tag.unit_domain:
            vals = [vals[0]] + [vals[k] - vals[k - 1] for k in range(1, N + 1)]
        return TruncSeries.from_values(m, N, vals)
    if tag not in _NONTRIVIAL_TAGS:
        raise UnsupportedSeries(f"no closed form for {tag.name}")
    if chi.group != tag.group(p):
        raise UnsupportedSeries("character lives on the wrong group")
    if tag in (PHI1, EV0):
        return TruncSeries.one(m, N)
    if tag in (PHI1_UNIT, LOGDERIV0_UNIT):
        return TruncSeries.from_values(m, N, [1, -1])
    if tag == PHI2:
        c = c_chi(chi)
        if c.m != m:
            c = _embed(c, m)
        return TruncSeries.from_values(m, N, [CycloNum.one(m), c])
    raise UnsupportedSeries(tag.name)  # pragma: no cover


def _embed(a: CycloNum, m: int) -> CycloNum:
    """Embed Q(zeta_a.m) into Q(zeta_m) for a.m | m."""
    if m % a.m:
        raise ValueError(f"cannot embed conductor {a.m} into {m}")
    step = m // a.m
    out = CycloNum.zero(m)
    for i, v in enumerate(a.num):
        if v:
            out = out + root_of_unity(m, i * step) * Fraction(v, a.den)
    return out


def l_series_brute(tag: HomTag, chi: Character, p: int, N: int, budget: int = 2 * 10**7,
                   m: int | None = None) -> TruncSeries:
    """L_{chi o psi}(T) by summing chi(psi(u)) over every monic u of degree <= N."""
    if m is None:
        m = chi.group.exponent
    required = sum(p**d for d in range(N + 1))
    if required > budget:
        raise BudgetExceeded(required, budget)
    group = tag.group(p)
    if chi.group != group:
        raise UnsupportedSeries("character lives on the wrong group")
    step = m // group.exponent
    vals = []
    for d in range(N + 1):
        counts = [0] * m
        for u in monic_polys(p, d):
            if tag.unit_domain and d >= 1 and u[0] == 0:
                continue
            gamma = GroupElem(group, hom_payload(tag, u, p))
            counts[char_exp(chi, gamma) * step % m] += 1
        total = CycloNum.zero(m)
        for k, c in enumerate(counts):
            if c:
                total = total + root_of_unity(m, k) * c
        vals.append(total)
    return TruncSeries(m, N, tuple(vals))
