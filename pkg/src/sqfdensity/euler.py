"""Truncated Euler products of local densities, with a certified tail interval.

The product runs over p <= prime_bound with exact local factors.  For
p > P = max(prime_bound, n^2) each factor lies in (0, 1] and satisfies
|log factor| <= TAIL_CONSTANT / p^2, so the neglected tail multiplies the
value by a number in [exp(-TAIL_CONSTANT / P), 1].  Primes in
(prime_bound, n^2] are folded exactly into the lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

from .closed_forms import closed_density
from .families import A1_FIXED_AN_UNIT, AN_UNIT, SigmaFamily

PRECISION = 50
TAIL_CONSTANT = 5

SETS = {
    # constant coefficient a unit
    "const": SigmaFamily(AN_UNIT),
    # a1 and an units; the a_{n-1}, a_n variant has the same local factors
    "1const": SigmaFamily(A1_FIXED_AN_UNIT, b1=1),
    "n1const": SigmaFamily(A1_FIXED_AN_UNIT, b1=1),
}
KINDS = ("sqf", "max")


def primes_upto(N: int) -> list:
    if N < 2:
        return []
    sieve = bytearray([1]) * (N + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(N**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, N + 1, i)))
    return [i for i in range(N + 1) if sieve[i]]


def local_factor(which: str, kind: str, n: int, p: int) -> Fraction:
    if which not in SETS:
        raise ValueError(f"unknown set {which!r}; choose from {sorted(SETS)}")
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; choose from {KINDS}")
    r = closed_density(SETS[which], p, n)
    return r.p_sqf if kind == "sqf" else r.p_max


def _to_decimal(x: Fraction) -> Decimal:
    return Decimal(x.numerator) / Decimal(x.denominator)


@dataclass
class EulerResult:
    which: str
    kind: str
    n: int
    prime_bound: int
    value: Decimal
    lower: Decimal
    upper: Decimal
    factor_count: int
    factors: list = field(default_factory=list, repr=False)

    def contains(self, x) -> bool:
        x = Decimal(str(x)) if not isinstance(x, Decimal) else x
        return self.lower <= x <= self.upper


def euler_constant(which: str, kind: str, n: int, prime_bound: int, keep_factors: bool = False) -> EulerResult:
    if n < 2:
        raise ValueError("n must be at least 2")
    if prime_bound < 2:
        raise ValueError("prime_bound must be at least 2")
    with localcontext() as ctx:
        ctx.prec = PRECISION
        value = Decimal(1)
        factors = []
        ps = primes_upto(prime_bound)
        for p in ps:  # ascending order, deterministic
            f = local_factor(which, kind, n, p)
            if not 0 < f <= 1:
                raise AssertionError(f"local factor {f} at p={p} outside (0, 1]")
            if keep_factors:
                factors.append((p, f))
            value *= _to_decimal(f)
        # exact factors for primes below the tail threshold, lower bound only
        cut = max(prime_bound, n * n)
        extra = Decimal(1)
        for p in primes_upto(cut):
            if p > prime_bound:
                extra *= _to_decimal(local_factor(which, kind, n, p))
        tail = (-Decimal(TAIL_CONSTANT) / Decimal(cut)).exp()
        slack = Decimal(1) - Decimal(10) ** (-(PRECISION - 10))
        lower = value * extra * tail * slack
        upper = value
    return EulerResult(which, kind, n, prime_bound, value, lower, upper, len(ps), factors)
