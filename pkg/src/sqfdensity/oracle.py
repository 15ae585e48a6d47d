"""Ground truth by exhaustive enumeration of a family modulo p^2.

Every f mod p^2 is written f = f0 + p*r with f0, r having digits in [0, p).
For a fixed lower digit f0 the two properties are affine-linear in r:

* Discriminant.  Delta(f0 + p r) = Delta(f0) + p * sum_i dDelta/da_i(f0) r_i
  (mod p^2), and dDelta/da_i(f0) = (Delta(f0 + p e_i) - Delta(f0)) / p (mod p),
  so n + 1 exact determinants per f0 classify all p^n lifts.
* Maximality (Dedekind).  With f0 = prod g_i^e_i mod p, g the radical and
  h = f0/g, lift g and h to G, H and put F = (G H - f)/p = Q - r (mod p),
  Q = (G H - f0)/p.  The order is maximal unless some repeated factor pi
  divides F, i.e. unless r = Q (mod pi).

The per-f0 work is then a few integer matrix products over all r at once.
A plain per-polynomial path (:func:`disc_class`, :func:`is_maximal`) is kept
for cross-checking.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .families import (
    A1_FIXED,
    A1_FIXED_AN_UNIT,
    A1_UNIT_AN_UNIT,
    A1A2_FIXED,
    AN1_UNIT_AN_UNIT,
    AN_FIXED_UNIT,
    AN_UNIT,
    DensityResult,
    SigmaFamily,
)
from .fp_poly import (
    PolyMod,
    disc_mod,
    discriminant,
    divmod_p,
    factor_p,
    gcd_p,
    mul,
    trim,
)
from .series import BudgetExceeded

DEFAULT_BUDGET = 2 * 10**7

UNIT, VAL1, VAL2PLUS = "Unit", "Val1", "Val2Plus"


def default_budget() -> int:
    env = os.environ.get("PADIC_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


# --- per-polynomial reference path ---------------------------------------


def disc_class(f: PolyMod) -> str:
    d = disc_mod(f)
    p = f.p
    if d % p:
        return UNIT
    return VAL1 if d % (p * p) else VAL2PLUS


def dedekind_lifts(fbar: tuple, p: int):
    """Radical g and cofactor h of a monic fbar over F_p, plus the repeated
    irreducible factors."""
    g, h, repeated = (1,), (1,), []
    for pi, e in factor_p(fbar, p):
        g = mul(g, pi, p)
        for _ in range(e - 1):
            h = mul(h, pi, p)
        if e > 1:
            repeated.append(pi)
    return g, h, repeated


def is_maximal(f: PolyMod, lift_g=None, lift_h=None) -> bool:
    """Dedekind's criterion on f mod p^2.

    ``lift_g``/``lift_h`` optionally replace the default lifts (digits in
    [0, p)) of the radical and cofactor by other integer lifts.
    """
    if f.k != 2 or not f.is_monic or f.degree < 1:
        raise ValueError("is_maximal expects a monic polynomial over Z/p^2 of degree >= 1")
    p = f.p
    fbar = tuple(c % p for c in f.coeffs)
    g, h, _ = dedekind_lifts(fbar, p)
    G = tuple(lift_g) if lift_g is not None else g
    H = tuple(lift_h) if lift_h is not None else h
    if any((a - b) % p for a, b in zip(G, g)) or any((a - b) % p for a, b in zip(H, h)):
        raise ValueError("supplied lifts do not reduce to the radical and cofactor")
    GH = mul(G, H)
    n = max(len(GH), len(f.coeffs))
    GH = GH + (0,) * (n - len(GH))
    fc = f.coeffs + (0,) * (n - len(f.coeffs))
    diff = [a - b for a, b in zip(GH, fc)]
    if any(d % p for d in diff):
        raise AssertionError("G*H does not reduce to f mod p")
    F = trim(d // p % p for d in diff)
    common = gcd_p(gcd_p(F, g, p), h, p)
    return len(common) == 1


# --- enumeration plan ----------------------------------------------------


@dataclass(frozen=True)
class EnumerationPlan:
    """Per coefficient position x^j (j < n): allowed lower digits and upper
    digits.  Fixed positions pin both digits; unit positions exclude a zero
    lower digit."""

    family: SigmaFamily
    p: int
    n: int
    low: tuple
    high: tuple

    @property
    def total(self) -> int:
        t = 1
        for lo, hi in zip(self.low, self.high):
            t *= len(lo) * len(hi)
        return t

    def describe(self) -> list:
        p = self.p
        out = []
        for j, (lo, hi) in enumerate(zip(self.low, self.high)):
            if len(lo) == 1 and len(hi) == 1:
                out.append(("fixed", lo[0] + p * hi[0]))
            elif len(lo) == p - 1:
                out.append(("unit", None))
            else:
                out.append(("free", None))
        return out


def make_plan(family: SigmaFamily, p: int, n: int) -> EnumerationPlan:
    family.validate(p, n)
    full = tuple(range(p))
    units = tuple(range(1, p))
    low = [full] * n
    high = [full] * n

    def fix(j, b):
        b %= p * p
        low[j] = (b % p,)
        high[j] = (b // p,)

    kind = family.kind
    # a_k sits at position j = n - k
    if kind in (A1_FIXED, A1A2_FIXED, A1_FIXED_AN_UNIT):
        fix(n - 1, family.b1)
    if kind == A1A2_FIXED:
        fix(n - 2, family.b2)
    if kind == AN_FIXED_UNIT:
        fix(0, family.bn)
    if kind in (AN_UNIT, A1_FIXED_AN_UNIT, A1_UNIT_AN_UNIT, AN1_UNIT_AN_UNIT):
        low[0] = units
    if kind == A1_UNIT_AN_UNIT:
        low[n - 1] = units
    if kind == AN1_UNIT_AN_UNIT:
        low[1] = units
    return EnumerationPlan(family, p, n, tuple(low), tuple(high))


def _lower_digits(plan: EnumerationPlan):
    # lowest coefficient varies fastest
    for rev in product(*reversed(plan.low)):
        yield tuple(reversed(rev))


def _upper_array(plan: EnumerationPlan) -> np.ndarray:
    grids = np.meshgrid(*[np.array(h, dtype=np.int64) for h in plan.high], indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1) if grids else np.zeros((1, 0), np.int64)


def _x_powers_mod(pi: tuple, p: int, n: int) -> np.ndarray:
    """Matrix whose row j is x^j mod pi (coefficients, length deg pi)."""
    d = len(pi) - 1
    rows = []
    for j in range(n):
        mono = (0,) * j + (1,)
        r = divmod_p(mono, pi, p)[1]
        rows.append(list(r) + [0] * (d - len(r)))
    return np.array(rows, dtype=np.int64)


def _block_counts(plan: EnumerationPlan, f0: tuple, R: np.ndarray) -> tuple:
    """(unit, val1, maximal) counts over all upper digits R for lower digit f0."""
    p, n = plan.p, plan.n
    K = R.shape[0]
    mono = f0 + (1,)
    d0 = discriminant(mono)
    if d0 % p:
        return K, 0, K
    # discriminant valuation: Delta(f0 + p r) / p = d0/p + grad . r (mod p)
    grad = np.zeros(n, dtype=np.int64)
    for i in range(n):
        bumped = list(mono)
        bumped[i] += p
        grad[i] = (discriminant(tuple(bumped)) - d0) // p % p
    val1 = int(np.count_nonzero((R @ grad + (d0 // p) % p) % p))
    # maximality
    g, h, repeated = dedekind_lifts(mono, p)
    gh = mul(g, h)
    q_poly = [(a - b) // p for a, b in zip(gh + (0,) * (n + 1 - len(gh)), mono)]
    bad = np.zeros(K, dtype=bool)
    for pi in repeated:
        M = _x_powers_mod(pi, p, n)
        qmod = divmod_p(tuple(c % p for c in q_poly), pi, p)[1]
        qvec = np.array(list(qmod) + [0] * (len(pi) - 1 - len(qmod)), dtype=np.int64)
        hit = np.all((R @ M) % p == qvec, axis=1)
        bad |= hit
    return 0, val1, K - int(np.count_nonzero(bad))


def enumerate_counts(plan: EnumerationPlan, blocks=None) -> tuple:
    """Integer counts (unit, val1, maximal) over the lower-digit blocks with
    indices in ``blocks`` (all blocks if None)."""
    R = _upper_array(plan)
    unit = val1 = maxi = 0
    for idx, f0 in enumerate(_lower_digits(plan)):
        if blocks is not None and idx not in blocks:
            continue
        u, v, m = _block_counts(plan, f0, R)
        unit += u
        val1 += v
        maxi += m
    return unit, val1, maxi


def _worker(args):
    plan, blocks = args
    return enumerate_counts(plan, set(blocks))


def enumerate_density(family: SigmaFamily, p: int, n: int, budget: int | None = None,
                      workers: int = 1) -> DensityResult:
    plan = make_plan(family, p, n)
    if budget is None:
        budget = default_budget()
    total = plan.total
    if total > budget:
        raise BudgetExceeded(total, budget)
    if workers > 1:
        from multiprocessing import Pool

        nblocks = 1
        for lo in plan.low:
            nblocks *= len(lo)
        chunks = [list(range(i, nblocks, workers)) for i in range(workers)]
        with Pool(workers) as pool:
            parts = pool.map(_worker, [(plan, c) for c in chunks])
        unit, val1, maxi = (sum(x) for x in zip(*parts))
    else:
        unit, val1, maxi = enumerate_counts(plan)
    return DensityResult(Fraction(unit, total), Fraction(val1, total), Fraction(maxi, total), "oracle")


def enumerate_density_slow(family: SigmaFamily, p: int, n: int, budget: int = 10**5) -> DensityResult:
    """Per-polynomial enumeration through :func:`disc_class` and :func:`is_maximal`."""
    plan = make_plan(family, p, n)
    if plan.total > budget:
        raise BudgetExceeded(plan.total, budget)
    choices = [[lo_d + p * hi_d for lo_d in lo for hi_d in hi] for lo, hi in zip(plan.low, plan.high)]
    unit = val1 = maxi = 0
    for coeffs in product(*choices):
        f = PolyMod(p, 2, coeffs + (1,))
        c = disc_class(f)
        unit += c == UNIT
        val1 += c == VAL1
        maxi += is_maximal(f)
    t = plan.total
    return DensityResult(Fraction(unit, t), Fraction(val1, t), Fraction(maxi, t), "oracle")
