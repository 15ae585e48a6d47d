"""Densities from an admissible triple (G, psi, w) by character sums.

For a weight w on a finite abelian group G with Fourier transform w_hat,

    P0   = sum_chi w_hat(chi) [L_chi(T) / L_chi^2(T^2)]_n
    P1   = (1 - 1/p) sum_chi w_hat(chi)
               [sum_c chi(psi(x+c))^2 / (1 + chi(psi(x+c)) T) * L_chi(T) / L_chi^2(T^2)]_(n-2)
    Pmax = sum_chi w_hat(chi) [L_chi(T) / L_chi^2(T^2/p)]_n

where L_chi stands for the generating series of chi o psi, the c-sum runs
over F_p (over F_p^x when psi is only defined on u with x not dividing u),
and P1 = 0 when p = 2.

Each w_hat(chi) handled here is a monomial  q * zeta_m^k  with q rational, so
the weighted sum is accumulated as integer vectors in Z[z]/(z^m - 1) by cyclic
rotation and reduced modulo the cyclotomic polynomial once at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .characters import (
    EV0,
    LOGDERIV0_UNIT,
    PHI1,
    PHI1_UNIT,
    PHI2,
    TRIVIAL_HOM,
    TRIVIAL_HOM_UNIT,
    AdditiveFp,
    Character,
    GroupElem,
    GroupSpec,
    HomTag,
    MultiplicativeFp,
    OnePlusY,
    Trivial,
    char_exp,
    characters,
    hom_payload,
)
from .cyclotomic import CycloNum, from_power_vector, root_of_unity, to_rational
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
from .series import (
    TruncSeries,
    l_series_closed,
    series_mul,
    series_recip,
    subst_zT2,
)

SQF0, SQF1, MAX = "sqf0", "sqf1", "max"


@dataclass(frozen=True)
class AdmissibleTriple:
    """(G, psi, w_hat) for one family at (p, n).

    ``w_hat`` maps each character index to a monomial ``(q, k)`` meaning
    q * zeta_m^k, m the exponent of the group.
    """

    group: GroupSpec
    hom: HomTag
    w_hat: dict
    p: int
    n: int

    @property
    def unit_domain(self) -> bool:
        return self.hom.unit_domain

    def w_hat_value(self, chi: Character) -> CycloNum:
        q, k = self.w_hat[chi.index]
        return root_of_unity(self.group.exponent, k) * q

    def weight(self, gamma: GroupElem) -> CycloNum:
        """Fourier inversion: w(gamma) = sum_chi w_hat(chi) chi(gamma)."""
        m = self.group.exponent
        total = CycloNum.zero(m)
        for chi in characters(self.group):
            q, k = self.w_hat[chi.index]
            total = total + root_of_unity(m, k + char_exp(chi, gamma)) * q
        return total


def triple_for(family: SigmaFamily, p: int, n: int) -> AdmissibleTriple:
    family.validate(p, n)
    kind = family.kind
    full = Fraction(1, p**n)
    unit = Fraction(1, (p - 1) * p ** (n - 1))

    def conj_weights(group, gamma, scale):
        # w_hat(chi) = scale * chi(gamma)^{-1}
        m = group.exponent
        return {chi.index: (scale, -char_exp(chi, gamma) % m) for chi in characters(group)}

    if kind == ALL:
        return AdmissibleTriple(Trivial(), TRIVIAL_HOM, {(0,): (full, 0)}, p, n)
    if kind == AN_UNIT:
        return AdmissibleTriple(Trivial(), TRIVIAL_HOM_UNIT, {(0,): (unit, 0)}, p, n)
    if kind == A1_FIXED:
        g = AdditiveFp(p)
        return AdmissibleTriple(g, PHI1, conj_weights(g, g.elem(family.b1), full), p, n)
    if kind == A1A2_FIXED:
        g = OnePlusY(p)
        return AdmissibleTriple(g, PHI2, conj_weights(g, g.elem((family.b1, family.b2)), full), p, n)
    if kind == AN_FIXED_UNIT:
        g = MultiplicativeFp(p)
        return AdmissibleTriple(g, EV0, conj_weights(g, g.elem(family.bn), unit), p, n)
    if kind == A1_FIXED_AN_UNIT:
        g = AdditiveFp(p)
        return AdmissibleTriple(g, PHI1_UNIT, conj_weights(g, g.elem(family.b1), unit), p, n)
    if kind in (A1_UNIT_AN_UNIT, AN1_UNIT_AN_UNIT):
        # w is uniform on the nonzero elements of F_p and vanishes at 0
        g = AdditiveFp(p)
        hom = PHI1_UNIT if kind == A1_UNIT_AN_UNIT else LOGDERIV0_UNIT
        off = -unit / (p - 1)
        w_hat = {chi.index: ((unit if chi.is_trivial else off), 0) for chi in characters(g)}
        return AdmissibleTriple(g, hom, w_hat, p, n)
    raise ValueError(kind)  # pragma: no cover


# --- per-character series, cached ------------------------------------------

_SERIES_CACHE: dict = {}
_VECTOR_CACHE: dict = {}


def _c_sum_series(tag: HomTag, chi: Character, p: int, N: int) -> TruncSeries:
    """sum_c chi(psi(x+c))^2 / (1 + chi(psi(x+c)) T)."""
    group = chi.group
    m = group.exponent
    counts = [0] * m
    for c in range(1 if tag.unit_domain else 0, p):
        counts[char_exp(chi, GroupElem(group, hom_payload(tag, (c, 1), p)))] += 1
    vals = []
    for k in range(N + 1):
        # coefficient of T^k: (-1)^k sum_c chi(psi(x+c))^(k+2)
        v = [0] * m
        for e, cnt in enumerate(counts):
            if cnt:
                v[e * (k + 2) % m] += cnt if k % 2 == 0 else -cnt
        vals.append(from_power_vector(m, v))
    return TruncSeries(m, N, tuple(vals))


def char_series(tag: HomTag, chi: Character, p: int, kind: str, N: int) -> TruncSeries:
    """The bracketed series of the density formula for one character."""
    key = (p, tag, chi.index, kind)
    hit = _SERIES_CACHE.get(key)
    if hit is not None and hit.trunc >= N:
        return hit
    N = max(N, 12)
    L = l_series_closed(tag, chi, p, N)
    L2 = l_series_closed(tag, chi**2, p, N)
    if kind == MAX:
        out = series_mul(L, series_recip(subst_zT2(L2, Fraction(1, p))))
    else:
        out = series_mul(L, series_recip(subst_zT2(L2, 1)))
        if kind == SQF1:
            out = series_mul(_c_sum_series(tag, chi, p, N), out)
    _SERIES_CACHE[key] = out
    return out


def _char_vectors(tag: HomTag, group: GroupSpec, p: int, n: int, kind: str):
    """Common denominator D and, per character, the length-m integer vector of
    D * [series]_deg, in the order of ``characters(group)``."""
    key = (p, tag, n, kind)
    hit = _VECTOR_CACHE.get(key)
    if hit is not None:
        return hit
    m = group.exponent
    deg = n - 2 if kind == SQF1 else n
    vals = [char_series(tag, chi, p, kind, n)[deg] for chi in characters(group)]
    D = 1
    for v in vals:
        D = lcm(D, v.den)
    vecs = []
    for v in vals:
        s = D // v.den
        vec = [a * s for a in v.num] + [0] * (m - len(v.num))
        vecs.append(vec)
    _VECTOR_CACHE[key] = (D, vecs)
    return D, vecs


def _weighted_sum(t: AdmissibleTriple, kind: str) -> Fraction:
    group = t.group
    m = group.exponent
    D, vecs = _char_vectors(t.hom, group, t.p, t.n, kind)
    accs: dict = {}
    for chi, vec in zip(characters(group), vecs):
        q, k = t.w_hat[chi.index]
        if q == 0:
            continue
        acc = accs.get(q)
        if acc is None:
            acc = accs[q] = [0] * m
        # multiply by z^k: entry j moves to j + k
        r = vec[m - k:] + vec[: m - k] if k else vec
        for j in range(m):
            acc[j] += r[j]
    total = CycloNum.zero(m)
    for q, acc in accs.items():
        total = total + from_power_vector(m, acc, D) * q
    return to_rational(total)


def density_sqf0(t: AdmissibleTriple) -> Fraction:
    return _weighted_sum(t, SQF0)


def density_sqf1(t: AdmissibleTriple) -> Fraction:
    if t.p == 2:
        return Fraction(0)
    return (1 - Fraction(1, t.p)) * _weighted_sum(t, SQF1)


def density_max(t: AdmissibleTriple) -> Fraction:
    return _weighted_sum(t, MAX)


def engine_density(family: SigmaFamily, p: int, n: int) -> DensityResult:
    t = triple_for(family, p, n)
    return DensityResult(density_sqf0(t), density_sqf1(t), density_max(t), "engine")


def clear_caches() -> None:
    _SERIES_CACHE.clear()
    _VECTOR_CACHE.clear()
