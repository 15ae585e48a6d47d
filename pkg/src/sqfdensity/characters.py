"""Small finite abelian groups, their characters, and the homomorphisms from
monic polynomials over F_p into them.

Every character value is a root of unity zeta_m^k with m the group exponent,
so a character is handled through the integer exponent ``k`` (see
:func:`char_exp`) and only turned into a :class:`CycloNum` on request.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .cyclotomic import CycloNum, root_of_unity
from .fp_poly import PolyMod


class GroupMismatch(ValueError):
    pass


class DomainViolation(ValueError):
    """A unit-domain homomorphism was applied to a polynomial divisible by x."""


TRIVIAL = "trivial"
ADDITIVE = "additive"
MULTIPLICATIVE = "multiplicative"
ONE_PLUS_Y = "one_plus_y"


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    p: int = 1

    @property
    def order(self) -> int:
        p = self.p
        return {TRIVIAL: 1, ADDITIVE: p, MULTIPLICATIVE: p - 1, ONE_PLUS_Y: p * p}[self.kind]

    @property
    def exponent(self) -> int:
        p = self.p
        if self.kind == TRIVIAL:
            return 1
        if self.kind == ADDITIVE:
            return p
        if self.kind == MULTIPLICATIVE:
            return max(p - 1, 1)
        return 4 if p == 2 else p

    def elements(self) -> list:
        p = self.p
        if self.kind == TRIVIAL:
            return [GroupElem(self, 0)]
        if self.kind == ADDITIVE:
            return [GroupElem(self, a) for a in range(p)]
        if self.kind == MULTIPLICATIVE:
            return [GroupElem(self, a) for a in range(1, p)]
        return [GroupElem(self, (a1, a2)) for a1, a2 in product(range(p), repeat=2)]

    def identity(self) -> "GroupElem":
        return GroupElem(self, {TRIVIAL: 0, ADDITIVE: 0, MULTIPLICATIVE: 1, ONE_PLUS_Y: (0, 0)}[self.kind])

    def elem(self, payload) -> "GroupElem":
        p = self.p
        if self.kind == TRIVIAL:
            return GroupElem(self, 0)
        if self.kind == ONE_PLUS_Y:
            a1, a2 = payload
            return GroupElem(self, (a1 % p, a2 % p))
        payload %= p
        if self.kind == MULTIPLICATIVE and payload == 0:
            raise ValueError("zero is not in the multiplicative group")
        return GroupElem(self, payload)


def Trivial() -> GroupSpec:
    return GroupSpec(TRIVIAL, 1)


def AdditiveFp(p: int) -> GroupSpec:
    return GroupSpec(ADDITIVE, p)


def MultiplicativeFp(p: int) -> GroupSpec:
    return GroupSpec(MULTIPLICATIVE, p)


def OnePlusY(p: int) -> GroupSpec:
    """The unit group 1 + y F_p[y]/(y^3); payload (a1, a2) means a2 y^2 + a1 y + 1."""
    return GroupSpec(ONE_PLUS_Y, p)


@dataclass(frozen=True)
class GroupElem:
    group: GroupSpec
    payload: object

    def __mul__(self, other: "GroupElem") -> "GroupElem":
        if self.group != other.group:
            raise GroupMismatch(f"{self.group} vs {other.group}")
        g, p = self.group, self.group.p
        if g.kind == TRIVIAL:
            return self
        if g.kind == ADDITIVE:
            return GroupElem(g, (self.payload + other.payload) % p)
        if g.kind == MULTIPLICATIVE:
            return GroupElem(g, self.payload * other.payload % p)
        a1, a2 = self.payload
        b1, b2 = other.payload
        return GroupElem(g, ((a1 + b1) % p, (a2 + b2 + a1 * b1) % p))

    def inverse(self) -> "GroupElem":
        g, p = self.group, self.group.p
        if g.kind == TRIVIAL:
            return self
        if g.kind == ADDITIVE:
            return GroupElem(g, -self.payload % p)
        if g.kind == MULTIPLICATIVE:
            return GroupElem(g, pow(self.payload, -1, p))
        a1, a2 = self.payload
        # (1 + a1 y + a2 y^2)^{-1} = 1 - a1 y + (a1^2 - a2) y^2 mod y^3
        return GroupElem(g, (-a1 % p, (a1 * a1 - a2) % p))


# --- discrete logarithms -------------------------------------------------


@lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    """Smallest positive primitive root mod p."""
    if p == 2:
        return 1
    phi = p - 1
    primes = [q for q in range(2, phi + 1) if phi % q == 0 and all(q % r for r in range(2, int(q**0.5) + 1))]
    for g in range(2, p):
        if all(pow(g, phi // q, p) != 1 for q in primes):
            return g
    raise ValueError(f"{p} is not prime")


@lru_cache(maxsize=None)
def _dlog_table(p: int) -> dict:
    g = primitive_root(p)
    table = {}
    x = 1
    for k in range(max(p - 1, 1)):
        table[x] = k
        x = x * g % p
    return table


_G2_LOG = {(0, 0): 0, (1, 0): 1, (0, 1): 2, (1, 1): 3}


def elem_log(gamma: GroupElem) -> tuple:
    """Coordinates of ``gamma`` in the group's cyclic decomposition.

    Characters are then ``gamma -> zeta_m^(index . log)``.
    """
    g = gamma.group
    p = g.p
    if g.kind == TRIVIAL:
        return (0,)
    if g.kind == ADDITIVE:
        return (gamma.payload,)
    if g.kind == MULTIPLICATIVE:
        return (_dlog_table(p)[gamma.payload],)
    if p == 2:
        return (_G2_LOG[gamma.payload],)
    a1, a2 = gamma.payload
    half = pow(2, -1, p)
    # log coordinates: generators y^2/2 + y + 1 and y^2 + 1
    return (a1 % p, (a2 - a1 * a1 * half) % p)


@dataclass(frozen=True)
class Character:
    group: GroupSpec
    index: tuple

    @property
    def is_trivial(self) -> bool:
        return not any(self.index)

    def __pow__(self, k: int) -> "Character":
        m = self.group.exponent
        return Character(self.group, tuple(t * k % m for t in self.index))

    def __mul__(self, other: "Character") -> "Character":
        if self.group != other.group:
            raise GroupMismatch(f"{self.group} vs {other.group}")
        m = self.group.exponent
        return Character(self.group, tuple((a + b) % m for a, b in zip(self.index, other.index)))

    def conj(self) -> "Character":
        return self ** -1


@lru_cache(maxsize=None)
def characters(group: GroupSpec) -> tuple:
    """All characters, lexicographic in the index; the trivial one comes first."""
    if group.kind == ONE_PLUS_Y and group.p != 2:
        idx = product(range(group.p), repeat=2)
    else:
        idx = ((t,) for t in range(group.order))
    return tuple(Character(group, t) for t in idx)


def char_exp(chi: Character, gamma: GroupElem) -> int:
    """The k with chi(gamma) = zeta_m^k, m the group exponent."""
    if chi.group != gamma.group:
        raise GroupMismatch(f"{chi.group} vs {gamma.group}")
    m = chi.group.exponent
    return sum(t * c for t, c in zip(chi.index, elem_log(gamma))) % m


def char_eval(chi: Character, gamma: GroupElem) -> CycloNum:
    return root_of_unity(chi.group.exponent, char_exp(chi, gamma))


# --- homomorphisms from monic polynomials ---------------------------------


@dataclass(frozen=True)
class HomTag:
    name: str
    target: str
    unit_domain: bool

    def group(self, p: int) -> GroupSpec:
        return GroupSpec(self.target, 1 if self.target == TRIVIAL else p)


PHI1 = HomTag("phi1", ADDITIVE, False)
PHI2 = HomTag("phi2", ONE_PLUS_Y, False)
EV0 = HomTag("ev0", MULTIPLICATIVE, True)
PHI1_UNIT = HomTag("phi1_unit", ADDITIVE, True)
# u -> u'(0)/u(0): the x-coefficient over the constant coefficient
LOGDERIV0_UNIT = HomTag("logderiv0_unit", ADDITIVE, True)
TRIVIAL_HOM = HomTag("trivial", TRIVIAL, False)
TRIVIAL_HOM_UNIT = HomTag("trivial_unit", TRIVIAL, True)

HOM_TAGS = (PHI1, PHI2, EV0, PHI1_UNIT, LOGDERIV0_UNIT, TRIVIAL_HOM, TRIVIAL_HOM_UNIT)


def hom_payload(tag: HomTag, coeffs: tuple, p: int):
    """Payload of psi(u) for a monic ``u`` given as a lowest-first tuple over F_p."""
    d = len(coeffs) - 1
    if tag.unit_domain and coeffs[0] % p == 0:
        raise DomainViolation("x divides u")
    name = tag.name
    if name in ("trivial", "trivial_unit"):
        return 0
    if name in ("phi1", "phi1_unit"):
        return coeffs[d - 1] % p if d >= 1 else 0
    if name == "phi2":
        a1 = coeffs[d - 1] % p if d >= 1 else 0
        a2 = coeffs[d - 2] % p if d >= 2 else 0
        return (a1, a2)
    if name == "ev0":
        return coeffs[0] % p
    if name == "logderiv0_unit":
        return coeffs[1] * pow(coeffs[0], -1, p) % p if d >= 1 else 0
    raise ValueError(f"unknown homomorphism {name}")


def hom_eval(tag: HomTag, u) -> GroupElem:
    """psi(u) for a monic PolyMod over F_p."""
    if not isinstance(u, PolyMod) or u.k != 1 or not u.is_monic:
        raise ValueError("hom_eval expects a monic polynomial over F_p")
    group = tag.group(u.p)
    return GroupElem(group, hom_payload(tag, u.coeffs, u.p))


# --- quadratic symbols and Gauss sums -------------------------------------


def legendre(b: int, p: int) -> int:
    if p == 2:
        raise ValueError("the Legendre symbol needs an odd prime")
    b %= p
    if b == 0:
        return 0
    return 1 if pow(b, (p - 1) // 2, p) == 1 else -1


def gauss_sum(p: int, b: int) -> CycloNum:
    """sum_{c in F_p} e_p(b c^2) in Q(zeta_p)."""
    if p == 2:
        raise ValueError("the quadratic Gauss sum needs an odd prime")
    acc = [0] * (2 * p)
    for c in range(p):
        acc[b * c * c % p] += 1
    return _from_exponent_counts(p, acc)


def _from_exponent_counts(m: int, counts) -> CycloNum:
    """sum_k counts[k] zeta_m^k as a CycloNum."""
    total = CycloNum.zero(m)
    for k, c in enumerate(counts):
        if c:
            total = total + root_of_unity(m, k) * c
    return total


def c_chi(chi: Character) -> CycloNum:
    """C_chi = sum_{c in F_p} chi(c y + 1) for a character of 1 + y F_p[y]/(y^3)."""
    g = chi.group
    if g.kind != ONE_PLUS_Y:
        raise GroupMismatch("c_chi is defined on 1 + y F_p[y]/(y^3)")
    m = g.exponent
    counts = [0] * m
    for c in range(g.p):
        counts[char_exp(chi, GroupElem(g, (c, 0)))] += 1
    return _from_exponent_counts(m, counts)


def e_p(p: int, c) -> CycloNum:
    """e_p(c) for c an integer or a Fraction with denominator prime to p."""
    c = Fraction(c)
    k = c.numerator * pow(c.denominator, -1, p) % p
    return root_of_unity(p, k)
