"""The congruence families of monic degree-n polynomials over Z_p, and the
exact result record shared by every evaluation route."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


class InvalidParameters(ValueError):
    pass


ALL = "all"
A1_FIXED = "a1"
A1A2_FIXED = "a1a2"
AN_UNIT = "an-unit"
AN_FIXED_UNIT = "an-fixed"
A1_FIXED_AN_UNIT = "a1-an-unit"
A1_UNIT_AN_UNIT = "unit-unit-1n"
AN1_UNIT_AN_UNIT = "unit-unit-n1n"

FAMILY_KINDS = (
    ALL,
    A1_FIXED,
    A1A2_FIXED,
    AN_UNIT,
    AN_FIXED_UNIT,
    A1_FIXED_AN_UNIT,
    A1_UNIT_AN_UNIT,
    AN1_UNIT_AN_UNIT,
)

# which integer parameters each family takes
PARAMS = {
    ALL: (),
    A1_FIXED: ("b1",),
    A1A2_FIXED: ("b1", "b2"),
    AN_UNIT: (),
    AN_FIXED_UNIT: ("bn",),
    A1_FIXED_AN_UNIT: ("b1",),
    A1_UNIT_AN_UNIT: (),
    AN1_UNIT_AN_UNIT: (),
}

UNIT_CONSTANT = {AN_UNIT, AN_FIXED_UNIT, A1_FIXED_AN_UNIT, A1_UNIT_AN_UNIT, AN1_UNIT_AN_UNIT}


@dataclass(frozen=True)
class SigmaFamily:
    """A family of monic f = x^n + a1 x^(n-1) + ... + an over Z_p.

    ``b1``, ``b2``, ``bn`` pin a1, a2, an modulo p^2; the *-unit kinds ask the
    named coefficients to be p-adic units.
    """

    kind: str
    b1: int | None = None
    b2: int | None = None
    bn: int | None = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise InvalidParameters(f"unknown family {self.kind!r}")
        for name in ("b1", "b2", "bn"):
            given = getattr(self, name) is not None
            if given != (name in PARAMS[self.kind]):
                state = "requires" if not given else "does not take"
                raise InvalidParameters(f"family {self.kind} {state} parameter {name}")

    @property
    def unit_constant(self) -> bool:
        return self.kind in UNIT_CONSTANT

    def params(self) -> dict:
        return {name: getattr(self, name) for name in PARAMS[self.kind]}

    def residues(self, p: int) -> dict:
        return {k: v % p for k, v in self.params().items()}

    def validate(self, p: int, n: int) -> None:
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise InvalidParameters(f"{p} is not prime")
        if n < 2:
            raise InvalidParameters("degree must be at least 2")
        if self.kind == A1A2_FIXED and n < 3:
            raise InvalidParameters("the a1, a2 family needs degree at least 3")
        if self.kind == AN_FIXED_UNIT and self.bn % p == 0:
            raise InvalidParameters("bn must be a unit mod p")

    def label(self) -> str:
        ps = ",".join(f"{k}={v}" for k, v in self.params().items())
        return f"{self.kind}({ps})" if ps else self.kind


def family_grid(kind: str, p: int, n: int):
    """Every family of a kind, parameters swept over residues (units for bn)."""
    if kind == A1A2_FIXED and n < 3:
        return []
    if kind in (A1_FIXED, A1_FIXED_AN_UNIT):
        return [SigmaFamily(kind, b1=b) for b in range(p)]
    if kind == A1A2_FIXED:
        return [SigmaFamily(kind, b1=b1, b2=b2) for b1 in range(p) for b2 in range(p)]
    if kind == AN_FIXED_UNIT:
        return [SigmaFamily(kind, bn=b) for b in range(1, p)]
    return [SigmaFamily(kind)]


@dataclass(frozen=True)
class DensityResult:
    """The three densities P0 (unit discriminant), P1 (discriminant of
    valuation one) and Pmax (maximal order), plus their sum P0 + P1."""

    p0_sqf: Fraction
    p1_sqf: Fraction
    p_max: Fraction
    method: str = field(default="", compare=False)

    @property
    def p_sqf(self) -> Fraction:
        return self.p0_sqf + self.p1_sqf

    def values(self) -> tuple:
        return (self.p0_sqf, self.p1_sqf, self.p_sqf, self.p_max)

    def as_dict(self) -> dict:
        return {
            "p0_sqf": self.p0_sqf,
            "p1_sqf": self.p1_sqf,
            "p_sqf": self.p_sqf,
            "p_max": self.p_max,
        }

    def check_invariants(self, p: int) -> None:
        if self.p0_sqf < 0 or self.p1_sqf < 0:
            raise AssertionError(f"negative density in {self}")
        if not self.p_sqf <= self.p_max <= 1:
            raise AssertionError(f"ordering p_sqf <= p_max <= 1 fails in {self}")
        if p == 2 and self.p1_sqf != 0:
            raise AssertionError("P1 must vanish at p = 2")
