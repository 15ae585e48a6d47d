from fractions import Fraction

import pytest

from sqfdensity.characters import GroupElem, char_exp, characters, hom_payload
from sqfdensity.closed_forms import closed_density
from sqfdensity.cyclotomic import CycloNum, root_of_unity, to_rational
from sqfdensity.engine import (
    density_max,
    density_sqf0,
    density_sqf1,
    engine_density,
    triple_for,
)
from sqfdensity.families import (
    A1_FIXED,
    A1_FIXED_AN_UNIT,
    A1_UNIT_AN_UNIT,
    A1A2_FIXED,
    ALL,
    AN1_UNIT_AN_UNIT,
    AN_FIXED_UNIT,
    AN_UNIT,
    FAMILY_KINDS,
    DensityResult,
    InvalidParameters,
    SigmaFamily,
    family_grid,
)
from sqfdensity.fp_poly import monic_polys


def F(kind, **kw):
    return SigmaFamily(kind, **kw)


# --- triples ------------------------------------------------------------------------


def test_triple_examples():
    t = triple_for(F(ALL), 3, 4)
    assert t.group.order == 1 and t.w_hat == {(0,): (Fraction(1, 81), 0)}
    t = triple_for(F(A1_FIXED, b1=0), 3, 3)
    assert t.group.order == 3
    assert all(t.w_hat_value(chi) == Fraction(1, 27) for chi in characters(t.group))
    t = triple_for(F(AN_UNIT), 3, 2)
    assert t.unit_domain and t.w_hat == {(0,): (Fraction(1, 6), 0)}


def test_triple_rejects_bad_parameters():
    with pytest.raises(InvalidParameters):
        triple_for(F(AN_FIXED_UNIT, bn=3), 3, 4)
    with pytest.raises(InvalidParameters):
        triple_for(F(A1A2_FIXED, b1=0, b2=0), 3, 2)
    with pytest.raises(InvalidParameters):
        triple_for(F(ALL), 4, 3)
    with pytest.raises(InvalidParameters):
        triple_for(F(ALL), 3, 1)


def _in_family(family, u, p):
    """Does the monic residue polynomial u (lowest-first) reduce from the family?"""
    n = len(u) - 1
    a = lambda k: u[n - k]  # noqa: E731
    kind = family.kind
    if kind in (AN_UNIT, AN_FIXED_UNIT, A1_FIXED_AN_UNIT, A1_UNIT_AN_UNIT, AN1_UNIT_AN_UNIT) and a(n) == 0:
        return False
    if kind in (A1_FIXED, A1A2_FIXED, A1_FIXED_AN_UNIT) and a(1) != family.b1 % p:
        return False
    if kind == A1A2_FIXED and a(2) != family.b2 % p:
        return False
    if kind == AN_FIXED_UNIT and a(n) != family.bn % p:
        return False
    if kind == A1_UNIT_AN_UNIT and a(1) == 0:
        return False
    if kind == AN1_UNIT_AN_UNIT and a(n - 1) == 0:
        return False
    return True


def _raw_weight_and_fibres(family, p, n):
    """w(gamma) = #(family fibre) / (#family * #fibre) from enumeration mod p,
    and the fibre sizes of psi on the domain."""
    t = triple_for(family, p, n)
    fibre, hits = {}, {}
    total = 0
    for u in monic_polys(p, n):
        if t.unit_domain and u[0] == 0:
            continue
        g = GroupElem(t.group, hom_payload(t.hom, u, p))
        fibre[g] = fibre.get(g, 0) + 1
        if _in_family(family, u, p):
            hits[g] = hits.get(g, 0) + 1
            total += 1
    w = {}
    for g in t.group.elements():
        # the family is a union of fibres: each fibre is all in or all out
        assert hits.get(g, 0) in (0, fibre.get(g, 0))
        w[g] = Fraction(hits.get(g, 0), total * fibre[g]) if hits.get(g) else Fraction(0)
    return t, w, fibre


CASES = [
    (kind, p, n)
    for kind in FAMILY_KINDS
    for p in (2, 3, 5)
    for n in (2, 3, 4)
    if not (kind == A1A2_FIXED and n < 3) and p**n <= 625
]


@pytest.mark.parametrize("kind,p,n", CASES)
def test_w_hat_is_dft_of_raw_weight(kind, p, n):
    for family in family_grid(kind, p, n):
        t, w, _ = _raw_weight_and_fibres(family, p, n)
        m = t.group.exponent
        for chi in characters(t.group):
            dft = CycloNum.zero(m)
            for g, wg in w.items():
                if wg:
                    dft = dft + root_of_unity(m, -char_exp(chi, g)) * wg
            dft = dft * Fraction(1, t.group.order)
            assert dft == t.w_hat_value(chi), (family, chi.index)


@pytest.mark.parametrize("kind,p,n", CASES)
def test_inverted_weight_is_a_distribution(kind, p, n):
    for family in family_grid(kind, p, n):
        t, _, fibre = _raw_weight_and_fibres(family, p, n)
        total = Fraction(0)
        for g in t.group.elements():
            wg = to_rational(t.weight(g))
            assert wg >= 0
            total += wg * fibre.get(g, 0)
        assert total == 1


# --- densities -------------------------------------------------------------------------


def test_sqf0_examples():
    assert density_sqf0(triple_for(F(ALL), 3, 4)) == Fraction(2, 3)
    assert density_sqf0(triple_for(F(A1_FIXED, b1=0), 3, 3)) == Fraction(2, 3)
    assert density_sqf0(triple_for(F(AN_UNIT), 2, 3)) == Fraction(3, 4)


def test_sqf1_examples():
    for kind in FAMILY_KINDS:
        for fam in family_grid(kind, 2, 4):
            assert density_sqf1(triple_for(fam, 2, 4)) == 0
    assert density_sqf1(triple_for(F(ALL), 3, 2)) == Fraction(2, 9)
    assert density_sqf1(triple_for(F(AN_UNIT), 3, 2)) == Fraction(2, 9)


def test_max_examples():
    assert density_max(triple_for(F(ALL), 2, 2)) == Fraction(3, 4)
    for b in range(3):
        assert density_max(triple_for(F(A1_FIXED, b1=b), 3, 4)) == Fraction(8, 9)
    assert density_max(triple_for(F(AN_UNIT), 2, 2)) == Fraction(3, 4)


def test_more_engine_values():
    assert engine_density(F(ALL), 3, 4) == DensityResult(Fraction(2, 3), Fraction(8, 81), Fraction(8, 9))
    assert engine_density(F(A1A2_FIXED, b1=0, b2=1), 3, 4).p_max == Fraction(73, 81)
    assert engine_density(F(AN_FIXED_UNIT, bn=2), 3, 2).values() == (1, 0, 1, 1)
    r = engine_density(F(A1_FIXED_AN_UNIT, b1=0), 2, 2)
    assert (r.p_sqf, r.p_max) == (0, Fraction(1, 2))


def _mean(results):
    k = len(results)
    return tuple(sum(r.values()[i] for r in results) / k for i in range(4))


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_averaging_laws(p, n):
    allr = engine_density(F(ALL), p, n)
    a1 = {b: engine_density(F(A1_FIXED, b1=b), p, n) for b in range(p)}
    assert _mean(list(a1.values())) == allr.values()
    for b1 in range(p):
        a12 = [engine_density(F(A1A2_FIXED, b1=b1, b2=b2), p, n) for b2 in range(p)]
        assert _mean(a12) == a1[b1].values()
    unit = engine_density(F(AN_UNIT), p, n)
    assert _mean([engine_density(F(AN_FIXED_UNIT, bn=b), p, n) for b in range(1, p)]) == unit.values()
    assert _mean([engine_density(F(A1_FIXED_AN_UNIT, b1=b), p, n) for b in range(p)]) == unit.values()


def test_double_unit_variants_agree():
    for p in (2, 3, 5, 7):
        for n in range(2, 9):
            a = engine_density(F(A1_UNIT_AN_UNIT), p, n)
            b = engine_density(F(AN1_UNIT_AN_UNIT), p, n)
            assert a == b


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_engine_equals_closed_and_invariants(p):
    for n in range(2, 10):
        for kind in FAMILY_KINDS:
            for fam in family_grid(kind, p, n):
                e = engine_density(fam, p, n)
                e.check_invariants(p)
                assert e == closed_density(fam, p, n), (fam, p, n)


def test_density_result_invariant_checks():
    DensityResult(Fraction(1, 2), Fraction(1, 4), Fraction(1)).check_invariants(3)
    with pytest.raises(AssertionError):
        DensityResult(Fraction(1, 2), Fraction(1, 4), Fraction(1, 2)).check_invariants(3)
    with pytest.raises(AssertionError):
        DensityResult(Fraction(1, 2), Fraction(1, 4), Fraction(1)).check_invariants(2)
    with pytest.raises(AssertionError):
        DensityResult(Fraction(-1, 2), Fraction(0), Fraction(1)).check_invariants(3)
