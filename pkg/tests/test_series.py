from fractions import Fraction

import pytest

from sqfdensity.characters import (
    HOM_TAGS,
    PHI1,
    PHI2,
    TRIVIAL_HOM,
    Character,
    GroupElem,
    OnePlusY,
    characters,
    char_exp,
    hom_payload,
)
from sqfdensity.cyclotomic import CycloNum, root_of_unity
from sqfdensity.fp_poly import PolyMod, mobius, monic_polys
from sqfdensity.series import (
    ALL_ONE,
    ALL_ONE_UNIT,
    BudgetExceeded,
    NonUnitConstantTerm,
    TruncSeries,
    UnsupportedSeries,
    l_series_brute,
    l_series_closed,
    series_mul,
    series_recip,
    subst_zT2,
)


def S(values, N, m=1):
    return TruncSeries.from_values(m, N, values)


# --- truncated arithmetic ---------------------------------------------------------


def test_recip_geometric():
    assert series_recip(S([1, -3], 3)) == S([1, 3, 9, 27], 3)


def test_subst():
    assert subst_zT2(S([1, 1], 4), Fraction(1, 2)) == S([1, 0, Fraction(1, 2)], 4)


def test_mul_recip_example():
    out = series_mul(S([1, -1], 2), series_recip(S([1, -3], 2)))
    assert out[2] == 6


def test_recip_requires_unit_constant():
    with pytest.raises(NonUnitConstantTerm):
        series_recip(S([2, 1], 3))
    with pytest.raises(NonUnitConstantTerm):
        series_recip(S([0, 1], 3))


def test_recip_is_inverse():
    s = S([1, 2, -1, Fraction(1, 3), 5], 4, m=3)
    assert series_mul(s, series_recip(s)) == TruncSeries.one(3, 4)


def test_subst_drops_overflow():
    s = S([1, 1, 1, 1], 3)
    assert subst_zT2(s, 1) == S([1, 0, 1, 0], 3)


# --- generating series: closed forms ----------------------------------------------


def test_closed_examples():
    chi = characters(PHI1.group(5))[1]
    assert l_series_closed(PHI1, chi, 5, 4) == TruncSeries.one(5, 4)
    triv = characters(ALL_ONE_UNIT.group(3))[0]
    assert l_series_closed(ALL_ONE_UNIT, triv, 3, 2) == S([1, 2, 6], 2)
    faithful = Character(OnePlusY(2), (1,))
    assert l_series_closed(PHI2, faithful, 2, 3) == S([1, CycloNum(4, (1, 1))], 3, m=4)


def test_closed_rejects_nontrivial_on_all_one():
    chi = characters(PHI1.group(3))[1]
    with pytest.raises(UnsupportedSeries):
        l_series_closed(ALL_ONE, chi, 3, 3)


def test_brute_examples():
    triv = characters(ALL_ONE.group(3))[0]
    assert l_series_brute(ALL_ONE, triv, 3, 4) == S([1, 3, 9, 27, 81], 4)
    assert l_series_brute(ALL_ONE_UNIT, triv, 3, 3) == S([1, 2, 6, 18], 3)
    chi = characters(PHI1.group(3))[1]
    assert l_series_brute(PHI1, chi, 3, 2)[2].is_zero()


def test_brute_budget():
    triv = characters(ALL_ONE.group(3))[0]
    with pytest.raises(BudgetExceeded) as exc:
        l_series_brute(ALL_ONE, triv, 3, 6, budget=100)
    assert exc.value.required == sum(3**d for d in range(7))


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("tag", HOM_TAGS, ids=lambda t: t.name)
def test_brute_equals_closed(tag, p):
    for chi in characters(tag.group(p)):
        assert l_series_brute(tag, chi, p, 5) == l_series_closed(tag, chi, p, 5), chi.index


# --- sieve identities ----------------------------------------------------------------


def _weighted_sums(tag, chi, p, N, weight):
    """sum over monic u of degree d in the tag's domain of weight(u) chi(psi(u))."""
    m = chi.group.exponent
    out = []
    for d in range(N + 1):
        total = CycloNum.zero(m)
        for u in monic_polys(p, d):
            if tag.unit_domain and d >= 1 and u[0] == 0:
                continue
            w = weight(u)
            if w:
                k = char_exp(chi, GroupElem(chi.group, hom_payload(tag, u, p)))
                total = total + root_of_unity(m, k) * w
        out.append(total)
    return TruncSeries(m, N, tuple(out))


def _mu(p):
    return lambda u: mobius(PolyMod(p, 1, u)) if len(u) > 1 else 1


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("tag", HOM_TAGS, ids=lambda t: t.name)
def test_squarefree_sieve_identity(tag, p):
    N = 5
    mu = _mu(p)
    for chi in characters(tag.group(p)):
        lhs = _weighted_sums(tag, chi, p, N, lambda u: abs(mu(u)))
        L = l_series_closed(tag, chi, p, N)
        L2 = l_series_closed(tag, chi**2, p, N)
        assert lhs == series_mul(L, series_recip(subst_zT2(L2, 1)))


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("tag", HOM_TAGS, ids=lambda t: t.name)
def test_mobius_identity(tag, p):
    N = 5
    for chi in characters(tag.group(p)):
        lhs = _weighted_sums(tag, chi, p, N, _mu(p))
        assert lhs == series_recip(l_series_closed(tag, chi, p, N))


def test_all_one_tag_is_trivial_hom():
    assert ALL_ONE is TRIVIAL_HOM
