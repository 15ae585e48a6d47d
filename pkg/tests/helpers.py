"""Shared helpers for the test suite."""

from itertools import product

from sqfdensity.characters import OnePlusY, c_chi, char_exp, characters
from sqfdensity.cyclotomic import CycloNum, from_power_vector


def exponent_tuples(p, kmax):
    for k in range(1, kmax + 1):
        yield from product(range(1, p + 2), repeat=k)


def literal_table(p, ms, cache):
    """step2 literal sums for every gamma at once: the products of C-values
    are computed once per character and rotated by chi(gamma)^{-1}."""
    g = OnePlusY(p)
    chars = [chi for chi in characters(g) if char_exp(chi, g.elem((0, 1)))]
    prods = []
    for chi in chars:
        prod = CycloNum.one(p)
        for m in ms:
            key = (chi**m).index
            if key not in cache:
                cache[key] = c_chi(chi**m)
            prod = prod * cache[key]
        assert prod.den == 1  # sums of roots of unity
        prods.append((chi, list(prod.num) + [0] * (p - len(prod.num))))
    out = {}
    for gamma in product(range(p), repeat=2):
        el = g.elem(gamma)
        acc = [0] * p
        for chi, vec in prods:
            e = char_exp(chi, el)
            for j, v in enumerate(vec):
                if v:
                    acc[(j - e) % p] += v
        out[gamma] = from_power_vector(p, acc)
    return out
