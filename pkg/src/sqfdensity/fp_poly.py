"""Dense polynomials over F_p and Z/p^2.

Coefficients are stored lowest degree first.  The module-level helpers work on
plain tuples of ints (the enumeration kernel calls them in tight loops);
:class:`PolyMod` wraps a tuple together with its modulus.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product


class ModulusMismatch(ValueError):
    pass


def trim(c):
    """Drop trailing zero coefficients."""
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def deg(c) -> int:
    return len(c) - 1


def add(a, b, q):
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return trim((x + y) % q for x, y in zip(a, b))


def sub(a, b, q):
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return trim((x - y) % q for x, y in zip(a, b))


def mul(a, b, q=None):
    """Product of coefficient tuples; reduced mod ``q`` unless ``q`` is None."""
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    if q is not None:
        out = [v % q for v in out]
    return trim(out)


def derivative(a, q=None):
    d = [i * a[i] for i in range(1, len(a))]
    if q is not None:
        d = [v % q for v in d]
    return trim(d)


def divmod_p(a, b, p):
    """Quotient and remainder over F_p; ``b`` must be nonzero."""
    a = list(trim(a))
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), tuple(a)
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            quot[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return trim(quot), trim(a[:db])


def monic(a, p):
    a = trim(a)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return tuple(x * inv % p for x in a)


def gcd_p(a, b, p):
    """Monic gcd over F_p (the zero polynomial if both inputs are zero)."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_p(a, b, p)[1]
    return monic(a, p)


def squarefree_p(u, p) -> bool:
    u = trim(u)
    du = derivative(u, p)
    if not du:
        return len(u) <= 1
    return len(gcd_p(u, du, p)) == 1


def monic_polys(p, d):
    """All monic degree-``d`` polynomials over F_p, constant coefficient varying fastest."""
    for rest in product(range(p), repeat=d):
        yield tuple(rest[::-1]) + (1,)


@lru_cache(maxsize=None)
def irreducibles(p: int, d: int) -> tuple:
    """Monic irreducibles of degree exactly ``d`` over F_p, by sieving."""
    if d < 1:
        return ()
    small = [g for e in range(1, d // 2 + 1) for g in irreducibles(p, e)]
    out = []
    for u in monic_polys(p, d):
        if all(divmod_p(u, g, p)[1] for g in small):
            out.append(u)
    return tuple(out)


def factor_p(u, p):
    """Factor a monic polynomial over F_p by trial division.

    Returns a list of ``(irreducible, multiplicity)`` in the order the
    irreducibles are tried (increasing degree, then the sieve order).
    """
    u = trim(u)
    if not u or u[-1] != 1:
        raise ValueError("factor_p expects a monic polynomial")
    out = []
    d = 1
    while len(u) - 1 >= 2 * d:
        for g in irreducibles(p, d):
            e = 0
            while True:
                q, r = divmod_p(u, g, p)
                if r:
                    break
                u, e = q, e + 1
            if e:
                out.append((g, e))
        d += 1
    if len(u) > 1:
        # the cofactor has no factor of degree <= deg/2, so it is irreducible
        for i, (g, e) in enumerate(out):
            if g == u:
                out[i] = (g, e + 1)
                break
        else:
            out.append((u, 1))
    return out


def mobius_p(u, p) -> int:
    fac = factor_p(u, p)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def bareiss_det(m) -> int:
    """Integer determinant by fraction-free elimination."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def sylvester(f, g):
    """Sylvester matrix of integer coefficient tuples (lowest first)."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    fr, gr = list(reversed(f)), list(reversed(g))
    rows = []
    for i in range(n):
        rows.append([0] * i + fr + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gr + [0] * (size - n - 1 - i))
    return rows


def resultant(f, g) -> int:
    return bareiss_det(sylvester(f, g))


def discriminant(f) -> int:
    """Exact discriminant of a monic integer polynomial of degree >= 1."""
    n = len(f) - 1
    if f[-1] != 1:
        raise ValueError("discriminant expects a monic polynomial")
    if n == 1:
        return 1
    df = tuple(i * f[i] for i in range(1, n + 1))
    r = resultant(f, df)
    return -r if (n * (n - 1) // 2) % 2 else r


@dataclass(frozen=True)
class PolyMod:
    """Polynomial over Z/p^k (k in {1, 2}) with coefficients lowest first."""

    p: int
    k: int
    coeffs: tuple

    def __post_init__(self):
        if self.k not in (1, 2):
            raise ValueError("only moduli p and p^2 are supported")
        q = self.p**self.k
        object.__setattr__(self, "coeffs", trim(int(c) % q for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs, p, k=1):
        return cls(p, k, tuple(coeffs))

    @property
    def modulus(self) -> int:
        return self.p**self.k

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def reduce(self) -> "PolyMod":
        """Reduction mod p."""
        return PolyMod(self.p, 1, self.coeffs)

    def _check(self, other):
        if (self.p, self.k) != (other.p, other.k):
            raise ModulusMismatch(f"moduli {self.modulus} and {other.modulus} differ")

    def __add__(self, other):
        self._check(other)
        return PolyMod(self.p, self.k, add(self.coeffs, other.coeffs, self.modulus))

    def __sub__(self, other):
        self._check(other)
        return PolyMod(self.p, self.k, sub(self.coeffs, other.coeffs, self.modulus))

    def __mul__(self, other):
        return poly_mul(self, other)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.modulus
        return acc

    def __repr__(self):
        if not self.coeffs:
            return f"PolyMod(0 mod {self.modulus})"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return f"PolyMod({' + '.join(terms)} mod {self.modulus})"


def poly_mul(a: PolyMod, b: PolyMod) -> PolyMod:
    a._check(b)
    return PolyMod(a.p, a.k, mul(a.coeffs, b.coeffs, a.modulus))


def _require_field(u: PolyMod):
    if u.k != 1:
        raise ValueError("operation requires a polynomial over F_p")


def is_squarefree(u: PolyMod) -> bool:
    _require_field(u)
    return squarefree_p(u.coeffs, u.p)


def mobius(u: PolyMod) -> int:
    _require_field(u)
    return mobius_p(u.coeffs, u.p)


def factor(u: PolyMod) -> list:
    """Factorization of a monic ``u`` over F_p as ``[(PolyMod, multiplicity), ...]``."""
    _require_field(u)
    if u.degree < 1:
        raise ValueError("factor expects degree >= 1")
    return [(PolyMod(u.p, 1, g), e) for g, e in factor_p(u.coeffs, u.p)]


def disc_mod(f: PolyMod) -> int:
    """Discriminant of a monic polynomial over Z/p^2, reduced mod p^2.

    Computed on the lift with coefficients in [0, p^2); the result does not
    depend on the lift because the discriminant is an integer polynomial in
    the coefficients.
    """
    if f.k != 2:
        raise ValueError("disc_mod expects a polynomial over Z/p^2")
    if not f.is_monic or f.degree < 2:
        raise ValueError("disc_mod expects a monic polynomial of degree >= 2")
    return discriminant(f.coeffs) % f.modulus
