"""Univariate polynomial algebra over prime fields and over Q.

Factorization over F_p follows the classical three stages: squarefree
decomposition, distinct-degree splitting and Cantor-Zassenhaus
equal-degree splitting.  Irreducibility over Q is certified (soundly but
incompletely) by intersecting the sets of factor degrees that the
reductions modulo several primes allow.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from sympy.ntheory import isprime


class ModulusMismatch(ValueError):
    pass


class NotPrimeModulus(ValueError):
    def __init__(self, p):
        super().__init__("modulus must be prime")
        self.p = p


class NotSquarefree(ValueError):
    pass


class DegreeDropped(ValueError):
    pass


class NoAdmissiblePrime(ValueError):
    def __init__(self, rejected):
        super().__init__(f"no admissible prime among {sorted(rejected)}")
        self.rejected = dict(rejected)


def check_prime(p: int) -> int:
    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise NotPrimeModulus(p)
    return p


def _strip(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class PrimeFieldElement:
    residue: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "residue", self.residue % self.p)

    def __int__(self):
        return self.residue

    def inverse(self) -> "PrimeFieldElement":
        if self.residue == 0:
            raise ZeroDivisionError("0 has no inverse mod p")
        return PrimeFieldElement(pow(self.residue, -1, self.p), self.p)

    def balanced(self) -> int:
        r = self.residue
        return r - self.p if r > self.p // 2 else r


@dataclass(frozen=True)
class UniPolyP:
    """Dense polynomial over F_p; ``coeffs[i]`` is the coefficient of X^i."""

    coeffs: tuple
    p: int

    def __post_init__(self):
        cs = _strip([int(c) % self.p for c in self.coeffs])
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_ints(cls, coeffs: Iterable[int], p: int) -> "UniPolyP":
        return cls(tuple(coeffs), check_prime(p))

    @classmethod
    def monomial(cls, n: int, p: int, c: int = 1) -> "UniPolyP":
        return cls((0,) * n + (c,), p)

    @classmethod
    def constant(cls, c: int, p: int) -> "UniPolyP":
        return cls((c,), p)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lc == 1

    def _same(self, other: "UniPolyP"):
        if self.p != other.p:
            raise ModulusMismatch(f"moduli {self.p} and {other.p} differ")

    def __add__(self, other):
        self._same(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPolyP(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                              for i in range(n)), self.p)

    def __neg__(self):
        return UniPolyP(tuple(-c for c in self.coeffs), self.p)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPolyP(tuple(c * other for c in self.coeffs), self.p)
        self._same(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPolyP((), self.p)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPolyP(tuple(out), self.p)

    __rmul__ = __mul__

    def __divmod__(self, other):
        self._same(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        r = list(self.coeffs)
        db = other.degree
        inv = pow(other.lc, -1, p)
        q = [0] * max(len(r) - db, 0)
        b = other.coeffs
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] * inv % p
            q[k] = c
            if c:
                for j in range(db + 1):
                    r[k + j] = (r[k + j] - c * b[j]) % p
        return UniPolyP(tuple(q), p), UniPolyP(tuple(r[:db]), p)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n: int):
        result = UniPolyP.constant(1, self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self) -> "UniPolyP":
        if self.is_zero():
            return self
        return self * pow(self.lc, -1, self.p)

    def derivative(self) -> "UniPolyP":
        return UniPolyP(tuple(i * c for i, c in enumerate(self.coeffs))[1:], self.p)

    def powmod(self, n: int, modulus: "UniPolyP") -> "UniPolyP":
        result = UniPolyP.constant(1, self.p) % modulus
        base = self % modulus
        while n:
            if n & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            n >>= 1
        return result

    def sort_key(self):
        return (self.degree, self.coeffs[::-1])

    def to_str(self, var: str = "X", balanced: bool = False) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if balanced and c > self.p // 2:
                c -= self.p
            terms.append((c, i))
        return _format_terms(terms, var)

    def __str__(self):
        return self.to_str()


def _format_terms(terms, var):
    if not terms:
        return "0"
    parts = []
    for k, (c, i) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mon = var if i == 1 else f"{var}^{i}"
            body = mon if a == 1 else f"{a}*{mon}"
        if k == 0:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def upoly_gcd_mod_p(f: UniPolyP, g: UniPolyP) -> UniPolyP:
    """Monic gcd over F_p."""
    f._same(g)
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_mod_p(f: UniPolyP) -> bool:
    if f.is_zero():
        raise ValueError("zero polynomial")
    return upoly_gcd_mod_p(f, f.derivative()).degree == 0


def _pth_root(f: UniPolyP) -> UniPolyP:
    # f' = 0, so only exponents divisible by p occur; in F_p, c^(1/p) = c.
    p = f.p
    return UniPolyP(f.coeffs[::p], p)


def squarefree_decomposition(f: UniPolyP) -> list[tuple[UniPolyP, int]]:
    """Squarefree factors of a monic f as (g, i) with f = prod g^i."""
    p = f.p
    out: dict[int, UniPolyP] = {}

    def rec(f, mult):
        if f.degree <= 0:
            return
        df = f.derivative()
        if df.is_zero():
            rec(_pth_root(f), mult * p)
            return
        c = upoly_gcd_mod_p(f, df)
        w = f // c
        i = 1
        while w.degree > 0:
            y = upoly_gcd_mod_p(w, c)
            z = w // y
            if z.degree > 0:
                prev = out.get(i * mult)
                out[i * mult] = z if prev is None else prev * z
            i += 1
            w = y
            c = c // y
        if c.degree > 0:
            rec(_pth_root(c), mult * p)

    rec(f.monic(), 1)
    return [(out[m], m) for m in sorted(out)]


def distinct_degree_factorization(f: UniPolyP) -> list[tuple[UniPolyP, int]]:
    """Split a monic squarefree f into (g_k, k), g_k the product of its degree-k factors."""
    p = f.p
    out = []
    x = UniPolyP.monomial(1, p)
    h = x
    rest = f
    k = 0
    while rest.degree >= 2 * (k + 1):
        k += 1
        h = h.powmod(p, rest)
        g = upoly_gcd_mod_p(rest, h - x)
        if g.degree > 0:
            out.append((g, k))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def _random_poly(rng: random.Random, deg: int, p: int) -> UniPolyP:
    return UniPolyP(tuple(rng.randrange(p) for _ in range(deg)), p)


def equal_degree_factorization(f: UniPolyP, k: int, rng: random.Random) -> list[UniPolyP]:
    """Cantor-Zassenhaus splitting of a monic squarefree f whose factors all have degree k."""
    if f.degree == k:
        return [f]
    p = f.p
    while True:
        a = _random_poly(rng, f.degree, p)
        if a.degree < 1:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(k-1))
            t = a % f
            b = t
            for _ in range(k - 1):
                t = (t * t) % f
                b = b + t
        else:
            b = a.powmod((p ** k - 1) // 2, f) - UniPolyP.constant(1, p)
        g = upoly_gcd_mod_p(f, b)
        if 0 < g.degree < f.degree:
            return (equal_degree_factorization(g, k, rng)
                    + equal_degree_factorization(f // g, k, rng))


@dataclass(frozen=True)
class FactorListP:
    unit: PrimeFieldElement
    factors: tuple  # ((UniPolyP, multiplicity), ...) in canonical order

    def expand(self) -> UniPolyP:
        p = self.unit.p
        out = UniPolyP.constant(self.unit.residue, p)
        for g, m in self.factors:
            out = out * g ** m
        return out

    def degrees(self) -> list[int]:
        return sorted(g.degree for g, m in self.factors for _ in range(m))


def factor_mod_p(f: UniPolyP, seed: int = 0) -> FactorListP:
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    unit = PrimeFieldElement(f.lc, f.p)
    found: dict[UniPolyP, int] = {}
    for g, mult in squarefree_decomposition(f.monic()):
        for h, k in distinct_degree_factorization(g):
            for q in equal_degree_factorization(h, k, rng):
                found[q] = found.get(q, 0) + mult
    factors = tuple(sorted(found.items(), key=lambda t: t[0].sort_key()))
    return FactorListP(unit, factors)


DegreePattern = tuple  # sorted tuple of positive ints


def degree_pattern(f: UniPolyP) -> DegreePattern:
    """Factor-degree multiset of a squarefree f, read off the distinct-degree split."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if not squarefree_mod_p(f):
        raise NotSquarefree(f"not squarefree modulo {f.p}")
    out = []
    for g, k in distinct_degree_factorization(f.monic()):
        out.extend([k] * (g.degree // k))
    return tuple(sorted(out))


def feasible_factor_degrees(pattern: Iterable[int]) -> frozenset:
    """All subset sums of the pattern."""
    sums = {0}
    for e in pattern:
        sums |= {s + e for s in sums}
    return frozenset(sums)


@dataclass(frozen=True)
class UniPolyQ:
    """Dense polynomial over Q; ``coeffs[i]`` is the coefficient of X^i."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_strip([Fraction(c) for c in self.coeffs])))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_monic(self) -> bool:
        return self.lc == 1

    def reduce(self, p: int) -> UniPolyP:
        if not self.is_integral():
            raise ValueError("reduction needs integer coefficients")
        return UniPolyP(tuple(int(c) for c in self.coeffs), p)

    def to_str(self, var: str = "X") -> str:
        terms = [(c, i) for i, c in reversed(list(enumerate(self.coeffs))) if c]
        return _format_terms(terms, var)

    def __str__(self):
        return self.to_str()


def x_d_minus_x_minus_1(d: int) -> UniPolyQ:
    return UniPolyQ((-1, -1) + (0,) * (d - 2) + (1,))


CERTIFIED = "Certified"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Witness:
    prime: int
    pattern: DegreePattern
    feasible: frozenset


@dataclass(frozen=True)
class IrreducibilityCertificate:
    polynomial: UniPolyQ
    witnesses: tuple
    verdict: str
    rejected: tuple = field(default=())  # ((prime, reason), ...)

    @property
    def intersection(self) -> frozenset:
        return proper_intersection(self.polynomial.degree, self.witnesses)


def proper_intersection(d: int, witnesses: Sequence[Witness]) -> frozenset:
    common = frozenset(range(1, d))
    for w in witnesses:
        common &= w.feasible
    return common


def reduction_pattern(f: UniPolyQ, p: int) -> DegreePattern:
    """Degree pattern of f mod p; the reduction must keep its degree and be squarefree."""
    fp = f.reduce(p)
    if fp.degree != f.degree:
        raise DegreeDropped(f"leading coefficient vanishes modulo {p}")
    if not squarefree_mod_p(fp):
        raise NotSquarefree(f"not squarefree modulo {p}")
    return degree_pattern(fp)


def admit_prime(f: UniPolyQ, p: int):
    """Return (pattern, None) if p is admissible for f, else (None, reason)."""
    try:
        return reduction_pattern(f, p), None
    except DegreeDropped:
        return None, "degree drops"
    except NotSquarefree:
        return None, "not squarefree"


def irreducibility_certificate(f: UniPolyQ, primes: Iterable[int]) -> IrreducibilityCertificate:
    if f.degree < 1 or not f.is_monic() or not f.is_integral():
        raise ValueError("need a monic integer polynomial of degree >= 1")
    d = f.degree
    witnesses, rejected = [], []
    for p in primes:
        check_prime(p)
        pattern, reason = admit_prime(f, p)
        if reason:
            rejected.append((p, reason))
            continue
        witnesses.append(Witness(p, pattern, feasible_factor_degrees(pattern)))
    if not witnesses:
        raise NoAdmissiblePrime(rejected)
    verdict = CERTIFIED if not proper_intersection(d, witnesses) else INCONCLUSIVE
    return IrreducibilityCertificate(f, tuple(witnesses), verdict, tuple(rejected))
