"""Hilbert-Poincare series of monomial quotients, h-vectors and order ideals.

Series numerators are integer polynomials in lambda stored as coefficient
lists, lowest degree first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from statistics import median_low
from typing import Callable, Iterable, Optional

from hibi.groebner import GroebnerBasis, mon_divides


class NotArtinian(ValueError):
    pass


class NegativePoleOrder(ArithmeticError):
    pass


# -- integer polynomials in lambda

def _trim(a: list) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def lam_add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def lam_sub(a, b):
    return lam_add(a, [-c for c in b])


def lam_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def lam_shift(a, k):
    return [0] * k + list(a) if a else []


def one_minus_lambda_power(n: int) -> list:
    """(1 - lambda)^n."""
    return _trim([(-1) ** k * comb(n, k) for k in range(n + 1)])


# -- monomial ideals

def minimalize(gens: Iterable[tuple]) -> tuple:
    out = []
    for m in sorted(set(gens), key=lambda m: (sum(m), m)):
        if not any(mon_divides(g, m) for g in out):
            out.append(m)
    return tuple(out)


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    generators: tuple

    def __post_init__(self):
        gens = minimalize(tuple(g) for g in self.generators)
        for g in gens:
            if len(g) != self.nvars:
                raise ValueError(f"monomial {g} does not live in {self.nvars} variables")
        object.__setattr__(self, "generators", gens)

    def contains(self, mon: tuple) -> bool:
        return any(mon_divides(g, mon) for g in self.generators)

    def pure_power(self, i: int) -> Optional[int]:
        """Smallest a with x_i^a in the ideal, or None."""
        best = None
        for g in self.generators:
            if all(e == 0 for j, e in enumerate(g) if j != i) and g[i] > 0:
                best = g[i] if best is None else min(best, g[i])
        return best


def lt_ideal(G: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal(G.ring.nvars, tuple(g.lm for g in G))


# -- pivot recursion

def _colon(gens, p):
    return minimalize(tuple(max(e - f, 0) for e, f in zip(g, p)) for g in gens)


def _pairwise_coprime(gens) -> bool:
    seen = [0] * len(gens[0])
    for g in gens:
        for i, e in enumerate(g):
            if e:
                if seen[i]:
                    return False
                seen[i] = 1
    return True


def pivot_median_power(gens):
    """Pure power of the variable occurring in most generators; the exponent
    is the median occurring exponent, kept below any pure power in the ideal."""
    n = len(gens[0])
    counts = [sum(1 for g in gens if g[i]) for i in range(n)]
    i = max(range(n), key=lambda j: (counts[j], -j))
    pure = [g[i] for g in gens if g[i] and sum(g) == g[i]]
    exps = [g[i] for g in gens if g[i] and sum(g) != g[i]]
    e = median_low(exps)
    if pure:
        e = min(e, pure[0] - 1)
    e = max(e, 1)
    return tuple(e if j == i else 0 for j in range(n))


def pivot_variable(gens):
    """The variable occurring in most generators, to the first power."""
    n = len(gens[0])
    counts = [sum(1 for g in gens if g[i]) for i in range(n)]
    i = max(range(n), key=lambda j: (counts[j], -j))
    return tuple(1 if j == i else 0 for j in range(n))


def _numerator(gens: tuple, pivot: Callable) -> list:
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return []
    if _pairwise_coprime(gens):
        out = [1]
        for g in gens:
            out = lam_mul(out, lam_sub([1], lam_shift([1], sum(g))))
        return out
    p = pivot(gens)
    bigger = minimalize(gens + (p,))
    return lam_add(_numerator(bigger, pivot),
                   lam_shift(_numerator(_colon(gens, p), pivot), sum(p)))


def hilbert_numerator(M: MonomialIdeal, pivot: Callable = pivot_median_power) -> list:
    """N(lambda) with Hilbert series of S/M equal to N / (1 - lambda)^n.

    Uses N(I) = N(I + (p)) + lambda^deg(p) * N(I : p), which is the pivot
    identity N(I + (p)) = N(I) - lambda^deg(p) * N(I : p) solved for N(I).
    """
    return _numerator(M.generators, pivot)


@dataclass(frozen=True)
class PoincareSeries:
    numerator: tuple
    pole_order: int

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(_trim(list(self.numerator))))

    def coefficients(self, D: int) -> list:
        return series_coefficients(self, D)


def reduce_poincare(N: Iterable[int], n: int) -> PoincareSeries:
    """Cancel factors (1 - lambda) until the numerator no longer vanishes at 1."""
    q = _trim(list(N))
    d = n
    while q and sum(q) == 0:
        # synthetic division by (1 - lambda): q = (1 - lambda) * r
        r, acc = [], 0
        for c in q[:-1]:
            acc += c
            r.append(acc)
        q = _trim(r)
        d -= 1
        if d < 0:
            raise NegativePoleOrder(f"numerator vanishes at 1 more than {n} times")
    if not q:
        d = 0
    return PoincareSeries(tuple(q), d)


@dataclass(frozen=True)
class HVector:
    entries: tuple
    dimension: int

    @property
    def multiplicity(self) -> int:
        return sum(self.entries)

    @property
    def delta(self) -> int:
        return len(self.entries) - 1

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


def h_vector(S: PoincareSeries) -> HVector:
    return HVector(tuple(S.numerator), S.pole_order)


def series_coefficients(S: PoincareSeries, D: int) -> list:
    """Hilbert function values H(0), ..., H(D)."""
    if D < 0:
        raise ValueError("D must be >= 0")
    h, d = S.numerator, S.pole_order
    out = []
    for r in range(D + 1):
        if d == 0:
            out.append(h[r] if r < len(h) else 0)
        else:
            out.append(sum(c * comb(r - i + d - 1, d - 1) for i, c in enumerate(h) if i <= r))
    return out


def poincare_series(M: MonomialIdeal) -> PoincareSeries:
    return reduce_poincare(hilbert_numerator(M), M.nvars)


# -- brute-force enumeration

def monomials_of_degree(n: int, k: int):
    if n == 0:
        if k == 0:
            yield ()
        return
    for c in itertools.combinations_with_replacement(range(n), k):
        m = [0] * n
        for i in c:
            m[i] += 1
        yield tuple(m)


def standard_monomials(M: MonomialIdeal, D: int) -> tuple:
    """(counts, monomials) of the monomials of degree <= D outside M, per degree."""
    counts, lists = [], []
    for k in range(D + 1):
        ms = sorted((m for m in monomials_of_degree(M.nvars, k) if not M.contains(m)), reverse=True)
        counts.append(len(ms))
        lists.append(ms)
    return counts, lists


@dataclass(frozen=True)
class OrderIdeal:
    monomials: tuple
    maximal: tuple

    @property
    def maximal_degrees(self) -> tuple:
        return tuple(sorted(sum(m) for m in self.maximal))

    @property
    def pure(self) -> bool:
        return len(set(self.maximal_degrees)) <= 1

    def __len__(self):
        return len(self.monomials)


def is_artinian(M: MonomialIdeal) -> bool:
    return all(M.pure_power(i) is not None for i in range(M.nvars))


def order_ideal(M: MonomialIdeal) -> OrderIdeal:
    if not is_artinian(M):
        raise NotArtinian("some variable has no pure power in the ideal")
    top = sum(M.pure_power(i) - 1 for i in range(M.nvars))
    _, lists = standard_monomials(M, top)
    mons = tuple(m for level in lists for m in level)
    n = M.nvars
    maximal = tuple(
        m for m in mons
        if all(M.contains(tuple(e + (j == i) for j, e in enumerate(m))) for i in range(n))
    )
    return OrderIdeal(mons, maximal)
