"""Multivariate polynomials over Q and Buchberger's algorithm.

Monomials are exponent tuples aligned with the ring's variable list
(leftmost variable greatest).  Polynomials store a ``{monomial: Fraction}``
dict; the monomial order lives on the ring as a sort key.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

ORDERS = ("degrevlex", "deglex")


class RingMismatch(ValueError):
    pass


class UnknownVariable(ValueError):
    pass


class VariableCollision(ValueError):
    pass


def _revkey(mon):
    return tuple(-e for e in reversed(mon))


@dataclass(frozen=True)
class Ring:
    """Polynomial ring Q[variables] with a degree-compatible monomial order.

    ``elim`` > 0 selects a block order: the first ``elim`` variables form a
    block compared first (degrevlex inside each block).  Only used
    internally for elimination.
    """

    variables: tuple
    order: str = "degrevlex"
    elim: int = 0

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise VariableCollision(f"duplicate variable in {self.variables}")
        if self.order not in ORDERS:
            raise ValueError(f"unknown monomial order {self.order!r}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariable(name) from None

    def key(self, mon: tuple):
        k = self.elim
        if k:
            head, tail = mon[:k], mon[k:]
            return (sum(head), _revkey(head), sum(tail), _revkey(tail))
        if self.order == "degrevlex":
            return (sum(mon), _revkey(mon))
        return (sum(mon), mon)

    def order_compare(self, a: tuple, b: tuple) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def one(self) -> tuple:
        return (0,) * self.nvars

    def gen(self, name: str) -> "MPoly":
        i = self.index(name)
        mon = tuple(1 if j == i else 0 for j in range(self.nvars))
        return MPoly(self, {mon: Fraction(1)})

    def gens(self):
        return [self.gen(v) for v in self.variables]

    def constant(self, c) -> "MPoly":
        c = Fraction(c)
        return MPoly(self, {self.one(): c} if c else {})

    def zero(self) -> "MPoly":
        return MPoly(self, {})

    def extend(self, name: str, first: bool = False, elim: int = 0) -> "Ring":
        if name in self.variables:
            raise VariableCollision(name)
        vs = (name,) + self.variables if first else self.variables + (name,)
        return Ring(vs, self.order, elim)

    def drop(self, name: str) -> "Ring":
        i = self.index(name)
        return Ring(self.variables[:i] + self.variables[i + 1:], self.order)

    def fresh_name(self, stem: str = "_t") -> str:
        i = 0
        while f"{stem}{i}" in self.variables:
            i += 1
        return f"{stem}{i}"

    def __str__(self):
        return f"Q[{','.join(self.variables)}] order {self.order}"


def mon_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mon_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def mon_div(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def mon_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


class MPoly:
    """Immutable polynomial over Q in a given ring."""

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = {m: Fraction(c) for m, c in terms.items() if c}
        self._lm = None

    # -- basic queries
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lm(self) -> tuple:
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=self.ring.key)
        return self._lm

    @property
    def lc(self) -> Fraction:
        return self.terms[self.lm]

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    @property
    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def variables_used(self) -> set:
        return {self.ring.variables[i] for m in self.terms for i, e in enumerate(m) if e}

    # -- arithmetic
    def _check(self, other: "MPoly"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, MPoly):
            self._check(other)
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = Fraction(other)
            return MPoly(self.ring, {m: a * c for m, a in self.terms.items()})
        self._check(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mon_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = self.ring.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def mul_term(self, mon: tuple, c) -> "MPoly":
        return MPoly(self.ring, {mon_mul(m, mon): a * c for m, a in self.terms.items()})

    def monic(self) -> "MPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.ring == other.ring and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- substitutions and ring changes
    def substitute(self, name: str, value: int) -> "MPoly":
        """Set a variable to the constant ``value`` and drop it from the ring."""
        i = self.ring.index(name)
        target = self.ring.drop(name)
        out: dict = {}
        for m, c in self.terms.items():
            e = m[i]
            if e and value == 0:
                continue
            nm = m[:i] + m[i + 1:]
            out[nm] = out.get(nm, 0) + c * (Fraction(value) ** e)
        return MPoly(target, out)

    def homogenize(self, target: Ring, degree: int | None = None) -> "MPoly":
        """Homogenize with the last variable of ``target`` (one more than ours)."""
        d = self.total_degree if degree is None else degree
        return MPoly(target, {m + (d - sum(m),): c for m, c in self.terms.items()})

    def embed(self, target: Ring, offset: int = 0) -> "MPoly":
        """Map into a ring that has ``offset`` extra leading variables."""
        pad = (0,) * offset
        tail = (0,) * (target.nvars - offset - self.ring.nvars)
        return MPoly(target, {pad + m + tail: c for m, c in self.terms.items()})

    def restrict(self, target: Ring, offset: int = 0) -> "MPoly":
        n = target.nvars
        out = {}
        for m, c in self.terms.items():
            if any(m[:offset]) or any(m[offset + n:]):
                raise ValueError("polynomial involves dropped variables")
            out[m[offset:offset + n]] = c
        return MPoly(target, out)

    # -- printing
    def __str__(self):
        from hibi.report import format_mpoly
        return format_mpoly(self)

    def __repr__(self):
        return f"MPoly({self})"


def s_polynomial(f: MPoly, g: MPoly) -> MPoly:
    f._check(g)
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of the zero polynomial")
    lcm = mon_lcm(f.lm, g.lm)
    return f.mul_term(mon_div(lcm, f.lm), 1 / f.lc) - g.mul_term(mon_div(lcm, g.lm), 1 / g.lc)


def normal_form(f: MPoly, G: Sequence[MPoly]) -> MPoly:
    """Fully reduced remainder of f modulo G.

    The reducer for each term is the first element of G (in the given
    order) whose leading monomial divides it.
    """
    G = [g for g in G if not g.is_zero()]
    for g in G:
        f._check(g)
    key = f.ring.key
    leads = [(g.lm, g.lc, g) for g in G]
    p = dict(f.terms)
    r = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, lc, g in leads:
            if mon_divides(lm, m):
                q = mon_div(m, lm)
                coef = c / lc
                for gm, gc in g.terms.items():
                    t = mon_mul(gm, q)
                    v = p.get(t, 0) - coef * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            r[m] = c
            del p[m]
    return MPoly(f.ring, r)


def divide_exact(f: MPoly, g: MPoly) -> MPoly:
    """Quotient f / g; raises if g does not divide f."""
    f._check(g)
    key = f.ring.key
    p = dict(f.terms)
    q = {}
    glm, glc = g.lm, g.lc
    while p:
        m = max(p, key=key)
        if not mon_divides(glm, m):
            raise ValueError("inexact division")
        qm = mon_div(m, glm)
        coef = p[m] / glc
        q[qm] = coef
        for gm, gc in g.terms.items():
            t = mon_mul(gm, qm)
            v = p.get(t, 0) - coef * gc
            if v:
                p[t] = v
            else:
                p.pop(t, None)
    return MPoly(f.ring, q)


def basis_sort(polys: Iterable[MPoly], ring: Ring) -> list:
    """Ascending total degree of the leading monomial, descending order within a degree."""
    polys = sorted(polys, key=lambda g: ring.key(g.lm), reverse=True)
    return sorted(polys, key=lambda g: sum(g.lm))


@dataclass(frozen=True)
class GroebnerBasis:
    ring: Ring
    elements: tuple
    reduced: bool = True

    def leading_monomials(self) -> list:
        return [g.lm for g in self.elements]

    def reduce(self, f: MPoly) -> MPoly:
        return normal_form(f, self.elements)

    def contains(self, f: MPoly) -> bool:
        return self.reduce(f).is_zero()

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _interreduce(G: list, ring: Ring) -> list:
    G = [g.monic() for g in G if not g.is_zero()]
    # minimal basis: drop elements whose leading monomial is divisible by another's
    G = sorted(G, key=lambda g: ring.key(g.lm))
    minimal = []
    for g in G:
        if not any(mon_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        out.append(normal_form(g, others).monic())
    return basis_sort(out, ring)


def buchberger_reduced(generators: Iterable[MPoly], ring: Ring | None = None) -> GroebnerBasis:
    """Reduced Groebner basis via Buchberger with the normal selection strategy."""
    gens = [g for g in generators if not g.is_zero()]
    if ring is None:
        if not gens:
            raise ValueError("ring needed for the zero ideal")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatch(f"{g.ring} vs {ring}")
    if not gens:
        return GroebnerBasis(ring, ())
    key = ring.key
    G = [g.monic() for g in gens]
    pending = {(i, j) for j in range(len(G)) for i in range(j)}

    def pair_key(ij):
        i, j = ij
        lcm = mon_lcm(G[i].lm, G[j].lm)
        return (sum(lcm), key(lcm), i, j)

    while pending:
        i, j = min(pending, key=pair_key)
        pending.discard((i, j))
        a, b = G[i].lm, G[j].lm
        lcm = mon_lcm(a, b)
        if mon_mul(a, b) == lcm:
            continue
        chain = False
        for k in range(len(G)):
            if k in (i, j) or not mon_divides(G[k].lm, lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                chain = True
                break
        if chain:
            continue
        h = normal_form(s_polynomial(G[i], G[j]), G)
        if h.is_zero():
            continue
        G.append(h.monic())
        n = len(G) - 1
        pending |= {(k, n) for k in range(n)}
    return GroebnerBasis(ring, tuple(_interreduce(G, ring)), True)


@dataclass(frozen=True)
class Ideal:
    ring: Ring
    generators: tuple
    _gb: list = field(default_factory=list, compare=False, repr=False)

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero())
        for g in gens:
            if g.ring != self.ring:
                raise RingMismatch(f"{g.ring} vs {self.ring}")
        object.__setattr__(self, "generators", gens)

    def groebner(self) -> GroebnerBasis:
        if not self._gb:
            self._gb.append(buchberger_reduced(self.generators, self.ring))
        return self._gb[0]

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def _same_ring(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise RingMismatch(f"{I.ring} vs {J.ring}")


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    _same_ring(I, J)
    gi, gj = I.groebner(), J.groebner()
    return (all(gj.contains(g) for g in I.generators)
            and all(gi.contains(g) for g in J.generators))


def homogenize_ideal(I: Ideal, newvar: str = "W") -> Ideal:
    """Homogenization of I: the reduced basis of I, each element homogenized
    with ``newvar`` appended as the least variable."""
    target = I.ring.extend(newvar)
    gb = I.groebner()
    hom = [g.homogenize(target) for g in gb]
    out = Ideal(target, tuple(basis_sort(hom, target)))
    if target.order == "degrevlex":
        # with the new variable last, degrevlex restricted to homogeneous
        # elements agrees with the order the homogenized basis is a GB for
        out._gb.append(GroebnerBasis(target, tuple(_interreduce(hom, target)), True))
    return out


def dehomogenize_ideal(I: Ideal, var: str) -> Ideal:
    I.ring.index(var)
    return Ideal(I.ring.drop(var), tuple(g.substitute(var, 1) for g in I.generators))


def set_variable_zero(J: Ideal, var: str) -> Ideal:
    J.ring.index(var)
    gens = [g.substitute(var, 0) for g in J.groebner()]
    return Ideal(J.ring.drop(var), tuple(gens))


def ideal_intersection_principal(J: Ideal, f: MPoly) -> list:
    """Generators of J cap (f) by eliminating an auxiliary variable t
    from t*J + (1-t)*f."""
    ring = J.ring
    t = ring.fresh_name()
    big = ring.extend(t, first=True, elim=1)
    tt = big.gen(t)
    gens = [tt * g.embed(big, 1) for g in J.generators]
    gens.append((1 - tt) * f.embed(big, 1))
    gb = buchberger_reduced(gens, big)
    return [g.restrict(ring, 1) for g in gb if g.lm[0] == 0]


def ideal_quotient(J: Ideal, f: MPoly) -> Ideal:
    """(J : f) = {g : g*f in J}."""
    if f.is_zero():
        raise ValueError("quotient by the zero polynomial")
    if f.ring != J.ring:
        raise RingMismatch(f"{f.ring} vs {J.ring}")
    gens = [divide_exact(g, f) for g in ideal_intersection_principal(J, f)]
    return Ideal(J.ring, tuple(gens))


def is_nzd(J: Ideal, f: MPoly) -> bool:
    return ideal_equal(ideal_quotient(J, f), J)
