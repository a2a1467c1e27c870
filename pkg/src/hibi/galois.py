"""Certificates that Gal_Q(f) is the full symmetric group.

A certificate bundles an irreducibility certificate with two witness
primes: one where f splits as a linear factor times an irreducible factor
of degree d-1 (an (d-1)-cycle in the Galois group) and one where f splits
as a quadratic times irreducibles of odd degree (a power of it is a
transposition).  Both reductions must be squarefree, otherwise the
factor degrees say nothing about Frobenius cycle types.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from sympy import sieve

from hibi.algebra import (
    CERTIFIED, IrreducibilityCertificate, UniPolyQ, admit_prime, check_prime,
    feasible_factor_degrees, irreducibility_certificate, proper_intersection,
    Witness,
)

DEFAULT_BOUND = 10000
B1, B2 = "B1", "B2"


class GaloisCertificationError(ValueError):
    pass


class IrreducibilityNotCertified(GaloisCertificationError):
    pass


class PatternB1Failed(GaloisCertificationError):
    def __init__(self, p, pattern=None):
        super().__init__(f"pattern at {p} is not (1, d-1): {pattern}")
        self.prime = p


class PatternB2Failed(GaloisCertificationError):
    def __init__(self, p, pattern=None):
        super().__init__(f"pattern at {p} is not (2, odd, ...): {pattern}")
        self.prime = p


class NotSquarefreeAt(GaloisCertificationError):
    def __init__(self, p, reason="not squarefree"):
        super().__init__(f"reduction modulo {p} is unusable: {reason}")
        self.prime = p


class SearchExhausted(GaloisCertificationError):
    def __init__(self, bound, partial):
        missing = [k for k in ("b1", "b2", "irreducibility") if partial.get(k) is None]
        super().__init__(f"no witnesses below {bound}; missing: {', '.join(missing)}")
        self.bound = bound
        self.partial = partial


def matches_b1(pattern: Iterable[int], d: int) -> bool:
    return Counter(pattern) == Counter([1, d - 1])


def matches_b2(pattern: Iterable[int], d: int) -> bool:
    pattern = list(pattern)
    evens = [e for e in pattern if e % 2 == 0]
    return evens == [2]


@dataclass(frozen=True)
class PatternTest:
    kind: str
    prime: int
    pattern: tuple
    passed: bool


@dataclass(frozen=True)
class SymmetricGaloisCertificate:
    polynomial: UniPolyQ
    degree: int
    irreducibility: IrreducibilityCertificate
    b1: PatternTest
    b2: PatternTest

    @property
    def conclusion(self) -> str:
        return f"S_{self.degree}"

    def validate(self) -> bool:
        """Recompute every stored pattern from scratch."""
        f = self.polynomial
        for w in self.irreducibility.witnesses:
            if admit_prime(f, w.prime)[0] != w.pattern:
                return False
        if self.irreducibility.verdict != CERTIFIED:
            return False
        if proper_intersection(self.degree, self.irreducibility.witnesses):
            return False
        for test, check in ((self.b1, matches_b1), (self.b2, matches_b2)):
            pattern, _ = admit_prime(f, test.prime)
            if pattern != test.pattern or not check(pattern, self.degree):
                return False
        return True


def _require_monic_integral(f: UniPolyQ, min_degree=1):
    if f.degree < min_degree or not f.is_monic() or not f.is_integral():
        raise ValueError(f"need a monic integer polynomial of degree >= {min_degree}")


@dataclass
class WitnessSearch:
    b1: Optional[PatternTest]
    b2: Optional[PatternTest]
    irreducibility_primes: list
    certified: bool


def find_witness_primes(f: UniPolyQ, bound: int = DEFAULT_BOUND, start: Iterable[int] = ()) -> WitnessSearch:
    """Scan 2, 3, 5, ... <= bound for the first B1 prime, the first B2 prime and
    enough admissible primes to certify irreducibility.

    Primes in ``start`` are used as irreducibility evidence before the scan.
    """
    _require_monic_integral(f, 2)
    d = f.degree
    b1 = b2 = None
    witnesses = []
    used = []
    for p in start:
        pattern, reason = admit_prime(f, p)
        if reason is None:
            witnesses.append(Witness(p, pattern, feasible_factor_degrees(pattern)))
            used.append(p)
    certified = bool(witnesses) and not proper_intersection(d, witnesses)
    for p in sieve.primerange(2, bound + 1):
        if b1 is not None and b2 is not None and certified:
            break
        pattern, reason = admit_prime(f, p)
        if reason is not None:
            continue
        if b1 is None and matches_b1(pattern, d):
            b1 = PatternTest(B1, p, pattern, True)
        if b2 is None and matches_b2(pattern, d):
            b2 = PatternTest(B2, p, pattern, True)
        if not certified and p not in used:
            w = Witness(p, pattern, feasible_factor_degrees(pattern))
            if proper_intersection(d, witnesses + [w]) != proper_intersection(d, witnesses) or not witnesses:
                witnesses.append(w)
                used.append(p)
            certified = not proper_intersection(d, witnesses)
    result = WitnessSearch(b1, b2, used, certified)
    if b1 is None or b2 is None or not certified:
        raise SearchExhausted(bound, {
            "b1": b1, "b2": b2,
            "irreducibility": used if certified else None,
        })
    return result


def _pattern_at(f: UniPolyQ, p: int):
    check_prime(p)
    pattern, reason = admit_prime(f, p)
    if reason is not None:
        raise NotSquarefreeAt(p, reason)
    return pattern


def certify_symmetric_galois(f: UniPolyQ, primes: Optional[tuple] = None,
                             bound: int = DEFAULT_BOUND) -> SymmetricGaloisCertificate:
    """Build and validate a certificate that Gal_Q(f) = S_d.

    ``primes`` is an unordered pair; which prime plays the B1 role and
    which the B2 role is read off the patterns.  Irreducibility evidence
    starts from the pair and is topped up with successive primes when the
    pair alone leaves a feasible proper factor degree.
    """
    _require_monic_integral(f, 2)
    d = f.degree
    if primes is None:
        try:
            found = find_witness_primes(f, bound)
        except SearchExhausted as exc:
            if exc.partial["irreducibility"] is None:
                raise IrreducibilityNotCertified(str(exc)) from exc
            raise
        b1, b2 = found.b1, found.b2
        irr_primes = found.irreducibility_primes
    else:
        p, q = primes
        pat_p, pat_q = _pattern_at(f, p), _pattern_at(f, q)
        irr = irreducibility_certificate(f, [p, q])
        irr_primes = [w.prime for w in irr.witnesses]
        if irr.verdict != CERTIFIED:
            try:
                irr_primes = find_witness_primes(f, bound, start=irr_primes).irreducibility_primes
            except SearchExhausted as exc:
                if exc.partial["irreducibility"] is None:
                    raise IrreducibilityNotCertified(
                        f"irreducibility of {f} not certified by primes <= {bound}") from exc
                irr_primes = exc.partial["irreducibility"]
        if matches_b1(pat_p, d) and matches_b2(pat_q, d):
            b1, b2 = PatternTest(B1, p, pat_p, True), PatternTest(B2, q, pat_q, True)
        elif matches_b1(pat_q, d) and matches_b2(pat_p, d):
            b1, b2 = PatternTest(B1, q, pat_q, True), PatternTest(B2, p, pat_p, True)
        elif not (matches_b1(pat_p, d) or matches_b1(pat_q, d)):
            raise PatternB1Failed(p, pat_p)
        else:
            bad = q if matches_b1(pat_p, d) else p
            raise PatternB2Failed(bad, pat_q if bad == q else pat_p)
    irr = irreducibility_certificate(f, irr_primes)
    if irr.verdict != CERTIFIED:
        raise IrreducibilityNotCertified(f"irreducibility of {f} not certified")
    cert = SymmetricGaloisCertificate(f, d, irr, b1, b2)
    assert cert.validate()
    return cert
