"""h-vector diagnostics, Cohen-Macaulay checks and the counterexample pipeline."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from hibi.algebra import x_d_minus_x_minus_1
from hibi.galois import (
    DEFAULT_BOUND, GaloisCertificationError, SymmetricGaloisCertificate,
    certify_symmetric_galois,
)
from hibi.groebner import Ideal, Ring, homogenize_ideal, is_nzd, set_variable_zero
from hibi.hilbert import (
    HVector, OrderIdeal, PoincareSeries, h_vector, lt_ideal, order_ideal,
    poincare_series,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    condition: str  # "i" or "ii"
    index: int
    left: int
    right: int


@dataclass(frozen=True)
class FlawlessReport:
    h: tuple
    violations: tuple

    @property
    def flawless(self) -> bool:
        return not self.violations


def is_flawless(h: Sequence[int]) -> FlawlessReport:
    """Check h_0 <= ... <= h_[delta/2] (condition i) and h_i <= h_{delta-i} (condition ii)."""
    h = tuple(h)
    if not h:
        raise ValueError("empty h-vector")
    delta = len(h) - 1
    half = delta // 2
    out = []
    for i in range(half):
        if h[i] > h[i + 1]:
            out.append(Violation("i", i, h[i], h[i + 1]))
    for i in range(half + 1):
        if h[i] > h[delta - i]:
            out.append(Violation("ii", i, h[i], h[delta - i]))
    return FlawlessReport(h, tuple(out))


@dataclass(frozen=True)
class InequalityCheck:
    index: int
    left: int
    right: int

    @property
    def holds(self) -> bool:
        return self.left <= self.right


@dataclass(frozen=True)
class UPPReport:
    h: tuple
    checks: tuple

    @property
    def satisfied(self) -> bool:
        return all(c.holds for c in self.checks)


def galligo_inequalities(h: Sequence[int]) -> UPPReport:
    """h_0 + ... + h_i <= h_{delta-i} + ... + h_{delta-1} + 1 for i = 1..[delta/2].

    These hold for h-vectors of G-symmetric point sets (uniform position).
    """
    h = tuple(h)
    if not h:
        raise ValueError("empty h-vector")
    delta = len(h) - 1
    checks = tuple(
        InequalityCheck(i, sum(h[:i + 1]), sum(h[delta - i:delta]) + 1)
        for i in range(1, delta // 2 + 1)
    )
    return UPPReport(h, checks)


@dataclass(frozen=True)
class CMReport:
    ideal: Ideal
    sequence: tuple
    steps: tuple  # ((variable, is_nzd), ...)
    final_ideal: Ideal
    final_series: Optional[PoincareSeries]

    @property
    def artinian(self) -> bool:
        return self.final_series is not None and self.final_series.pole_order == 0

    @property
    def verified(self) -> bool:
        return (len(self.steps) == len(self.sequence)
                and all(ok for _, ok in self.steps) and self.artinian)


def ideal_series(J: Ideal) -> PoincareSeries:
    return poincare_series(lt_ideal(J.groebner()))


def verify_regular_sequence(J: Ideal, variables: Sequence[str]) -> CMReport:
    """Test that the listed variables form a regular sequence modulo J.

    Stops at the first variable that is a zero divisor.
    """
    for v in variables:
        J.ring.index(v)
    steps = []
    current = J
    for v in variables:
        ok = is_nzd(current, current.ring.gen(v))
        steps.append((v, ok))
        log.debug("%s nzd modulo ideal: %s", v, ok)
        if not ok:
            return CMReport(J, tuple(variables), tuple(steps), current, None)
        current = set_variable_zero(current, v)
    return CMReport(J, tuple(variables), tuple(steps), current, ideal_series(current))


DOMAIN_NOTE = {
    False: "domain: Q[X,Y,Z]/I is Q[X]/(f), a field since f is irreducible (not recomputed)",
    True: "domain: C[X,Y,Z,T]/p is C[X], so p and its homogenization are prime (not recomputed)",
}


@dataclass
class CounterexampleReport:
    degree: int
    lift: bool
    polynomial: object
    certificate: Optional[SymmetricGaloisCertificate]
    galois_error: Optional[str]
    affine: Ideal
    homogeneous: Ideal
    series: PoincareSeries
    h: HVector
    flawless: FlawlessReport
    upp: UPPReport
    cm: CMReport
    order_ideal: Optional[OrderIdeal]
    notes: list = field(default_factory=list)

    @property
    def galois_certified(self) -> bool:
        return self.certificate is not None

    @property
    def dimension(self) -> int:
        return self.series.pole_order

    @property
    def multiplicity(self) -> int:
        return self.h.multiplicity


def counterexample_ideal(d: int, lift: bool) -> Ideal:
    """(X^d - X - 1 [- T], Y - X^3, Z - X*Y)."""
    names = ("X", "Y", "Z", "T") if lift else ("X", "Y", "Z")
    R = Ring(names)
    X, Y, Z = R.gen("X"), R.gen("Y"), R.gen("Z")
    f = X ** d - X - 1
    if lift:
        f = f - R.gen("T")
    return Ideal(R, (f, Y - X ** 3, Z - X * Y))


def build_counterexample(d: int, lift: bool = True, primes: Optional[tuple] = None,
                         bound: int = DEFAULT_BOUND) -> CounterexampleReport:
    if d < 2:
        raise ValueError("d must be >= 2")
    f = x_d_minus_x_minus_1(d)
    cert, err = None, None
    try:
        cert = certify_symmetric_galois(f, primes, bound)
    except GaloisCertificationError as exc:
        err = f"{type(exc).__name__}: {exc}"
        log.warning("Galois group of degree %d polynomial not certified: %s", d, err)
    affine = counterexample_ideal(d, lift)
    hom = homogenize_ideal(affine, "W")
    series = ideal_series(hom)
    h = h_vector(series)
    cm = verify_regular_sequence(hom, ["W", "T"] if lift else ["W"])
    oi = None
    if cm.verified:
        oi = order_ideal(lt_ideal(cm.final_ideal.groebner()))
    return CounterexampleReport(
        degree=d, lift=lift, polynomial=f, certificate=cert, galois_error=err,
        affine=affine, homogeneous=hom, series=series, h=h,
        flawless=is_flawless(h.entries), upp=galligo_inequalities(h.entries),
        cm=cm, order_ideal=oi, notes=[DOMAIN_NOTE[lift]],
    )
