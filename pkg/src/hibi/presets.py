"""Reproduction presets: the published fixtures for the X^d - X - 1 family.

Fixture strings are kept in the published notation (juxtaposed variables)
and go through the ordinary parser before comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from hibi.analysis import build_counterexample
from hibi.groebner import Ring, set_variable_zero
from hibi.parser import parse_ideal
from hibi.report import (
    format_canonical_ideal, format_hvector, format_monomial_set,
    format_series, render_report,
)

@dataclass(frozen=True)
class ReproPreset:
    name: str
    degree: int
    primes: tuple
    h_vector: tuple
    series: Optional[str] = None
    points_series: Optional[str] = None
    points_generators: Optional[str] = None
    generators: Optional[str] = None
    w_quotient: Optional[str] = None
    order_ideal: Optional[str] = None
    maximal: Optional[str] = None
    maximal_degrees: Optional[tuple] = None


HIBI18 = ReproPreset(
    name="hibi18",
    degree=18,
    primes=(3, 5),
    h_vector=(1, 3, 5, 4, 4, 1),
    series="(1 + 3λ + 5λ^2 + 4λ^3 + 4λ^4 + λ^5)/(1-λ)^2",
    points_series="(1 + 3λ + 5λ^2 + 4λ^3 + 4λ^4 + λ^5)/(1-λ)",
    points_generators=(
        "XY - ZW, X^3 - YW^2, X^2Z - Y^2W, Y^3 - XZ^2, Y^2Z^3 - XW^4 - W^5, "
        "YZ^4 - X^2W^3 - XW^4, Z^5 - X^2W^3 - YW^4"
    ),
    generators=(
        "XY - ZW, X^3 - YW^2, X^2Z - Y^2W, Y^3 - XZ^2, Y^2Z^3 + XW^4 + TW^4 + W^5, "
        "YZ^4 + X^2W^3 + XTW^3 + XW^4, Z^5 + X^2TW^2 + X^2W^3 + YW^4"
    ),
    w_quotient="XY, X^3, X^2Z, Y^3 - XZ^2, Y^2Z^3, YZ^4, Z^5",
    order_ideal=(
        "1, X, Y, Z, X^2, XZ, Y^2, YZ, Z^2, XZ^2, Y^2Z, YZ^2, Z^3, XZ^3, "
        "Y^2Z^2, YZ^3, Z^4, XZ^4"
    ),
    maximal="X^2, Y^2Z^2, YZ^3, XZ^4",
    maximal_degrees=(2, 4, 4, 5),
)

PRESETS = {
    "hibi18": HIBI18,
    "hibi22": ReproPreset("hibi22", 22, (29, 107), (1, 3, 5, 4, 4, 4, 1)),
    "hibi26": ReproPreset("hibi26", 26, (19, 67), (1, 3, 5, 4, 4, 4, 4, 1)),
    "hibi30": ReproPreset("hibi30", 30, (5, 53), (1, 3, 5, 4, 4, 4, 4, 4, 1)),
}


@dataclass(frozen=True)
class FixtureCheck:
    label: str
    expected: str
    actual: str

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


def _canonical(text: str, variables) -> str:
    return format_canonical_ideal(parse_ideal(text, Ring(tuple(variables))))


def _mon_set(text: str, variables) -> str:
    ring = Ring(tuple(variables))
    mons = []
    for part in text.split(","):
        g = parse_ideal(part, ring).generators
        mons.append(g[0].lm if g else ring.one())
    return format_monomial_set(sorted(mons), variables)


def run_preset(preset: ReproPreset):
    """Recompute everything for a preset; returns (report text, checks)."""
    report = build_counterexample(preset.degree, lift=True, primes=preset.primes)
    checks = []
    cert = report.certificate
    want = ",".join(str(p) for p in sorted(preset.primes))
    if cert is not None:
        got = ",".join(str(p) for p in sorted((cert.b1.prime, cert.b2.prime)))
        got = f"S_{preset.degree} with primes {{{got}}}"
    else:
        got = f"not certified ({report.galois_error})"
    checks.append(FixtureCheck("galois group", f"S_{preset.degree} with primes {{{want}}}", got))
    checks.append(FixtureCheck("h-vector", format_hvector(preset.h_vector), format_hvector(report.h)))
    checks.append(FixtureCheck("flawless", "no", "yes" if report.flawless.flawless else "no"))
    checks.append(FixtureCheck("cohen-macaulay", "verified",
                               "verified" if report.cm.verified else "not verified"))
    if preset.series:
        checks.append(FixtureCheck("series", preset.series, format_series(report.series)))
    if preset.generators:
        hv = report.homogeneous.ring.variables
        checks.append(FixtureCheck("homogeneous ideal", _canonical(preset.generators, hv),
                                   format_canonical_ideal(report.homogeneous)))
    if preset.w_quotient:
        wq = set_variable_zero(report.homogeneous, "W")
        checks.append(FixtureCheck("quotient by W", _canonical(preset.w_quotient, wq.ring.variables),
                                   format_canonical_ideal(wq)))
    if preset.order_ideal:
        names = report.cm.final_ideal.ring.variables
        oi = report.order_ideal
        checks.append(FixtureCheck("order ideal", _mon_set(preset.order_ideal, names),
                                   format_monomial_set(sorted(oi.monomials), names) if oi else "n/a"))
        checks.append(FixtureCheck("maximal elements", _mon_set(preset.maximal, names),
                                   format_monomial_set(sorted(oi.maximal), names) if oi else "n/a"))
        checks.append(FixtureCheck("maximal degrees", ",".join(map(str, preset.maximal_degrees)),
                                   ",".join(map(str, oi.maximal_degrees)) if oi else "n/a"))
        checks.append(FixtureCheck("order ideal pure", "no", ("yes" if oi.pure else "no") if oi else "n/a"))
    text = render_report(report)
    if preset.points_generators:
        points = build_counterexample(preset.degree, lift=False, primes=preset.primes)
        hv = points.homogeneous.ring.variables
        checks.append(FixtureCheck("points: homogeneous ideal", _canonical(preset.points_generators, hv),
                                   format_canonical_ideal(points.homogeneous)))
        checks.append(FixtureCheck("points: series", preset.points_series, format_series(points.series)))
        checks.append(FixtureCheck("points: h-vector", format_hvector(preset.h_vector),
                                   format_hvector(points.h)))
        checks.append(FixtureCheck("points: flawless", "no", "yes" if points.flawless.flawless else "no"))
        checks.append(FixtureCheck("points: upp inequalities", "satisfied",
                                   "satisfied" if points.upp.satisfied else "violated"))
        checks.append(FixtureCheck("points: cohen-macaulay", "verified",
                                   "verified" if points.cm.verified else "not verified"))
        text += "\n" + render_report(points)
    return text, checks


def format_checks(checks) -> str:
    lines = ["fixture checks:"]
    for c in checks:
        if c.ok:
            lines.append(f"  ok        {c.label}: {c.actual}")
        else:
            lines.append(f"  MISMATCH  {c.label}")
            lines.append(f"    expected: {c.expected}")
            lines.append(f"    actual:   {c.actual}")
    bad = sum(not c.ok for c in checks)
    lines.append(f"result: {'all fixtures match' if not bad else f'{bad} mismatch(es)'}")
    return "\n".join(lines) + "\n"
