"""Canonical text rendering for polynomials, series and reports."""

from __future__ import annotations

from fractions import Fraction


def format_coeff(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(mon, names) -> str:
    parts = []
    for name, e in zip(names, mon):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_mpoly(f) -> str:
    """Terms in descending monomial order, e.g. ``X*Y - Z*W``."""
    terms = f.sorted_terms()
    if not terms:
        return "0"
    out = []
    for k, (m, c) in enumerate(terms):
        mon = format_monomial(m, f.ring.variables)
        a = abs(c)
        if not mon:
            body = format_coeff(a)
        elif a == 1:
            body = mon
        else:
            body = f"{format_coeff(a)}*{mon}"
        if k == 0:
            out.append("-" + body if c < 0 else body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def format_ideal(I) -> str:
    if I.is_zero():
        return "(0)"
    return "(" + ", ".join(format_mpoly(g) for g in I.generators) + ")"


def format_canonical_ideal(I) -> str:
    """The reduced Groebner basis; two ideals render equal iff they are equal."""
    gb = I.groebner()
    if not len(gb):
        return "(0)"
    return "(" + ", ".join(format_mpoly(g) for g in gb) + ")"


def format_hvector(h) -> str:
    return "(" + ",".join(str(x) for x in h) + ")"


def format_lambda_poly(coeffs, var: str = "λ") -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mon = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        a = abs(c)
        body = str(a) if not mon else mon if a == 1 else f"{a}{mon}"
        if not parts:
            parts.append("-" + body if c < 0 else body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) or "0"


def format_series(S) -> str:
    """``(1 + 3λ + ...)/(1-λ)^d``; the denominator is omitted when d = 0."""
    num = format_lambda_poly(S.numerator)
    if S.pole_order == 0:
        return num
    den = "(1-λ)" if S.pole_order == 1 else f"(1-λ)^{S.pole_order}"
    return f"({num})/{den}"


def format_pattern(pattern) -> str:
    return "{" + ",".join(str(e) for e in sorted(pattern)) + "}"


def format_degree_set(s) -> str:
    return "{" + ",".join(str(e) for e in sorted(s)) + "}"


def format_factor_list(fl, var: str = "X", balanced: bool = False) -> list:
    lines = [f"unit: {fl.unit.residue}"]
    for g, m in fl.factors:
        mult = f"^{m}" if m > 1 else ""
        lines.append(f"factor: ({g.to_str(var, balanced)}){mult}  [degree {g.degree}]")
    lines.append("degree pattern: " + format_pattern(fl.degrees()))
    return lines


def format_irreducibility(cert) -> list:
    lines = [f"irreducibility: {cert.verdict}"]
    for w in cert.witnesses:
        proper = {e for e in w.feasible if 0 < e < cert.polynomial.degree}
        lines.append(f"  prime {w.prime}: pattern {format_pattern(w.pattern)}, "
                     f"feasible proper degrees {format_degree_set(proper)}")
    for p, reason in cert.rejected:
        lines.append(f"  prime {p}: skipped ({reason})")
    lines.append(f"  common feasible proper degrees: {format_degree_set(cert.intersection)}")
    return lines


def format_certificate(cert, var: str = "X") -> list:
    lines = [f"polynomial: {cert.polynomial.to_str(var)}",
             f"galois group: {cert.conclusion} (certified)"]
    lines += format_irreducibility(cert.irreducibility)
    for t in (cert.b1, cert.b2):
        lines.append(f"{t.kind.lower()}: prime {t.prime}, pattern {format_pattern(t.pattern)}")
    return lines


def format_monomial_set(mons, names) -> str:
    return "{" + ", ".join(format_monomial(m, names) or "1" for m in mons) + "}"


def format_flawless(fr) -> str:
    if fr.flawless:
        return "yes"
    v = "; ".join(f"{x.condition} at i={x.index} ({x.left} > {x.right})" for x in fr.violations)
    return f"no; violations: {v}"


def format_upp(ur) -> str:
    checks = "; ".join(f"i={c.index}: {c.left} <= {c.right}" if c.holds
                       else f"i={c.index}: {c.left} > {c.right}" for c in ur.checks)
    verdict = "satisfied" if ur.satisfied else "violated"
    return f"{verdict} ({checks})" if checks else f"{verdict} (no indices)"


def format_cm(cm) -> list:
    steps = ", ".join(f"{v}: {'nzd' if ok else 'zero divisor'}" for v, ok in cm.steps)
    verdict = "verified" if cm.verified else "not verified"
    lines = [f"cohen-macaulay: {verdict} (sequence {','.join(cm.sequence)}; {steps})"]
    lines.append(f"  final ideal: {format_canonical_ideal(cm.final_ideal)} in Q[{','.join(cm.final_ideal.ring.variables)}]")
    if cm.final_series is not None:
        lines.append(f"  final series: {format_series(cm.final_series)}; artinian: {'yes' if cm.artinian else 'no'}")
    return lines


def format_order_ideal(oi, names) -> list:
    if oi is None:
        return ["order ideal: n/a (no Artinian reduction)"]
    return [
        f"order ideal: {format_monomial_set(oi.monomials, names)}",
        f"  size: {len(oi)}",
        f"  maximal elements: {format_monomial_set(oi.maximal, names)}",
        f"  maximal degrees: {','.join(str(d) for d in oi.maximal_degrees)}",
        f"  pure: {'yes' if oi.pure else 'no'}",
    ]


def render_report(report) -> str:
    """Deterministic multi-line rendering of a CounterexampleReport."""
    lines = [f"construction: degree {report.degree}, {'lifted' if report.lift else 'points'}"]
    if report.certificate is not None:
        lines += format_certificate(report.certificate)
    else:
        lines.append(f"polynomial: {report.polynomial}")
        lines.append(f"galois group: not certified ({report.galois_error})")
    lines.append(f"affine ideal: {format_ideal(report.affine)} in Q[{','.join(report.affine.ring.variables)}]")
    lines.append(f"homogeneous ideal: {format_canonical_ideal(report.homogeneous)}"
                 f" in Q[{','.join(report.homogeneous.ring.variables)}]")
    lines.append(f"series: {format_series(report.series)}")
    lines.append(f"h-vector: {format_hvector(report.h)}")
    lines.append(f"dimension: {report.dimension}")
    lines.append(f"multiplicity: {report.multiplicity}")
    lines.append(f"flawless: {format_flawless(report.flawless)}")
    lines.append(f"upp inequalities: {format_upp(report.upp)}")
    lines += format_cm(report.cm)
    names = report.cm.final_ideal.ring.variables
    lines += format_order_ideal(report.order_ideal, names)
    lines += report.notes
    return "\n".join(lines) + "\n"
