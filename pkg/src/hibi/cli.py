"""Command line interface.

Exit codes: 0 success or all fixtures match, 1 negative verdict or fixture
mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from hibi.algebra import NotPrimeModulus, check_prime, factor_mod_p
from hibi.analysis import galligo_inequalities, ideal_series, is_flawless, verify_regular_sequence
from hibi.galois import DEFAULT_BOUND, GaloisCertificationError, certify_symmetric_galois
from hibi.groebner import UnknownVariable, VariableCollision, homogenize_ideal, set_variable_zero
from hibi.hilbert import NotArtinian, h_vector, lt_ideal, order_ideal
from hibi.parser import ParseError, parse_document, parse_univariate
from hibi.presets import PRESETS, format_checks, run_preset
from hibi.report import (
    format_certificate, format_cm, format_factor_list, format_flawless, format_hvector,
    format_ideal, format_mpoly, format_order_ideal, format_series, format_upp,
)

log = logging.getLogger("hibi")


class UsageError(Exception):
    pass


def _load(path: str, ideal: str | None):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = parse_document(text)
        return doc.ideal(ideal)
    except ParseError as exc:
        raise UsageError(f"{path}:{exc}") from None
    except KeyError as exc:
        raise UsageError(f"{path}: {exc.args[0]}") from None


def _vars(spec: str) -> list:
    return [v.strip() for v in spec.split(",") if v.strip()]


def cmd_factor(args):
    try:
        p = check_prime(args.modulus)
    except NotPrimeModulus:
        raise UsageError("modulus must be prime") from None
    f, var = _univariate(args.poly)
    if not f.is_integral():
        raise UsageError("coefficients must be integers")
    fp = f.reduce(p)
    if fp.is_zero():
        raise UsageError("polynomial vanishes modulo p")
    fl = factor_mod_p(fp, args.seed)
    lines = [f"polynomial: {fp.to_str(var, args.balanced)} (mod {p})"]
    lines += format_factor_list(fl, var, args.balanced)
    return 0, lines


def _univariate(text):
    try:
        return parse_univariate(text)
    except ParseError as exc:
        raise UsageError(f"--poly: {exc}") from None


def cmd_galois(args):
    f, var = _univariate(args.poly)
    primes = None
    if args.primes:
        try:
            primes = tuple(int(p) for p in args.primes.split(","))
        except ValueError:
            raise UsageError("--primes expects two comma-separated integers") from None
        if len(primes) != 2:
            raise UsageError("--primes expects exactly two primes")
        for p in primes:
            try:
                check_prime(p)
            except NotPrimeModulus:
                raise UsageError(f"{p} is not prime") from None
    if f.degree < 2 or not f.is_monic() or not f.is_integral():
        raise UsageError("need a monic integer polynomial of degree >= 2")
    try:
        cert = certify_symmetric_galois(f, primes, args.bound)
    except GaloisCertificationError as exc:
        return 1, [f"polynomial: {f.to_str(var)}", "galois group: not certified",
                   f"reason: {type(exc).__name__}: {exc}"]
    return 0, format_certificate(cert, var)


def cmd_groebner(args):
    I = _load(args.file, args.ideal)
    return 0, [format_mpoly(g) for g in I.groebner()]


def cmd_homogenize(args):
    I = _load(args.file, args.ideal)
    try:
        H = homogenize_ideal(I, args.var)
    except VariableCollision:
        raise UsageError(f"variable {args.var} already in the ring") from None
    return 0, [f"ring: Q[{','.join(H.ring.variables)}]"] + [format_mpoly(g) for g in H.generators]


def _series_lines(S):
    h = h_vector(S)
    return [f"series: {format_series(S)}", f"h-vector: {format_hvector(h)}",
            f"dimension: {S.pole_order}", f"multiplicity: {h.multiplicity}"]


def cmd_hseries(args):
    I = _load(args.file, args.ideal)
    return 0, _series_lines(ideal_series(I))


def cmd_analyze(args):
    I = _load(args.file, args.ideal)
    S = ideal_series(I)
    h = h_vector(S)
    lines = _series_lines(S)
    lines.append(f"flawless: {format_flawless(is_flawless(h.entries))}")
    lines.append(f"upp inequalities: {format_upp(galligo_inequalities(h.entries))}")
    J = I
    try:
        for v in _vars(args.sequence or ""):
            J = set_variable_zero(J, v)
    except UnknownVariable as exc:
        raise UsageError(f"unknown variable {exc.args[0]}") from None
    try:
        oi = order_ideal(lt_ideal(J.groebner()))
    except NotArtinian:
        oi = None
    lines += format_order_ideal(oi, J.ring.variables)
    return 0, lines


def cmd_verify_cm(args):
    I = _load(args.file, args.ideal)
    try:
        cm = verify_regular_sequence(I, _vars(args.sequence))
    except UnknownVariable as exc:
        raise UsageError(f"unknown variable {exc.args[0]}") from None
    lines = [f"ideal: {format_ideal(I)}"] + format_cm(cm)
    return (0 if cm.verified else 1), lines


def cmd_reproduce(args):
    names = list(PRESETS) if args.preset == "all" else [args.preset]
    code, lines = 0, []
    for name in names:
        text, checks = run_preset(PRESETS[name])
        lines.append(f"== reproduce {name} ==")
        lines.append(text.rstrip("\n"))
        lines.append(format_checks(checks).rstrip("\n"))
        if not all(c.ok for c in checks):
            code = 1
    return code, lines


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="also write the report to this file")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="hibi", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", parents=[common], help="factor a univariate polynomial over F_p")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--balanced", action="store_true", help="print residues in (-p/2, p/2]")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("galois-cert", parents=[common], help="certify Gal(f) = S_d")
    p.add_argument("--poly", required=True)
    p.add_argument("--primes", help="p1,p2 (roles are detected)")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.set_defaults(func=cmd_galois)

    for name, func, helptext in (
        ("groebner", cmd_groebner, "reduced Groebner basis"),
        ("homogenize", cmd_homogenize, "homogenize with a new variable"),
        ("hseries", cmd_hseries, "Hilbert-Poincare series and h-vector"),
        ("analyze", cmd_analyze, "h-vector diagnostics and order ideal"),
        ("verify-cm", cmd_verify_cm, "check a regular sequence of variables"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file")
        p.add_argument("--ideal", help="ideal name in the document (default: last defined)")
        if name == "homogenize":
            p.add_argument("--var", default="W")
        if name == "analyze":
            p.add_argument("--sequence", help="variables to set to zero before the order ideal")
        if name == "verify-cm":
            p.add_argument("--sequence", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("reproduce", parents=[common], help="recompute a published example and diff")
    p.add_argument("preset", choices=sorted(PRESETS) + ["all"])
    p.set_defaults(func=cmd_reproduce)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        code, lines = args.func(args)
    except UsageError as exc:
        print(f"hibi {args.command}: {exc}", file=sys.stderr)
        return 2
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
