"""Run every reproduction preset, print the fixture diff and timings."""

import argparse
import time

from hibi.presets import PRESETS, format_checks, run_preset


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("presets", nargs="*", default=list(PRESETS))
    ap.add_argument("--quiet", action="store_true", help="only the fixture checks")
    args = ap.parse_args()
    bad = 0
    for name in args.presets:
        t0 = time.perf_counter()
        text, checks = run_preset(PRESETS[name])
        dt = time.perf_counter() - t0
        print(f"== {name} ({dt:.2f} s) ==")
        if not args.quiet:
            print(text)
        print(format_checks(checks))
        bad += sum(not c.ok for c in checks)
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
