"""Random Groebner basis stress run: checks the S-pair criterion and reports timing."""

import argparse
import random
import statistics
import time

from hibi.groebner import MPoly, Ring, buchberger_reduced, normal_form, s_polynomial


def random_poly(rng, ring, max_deg, max_terms):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mon = [0] * ring.nvars
        for _ in range(rng.randint(0, max_deg)):
            mon[rng.randrange(ring.nvars)] += 1
        terms[tuple(mon)] = rng.randint(-5, 5) or 1
    return MPoly(ring, terms)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=500)
    ap.add_argument("--vars", type=int, default=3)
    ap.add_argument("--degree", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    names = ("X", "Y", "Z", "W", "T")[: args.vars]
    times, sizes = [], []
    for _ in range(args.n):
        ring = Ring(names, rng.choice(["degrevlex", "deglex"]))
        gens = [random_poly(rng, ring, args.degree, 3) for _ in range(rng.randint(1, 3))]
        t0 = time.perf_counter()
        G = buchberger_reduced(gens, ring).elements
        times.append(time.perf_counter() - t0)
        sizes.append(len(G))
        for i in range(len(G)):
            for j in range(i + 1, len(G)):
                if not normal_form(s_polynomial(G[i], G[j]), G).is_zero():
                    raise SystemExit(f"S-pair check failed for {gens}")
    print(f"{args.n} ideals ok; basis size median {statistics.median(sizes)}, max {max(sizes)}; "
          f"time median {statistics.median(times) * 1e3:.1f} ms, max {max(times) * 1e3:.1f} ms")


if __name__ == "__main__":
    main()
