"""Build and verify the fibration for every admissible (p, n) up to a bound."""

import argparse
import time

from affine_hopf import admissible_set, build_fibration, is_dominant, verify_fibration


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=32)
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    failures = 0
    for n in range(3, args.max_n + 1):
        for p in admissible_set(n):
            t0 = time.perf_counter()
            rep = verify_fibration(build_fibration(p, n), args.samples, args.seed)
            failures += not rep.passed
            mark = "*" if is_dominant(p, n) else " "
            print(f"({p:>2},{n:>3}){mark} N={n - p:<3} {'PASS' if rep.passed else 'FAIL'} "
                  f"{rep.checked} pairs {time.perf_counter() - t0:.2f}s")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
