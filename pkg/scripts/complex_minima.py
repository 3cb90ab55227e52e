"""Smallest ambient dimension not excluded by the complex integrality test, per fiber dimension."""

import argparse
import time

from affine_hopf import min_complex_ambient


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-p", type=int, default=4)
    ap.add_argument("--limit", type=int, default=10_000)
    args = ap.parse_args()
    for p in range(1, args.max_p + 1):
        t0 = time.perf_counter()
        n = min_complex_ambient(p, args.limit)
        print(f"p={p}\tmin_n={'>' + str(args.limit) if n is None else n}\t{time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
