"""Run the dimension-count check across families, sizes and ranks."""
import argparse
import sys
import time

from diagquiver.branching import so_matrix, sp_matrix, type1, type2
from diagquiver.dimension import dim_check


def cases(max_d):
    for n in (2, 3):
        for d in range(max_d + 1):
            for k in sorted({d, d + 1, 2 * d, 3 * d + 1}):
                yield type1(n, d), k
        for p in range(3):
            for q in range(3):
                yield type2(n, p, q), 2 * (p + q)
        for p in range(max_d):
            if n % 2 == 0:
                yield sp_matrix(n, p), 2 * p
            yield so_matrix(n, p), 2 * p


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-d", type=int, default=4)
    args = ap.parse_args()
    t0 = time.perf_counter()
    failed = 0
    for m, k in cases(args.max_d):
        rep = dim_check(m, k)
        failed += not rep.ok
        print(f"{m.family.value} n={m.n} params={m.params} k={k}: {'PASS' if rep.ok else 'FAIL'}")
    print(f"done in {time.perf_counter() - t0:.1f}s, {failed} failures")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
