"""Eigenvalue multisets of Type I, Type II and parity matrices over a grid."""
import argparse
from collections import Counter

from diagquiver.characters import parity_spectrum, spectral_verify, type2_spectrum


def fmt(values):
    return " ".join(f"{v}^{m}" if m > 1 else str(v) for v, m in sorted(Counter(values).items()))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--max-d", type=int, default=4)
    args = ap.parse_args()
    for n in range(2, args.max_n + 1):
        for d in range(args.max_d + 1):
            cert = spectral_verify(n, d)
            print(f"A n={n} d={d}  verified={cert.valid}  {fmt(cert.eigenvalue_multiset())}")
        for p in range(3):
            for q in range(3):
                s = type2_spectrum(n, p, q)
                print(f"C n={n} p={p} q={q}  verified={s.blocks_verified}  {fmt(s.eigenvalues)}")
        for fam in ("D", "E"):
            if fam == "D" and n % 2:
                continue
            for p in range(args.max_d + 1):
                s = parity_spectrum(fam, n, p)
                print(f"{fam} n={n} p={p}  verified={s.blocks_verified}  {fmt(s.eigenvalues)}")


if __name__ == "__main__":
    main()
