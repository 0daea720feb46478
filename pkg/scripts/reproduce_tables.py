"""Recompute every stored golden matrix and print the cells that differ."""
import argparse
import sys

from diagquiver.appendix import verify_appendix


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()
    checks = verify_appendix(verbose=args.verbose)
    for c in checks:
        print(f"{'ok  ' if c.matches else 'DIFF'} {c.name:10s} {c.params}")
        for row, col, gold, got in c.mismatches:
            print(f"       row {row} col {col}: stored {gold}, computed {got}")
    bad = sum(not c.matches for c in checks)
    print(f"{len(checks) - bad}/{len(checks)} match")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
