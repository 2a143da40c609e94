#!/usr/bin/env python3
"""Print the isotopy class-count table over a range of depths and multiplicities.

Usage: python3 scripts/class_table.py [--rmax 8] [--amax 4]
"""

import argparse

from morinlab import isotopy_classify


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rmax", type=int, default=8)
    ap.add_argument("--amax", type=int, default=4)
    args = ap.parse_args()

    header = "r\\a " + "".join(f"{a:>12}" for a in range(1, args.amax + 1))
    print(header)
    for r in range(1, args.rmax + 1):
        cells = []
        for a in range(1, args.amax + 1):
            rep = isotopy_classify(r, a)
            cells.append(f"{rep.class_count} ({rep.invariant_label})")
        print(f"{r:<4}" + "".join(f"{c:>12}" for c in cells))
    print("\nsuspensions (extra > 0) always have a single class.")


if __name__ == "__main__":
    main()
