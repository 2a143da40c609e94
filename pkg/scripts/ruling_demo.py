#!/usr/bin/env python3
"""Striction curve and 1-Morin check on random orthonormal plane families.

Usage: python3 scripts/ruling_demo.py [--count 5] [--order 4] [--seed 0]
"""

import argparse

from morinlab import random_framed_curve, ruling_morin1_check
from morinlab.rationals import rat_str


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=5)
    ap.add_argument("--order", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    for k in range(args.count):
        fc = random_framed_curve(2, args.order, seed=(args.seed, k))
        chk = ruling_morin1_check(fc)
        alpha = ", ".join(rat_str(x) for x in chk.alpha_at_zero)
        print(f"curve {k}: alpha(0) = ({alpha})  "
              f"1-Morin: classifier={chk.morin1_by_classifier} "
              f"direct={chk.morin1_by_alpha} "
              f"agree={chk.agree} identity={chk.identity_holds}")


if __name__ == "__main__":
    main()
