#!/usr/bin/env python3
"""Reduce a two-sign representative by explicit pi-rotations and verify it.

Usage: python3 scripts/witness_demo.py [--r 2] [--a 1] [--extra 0]
                                       [--eps1 -1] [--eps2 -1]
"""

import argparse

from morinlab import (FormSpec, apply_witness, germ_from_map, isotopy_form,
                      isotopy_witness)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--a", type=int, default=1)
    ap.add_argument("--extra", type=int, default=0)
    ap.add_argument("--eps1", type=int, choices=(1, -1), default=-1)
    ap.add_argument("--eps2", type=int, choices=(1, -1), default=-1)
    args = ap.parse_args()

    spec = FormSpec(args.r, args.a, args.extra, args.eps1, args.eps2)
    w = isotopy_witness(spec)
    f = isotopy_form(spec)
    rep = w.representative

    print(f"input signs:        ({spec.eps1:+d}, {spec.eps2:+d})")
    print(f"representative:     ({rep.eps1:+d}, {rep.eps2:+d})")
    print(f"source rotations:   {list(w.source_sets) or 'none'}")
    print(f"target rotations:   {list(w.target_sets) or 'none'}")
    print()
    print("input germ:")
    print("  " + germ_from_map(f).to_text())
    reduced = apply_witness(f, w)
    print("after rotations:")
    print("  " + germ_from_map(reduced).to_text())
    ok = reduced == isotopy_form(rep)
    print(f"\njet-exact match with the representative: {ok}")


if __name__ == "__main__":
    main()
