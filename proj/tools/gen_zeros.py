#!/usr/bin/env python3
"""Write ordinates of the first N nontrivial zeta zeros, one per line."""

import argparse

import mpmath


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("count", type=int)
    ap.add_argument("output")
    ap.add_argument("--digits", type=int, default=20)
    args = ap.parse_args()
    mpmath.mp.dps = args.digits + 5
    with open(args.output, "w", encoding="ascii") as out:
        out.write(f"# ordinates of the first {args.count} nontrivial zeros of zeta (mpmath.zetazero)\n")
        for n in range(1, args.count + 1):
            out.write(mpmath.nstr(mpmath.zetazero(n).imag, args.digits, strip_zeros=False) + "\n")


if __name__ == "__main__":
    main()
