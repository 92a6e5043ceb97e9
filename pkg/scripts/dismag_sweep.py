#!/usr/bin/env python3
"""Truncation sweep for the operator series giving B_k from A_k.

For a random sequence A_0..A_N of 2x2 matrices with spectral norm at most 1,
prints the residual of exp(-A_0) exp(A_N) against the ordered product of
(1 + B_k) for each truncation M, and the per-pair error of B_k itself.
"""

import argparse

from rbmagnus import sampling as rs
from rbmagnus.findiff import bk_closed_form, bk_from_ak, dismag_residual, is_monotone_decrease


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=20240601)
    ap.add_argument("--steps", type=int, default=5, help="number of factors N")
    ap.add_argument("--dim", type=int, default=2)
    ap.add_argument("--scale", type=float, default=1.0, help="norm bound for each A_k")
    ap.add_argument("--sweep", type=int, nargs="+", default=[2, 5, 10, 15, 20, 30, 40])
    args = ap.parse_args(argv)

    A = rs.sequence(rs.rng_for(args.seed, "dismag-script"), args.dim, args.steps + 1, False, args.scale)
    print(f"{'M':>4}  {'product residual':>18}  {'max |B_k error|':>16}")
    residuals = []
    for m in args.sweep:
        prod = float(dismag_residual(A, m).norm())
        bk = max(float((bk_from_ak(A[k], A[k + 1], m) - bk_closed_form(A[k], A[k + 1])).norm()) for k in range(args.steps))
        residuals.append(prod)
        print(f"{m:4d}  {prod:18.3e}  {bk:16.3e}")
    print("monotone (ties allowed at roundoff):", is_monotone_decrease(residuals))


if __name__ == "__main__":
    main()
