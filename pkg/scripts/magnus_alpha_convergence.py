#!/usr/bin/env python3
"""Convergence of the Magnus expansion with initial value in the lambda order.

Solves X' = X B, X(0) = exp(alpha) on [0, 1] for alpha = E12, B = E21 (or
random inputs with --random), comparing exp(alpha + sum_n Omega_n(1)) with a
fine Runge-Kutta solution.
"""

import argparse
import time

from rbmagnus import sampling as rs
from rbmagnus.algebra import Matrix, PolyMatrix
from rbmagnus.lie import mat_exp
from rbmagnus.magnus import evaluate_solution, magnus_alpha
from rbmagnus.time_ordering import t_ordered_exp_float


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", type=int, nargs="+", default=[2, 4, 6, 8, 10, 12, 14, 16])
    ap.add_argument("--steps", type=int, default=10_000, help="Runge-Kutta steps for the reference")
    ap.add_argument("--ad-terms", type=int, default=40)
    ap.add_argument("--random", action="store_true", help="random alpha and degree-1 B (norm <= 1/2)")
    ap.add_argument("--seed", type=int, default=20240601)
    args = ap.parse_args(argv)

    if args.random:
        rng = rs.rng_for(args.seed, "alpha-script")
        alpha = rs.float_matrix(rng, 2, 0.5)
        B = rs.poly_matrix(rng, 2, 1, False, 0.5)
    else:
        alpha = Matrix.elementary(2, 1, 2, exact=False)
        B = PolyMatrix([Matrix.elementary(2, 2, 1, exact=False)])
    ref = mat_exp(alpha) * t_ordered_exp_float(B, 1.0, args.steps)
    print(f"{'order':>5}  {'|X(1) - reference|':>20}  {'seconds':>8}")
    for n in args.orders:
        start = time.perf_counter()
        m = magnus_alpha(alpha, B, n, ad_terms=args.ad_terms)
        err = float((evaluate_solution(m, 1.0) - ref).norm())
        print(f"{n:5d}  {err:20.3e}  {time.perf_counter() - start:8.2f}")


if __name__ == "__main__":
    main()
