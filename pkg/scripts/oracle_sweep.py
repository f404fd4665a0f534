#!/usr/bin/env python3
"""Sweep the tableau oracle against the closed formula and print a table.

Example:

    python scripts/oracle_sweep.py --max-g 8 --max-k 5 --max-cells 12
"""

import argparse

from k3walls import oracle_check


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-g", type=int, default=8)
    parser.add_argument("--max-k", type=int, default=5)
    parser.add_argument("--max-r", type=int, default=3)
    parser.add_argument("--max-cells", type=int, default=12)
    parser.add_argument("--only-mismatches", action="store_true",
                        help="print only rows where the two sides differ")
    args = parser.parse_args()

    print(f"{'g':>3} {'k':>3} {'r':>3} {'d':>3} {'grid':>6} {'omitted':>8} {'rho_k':>6} {'status':>10}")
    rows = equal = infeasible = 0
    for g in range(3, args.max_g + 1):
        for k in range(2, args.max_k + 1):
            for r in range(0, args.max_r + 1):
                for d in range(1, g):
                    cols = g - d + r
                    if cols < 1 or (r + 1) * cols > args.max_cells:
                        continue
                    rep = oracle_check(g, k, r, d)
                    rows += 1
                    if rep.feasible:
                        status = "equal" if rep.equality else "below"
                        equal += rep.equality
                    else:
                        status = "infeasible"
                        infeasible += 1
                    if args.only_mismatches and status == "equal":
                        continue
                    omitted = rep.omitted if rep.omitted is not None else "-"
                    print(f"{g:>3} {k:>3} {r:>3} {d:>3} {r + 1:>3}x{cols:<2} "
                          f"{omitted:>8} {rep.rho_k:>6} {status:>10}")
    print(f"\n{rows} instances: {equal} equal, {infeasible} infeasible, "
          f"{rows - equal - infeasible} strictly below")


if __name__ == "__main__":
    main()
