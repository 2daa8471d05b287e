#!/usr/bin/env python3
"""Build (incrementally) the exact f(n,m) table at desk scale.

Each cell minimizes the maximum chordal subgraph over every m-edge labeled
graph on n vertices, so expect minutes per mid-range cell at n = 7. The JSON
table is keyed by (n, m) and reused on rerun.

Usage:
    python scripts/build_f_table.py --n 6 --out ftable.json [--m-lo 1 --m-hi 12]
"""

import argparse
import sys
import time

from chordal_forge.oracle import f_exact, load_f_table, save_f_table


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--m-lo", type=int, default=0)
    ap.add_argument("--m-hi", type=int)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()
    n = args.n
    hi = args.m_hi if args.m_hi is not None else n * (n - 1) // 2
    table = load_f_table(args.out)
    for m in range(args.m_lo, hi + 1):
        if (n, m) in table:
            print(f"f({n},{m}) = {table[(n, m)].f_exact}  (cached)")
            continue
        t0 = time.time()
        entry = f_exact(n, m)
        table[(n, m)] = entry
        save_f_table(args.out, table)
        print(f"f({n},{m}) = {entry.f_exact}  ({time.time() - t0:.1f}s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
