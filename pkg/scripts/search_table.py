#!/usr/bin/env python3
"""Reproduce the exhaustive {2,3}-extension table as CSV.

For each starting length n, every one of the 2^n starting strings is
extended by repeatedly appending the curling number until it would drop
to 1; the table records the maximum and exact average final length.

Usage:
    python3 scripts/search_table.py --n-max 16 --workers 4 [--out table.csv]
"""

import argparse
import sys
import time

from curlseq import exhaustive_search, rows_to_csv


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=16)
    parser.add_argument("--workers", type=int, default=4)
    parser.add_argument("--out", default=None, help="CSV output path (default stdout)")
    args = parser.parse_args()

    rows = []
    for n in range(1, args.n_max + 1):
        t0 = time.perf_counter()
        rows.append(exhaustive_search(n, workers=args.workers))
        print(
            f"n={n:2d} max={rows[-1].max_len:4d} "
            f"argmax_count={len(rows[-1].argmax_starts)} "
            f"({time.perf_counter() - t0:.1f}s)",
            file=sys.stderr,
        )
    csv_text = rows_to_csv(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)


if __name__ == "__main__":
    main()
