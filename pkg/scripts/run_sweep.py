"""Full closed-form vs recursion sweep with per-n summary counts.

    python scripts/run_sweep.py --n-max 6 --max-product 4096 --csv sweep.csv
"""
import argparse
import collections
import csv
import time

from lmestates.enumeration import EnumerationBounds, enumerate_rows, RecordRow, OverflowRecord


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--max-product", type=int, default=4096)
    ap.add_argument("--csv", help="also write every row here")
    args = ap.parse_args()

    bounds = EnumerationBounds(2, args.n_max, args.max_product)
    counts = collections.Counter()
    t0 = time.perf_counter()
    writer = None
    fh = open(args.csv, "w", newline="") if args.csv else None
    if fh:
        writer = csv.writer(fh)
        writer.writerow(RecordRow.header())
    for row in enumerate_rows(bounds):
        if isinstance(row, OverflowRecord):
            counts["overflow"] += 1
            continue
        n = row.dims.count(",") + 1
        kind = "empty" if row.status < 0 else "point" if row.status == 0 else "positive"
        counts[(n, kind)] += 1
        if writer:
            writer.writerow(row.values())
    if fh:
        fh.close()

    print(f"{'n':>3} {'empty':>8} {'point':>8} {'positive':>9}")
    for n in range(2, args.n_max + 1):
        print(f"{n:>3} {counts[(n, 'empty')]:>8} {counts[(n, 'point')]:>8} {counts[(n, 'positive')]:>9}")
    print(f"elapsed {time.perf_counter() - t0:.1f}s, overflow rows {counts['overflow']}")


if __name__ == "__main__":
    main()
