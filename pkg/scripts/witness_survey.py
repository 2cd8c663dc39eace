"""Residual floors of the witness search over all vectors with a small product.

Used to calibrate the 1e-3 separation threshold between "found" and "not
found"; prints the smallest floor among empty vectors and the largest final
residual among nonempty ones.

    python scripts/witness_survey.py --max-product 64 --restarts 20
"""
import argparse
import time

from lmestates import WitnessConfig, classify, search_witness, validate_dims
from lmestates.enumeration import EnumerationBounds, dim_vectors


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-product", type=int, default=64)
    ap.add_argument("--restarts", type=int, default=20)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()

    worst_found, tightest_empty = (0.0, None), (float("inf"), None)
    t0 = time.perf_counter()
    for t in dim_vectors(EnumerationBounds(2, 6, args.max_product)):
        if 1 in t:
            continue
        d = validate_dims(t)
        c = classify(d)
        rep = search_witness(d, WitnessConfig(restarts=args.restarts, seed=args.seed), predicted=c)
        mark = "ok " if rep.succeeded == c.nonempty else "!! "
        print(f"{mark}{str(d):<16} predicted {c.value:>3}  residual {rep.best_residual:.3e}"
              f"  restarts {rep.restarts_used}")
        if c.nonempty:
            worst_found = max(worst_found, (rep.best_residual, t))
        else:
            tightest_empty = min(tightest_empty, (rep.best_residual, t))
    print(f"largest residual on a nonempty vector: {worst_found[0]:.3e} at {worst_found[1]}")
    print(f"smallest floor on an empty vector:     {tightest_empty[0]:.3e} at {tightest_empty[1]}")
    print(f"elapsed {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
