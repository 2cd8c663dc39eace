"""Command-line front end.

    lmestates classify 2 5 5
    lmestates trace 2 3 4
    lmestates witness 2 2 3 --seed 7 --json
    lmestates enumerate --n-max 3 --max-product 30 --csv
    lmestates check --n-max 6 --max-product 4096

Exit codes: 0 ok, 1 check failure, 2 invalid input, 3 overflow.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from typing import Sequence

from .arith import validate_dims
from .classify import classify, cross_check
from .enumeration import EnumerationBounds, OverflowRecord, RecordRow, dim_vectors, enumerate_rows
from .errors import DimOverflow, ValidationError
from .recursion import run_recursion
from .witness import WitnessConfig, search_witness

log = logging.getLogger("lmestates")

EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_OVERFLOW = 3


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=False) + "\n")


def _classification_json(d, c) -> dict:
    inv = c.invariants_used
    return {
        "dims": list(d.dims),
        "status": c.status.value,
        "value": c.value,
        "delta": inv.delta,
        "r": inv.r,
        "gmax": inv.gmax,
        "product": inv.product,
        "rule": c.rule.value,
    }


def cmd_classify(args, out) -> int:
    d = validate_dims(args.dims)
    c = classify(d)
    if args.json:
        _emit_json(_classification_json(d, c), out)
    elif args.csv:
        row = _classification_json(d, c)
        row["dims"] = str(d)
        w = csv.writer(out, lineterminator="\n")
        w.writerow(row.keys())
        w.writerow(row.values())
    else:
        inv = c.invariants_used
        label = {"empty": "empty", "point": "point"}.get(c.status.value, f"dimension {c.value}")
        out.write(f"{d}: {label}  (Delta={inv.delta}, R={inv.r}, gmax={inv.gmax}, rule={c.rule.value})\n")
    return 0


def cmd_trace(args, out) -> int:
    d = validate_dims(args.dims)
    tr = run_recursion(d)
    if args.json:
        _emit_json({
            "start": list(d.dims),
            "steps": [list(s.dims) for s in tr.steps],
            "terminal": list(tr.terminal.dims),
            "case": str(tr.case),
            "d_value": tr.d_value,
        }, out)
        return 0
    for s in tr.steps[:-1]:
        out.write(f"{s}\n")
    out.write(f"{tr.terminal}  {tr.case}  D={tr.d_value}\n")
    return 0


def cmd_witness(args, out) -> int:
    d = validate_dims(args.dims)
    cfg = WitnessConfig(
        restarts=args.restarts,
        max_iters=args.max_iters,
        success_tolerance=args.tol,
        seed=args.seed,
    )
    rep = search_witness(d, cfg)
    payload = rep.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=1)
    if args.json:
        payload = dict(payload, succeeded=rep.succeeded, predicted=rep.predicted.value,
                       restarts_used=rep.restarts_used, iterations_total=rep.iterations_total)
        _emit_json(payload, out)
    else:
        out.write(f"{d}: predicted {rep.predicted.status.value} ({rep.predicted.value})\n")
        out.write(f"succeeded: {rep.succeeded}\n")
        out.write(f"best residual: {rep.best_residual:.3e} (restart {rep.best_restart})\n")
        out.write("deviations: " + " ".join(f"{x:.3e}" for x in rep.per_subsystem_deviation) + "\n")
        out.write(f"restarts: {rep.restarts_used}, iterations: {rep.iterations_total}\n")
    return 0


def _bounds(args) -> EnumerationBounds:
    return EnumerationBounds(
        n_min=args.n_min, n_max=args.n_max,
        max_product=args.max_product, max_entry=args.max_entry,
    )


_WIDTHS = (18, 7, 7, 5, 8, 7, 22, 18, 13, 17, 8)


def cmd_enumerate(args, out) -> int:
    rows = enumerate_rows(_bounds(args))
    header = RecordRow.header()
    if args.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            if isinstance(row, OverflowRecord):
                log.warning("skipping %s: overflow", row.dims)
                continue
            w.writerow(row.values())
    elif args.json:
        for row in rows:
            if isinstance(row, OverflowRecord):
                _emit_json({"dims": row.dims, "warning": row.warning}, out)
            else:
                _emit_json(dict(zip(header, row.values())), out)
    else:
        out.write(" ".join(h.ljust(w) for h, w in zip(header, _WIDTHS)).rstrip() + "\n")
        for row in rows:
            if isinstance(row, OverflowRecord):
                out.write(f"{row.dims}  <overflow>\n")
                continue
            out.write(" ".join(str(v).ljust(w) for v, w in zip(row.values(), _WIDTHS)).rstrip() + "\n")
    return 0


def cmd_check(args, out) -> int:
    checked = 0
    failures = []
    for t in dim_vectors(_bounds(args)):
        rep = cross_check(validate_dims(t))
        checked += 1
        if not rep.agree:
            failures.append((t, rep.closed_form.value, rep.recursive_dim))
    if args.json:
        _emit_json({
            "checked": checked,
            "disagreements": [{"dims": list(t), "closed_form": a, "recursion": b} for t, a, b in failures],
        }, out)
    else:
        for t, a, b in failures:
            out.write(f"DISAGREE {t}: closed form {a}, recursion {b}\n")
        out.write(f"checked {checked} vectors, {len(failures)} disagreements\n")
    return EXIT_CHECK_FAILED if failures else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="one JSON object per line")
    fmt.add_argument("--csv", action="store_true", help="CSV with a fixed header")
    common.add_argument("-v", "--verbose", action="store_true")

    bounds = argparse.ArgumentParser(add_help=False)
    bounds.add_argument("--n-min", type=int, default=2)
    bounds.add_argument("--n-max", type=int, default=3)
    bounds.add_argument("--max-product", type=int, default=64)
    bounds.add_argument("--max-entry", type=int, default=None)

    parser = argparse.ArgumentParser(
        prog="lmestates",
        description="Existence and moduli dimension of locally maximally entangled states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="closed-form classification")
    p.add_argument("dims", type=int, nargs="+")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("trace", parents=[common], help="castling recursion trace")
    p.add_argument("dims", type=int, nargs="+")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("witness", parents=[common], help="numerically search for an LME state")
    p.add_argument("dims", type=int, nargs="+")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--restarts", type=int, default=100)
    p.add_argument("--max-iters", type=int, default=5000)
    p.add_argument("--tol", type=float, default=1e-10, help="success tolerance on the residual")
    p.add_argument("--out", help="write the witness state JSON here")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("enumerate", parents=[common, bounds], help="table of all vectors in bounds")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", parents=[common, bounds], help="closed form vs recursion sweep")
    p.set_defaults(func=cmd_check)
    return parser


def _fail(args, code: int, kind: str, exc: Exception) -> int:
    if getattr(args, "json", False):
        _emit_json({"error": kind, "type": type(exc).__name__, "message": str(exc)}, sys.stdout)
    else:
        sys.stderr.write(f"error ({kind}): {exc}\n")
    return code


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args, sys.stdout)
    except DimOverflow as exc:
        return _fail(args, EXIT_OVERFLOW, "overflow", exc)
    except (ValidationError, ValueError) as exc:
        return _fail(args, EXIT_INVALID, "validation", exc)


if __name__ == "__main__":
    sys.exit(main())
