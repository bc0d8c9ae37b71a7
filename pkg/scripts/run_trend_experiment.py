#!/usr/bin/env python3
"""Observed-vs-predicted error trend as the field grows.

Runs the k=2 counting experiment at half density on G(q,3) for a list of
field orders and reports the median relative error per q.  The medians
shrinking with q is the vanishing-error behavior the closed-form
prediction promises for large fields.

Usage:
    python scripts/run_trend_experiment.py [--qs 3,5,7] [--trials 5]
        [--seed 42] [--out-dir trend_out]
"""

import argparse
from pathlib import Path
from statistics import median

from orthocount.asymptotics import ExperimentConfig, run_experiment
from orthocount.cli import emit_reports


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--qs", default="3,5,7", help="comma list of prime-power field orders")
    ap.add_argument("--d", type=int, default=3)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--density", type=float, default=0.5)
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--out-dir", default=None, help="write per-q CSVs here")
    args = ap.parse_args()

    out_dir = Path(args.out_dir) if args.out_dir else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)

    print(f"{'q':>5} {'m':>7} {'median rel err':>15} {'validity margin':>16}")
    medians = []
    for q in (int(tok) for tok in args.qs.split(",")):
        cfg = ExperimentConfig(
            q=q, d=args.d, k=args.k,
            densities=(args.density,), trials=args.trials, master_seed=args.seed,
        )
        rows = run_experiment(cfg)
        med = median(r.relative_error for r in rows)
        medians.append(med)
        print(f"{q:>5} {rows[0].m:>7} {med:>15.5f} {rows[0].validity_margin:>16.3f}")
        if out_dir:
            emit_reports(rows, str(out_dir / f"trend_q{q}.csv"), str(out_dir / f"trend_q{q}.json"))

    trend = all(a > b for a, b in zip(medians, medians[1:]))
    print(f"\nstrictly decreasing: {trend}")


if __name__ == "__main__":
    main()
