#!/usr/bin/env python3
"""Sweep the mixing angle for a seeded random unit vector and mark the optimum."""

import argparse

import numpy as np

from optamp import amplify_optimal, optimal_theta, theta_sweep, write_sweep_csv
from optamp.state import StateVector


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=16)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--points", type=int, default=1000)
    ap.add_argument("--output", default="theta_landscape.csv")
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    raw = rng.standard_normal(args.n)
    vec = StateVector(args.n, raw / np.linalg.norm(raw))

    rows = theta_sweep(vec, points=args.points)
    write_sweep_csv(rows, args.output)

    theta_star = optimal_theta(vec)
    _, report = amplify_optimal(vec)
    sweep_best = max(rows, key=lambda row: row[1])
    print(f"wrote {args.output} ({args.points} points)")
    print(f"optimal theta = {theta_star:.12f}  amplitude = {report.post_amplitude0:.12f}")
    print(f"sweep best    = {sweep_best[0]:.12f}  amplitude = {sweep_best[1]:.12f}")
    print(f"pre amplitude |a0| = {abs(report.pre_amplitude0):.12f}  absolute = {report.absolute}")


if __name__ == "__main__":
    main()
