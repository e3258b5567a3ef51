#!/usr/bin/env python3
"""Plot monthly distance (bars) against average HRE (line) from a data tree.

Reads every *.fit and *.csv under the given paths, rolls them up by
calendar month, and writes a two-axis chart.  Months without a qualifying
session show distance only.
"""
import argparse
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from hrefit.aggregate import monthly_rollup, summarize_session
from hrefit.errors import HrefitError
from hrefit.ingest import scan


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("paths", nargs="+", help="FIT files, CSV logs, or directories")
    parser.add_argument("--out", default="monthly_hre.png")
    parser.add_argument("--min-distance", type=float, default=5.0,
                        help="qualifying session distance, km")
    parser.add_argument("--dayfirst", action="store_true",
                        help="read slash dates as D/M/YYYY")
    args = parser.parse_args()

    try:
        result = scan(args.paths, dayfirst=args.dayfirst)
    except HrefitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    summaries = []
    for activity in result.activities:
        try:
            summaries.append(summarize_session(activity))
        except HrefitError as exc:
            print(f"skipping {activity.id}: {exc}", file=sys.stderr)
    rows = monthly_rollup(summaries, args.min_distance)
    if not rows:
        print("error: nothing to plot", file=sys.stderr)
        return 2

    periods = [r.period for r in rows]
    distance = [r.total_distance_km for r in rows]
    hre = [r.avg_hre for r in rows]

    fig, ax_dist = plt.subplots(figsize=(max(6.0, 0.6 * len(rows)), 4.0))
    ax_dist.bar(periods, distance, color="#9ecae1", label="distance")
    ax_dist.set_ylabel("distance (km)")
    ax_dist.set_xlabel("month")
    ax_dist.tick_params(axis="x", rotation=45)

    ax_hre = ax_dist.twinx()
    known = [(p, v) for p, v in zip(periods, hre) if v is not None]
    if known:
        ax_hre.plot(
            [p for p, _ in known],
            [v for _, v in known],
            color="#d62728",
            marker="o",
            label="avg HRE",
        )
    ax_hre.set_ylabel("avg HRE (beats/km)")

    fig.tight_layout()
    fig.savefig(args.out, dpi=120)
    print(f"wrote {args.out} ({len(rows)} months, {len(summaries)} sessions)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
