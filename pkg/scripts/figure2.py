"""Lowest success rate and accuracy of most-stable descents as n grows.

Each n is swept over m = n .. n(n-1)/2 in ``--points`` evenly spaced sizes.
"""

import argparse

from sbetree.experiments import SweepConfig, accuracy_summary, rows_by_variant, run_sweep
from sbetree.graph import OrderingMode
from sbetree.search import BranchPolicy, SearchConfig

parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
parser.add_argument("--orders", type=int, nargs="+", default=[24, 32, 40, 48, 56, 64])
parser.add_argument("--graphs", type=int, default=100)
parser.add_argument("--points", type=int, default=40)
parser.add_argument("--seed", type=int, default=1)
parser.add_argument("--threads", type=int, default=1)
args = parser.parse_args()

variants = tuple(SearchConfig(o, BranchPolicy.MOST_STABLE) for o in (OrderingMode.ASCENDING, OrderingMode.DESCENDING))
print("n variant min_success argmin_m min_mean_accuracy")
for n in args.orders:
    top = n * (n - 1) // 2
    m_values = sorted({n + k * (top - n) // (args.points - 1) for k in range(args.points)})
    rows = run_sweep(SweepConfig(n, tuple(m_values), args.graphs, variants, args.seed, thread_count=args.threads))
    acc = accuracy_summary(rows)
    for name, series in rows_by_variant(rows).items():
        worst = min(series, key=lambda r: (r.success_rate, r.m))
        print(f"{n} {name} {float(worst.success_rate):.3f} {worst.m} {float(acc[name]['min_mean']):.3f}")
