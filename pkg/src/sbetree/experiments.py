"""Random-graph sweeps measuring how often depth-first descents find a maximum set."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .graph import OrderingMode, degree_ordering, random_graph
from .oracle import alpha_exact
from .rng import derive_seed
from .search import BranchPolicy, SearchConfig, dfs_descend

THREADS_ENV = "SBE_THREADS"

FIGURE1_VARIANTS = tuple(
    SearchConfig(ordering, policy)
    for ordering in (OrderingMode.ASCENDING, OrderingMode.DESCENDING)
    for policy in (BranchPolicy.ALWAYS_LEFT, BranchPolicy.FEWEST_EDGES, BranchPolicy.MOST_STABLE)
)


def default_threads() -> int:
    return int(os.environ.get(THREADS_ENV, "1"))


@dataclass(frozen=True)
class SweepConfig:
    n: int
    m_values: tuple[int, ...]
    graphs_per_m: int
    variants: tuple[SearchConfig, ...] = FIGURE1_VARIANTS
    master_seed: int = 1
    smoothing_window: int = 1
    thread_count: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "m_values", tuple(self.m_values))
        object.__setattr__(self, "variants", tuple(self.variants))
        top = self.n * (self.n - 1) // 2
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if any(not 0 <= m <= top for m in self.m_values):
            raise ValueError(f"m values must lie in [0, {top}]")
        if list(self.m_values) != sorted(self.m_values):
            raise ValueError("m values must be ascending")
        if not self.variants:
            raise ValueError("at least one variant is required")
        if self.graphs_per_m < 1:
            raise ValueError("graphs_per_m must be >= 1")
        if self.smoothing_window < 1 or self.smoothing_window % 2 == 0:
            raise ValueError("smoothing window must be odd and positive")
        if self.thread_count < 1:
            raise ValueError("thread_count must be >= 1")


@dataclass(frozen=True)
class TrialRecord:
    m: int
    index: int
    seed: int
    graph_digest: str
    alpha: int
    sizes: tuple[int, ...]  # one per variant, in config order


@dataclass(frozen=True)
class SweepRow:
    n: int
    m: int
    variant: SearchConfig
    trials: int
    successes: int
    mean_accuracy: Fraction
    min_accuracy: Fraction
    found_total: int = 0
    alpha_total: int = 0

    @property
    def success_rate(self) -> Fraction:
        return Fraction(self.successes, self.trials)

    @property
    def pooled_accuracy(self) -> Fraction:
        """Ratio of sums: total found size over total alpha."""
        return Fraction(self.found_total, self.alpha_total)


@dataclass(frozen=True)
class SeriesStats:
    variant: str
    local_maxima: int
    local_minima: int
    min_success_rate: Fraction = field(default=Fraction(0))
    argmin_m: int = 0


def _run_chunk(args) -> list[TrialRecord]:
    n, m, indices, master_seed, variants = args
    out = []
    for i in indices:
        seed = derive_seed(master_seed, m, i)
        g = random_graph(n, m, seed)
        alpha = alpha_exact(g).alpha
        perms = {}
        sizes = []
        for cfg in variants:
            if cfg.ordering not in perms:
                perms[cfg.ordering] = degree_ordering(g, cfg.ordering)
            sizes.append(dfs_descend(g, cfg, perm=perms[cfg.ordering]).size)
        out.append(TrialRecord(m, i, seed, g.digest(), alpha, tuple(sizes)))
    return out


def run_trials(cfg: SweepConfig) -> list[TrialRecord]:
    """Every (m, trial) record, sorted by (m, index) whatever the schedule."""
    chunk = max(1, min(cfg.graphs_per_m, 50))
    jobs = [
        (cfg.n, m, range(start, min(start + chunk, cfg.graphs_per_m)), cfg.master_seed, cfg.variants)
        for m in cfg.m_values
        for start in range(0, cfg.graphs_per_m, chunk)
    ]
    if cfg.thread_count == 1:
        results = map(_run_chunk, jobs)
        records = [r for part in results for r in part]
    else:
        with ProcessPoolExecutor(max_workers=cfg.thread_count) as pool:
            records = [r for part in pool.map(_run_chunk, jobs) for r in part]
    records.sort(key=lambda r: (r.m, r.index))
    return records


def aggregate(cfg: SweepConfig, records: Sequence[TrialRecord]) -> list[SweepRow]:
    by_m: dict[int, list[TrialRecord]] = {}
    for r in records:
        by_m.setdefault(r.m, []).append(r)
    rows = []
    for m in sorted(by_m):
        group = by_m[m]
        for k, variant in enumerate(cfg.variants):
            ratios = [Fraction(r.sizes[k], r.alpha) for r in group]
            rows.append(
                SweepRow(
                    n=cfg.n,
                    m=m,
                    variant=variant,
                    trials=len(group),
                    successes=sum(r.sizes[k] == r.alpha for r in group),
                    mean_accuracy=sum(ratios, Fraction(0)) / len(group),
                    min_accuracy=min(ratios),
                    found_total=sum(r.sizes[k] for r in group),
                    alpha_total=sum(r.alpha for r in group),
                )
            )
    return rows


def run_sweep(cfg: SweepConfig) -> list[SweepRow]:
    return aggregate(cfg, run_trials(cfg))


# --- series analysis -------------------------------------------------------


def smooth(series: Sequence[float], window: int) -> list[float]:
    """Centered moving average; the window shrinks at both ends."""
    half = window // 2
    out = []
    for i in range(len(series)):
        lo, hi = max(0, i - half), min(len(series), i + half + 1)
        out.append(sum(series[lo:hi]) / (hi - lo))
    return out


def count_local_extrema(series: Sequence[float], window: int = 1) -> tuple[int, int]:
    """(maxima, minima) among interior points of the smoothed series.

    Runs of equal values are collapsed to one point before comparing
    neighbours, so a flat-topped bump counts once.
    """
    if window < 1 or window % 2 == 0:
        raise ValueError("window must be odd and positive")
    if len(series) <= window:
        raise ValueError(f"series of length {len(series)} is too short for window {window}")
    values = smooth([float(x) for x in series], window)
    collapsed = [values[0]]
    for x in values[1:]:
        if x != collapsed[-1]:
            collapsed.append(x)
    maxima = minima = 0
    for prev, cur, nxt in zip(collapsed, collapsed[1:], collapsed[2:]):
        if cur > prev and cur > nxt:
            maxima += 1
        elif cur < prev and cur < nxt:
            minima += 1
    return maxima, minima


def rows_by_variant(rows: Sequence[SweepRow]) -> dict[str, list[SweepRow]]:
    out: dict[str, list[SweepRow]] = {}
    for row in rows:
        out.setdefault(row.variant.name, []).append(row)
    return out


def series_stats(rows: Sequence[SweepRow], window: int = 5) -> list[SeriesStats]:
    stats = []
    for name, series in rows_by_variant(rows).items():
        rates = [r.success_rate for r in series]
        maxima, minima = count_local_extrema(rates, window)
        # ties resolved towards the smallest m
        worst = min(series, key=lambda r: (r.success_rate, r.m))
        stats.append(SeriesStats(name, maxima, minima, worst.success_rate, worst.m))
    return stats


def accuracy_summary(rows: Sequence[SweepRow]) -> dict[str, dict[str, Fraction]]:
    """Per variant: the three candidate readings of a sweep's lowest accuracy."""
    out = {}
    for name, series in rows_by_variant(rows).items():
        out[name] = {
            "min_mean": min(r.mean_accuracy for r in series),
            "min_graph": min(r.min_accuracy for r in series),
            "min_pooled": min(r.pooled_accuracy for r in series),
        }
    return out


def aggregate_success(rows: Sequence[SweepRow]) -> dict[str, Fraction]:
    """Successes over trials pooled across all m, per variant."""
    out = {}
    for name, series in rows_by_variant(rows).items():
        out[name] = Fraction(sum(r.successes for r in series), sum(r.trials for r in series))
    return out


# --- output ----------------------------------------------------------------

CSV_HEADER = "n,m,variant,ordering,policy,trials,successes,success_rate,mean_accuracy,min_accuracy"


def format_rate(x: Fraction) -> str:
    """Six decimals, round-half-even on the exact value."""
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = 60
        d = Decimal(x.numerator) / Decimal(x.denominator)
        return str(d.quantize(Decimal("0.000001"), rounding=ROUND_HALF_EVEN))


def _row_cells(row: SweepRow) -> list[str]:
    return [
        str(row.n),
        str(row.m),
        row.variant.name,
        row.variant.ordering.value,
        row.variant.policy.value,
        str(row.trials),
        str(row.successes),
        format_rate(row.success_rate),
        format_rate(row.mean_accuracy),
        format_rate(row.min_accuracy),
    ]


def emit_csv(rows: Sequence[SweepRow]) -> str:
    lines = [CSV_HEADER] + [",".join(_row_cells(r)) for r in rows]
    return "\n".join(lines) + "\n"


def emit_gnuplot(rows: Sequence[SweepRow]) -> str:
    """One block per variant (``index`` addressable), columns m, success, mean and min accuracy."""
    blocks = []
    for name, series in rows_by_variant(rows).items():
        lines = [f"# {name}", "# m success_rate mean_accuracy min_accuracy"]
        lines += [
            f"{r.m} {format_rate(r.success_rate)} {format_rate(r.mean_accuracy)} {format_rate(r.min_accuracy)}"
            for r in series
        ]
        blocks.append("\n".join(lines))
    return "\n\n\n".join(blocks) + "\n" if blocks else ""
