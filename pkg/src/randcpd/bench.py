"""Scaling experiments for the fast and contingency-table Rand Index paths."""

from __future__ import annotations

import csv
import math
import random
import statistics
import sys
import time
import tracemalloc
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence, TextIO, Tuple

from .core import ChangePointError, ChangePointSet
from .metrics import contingency_table, disagreement_sum, rand_index_contingency

CSV_HEADER = ("r", "s", "method", "wall_nanos_median", "inner_iterations", "peak_aux_bytes")

# Reported width of one contingency cell (a machine word).
CELL_BYTES = 8

FAST = "fast"
CONTINGENCY = "contingency"


class BenchConfigError(ValueError):
    pass


@dataclass(frozen=True)
class BenchConfig:
    n: int = 100_000
    sizes: Tuple[int, ...] = (100, 1_000, 10_000)
    trials: int = 3
    seed: int = 0
    include_baseline: bool = True
    # None: run the baseline at every size
    baseline_cutoff: Optional[int] = 1_000

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(k) for k in self.sizes))
        if self.n < 2:
            raise BenchConfigError(f"n: must be >= 2, got {self.n}")
        if not self.sizes:
            raise BenchConfigError("sizes: at least one size is required")
        for k in self.sizes:
            if k < 0 or k >= self.n:
                raise BenchConfigError(f"sizes: each size must be in [0, n), got {k} with n={self.n}")
        if self.trials < 1:
            raise BenchConfigError(f"trials: must be >= 1, got {self.trials}")
        if self.baseline_cutoff is not None and self.baseline_cutoff > max(self.sizes):
            raise BenchConfigError(
                f"baseline_cutoff: must be <= max(sizes)={max(self.sizes)}, got {self.baseline_cutoff}"
            )


@dataclass(frozen=True)
class BenchRow:
    r: int
    s: int
    method: str
    wall_nanos_median: int
    inner_iterations: Optional[int] = None
    peak_aux_bytes: Optional[int] = None

    def as_csv(self) -> List[str]:
        return [
            str(self.r),
            str(self.s),
            self.method,
            str(self.wall_nanos_median),
            "" if self.inner_iterations is None else str(self.inner_iterations),
            "" if self.peak_aux_bytes is None else str(self.peak_aux_bytes),
        ]


def random_change_point_set(n: int, k: int, seed: int) -> ChangePointSet:
    """Draw ``k`` distinct change-points uniformly from ``1 .. n-1``.

    The same ``(n, k, seed)`` always yields the same set.
    """
    if k < 0 or k > n - 1:
        raise ChangePointError(f"k: cannot draw {k} change-points from 1..{n - 1}")
    rng = random.Random(seed)
    return ChangePointSet(n, tuple(sorted(rng.sample(range(1, n), k))))


def _median_nanos(fn: Callable[[], object], trials: int) -> int:
    samples = []
    for _ in range(trials):
        t0 = time.perf_counter_ns()
        fn()
        samples.append(time.perf_counter_ns() - t0)
    # perf_counter_ns can return 0 for trivially short calls on coarse clocks
    return max(1, int(statistics.median(samples)))


def measure_peak_bytes(fn: Callable[[], object]) -> int:
    """Peak Python heap growth while running ``fn``, as seen by tracemalloc."""
    was_tracing = tracemalloc.is_tracing()
    if not was_tracing:
        tracemalloc.start()
    try:
        fn()  # warm up one-time interpreter caches
        tracemalloc.reset_peak()
        base, _ = tracemalloc.get_traced_memory()
        fn()
        _, peak = tracemalloc.get_traced_memory()
    finally:
        if not was_tracing:
            tracemalloc.stop()
    return max(0, peak - base)


def _pair_for_size(cfg: BenchConfig, index: int, k: int) -> Tuple[ChangePointSet, ChangePointSet]:
    seed = cfg.seed * 1_000_003 + 2 * index
    return (
        random_change_point_set(cfg.n, k, seed),
        random_change_point_set(cfg.n, k, seed + 1),
    )


def run_scaling_experiment(cfg: BenchConfig, measure_memory: bool = True) -> List[BenchRow]:
    """Time both methods across ``cfg.sizes`` with ``r = s = size``.

    Each size uses one seeded pair of sets; each method is timed ``trials``
    times and the median is kept. Input generation is excluded from timing.
    Rows come out in sweep order, fast before contingency for each size.
    """
    rows: List[BenchRow] = []
    for index, k in enumerate(cfg.sizes):
        a, b = _pair_for_size(cfg, index, k)
        r, s = len(a), len(b)

        _, stats = disagreement_sum(a, b)
        peak = measure_peak_bytes(lambda: disagreement_sum(a, b)) if measure_memory else None
        wall = _median_nanos(lambda: disagreement_sum(a, b), cfg.trials)
        rows.append(BenchRow(r, s, FAST, wall, stats.inner_iterations, peak))

        if cfg.include_baseline and (cfg.baseline_cutoff is None or k <= cfg.baseline_cutoff):
            wall = _median_nanos(lambda: rand_index_contingency(contingency_table(a, b)), cfg.trials)
            table_bytes = (r + 1) * (s + 1) * CELL_BYTES
            rows.append(BenchRow(r, s, CONTINGENCY, wall, None, table_bytes))
    return rows


def write_csv(rows: Iterable[BenchRow], out: Optional[TextIO] = None) -> None:
    writer = csv.writer(sys.stdout if out is None else out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.as_csv())


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of ``log(ys)`` against ``log(xs)``."""
    if len(xs) != len(ys) or len(xs) < 2:
        raise ValueError("need at least two (x, y) points of equal count")
    lx = [math.log(x) for x in xs]
    ly = [math.log(y) for y in ys]
    return statistics.linear_regression(lx, ly).slope


def fitted_slope(rows: Iterable[BenchRow], method: str, min_size: int = 0) -> float:
    """Slope of median wall time against ``r + s`` for one method."""
    picked = [row for row in rows if row.method == method and row.r >= min_size]
    return loglog_slope([row.r + row.s for row in picked], [row.wall_nanos_median for row in picked])
