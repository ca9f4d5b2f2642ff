import io

import pytest

from randcpd.bench import (
    CELL_BYTES,
    CONTINGENCY,
    CSV_HEADER,
    FAST,
    BenchConfig,
    BenchConfigError,
    BenchRow,
    fitted_slope,
    loglog_slope,
    measure_peak_bytes,
    random_change_point_set,
    run_scaling_experiment,
    write_csv,
)
from randcpd.core import ChangePointError, ChangePointSet
from randcpd.metrics import disagreement_sum


class TestRandomChangePointSet:
    def test_forced_full(self):
        assert random_change_point_set(10, 9, 123) == ChangePointSet(10, tuple(range(1, 10)))

    def test_empty(self):
        assert random_change_point_set(10, 0, 5) == ChangePointSet(10)

    def test_deterministic(self):
        first = random_change_point_set(10**6, 100, 42)
        assert first == random_change_point_set(10**6, 100, 42)
        assert len(first) == 100
        assert first != random_change_point_set(10**6, 100, 43)

    def test_too_many(self):
        with pytest.raises(ChangePointError):
            random_change_point_set(10, 10, 0)


class TestBenchConfig:
    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(n=10, sizes=(10,)),
            dict(n=100, sizes=()),
            dict(n=100, sizes=(5,), trials=0),
            dict(n=100, sizes=(5, 10), baseline_cutoff=11),
            dict(n=1, sizes=(0,)),
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(BenchConfigError):
            BenchConfig(**kwargs)

    def test_defaults_valid(self):
        cfg = BenchConfig()
        assert cfg.baseline_cutoff <= max(cfg.sizes)


def test_experiment_rows_and_bound():
    cfg = BenchConfig(n=5_000, sizes=(10, 100, 1_000), trials=2, seed=7, baseline_cutoff=100)
    rows = run_scaling_experiment(cfg)
    assert [(row.r, row.method) for row in rows] == [
        (10, FAST),
        (10, CONTINGENCY),
        (100, FAST),
        (100, CONTINGENCY),
        (1_000, FAST),
    ]
    for row in rows:
        assert row.wall_nanos_median > 0
        if row.method == FAST:
            assert row.inner_iterations <= (row.r + 1) + (row.s + 1)
        else:
            assert row.inner_iterations is None
            assert row.peak_aux_bytes == (row.r + 1) * (row.s + 1) * CELL_BYTES


def test_experiment_is_deterministic_apart_from_timing():
    cfg = BenchConfig(n=2_000, sizes=(50, 500), trials=1, seed=3, include_baseline=False, baseline_cutoff=None)
    first = [(r.r, r.s, r.inner_iterations) for r in run_scaling_experiment(cfg, measure_memory=False)]
    second = [(r.r, r.s, r.inner_iterations) for r in run_scaling_experiment(cfg, measure_memory=False)]
    assert first == second


def test_iterations_at_most_double_when_size_doubles():
    n = 200_000
    prev = None
    for k in (500, 1_000, 2_000, 4_000, 8_000):
        a = random_change_point_set(n, k, k)
        b = random_change_point_set(n, k, k + 1)
        it = disagreement_sum(a, b)[1].inner_iterations
        if prev is not None:
            # r + s doubles; (2k+2)/(k+1) leaves no slack beyond the linear bound
            assert it <= 2 * prev + 2
        prev = it


def test_fast_memory_is_flat():
    n = 100_000
    peaks = []
    for k in (0, 100, 10_000):
        a = random_change_point_set(n, k, 1)
        b = random_change_point_set(n, k, 2)
        peaks.append(measure_peak_bytes(lambda: disagreement_sum(a, b)))
    assert max(peaks) < 1024


def test_csv_format():
    buf = io.StringIO()
    write_csv([BenchRow(3, 3, FAST, 100, 7, 400), BenchRow(3, 3, CONTINGENCY, 900, None, 128)], buf)
    assert buf.getvalue().splitlines() == [
        ",".join(CSV_HEADER),
        "3,3,fast,100,7,400",
        "3,3,contingency,900,,128",
    ]


def test_loglog_slope():
    xs = [10, 100, 1000]
    assert loglog_slope(xs, [x**2 for x in xs]) == pytest.approx(2.0)
    assert loglog_slope(xs, [5 * x for x in xs]) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        loglog_slope([1], [1])


def test_fitted_slope_filters_method_and_size():
    rows = [
        BenchRow(10, 10, FAST, 1),
        BenchRow(100, 100, FAST, 10),
        BenchRow(1000, 1000, FAST, 100),
        BenchRow(100, 100, CONTINGENCY, 10_000),
        BenchRow(1000, 1000, CONTINGENCY, 1_000_000),
    ]
    assert fitted_slope(rows, FAST) == pytest.approx(1.0)
    assert fitted_slope(rows, CONTINGENCY) == pytest.approx(2.0)
    assert fitted_slope(rows[:3] + [BenchRow(10_000, 10_000, FAST, 10)], FAST, min_size=1000) < 0
