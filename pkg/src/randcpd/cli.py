"""Command-line interface: ``randcpd compute|batch|bench|selftest``."""

from __future__ import annotations

import argparse
import csv
import itertools
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from .bench import BenchConfig, BenchConfigError, run_scaling_experiment, write_csv
from .core import ChangePointSet, LengthMismatchError, RandIndexResult, to_labels
from .metrics import (
    contingency_table,
    disagreement_sum,
    rand_index_contingency,
    rand_index_cpd,
    rand_index_pairwise,
)
from .segfile import SegmentationFileError, dumps_segmentation, read_segmentation

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3

SELFTEST_MAX_N = 12
METHODS = ("fast", "contingency", "pairwise")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"error: {message}\n")


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def format_value(x: float) -> str:
    """Shortest decimal (at most 17 significant digits) that reads back as ``x``."""
    for digits in range(1, 18):
        text = f"{x:.{digits}g}"
        if float(text) == x:
            return text
    return f"{x:.17g}"


def compute(a: ChangePointSet, b: ChangePointSet, method: str = "fast") -> RandIndexResult:
    if method == "fast":
        return rand_index_cpd(a, b)
    if method == "contingency":
        return rand_index_contingency(contingency_table(a, b))
    if method == "pairwise":
        if a.n != b.n:
            raise LengthMismatchError(f"series lengths differ: n={a.n} vs n={b.n}")
        return rand_index_pairwise(to_labels(a), to_labels(b))
    raise ValueError(f"unknown method {method!r}")


def cmd_compute(args) -> int:
    try:
        a = read_segmentation(args.file_a, args.normalize)
        b = read_segmentation(args.file_b, args.normalize)
    except SegmentationFileError as exc:
        return _fail(str(exc), EXIT_USAGE)
    try:
        res = compute(a, b, args.method)
    except LengthMismatchError as exc:
        return _fail(str(exc), EXIT_MISMATCH)
    print(format_value(res.value))
    print(res.fraction)
    return EXIT_OK


def _resolve(path: str, base: Path) -> Path:
    p = Path(path)
    return p if p.is_absolute() else base / p


def cmd_batch(args) -> int:
    manifest = Path(args.manifest)
    try:
        with manifest.open(newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            missing = {"id", "truth_path", "pred_path"} - set(reader.fieldnames or ())
            if missing:
                return _fail(f"{manifest}: manifest lacks column(s) {', '.join(sorted(missing))}", EXIT_USAGE)
            entries = list(reader)
    except (OSError, csv.Error, UnicodeDecodeError) as exc:
        return _fail(f"{manifest}: cannot read manifest: {exc}", EXIT_USAGE)

    base = manifest.parent
    out_rows = []
    any_error = False
    for entry in entries:
        try:
            truth = read_segmentation(_resolve(entry["truth_path"] or "", base), args.normalize)
            pred = read_segmentation(_resolve(entry["pred_path"] or "", base), args.normalize)
            res = rand_index_cpd(truth, pred)
        except (SegmentationFileError, LengthMismatchError) as exc:
            any_error = True
            out_rows.append([entry["id"], "", "", "", str(exc)])
            continue
        out_rows.append([entry["id"], format_value(res.value), res.disagreements, res.total_pairs, ""])

    out = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["id", "rand_index", "disagreements", "total_pairs", "error"])
        writer.writerows(out_rows)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_FAILED if any_error else EXIT_OK


def _all_change_point_sets(n: int) -> List[ChangePointSet]:
    interior = range(1, n)
    return [
        ChangePointSet(n, pts)
        for k in range(n)
        for pts in itertools.combinations(interior, k)
    ]


def selftest(max_n: int, out=None) -> int:
    """Check all three methods agree on every pair of sets for n = 2..max_n.

    Returns the number of pairs checked; raises AssertionError with a
    reproducible description of the first counterexample.
    """
    out = sys.stdout if out is None else out
    checked = 0
    for n in range(2, max_n + 1):
        sets = _all_change_point_sets(n)
        comember = []
        for c in sets:
            lab = np.asarray(to_labels(c))
            comember.append(lab[:, None] == lab[None, :])
        for (ia, a), (ib, b) in itertools.product(enumerate(sets), repeat=2):
            d_fast, stats = disagreement_sum(a, b)
            d_table = rand_index_contingency(contingency_table(a, b)).disagreements
            d_pairs = int(np.count_nonzero(comember[ia] != comember[ib])) // 2
            if not (d_fast == d_table == d_pairs) or not stats.within_bound():
                raise AssertionError(
                    "counterexample\n"
                    f"a: {dumps_segmentation(a)}\n"
                    f"b: {dumps_segmentation(b)}\n"
                    f"fast={d_fast} contingency={d_table} pairwise={d_pairs} "
                    f"inner_iterations={stats.inner_iterations} bound={stats.bound}"
                )
        checked += len(sets) ** 2
        print(f"n={n}: {len(sets) ** 2} pairs ok", file=out)
    return checked


def cmd_selftest(args) -> int:
    if not 2 <= args.max_n <= SELFTEST_MAX_N:
        return _fail(f"max-n: must be in 2..{SELFTEST_MAX_N}, got {args.max_n}", EXIT_USAGE)
    try:
        checked = selftest(args.max_n)
    except AssertionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    print(f"checked {checked} pairs for n=2..{args.max_n}: all methods agree")
    return EXIT_OK


def _size_list(text: str) -> List[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_bench(args) -> int:
    cutoff = args.baseline_cutoff
    if cutoff is None and args.sizes:
        cutoff = min(BenchConfig.baseline_cutoff, max(args.sizes))
    try:
        cfg = BenchConfig(
            n=args.n,
            sizes=tuple(args.sizes),
            trials=args.trials,
            seed=args.seed,
            include_baseline=not args.no_baseline,
            baseline_cutoff=cutoff,
        )
    except BenchConfigError as exc:
        return _fail(str(exc), EXIT_USAGE)
    rows = run_scaling_experiment(cfg, measure_memory=not args.no_memory)
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            write_csv(rows, fh)
    else:
        write_csv(rows)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="randcpd", description="Rand Index for change-point segmentations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="Rand Index between two segmentation files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument(
        "--method",
        choices=METHODS,
        default="fast",
        help="fast (linear), contingency (table), or pairwise (O(n^2) memory)",
    )
    p.add_argument("--normalize", action="store_true", help="sort and deduplicate change-points")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("batch", help="evaluate every row of an id,truth_path,pred_path manifest")
    p.add_argument("manifest")
    p.add_argument("--out", help="output CSV path (default: stdout)")
    p.add_argument("--normalize", action="store_true")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("bench", help="timing sweep of the fast and contingency methods")
    defaults = BenchConfig()
    p.add_argument("--n", type=int, default=defaults.n)
    p.add_argument("--sizes", type=_size_list, default=list(defaults.sizes))
    p.add_argument("--trials", type=int, default=defaults.trials)
    p.add_argument("--seed", type=int, default=defaults.seed)
    p.add_argument("--no-baseline", action="store_true", help="skip the contingency method")
    p.add_argument(
        "--baseline-cutoff",
        type=int,
        default=None,
        help=f"largest size at which the contingency method is run "
        f"(default: {BenchConfig.baseline_cutoff} or the largest size, whichever is smaller)",
    )
    p.add_argument("--no-memory", action="store_true", help="skip tracemalloc peak measurement")
    p.add_argument("--out", help="output CSV path (default: stdout)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selftest", help="exhaustive cross-check of all methods for small n")
    p.add_argument("--max-n", type=int, default=7)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
