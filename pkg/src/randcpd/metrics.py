"""Rand Index between segmentations: fast, contingency-table, and pairwise.

``rand_index_cpd`` is the linear-time path for contiguous segmentations.
``rand_index_contingency`` is the classical table-based formula and
``rand_index_pairwise`` enumerates every index pair; both exist as baselines
and oracles for the fast path.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import mul
from typing import List, Sequence, Tuple

import numpy as np

from .core import (
    ChangePointError,
    ChangePointSet,
    LengthMismatchError,
    RandIndexResult,
    pair_count,
)

__all__ = [
    "ContingencyTable",
    "IterationStats",
    "contingency_table",
    "disagreement_sum",
    "overlap_count",
    "rand_index_contingency",
    "rand_index_cpd",
    "rand_index_pairwise",
]


def _check_same_n(a: ChangePointSet, b: ChangePointSet) -> int:
    if a.n != b.n:
        raise LengthMismatchError(f"series lengths differ: n={a.n} vs n={b.n}")
    return a.n


def _bound(c: ChangePointSet, t: int) -> int:
    # t-th entry of [0, c_1, ..., c_k, n] without materialising the list
    if t == 0:
        return 0
    if t <= len(c.points):
        return c.points[t - 1]
    return c.n


def overlap_count(i: int, j: int, a: ChangePointSet, b: ChangePointSet) -> int:
    """Size of the intersection of segment ``i`` of ``a`` and segment ``j`` of ``b``.

    Segments are numbered from 0. Computed in O(1) from the boundaries as
    ``max(0, min(hi_a, hi_b) - max(lo_a, lo_b))``.
    """
    _check_same_n(a, b)
    if not 0 <= i <= len(a.points):
        raise IndexError(f"segment index i={i} outside 0..{len(a.points)}")
    if not 0 <= j <= len(b.points):
        raise IndexError(f"segment index j={j} outside 0..{len(b.points)}")
    hi = min(_bound(a, i + 1), _bound(b, j + 1))
    lo = max(_bound(a, i), _bound(b, j))
    return max(0, hi - lo)


@dataclass(frozen=True)
class IterationStats:
    """Work done by one :func:`disagreement_sum` call."""

    inner_iterations: int
    segments_a: int
    segments_b: int

    @property
    def bound(self) -> int:
        return self.segments_a + self.segments_b

    def within_bound(self) -> bool:
        return self.inner_iterations <= self.bound


def disagreement_sum(a: ChangePointSet, b: ChangePointSet) -> Tuple[int, IterationStats]:
    """Count the index pairs on which two segmentations disagree.

    Walks the two boundary sequences once. For segment ``i`` of ``a`` the
    inner loop resumes at the first segment of ``b`` that can still overlap
    it and stops at the first one extending past it, so the inner body runs
    at most ``(r + 1) + (s + 1)`` times in total. Each overlap of size ``m``
    contributes ``m * |hi_a - hi_b|``: the pairs from the overlap whose
    partner falls between the two segment ends.

    Uses O(1) auxiliary memory; boundaries are read straight from the
    stored points.

    Returns
    -------
    d : int
        Exact number of disagreeing pairs.
    stats : IterationStats
        Inner-loop count and segment counts of both inputs.
    """
    n = _check_same_n(a, b)
    pa, pb = a.points, b.points
    r, s = len(pa), len(pb)
    d = 0
    steps = 0
    begj = 0
    for i in range(r + 1):
        a_lo = pa[i - 1] if i else 0
        a_hi = pa[i] if i < r else n
        for j in range(begj, s + 1):
            steps += 1
            b_lo = pb[j - 1] if j else 0
            b_hi = pb[j] if j < s else n
            m = max(0, min(a_hi, b_hi) - max(a_lo, b_lo))
            d += m * abs(a_hi - b_hi)
            if a_hi < b_hi:
                break
            # b's segment j ends no later than a's segment i: never needed again
            begj = j + 1
    return d, IterationStats(steps, r + 1, s + 1)


def rand_index_cpd(a: ChangePointSet, b: ChangePointSet) -> RandIndexResult:
    """Rand Index of two change-point sets in O(r + s) time.

    Examples
    --------
    >>> from randcpd.core import ChangePointSet
    >>> res = rand_index_cpd(ChangePointSet(10, (3, 8)), ChangePointSet(10, (5,)))
    >>> res.disagreements, res.total_pairs, res.value
    (18, 45, 0.6)
    """
    d, _ = disagreement_sum(a, b)
    return RandIndexResult(d, pair_count(a.n))


@dataclass(frozen=True)
class ContingencyTable:
    """Dense overlap counts between the segments of two partitions.

    ``counts[i][j]`` is the number of points in segment ``i`` of the first
    partition and segment ``j`` of the second.
    """

    counts: List[List[int]]
    n: int

    @property
    def rows(self) -> int:
        return len(self.counts)

    @property
    def cols(self) -> int:
        return len(self.counts[0]) if self.counts else 0

    @property
    def cells(self) -> int:
        return self.rows * self.cols

    def row_sums(self) -> List[int]:
        return [sum(row) for row in self.counts]

    def col_sums(self) -> List[int]:
        return [sum(col) for col in zip(*self.counts)]

    def total(self) -> int:
        return sum(self.row_sums())


def contingency_table(a: ChangePointSet, b: ChangePointSet) -> ContingencyTable:
    """Build the full ``(r+1) x (s+1)`` table by scanning every index.

    This is the classical O(rs + n) construction and is intentionally naive:
    it allocates every cell and visits all ``n`` points.
    """
    n = _check_same_n(a, b)
    counts = [[0] * (len(b.points) + 1) for _ in range(len(a.points) + 1)]
    i = j = 0
    end_a = _bound(a, 1)
    end_b = _bound(b, 1)
    for x in range(1, n + 1):
        if x > end_a:
            i += 1
            end_a = _bound(a, i + 1)
        if x > end_b:
            j += 1
            end_b = _bound(b, j + 1)
        counts[i][j] += 1
    return ContingencyTable(counts, n)


def contingency_disagreements(t: ContingencyTable) -> int:
    """The pair-counting numerator ``(sum a_i^2 + sum b_j^2) / 2 - sum n_ij^2``."""
    sq_cells = sum(sum(map(mul, row, row)) for row in t.counts)
    sq_rows = sum(x * x for x in t.row_sums())
    sq_cols = sum(x * x for x in t.col_sums())
    # sq_rows + sq_cols has the parity of 2n, so the halving is exact
    return (sq_rows + sq_cols) // 2 - sq_cells


def rand_index_contingency(t: ContingencyTable) -> RandIndexResult:
    if t.n < 2:
        raise ChangePointError(f"n: series length must be >= 2, got {t.n}")
    return RandIndexResult(contingency_disagreements(t), pair_count(t.n))


def rand_index_pairwise(la: Sequence, lb: Sequence) -> RandIndexResult:
    """Rand Index from its definition, by checking all ``C(n, 2)`` pairs.

    Accepts arbitrary labellings (clusters need not be contiguous). Builds
    two ``n x n`` co-membership matrices, so memory is O(n^2); meant as a
    ground-truth oracle for small inputs.
    """
    la = np.asarray(la)
    lb = np.asarray(lb)
    if la.ndim != 1 or lb.ndim != 1:
        raise ValueError("labels must be one-dimensional")
    if len(la) != len(lb):
        raise LengthMismatchError(f"label vectors differ in length: {len(la)} vs {len(lb)}")
    n = len(la)
    if n < 2:
        raise ChangePointError(f"labels: need at least 2 labels, got {n}")
    same_a = la[:, None] == la[None, :]
    same_b = lb[:, None] == lb[None, :]
    # symmetric with an all-agreeing diagonal: each unordered pair counted twice
    disagree = int(np.count_nonzero(same_a != same_b)) // 2
    return RandIndexResult(disagree, pair_count(n))
