"""Change-point sets and the equivalent contiguous segmentations.

A series of length ``n`` split at interior change-points ``c_1 < ... < c_k``
has ``k + 1`` segments ``(c_t + 1) .. c_{t+1}`` with the sentinels ``c_0 = 0``
and ``c_{k+1} = n``. Indices in this module's public vocabulary are 1-based.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

# C(n, 2) must stay below 2**62.
MAX_N = 2**31 - 1


class ChangePointError(ValueError):
    """Raised when a change-point set or segmentation fails validation."""


class LengthMismatchError(ValueError):
    """Raised when two segmentations describe series of different length."""


def _as_int(value, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise ChangePointError(f"{field}: expected an integer, got {value!r}")
    return int(value)


def _check_n(n) -> int:
    n = _as_int(n, "n")
    if n < 2:
        raise ChangePointError(f"n: series length must be >= 2, got {n}")
    if n > MAX_N:
        raise ChangePointError(f"n: series length must be <= {MAX_N}, got {n}")
    return n


@dataclass(frozen=True)
class ChangePointSet:
    """Sorted interior change-points of a series of length ``n``.

    Only the interior points are stored; the boundaries ``0`` and ``n`` are
    implied. Construction validates strictly; use :func:`new_change_point_set`
    with ``normalize=True`` to sort and deduplicate raw input first.
    """

    n: int
    points: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "n", _check_n(self.n))
        pts = tuple(_as_int(c, f"points[{idx}]") for idx, c in enumerate(self.points))
        prev = 0
        for idx, c in enumerate(pts):
            if c < 1 or c > self.n - 1:
                raise ChangePointError(
                    f"points[{idx}]: change-point {c} outside 1..{self.n - 1}"
                )
            if c <= prev:
                raise ChangePointError(
                    f"points[{idx}]: change-points must be strictly increasing "
                    f"({prev} then {c})"
                )
            prev = c
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def num_segments(self) -> int:
        return len(self.points) + 1


def new_change_point_set(
    n: int, points: Iterable[int], normalize: bool = False
) -> ChangePointSet:
    """Build a validated :class:`ChangePointSet`.

    Parameters
    ----------
    n : int
        Series length, at least 2.
    points : iterable of int
        Interior change-points, each in ``1 .. n-1``.
    normalize : bool, default False
        Sort and drop duplicates before validating. Without it, unsorted or
        repeated points are an error.

    Raises
    ------
    ChangePointError
        If ``n`` or any point is invalid.
    """
    points = list(points)
    if normalize:
        points = sorted({_as_int(c, f"points[{idx}]") for idx, c in enumerate(points)})
    return ChangePointSet(n, tuple(points))


def boundaries(c: ChangePointSet) -> List[int]:
    """Return ``[0, c_1, ..., c_k, n]``."""
    return [0, *c.points, c.n]


@dataclass(frozen=True)
class Partition:
    """Contiguous 1-based inclusive ranges covering ``1 .. n``."""

    segments: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        segs = tuple((int(lo), int(hi)) for lo, hi in self.segments)
        if not segs:
            raise ChangePointError("segments: partition must have at least one segment")
        expected = 1
        for t, (lo, hi) in enumerate(segs):
            if lo != expected:
                raise ChangePointError(f"segments[{t}]: starts at {lo}, expected {expected}")
            if hi < lo:
                raise ChangePointError(f"segments[{t}]: empty range ({lo}, {hi})")
            expected = hi + 1
        object.__setattr__(self, "segments", segs)

    @property
    def n(self) -> int:
        return self.segments[-1][1]

    def __len__(self) -> int:
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    def sizes(self) -> List[int]:
        return [hi - lo + 1 for lo, hi in self.segments]


def to_partition(c: ChangePointSet) -> Partition:
    bounds = boundaries(c)
    return Partition(tuple((bounds[t] + 1, bounds[t + 1]) for t in range(len(bounds) - 1)))


def from_partition(p: Partition) -> ChangePointSet:
    return ChangePointSet(p.n, tuple(hi for _, hi in p.segments[:-1]))


def to_labels(c: ChangePointSet) -> List[int]:
    """Label each of the ``n`` points with the index of its segment.

    >>> to_labels(ChangePointSet(10, (3, 8)))
    [0, 0, 0, 1, 1, 1, 1, 1, 2, 2]
    """
    labels: List[int] = []
    bounds = boundaries(c)
    for t in range(len(bounds) - 1):
        labels.extend([t] * (bounds[t + 1] - bounds[t]))
    return labels


def from_labels(labels: Sequence[int]) -> ChangePointSet:
    """Recover the change-point set from a contiguous labelling.

    Label values are arbitrary; only the block structure matters. A label
    that reappears after a different one means the clustering is not
    contiguous and raises :class:`ChangePointError`.
    """
    labels = list(labels)
    if len(labels) < 2:
        raise ChangePointError(f"labels: need at least 2 labels, got {len(labels)}")
    seen = {labels[0]}
    points = []
    for i in range(1, len(labels)):
        cur = labels[i]
        if cur != labels[i - 1]:
            if cur in seen:
                raise ChangePointError(
                    f"labels[{i}]: label {cur!r} reappears; cluster is not contiguous"
                )
            seen.add(cur)
            points.append(i)
    return ChangePointSet(len(labels), tuple(points))


def pair_count(n: int) -> int:
    """Number of unordered index pairs, ``C(n, 2)``."""
    return n * (n - 1) // 2


@dataclass(frozen=True)
class RandIndexResult:
    """Exact disagreement count over ``C(n, 2)`` pairs.

    ``value`` is derived from the two integers, so equality tests can be done
    on ``disagreements`` and ``total_pairs`` without float rounding. Above
    roughly ``n = 2**27`` a single disagreement no longer changes the float,
    so compare ``disagreements`` to test for identical segmentations.
    """

    disagreements: int
    total_pairs: int

    def __post_init__(self):
        if self.total_pairs <= 0:
            raise ValueError(f"total_pairs must be positive, got {self.total_pairs}")
        if not 0 <= self.disagreements <= self.total_pairs:
            raise ValueError(
                f"disagreements must lie in [0, {self.total_pairs}], got {self.disagreements}"
            )

    @property
    def agreements(self) -> int:
        return self.total_pairs - self.disagreements

    @property
    def value(self) -> float:
        # Single correctly-rounded division of exact integers.
        return self.agreements / self.total_pairs

    @property
    def fraction(self) -> str:
        return f"{self.disagreements}/{self.total_pairs}"

    def __float__(self) -> float:
        return self.value
