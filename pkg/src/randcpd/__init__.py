"""Linear-time Rand Index for change-point segmentations."""

from .core import (
    ChangePointError,
    ChangePointSet,
    LengthMismatchError,
    Partition,
    RandIndexResult,
    boundaries,
    from_labels,
    from_partition,
    new_change_point_set,
    pair_count,
    to_labels,
    to_partition,
)
from .metrics import (
    ContingencyTable,
    IterationStats,
    contingency_table,
    disagreement_sum,
    overlap_count,
    rand_index_contingency,
    rand_index_cpd,
    rand_index_pairwise,
)

__version__ = "0.1.0"

__all__ = [
    "ChangePointError",
    "ChangePointSet",
    "ContingencyTable",
    "IterationStats",
    "LengthMismatchError",
    "Partition",
    "RandIndexResult",
    "boundaries",
    "contingency_table",
    "disagreement_sum",
    "from_labels",
    "from_partition",
    "new_change_point_set",
    "overlap_count",
    "pair_count",
    "rand_index_contingency",
    "rand_index_cpd",
    "rand_index_pairwise",
    "to_labels",
    "to_partition",
]
