"""
Search report data types.

Every line gets exactly one class: the first filter it fails in the
search's filter order, or Survivor.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.utils.errors import InconsistencyError


class FilterClass(Enum):
    NOT_MIXED = "NotMixed"
    CONJ_FAIL = "ConjFail"
    PAIRING_FAIL = "PairingFail"
    NORM_FAIL = "NormFail"
    MULT_FAIL = "MultFail"
    SQUARE_FAIL = "SquareFail"
    SURVIVOR = "Survivor"


@dataclass(frozen=True)
class FilterOutcome:
    line: Tuple[int, ...]
    filter_class: FilterClass
    witness: Optional[str] = None


@dataclass
class SearchReport:
    name: str
    total_lines: int
    counts: Dict[FilterClass, int]
    witnesses: Dict[FilterClass, FilterOutcome] = field(default_factory=dict)
    survivors: List[Tuple[int, ...]] = field(default_factory=list)
    extra: Dict[str, int] = field(default_factory=dict)
    outcomes: Optional[List[FilterOutcome]] = None

    def count(self, filter_class: FilterClass) -> int:
        return self.counts.get(filter_class, 0)

    def validate(self):
        """
        Raises:
            InconsistencyError: class counts do not sum to the line total
        """
        if sum(self.counts.values()) != self.total_lines:
            raise InconsistencyError(f"{self.name}: class counts sum to {sum(self.counts.values())}, "
                                     f"not {self.total_lines}")

    def count_fields(self) -> Dict[str, int]:
        out = {"total_lines": self.total_lines}
        out.update({c.value: self.count(c) for c in FilterClass if c in self.counts})
        out.update(self.extra)
        return out


def first_failure(filters: Sequence[Tuple[FilterClass, np.ndarray]], size: int) -> np.ndarray:
    """
    Index into `filters` of the first failed filter per line, len(filters)
    for lines passing everything
    """
    out = np.full(size, len(filters), dtype=np.int64)
    for k in range(len(filters) - 1, -1, -1):
        out[~filters[k][1]] = k
    return out


def classify(name: str, lines: np.ndarray, filters: Sequence[Tuple[FilterClass, np.ndarray]],
             render=None, full: bool = False) -> SearchReport:
    """
    Build a report from per-filter pass masks. The witness of each class is
    its first line in canonical order.
    """
    size = len(lines)
    index = first_failure(filters, size)
    classes = [c for c, _ in filters] + [FilterClass.SURVIVOR]
    counts = {c: 0 for c in classes}
    witnesses = {}
    for k, c in enumerate(classes):
        hits = np.nonzero(index == k)[0]
        counts[c] += len(hits)
        if len(hits) and c not in witnesses:
            line = tuple(int(x) for x in lines[hits[0]])
            witnesses[c] = FilterOutcome(line, c, render(hits[0]) if render else None)
    survivors = [tuple(int(x) for x in lines[i]) for i in np.nonzero(index == len(filters))[0]]
    outcomes = None
    if full:
        outcomes = [FilterOutcome(tuple(int(x) for x in lines[i]), classes[index[i]])
                    for i in range(size)]
    report = SearchReport(name, size, counts, witnesses, survivors, outcomes=outcomes)
    report.validate()
    return report
