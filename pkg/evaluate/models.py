"""
Evaluation records.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Tuple

PAPERS_OF_YEAR = "papers_of_year"
AUTHORS_STARTING_YEAR = "authors_starting_year"

PAPER = "P"
AUTHOR = "A"

CITATION_COUNT = "citation_count"


@dataclass(frozen=True)
class Cohort:
    """
    Papers published in a year, or authors whose first paper is from that year
    """
    kind: str
    year: int
    member_ids: FrozenSet[str] = frozenset()

    @property
    def entity(self) -> str:
        return PAPER if self.kind == PAPERS_OF_YEAR else AUTHOR

    def __len__(self):
        return len(self.member_ids)


@dataclass(frozen=True)
class RIResult:
    k: int
    returned: Tuple[str, ...]
    ground_truth_topk: Tuple[str, ...]
    per_item: Dict[str, float] = field(default_factory=dict)
    total: float = 0.0


@dataclass(frozen=True, order=True)
class ReportRow:
    """
    RI@k of one method on one cohort
    """
    year: int
    method: str
    entity: str
    k: int
    ri: float

    def to_dict(self) -> dict:
        return {"year": self.year, "method": self.method, "entity": self.entity, "k": self.k, "ri": self.ri}
