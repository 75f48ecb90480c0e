"""
Entity indexing and the five graphs of a ranking problem.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Tuple

from scipy import sparse

from corpus.models import Corpus
from textfeat.models import FeatureTable


@dataclass(frozen=True)
class EntityIndex:
    """
    Dense positions of papers, authors and features, each sorted by id
    """
    paper_ids: Tuple[str, ...]
    author_ids: Tuple[str, ...]
    feature_ids: Tuple[str, ...]

    @classmethod
    def build(cls, corpus: Corpus, table: FeatureTable) -> "EntityIndex":
        return cls(
            paper_ids=tuple(sorted(corpus.papers)),
            author_ids=tuple(sorted(corpus.authors)),
            feature_ids=tuple(sorted(table.keys)),
        )

    @cached_property
    def paper_pos(self) -> Dict[str, int]:
        return {paper_id: i for i, paper_id in enumerate(self.paper_ids)}

    @cached_property
    def author_pos(self) -> Dict[str, int]:
        return {author_id: i for i, author_id in enumerate(self.author_ids)}

    @cached_property
    def feature_pos(self) -> Dict[str, int]:
        return {key: i for i, key in enumerate(self.feature_ids)}

    @property
    def sizes(self) -> Tuple[int, int, int]:
        return len(self.paper_ids), len(self.author_ids), len(self.feature_ids)


@dataclass(frozen=True, eq=False)
class GraphSet:
    """
    Weighted graphs in CSR form.

    citation[i, j] > 0 when paper i cites paper j. The *_counts matrices are
    the same graphs without time decay; they are the normalization mass of the
    decayed ones.
    """
    index: EntityIndex
    citation: sparse.csr_matrix
    coauthor: sparse.csr_matrix
    author_paper: sparse.csr_matrix
    paper_feature: sparse.csr_matrix
    author_feature: sparse.csr_matrix
    citation_counts: sparse.csr_matrix
    coauthor_counts: sparse.csr_matrix
    t_current: int
    rho_edge: float
    time_aware: bool = True

    def matrices(self) -> Dict[str, sparse.csr_matrix]:
        return {
            "citation": self.citation,
            "coauthor": self.coauthor,
            "author_paper": self.author_paper,
            "paper_feature": self.paper_feature,
            "author_feature": self.author_feature,
        }
