"""
Text features and their per-window frequency histories.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Optional, Tuple

import numpy as np
from scipy import sparse

WORD = "word"
PAIR = "pair"
LAMBDA_SCOPES = ("lifetime", "global")


@dataclass(frozen=True, order=True)
class Feature:
    """
    A word, or an unordered pair of distinct words seen in one sentence
    """
    kind: str
    terms: Tuple[str, ...]

    @classmethod
    def word(cls, token: str) -> "Feature":
        return cls(WORD, (token,))

    @classmethod
    def pair(cls, a: str, b: str) -> "Feature":
        if a == b:
            raise ValueError(f"a pair needs two distinct tokens, got {a!r} twice")
        return cls(PAIR, tuple(sorted((a, b))))

    @classmethod
    def from_key(cls, key: str) -> "Feature":
        prefix, _, body = key.partition(":")
        if prefix == "w" and body:
            return cls.word(body)
        if prefix == "p" and "+" in body:
            a, b = body.split("+", 1)
            return cls.pair(a, b)
        raise ValueError(f"not a feature key: {key!r}")

    @property
    def key(self) -> str:
        if self.kind == WORD:
            return f"w:{self.terms[0]}"
        return f"p:{self.terms[0]}+{self.terms[1]}"

    def __str__(self):
        return self.key


@dataclass(frozen=True)
class FeatureConfig:
    """
    Vocabulary and windowing settings of build_feature_table

    max_features 0 keeps every feature that passes min_df; an empty
    stopwords path means the shipped English list.
    """
    window_years: int = 1
    min_df: int = 3
    max_features: int = 0
    lambda_scope: str = "lifetime"
    stopwords: str = ""


@dataclass(frozen=True)
class FeatureStats:
    """
    History of one feature.

    window_freqs[j] is the number of papers of window j containing the
    feature, windows counted from the table origin. innovativeness is empty
    unless it was computed for a given decay rate and lookback.
    """
    feature: Feature
    window_freqs: Tuple[int, ...]
    first_seen: int
    lambda_i: float
    df: int = 0
    innovativeness: Tuple[float, ...] = ()

    @property
    def key(self):
        return self.feature.key


@dataclass(frozen=True, eq=False)
class FeatureTable:
    """
    Frequency histories of all retained features, stored column-wise.

    Row i of ``freqs`` belongs to ``keys[i]``; keys are sorted, which is also
    the feature order of the graphs.
    """
    keys: Tuple[str, ...]
    freqs: np.ndarray
    first_seen: np.ndarray
    lambdas: np.ndarray
    df: np.ndarray
    origin: int
    window_years: int = 1
    lambda_scope: str = "lifetime"

    @classmethod
    def from_stats(cls, stats: Iterable[FeatureStats], origin: int, window_years: int = 1,
                   lambda_scope: str = "lifetime", n_windows: Optional[int] = None) -> "FeatureTable":
        stats = sorted(stats, key=lambda s: s.key)
        width = max([len(s.window_freqs) for s in stats] + [n_windows or 0])
        freqs = np.zeros((len(stats), width), dtype=np.int64)
        for row, s in enumerate(stats):
            freqs[row, :len(s.window_freqs)] = s.window_freqs
        return cls(
            keys=tuple(s.key for s in stats),
            freqs=freqs,
            first_seen=np.array([s.first_seen for s in stats], dtype=np.int64),
            lambdas=np.array([s.lambda_i for s in stats], dtype=float),
            df=np.array([s.df for s in stats], dtype=np.int64),
            origin=origin,
            window_years=window_years,
            lambda_scope=lambda_scope,
        )

    @cached_property
    def positions(self) -> Dict[str, int]:
        return {key: i for i, key in enumerate(self.keys)}

    @property
    def global_lambda(self) -> float:
        """
        Mean of the per-feature lambdas, 0 for an empty table
        """
        if not len(self.keys):
            return 0.0
        return float(self.lambdas.mean())

    @property
    def n_windows(self) -> int:
        return int(self.freqs.shape[1])

    @property
    def current_window(self) -> int:
        return self.n_windows - 1

    def window_of(self, year: int) -> int:
        return (year - self.origin) // self.window_years

    def window_start(self, window: int) -> int:
        return self.origin + window * self.window_years

    def document_frequency(self, key: str) -> int:
        return int(self.df[self.positions[key]])

    def stats(self, key: str, innovativeness: Tuple[float, ...] = ()) -> FeatureStats:
        row = self.positions[key]
        return FeatureStats(
            feature=Feature.from_key(key),
            window_freqs=tuple(int(x) for x in self.freqs[row]),
            first_seen=int(self.first_seen[row]),
            lambda_i=float(self.lambdas[row]),
            df=int(self.df[row]),
            innovativeness=innovativeness,
        )

    def __contains__(self, key):
        return key in self.positions

    def __len__(self):
        return len(self.keys)


@dataclass(frozen=True, eq=False)
class TermCounts:
    """
    Feature occurrence counts of a corpus as a sparse paper x feature matrix.

    Rows follow the sorted ``paper_ids``, columns the sorted ``keys``.
    """
    paper_ids: Tuple[str, ...]
    keys: Tuple[str, ...]
    matrix: sparse.csr_matrix

    @classmethod
    def empty(cls, paper_ids: Iterable[str]) -> "TermCounts":
        paper_ids = tuple(paper_ids)
        return cls(paper_ids, (), sparse.csr_matrix((len(paper_ids), 0), dtype=np.int64))

    @cached_property
    def positions(self) -> Dict[str, int]:
        return {key: i for i, key in enumerate(self.keys)}

    @cached_property
    def paper_pos(self) -> Dict[str, int]:
        return {paper_id: i for i, paper_id in enumerate(self.paper_ids)}

    def document_frequency(self) -> np.ndarray:
        return np.asarray((self.matrix > 0).sum(axis=0), dtype=np.int64).ravel()

    def columns(self, keys: Iterable[str]) -> sparse.csr_matrix:
        """
        Counts of ``keys`` in that column order; a key never seen gives an
        empty column.
        """
        keys = tuple(keys)
        known = [(self.positions[key], col) for col, key in enumerate(keys) if key in self.positions]
        rows = np.array([row for row, _ in known], dtype=np.int64)
        cols = np.array([col for _, col in known], dtype=np.int64)
        selector = sparse.csr_matrix(
            (np.ones(len(known), dtype=np.int64), (rows, cols)), shape=(len(self.keys), len(keys)),
        )
        return sparse.csr_matrix(self.matrix @ selector, dtype=np.int64)

    def counts_of(self, paper_id: str) -> Dict[str, int]:
        row = self.matrix.getrow(self.paper_pos[paper_id])
        return {self.keys[col]: int(n) for col, n in zip(row.indices, row.data)}

    def __len__(self):
        return len(self.paper_ids)
