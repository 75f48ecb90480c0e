"""
Feature extraction, per-window frequency histories and innovativeness.
"""
from __future__ import annotations

import itertools
import logging
import math
from collections import Counter
from functools import partial
from typing import FrozenSet, List, Optional

import numpy as np
from scipy import sparse
from sklearn.feature_extraction.text import CountVectorizer

from corpus.models import Corpus, PaperRecord
from textfeat.models import Feature, FeatureConfig, FeatureStats, FeatureTable, TermCounts
from textfeat.tokenizer import load_stopwords, tokenize

logger = logging.getLogger("scirank")


def feature_keys(text: str, stopwords: Optional[FrozenSet[str]] = None) -> List[str]:
    """
    Feature keys of a text, one entry per occurrence: every token once, and
    every pair of distinct tokens once per sentence containing both.
    """
    keys = []
    for sentence in tokenize(text, stopwords):
        keys.extend(Feature.word(token).key for token in sentence)
        keys.extend(Feature.pair(a, b).key for a, b in itertools.combinations(sorted(set(sentence)), 2))
    return keys


def extract_features(paper: PaperRecord, stopwords: Optional[FrozenSet[str]] = None) -> Counter:
    """
    Count the features of a paper's title and abstract.

    Return:
        Counter keyed by feature key: a word counts its occurrences, a pair
        counts the sentences in which both words occur
    """
    return Counter(feature_keys(paper.text, stopwords))


def extract_corpus_features(corpus: Corpus, stopwords: Optional[FrozenSet[str]] = None) -> TermCounts:
    """
    Paper x feature count matrix of a corpus, papers and features sorted.
    """
    if stopwords is None:
        stopwords = load_stopwords()
    paper_ids = tuple(sorted(corpus.papers))
    vectorizer = CountVectorizer(analyzer=partial(feature_keys, stopwords=stopwords), dtype=np.int64)
    try:
        matrix = vectorizer.fit_transform([corpus.papers[paper_id].text for paper_id in paper_ids])
    except ValueError:
        # no paper has a single feature
        return TermCounts.empty(paper_ids)
    return TermCounts(
        paper_ids=paper_ids,
        keys=tuple(vectorizer.get_feature_names_out()),
        matrix=sparse.csr_matrix(matrix, dtype=np.int64),
    )


def window_lambdas(freqs: np.ndarray, first_seen: np.ndarray, lambda_scope: str, current: int) -> np.ndarray:
    """
    Mean window frequency of every feature with window ``current`` as the
    current one. Features not seen by then get 0.
    """
    totals = freqs[:, :current + 1].sum(axis=1).astype(float)
    if lambda_scope == "global":
        return totals / float(current + 1)
    span = current + 1 - first_seen
    return np.where(span > 0, totals / np.maximum(span, 1), 0.0)


def build_feature_table(corpus: Corpus, cfg: FeatureConfig = FeatureConfig(), last_year: Optional[int] = None,
                        counts: Optional[TermCounts] = None) -> FeatureTable:
    """
    Build the per-window document frequencies of every feature.

    Windows start at the earliest publication year of the corpus and run up to
    ``last_year`` (default: the latest publication year). Features in fewer
    than ``cfg.min_df`` papers are dropped; with ``cfg.max_features`` only the
    most frequent ones are kept, ties broken by key.

    Each feature's lambda is the mean of its window frequencies from its first
    window up to the last one ("lifetime" scope) or over all windows ("global"
    scope).
    """
    if counts is None:
        counts = extract_corpus_features(corpus, load_stopwords(cfg.stopwords))
    origin = corpus.min_year()
    if origin is None:
        origin = last_year or 0
    final_year = max(corpus.max_year() or origin, last_year or origin)
    n_windows = (final_year - origin) // cfg.window_years + 1

    df = counts.document_frequency()
    kept = np.flatnonzero(df >= cfg.min_df)
    if cfg.max_features and len(kept) > cfg.max_features:
        # columns are in key order, so the column index breaks ties by key
        order = np.lexsort((kept, -df[kept]))
        kept = np.sort(kept[order[:cfg.max_features]])
    keys = tuple(counts.keys[i] for i in kept)

    windows = np.array(
        [(corpus.papers[paper_id].year - origin) // cfg.window_years for paper_id in counts.paper_ids],
        dtype=np.int64,
    )
    membership = sparse.csr_matrix(
        (np.ones(len(windows), dtype=np.int64), (np.arange(len(windows)), windows)),
        shape=(len(windows), n_windows),
    )
    present = sparse.csr_matrix(counts.columns(keys) > 0, dtype=np.int64)
    freqs = np.asarray((present.T @ membership).toarray(), dtype=np.int64)

    seen = freqs > 0
    first_seen = np.where(seen.any(axis=1), seen.argmax(axis=1), n_windows - 1)
    lambdas = window_lambdas(freqs, first_seen, cfg.lambda_scope, n_windows - 1)

    table = FeatureTable(
        keys=keys,
        freqs=freqs,
        first_seen=first_seen.astype(np.int64),
        lambdas=lambdas.astype(float),
        df=df[kept].astype(np.int64),
        origin=origin,
        window_years=cfg.window_years,
        lambda_scope=cfg.lambda_scope,
    )
    logger.info(
        "feature table: %d of %d features kept (min_df %d), %d windows from %d, global lambda %.6g",
        len(keys), len(counts.keys), cfg.min_df, n_windows, origin, table.global_lambda,
    )
    return table


def innovativeness(stats: FeatureStats, table: FeatureTable, j: int, rho: float, u: int) -> float:
    """
    Burst score of one feature at window j.

        |x_j - l_i| / l * sum_{s=1..u} ((x_j - x_{j-s}) / l_i) / s * exp(-rho * (t_j - t_0))

    with l_i the feature's lambda, l the table's global lambda and t_0 the
    start of the first window the feature was seen in. Windows before that
    one, or before the origin, count as frequency 0. Negative scores are
    clamped to 0 and so are degenerate lambdas.
    """
    lambda_i = stats.lambda_i
    lam = table.global_lambda
    if lambda_i <= 0 or lam <= 0:
        return 0.0
    freqs = stats.window_freqs

    def past(index):
        if index < 0 or index < stats.first_seen or index >= len(freqs):
            return 0
        return freqs[index]

    x_j = freqs[j] if 0 <= j < len(freqs) else 0
    surprise = abs(x_j - lambda_i) / lam
    trend = sum(((x_j - past(j - s)) / lambda_i) / s for s in range(1, u + 1))
    age = max(j - stats.first_seen, 0) * table.window_years
    score = surprise * trend * math.exp(-rho * age)
    return max(score, 0.0)


def _burst_scores(table: FeatureTable, j: int, lambdas: np.ndarray, lam: float, rho: float, u: int) -> np.ndarray:
    k = len(table)
    if k == 0 or lam <= 0:
        return np.zeros(k)
    freqs = table.freqs.astype(float)
    x_j = freqs[:, j] if 0 <= j < table.n_windows else np.zeros(k)

    trend = np.zeros(k)
    for s in range(1, u + 1):
        index = j - s
        if 0 <= index < table.n_windows:
            previous = np.where(table.first_seen <= index, freqs[:, index], 0.0)
        else:
            previous = np.zeros(k)
        trend += (x_j - previous) / s

    valid = lambdas > 0
    safe = np.where(valid, lambdas, 1.0)
    age = np.maximum(j - table.first_seen, 0) * table.window_years
    score = np.abs(x_j - lambdas) / lam * (trend / safe) * np.exp(-rho * age)
    score = np.where(valid, score, 0.0)
    return np.maximum(score, 0.0)


def innovativeness_vector(table: FeatureTable, j: int, rho: float, u: int) -> np.ndarray:
    """
    innovativeness of every feature of the table at window j, in key order
    """
    return _burst_scores(table, j, table.lambdas, table.global_lambda, rho, u)


def innovativeness_history(table: FeatureTable, rho: float, u: int) -> np.ndarray:
    """
    K x W matrix of innovativeness, column j scored as if window j were the
    current one.

    The last column uses the table's own lambdas. An earlier column uses
    lambdas averaged up to that window only, and the global lambda of the
    features seen by then.
    """
    if not len(table):
        return np.zeros((0, table.n_windows))
    columns = []
    for j in range(table.n_windows):
        if j == table.current_window:
            lambdas, lam = table.lambdas, table.global_lambda
        else:
            lambdas = window_lambdas(table.freqs, table.first_seen, table.lambda_scope, j)
            seen = lambdas[lambdas > 0]
            lam = float(seen.mean()) if len(seen) else 0.0
        columns.append(_burst_scores(table, j, lambdas, lam, rho, u))
    return np.column_stack(columns)
