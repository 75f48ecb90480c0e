"""
Sparse graph construction.

Time-aware weights decay with the age of the event that created the edge:
a citation made in year t weighs exp(-rho * (t_current - t)), a coauthored
paper of year t adds the same amount to the coauthor edge.
"""
from __future__ import annotations

import itertools
import logging
import math
from typing import Optional

from scipy import sparse

from corpus.models import Corpus
from graphs.models import EntityIndex, GraphSet
from graphs.normalize import canonical
from textfeat.models import FeatureTable, TermCounts
from textfeat.tfidf import tfidf_author, tfidf_paper

logger = logging.getLogger("scirank")


def decay(t_current: int, year: int, rho: float, time_aware: bool = True) -> float:
    if not time_aware:
        return 1.0
    return math.exp(-rho * (t_current - year))


def _matrix(entries, shape) -> sparse.csr_matrix:
    if not entries:
        return sparse.csr_matrix(shape, dtype=float)
    rows, cols, values = zip(*entries)
    return canonical(sparse.coo_matrix((values, (rows, cols)), shape=shape))


def _check_current(corpus: Corpus, t_current: int):
    latest = corpus.max_year()
    if latest is not None and t_current < latest:
        raise ValueError(f"t_current {t_current} is earlier than the latest paper ({latest})")


def build_citation(corpus: Corpus, index: EntityIndex, t_current: int, rho: float,
                   time_aware: bool = True) -> sparse.csr_matrix:
    _check_current(corpus, t_current)
    n = len(index.paper_ids)
    entries = [
        (index.paper_pos[citing], index.paper_pos[cited], decay(t_current, year, rho, time_aware))
        for citing, cited, year in corpus.citation_edges
    ]
    return _matrix(entries, (n, n))


def build_coauthor(corpus: Corpus, index: EntityIndex, t_current: int, rho: float,
                   time_aware: bool = True) -> sparse.csr_matrix:
    _check_current(corpus, t_current)
    m = len(index.author_ids)
    entries = []
    for paper_id in index.paper_ids:
        paper = corpus.papers[paper_id]
        weight = decay(t_current, paper.year, rho, time_aware)
        positions = sorted(index.author_pos[a] for a in set(paper.author_ids))
        for i, j in itertools.combinations(positions, 2):
            entries.append((i, j, weight))
    upper = _matrix(entries, (m, m))
    # 上三角加转置, 保证严格对称
    return canonical(upper + upper.T)


def build_author_paper(corpus: Corpus, index: EntityIndex) -> sparse.csr_matrix:
    entries = [
        (index.author_pos[author_id], index.paper_pos[paper_id], 1.0)
        for paper_id in index.paper_ids
        for author_id in set(corpus.papers[paper_id].author_ids)
    ]
    return _matrix(entries, (len(index.author_ids), len(index.paper_ids)))


def _weight_matrix(weights: sparse.spmatrix, rows: int, index: EntityIndex) -> sparse.csr_matrix:
    expected = (rows, len(index.feature_ids))
    if weights.shape != expected:
        raise ValueError(f"tf-idf matrix of shape {weights.shape}, expected {expected}")
    return canonical(weights)


def build_paper_feature(weights: sparse.spmatrix, index: EntityIndex) -> sparse.csr_matrix:
    return _weight_matrix(weights, len(index.paper_ids), index)


def build_author_feature(weights: sparse.spmatrix, index: EntityIndex) -> sparse.csr_matrix:
    return _weight_matrix(weights, len(index.author_ids), index)


def build_graphs(corpus: Corpus, table: FeatureTable, t_current: int, rho_edge: float, time_aware: bool = True,
                 counts: Optional[TermCounts] = None, stopwords: str = "") -> GraphSet:
    """
    Index the corpus and build all five graphs plus the undecayed counts of
    the citation and coauthor graphs.
    """
    index = EntityIndex.build(corpus, table)
    graphs = GraphSet(
        index=index,
        citation=build_citation(corpus, index, t_current, rho_edge, time_aware),
        coauthor=build_coauthor(corpus, index, t_current, rho_edge, time_aware),
        author_paper=build_author_paper(corpus, index),
        paper_feature=build_paper_feature(tfidf_paper(corpus, table, counts, stopwords), index),
        author_feature=build_author_feature(tfidf_author(corpus, table, counts, stopwords), index),
        citation_counts=build_citation(corpus, index, t_current, rho_edge, time_aware=False),
        coauthor_counts=build_coauthor(corpus, index, t_current, rho_edge, time_aware=False),
        t_current=t_current,
        rho_edge=rho_edge,
        time_aware=time_aware,
    )
    n, m, k = index.sizes
    logger.info(
        "graphs: %d papers, %d authors, %d features; %d citations, %d coauthor links, %d paper-feature entries",
        n, m, k, graphs.citation.nnz, graphs.coauthor.nnz // 2, graphs.paper_feature.nnz,
    )
    return graphs
