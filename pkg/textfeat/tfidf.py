import numpy as np
from scipy import sparse

from corpus.models import Corpus
from textfeat.features import extract_corpus_features
from textfeat.models import FeatureTable, TermCounts
from textfeat.tokenizer import load_stopwords


def _counts(corpus, counts, stopwords) -> TermCounts:
    if counts is None:
        counts = extract_corpus_features(corpus, load_stopwords(stopwords))
    if counts.paper_ids != tuple(sorted(corpus.papers)):
        raise ValueError("term counts were extracted from a different corpus")
    return counts


def _weights(tf: sparse.csr_matrix, n_documents: int) -> sparse.csr_matrix:
    """
    tf * ln(n_documents / df) with df taken from the rows of tf; zero weights
    are not stored
    """
    if tf.shape[1] == 0:
        return sparse.csr_matrix(tf.shape, dtype=float)
    df = np.asarray((tf > 0).sum(axis=0), dtype=float).ravel()
    idf = np.zeros(len(df))
    used = df > 0
    idf[used] = np.log(n_documents / df[used])
    weights = sparse.csr_matrix(tf, dtype=float) @ sparse.diags(idf, shape=(len(df), len(df)), format="csr")
    weights = sparse.csr_matrix(weights)
    weights.eliminate_zeros()
    weights.sort_indices()
    return weights


def tfidf_paper(corpus: Corpus, table: FeatureTable, counts: TermCounts = None,
                stopwords: str = "") -> sparse.csr_matrix:
    """
    tf-idf weight of every retained feature in every paper.

    Rows are the sorted paper ids, columns the table's keys. tf is the raw
    count of the feature in the paper, idf = ln(N / df).
    """
    counts = _counts(corpus, counts, stopwords)
    return _weights(counts.columns(table.keys), len(corpus))


def tfidf_author(corpus: Corpus, table: FeatureTable, counts: TermCounts = None,
                 stopwords: str = "") -> sparse.csr_matrix:
    """
    tf-idf weight of every retained feature for every author.

    Rows are the sorted author ids, columns the table's keys. An author's
    document is the union of their papers: tf is summed over the papers,
    idf = ln(M / af) where af is the number of authors using the feature.
    """
    counts = _counts(corpus, counts, stopwords)
    author_ids = sorted(corpus.authors)
    papers_by_author = corpus.papers_by_author()
    rows, cols = [], []
    for row, author_id in enumerate(author_ids):
        for paper_id in papers_by_author[author_id]:
            rows.append(row)
            cols.append(counts.paper_pos[paper_id])
    rows = np.array(rows, dtype=np.int64)
    cols = np.array(cols, dtype=np.int64)
    authorship = sparse.csr_matrix(
        (np.ones(len(rows), dtype=np.int64), (rows, cols)), shape=(len(author_ids), len(counts)),
    )
    return _weights(sparse.csr_matrix(authorship @ counts.columns(table.keys)), len(author_ids))
