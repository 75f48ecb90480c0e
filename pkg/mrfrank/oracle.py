"""
Dense form of the iteration, for checking small instances.
"""
from typing import Optional, Sequence

import numpy as np

from graphs.models import GraphSet
from mrfrank.engine import prepare_blocks
from mrfrank.models import HyperParams, InnovVector
from scirank.exceptions import OracleSizeError

DEFAULT_LIMIT = 2000


def assemble_combined(graphs: GraphSet, e: InnovVector, hp: HyperParams, limit: Optional[int] = None) -> np.ndarray:
    """
    The (N+M+K) square matrix R' = M R over R = [papers, authors, features].

    Raises:
        OracleSizeError: if N+M+K exceeds the limit
    """
    limit = DEFAULT_LIMIT if limit is None else limit
    n, m, k = graphs.index.sizes
    if n + m + k > limit:
        raise OracleSizeError(f"combined matrix of size {n + m + k} exceeds the oracle limit {limit}")
    hp = hp.effective()
    blocks = prepare_blocks(graphs, e, hp)
    return np.block([
        [hp.alpha_p * blocks.paper_paper.dense(),
         hp.beta_p * (1 - hp.alpha_p) * blocks.paper_author.dense(),
         hp.gamma1 * blocks.paper_feature.dense()],
        [hp.beta_a * (1 - hp.alpha_a) * blocks.author_paper.dense(),
         hp.alpha_a * blocks.author_author.dense(),
         hp.gamma2 * blocks.author_feature.dense()],
        [(1 - hp.alpha_f) * blocks.feature_paper.dense(),
         hp.alpha_f * blocks.feature_author.dense(),
         np.zeros((k, k))],
    ])


def dominant_eigenvector(matrix: np.ndarray, sizes: Sequence[int]) -> np.ndarray:
    """
    Eigenvector of the eigenvalue with the largest real part, each block
    (papers, authors, features) scaled to sum 1; a block summing to 0 is made
    uniform, as in the iteration.
    """
    values, vectors = np.linalg.eig(matrix)
    vector = np.abs(vectors[:, int(np.argmax(values.real))].real)
    parts = []
    start = 0
    for size in sizes:
        part = vector[start:start + size]
        total = part.sum()
        parts.append(part / total if total > 0 else np.full(size, 1.0 / size))
        start += size
    return np.concatenate(parts)
