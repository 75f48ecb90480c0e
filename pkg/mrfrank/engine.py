"""
Mutual reinforcement of paper, author and feature authority.

Every block is column-normalized. A column that cannot pass on its whole
mass (a paper without references, an author without coauthors, the decayed
share of an old citation) hands the remainder to a fill distribution:
uniform over papers or authors, proportional to innovativeness over
features. Each block is therefore column-stochastic, so the iteration's fixed
point is the eigenvector of the combined matrix for eigenvalue 1.
"""
from __future__ import annotations

import logging
from typing import Optional, Tuple

import numpy as np
from scipy import sparse

from graphs.models import GraphSet
from graphs.normalize import column_normalize, column_sums
from mrfrank.models import Block, ConvergenceLog, HyperParams, InnovVector, RankState, TransitionBlocks
from scirank.exceptions import NumericalError

logger = logging.getLogger("scirank")


def init_state(n: int, m: int, k: int) -> RankState:
    """
    Raises:
        ValueError: if a dimension is not positive
    """
    if n <= 0 or m <= 0 or k <= 0:
        raise ValueError(f"every dimension must be positive, got papers={n} authors={m} features={k}")
    return RankState(a_paper=np.full(n, 1.0 / n), a_author=np.full(m, 1.0 / m), a_feature=np.full(k, 1.0 / k))


def _block(weights, fill: np.ndarray, mass=None) -> Block:
    matrix = column_normalize(weights, mass)
    if mass is None:
        residual = (column_sums(weights) <= 0).astype(float)
    else:
        total = column_sums(mass)
        kept = column_sums(weights)
        residual = np.where(total > 0, 1.0 - kept / np.where(total > 0, total, 1.0), 1.0)
        residual = np.clip(residual, 0.0, 1.0)
    return Block(matrix=matrix, residual=residual, fill=fill)


def prepare_blocks(graphs: GraphSet, e: InnovVector, hp: Optional[HyperParams] = None) -> TransitionBlocks:
    """
    Turn the graphs into the eight transition blocks.

    The citation block is the transpose of the citation graph, so a citing
    paper passes authority to the papers it cites. The feature rows are
    scaled by innovativeness before normalization.
    """
    n, m, k = graphs.index.sizes
    if len(e) != k:
        raise ValueError(f"innovativeness has {len(e)} entries for {k} features")
    uniform_p = np.full(n, 1.0 / n) if n else np.zeros(0)
    uniform_a = np.full(m, 1.0 / m) if m else np.zeros(0)
    total_e = float(e.e.sum())
    # 所有特征创新度为 0 时特征行全为 0, 由迭代重置为均匀分布
    innov_fill = e.e / total_e if total_e > 0 else np.zeros(k)
    scale = sparse.diags(e.e) if k else sparse.csr_matrix((0, 0))

    return TransitionBlocks(
        paper_paper=_block(graphs.citation.T, uniform_p, mass=graphs.citation_counts.T),
        paper_author=_block(graphs.author_paper.T, uniform_p),
        paper_feature=_block(graphs.paper_feature, uniform_p),
        author_paper=_block(graphs.author_paper, uniform_a),
        author_author=_block(graphs.coauthor, uniform_a, mass=graphs.coauthor_counts),
        author_feature=_block(graphs.author_feature, uniform_a),
        feature_paper=_block(scale @ graphs.paper_feature.T, innov_fill),
        feature_author=_block(scale @ graphs.author_feature.T, innov_fill),
    )


def _normalized(vector: np.ndarray, name: str, iteration: int) -> np.ndarray:
    if not np.all(np.isfinite(vector)):
        raise NumericalError(iteration, name)
    total = vector.sum()
    if total <= 0:
        return np.full(len(vector), 1.0 / len(vector))
    return vector / total


def iterate_once(state: RankState, blocks: TransitionBlocks, hp: HyperParams) -> RankState:
    """
    One Jacobi step: all three vectors are computed from the old state, then
    each is divided by its sum (a zero vector becomes uniform).

    Raises:
        NumericalError: if a non-finite value shows up
    """
    p, a, f = state.a_paper, state.a_author, state.a_feature
    iteration = state.iteration + 1

    new_p = (
        hp.alpha_p * blocks.paper_paper.apply(p)
        + hp.beta_p * (1 - hp.alpha_p) * blocks.paper_author.apply(a)
        + hp.gamma1 * blocks.paper_feature.apply(f)
    )
    new_a = (
        hp.alpha_a * blocks.author_author.apply(a)
        + hp.beta_a * (1 - hp.alpha_a) * blocks.author_paper.apply(p)
        + hp.gamma2 * blocks.author_feature.apply(f)
    )
    new_f = hp.alpha_f * blocks.feature_author.apply(a) + (1 - hp.alpha_f) * blocks.feature_paper.apply(p)

    new_p = _normalized(new_p, "paper", iteration)
    new_a = _normalized(new_a, "author", iteration)
    new_f = _normalized(new_f, "feature", iteration)
    delta = float(np.abs(new_p - p).sum() + np.abs(new_a - a).sum() + np.abs(new_f - f).sum())
    return RankState(a_paper=new_p, a_author=new_a, a_feature=new_f, iteration=iteration, delta=delta)


def run(graphs: GraphSet, e: InnovVector, hp: HyperParams,
        blocks: Optional[TransitionBlocks] = None) -> Tuple[RankState, ConvergenceLog]:
    """
    Iterate from the uniform state until the L1 change of the concatenated
    vectors drops below hp.tolerance or hp.max_iterations is reached.

    Running out of iterations is not an error: the log is marked as not
    converged and the last state is returned.
    """
    hp = hp.effective()
    if blocks is None:
        blocks = prepare_blocks(graphs, e, hp)
    state = init_state(*graphs.index.sizes)
    log = ConvergenceLog()

    for _ in range(hp.max_iterations):
        state = iterate_once(state, blocks, hp)
        log.deltas.append(state.delta)
        logger.debug("iteration %d: delta %.3e", state.iteration, state.delta)
        if state.delta < hp.tolerance:
            log.converged = True
            break

    if log.converged:
        logger.info("converged after %d iterations (delta %.3e)", log.iterations, log.final_delta)
    else:
        logger.warning(
            "not converged after %d iterations (delta %.3e > tolerance %.1e)",
            log.iterations, log.final_delta, hp.tolerance,
        )
    return state, log
