"""
Parameters and state of the mutual reinforcement iteration.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import List

import numpy as np
from scipy import sparse

FULL = "full"
NO_TIME = "no_time"
NO_CONTENT = "no_content"
NO_TIME_NO_CONTENT = "no_time_no_content"
MODES = (FULL, NO_TIME, NO_CONTENT, NO_TIME_NO_CONTENT)


@dataclass(frozen=True)
class HyperParams:
    """
    Mixing coefficients, decay rates and stopping rule.

    Paper update:  alpha_p * citations + beta_p(1-alpha_p) * authors + gamma1 * features
    Author update: alpha_a * coauthors + beta_a(1-alpha_a) * papers + gamma2 * features
    Feature update (scaled by innovativeness): alpha_f * authors + (1-alpha_f) * papers
    """
    alpha_p: float = 0.4
    beta_p: float = 1.0 / 3.0
    alpha_a: float = 0.4
    beta_a: float = 0.5
    alpha_f: float = 0.5
    rho_edge: float = 0.2
    rho_feature: float = 0.2
    u: int = 3
    tolerance: float = 1e-8
    max_iterations: int = 200
    mode: str = FULL

    @property
    def gamma1(self) -> float:
        return (1 - self.beta_p) * (1 - self.alpha_p)

    @property
    def gamma2(self) -> float:
        return (1 - self.beta_a) * (1 - self.alpha_a)

    @property
    def time_aware(self) -> bool:
        return self.mode in (FULL, NO_CONTENT)

    @property
    def content(self) -> bool:
        return self.mode in (FULL, NO_TIME)

    def effective(self) -> "HyperParams":
        """
        The parameters a mode actually runs with: without time the edge decay
        is 0, without content all residual weight goes to the cross term.
        """
        hp = self
        if not self.time_aware:
            hp = replace(hp, rho_edge=0.0)
        if not self.content:
            hp = replace(hp, beta_p=1.0, beta_a=1.0)
        return hp

    def with_gammas(self, gamma1: float, gamma2: float) -> "HyperParams":
        """
        Solve beta_p and beta_a for the given gammas at fixed alphas.

        Raises:
            ValueError: if a gamma cannot be reached (gamma > 1 - alpha)
        """
        if not 0 <= gamma1 <= 1 - self.alpha_p or not 0 <= gamma2 <= 1 - self.alpha_a:
            raise ValueError(
                f"gammas ({gamma1}, {gamma2}) out of reach for alpha_p={self.alpha_p}, alpha_a={self.alpha_a}"
            )
        beta_p = 1 - gamma1 / (1 - self.alpha_p) if self.alpha_p < 1 else 1.0
        beta_a = 1 - gamma2 / (1 - self.alpha_a) if self.alpha_a < 1 else 1.0
        return replace(self, beta_p=beta_p, beta_a=beta_a)


@dataclass(frozen=True, eq=False)
class InnovVector:
    """
    Innovativeness of every feature at the ranking window
    """
    e: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.e, dtype=float)
        if e.ndim != 1 or np.any(e < 0) or not np.all(np.isfinite(e)):
            raise ValueError("innovativeness must be a finite non-negative vector")
        object.__setattr__(self, "e", e)

    def scaled(self, c: float) -> "InnovVector":
        return InnovVector(self.e * c)

    def __len__(self):
        return len(self.e)


@dataclass(frozen=True, eq=False)
class RankState:
    a_paper: np.ndarray
    a_author: np.ndarray
    a_feature: np.ndarray
    iteration: int = 0
    delta: float = float("inf")

    def concatenated(self) -> np.ndarray:
        return np.concatenate([self.a_paper, self.a_author, self.a_feature])


@dataclass
class ConvergenceLog:
    deltas: List[float] = field(default_factory=list)
    converged: bool = False

    @property
    def iterations(self) -> int:
        return len(self.deltas)

    @property
    def final_delta(self) -> float:
        return self.deltas[-1] if self.deltas else float("inf")


@dataclass(frozen=True, eq=False)
class Block:
    """
    A column-stochastic transition block kept sparse.

    The effective matrix is ``matrix + outer(fill, residual)``: the mass a
    column lacks is handed out along ``fill``.
    """
    matrix: sparse.csr_matrix
    residual: np.ndarray
    fill: np.ndarray

    def apply(self, x: np.ndarray) -> np.ndarray:
        return self.matrix @ x + self.fill * float(self.residual @ x)

    def dense(self) -> np.ndarray:
        return self.matrix.toarray() + np.outer(self.fill, self.residual)


@dataclass(frozen=True, eq=False)
class TransitionBlocks:
    """
    The eight blocks of the iteration, named target_source
    """
    paper_paper: Block
    paper_author: Block
    paper_feature: Block
    author_paper: Block
    author_author: Block
    author_feature: Block
    feature_paper: Block
    feature_author: Block

    @property
    def sizes(self):
        return (
            self.paper_paper.matrix.shape[0],
            self.author_author.matrix.shape[0],
            self.feature_paper.matrix.shape[0],
        )


@dataclass(frozen=True)
class RankedEntity:
    entity_id: str
    score: float
    rank: int
