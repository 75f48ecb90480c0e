"""
From an ingested corpus to ranked papers, authors and features.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional

from corpus.filters import preprocess
from corpus.models import Corpus, FilterReport, GroundTruth
from corpus.split import split_ground_truth
from graphs.builders import build_graphs
from graphs.models import GraphSet
from mrfrank.engine import run
from mrfrank.models import ConvergenceLog, HyperParams, InnovVector, RankedEntity, RankState
from mrfrank.ranking import rank_entities
from scirank.exceptions import CorpusError
from scirank.RunConfig import RunConfig
from textfeat.features import build_feature_table, extract_corpus_features, innovativeness_vector
from textfeat.models import FeatureTable
from textfeat.tokenizer import load_stopwords

logger = logging.getLogger("scirank")


@dataclass(eq=False)
class RankProblem:
    """
    Everything the iteration needs, built once per corpus and configuration
    """
    corpus: Corpus
    ground_truth: GroundTruth
    filter_report: FilterReport
    table: FeatureTable
    e: InnovVector
    graphs: GraphSet
    hyper: HyperParams


@dataclass(eq=False)
class RankOutcome:
    problem: RankProblem
    hyper: HyperParams
    state: RankState
    log: ConvergenceLog
    papers: List[RankedEntity]
    authors: List[RankedEntity]
    features: List[RankedEntity]


def prepare_problem(corpus: Corpus, run_config: RunConfig, hp: Optional[HyperParams] = None) -> RankProblem:
    """
    preprocess, split at the cutoff, build the feature table, innovativeness
    and graphs of the ranking period.

    Raises:
        CorpusError: if the ranking period has no papers, authors or features
    """
    hp = (hp or run_config.hyper).effective()
    protocol = run_config.protocol
    cleaned, filter_report = preprocess(corpus, run_config.preprocess)
    ranking, ground_truth = split_ground_truth(cleaned, protocol.cutoff_year, protocol.horizon_year)
    if not len(ranking):
        raise CorpusError(f"no paper left in the ranking period (up to {protocol.cutoff_year})")
    if not ranking.authors:
        raise CorpusError("no author in the ranking period")

    t_current = protocol.reference_year
    counts = extract_corpus_features(ranking, load_stopwords(run_config.features.stopwords))
    table = build_feature_table(ranking, run_config.features, last_year=t_current, counts=counts)
    if not len(table):
        raise CorpusError(f"no feature occurs in at least {run_config.features.min_df} papers")

    e = InnovVector(innovativeness_vector(table, table.window_of(t_current), hp.rho_feature, hp.u))
    logger.info("innovativeness at %d: %d of %d features above 0", t_current, int((e.e > 0).sum()), len(e))
    graphs = build_graphs(
        ranking, table, t_current, hp.rho_edge, hp.time_aware,
        counts=counts, stopwords=run_config.features.stopwords,
    )
    return RankProblem(
        corpus=ranking, ground_truth=ground_truth, filter_report=filter_report,
        table=table, e=e, graphs=graphs, hyper=hp,
    )


def rank_problem(problem: RankProblem, hp: Optional[HyperParams] = None) -> RankOutcome:
    hp = (hp or problem.hyper).effective()
    state, log = run(problem.graphs, problem.e, hp)
    index = problem.graphs.index
    return RankOutcome(
        problem=problem,
        hyper=hp,
        state=state,
        log=log,
        papers=rank_entities(state.a_paper, index.paper_ids),
        authors=rank_entities(state.a_author, index.author_ids),
        features=rank_entities(state.a_feature, index.feature_ids),
    )


def rank_pipeline(corpus: Corpus, run_config: RunConfig, hp: Optional[HyperParams] = None) -> RankOutcome:
    return rank_problem(prepare_problem(corpus, run_config, hp))
