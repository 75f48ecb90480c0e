"""
RI@k of ranking methods on the year cohorts of the ranking period.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from corpus.models import Corpus, GroundTruth
from evaluate.baseline import citation_count_baseline
from evaluate.cohorts import build_cohort
from evaluate.metrics import ground_truth_ranking, ri_list, ri_per_item
from evaluate.models import AUTHORS_STARTING_YEAR, CITATION_COUNT, PAPERS_OF_YEAR, Cohort, ReportRow, RIResult
from mrfrank.models import HyperParams, RankedEntity
from mrfrank.pipeline import RankProblem, rank_problem

logger = logging.getLogger("scirank")

COHORT_KINDS = (PAPERS_OF_YEAR, AUTHORS_STARTING_YEAR)


def _ids(ranked: Sequence) -> List[str]:
    return [item.entity_id if isinstance(item, RankedEntity) else item for item in ranked]


def evaluate_run(ranked: Sequence, gt: GroundTruth, cohort: Cohort, ks: Iterable[int]) -> List[RIResult]:
    """
    RI@k of a ranking restricted to a cohort, one result per k.

    ``ranked`` is a full ranking (RankedEntity or plain ids, best first); it is
    filtered to the cohort before cutting the top k. A k larger than the
    cohort is skipped with a warning.
    """
    returned_all = [entity_id for entity_id in _ids(ranked) if entity_id in cohort.member_ids]
    truth = ground_truth_ranking(gt, cohort)
    results = []
    for k in sorted(ks):
        if k > len(cohort):
            logger.warning("k=%d skipped: cohort %s %d has %d members", k, cohort.kind, cohort.year, len(cohort))
            continue
        returned = tuple(returned_all[:k])
        gt_topk = tuple(truth[:k])
        results.append(RIResult(
            k=k,
            returned=returned,
            ground_truth_topk=gt_topk,
            per_item=ri_per_item(returned, gt_topk, k),
            total=ri_list(returned, gt_topk, k),
        ))
    return results


def evaluate_methods(rankings: Dict[str, Tuple[Sequence, Sequence]], corpus: Corpus, gt: GroundTruth,
                     cohort_years: Iterable[int], ks: Iterable[int], with_baseline: bool = True) -> List[ReportRow]:
    """
    Report rows for every method, cohort year, entity type and k.

    ``rankings`` maps a method name to its (papers, authors) rankings. The
    citation-count baseline is added as a method unless ``with_baseline`` is
    off. Empty cohorts are left out with a warning.
    """
    rows = []
    for year in sorted(cohort_years):
        for kind in COHORT_KINDS:
            cohort = build_cohort(corpus, kind, year)
            if not len(cohort):
                logger.warning("cohort %s %d is empty, row omitted", kind, year)
                continue
            methods = dict(rankings)
            if with_baseline:
                methods = {CITATION_COUNT: None, **methods}
            for method, ranked in methods.items():
                if ranked is None:
                    ordered = citation_count_baseline(corpus, cohort)
                else:
                    ordered = ranked[0] if kind == PAPERS_OF_YEAR else ranked[1]
                for result in evaluate_run(ordered, gt, cohort, ks):
                    rows.append(ReportRow(year=year, method=method, entity=cohort.entity, k=result.k, ri=result.total))
    return rows


@dataclass(frozen=True)
class CaseStudyRow:
    rank: int
    entity_id: str
    score: float
    future_citations: int
    ground_truth_rank: int


def case_study(ranked: Sequence[RankedEntity], gt: GroundTruth, cohort: Cohort, k: int = 10) -> List[CaseStudyRow]:
    """
    Top k of a cohort next to each item's future citations and ground-truth rank
    """
    counts = gt.paper_future_citations if cohort.kind == PAPERS_OF_YEAR else gt.author_future_citations
    truth = {entity_id: rank for rank, entity_id in enumerate(ground_truth_ranking(gt, cohort), start=1)}
    members = [item for item in ranked if item.entity_id in cohort.member_ids][:k]
    return [
        CaseStudyRow(
            rank=rank,
            entity_id=item.entity_id,
            score=item.score,
            future_citations=counts.get(item.entity_id, 0),
            ground_truth_rank=truth[item.entity_id],
        )
        for rank, item in enumerate(members, start=1)
    ]


def parameter_sweep(problem: RankProblem, base: HyperParams, gamma1s: Iterable[float], gamma2s: Iterable[float],
                    cohort_years: Iterable[int], ks: Iterable[int]) -> List[dict]:
    """
    Rank the same problem for every (gamma1, gamma2) on the grid and score it.

    beta_p and beta_a are solved from the gammas at the base alphas; grid
    points out of reach are skipped with a warning.
    """
    cohort_years = list(cohort_years)
    ks = list(ks)
    points = []
    for gamma1 in gamma1s:
        for gamma2 in gamma2s:
            try:
                hp = base.with_gammas(gamma1, gamma2)
            except ValueError as e:
                logger.warning("sweep point skipped: %s", e)
                continue
            outcome = rank_problem(problem, hp)
            rows = evaluate_methods(
                {hp.mode: (outcome.papers, outcome.authors)}, problem.corpus, problem.ground_truth,
                cohort_years, ks, with_baseline=False,
            )
            points.append({
                "gamma1": gamma1,
                "gamma2": gamma2,
                "beta_p": hp.beta_p,
                "beta_a": hp.beta_a,
                "converged": outcome.log.converged,
                "iterations": outcome.log.iterations,
                "rows": [row.to_dict() for row in rows],
            })
            logger.info("sweep gamma1=%.3g gamma2=%.3g: %d rows", gamma1, gamma2, len(rows))
    return points
