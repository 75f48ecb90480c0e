"""
Recommendation intensity.

An item returned at position o of a top-k list scores 1 + (k - o) / k when it
is also in the ground-truth top-k, 0 otherwise; a list scores the sum over
its items.
"""
from typing import Dict, Iterable, List, Sequence

from corpus.models import GroundTruth
from evaluate.models import PAPERS_OF_YEAR, Cohort


def ri_item(o_r: int, k: int, in_ground_truth: bool) -> float:
    """
    Raises:
        ValueError: if o_r is not within [1, k]
    """
    if k < 1 or not 1 <= o_r <= k:
        raise ValueError(f"rank {o_r} outside [1, {k}]")
    if not in_ground_truth:
        return 0.0
    return (2 * k - o_r) / k


def ri_per_item(returned: Sequence[str], gt_topk: Iterable[str], k: int = None) -> Dict[str, float]:
    k = len(returned) if k is None else k
    gt_topk = set(gt_topk)
    return {item: ri_item(position, k, item in gt_topk) for position, item in enumerate(returned, start=1)}


def ri_list(returned: Sequence[str], gt_topk: Iterable[str], k: int = None) -> float:
    """
    Total RI of a returned list; k defaults to the list length.
    """
    k = len(returned) if k is None else k
    if k < 1 or len(returned) > k:
        raise ValueError(f"{len(returned)} returned items for k={k}")
    gt_topk = set(gt_topk)
    hits = [position for position, item in enumerate(returned, start=1) if item in gt_topk]
    # 整数求和后只做一次除法, 闭式值精确
    return sum(2 * k - position for position in hits) / k


def ground_truth_ranking(gt: GroundTruth, cohort: Cohort) -> List[str]:
    counts = gt.paper_future_citations if cohort.kind == PAPERS_OF_YEAR else gt.author_future_citations
    return sorted(cohort.member_ids, key=lambda member: (-counts.get(member, 0), member))
