import logging
from typing import Iterable, List, Optional, Sequence

import numpy as np

from mrfrank.models import RankedEntity

logger = logging.getLogger("scirank")

# 有效数字位数; 在这个精度下相等的分数视为并列
SCORE_DIGITS = 12


def _tie_key(score: float) -> float:
    return float(f"{score:.{SCORE_DIGITS}g}")


def rank_entities(vector: np.ndarray, ids: Sequence[str], cohort: Optional[Iterable[str]] = None) -> List[RankedEntity]:
    """
    Rank entities by descending score, ties by ascending id.

    The cohort filter is applied after ranking everybody and the survivors are
    renumbered from 1. Cohort ids that are not ranked are ignored with a
    warning.
    """
    if len(vector) != len(ids):
        raise ValueError(f"{len(vector)} scores for {len(ids)} ids")
    order = sorted(range(len(ids)), key=lambda i: (-_tie_key(vector[i]), ids[i]))

    if cohort is not None:
        members = set(cohort)
        unknown = members - set(ids)
        if unknown:
            logger.warning("%d cohort ids are not ranked and were ignored, e.g. %s", len(unknown), sorted(unknown)[:3])
        order = [i for i in order if ids[i] in members]

    return [RankedEntity(entity_id=ids[i], score=float(vector[i]), rank=rank) for rank, i in enumerate(order, start=1)]
