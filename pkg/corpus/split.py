from __future__ import annotations

import logging
from typing import Tuple

from corpus.models import Corpus, GroundTruth

logger = logging.getLogger("scirank")


def split_ground_truth(corpus: Corpus, cutoff_year: int, horizon_year: int) -> Tuple[Corpus, GroundTruth]:
    """
    Split a corpus into the ranking period (year <= cutoff_year) and the
    future citations those papers receive from papers published in
    (cutoff_year, horizon_year].

    Every author of a cited paper is credited with the full count.

    Raises:
        ValueError: if cutoff_year >= horizon_year
    """
    if cutoff_year >= horizon_year:
        raise ValueError(f"cutoff_year ({cutoff_year}) must be earlier than horizon_year ({horizon_year})")

    ranking_ids = [paper_id for paper_id, paper in corpus.papers.items() if paper.year <= cutoff_year]
    ranking = corpus.restrict(ranking_ids)

    paper_future = {paper_id: 0 for paper_id in ranking.papers}
    for citing, cited, citing_year in corpus.citation_edges:
        if cited in paper_future and cutoff_year < citing_year <= horizon_year:
            paper_future[cited] += 1

    author_future = {author_id: 0 for author_id in ranking.authors}
    for paper_id, count in paper_future.items():
        for author_id in ranking.papers[paper_id].author_ids:
            author_future[author_id] += count

    logger.info(
        "split at %d: %d ranking papers, %d future citations up to %d",
        cutoff_year, len(ranking), sum(paper_future.values()), horizon_year,
    )
    return ranking, GroundTruth(
        cutoff_year=cutoff_year,
        horizon_year=horizon_year,
        paper_future_citations=paper_future,
        author_future_citations=author_future,
    )
