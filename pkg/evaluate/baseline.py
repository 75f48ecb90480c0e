from typing import Dict, List

from corpus.models import Corpus
from evaluate.models import PAPERS_OF_YEAR, Cohort


def citation_counts(corpus: Corpus, kind: str) -> Dict[str, int]:
    """
    In-corpus citation counts of papers, or of authors summed over their papers
    """
    paper_counts = corpus.in_degree()
    if kind == PAPERS_OF_YEAR:
        return paper_counts
    return {
        author_id: sum(paper_counts[paper_id] for paper_id in paper_ids)
        for author_id, paper_ids in corpus.papers_by_author().items()
    }


def citation_count_baseline(corpus: Corpus, cohort: Cohort) -> List[str]:
    counts = citation_counts(corpus, cohort.kind)
    return sorted(cohort.member_ids, key=lambda member: (-counts.get(member, 0), member))
