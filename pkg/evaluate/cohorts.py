from corpus.models import Corpus
from evaluate.models import AUTHORS_STARTING_YEAR, PAPERS_OF_YEAR, Cohort


def build_cohort(corpus: Corpus, kind: str, year: int) -> Cohort:
    """
    Cohort of the ranking corpus: papers of ``year`` or authors whose first
    paper in the corpus is from ``year``.
    """
    if kind == PAPERS_OF_YEAR:
        members = {paper_id for paper_id, paper in corpus.papers.items() if paper.year == year}
    elif kind == AUTHORS_STARTING_YEAR:
        members = {author_id for author_id, author in corpus.authors.items() if author.first_pub_year == year}
    else:
        raise ValueError(f"unknown cohort kind {kind!r}")
    return Cohort(kind=kind, year=year, member_ids=frozenset(members))
