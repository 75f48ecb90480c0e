"""
Corpus preprocessing: survey/proceedings titles, old papers, incomplete
metadata and papers outside the citation graph are removed.
"""
from __future__ import annotations

import logging
from typing import Set, Tuple

from corpus.models import Corpus, FilterReport, PaperRecord, PreprocessConfig

logger = logging.getLogger("scirank")


def is_survey(title: str, cfg: PreprocessConfig) -> bool:
    title = " ".join(title.lower().split())
    if any(pattern.lower() in title for pattern in cfg.title_patterns if pattern):
        return True
    return any(title.startswith(prefix.lower()) for prefix in cfg.title_prefixes if prefix)


def isolated_papers(corpus: Corpus, keep: Set[str]) -> Set[str]:
    """
    Papers of ``keep`` that neither cite nor are cited by another kept paper.
    """
    linked = set()
    for citing, cited, _ in corpus.citation_edges:
        if citing in keep and cited in keep:
            linked.add(citing)
            linked.add(cited)
    return keep - linked


def preprocess(corpus: Corpus, cfg: PreprocessConfig) -> Tuple[Corpus, FilterReport]:
    """
    Apply the filters in the order survey, min_year, incomplete, then remove
    isolated papers until none is left.

    Every removed paper is counted under exactly one rule, so
    ``report.removed + report.remaining == report.input_papers``.
    """
    report = FilterReport(input_papers=len(corpus))
    keep = set(corpus.papers)

    rules = (
        ("survey", lambda paper: is_survey(paper.title, cfg)),
        ("min_year", lambda paper: paper.year < cfg.min_year),
        ("incomplete", lambda paper: cfg.require_abstract and not paper.abstract.strip()),
    )
    for rule, matches in rules:
        removed = {paper_id for paper_id in keep if matches(corpus.papers[paper_id])}
        keep -= removed
        setattr(report, rule, len(removed))

    # 级联删除孤立论文, 直到不动点
    rounds = 0
    while True:
        isolated = isolated_papers(corpus, keep)
        if not isolated:
            break
        keep -= isolated
        report.isolated += len(isolated)
        rounds += 1

    report.remaining = len(keep)
    logger.info(
        "preprocess: %d -> %d papers (survey %d, min_year %d, incomplete %d, isolated %d in %d rounds)",
        report.input_papers, report.remaining, report.survey, report.min_year,
        report.incomplete, report.isolated, rounds,
    )
    return corpus.restrict(keep), report
