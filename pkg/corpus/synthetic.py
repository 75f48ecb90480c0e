"""
Seeded synthetic corpora for experiments and smoke tests.

Records are returned in the native format so they go through parse_corpus
exactly like an ingested dump.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

CLASSIC_ID = "p-classic"
RISER_ID = "p-riser"
BURST_TERMS = ("burstalpha", "burstbeta", "burstgamma")


@dataclass(frozen=True)
class SyntheticSpec:
    n_papers: int = 500
    n_authors: int = 200
    refs_per_paper: float = 2.0
    vocabulary: int = 300
    first_year: int = 1990
    last_year: int = 2004
    sentences: int = 3
    words_per_sentence: int = 5
    zipf: float = 0.0
    seed: int = 7


def _vocabulary(size: int) -> List[str]:
    return [f"kw{i:05d}" for i in range(size)]


def _word_cdf(spec: SyntheticSpec) -> Optional[np.ndarray]:
    """
    Cumulative Zipf distribution over the vocabulary ranks, None for uniform words
    """
    if spec.zipf <= 0:
        return None
    weights = np.arange(1, spec.vocabulary + 1, dtype=float) ** -spec.zipf
    cdf = np.cumsum(weights)
    return cdf / cdf[-1]


def _sentence(rng, vocabulary, words, cdf=None):
    if cdf is None:
        picks = rng.integers(0, len(vocabulary), size=words)
    else:
        picks = np.minimum(np.searchsorted(cdf, rng.random(words), side="right"), len(vocabulary) - 1)
    return " ".join(vocabulary[i] for i in picks)


def _text(rng, vocabulary, spec: SyntheticSpec, cdf=None):
    title = _sentence(rng, vocabulary, max(2, spec.words_per_sentence - 1), cdf)
    abstract = ". ".join(_sentence(rng, vocabulary, spec.words_per_sentence, cdf) for _ in range(spec.sentences)) + "."
    return title, abstract


def _authors(rng, n_authors):
    count = int(rng.integers(1, 4))
    picks = sorted(set(int(i) for i in rng.integers(0, n_authors, size=count)))
    return [f"a{i:05d}" for i in picks]


def background_records(spec: SyntheticSpec, n_papers: int = None, rng=None) -> List[dict]:
    """
    Papers spread evenly over the years, each citing a few random earlier
    papers (a paper never cites its own year or later).
    """
    rng = rng if rng is not None else np.random.default_rng(spec.seed)
    n_papers = spec.n_papers if n_papers is None else n_papers
    vocabulary = _vocabulary(spec.vocabulary)
    cdf = _word_cdf(spec)
    span = spec.last_year - spec.first_year + 1
    years = np.sort(spec.first_year + rng.integers(0, span, size=n_papers))
    # 每篇论文只能引用更早年份的论文
    first_of_year = np.searchsorted(years, years, side="left")
    max_refs = max(1, int(round(2 * spec.refs_per_paper)) - 1)

    records = []
    for position in range(n_papers):
        title, abstract = _text(rng, vocabulary, spec, cdf)
        bound = int(first_of_year[position])
        references = []
        if bound > 0:
            count = int(rng.integers(1, max_refs + 1))
            references = sorted(set(f"p{int(i):06d}" for i in rng.integers(0, bound, size=count)))
        authors = _authors(rng, spec.n_authors)
        records.append({
            "paper_id": f"p{position:06d}",
            "title": title,
            "abstract": abstract,
            "author_ids": authors,
            "year": int(years[position]),
            "venue": "synthetic",
            "references": references,
        })
    return records


def rising_paper_records(spec: SyntheticSpec = SyntheticSpec()) -> List[dict]:
    """
    A corpus with two planted papers.

    The old classic is published in the first year and cited 40 times, all at
    least ten years before the last year. The riser is published two years
    before the last year, cited 15 times within the last two years, and it and
    its citers introduce new terms that burst in the last window.
    """
    classic_citers = 40
    riser_citers = 15
    if spec.n_papers < 3 + classic_citers + riser_citers:
        raise ValueError(f"a rising-paper corpus needs more than {2 + classic_citers + riser_citers} papers")
    rng = np.random.default_rng(spec.seed)
    vocabulary = _vocabulary(spec.vocabulary)
    records = background_records(spec, spec.n_papers - 2 - classic_citers - riser_citers, rng)

    title, abstract = _text(rng, vocabulary, spec)
    records.append({
        "paper_id": CLASSIC_ID, "title": title, "abstract": abstract, "author_ids": ["a-classic"],
        "year": spec.first_year, "venue": "synthetic", "references": [],
    })
    for i in range(classic_citers):
        title, abstract = _text(rng, vocabulary, spec)
        records.append({
            "paper_id": f"c-classic-{i:02d}", "title": title, "abstract": abstract,
            "author_ids": _authors(rng, spec.n_authors),
            "year": spec.first_year + 1 + i % 4,
            "venue": "synthetic", "references": [CLASSIC_ID],
        })

    burst = " ".join(BURST_TERMS)
    title, abstract = _text(rng, vocabulary, spec)
    records.append({
        "paper_id": RISER_ID, "title": f"{burst} {title}", "abstract": f"{burst}. {abstract}",
        "author_ids": ["a-riser"], "year": spec.last_year - 2, "venue": "synthetic", "references": [],
    })
    for i in range(riser_citers):
        title, abstract = _text(rng, vocabulary, spec)
        records.append({
            "paper_id": f"c-riser-{i:02d}", "title": f"{burst} {title}", "abstract": abstract,
            "author_ids": _authors(rng, spec.n_authors),
            "year": spec.last_year - (1 if i < 5 else 0),
            "venue": "synthetic", "references": [RISER_ID],
        })
    return records


def scale_records(n_papers=100_000, n_citations=300_000, n_authors=50_000, vocabulary=20_000, seed=11) -> List[dict]:
    """
    Large background corpus over 1990-2011.

    Words follow a Zipf law, so frequent words pair up often enough for
    word pairs to pass the default min_df. The reference and author pools
    are sized up a little: first-year papers cite nothing and random
    authorship leaves part of the pool unused.
    """
    spec = SyntheticSpec(
        n_papers=n_papers,
        n_authors=int(n_authors * 1.05),
        refs_per_paper=1.1 * n_citations / n_papers,
        vocabulary=vocabulary,
        first_year=1990,
        last_year=2011,
        zipf=1.0,
        seed=seed,
    )
    return background_records(spec)
