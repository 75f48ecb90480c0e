"""
Bibliographic records.

These are plain in-memory records, not database models: a corpus is loaded
from the workspace, transformed by pure functions and written back as text.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Optional, Tuple


@dataclass(frozen=True)
class PaperRecord:
    """
    Paper model
    """
    paper_id: str
    title: str
    year: int
    abstract: str = ""
    author_ids: Tuple[str, ...] = ()
    venue: str = ""
    references: Tuple[str, ...] = ()
    # 与 author_ids 一一对应, 可以为空
    author_names: Tuple[str, ...] = ()

    @property
    def text(self):
        if self.abstract:
            return f"{self.title}. {self.abstract}"
        return self.title

    def to_dict(self) -> dict:
        return {
            "paper_id": self.paper_id,
            "title": self.title,
            "abstract": self.abstract,
            "author_ids": list(self.author_ids),
            "author_names": list(self.author_names),
            "year": self.year,
            "venue": self.venue,
            "references": list(self.references),
        }

    def __str__(self):
        return self.title


@dataclass(frozen=True)
class AuthorRecord:
    """
    Author model, derived from the papers present in a corpus
    """
    author_id: str
    name: str
    first_pub_year: int

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Corpus:
    """
    Papers, their authors and the in-corpus citation edges.

    citation_edges holds (citing_id, cited_id, citing_year) sorted by
    (citing_id, cited_id).
    """
    papers: Dict[str, PaperRecord]
    authors: Dict[str, AuthorRecord]
    citation_edges: List[Tuple[str, str, int]]

    @classmethod
    def from_papers(cls, papers: Iterable[PaperRecord]) -> "Corpus":
        """
        Build a corpus whose edges and authors only involve the given papers.
        """
        by_id = {paper.paper_id: paper for paper in sorted(papers, key=lambda p: p.paper_id)}

        edges = []
        for paper in by_id.values():
            for cited in sorted(set(paper.references)):
                if cited in by_id and cited != paper.paper_id:
                    edges.append((paper.paper_id, cited, paper.year))

        first_year: Dict[str, int] = {}
        names: Dict[str, str] = {}
        for paper in by_id.values():
            for position, author_id in enumerate(paper.author_ids):
                if author_id not in first_year or paper.year < first_year[author_id]:
                    first_year[author_id] = paper.year
                if author_id not in names:
                    name = paper.author_names[position] if position < len(paper.author_names) else ""
                    names[author_id] = name or author_id
        authors = {
            author_id: AuthorRecord(author_id=author_id, name=names[author_id], first_pub_year=first_year[author_id])
            for author_id in sorted(first_year)
        }
        return cls(papers=by_id, authors=authors, citation_edges=edges)

    def restrict(self, paper_ids) -> "Corpus":
        """
        Sub-corpus of the given papers, references pruned to the kept ids.
        """
        keep = set(paper_ids) & self.papers.keys()
        return Corpus.from_papers(
            replace(self.papers[paper_id], references=tuple(ref for ref in self.papers[paper_id].references if ref in keep))
            for paper_id in keep
        )

    @classmethod
    def empty(cls) -> "Corpus":
        return cls(papers={}, authors={}, citation_edges=[])

    def papers_by_author(self) -> Dict[str, List[str]]:
        result: Dict[str, List[str]] = {author_id: [] for author_id in self.authors}
        for paper in self.papers.values():
            for author_id in dict.fromkeys(paper.author_ids):
                result[author_id].append(paper.paper_id)
        return result

    def in_degree(self) -> Dict[str, int]:
        counts = {paper_id: 0 for paper_id in self.papers}
        for _, cited, _ in self.citation_edges:
            counts[cited] += 1
        return counts

    def max_year(self) -> Optional[int]:
        return max((paper.year for paper in self.papers.values()), default=None)

    def min_year(self) -> Optional[int]:
        return min((paper.year for paper in self.papers.values()), default=None)

    def __len__(self):
        return len(self.papers)


@dataclass(frozen=True)
class GroundTruth:
    """
    Future citations of the papers and authors of the ranking period
    """
    cutoff_year: int
    horizon_year: int
    paper_future_citations: Dict[str, int]
    author_future_citations: Dict[str, int]

    def to_dict(self) -> dict:
        return {
            "cutoff_year": self.cutoff_year,
            "horizon_year": self.horizon_year,
            "paper_future_citations": dict(sorted(self.paper_future_citations.items())),
            "author_future_citations": dict(sorted(self.author_future_citations.items())),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GroundTruth":
        return cls(
            cutoff_year=int(data["cutoff_year"]),
            horizon_year=int(data["horizon_year"]),
            paper_future_citations={k: int(v) for k, v in data["paper_future_citations"].items()},
            author_future_citations={k: int(v) for k, v in data["author_future_citations"].items()},
        )


@dataclass
class ParseReport:
    """
    What parse_corpus kept and dropped
    """
    records_read: int = 0
    papers: int = 0
    skipped_lines: List[int] = field(default_factory=list)
    dangling_references: int = 0
    self_citations: int = 0
    duplicate_references: int = 0

    def to_dict(self) -> dict:
        return {
            "records_read": self.records_read,
            "papers": self.papers,
            "skipped_records": len(self.skipped_lines),
            "skipped_lines": list(self.skipped_lines),
            "dangling_references": self.dangling_references,
            "self_citations": self.self_citations,
            "duplicate_references": self.duplicate_references,
        }


@dataclass(frozen=True)
class PreprocessConfig:
    """
    Filter settings of preprocess
    """
    min_year: int = 1990
    require_abstract: bool = False
    title_patterns: Tuple[str, ...] = ("survey", "a review of")
    title_prefixes: Tuple[str, ...] = ("proceedings of", "workshop on")


@dataclass
class FilterReport:
    """
    Removal counts per preprocessing rule
    """
    input_papers: int = 0
    survey: int = 0
    min_year: int = 0
    incomplete: int = 0
    isolated: int = 0
    remaining: int = 0

    @property
    def removed(self):
        return self.survey + self.min_year + self.incomplete + self.isolated

    def to_dict(self) -> dict:
        return {
            "input_papers": self.input_papers,
            "removed": {
                "survey": self.survey,
                "min_year": self.min_year,
                "incomplete": self.incomplete,
                "isolated": self.isolated,
            },
            "remaining": self.remaining,
        }
