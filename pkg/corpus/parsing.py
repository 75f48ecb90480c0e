"""
Reading and writing corpora.

The native format is JSON lines, one paper per line::

    {"paper_id": "p1", "title": "...", "abstract": "...", "author_ids": ["a1"],
     "author_names": ["Ann"], "year": 2001, "venue": "...", "references": ["p0"]}

``paper_id``, ``title`` and ``year`` are required, everything else is optional.
"""
from __future__ import annotations

import json
import logging
from collections.abc import Mapping
from dataclasses import replace
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Tuple

from corpus.models import Corpus, PaperRecord, ParseReport
from corpus.serializers import PaperRecordSerializer
from scirank.exceptions import DuplicatePaperError

logger = logging.getLogger("scirank")


def parse_corpus(record_stream: Iterable[Optional[Mapping]]) -> Tuple[Corpus, ParseReport]:
    """
    Validate raw records and build a Corpus.

    Records are numbered from 1 in stream order; that number is what gets
    logged for skipped records (load_corpus passes real file line numbers).
    Anything that is not a mapping, for instance a line that was not valid
    JSON, counts as malformed.

    Raises:
        DuplicatePaperError: if two valid records share a paper_id
    """
    return parse_numbered(enumerate(record_stream, start=1))


def parse_numbered(numbered: Iterable[Tuple[int, Optional[Mapping]]]) -> Tuple[Corpus, ParseReport]:
    report = ParseReport()
    parsed: dict = {}

    for line_no, raw in numbered:
        report.records_read += 1
        if not isinstance(raw, Mapping):
            report.skipped_lines.append(line_no)
            logger.warning("line %d: not a record, skipped", line_no)
            continue
        serializer = PaperRecordSerializer(data=dict(raw))
        if not serializer.is_valid():
            report.skipped_lines.append(line_no)
            logger.warning("line %d: malformed record skipped: %s", line_no, dict(serializer.errors))
            continue
        paper = serializer.save()
        if paper.paper_id in parsed:
            raise DuplicatePaperError(paper.paper_id, line_no)
        parsed[paper.paper_id] = paper

    papers: List[PaperRecord] = []
    for paper in parsed.values():
        kept = []
        seen = set()
        for ref in paper.references:
            if ref == paper.paper_id:
                report.self_citations += 1
                continue
            if ref in seen:
                report.duplicate_references += 1
                continue
            seen.add(ref)
            if ref not in parsed:
                report.dangling_references += 1
                continue
            kept.append(ref)
        papers.append(replace(paper, references=tuple(kept)))

    report.papers = len(papers)
    if report.dangling_references:
        logger.info("dropped %d dangling references", report.dangling_references)
    return Corpus.from_papers(papers), report


def read_raw_records(path) -> Iterator[Tuple[int, Optional[dict]]]:
    """
    Yield (line number, decoded object) per non-empty line; the object is None
    for undecodable lines.
    """
    with open(path, "r", encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield line_no, json.loads(line)
            except json.JSONDecodeError as e:
                logger.warning("line %d: invalid JSON (%s)", line_no, e)
                yield line_no, None


def load_corpus(path) -> Tuple[Corpus, ParseReport]:
    return parse_numbered(read_raw_records(path))


def write_records(path, records: Iterable[dict]) -> int:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with open(path, "w", encoding="utf-8") as f:
        for record in records:
            f.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
            count += 1
    return count


def write_corpus(path, corpus: Corpus) -> int:
    """
    Write the corpus in the native format, one line per paper sorted by id.
    """
    return write_records(path, (corpus.papers[paper_id].to_dict() for paper_id in sorted(corpus.papers)))


# region ArnetMiner

ARNETMINER_FIELDS = {
    "#*": "title",
    "#@": "authors",
    "#t": "year",
    "#c": "venue",
    "#index": "paper_id",
    "#%": "references",
    "#!": "abstract",
}


def convert_arnetminer(lines: Iterable[str]) -> Iterator[dict]:
    """
    Convert the ArnetMiner flat citation format to native records.

    One field per line, a blank line ends a record::

        #*Privacy-Preserving Data Mining
        #@Rakesh Agrawal,Ramakrishnan Srikant
        #t2000
        #cSIGMOD Conference
        #index42
        #%17
        #!We consider the problem of ...

    Authors are only known by name, so the name doubles as author id. A year
    that is not a number is left out and the record will be rejected by
    parse_corpus like any other malformed record.
    """
    record = {}
    for line in lines:
        line = line.rstrip("\n").rstrip("\r")
        if not line.strip():
            if record:
                yield _finish_arnetminer(record)
                record = {}
            continue
        for prefix in ("#index", "#*", "#@", "#t", "#c", "#%", "#!"):
            if line.startswith(prefix):
                field_name = ARNETMINER_FIELDS[prefix]
                value = line[len(prefix):].strip()
                if field_name == "references":
                    if value:
                        record.setdefault("references", []).append(value)
                else:
                    record[field_name] = value
                break
    if record:
        yield _finish_arnetminer(record)


def _finish_arnetminer(record: dict) -> dict:
    authors = [name.strip() for name in record.get("authors", "").split(",") if name.strip()]
    native = {
        "paper_id": record.get("paper_id", ""),
        "title": record.get("title", ""),
        "abstract": record.get("abstract", ""),
        "author_ids": authors,
        "author_names": authors,
        "venue": record.get("venue", ""),
        "references": record.get("references", []),
    }
    year = record.get("year", "")
    if year.isdigit():
        native["year"] = int(year)
    return native

# endregion
