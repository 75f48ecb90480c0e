"""
Evaluation reports: report.json for machines, report.txt as an aligned
table with one row per (year, method) and one column per (k, entity).
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple

from evaluate.harness import CaseStudyRow
from evaluate.models import AUTHOR, PAPER, ReportRow
from evaluate.serializers import ReportSerializer
from scirank.exceptions import ScirankError


def _method_order(rows: Sequence[ReportRow], methods: Sequence[str] = ()) -> List[str]:
    ordered = list(methods)
    for row in rows:
        if row.method not in ordered:
            ordered.append(row.method)
    return ordered


def render_table(rows: Sequence[ReportRow], ks: Iterable[int], methods: Sequence[str] = ()) -> str:
    ks = sorted(ks)
    columns = [(k, entity) for entity in (PAPER, AUTHOR) for k in ks]
    values = {(row.year, row.method, row.k, row.entity): row.ri for row in rows}
    header = ["year", "method"] + [f"{entity}@{k}" for k, entity in columns]

    body = []
    for year in sorted({row.year for row in rows}):
        for method in _method_order(rows, methods):
            cells = [values.get((year, method, k, entity)) for k, entity in columns]
            if all(cell is None for cell in cells):
                continue
            body.append([str(year), method] + ["-" if cell is None else f"{cell:.4f}" for cell in cells])

    widths = [max(len(line[i]) for line in [header] + body) for i in range(len(header))]
    lines = []
    for line in [header] + body:
        left = [line[i].ljust(widths[i]) for i in range(2)]
        right = [line[i].rjust(widths[i]) for i in range(2, len(line))]
        lines.append("  ".join(left + right).rstrip())
    return "\n".join(lines) + "\n"


def report_data(rows: Sequence[ReportRow], meta: dict) -> dict:
    return ReportSerializer({**meta, "rows": sorted(rows)}).data


def write_report(directory, rows: Sequence[ReportRow], meta: dict) -> Tuple[Path, Path]:
    """
    Write report.json and report.txt. ``meta`` holds cutoff_year,
    horizon_year, cohort_years, ks and methods.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    json_path = directory / "report.json"
    text_path = directory / "report.txt"
    with open(json_path, "w", encoding="utf-8") as f:
        json.dump(report_data(rows, meta), f, indent=2, sort_keys=True)
        f.write("\n")
    text_path.write_text(render_table(rows, meta["ks"], meta["methods"]), encoding="utf-8")
    return json_path, text_path


def read_report(path) -> Tuple[dict, List[ReportRow]]:
    """
    Raises:
        ScirankError: if the file is missing or does not validate
    """
    path = Path(path)
    if not path.is_file():
        raise ScirankError(f"report not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise ScirankError(f"{path}: invalid JSON: {e}")
    serializer = ReportSerializer(data=data)
    if not serializer.is_valid():
        raise ScirankError(f"{path}: {dict(serializer.errors)}")
    meta = dict(serializer.validated_data)
    rows = sorted(ReportRow(**dict(row)) for row in meta.pop("rows"))
    return meta, rows


def render_case_study(title: str, rows: Sequence[CaseStudyRow]) -> str:
    header = ["rank", "id", "score", "future_citations", "ground_truth_rank"]
    body = [[str(r.rank), r.entity_id, f"{r.score:.10g}", str(r.future_citations), str(r.ground_truth_rank)] for r in rows]
    widths = [max(len(line[i]) for line in [header] + body) for i in range(len(header))]
    lines = [title]
    for line in [header] + body:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(line)).rstrip())
    return "\n".join(lines) + "\n"
