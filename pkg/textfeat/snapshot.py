"""
features.jsonl: a header line, then one feature per line in key order::

    {"origin": 1990, "window_years": 1, "lambda_scope": "lifetime", "global_lambda": 2.0,
     "rho_feature": 0.2, "u": 3, "features": 2, "windows": [1990, 1991, 1992, 1993]}
    {"key": "w:mining", "kind": "word", "terms": ["mining"], "window_freqs": [0, 0, 2, 8],
     "first_seen": 2, "lambda_i": 5.0, "df": 10, "innovativeness": [0.0, 0.0, 0.0, 1.23]}
"""
import json
from pathlib import Path
from typing import Tuple

from rest_framework import serializers

from scirank.exceptions import ScirankError
from textfeat.features import innovativeness_history
from textfeat.models import FeatureTable
from textfeat.serializers import FeatureStatsSerializer, SnapshotHeaderSerializer


def write_snapshot(path, table: FeatureTable, rho: float, u: int) -> int:
    history = innovativeness_history(table, rho, u)
    header = SnapshotHeaderSerializer({
        "origin": table.origin,
        "window_years": table.window_years,
        "lambda_scope": table.lambda_scope,
        "global_lambda": table.global_lambda,
        "rho_feature": rho,
        "u": u,
        "features": len(table),
        "windows": [table.window_start(j) for j in range(table.n_windows)],
    }).data

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(json.dumps(header, sort_keys=True) + "\n")
        for row, key in enumerate(table.keys):
            stats = table.stats(key, innovativeness=tuple(float(e) for e in history[row]))
            f.write(json.dumps(FeatureStatsSerializer(stats).data, sort_keys=True, ensure_ascii=False) + "\n")
    return len(table)


def read_snapshot(path) -> Tuple[FeatureTable, dict]:
    """
    Read features.jsonl back.

    Return:
        the table and the header (with the decay rate and lookback the
        innovativeness columns were computed with)

    Raises:
        ScirankError: if a line does not validate
    """
    with open(path, "r", encoding="utf-8") as f:
        lines = [line for line in f if line.strip()]
    if not lines:
        raise ScirankError(f"{path}: empty feature snapshot")

    try:
        header = SnapshotHeaderSerializer(data=json.loads(lines[0]))
    except ValueError as e:
        raise ScirankError(f"{path}: bad header: {e}")
    if not header.is_valid():
        raise ScirankError(f"{path}: bad header: {dict(header.errors)}")
    meta = dict(header.validated_data)

    stats = []
    for line_no, line in enumerate(lines[1:], start=2):
        try:
            serializer = FeatureStatsSerializer(data=json.loads(line))
            serializer.is_valid(raise_exception=True)
        except (serializers.ValidationError, ValueError) as e:
            raise ScirankError(f"{path}: line {line_no}: {e}")
        stats.append(serializer.save())

    table = FeatureTable.from_stats(
        stats,
        origin=meta["origin"],
        window_years=meta["window_years"],
        lambda_scope=meta["lambda_scope"],
        n_windows=len(meta["windows"]),
    )
    return table, meta
