"""
Workspace files of a rank run, under rank/<mode>/::

    papers.tsv        rank, paper_id, score
    authors.tsv       rank, author_id, score
    features.tsv      rank, feature, score, innovativeness
    convergence.tsv   status comment, then iteration, delta
    matrices/         the five graphs in coordinate format (on request)

Scores keep 10 significant digits.
"""
import json
from pathlib import Path
from typing import List

from graphs.coordinate import write_coordinate
from mrfrank.models import RankedEntity
from mrfrank.pipeline import RankOutcome
from scirank.exceptions import ScirankError


def score(value: float) -> str:
    return f"{value:.10g}"


def _write_ranking(path: Path, id_column: str, ranked: List[RankedEntity], extra=None):
    with open(path, "w", encoding="utf-8") as f:
        header = ["rank", id_column, "score"] + ([extra[0]] if extra else [])
        f.write("\t".join(header) + "\n")
        for entity in ranked:
            row = [str(entity.rank), entity.entity_id, score(entity.score)]
            if extra:
                row.append(score(extra[1][entity.entity_id]))
            f.write("\t".join(row) + "\n")


def write_convergence(path: Path, outcome: RankOutcome):
    log = outcome.log
    with open(path, "w", encoding="utf-8") as f:
        f.write(
            f"# converged={'true' if log.converged else 'false'} iterations={log.iterations} "
            f"tolerance={outcome.hyper.tolerance!r}\n"
        )
        f.write("iteration\tdelta\n")
        for iteration, delta in enumerate(log.deltas, start=1):
            f.write(f"{iteration}\t{score(delta)}\n")


def write_rank_outputs(directory, outcome: RankOutcome, dump_matrices: bool = False) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    index = outcome.problem.graphs.index
    innovation = dict(zip(index.feature_ids, outcome.problem.e.e))

    _write_ranking(directory / "papers.tsv", "paper_id", outcome.papers)
    _write_ranking(directory / "authors.tsv", "author_id", outcome.authors)
    _write_ranking(directory / "features.tsv", "feature", outcome.features, extra=("innovativeness", innovation))
    write_convergence(directory / "convergence.tsv", outcome)

    if dump_matrices:
        matrices = directory / "matrices"
        for name, matrix in outcome.problem.graphs.matrices().items():
            write_coordinate(matrices / f"{name}.coo", matrix)
        with open(matrices / "entities.tsv", "w", encoding="utf-8") as f:
            f.write("kind\tposition\tid\n")
            for kind, ids in (("paper", index.paper_ids), ("author", index.author_ids), ("feature", index.feature_ids)):
                for position, entity_id in enumerate(ids):
                    f.write(f"{kind}\t{position}\t{entity_id}\n")
    return directory


def write_ground_truth(path, outcome: RankOutcome):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(outcome.problem.ground_truth.to_dict(), f, indent=2, sort_keys=True)
        f.write("\n")


def read_ranking(path) -> List[RankedEntity]:
    """
    Raises:
        ScirankError: if the file is missing or a row is malformed
    """
    path = Path(path)
    if not path.is_file():
        raise ScirankError(f"ranking not found: {path}")
    ranked = []
    with open(path, "r", encoding="utf-8") as f:
        next(f, None)
        for line_no, line in enumerate(f, start=2):
            fields = line.rstrip("\n").split("\t")
            try:
                ranked.append(RankedEntity(entity_id=fields[1], score=float(fields[2]), rank=int(fields[0])))
            except (IndexError, ValueError):
                raise ScirankError(f"{path}: line {line_no}: malformed ranking row")
    return ranked


def read_converged(path) -> bool:
    with open(path, "r", encoding="utf-8") as f:
        return "converged=true" in f.readline()
