import json

from django.core.management.base import CommandError

from corpus.filters import preprocess
from corpus.models import GroundTruth
from corpus.parsing import load_corpus
from corpus.split import split_ground_truth
from evaluate.cohorts import build_cohort
from evaluate.harness import case_study, evaluate_methods
from evaluate.models import AUTHORS_STARTING_YEAR, CITATION_COUNT, PAPERS_OF_YEAR
from evaluate.reports import render_case_study, write_report
from mrfrank.artifacts import read_ranking
from mrfrank.models import FULL, MODES
from scirank.exceptions import ScirankError
from scirank.PipelineCommand import EXIT_USAGE, PipelineCommand

CASE_STUDY_K = 10


class Command(PipelineCommand):
    help = "Score the rankings under <workspace>/rank/ with RI@k and write <workspace>/eval/"

    def add_command_arguments(self, parser):
        parser.add_argument("--input", default=None, help="native corpus (default: <workspace>/corpus.jsonl)")

    def run(self, run_config, **options):
        workspace = run_config.workspace
        protocol = run_config.protocol
        source = self.require_file(options["input"] or workspace / "corpus.jsonl")
        gt_path = self.require_file(workspace / "ground_truth.json")

        with open(gt_path, "r", encoding="utf-8") as f:
            gt = GroundTruth.from_dict(json.load(f))
        if (gt.cutoff_year, gt.horizon_year) != (protocol.cutoff_year, protocol.horizon_year):
            raise ScirankError(
                f"ground_truth.json covers {gt.cutoff_year}-{gt.horizon_year}, "
                f"configured {protocol.cutoff_year}-{protocol.horizon_year}; rerun rank"
            )

        modes = [mode for mode in MODES if (workspace / "rank" / mode / "papers.tsv").is_file()]
        if not modes:
            raise CommandError(f"no ranking found under {workspace / 'rank'}; run rank first", returncode=EXIT_USAGE)
        rankings = {
            mode: (read_ranking(workspace / "rank" / mode / "papers.tsv"),
                   read_ranking(workspace / "rank" / mode / "authors.tsv"))
            for mode in modes
        }

        corpus, _ = load_corpus(source)
        cleaned, _ = preprocess(corpus, run_config.preprocess)
        ranking_corpus, _ = split_ground_truth(cleaned, protocol.cutoff_year, protocol.horizon_year)

        rows = evaluate_methods(rankings, ranking_corpus, gt, protocol.cohort_years, protocol.ks)
        meta = {
            "cutoff_year": protocol.cutoff_year,
            "horizon_year": protocol.horizon_year,
            "cohort_years": list(protocol.cohort_years),
            "ks": list(protocol.ks),
            "methods": [CITATION_COUNT] + modes,
        }
        json_path, text_path = write_report(workspace / "eval", rows, meta)

        lead = FULL if FULL in rankings else modes[0]
        year = max(protocol.cohort_years)
        sections = []
        for kind, ranked, label in ((PAPERS_OF_YEAR, rankings[lead][0], "papers"),
                                    (AUTHORS_STARTING_YEAR, rankings[lead][1], "authors")):
            cohort = build_cohort(ranking_corpus, kind, year)
            top = case_study(ranked, gt, cohort, CASE_STUDY_K)
            sections.append(render_case_study(f"top {CASE_STUDY_K} {label} of {year} ({lead})", top))
        (workspace / "eval" / "case_study.txt").write_text("\n".join(sections), encoding="utf-8")

        self.stdout.write(text_path.read_text(encoding="utf-8"))
        self.stdout.write(f"report written to {json_path}")
