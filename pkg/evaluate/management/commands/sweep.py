import json

from decouple import Csv
from django.core.management.base import CommandError

from corpus.parsing import load_corpus
from evaluate.harness import parameter_sweep
from mrfrank.pipeline import prepare_problem
from scirank.PipelineCommand import EXIT_USAGE, PipelineCommand

DEFAULT_GRID = "0,0.1,0.2,0.3,0.4,0.5,0.6"


class Command(PipelineCommand):
    help = "RI@k over a grid of gamma1 (paper-feature weight) and gamma2 (author-feature weight)"

    def add_command_arguments(self, parser):
        parser.add_argument("--input", default=None, help="native corpus (default: <workspace>/corpus.jsonl)")
        parser.add_argument("--gamma1", type=Csv(float), default=DEFAULT_GRID, help="comma-separated gamma1 values")
        parser.add_argument("--gamma2", type=Csv(float), default=DEFAULT_GRID, help="comma-separated gamma2 values")

    def run(self, run_config, **options):
        hp = run_config.hyper
        if not hp.content:
            raise CommandError(f"mode {hp.mode} has no feature terms to sweep", returncode=EXIT_USAGE)
        workspace = run_config.workspace
        source = self.require_file(options["input"] or workspace / "corpus.jsonl")
        gamma1s = options["gamma1"] if isinstance(options["gamma1"], list) else Csv(float)(options["gamma1"])
        gamma2s = options["gamma2"] if isinstance(options["gamma2"], list) else Csv(float)(options["gamma2"])

        corpus, _ = load_corpus(source)
        problem = prepare_problem(corpus, run_config)
        protocol = run_config.protocol
        points = parameter_sweep(problem, hp, gamma1s, gamma2s, protocol.cohort_years, protocol.ks)

        path = workspace / "sweep" / "sweep.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            json.dump({
                "mode": hp.mode,
                "alpha_p": hp.alpha_p,
                "alpha_a": hp.alpha_a,
                "cutoff_year": protocol.cutoff_year,
                "horizon_year": protocol.horizon_year,
                "points": points,
            }, f, indent=2, sort_keys=True)
            f.write("\n")
        self.stdout.write(f"{len(points)} grid points written to {path}")
