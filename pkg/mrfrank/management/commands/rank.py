import logging
from dataclasses import replace

import numpy as np
from django.core.management.base import CommandError

from corpus.parsing import load_corpus
from mrfrank.artifacts import write_ground_truth, write_rank_outputs
from mrfrank.models import MODES
from mrfrank.oracle import assemble_combined, dominant_eigenvector
from mrfrank.pipeline import rank_pipeline
from scirank.exceptions import OracleSizeError
from scirank.PipelineCommand import EXIT_NOT_CONVERGED, PipelineCommand

logger = logging.getLogger("scirank")


class Command(PipelineCommand):
    help = "Rank papers, authors and features of the ranking period into <workspace>/rank/<mode>/"

    def add_command_arguments(self, parser):
        parser.add_argument("--input", default=None, help="native corpus (default: <workspace>/corpus.jsonl)")
        parser.add_argument("--all-modes", action="store_true", help="run every mode instead of --mode")
        parser.add_argument("--dump-matrices", action="store_true", help="also write the graphs in coordinate format")
        parser.add_argument("--check-oracle", action="store_true",
                            help="compare the result with the dense eigenvector (up to --oracle-limit entities)")

    def run(self, run_config, **options):
        workspace = run_config.workspace
        source = self.require_file(options["input"] or workspace / "corpus.jsonl")
        corpus, _ = load_corpus(source)

        modes = MODES if options["all_modes"] else (run_config.hyper.mode,)
        not_converged = []
        for mode in modes:
            hp = replace(run_config.hyper, mode=mode)
            outcome = rank_pipeline(corpus, run_config, hp)
            directory = write_rank_outputs(workspace / "rank" / mode, outcome, options["dump_matrices"])
            write_ground_truth(workspace / "ground_truth.json", outcome)
            status = "converged" if outcome.log.converged else "NOT CONVERGED"
            self.stdout.write(f"{mode}: {status} after {outcome.log.iterations} iterations -> {directory}")
            if options["check_oracle"]:
                self.check_oracle(outcome, run_config.protocol.oracle_limit)
            if not outcome.log.converged:
                not_converged.append(mode)

        if not_converged:
            raise CommandError(
                f"not converged within {run_config.hyper.max_iterations} iterations: {', '.join(not_converged)} "
                f"(outputs written)",
                returncode=EXIT_NOT_CONVERGED,
            )

    def check_oracle(self, outcome, limit):
        graphs = outcome.problem.graphs
        try:
            matrix = assemble_combined(graphs, outcome.problem.e, outcome.hyper, limit=limit)
        except OracleSizeError as e:
            logger.warning("oracle check skipped: %s", e)
            return
        expected = dominant_eigenvector(matrix, graphs.index.sizes)
        distance = float(np.abs(outcome.state.concatenated() - expected).max())
        self.stdout.write(f"  oracle: max deviation from the dense eigenvector {distance:.3e}")
