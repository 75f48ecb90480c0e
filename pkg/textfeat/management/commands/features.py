from corpus.filters import preprocess
from corpus.parsing import load_corpus
from corpus.split import split_ground_truth
from scirank.PipelineCommand import PipelineCommand
from textfeat.features import build_feature_table
from textfeat.snapshot import write_snapshot


class Command(PipelineCommand):
    help = "Build the feature table of the ranking period and write features.jsonl"

    def add_command_arguments(self, parser):
        parser.add_argument("--input", default=None, help="native corpus (default: <workspace>/corpus.jsonl)")

    def run(self, run_config, **options):
        workspace = run_config.workspace
        source = self.require_file(options["input"] or workspace / "corpus.jsonl")
        corpus, _ = load_corpus(source)
        cleaned, _ = preprocess(corpus, run_config.preprocess)
        protocol = run_config.protocol
        ranking, _ = split_ground_truth(cleaned, protocol.cutoff_year, protocol.horizon_year)

        table = build_feature_table(ranking, run_config.features, last_year=protocol.reference_year)
        hp = run_config.hyper
        count = write_snapshot(workspace / "features.jsonl", table, hp.rho_feature, hp.u)
        self.stdout.write(f"wrote {count} features over {table.n_windows} windows to {workspace / 'features.jsonl'}")
