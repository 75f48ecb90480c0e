import json

from corpus.filters import preprocess
from corpus.parsing import load_corpus, write_corpus
from scirank.PipelineCommand import PipelineCommand


class Command(PipelineCommand):
    help = "Apply the preprocessing filters to corpus.jsonl"

    def add_command_arguments(self, parser):
        parser.add_argument("--input", default=None, help="native corpus (default: <workspace>/corpus.jsonl)")

    def run(self, run_config, **options):
        workspace = run_config.workspace
        source = self.require_file(options["input"] or workspace / "corpus.jsonl")
        corpus, _ = load_corpus(source)
        cleaned, report = preprocess(corpus, run_config.preprocess)

        workspace.mkdir(parents=True, exist_ok=True)
        write_corpus(workspace / "preprocessed.jsonl", cleaned)
        with open(workspace / "filter_report.json", "w", encoding="utf-8") as f:
            json.dump(report.to_dict(), f, indent=2, sort_keys=True)
            f.write("\n")
        self.stdout.write(f"kept {report.remaining} of {report.input_papers} papers")
