import json

from corpus.parsing import convert_arnetminer, load_corpus, parse_corpus, write_corpus
from scirank.PipelineCommand import PipelineCommand

FORMATS = ("native", "arnetminer")


class Command(PipelineCommand):
    help = "Parse a raw corpus into <workspace>/corpus.jsonl and write parse_report.json"

    def add_command_arguments(self, parser):
        parser.add_argument("source", help="raw corpus file")
        parser.add_argument("--format", dest="source_format", choices=FORMATS, default="native",
                            help="native JSON lines or the ArnetMiner flat citation format")

    def run(self, run_config, **options):
        source = self.require_file(options["source"])
        if options["source_format"] == "arnetminer":
            with open(source, "r", encoding="utf-8") as f:
                corpus, report = parse_corpus(convert_arnetminer(f))
        else:
            corpus, report = load_corpus(source)

        workspace = run_config.workspace
        workspace.mkdir(parents=True, exist_ok=True)
        write_corpus(workspace / "corpus.jsonl", corpus)
        with open(workspace / "parse_report.json", "w", encoding="utf-8") as f:
            json.dump(report.to_dict(), f, indent=2, sort_keys=True)
            f.write("\n")
        self.stdout.write(
            f"ingested {report.papers} papers ({len(report.skipped_lines)} skipped, "
            f"{report.dangling_references} dangling references) into {workspace / 'corpus.jsonl'}"
        )
