from dataclasses import replace
from pathlib import Path

from corpus.parsing import write_records
from corpus.synthetic import SyntheticSpec, rising_paper_records, scale_records
from scirank.PipelineCommand import PipelineCommand

KINDS = ("rising", "scale")


class Command(PipelineCommand):
    help = "Write a seeded synthetic corpus in the native format"

    def add_command_arguments(self, parser):
        parser.add_argument("--kind", choices=KINDS, default="rising",
                            help="rising: planted classic and riser; scale: large background corpus")
        parser.add_argument("--seed", type=int, default=None)
        parser.add_argument("--papers", type=int, default=None, help="number of papers")
        parser.add_argument("--output", default=None, help="default: <workspace>/synthetic.jsonl")

    def run(self, run_config, **options):
        if options["kind"] == "scale":
            kwargs = {}
            if options["papers"]:
                kwargs.update(n_papers=options["papers"], n_citations=3 * options["papers"],
                              n_authors=max(1, options["papers"] // 2))
            if options["seed"] is not None:
                kwargs["seed"] = options["seed"]
            records = scale_records(**kwargs)
        else:
            spec = SyntheticSpec()
            if options["papers"]:
                spec = replace(spec, n_papers=options["papers"])
            if options["seed"] is not None:
                spec = replace(spec, seed=options["seed"])
            records = rising_paper_records(spec)

        output = Path(options["output"] or run_config.workspace / "synthetic.jsonl")
        count = write_records(output, records)
        self.stdout.write(f"wrote {count} synthetic papers to {output}")
