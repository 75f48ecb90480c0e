from evaluate.reports import read_report, render_table
from scirank.PipelineCommand import PipelineCommand


class Command(PipelineCommand):
    help = "Print the RI@k table of <workspace>/eval/report.json"

    def run(self, run_config, **options):
        path = self.require_file(run_config.workspace / "eval" / "report.json")
        meta, rows = read_report(path)
        self.stdout.write(f"cutoff {meta['cutoff_year']}, future citations up to {meta['horizon_year']}")
        self.stdout.write(render_table(rows, meta["ks"], meta["methods"]), ending="")
