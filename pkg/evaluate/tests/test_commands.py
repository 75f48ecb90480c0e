import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from corpus.parsing import write_records
from corpus.synthetic import SyntheticSpec, rising_paper_records
from evaluate.models import ReportRow
from evaluate.reports import read_report, render_table, write_report

PROTOCOL = {"cohort_years": [2001, 2002, 2003], "ks": [3, 5]}


class ReportTests(SimpleTestCase):
    rows = [
        ReportRow(year=2001, method="full", entity="P", k=5, ri=4.2),
        ReportRow(year=2001, method="citation_count", entity="P", k=5, ri=3.0),
        ReportRow(year=2001, method="full", entity="A", k=5, ri=1.9),
    ]
    meta = {"cutoff_year": 2004, "horizon_year": 2011, "cohort_years": [2001], "ks": [5],
            "methods": ["citation_count", "full"]}

    def test_round_trip(self):
        with tempfile.TemporaryDirectory() as tmp:
            json_path, text_path = write_report(Path(tmp), self.rows, self.meta)
            meta, rows = read_report(json_path)
            text = text_path.read_text(encoding="utf-8")
        self.assertEqual(rows, sorted(self.rows))
        self.assertEqual(meta, self.meta)
        self.assertEqual(text, render_table(self.rows, [5], self.meta["methods"]))

    def test_table_layout(self):
        lines = render_table(self.rows, [5], self.meta["methods"]).splitlines()
        self.assertEqual(lines[0].split(), ["year", "method", "P@5", "A@5"])
        self.assertEqual(lines[1].split(), ["2001", "citation_count", "3.0000", "-"])
        self.assertEqual(lines[2].split(), ["2001", "full", "4.2000", "1.9000"])


class EvalCommandTests(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.tmp = tempfile.TemporaryDirectory()
        cls.workspace = Path(cls.tmp.name)
        write_records(cls.workspace / "corpus.jsonl",
                      rising_paper_records(SyntheticSpec(n_papers=300, last_year=2008)))
        call_command("rank", workspace=str(cls.workspace), all_modes=True, max_iterations=1000, stdout=StringIO(),
                     **PROTOCOL)

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()
        super().tearDownClass()

    def test_eval_and_report(self):
        call_command("eval", workspace=str(self.workspace), stdout=StringIO(), **PROTOCOL)
        meta, rows = read_report(self.workspace / "eval" / "report.json")
        self.assertEqual(meta["methods"], ["citation_count", "full", "no_time", "no_content", "no_time_no_content"])
        self.assertTrue(rows)
        self.assertEqual({row.method for row in rows}, set(meta["methods"]))
        self.assertTrue(all(row.ri <= row.k + (row.k - 1) / 2 for row in rows))
        self.assertIn("top 10 papers of 2003 (full)", (self.workspace / "eval" / "case_study.txt").read_text())

        out = StringIO()
        call_command("report", workspace=str(self.workspace), stdout=out)
        self.assertIn("citation_count", out.getvalue())
        self.assertIn("P@5", out.getvalue())

    def test_protocol_mismatch(self):
        with self.assertRaises(CommandError) as cm:
            call_command("eval", workspace=str(self.workspace), cutoff_year=2003, stdout=StringIO())
        self.assertEqual(cm.exception.returncode, 2)

    def test_missing_ground_truth(self):
        with tempfile.TemporaryDirectory() as tmp:
            write_records(Path(tmp) / "corpus.jsonl", [])
            with self.assertRaises(CommandError) as cm:
                call_command("eval", workspace=tmp, stdout=StringIO())
        self.assertEqual(cm.exception.returncode, 1)

    def test_sweep(self):
        call_command("sweep", workspace=str(self.workspace), gamma1="0,0.2", gamma2="0.1,0.7",
                     stdout=StringIO(), **PROTOCOL)
        data = json.loads((self.workspace / "sweep" / "sweep.json").read_text(encoding="utf-8"))
        self.assertEqual([(p["gamma1"], p["gamma2"]) for p in data["points"]], [(0.0, 0.1), (0.2, 0.1)])
        self.assertTrue(all(p["rows"] for p in data["points"]))

    def test_sweep_without_content(self):
        with self.assertRaises(CommandError) as cm:
            call_command("sweep", workspace=str(self.workspace), mode="no_content", stdout=StringIO())
        self.assertEqual(cm.exception.returncode, 1)
