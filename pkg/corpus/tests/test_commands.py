import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from corpus.parsing import load_corpus
from corpus.synthetic import CLASSIC_ID, RISER_ID, SyntheticSpec, rising_paper_records

FIXTURES = Path(__file__).resolve().parent / "fixtures"


class IngestCommandTests(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.workspace = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def test_native_ingest(self):
        call_command("ingest", str(FIXTURES / "three_papers.jsonl"), workspace=str(self.workspace), stdout=StringIO())
        lines = (self.workspace / "corpus.jsonl").read_text(encoding="utf-8").splitlines()
        self.assertEqual(len(lines), 3)
        report = json.loads((self.workspace / "parse_report.json").read_text(encoding="utf-8"))
        self.assertEqual(report["dangling_references"], 1)

    def test_arnetminer_ingest(self):
        call_command("ingest", str(FIXTURES / "arnetminer_sample.txt"), source_format="arnetminer",
                     workspace=str(self.workspace), stdout=StringIO())
        self.assertEqual(
            (self.workspace / "corpus.jsonl").read_text(encoding="utf-8"),
            (FIXTURES / "arnetminer_sample.jsonl").read_text(encoding="utf-8"),
        )

    def test_duplicate_is_a_data_error(self):
        with self.assertRaises(CommandError) as cm:
            call_command("ingest", str(FIXTURES / "duplicate.jsonl"), workspace=str(self.workspace))
        self.assertEqual(cm.exception.returncode, 2)

    def test_missing_file_is_a_usage_error(self):
        with self.assertRaises(CommandError) as cm:
            call_command("ingest", str(self.workspace / "nope.jsonl"), workspace=str(self.workspace))
        self.assertEqual(cm.exception.returncode, 1)

    def test_preprocess_writes_report(self):
        call_command("ingest", str(FIXTURES / "three_papers.jsonl"), workspace=str(self.workspace), stdout=StringIO())
        call_command("preprocess", workspace=str(self.workspace), stdout=StringIO())
        report = json.loads((self.workspace / "filter_report.json").read_text(encoding="utf-8"))
        self.assertEqual(report["input_papers"], 3)
        self.assertEqual(report["remaining"], 3)
        self.assertTrue((self.workspace / "preprocessed.jsonl").is_file())

    def test_synthesize_then_ingest(self):
        out = self.workspace / "raw.jsonl"
        call_command("synthesize", kind="rising", papers=120, output=str(out),
                     workspace=str(self.workspace), stdout=StringIO())
        call_command("ingest", str(out), workspace=str(self.workspace), stdout=StringIO())
        corpus, report = load_corpus(self.workspace / "corpus.jsonl")
        self.assertEqual(len(corpus), 120)
        self.assertEqual(report.skipped_lines, [])


class SyntheticTests(SimpleTestCase):

    def test_planted_papers(self):
        records = rising_paper_records()
        by_id = {r["paper_id"]: r for r in records}
        self.assertEqual(len(records), SyntheticSpec().n_papers)
        citers = lambda pid: [r for r in records if pid in r["references"]]
        self.assertEqual(len(citers(CLASSIC_ID)), 40)
        self.assertEqual(len(citers(RISER_ID)), 15)
        self.assertEqual(by_id[RISER_ID]["year"], 2002)
        self.assertTrue(all(r["year"] <= 1994 for r in citers(CLASSIC_ID)))

    def test_seeded(self):
        self.assertEqual(rising_paper_records(), rising_paper_records())

    def test_too_small(self):
        with self.assertRaises(ValueError):
            rising_paper_records(SyntheticSpec(n_papers=20))

    def test_background_cites_earlier_years_only(self):
        records = rising_paper_records(SyntheticSpec(n_papers=200))
        year = {r["paper_id"]: r["year"] for r in records}
        for r in records:
            for ref in r["references"]:
                self.assertLess(year[ref], r["year"])
