import numpy as np
from django.test import SimpleTestCase

from corpus.filters import is_survey, preprocess
from corpus.models import PreprocessConfig
from corpus.parsing import parse_corpus
from corpus.tests.test_parsing import record


def random_corpus(seed, n=40):
    rng = np.random.default_rng(seed)
    records = []
    for i in range(n):
        year = int(rng.integers(1985, 2005))
        refs = [f"p{int(j)}" for j in rng.integers(0, n, size=int(rng.integers(0, 3)))]
        title = "a survey of things" if rng.random() < 0.1 else f"paper {i}"
        records.append(record(f"p{i}", year, refs, authors=(f"a{int(rng.integers(0, 10))}",), title=title))
    corpus, _ = parse_corpus(records)
    return corpus


class PreprocessTests(SimpleTestCase):
    cfg = PreprocessConfig()

    def test_survey_titles(self):
        self.assertTrue(is_survey("A Survey of Ranking", self.cfg))
        self.assertTrue(is_survey("Proceedings of the  VLDB Endowment", self.cfg))
        self.assertFalse(is_survey("Ranking with proceedings of workshops", self.cfg))

    def test_isolation_cascades_to_a_fixpoint(self):
        # C is only linked through the survey S; once S is gone, C is isolated
        corpus, _ = parse_corpus([
            record("A", 2000),
            record("B", 2001, ["A"]),
            record("S", 2002, ["B"], title="A survey of B"),
            record("C", 2003, ["S"]),
        ])
        cleaned, report = preprocess(corpus, self.cfg)
        self.assertEqual(sorted(cleaned.papers), ["A", "B"])
        self.assertEqual(report.survey, 1)
        self.assertEqual(report.isolated, 1)
        self.assertEqual(report.remaining, 2)

    def test_old_paper_removed_before_isolation(self):
        corpus, _ = parse_corpus([
            record("A", 1980),
            record("B", 2001, ["A"]),
            record("C", 2002, ["B"]),
        ])
        cleaned, report = preprocess(corpus, self.cfg)
        self.assertEqual(sorted(cleaned.papers), ["B", "C"])
        self.assertEqual(report.min_year, 1)

    def test_require_abstract(self):
        corpus, _ = parse_corpus([
            dict(record("A", 2000), abstract="text"),
            dict(record("B", 2001, ["A"]), abstract="text"),
            record("C", 2002, ["A"]),
        ])
        cleaned, report = preprocess(corpus, PreprocessConfig(require_abstract=True))
        self.assertEqual(sorted(cleaned.papers), ["A", "B"])
        self.assertEqual(report.incomplete, 1)

    def test_idempotent_and_conserving(self):
        for seed in range(10):
            corpus = random_corpus(seed)
            once, report = preprocess(corpus, self.cfg)
            self.assertEqual(report.removed + report.remaining, report.input_papers)
            twice, again = preprocess(once, self.cfg)
            self.assertEqual(twice, once)
            self.assertEqual(again.removed, 0)

    def test_no_isolated_paper_left(self):
        for seed in range(10):
            cleaned, _ = preprocess(random_corpus(seed), self.cfg)
            linked = {p for edge in cleaned.citation_edges for p in edge[:2]}
            self.assertEqual(linked, set(cleaned.papers))
