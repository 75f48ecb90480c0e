from django.test import SimpleTestCase

from corpus.parsing import parse_corpus
from corpus.split import split_ground_truth
from corpus.tests.test_filters import random_corpus
from corpus.tests.test_parsing import record


class SplitTests(SimpleTestCase):

    def setUp(self):
        self.corpus, _ = parse_corpus([
            record("A", 2003, authors=("x", "y")),
            record("B", 2004, ["A"], authors=("y",)),
            record("C", 2006, ["A", "B"], authors=("z",)),
            record("D", 2010, ["A"], authors=("z",)),
            record("E", 2012, ["A"], authors=("z",)),
        ])

    def test_future_citations(self):
        ranking, gt = split_ground_truth(self.corpus, 2004, 2011)
        self.assertEqual(sorted(ranking.papers), ["A", "B"])
        self.assertEqual(gt.paper_future_citations, {"A": 2, "B": 1})
        self.assertEqual(gt.author_future_citations, {"x": 2, "y": 3})

    def test_ranking_corpus_keeps_only_past_edges(self):
        ranking, _ = split_ground_truth(self.corpus, 2004, 2011)
        self.assertEqual(ranking.citation_edges, [("B", "A", 2004)])
        self.assertNotIn("z", ranking.authors)

    def test_cutoff_must_precede_horizon(self):
        with self.assertRaises(ValueError):
            split_ground_truth(self.corpus, 2011, 2011)

    def test_edges_are_partitioned(self):
        for seed in range(5):
            corpus = random_corpus(seed)
            ranking, gt = split_ground_truth(corpus, 1995, 2004)
            past = {pid for pid, paper in corpus.papers.items() if paper.year <= 1995}
            inside = [e for e in corpus.citation_edges if e[0] in past and e[1] in past]
            future = [e for e in corpus.citation_edges if e[1] in past and 1995 < e[2] <= 2004]
            self.assertEqual(ranking.citation_edges, inside)
            self.assertEqual(sum(gt.paper_future_citations.values()), len(future))
            self.assertTrue(set(inside).isdisjoint(future))

    def test_ground_truth_round_trip(self):
        _, gt = split_ground_truth(self.corpus, 2004, 2011)
        self.assertEqual(type(gt).from_dict(gt.to_dict()), gt)
