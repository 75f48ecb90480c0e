import math
from collections import Counter
from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from corpus.parsing import parse_corpus
from textfeat.features import (
    build_feature_table, extract_corpus_features, extract_features, innovativeness, innovativeness_history,
    innovativeness_vector,
)
from textfeat.models import Feature, FeatureConfig, FeatureStats, FeatureTable
from textfeat.tests.fixtures.recompute_burst import burst_score

NO_STOPWORDS = frozenset()


def corpus_of(titles_by_year):
    """
    {year: [title, ...]} -> Corpus with one paper per title
    """
    records = []
    for year, titles in sorted(titles_by_year.items()):
        for i, title in enumerate(titles):
            records.append({"paper_id": f"{year}-{i:02d}", "title": title, "year": year, "author_ids": ["x"]})
    corpus, _ = parse_corpus(records)
    return corpus


def table_of(corpus, **cfg):
    counts = extract_corpus_features(corpus, NO_STOPWORDS)
    return build_feature_table(corpus, FeatureConfig(**cfg), counts=counts)


def reference_score(freqs, first_seen, lambda_i, lam, j, rho, u, window_years=1):
    """
    Straight transcription of the burst score, one term at a time.
    """
    def x(index):
        return freqs[index] if first_seen <= index < len(freqs) and index >= 0 else 0
    first = abs(freqs[j] - lambda_i) / lam
    total = 0.0
    for s in range(1, u + 1):
        total += (freqs[j] - x(j - s)) / lambda_i * (1.0 / s)
    return max(first * total * math.exp(-rho * max(j - first_seen, 0) * window_years), 0.0)


def two_feature_table(first_seen=2):
    stats = [
        FeatureStats(Feature.word("burst"), (0, 0, 2, 8), first_seen, 2.5, df=10),
        FeatureStats(Feature.word("steady"), (1, 2, 1, 2), 0, 1.5, df=6),
    ]
    return FeatureTable.from_stats(stats, origin=2000), stats


class FeatureTableTests(SimpleTestCase):

    def test_constant_series(self):
        corpus = corpus_of({year: ["mining"] for year in range(2000, 2004)})
        table = table_of(corpus, min_df=1)
        stats = table.stats("w:mining")
        self.assertEqual(stats.window_freqs, (1, 1, 1, 1))
        self.assertEqual(stats.lambda_i, 1.0)

    def test_lambda_scopes(self):
        corpus = corpus_of({
            2000: ["alpha"],
            2001: ["alpha"],
            2002: ["burst"] * 2,
            2003: ["burst"] * 8,
        })
        lifetime = table_of(corpus, min_df=1)
        self.assertEqual(lifetime.stats("w:burst").window_freqs, (0, 0, 2, 8))
        self.assertEqual(lifetime.stats("w:burst").first_seen, 2)
        self.assertEqual(lifetime.stats("w:burst").lambda_i, 5.0)
        globally = table_of(corpus, min_df=1, lambda_scope="global")
        self.assertEqual(globally.stats("w:burst").lambda_i, 2.5)
        self.assertEqual(globally.stats("w:alpha").lambda_i, 0.5)
        self.assertAlmostEqual(globally.global_lambda, 1.5)

    def test_global_lambda_is_mean_of_lambdas(self):
        table, _ = two_feature_table()
        self.assertEqual(table.global_lambda, 2.0)

    def test_min_df_and_max_features(self):
        corpus = corpus_of({2000: ["aa bb", "aa cc", "aa bb"], 2001: ["aa dd"]})
        table = table_of(corpus, min_df=2)
        self.assertEqual(table.keys, ("p:aa+bb", "w:aa", "w:bb"))
        top = table_of(corpus, min_df=1, max_features=1)
        self.assertEqual(top.keys, ("w:aa",))
        self.assertEqual(top.document_frequency("w:aa"), 4)

    def test_window_length(self):
        corpus = corpus_of({2000: ["aa"], 2001: ["aa"], 2002: ["aa"], 2004: ["aa"]})
        table = table_of(corpus, min_df=1, window_years=2)
        self.assertEqual(table.n_windows, 3)
        self.assertEqual(table.stats("w:aa").window_freqs, (2, 1, 1))
        self.assertEqual(table.window_of(2003), 1)
        self.assertEqual(table.window_start(2), 2004)

    def test_windows_extend_to_last_year(self):
        corpus = corpus_of({2000: ["aa"], 2001: ["aa"]})
        counts = extract_corpus_features(corpus, NO_STOPWORDS)
        table = build_feature_table(corpus, FeatureConfig(min_df=1), last_year=2004, counts=counts)
        self.assertEqual(table.n_windows, 5)
        self.assertEqual(table.current_window, 4)

    def test_recount_on_small_corpora(self):
        words = ["aa", "bb", "cc", "dd", "ee"]
        for seed in range(5):
            rng = np.random.default_rng(seed)
            titles = {}
            for _ in range(int(rng.integers(5, 20))):
                year = int(rng.integers(2000, 2005))
                title = " ".join(words[i] for i in rng.integers(0, len(words), size=3))
                titles.setdefault(year, []).append(title)
            corpus = corpus_of(titles)
            table = table_of(corpus, min_df=2)

            per_paper = {pid: set(extract_features(paper, NO_STOPWORDS)) for pid, paper in corpus.papers.items()}
            df = Counter(key for keys in per_paper.values() for key in keys)
            self.assertEqual(set(table.keys), {key for key, n in df.items() if n >= 2})
            origin = corpus.min_year()
            for key in table.keys:
                expected = [0] * table.n_windows
                for pid, keys in per_paper.items():
                    if key in keys:
                        expected[corpus.papers[pid].year - origin] += 1
                self.assertEqual(list(table.stats(key).window_freqs), expected)
                self.assertEqual(table.document_frequency(key), df[key])


class InnovativenessTests(SimpleTestCase):

    def test_worked_example(self):
        table, stats = two_feature_table()
        score = innovativeness(stats[0], table, j=3, rho=0.0, u=3)
        self.assertAlmostEqual(score, 209 / 15, places=12)
        self.assertAlmostEqual(score, reference_score((0, 0, 2, 8), 2, 2.5, 2.0, 3, 0.0, 3), places=12)
        expected = burst_score([0, 0, 2, 8], 3, Fraction(5, 2), 2, 3)
        self.assertEqual(expected, Fraction(209, 15))
        self.assertLess(abs(score - float(expected)), 1e-9)

    def test_decay_scales_by_age(self):
        table, stats = two_feature_table(first_seen=0)
        undecayed = innovativeness(stats[0], table, j=3, rho=0.0, u=3)
        decayed = innovativeness(stats[0], table, j=3, rho=0.5, u=3)
        self.assertAlmostEqual(undecayed, 209 / 15, places=12)
        self.assertAlmostEqual(decayed, undecayed * math.exp(-1.5), places=12)

    def test_frequency_at_its_mean(self):
        stats = FeatureStats(Feature.word("flat"), (2, 2, 2), 0, 2.0)
        table = FeatureTable.from_stats([stats], origin=2000)
        self.assertEqual(innovativeness(stats, table, j=2, rho=0.0, u=2), 0.0)

    def test_declining_feature_is_clamped(self):
        table, stats = two_feature_table()
        self.assertEqual(innovativeness(stats[1], table, j=2, rho=0.0, u=1), 0.0)

    def test_vector_matches_scalar(self):
        for first_seen in (0, 2):
            table, _ = two_feature_table(first_seen)
            for j in range(table.n_windows):
                for rho in (0.0, 0.2):
                    for u in (1, 3, 5):
                        vector = innovativeness_vector(table, j, rho, u)
                        for row, key in enumerate(table.keys):
                            scalar = innovativeness(table.stats(key), table, j, rho, u)
                            self.assertAlmostEqual(vector[row], scalar, places=12)
                            stats = table.stats(key)
                            expected = reference_score(stats.window_freqs, stats.first_seen, stats.lambda_i,
                                                       table.global_lambda, j, rho, u)
                            self.assertAlmostEqual(scalar, expected, places=12)

    def test_history_shape(self):
        table, _ = two_feature_table()
        history = innovativeness_history(table, 0.2, 3)
        self.assertEqual(history.shape, (2, 4))
        self.assertTrue((history >= 0).all())
        np.testing.assert_allclose(history[:, 3], innovativeness_vector(table, 3, 0.2, 3))


class TermCountsTests(SimpleTestCase):

    def setUp(self):
        self.corpus = corpus_of({2000: ["aa bb. bb cc", "aa aa"], 2001: ["cc dd"]})
        self.counts = extract_corpus_features(self.corpus, NO_STOPWORDS)

    def test_rows_match_single_paper_counts(self):
        self.assertEqual(self.counts.paper_ids, tuple(sorted(self.corpus.papers)))
        self.assertEqual(list(self.counts.keys), sorted(self.counts.keys))
        for paper_id, paper in self.corpus.papers.items():
            self.assertEqual(self.counts.counts_of(paper_id), dict(extract_features(paper, NO_STOPWORDS)))

    def test_document_frequency(self):
        df = dict(zip(self.counts.keys, self.counts.document_frequency()))
        self.assertEqual(df["w:aa"], 2)
        self.assertEqual(df["w:cc"], 2)
        self.assertEqual(df["p:aa+bb"], 1)

    def test_columns_in_requested_order(self):
        columns = self.counts.columns(["w:zz", "w:aa"]).toarray()
        self.assertEqual(columns.shape, (3, 2))
        np.testing.assert_array_equal(columns[:, 0], 0)
        np.testing.assert_array_equal(columns[:, 1], [1, 2, 0])

    def test_only_stopwords(self):
        corpus = corpus_of({2000: ["the the", "of the"]})
        counts = extract_corpus_features(corpus, frozenset({"the", "of"}))
        self.assertEqual(counts.keys, ())
        self.assertEqual(counts.matrix.shape, (2, 0))
        table = build_feature_table(corpus, FeatureConfig(min_df=1), counts=counts)
        self.assertEqual(len(table), 0)
        self.assertEqual(table.n_windows, 1)


class HistoryTests(SimpleTestCase):

    def test_earlier_windows_use_the_mean_up_to_that_window(self):
        corpus = corpus_of({2000: ["spike"], 2001: ["spike"], 2002: ["spike"], 2003: ["spike"] * 10})
        table = table_of(corpus, min_df=1)
        self.assertEqual(table.stats("w:spike").window_freqs, (1, 1, 1, 10))
        self.assertEqual(table.stats("w:spike").lambda_i, 3.25)
        history = innovativeness_history(table, 0.0, 3)
        # frequency 1 against a mean of 1 so far
        self.assertEqual(history[0, 2], 0.0)
        self.assertGreater(history[0, 3], 0.0)
        np.testing.assert_allclose(history[:, 3], innovativeness_vector(table, 3, 0.0, 3))

    def test_global_scope_history(self):
        corpus = corpus_of({2000: ["aa"], 2001: ["aa"], 2002: ["aa bb"], 2003: ["aa bb", "bb"]})
        table = table_of(corpus, min_df=1, lambda_scope="global")
        history = innovativeness_history(table, 0.0, 1)
        # aa has stayed at its running mean of 1 through window 2
        self.assertEqual(history[table.positions["w:aa"], 2], 0.0)
