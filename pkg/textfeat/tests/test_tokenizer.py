from collections import Counter

from django.test import SimpleTestCase

from corpus.models import PaperRecord
from textfeat.features import extract_features
from textfeat.models import PAIR, WORD, Feature
from textfeat.tokenizer import load_stopwords, tokenize


def paper(title, abstract=""):
    return PaperRecord(paper_id="p", title=title, year=2000, abstract=abstract)


class TokenizeTests(SimpleTestCase):

    def test_hyphenated_title(self):
        self.assertEqual(tokenize("Privacy-Preserving Data Mining."), [["privacy", "preserving", "data", "mining"]])

    def test_empty(self):
        self.assertEqual(tokenize(""), [])

    def test_stopwords_and_sentences(self):
        self.assertEqual(tokenize("The cat. The dog.", frozenset({"the"})), [["cat"], ["dog"]])

    def test_short_tokens_and_empty_sentences(self):
        self.assertEqual(tokenize("x y. Graph ranking! ?", frozenset()), [["graph", "ranking"]])

    def test_shipped_stopwords(self):
        words = load_stopwords()
        self.assertIn("the", words)
        self.assertNotIn("mining", words)


class ExtractFeaturesTests(SimpleTestCase):
    stopwords = frozenset()

    def test_one_sentence(self):
        counts = extract_features(paper("aa bb cc"), self.stopwords)
        self.assertEqual(set(counts), {"w:aa", "w:bb", "w:cc", "p:aa+bb", "p:aa+cc", "p:bb+cc"})

    def test_pairs_stay_within_a_sentence(self):
        counts = extract_features(paper("aa bb. bb cc."), self.stopwords)
        pairs = {key for key in counts if key.startswith("p:")}
        self.assertEqual(pairs, {"p:aa+bb", "p:bb+cc"})
        self.assertEqual(counts["w:bb"], 2)

    def test_repeated_word(self):
        counts = extract_features(paper("aa aa bb"), self.stopwords)
        self.assertEqual(counts, Counter({"w:aa": 2, "w:bb": 1, "p:aa+bb": 1}))

    def test_title_and_abstract(self):
        counts = extract_features(paper("aa bb", "aa bb."), self.stopwords)
        self.assertEqual(counts["p:aa+bb"], 2)


class FeatureTests(SimpleTestCase):

    def test_pair_is_unordered(self):
        self.assertEqual(Feature.pair("zz", "aa"), Feature.pair("aa", "zz"))
        self.assertEqual(Feature.pair("zz", "aa").key, "p:aa+zz")

    def test_pair_of_one_token(self):
        with self.assertRaises(ValueError):
            Feature.pair("aa", "aa")

    def test_keys(self):
        self.assertEqual(Feature.from_key("w:mining"), Feature(WORD, ("mining",)))
        self.assertEqual(Feature.from_key("p:data+mining").kind, PAIR)
        with self.assertRaises(ValueError):
            Feature.from_key("mining")
