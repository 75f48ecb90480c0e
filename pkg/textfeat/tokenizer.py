import re
from functools import lru_cache
from pathlib import Path
from typing import FrozenSet, List, Optional

from django.conf import settings

SENTENCE_END = re.compile(r"[.!?]+")
# 字母数字串, 连字符和撇号都会切开单词
TOKEN = re.compile(r"[^\W_]+")

MIN_TOKEN_LENGTH = 2


@lru_cache(maxsize=8)
def load_stopwords(path: str = "") -> FrozenSet[str]:
    """
    One word per line, ``#`` starts a comment. An empty path loads the
    configured default list.
    """
    path = path or settings.SCIRANK["STOPWORDS"]
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.split("#", 1)[0].strip().lower()
        if word:
            words.add(word)
    return frozenset(words)


def tokenize(text: str, stopwords: Optional[FrozenSet[str]] = None) -> List[List[str]]:
    """
    Split text into sentences of normalized tokens.

    Sentences end at ``.``, ``!`` or ``?``. Tokens are lowercased; stopwords
    and tokens shorter than two characters are dropped, and so are sentences
    left empty.
    """
    if not text:
        return []
    if stopwords is None:
        stopwords = load_stopwords()
    sentences = []
    for chunk in SENTENCE_END.split(text.lower()):
        tokens = [
            token for token in TOKEN.findall(chunk)
            if len(token) >= MIN_TOKEN_LENGTH and token not in stopwords
        ]
        if tokens:
            sentences.append(tokens)
    return sentences
