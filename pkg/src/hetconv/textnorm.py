"""Shared text helpers: tokenization, surface-form keys, stopwords."""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources

# unicode letters and digits, no underscore (so "_" blanks in serialized
# frames never become tokens)
_WORD_RE = re.compile(r"[^\W_]+")
_PUNCT_RE = re.compile(r"[^\w\s]")
# en dash, em dash, minus sign, figure dash
_DASH_RE = re.compile(r"[‐-―−]")


def tokenize(text: str) -> list[str]:
    """Lowercased word/number tokens; splits on any non-alphanumeric character."""
    return _WORD_RE.findall(text.lower())


def token_spans(text: str) -> list[tuple[int, int, str]]:
    """(char_start, char_end, lowercased token) for every token in text."""
    return [(m.start(), m.end(), m.group().lower()) for m in _WORD_RE.finditer(text)]


def normalize_surface(text: str) -> str:
    """Lexicon key form: lowercased, punctuation stripped, whitespace collapsed."""
    cleaned = _PUNCT_RE.sub(" ", _DASH_RE.sub(" ", text.lower()))
    return " ".join(cleaned.split())


def fold_text(text: str) -> str:
    """Loose comparison form: casefolded, unicode dashes mapped to '-', spaces collapsed."""
    return " ".join(_DASH_RE.sub("-", text.casefold()).split())


@lru_cache(maxsize=1)
def default_stopwords() -> frozenset[str]:
    """Bundled English stopword list (interrogatives deliberately kept out)."""
    data = resources.files("hetconv.data").joinpath("stopwords.txt").read_text("utf-8")
    return parse_stopwords(data)


def parse_stopwords(data: str) -> frozenset[str]:
    words = set()
    for line in data.splitlines():
        word = line.strip().lower()
        if word and not word.startswith("#"):
            words.add(word)
    return frozenset(words)
