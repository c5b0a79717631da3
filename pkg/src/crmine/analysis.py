"""Text analysis chain: tokenize, drop stopwords, stem.

Positions are assigned over the full token sequence before stopword removal,
so the gap left by an eliminated stopword stays visible to proximity
matching. Accents are folded away and case is ignored.
"""

from __future__ import annotations

import re
import unicodedata

from .stemming import stem

# The classic 33-entry English stopword list. Deliberately narrow: terms
# like "tax" or "increase" must never be filtered.
STOPWORDS = frozenset("""
    a an and are as at be but by for if in into is it no not of on or such
    that the their then there these they this to was will with
""".split())

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


def _fold(text: str) -> str:
    decomposed = unicodedata.normalize("NFKD", text)
    return "".join(ch for ch in decomposed if unicodedata.category(ch) != "Mn")


def tokenize(text: str) -> list[str]:
    """Split text into lowercase word tokens, folding diacritics."""
    return [match.group(0).lower() for match in _TOKEN_RE.finditer(_fold(text))]


def analyze(text: str) -> list[tuple[str, int]]:
    """Produce (stemmed term, position) pairs for one text element."""
    out = []
    for position, token in enumerate(tokenize(text)):
        if token not in STOPWORDS:
            out.append((stem(token), position))
    return out
