"""Brute-force text scanning used by the fixture generators.

Everything here is intentionally independent of the crmine package: fixtures
and their expected counts are produced by this plain double-loop scan so the
engine can later be checked against numbers it had no hand in computing.

The planted vocabularies never contain words that stem into the query terms,
so matching on raw lowercased tokens is exact for these corpora.
"""

from __future__ import annotations

import json
import math
import re
from pathlib import Path

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


def tokenize(text):
    return [m.group(0).lower() for m in _TOKEN_RE.finditer(text)]


def element_matches(tokens, word_a, word_b, max_distance):
    """True if word_a and word_b occur within max_distance positions."""
    pos_a = [i for i, t in enumerate(tokens) if t == word_a]
    pos_b = [i for i, t in enumerate(tokens) if t == word_b]
    for p in pos_a:
        for q in pos_b:
            if abs(p - q) <= max_distance:
                return True
    return False


def doc_matches(texts, word_a, word_b, max_distance):
    return any(
        element_matches(tokenize(element), word_a, word_b, max_distance)
        for element in texts
    )


def load_corpus_docs(corpus_root):
    """Read every .json fixture back as (id, texts, dates) tuples.

    Mirrors the documented extraction rules for the four file kinds, using
    only the fields the generators actually emit.
    """
    docs = []
    for path in sorted(Path(corpus_root).rglob("*.json")):
        raw = json.loads(path.read_text())
        if "amendment_id" in raw:
            doc_id = raw["amendment_id"]
            texts = [raw[k] for k in ("description", "purpose") if raw.get(k)]
            dates = [a["acted_at"][:10] for a in raw.get("actions", []) if "acted_at" in a]
        elif "bill_id" in raw:
            doc_id = raw["bill_id"]
            texts = [raw[k] for k in ("description", "official_title") if raw.get(k)]
            dates = [a["acted_at"][:10] for a in raw.get("actions", []) if "acted_at" in a]
        elif "vote_id" in raw:
            doc_id = raw["vote_id"]
            texts = [raw["question"]] if raw.get("question") else []
            dates = [raw["date"][:10]]
        else:
            nom = raw.get("nomination") or raw.get("Nomination")
            doc_id = str(nom.get("id") or nom.get("number") or path.stem)
            texts = []
            for lower, upper in (("nominee", "Nominee"), ("organization", "Organization")):
                value = raw.get(lower) or raw.get(upper)
                if value:
                    texts.append(value)
            dates = [a["acted_at"][:10] for a in raw.get("actions", []) if "acted_at" in a]
        docs.append((doc_id, texts, dates))
    return docs


def annual_counts(docs, word_a, word_b, max_distance):
    """Year -> number of matching docs, one count per distinct doc date."""
    counts = {}
    for _, texts, dates in docs:
        if doc_matches(texts, word_a, word_b, max_distance):
            for iso in sorted(set(dates)):
                year = int(iso[:4])
                counts[year] = counts.get(year, 0) + 1
    return counts


def pearson(xs, ys):
    """Computational-formula Pearson, kept distinct from the engine's path."""
    n = len(xs)
    sx = sum(xs)
    sy = sum(ys)
    sxx = sum(x * x for x in xs)
    syy = sum(y * y for y in ys)
    sxy = sum(x * y for x, y in zip(xs, ys))
    num = n * sxy - sx * sy
    den = math.sqrt((n * sxx - sx * sx) * (n * syy - sy * sy))
    return num / den
