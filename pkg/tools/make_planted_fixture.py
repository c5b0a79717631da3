#!/usr/bin/env python3
"""Generate the planted-correlation fixture corpus.

Builds a 30-year corpus of Congressional-action JSON files in which the
yearly number of documents containing "tax" within five positions of
"increase" tracks a synthetic economic indicator (generative correlation
0.9), plus decoy documents for the other keyword pairs so every default
query produces a varying series. Expected per-year counts and the expected
correlation are computed here with the brute-force scanner and frozen into
meta.json; the engine is later tested against those numbers.

Run from the repository root:

    python3 tools/make_planted_fixture.py

Output is deterministic for a given seed; the generated tree under
tests/data/planted/ is committed.
"""

from __future__ import annotations

import json
import math
import random
import shutil
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from bruteforce import annual_counts, load_corpus_docs, pearson

REPO = Path(__file__).resolve().parents[1]
OUT = REPO / "tests" / "data" / "planted"

SEED = 20150331
RHO = 0.9
YEARS = list(range(1981, 2011))

PAIRS = [("tax", "increase"), ("revenue", "increase"), ("tax", "relief"), ("tax", "repeal")]

# None of these words (or their stems) collide with the query keywords.
FILLER = [
    "committee", "session", "motion", "budget", "hearing", "measure", "debate",
    "senate", "house", "federal", "program", "policy", "report", "member",
    "national", "public", "state", "provide", "authorize", "certain",
    "purposes", "amend", "service", "fund", "law", "section", "code",
    "resolution", "government", "appropriation", "oversight", "agency",
    "office", "department", "education", "defense", "commerce", "energy",
    "labor", "health", "security", "transportation", "justice", "treasury",
    "veterans", "trade", "reform", "limit", "extend", "establish", "designate",
    "commission", "board", "administration", "district", "county", "highway",
]
CONNECTIVE = ["of", "the", "to", "for", "and", "on", "in", "a", "an"]


def words(rng, n):
    pool = FILLER + CONNECTIVE
    return [rng.choice(pool) for _ in range(n)]


def pair_text(rng, a, b, distance):
    """Token list containing a and b exactly distance positions apart."""
    first, second = (a, b) if rng.random() < 0.5 else (b, a)
    tokens = words(rng, rng.randrange(0, 7))
    tokens.append(first)
    tokens.extend(words(rng, distance - 1))
    tokens.append(second)
    tokens.extend(words(rng, rng.randrange(0, 9)))
    return " ".join(tokens)


def noise_text(rng):
    return " ".join(words(rng, rng.randrange(4, 14)))


def rand_date(rng, year):
    return f"{year:04d}-{rng.randrange(1, 13):02d}-{rng.randrange(1, 29):02d}"


class CorpusWriter:
    def __init__(self, root, rng):
        self.root = root
        self.rng = rng
        self.seq = 0

    def _congress(self, year):
        return (year - 1789) // 2 + 1

    def write(self, subdir, name, payload):
        path = self.root / subdir / f"{name}.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(payload, indent=2) + "\n")

    def add(self, year, text, kind=None):
        """Emit one single-date document whose only query-relevant text is `text`."""
        rng = self.rng
        self.seq += 1
        cong = self._congress(year)
        date = rand_date(rng, year)
        kind = kind or rng.choices(["bill", "amendment", "vote"], weights=[6, 2, 2])[0]
        if kind == "bill":
            payload = {
                "bill_id": f"hr{self.seq}-{cong}",
                "official_title": text,
                "actions": [{"acted_at": date}],
            }
            self.write("bills", payload["bill_id"], payload)
        elif kind == "amendment":
            payload = {
                "amendment_id": f"samdt{self.seq}-{cong}",
                "purpose": text,
                "actions": [{"acted_at": date}],
            }
            self.write("amendments", payload["amendment_id"], payload)
        else:
            payload = {
                "vote_id": f"h{self.seq}-{cong}.{year}",
                "question": text,
                "date": date,
            }
            self.write("votes", payload["vote_id"], payload)

    def add_cross_element(self, year, word_a, word_b):
        """Bill with word_a and word_b in different text elements: never a match."""
        rng = self.rng
        self.seq += 1
        cong = self._congress(year)
        payload = {
            "bill_id": f"hr{self.seq}-{cong}",
            "description": " ".join(words(rng, 3) + [word_a] + words(rng, 3)),
            "official_title": " ".join(words(rng, 2) + [word_b] + words(rng, 4)),
            "actions": [{"acted_at": rand_date(rng, year)}],
        }
        self.write("bills", payload["bill_id"], payload)

    def add_noise(self, year):
        rng = self.rng
        self.seq += 1
        cong = self._congress(year)
        if rng.random() < 0.3:
            payload = {
                "nomination": {"id": f"PN{self.seq}-{cong}"},
                "nominee": noise_text(rng),
                "organization": noise_text(rng),
                "actions": [{"acted_at": rand_date(rng, year)}],
            }
            self.write("nominations", f"PN{self.seq}-{cong}", payload)
        else:
            dates = [{"acted_at": rand_date(rng, year)}]
            if rng.random() < 0.4:
                dates.append({"acted_at": rand_date(rng, year)})
            payload = {
                "bill_id": f"s{self.seq}-{cong}",
                "official_title": noise_text(rng),
                "actions": dates,
            }
            self.write("bills", payload["bill_id"], payload)


def main():
    rng = random.Random(SEED)
    if OUT.exists():
        shutil.rmtree(OUT)
    corpus_root = OUT / "corpus"
    writer = CorpusWriter(corpus_root, rng)

    # Latent yearly signal drives the planted counts.
    z = [rng.gauss(0.0, 1.0) for _ in YEARS]
    planted5 = {}
    planted2 = {}
    for i, year in enumerate(YEARS):
        count = max(0, round(6.0 + 3.0 * z[i]))
        if year in (YEARS[0], YEARS[-1]):
            count = max(1, count)
        planted5[year] = count
        planted2[year] = 0
        for _ in range(count):
            distance = rng.randrange(1, 6)
            if distance <= 2:
                planted2[year] += 1
            writer.add(year, pair_text(rng, "tax", "increase", distance))

    # Decoys: the other keyword pairs, near misses, cross-element pairs, noise.
    decoy5 = {pair: {} for pair in PAIRS[1:]}
    decoy2 = {pair: {} for pair in PAIRS[1:]}
    for year in YEARS:
        for pair in PAIRS[1:]:
            n = rng.randrange(0, 6)
            decoy5[pair][year] = n
            decoy2[pair][year] = 0
            for _ in range(n):
                distance = rng.randrange(1, 6)
                if distance <= 2:
                    decoy2[pair][year] += 1
                writer.add(year, pair_text(rng, pair[0], pair[1], distance))
        for _ in range(rng.randrange(0, 3)):
            a, b = rng.choice(PAIRS)
            writer.add(year, pair_text(rng, a, b, rng.randrange(7, 12)))
        if rng.random() < 0.3:
            writer.add_cross_element(year, *rng.choice(PAIRS))
        for _ in range(rng.randrange(1, 4)):
            writer.add_noise(year)

    # Synthetic indicator: standardized planted counts mixed with fresh noise.
    counts = [float(planted5[y]) for y in YEARS]
    mean = sum(counts) / len(counts)
    sd = math.sqrt(sum((c - mean) ** 2 for c in counts) / len(counts))
    indicator = {}
    for i, year in enumerate(YEARS):
        shock = rng.gauss(0.0, 1.0)
        standardized = (counts[i] - mean) / sd
        indicator[year] = 100.0 + 15.0 * (RHO * standardized + math.sqrt(1 - RHO**2) * shock)

    ind_dir = OUT / "indicators"
    ind_dir.mkdir(parents=True)
    with open(ind_dir / "synthetic.csv", "w") as fh:
        fh.write("date,value\n")
        for year in YEARS:
            fh.write(f"{year}-01-01,{indicator[year]!r}\n")

    with open(OUT / "elections.csv", "w") as fh:
        fh.write("year,party\n")
        for year in YEARS:
            party = "D" if 1993 <= year <= 2000 or year >= 2009 else "R"
            fh.write(f"{year},{party}\n")

    # Brute-force verification: recount everything from the files on disk.
    docs = load_corpus_docs(corpus_root)
    expected = {}
    for a, b in PAIRS:
        for distance in (2, 5):
            found = annual_counts(docs, a, b, distance)
            series = {year: found.get(year, 0) for year in YEARS}
            assert not set(found) - set(YEARS), f"matches outside year range for {a}/{b}"
            assert len(set(series.values())) >= 2, f"flat series for {a}/{b}/{distance}"
            expected[f"{a}_{b}_{distance}"] = series

    assert expected["tax_increase_5"] == planted5, "within-5 counts drifted from plan"
    assert expected["tax_increase_2"] == planted2, "within-2 counts drifted from plan"
    for pair in PAIRS[1:]:
        key = f"{pair[0]}_{pair[1]}_5"
        assert expected[key] == decoy5[pair], f"{key} counts drifted from plan"

    xs = [float(expected["tax_increase_5"][y]) for y in YEARS]
    ys = [indicator[y] for y in YEARS]
    r5 = pearson(xs, ys)
    r2 = pearson([float(expected["tax_increase_2"][y]) for y in YEARS], ys)
    assert r5 >= 0.85, f"sample correlation too weak: {r5}"

    meta = {
        "generator": "tools/make_planted_fixture.py",
        "seed": SEED,
        "year_range": [YEARS[0], YEARS[-1]],
        "planted_pair": ["tax", "increase"],
        "planted_distance": 5,
        "indicator_name": "synthetic",
        "indicator_values": {str(y): indicator[y] for y in YEARS},
        "expected_r_tax_increase_5": r5,
        "expected_r_tax_increase_2": r2,
        "expected_annual_counts": {
            key: {str(y): series[y] for y in YEARS} for key, series in sorted(expected.items())
        },
    }
    (OUT / "meta.json").write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")

    n_files = sum(1 for _ in corpus_root.rglob("*.json"))
    print(f"planted fixture: {n_files} docs, r(within-5)={r5:.4f}, r(within-2)={r2:.4f}")


if __name__ == "__main__":
    main()
