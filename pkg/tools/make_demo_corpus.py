#!/usr/bin/env python3
"""Generate the demo fixture: corpus tree, indicator CSVs, elections table.

A desk-scale stand-in for the real GovTrack data: ~500 JSON action files
spanning 1950-2014 in which all four default keyword pairs appear with
year-to-year variation, plus six synthetic indicator series whose
resolutions and spans mimic the real ones. Expected per-query annual counts
are recomputed from the written files with the brute-force scanner and
frozen into meta.json.

Run from the repository root:

    python3 tools/make_demo_corpus.py
"""

from __future__ import annotations

import json
import math
import random
import shutil
import sys
from datetime import date, timedelta
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from bruteforce import annual_counts, load_corpus_docs

REPO = Path(__file__).resolve().parents[1]
OUT = REPO / "tests" / "data" / "demo"

SEED = 1789
YEARS = list(range(1950, 2015))

PAIRS = [("tax", "increase"), ("revenue", "increase"), ("tax", "relief"), ("tax", "repeal")]

# Annual windows each indicator will cover after aggregation; the per-query
# count series must vary inside every one of them.
INDICATOR_WINDOWS = {
    "gdp_growth": (1961, 2013),
    "median_household_income": (1984, 2013),
    "unemployment_rate": (1950, 2014),
    "housing_starts": (1950, 2014),
    "sp500": (1951, 2014),
    "federal_funds_rate": (1954, 2014),
}

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

NOMINEES = [
    "john walker", "mary stone", "harold webb", "alice monroe", "frank ellis",
    "ruth calder", "peter vance", "edith marsh", "carl draper", "nora quinn",
]
ORGANIZATIONS = [
    "department of commerce", "department of justice", "federal trade commission",
    "department of labor", "office of management", "department of energy",
]


def words(rng, n):
    pool = FILLER + CONNECTIVE
    return [rng.choice(pool) for _ in range(n)]


def pair_text(rng, a, b, distance):
    first, second = (a, b) if rng.random() < 0.5 else (b, a)
    tokens = words(rng, rng.randrange(0, 7))
    tokens.append(first)
    tokens.extend(words(rng, distance - 1))
    tokens.append(second)
    tokens.extend(words(rng, rng.randrange(0, 9)))
    text = " ".join(tokens)
    return text.capitalize() if rng.random() < 0.5 else text


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

    def _action_dates(self, year):
        """One action date, sometimes several (possibly in nearby years)."""
        rng = self.rng
        dates = [rand_date(rng, year)]
        roll = rng.random()
        if roll < 0.1:
            dates.append(dates[0])  # same date twice: must collapse to one count
        elif roll < 0.3:
            dates.append(rand_date(rng, min(YEARS[-1], year + rng.randrange(0, 3))))
        return [{"acted_at": d} for d in dates]

    def add(self, year, text):
        rng = self.rng
        self.seq += 1
        cong = self._congress(year)
        kind = rng.choices(["bill", "bill_desc", "amendment", "vote", "nomination"],
                           weights=[4, 1, 2, 2, 1])[0]
        if kind == "bill":
            payload = {
                "bill_id": f"hr{self.seq}-{cong}",
                "official_title": text,
                "actions": self._action_dates(year),
            }
            self.write("bills", payload["bill_id"], payload)
        elif kind == "bill_desc":
            payload = {
                "bill_id": f"s{self.seq}-{cong}",
                "description": text,
                "official_title": noise_text(rng),
                "actions": self._action_dates(year),
            }
            self.write("bills", payload["bill_id"], payload)
        elif kind == "amendment":
            payload = {
                "amendment_id": f"samdt{self.seq}-{cong}",
                "purpose": text,
                "actions": self._action_dates(year),
            }
            if rng.random() < 0.2:
                payload["description"] = ""  # empty text fields are skipped
            self.write("amendments", payload["amendment_id"], payload)
        elif kind == "vote":
            d = rand_date(rng, year)
            if rng.random() < 0.4:
                d = f"{d}T{rng.randrange(9, 18):02d}:{rng.randrange(0, 60):02d}:00-05:00"
            payload = {
                "vote_id": f"h{self.seq}-{cong}.{year}",
                "question": text,
                "date": d,
            }
            self.write("votes", payload["vote_id"], payload)
        else:
            self.add_nomination(year, org=text)

    def add_nomination(self, year, org=None):
        rng = self.rng
        self.seq += 1
        cong = self._congress(year)
        nominee = rng.choice(NOMINEES)
        org = org or rng.choice(ORGANIZATIONS)
        payload = {}
        style = rng.randrange(3)
        if style == 0:
            payload["nomination"] = {"id": f"PN{self.seq}-{cong}"}
            name = f"PN{self.seq}-{cong}"
        elif style == 1:
            payload["Nomination"] = {"number": self.seq}
            name = f"nom{self.seq}"
        else:
            payload["nomination"] = {"congress": cong}  # id falls back to file stem
            name = f"nom{self.seq}"
        if rng.random() < 0.5:
            payload["nominee"] = nominee
            payload["organization"] = org
        else:
            payload["Nominee"] = nominee
            payload["Organization"] = org
        payload["actions"] = [{"acted_at": rand_date(rng, year)}]
        self.write("nominations", name, payload)

    def add_noise(self, year):
        rng = self.rng
        if rng.random() < 0.25:
            self.add_nomination(year)
            return
        self.seq += 1
        cong = self._congress(year)
        payload = {
            "bill_id": f"sres{self.seq}-{cong}",
            "official_title": noise_text(rng),
            "actions": self._action_dates(year),
        }
        self.write("bills", payload["bill_id"], payload)


def pair_target(pair_index, year, rng):
    base, amp, period, phase = [
        (1.6, 1.2, 21.0, 1950),
        (1.2, 1.0, 17.0, 1958),
        (1.1, 1.0, 26.0, 1965),
        (1.0, 0.9, 13.0, 1972),
    ][pair_index]
    value = base + amp * math.sin(2 * math.pi * (year - phase) / period) + rng.gauss(0, 0.8)
    return max(0, round(value))


def write_indicators(rng):
    ind = OUT / "indicators"
    ind.mkdir(parents=True)

    def emit(name, rows):
        with open(ind / f"{name}.csv", "w") as fh:
            fh.write("date,value\n")
            for d, v in rows:
                fh.write(f"{d},{v}\n")

    emit("gdp_growth", [
        (f"{y}-12-31", f"{3.1 + 2.2 * math.sin(0.43 * (y - 1961)) + rng.gauss(0, 1.1):.2f}")
        for y in range(1961, 2014)
    ])
    emit("median_household_income", [
        (f"{y}-01-01", f"{22000 + 1000 * (y - 1984) + rng.gauss(0, 700):.0f}")
        for y in range(1984, 2014)
    ])
    rows = []
    for y in range(1948, 2015):
        for m in range(1, 13):
            v = 5.6 + 2.4 * math.sin(2 * math.pi * (12 * (y - 1948) + m) / 96.0) + rng.gauss(0, 0.3)
            rows.append((f"{y}-{m:02d}-01", f"{min(11.0, max(2.5, v)):.1f}"))
    emit("unemployment_rate", rows)
    rows = []
    for y in range(1919, 2015):
        for m in range(1, 13):
            v = (120 + 55 * math.sin(2 * math.pi * (y - 1919) / 35.0)
                 + 22 * math.sin(2 * math.pi * m / 12.0) + rng.gauss(0, 11))
            rows.append((f"{y}-{m:02d}-01", f"{max(8.0, v):.1f}"))
    emit("housing_starts", rows)
    rows = []
    d = date(1950, 1, 3)
    close = 16.66
    while d <= date(2014, 12, 31):
        close *= math.exp(rng.gauss(0.00035, 0.011))
        rows.append((d.isoformat(), f"{close:.2f}"))
        d += timedelta(days=rng.randrange(2, 4))
    emit("sp500", rows)
    rows = []
    d = date(1954, 7, 1)
    while d <= date(2014, 12, 31):
        v = 4.6 + 3.4 * math.sin(2 * math.pi * (d.year - 1954) / 22.0) + rng.gauss(0, 0.22)
        rows.append((d.isoformat(), f"{min(19.0, max(0.25, v)):.2f}"))
        d += timedelta(days=7)
    emit("federal_funds_rate", rows)


def write_elections():
    # Presidency-in-power by year, inaugural-year convention.
    regimes = [
        (1949, "D"), (1953, "R"), (1961, "D"), (1969, "R"), (1977, "D"),
        (1981, "R"), (1993, "D"), (2001, "R"), (2009, "D"),
    ]
    with open(OUT / "elections.csv", "w") as fh:
        fh.write("year,party\n")
        for year in range(1949, 2015):
            party = next(p for start, p in reversed(regimes) if year >= start)
            fh.write(f"{year},{party}\n")


def main():
    rng = random.Random(SEED)
    if OUT.exists():
        shutil.rmtree(OUT)
    corpus_root = OUT / "corpus"
    writer = CorpusWriter(corpus_root, rng)

    for year in YEARS:
        for i, (a, b) in enumerate(PAIRS):
            n = pair_target(i, year, rng)
            if (a, b) == ("tax", "increase") and year in (YEARS[0], YEARS[-1]):
                n = max(1, n)
            for _ in range(n):
                writer.add(year, pair_text(rng, a, b, rng.randrange(1, 6)))
        if rng.random() < 0.5:
            a, b = rng.choice(PAIRS)
            writer.add(year, pair_text(rng, a, b, rng.randrange(7, 12)))
        for _ in range(rng.randrange(1, 4)):
            writer.add_noise(year)

    write_indicators(rng)
    write_elections()

    # Recount everything from disk and check variance inside every window.
    docs = load_corpus_docs(corpus_root)
    ids = [doc_id for doc_id, _, _ in docs]
    assert len(ids) == len(set(ids)), "duplicate doc ids in demo corpus"
    expected = {}
    for a, b in PAIRS:
        for distance in (2, 5):
            found = annual_counts(docs, a, b, distance)
            series = {year: found.get(year, 0) for year in YEARS}
            for name, (lo, hi) in INDICATOR_WINDOWS.items():
                window = [series[y] for y in YEARS if lo <= y <= hi]
                assert len(set(window)) >= 2, f"flat {a}/{b}/{distance} in {name} window"
            expected[f"{a}_{b}_{distance}"] = series
    assert expected["tax_increase_5"][YEARS[0]] >= 1
    assert expected["tax_increase_5"][YEARS[-1]] >= 1

    meta = {
        "generator": "tools/make_demo_corpus.py",
        "seed": SEED,
        "year_range": [YEARS[0], YEARS[-1]],
        "expected_annual_counts": {
            key: {str(y): series[y] for y in YEARS} for key, series in sorted(expected.items())
        },
    }
    (OUT / "meta.json").write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")

    n_files = sum(1 for _ in corpus_root.rglob("*.json"))
    print(f"demo fixture: {n_files} docs")


if __name__ == "__main__":
    main()
