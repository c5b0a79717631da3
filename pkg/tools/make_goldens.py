"""Regenerate the committed golden report tree from the demo fixtures.

Runs the real CLI pipeline (ingest -> index -> report) over tests/data/demo
and captures the full output tree. Tests compare fresh runs against these
bytes, so regenerate only when an intentional output-format change lands.
"""

from __future__ import annotations

import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DEMO = ROOT / "tests" / "data" / "demo"
GOLDEN = ROOT / "tests" / "data" / "goldens" / "report"


def run(*args):
    subprocess.run([sys.executable, "-m", "crmine", *args], check=True, cwd=ROOT)


def main():
    work = Path(tempfile.mkdtemp(prefix="goldens-"))
    corpus = work / "corpus.ndjson"
    snapshot = work / "index.bin"
    run("ingest", "--root", str(DEMO / "corpus"), "--out", str(corpus))
    run("index", "--corpus", str(corpus), "--out", str(snapshot))
    if GOLDEN.exists():
        shutil.rmtree(GOLDEN)
    run(
        "report",
        "--index", str(snapshot),
        "--indicators-dir", str(DEMO / "indicators"),
        "--elections", str(DEMO / "elections.csv"),
        "--outdir", str(GOLDEN),
    )
    shutil.rmtree(work)
    n_files = sum(1 for p in GOLDEN.rglob("*") if p.is_file())
    print(f"golden report tree: {n_files} files under {GOLDEN}")


if __name__ == "__main__":
    main()
