"""Index lifecycle, snapshot round-trips, and corruption handling."""

from datetime import date

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crmine import (
    Doc,
    PositionalIndex,
    build_index,
    load_snapshot,
    run_query_suite,
    save_snapshot,
)
from crmine.errors import CommittedIndex, CorruptSnapshot, UncommittedIndex


def make_doc(doc_id="hr1-100", text="the tax increase passed"):
    return Doc(doc_id, "bill", (text,), (date(1987, 6, 5),))


class TestLifecycle:
    def test_add_after_commit_rejected(self):
        index = build_index([make_doc()])
        with pytest.raises(CommittedIndex):
            index.add_doc(make_doc("hr2-100"))

    def test_query_before_commit_rejected(self):
        index = PositionalIndex()
        index.add_doc(make_doc())
        with pytest.raises(UncommittedIndex):
            index.require_committed()
        with pytest.raises(UncommittedIndex):
            index.stats()

    def test_snapshot_before_commit_rejected(self, tmp_path):
        index = PositionalIndex()
        index.add_doc(make_doc())
        with pytest.raises(UncommittedIndex):
            save_snapshot(index, tmp_path / "x.bin")

    def test_commit_idempotent(self):
        index = PositionalIndex()
        index.add_doc(make_doc())
        index.commit()
        stats = index.stats()
        assert index.commit() is index
        assert index.stats() == stats

    def test_readd_replaces_in_place(self):
        index = PositionalIndex()
        index.add_doc(make_doc("a", "tax increase"))
        index.add_doc(make_doc("b", "revenue increase"))
        index.add_doc(make_doc("a", "tax relief"))
        index.commit()
        assert [doc.id for doc in index.docs] == ["a", "b"]
        assert index.docs[0].texts == ("tax relief",)
        assert "increas" in index.postings
        assert 0 not in index.postings["increas"]
        assert 0 in index.postings["relief"]

    def test_stats_counts_positions(self):
        index = build_index([make_doc(text="tax tax tax increase")])
        stats = index.stats()
        assert stats == {"docs": 1, "terms": 2, "positions": 4}


class TestSnapshot:
    def test_round_trip_preserves_suite_results(self, demo_index, demo_snapshot):
        restored = load_snapshot(demo_snapshot)
        assert run_query_suite(restored) == run_query_suite(demo_index)

    def test_round_trip_drops_texts(self, demo_snapshot):
        restored = load_snapshot(demo_snapshot)
        assert all(doc.texts == () for doc in restored.docs)

    def test_round_trip_keeps_ids_kinds_dates(self, demo_index, demo_snapshot):
        restored = load_snapshot(demo_snapshot)
        assert [(d.id, d.kind, d.dates) for d in restored.docs] == [
            (d.id, d.kind, d.dates) for d in demo_index.docs
        ]

    def test_round_trip_preserves_postings(self, demo_index, demo_snapshot):
        assert load_snapshot(demo_snapshot).postings == demo_index.postings

    def test_bytes_deterministic(self, demo_index, demo_snapshot, tmp_path):
        again = tmp_path / "again.bin"
        save_snapshot(demo_index, again)
        assert again.read_bytes() == demo_snapshot.read_bytes()

    def test_rebuild_matches_incremental(self, demo_result, demo_snapshot, tmp_path):
        index = PositionalIndex()
        for doc in demo_result.docs:
            index.add_doc(doc)
        index.commit()
        rebuilt = tmp_path / "rebuilt.bin"
        save_snapshot(index, rebuilt)
        assert rebuilt.read_bytes() == demo_snapshot.read_bytes()

    def test_empty_index_round_trip(self, tmp_path):
        path = tmp_path / "empty.bin"
        save_snapshot(build_index([]), path)
        restored = load_snapshot(path)
        assert restored.docs == []
        assert restored.postings == {}
        assert restored.stats() == {"docs": 0, "terms": 0, "positions": 0}


class TestCorruption:
    @pytest.fixture
    def blob(self, demo_snapshot):
        return demo_snapshot.read_bytes()

    def reload(self, tmp_path, data):
        path = tmp_path / "bad.bin"
        path.write_bytes(data)
        with pytest.raises(CorruptSnapshot):
            load_snapshot(path)

    def test_bad_magic(self, blob, tmp_path):
        self.reload(tmp_path, b"XRMX" + blob[4:])

    def test_bad_version(self, blob, tmp_path):
        self.reload(tmp_path, blob[:4] + bytes([99]) + blob[5:])

    @pytest.mark.parametrize("keep", [0, 3, 8, 12, 40])
    def test_truncated_header_or_section(self, blob, tmp_path, keep):
        self.reload(tmp_path, blob[:keep])

    def test_truncated_tail(self, blob, tmp_path):
        self.reload(tmp_path, blob[:-1])

    def test_payload_bit_flip_fails_checksum(self, blob, tmp_path):
        mid = len(blob) // 2
        self.reload(tmp_path, blob[:mid] + bytes([blob[mid] ^ 0xFF]) + blob[mid + 1 :])

    def test_trailing_garbage(self, blob, tmp_path):
        self.reload(tmp_path, blob + b"\x00")

    def test_posting_beyond_doc_table(self, tmp_path):
        index = build_index([make_doc()])
        index.postings["tax"][7] = {0: [0]}
        path = tmp_path / "dangling.bin"
        save_snapshot(index, path)
        with pytest.raises(CorruptSnapshot):
            load_snapshot(path)


ids = st.text(alphabet="abcdefgh0123456789-", min_size=1, max_size=12)
texts = st.lists(
    st.text(alphabet="tax increse relifpo ", max_size=40), min_size=0, max_size=3
)
dates = st.lists(
    st.dates(min_value=date(1900, 1, 1), max_value=date(2100, 1, 1)),
    min_size=1,
    max_size=4,
)
docs = st.builds(
    Doc, ids, st.sampled_from(["bill", "amendment", "vote", "nomination"]),
    texts.map(tuple), dates.map(tuple),
)


@settings(max_examples=50, deadline=None)
@given(st.lists(docs, max_size=12))
def test_snapshot_round_trip_any_docs(tmp_path_factory, docs):
    seen = {}
    for doc in docs:
        seen[doc.id] = doc
    index = build_index(docs)
    assert [d.id for d in index.docs] == list(seen)
    path = tmp_path_factory.mktemp("hyp") / "snap.bin"
    save_snapshot(index, path)
    restored = load_snapshot(path)
    assert restored.postings == index.postings
    assert [(d.id, d.kind, d.dates) for d in restored.docs] == [
        (d.id, d.kind, d.dates) for d in index.docs
    ]
