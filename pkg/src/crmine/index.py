"""Positional inverted index and its snapshot file format.

The index is built by adding documents one at a time, then committed.
Before commit, postings are held per document so re-adding an id simply
replaces the earlier content (last one wins, matching ingest). Commit
merges everything into a term dictionary and freezes the index; only a
committed index may be queried or snapshotted.

Snapshots are a small binary format, magic ``CRMX`` version 1:

    magic[4] version[u8] doc_count[u32]
    section(doc table)   = length[u64] payload crc32[u32]
    section(term dict)   = length[u64] payload crc32[u32]

All integers are little-endian. Dates are stored as proleptic Gregorian
ordinals, terms sorted bytewise, postings sorted by document then element,
so a given index always serializes to the same bytes. Anything structurally
off (bad magic, unknown version, truncation, checksum mismatch, trailing
bytes) raises CorruptSnapshot.
"""

from __future__ import annotations

import struct
import zlib
from datetime import date
from pathlib import Path
from typing import Iterable

from .analysis import analyze
from .errors import CommittedIndex, CorruptSnapshot, UncommittedIndex
from .ingest import Doc

MAGIC = b"CRMX"
VERSION = 1

# element index -> sorted positions, for one term in one doc
ElementPositions = dict[int, list[int]]


class PositionalIndex:
    """In-memory positional index over normalized documents."""

    def __init__(self):
        self.docs: list[Doc] = []
        self.committed = False
        self._ordinals: dict[str, int] = {}
        self._doc_terms: list[dict[str, ElementPositions]] = []
        self.postings: dict[str, dict[int, ElementPositions]] = {}

    def add_doc(self, doc: Doc) -> None:
        if self.committed:
            raise CommittedIndex("index is committed; no further documents accepted")
        terms: dict[str, ElementPositions] = {}
        for elem_idx, text in enumerate(doc.texts):
            for term, position in analyze(text):
                terms.setdefault(term, {}).setdefault(elem_idx, []).append(position)
        ordinal = self._ordinals.get(doc.id)
        if ordinal is None:
            self._ordinals[doc.id] = len(self.docs)
            self.docs.append(doc)
            self._doc_terms.append(terms)
        else:
            self.docs[ordinal] = doc
            self._doc_terms[ordinal] = terms

    def commit(self) -> "PositionalIndex":
        if self.committed:
            return self
        merged: dict[str, dict[int, ElementPositions]] = {}
        for ordinal, terms in enumerate(self._doc_terms):
            for term, by_elem in terms.items():
                merged.setdefault(term, {})[ordinal] = by_elem
        self.postings = merged
        self._doc_terms = []
        self.committed = True
        return self

    def require_committed(self) -> None:
        if not self.committed:
            raise UncommittedIndex("operation requires a committed index")

    def stats(self) -> dict[str, int]:
        self.require_committed()
        n_positions = sum(
            len(positions)
            for by_doc in self.postings.values()
            for by_elem in by_doc.values()
            for positions in by_elem.values()
        )
        return {
            "docs": len(self.docs),
            "terms": len(self.postings),
            "positions": n_positions,
        }


def build_index(docs: Iterable[Doc]) -> PositionalIndex:
    index = PositionalIndex()
    for doc in docs:
        index.add_doc(doc)
    return index.commit()


def _pack_docs(docs: list[Doc]) -> bytes:
    parts = []
    for doc in docs:
        id_bytes = doc.id.encode("utf-8")
        kind_bytes = doc.kind.encode("utf-8")
        parts.append(struct.pack("<H", len(id_bytes)))
        parts.append(id_bytes)
        parts.append(struct.pack("<B", len(kind_bytes)))
        parts.append(kind_bytes)
        parts.append(struct.pack("<H", len(doc.dates)))
        for d in doc.dates:
            parts.append(struct.pack("<I", d.toordinal()))
    return b"".join(parts)


def _pack_terms(postings: dict[str, dict[int, ElementPositions]]) -> bytes:
    parts = [struct.pack("<I", len(postings))]
    for term in sorted(postings):
        term_bytes = term.encode("utf-8")
        by_doc = postings[term]
        flat = [
            (doc_idx, elem_idx, positions)
            for doc_idx in sorted(by_doc)
            for elem_idx, positions in sorted(by_doc[doc_idx].items())
        ]
        parts.append(struct.pack("<H", len(term_bytes)))
        parts.append(term_bytes)
        parts.append(struct.pack("<I", len(flat)))
        for doc_idx, elem_idx, positions in flat:
            parts.append(struct.pack("<IHI", doc_idx, elem_idx, len(positions)))
            parts.append(struct.pack(f"<{len(positions)}I", *sorted(positions)))
    return b"".join(parts)


def save_snapshot(index: PositionalIndex, path: Path) -> None:
    index.require_committed()
    doc_payload = _pack_docs(index.docs)
    term_payload = _pack_terms(index.postings)
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<BI", VERSION, len(index.docs)))
        for payload in (doc_payload, term_payload):
            fh.write(struct.pack("<Q", len(payload)))
            fh.write(payload)
            fh.write(struct.pack("<I", zlib.crc32(payload)))


class _Reader:
    """Cursor over a bytes payload that refuses to run past the end."""

    def __init__(self, data: bytes, label: str):
        self.data = data
        self.label = label
        self.offset = 0

    def take(self, n: int) -> bytes:
        if self.offset + n > len(self.data):
            raise CorruptSnapshot(f"truncated {self.label} section")
        chunk = self.data[self.offset : self.offset + n]
        self.offset += n
        return chunk

    def unpack(self, fmt: str):
        return struct.unpack(fmt, self.take(struct.calcsize(fmt)))

    def done(self) -> None:
        if self.offset != len(self.data):
            raise CorruptSnapshot(f"trailing bytes in {self.label} section")


def _read_section(blob: bytes, offset: int, label: str) -> tuple[bytes, int]:
    if offset + 8 > len(blob):
        raise CorruptSnapshot(f"missing {label} section header")
    (length,) = struct.unpack_from("<Q", blob, offset)
    offset += 8
    if offset + length + 4 > len(blob):
        raise CorruptSnapshot(f"truncated {label} section")
    payload = blob[offset : offset + length]
    offset += length
    (crc,) = struct.unpack_from("<I", blob, offset)
    offset += 4
    if zlib.crc32(payload) != crc:
        raise CorruptSnapshot(f"checksum mismatch in {label} section")
    return payload, offset


def load_snapshot(path: Path) -> PositionalIndex:
    """Restore a committed index; documents come back without raw texts."""
    blob = Path(path).read_bytes()
    if len(blob) < 9:
        raise CorruptSnapshot("file too short for header")
    if blob[:4] != MAGIC:
        raise CorruptSnapshot("bad magic")
    version, doc_count = struct.unpack_from("<BI", blob, 4)
    if version != VERSION:
        raise CorruptSnapshot(f"unsupported version {version}")
    doc_payload, offset = _read_section(blob, 9, "doc table")
    term_payload, offset = _read_section(blob, offset, "term dict")
    if offset != len(blob):
        raise CorruptSnapshot("trailing bytes after last section")

    reader = _Reader(doc_payload, "doc table")
    docs = []
    for _ in range(doc_count):
        (id_len,) = reader.unpack("<H")
        doc_id = reader.take(id_len).decode("utf-8")
        (kind_len,) = reader.unpack("<B")
        kind = reader.take(kind_len).decode("utf-8")
        (n_dates,) = reader.unpack("<H")
        ordinals = reader.unpack(f"<{n_dates}I")
        docs.append(Doc(doc_id, kind, (), tuple(date.fromordinal(o) for o in ordinals)))
    reader.done()

    reader = _Reader(term_payload, "term dict")
    (n_terms,) = reader.unpack("<I")
    postings: dict[str, dict[int, ElementPositions]] = {}
    for _ in range(n_terms):
        (term_len,) = reader.unpack("<H")
        term = reader.take(term_len).decode("utf-8")
        (n_flat,) = reader.unpack("<I")
        by_doc: dict[int, ElementPositions] = {}
        for _ in range(n_flat):
            doc_idx, elem_idx, n_positions = reader.unpack("<IHI")
            if doc_idx >= doc_count:
                raise CorruptSnapshot(f"posting references document {doc_idx}")
            positions = list(reader.unpack(f"<{n_positions}I"))
            by_doc.setdefault(doc_idx, {})[elem_idx] = positions
        postings[term] = by_doc
    reader.done()

    index = PositionalIndex()
    index.docs = docs
    index._ordinals = {doc.id: i for i, doc in enumerate(docs)}
    index.postings = postings
    index.committed = True
    return index
