"""Ingestion: classification, extraction, tolerance, and the ndjson form."""

import io
import json
from datetime import date

import pytest

from crmine import Doc, ingest_tree, read_ndjson, write_ndjson
from crmine.errors import MalformedDate
from crmine.ingest import parse_date, report_payload


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload) if not isinstance(payload, str) else payload)
    return path


def ingest_one(tmp_path, payload, name="doc.json"):
    write(tmp_path, name, payload)
    result = ingest_tree(tmp_path)
    assert result.files_seen == len(list(tmp_path.rglob("*.json")))
    return result


class TestClassification:
    def test_amendment_takes_precedence(self, tmp_path):
        result = ingest_one(tmp_path, {
            "amendment_id": "samdt1-100",
            "bill_id": "hr1-100",
            "vote_id": "h1-100.1987",
            "purpose": "text",
            "actions": [{"acted_at": "1987-01-01"}],
        })
        assert result.docs[0].kind == "amendment"
        assert result.docs[0].id == "samdt1-100"

    def test_bill_before_vote(self, tmp_path):
        result = ingest_one(tmp_path, {
            "bill_id": "hr2-100",
            "vote_id": "h2-100.1987",
            "official_title": "text",
            "actions": [{"acted_at": "1987-01-01"}],
        })
        assert result.docs[0].kind == "bill"

    def test_nomination_object_either_capitalization(self, tmp_path):
        for key in ("nomination", "Nomination"):
            result = ingest_one(tmp_path, {
                key: {"id": "PN1-100"},
                "nominee": "jane doe",
                "actions": [{"acted_at": "1987-01-01"}],
            }, name=f"{key}.json")
            assert result.docs[0].kind == "nomination"
            assert result.docs[0].id == "PN1-100"

    def test_nomination_must_be_an_object(self, tmp_path):
        result = ingest_one(tmp_path, {"nomination": "PN1-100"})
        assert not result.docs
        assert result.rejects[0].code == "UnrecognizedSchema"

    def test_unrecognized_schema(self, tmp_path):
        result = ingest_one(tmp_path, {"committee_id": "HSAG"})
        assert result.rejects[0].code == "UnrecognizedSchema"


class TestExtraction:
    def test_bill_texts_in_field_order(self, tmp_path):
        result = ingest_one(tmp_path, {
            "bill_id": "hr3-100",
            "official_title": "second",
            "description": "first",
            "actions": [{"acted_at": "1987-01-01"}],
        })
        assert result.docs[0].texts == ("first", "second")

    def test_amendment_purpose_only(self, tmp_path):
        result = ingest_one(tmp_path, {
            "amendment_id": "samdt2-100",
            "purpose": "only purpose",
            "actions": [{"acted_at": "1987-01-01"}],
        })
        assert result.docs[0].texts == ("only purpose",)

    def test_empty_text_fields_skipped(self, tmp_path):
        result = ingest_one(tmp_path, {
            "amendment_id": "samdt3-100",
            "description": "",
            "purpose": "kept",
            "actions": [{"acted_at": "1987-01-01"}],
        })
        assert result.docs[0].texts == ("kept",)

    def test_vote_question_and_single_date(self, tmp_path):
        result = ingest_one(tmp_path, {
            "vote_id": "h3-100.1987",
            "question": "On passage",
            "date": "1987-06-05",
        })
        doc = result.docs[0]
        assert doc.texts == ("On passage",)
        assert doc.dates == (date(1987, 6, 5),)

    def test_nominee_capitalized_variants(self, tmp_path):
        result = ingest_one(tmp_path, {
            "nomination": {"number": 9},
            "Nominee": "jane doe",
            "Organization": "department of justice",
            "actions": [{"acted_at": "1987-01-01"}],
        })
        doc = result.docs[0]
        assert doc.id == "9"
        assert doc.texts == ("jane doe", "department of justice")

    def test_nomination_id_falls_back_to_file_stem(self, tmp_path):
        result = ingest_one(tmp_path, {
            "nomination": {"congress": 100},
            "nominee": "jane doe",
            "actions": [{"acted_at": "1987-01-01"}],
        }, name="pn77.json")
        assert result.docs[0].id == "pn77"

    def test_dates_keep_source_order_and_duplicates(self, tmp_path):
        result = ingest_one(tmp_path, {
            "bill_id": "hr4-100",
            "official_title": "text",
            "actions": [
                {"acted_at": "1988-05-05"},
                {"acted_at": "1987-01-01"},
                {"acted_at": "1988-05-05"},
            ],
        })
        assert result.docs[0].dates == (
            date(1988, 5, 5), date(1987, 1, 1), date(1988, 5, 5),
        )

    def test_missing_id_rejected(self, tmp_path):
        result = ingest_one(tmp_path, {"bill_id": "", "official_title": "x"})
        assert result.rejects[0].code == "MissingId"

    def test_no_dates_rejected(self, tmp_path):
        result = ingest_one(tmp_path, {
            "bill_id": "hr5-100", "official_title": "x", "actions": [],
        })
        assert result.rejects[0].code == "NoDates"


class TestDates:
    def test_plain_iso(self):
        assert parse_date("1999-03-01", "src") == date(1999, 3, 1)

    def test_rfc3339_with_offset(self):
        assert parse_date("1995-02-01T15:04:05-05:00", "src") == date(1995, 2, 1)

    def test_rfc3339_zulu(self):
        assert parse_date("1995-02-01T15:04:05Z", "src") == date(1995, 2, 1)

    @pytest.mark.parametrize("raw", ["May 14, 1991", "1999-13-01", "", None, 42])
    def test_malformed(self, raw):
        with pytest.raises(MalformedDate):
            parse_date(raw, "src")


class TestTree:
    def test_hostile_tree_total(self, hostile_dir):
        result = ingest_tree(hostile_dir)
        assert result.files_seen == 10
        assert len(result.docs) == 2
        assert len(result.rejects) == 8
        reasons = {r.path.rsplit("/", 1)[-1]: r.code for r in result.rejects}
        assert reasons == {
            "bad_date.json": "MalformedDate",
            "empty.json": "ParseError",
            "missing_id.json": "MissingId",
            "no_dates.json": "NoDates",
            "not_json.json": "ParseError",
            "truncated.json": "ParseError",
            "unknown_schema.json": "UnrecognizedSchema",
            "ok_bill.json": "DuplicateId",
        }

    def test_duplicate_id_last_wins(self, hostile_dir):
        result = ingest_tree(hostile_dir)
        bill = next(doc for doc in result.docs if doc.id == "hr1-104")
        assert bill.texts == ("Corrected reprint of the tax relief bill.",)

    def test_empty_directory(self, tmp_path):
        result = ingest_tree(tmp_path)
        assert result.files_seen == 0
        assert not result.docs and not result.rejects

    def test_deterministic(self, hostile_dir):
        first = ingest_tree(hostile_dir)
        second = ingest_tree(hostile_dir)
        assert first.docs == second.docs
        assert first.rejects == second.rejects

    def test_report_payload_accounts_for_every_file(self, hostile_dir):
        payload = report_payload(ingest_tree(hostile_dir))
        assert payload["files_seen"] == payload["docs_emitted"] + len(payload["rejects"])

    def test_demo_corpus_clean(self, demo_result):
        assert demo_result.files_seen == len(demo_result.docs)
        assert not demo_result.rejects


class TestNdjson:
    def test_round_trip(self, demo_result):
        buffer = io.StringIO()
        write_ndjson(demo_result.docs, buffer)
        buffer.seek(0)
        assert read_ndjson(buffer) == demo_result.docs

    def test_line_shape(self):
        doc = Doc("hr1-106", "bill", ("A bill to repeal the tax",),
                  (date(1999, 3, 1), date(1999, 7, 4)))
        buffer = io.StringIO()
        write_ndjson([doc], buffer)
        assert buffer.getvalue() == (
            '{"id":"hr1-106","kind":"bill",'
            '"texts":["A bill to repeal the tax"],'
            '"dates":["1999-03-01","1999-07-04"]}\n'
        )
