import json

import pytest

from hetconv.benchmark import (
    BenchmarkFormatError,
    conversations_to_json,
    load_convmix,
    split_convmix,
)
from hetconv.corpus import Literal


def test_fixture_has_20_conversations_all_domains(benchmark):
    assert len(benchmark) == 20
    assert {c.domain for c in benchmark} == {"Books", "Movies", "Music", "TV series", "Soccer"}
    assert all(len(c.turns) == 5 for c in benchmark)


def test_wikidata_url_reduced_to_bare_id(tmp_path):
    payload = [
        {
            "conv_id": "c1",
            "domain": "Movies",
            "turns": [
                {
                    "question": "Who directed it?",
                    "answers": [
                        {"label": "X", "wikidata_url": "https://www.wikidata.org/wiki/Q123"}
                    ],
                }
            ],
        }
    ]
    path = tmp_path / "bench.json"
    path.write_text(json.dumps(payload), "utf-8")
    convs = load_convmix(path)
    assert convs[0].turns[0].gold_answers[0].kb_id == "Q123"


def test_plain_literal_answer_gets_normalized_kb_id(benchmark):
    got = next(c for c in benchmark if c.conv_id == "tv-got")
    date_gold = got.turns[2].gold_answers[0]
    assert date_gold.kb_id == Literal("date", "1969-06-11", "11 June 1969")
    string_gold = got.turns[4].gold_answers[0]
    assert string_gold.kb_id is None  # "50–82 minutes" stays a plain label


def test_unknown_domain_rejected(tmp_path):
    payload = [{"conv_id": "c", "domain": "Cooking", "turns": []}]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(payload), "utf-8")
    with pytest.raises(BenchmarkFormatError, match="Cooking"):
        load_convmix(path)


def test_turn_without_answers_rejected(tmp_path):
    payload = [{"conv_id": "c", "domain": "Movies",
                "turns": [{"question": "Who?", "answers": []}]}]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(payload), "utf-8")
    with pytest.raises(BenchmarkFormatError, match="turn 0"):
        load_convmix(path)


def test_split_sizes_10_conversations(benchmark):
    split = split_convmix(benchmark[:10], seed=7)
    assert (len(split.train), len(split.dev), len(split.test)) == (6, 2, 2)


def test_split_sizes_2800():
    class Stub:
        def __init__(self, i):
            self.conv_id = f"c{i}"

    convs = [Stub(i) for i in range(2800)]
    split = split_convmix(convs, seed=1)
    assert (len(split.train), len(split.dev), len(split.test)) == (1680, 560, 560)


def test_split_deterministic_and_partition(benchmark):
    first = split_convmix(benchmark, seed=42)
    second = split_convmix(benchmark, seed=42)
    assert [c.conv_id for c in first.train] == [c.conv_id for c in second.train]
    assert [c.conv_id for c in first.test] == [c.conv_id for c in second.test]
    ids = [c.conv_id for c in first.all()]
    assert sorted(ids) == sorted(c.conv_id for c in benchmark)
    assert len(set(ids)) == len(ids)


def test_split_requires_five_conversations(benchmark):
    with pytest.raises(ValueError):
        split_convmix(benchmark[:4], seed=0)


def test_loader_round_trip(tmp_path, benchmark):
    payload = conversations_to_json(benchmark)
    path = tmp_path / "roundtrip.json"
    path.write_text(json.dumps(payload), "utf-8")
    reloaded = load_convmix(path)
    assert conversations_to_json(reloaded) == payload
