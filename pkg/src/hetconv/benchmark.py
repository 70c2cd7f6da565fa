"""Conversation benchmark data model, loader and split management."""

from __future__ import annotations

import json
import logging
import random
from dataclasses import dataclass
from pathlib import Path

from .corpus import EntityId, Literal, normalize_literal

log = logging.getLogger(__name__)

DOMAINS = ("Books", "Movies", "Music", "TV series", "Soccer")
SOURCE_CODES = {"kb": "KB", "text": "TEXT", "table": "TABLE", "info": "INFO"}
MAX_GOLD_ANSWERS = 6


class BenchmarkFormatError(ValueError):
    """A benchmark record violates the expected JSON schema."""


@dataclass(frozen=True)
class GoldAnswer:
    label: str
    kb_id: EntityId | Literal | None = None


@dataclass(frozen=True)
class Turn:
    index: int
    question: str
    gold_answers: tuple[GoldAnswer, ...]
    completed_question: str | None = None
    paraphrase: str | None = None
    question_entities: tuple[EntityId, ...] = ()
    sources_used: frozenset[str] = frozenset()


@dataclass(frozen=True)
class Conversation:
    conv_id: str
    domain: str
    turns: tuple[Turn, ...]


@dataclass(frozen=True)
class BenchmarkSplit:
    train: tuple[Conversation, ...]
    dev: tuple[Conversation, ...]
    test: tuple[Conversation, ...]

    def all(self) -> tuple[Conversation, ...]:
        return self.train + self.dev + self.test


def _gold_from_record(raw: dict, where: str) -> GoldAnswer:
    label = raw.get("label")
    if not label:
        raise BenchmarkFormatError(f"{where}: answer without a label")
    url = raw.get("wikidata_url")
    if url:
        kb_id: EntityId | Literal | None = url.rstrip("/").rsplit("/", 1)[-1]
    else:
        literal = normalize_literal(label)
        kb_id = literal if literal.kind != "string" else None
    return GoldAnswer(label=label, kb_id=kb_id)


def load_convmix(path: str | Path) -> list[Conversation]:
    """Load a conversation benchmark file; Wikidata URLs reduce to bare ids and
    plain date/year/number answers pick up normalized literal ids."""
    with open(path, encoding="utf-8") as handle:
        try:
            raw = json.load(handle)
        except json.JSONDecodeError as exc:
            raise BenchmarkFormatError(f"{path}:{exc.lineno}: {exc.msg}") from None
    conversations = []
    for conv_index, record in enumerate(raw):
        conv_id = record.get("conv_id") or f"conv-{conv_index}"
        domain = record.get("domain")
        if domain not in DOMAINS:
            raise BenchmarkFormatError(f"conversation {conv_id}: unknown domain {domain!r}")
        raw_turns = record.get("turns")
        if not raw_turns:
            raise BenchmarkFormatError(f"conversation {conv_id}: no turns")
        turns = []
        for index, raw_turn in enumerate(raw_turns):
            where = f"conversation {conv_id} turn {index}"
            question = raw_turn.get("question")
            if not question:
                raise BenchmarkFormatError(f"{where}: missing question")
            answers = raw_turn.get("answers")
            if not answers:
                raise BenchmarkFormatError(f"{where}: missing answers")
            if len(answers) > MAX_GOLD_ANSWERS:
                log.warning("%s: %d gold answers exceeds the benchmark maximum of %d",
                            where, len(answers), MAX_GOLD_ANSWERS)
            golds = tuple(_gold_from_record(a, where) for a in answers)
            sources = frozenset(
                SOURCE_CODES[s] for s in raw_turn.get("sources", []) if s in SOURCE_CODES
            )
            turns.append(
                Turn(
                    index=index,
                    question=question,
                    gold_answers=golds,
                    completed_question=raw_turn.get("completed"),
                    paraphrase=raw_turn.get("paraphrase"),
                    question_entities=tuple(raw_turn.get("entities", [])),
                    sources_used=sources,
                )
            )
        conversations.append(Conversation(conv_id=conv_id, domain=domain, turns=tuple(turns)))
    return conversations


def conversations_to_json(conversations: list[Conversation]) -> list[dict]:
    """Inverse of load_convmix, used for round-trip checks and fixtures."""
    records = []
    for conv in conversations:
        records.append(
            {
                "conv_id": conv.conv_id,
                "domain": conv.domain,
                "turns": [
                    {
                        "question": t.question,
                        "answers": [
                            {
                                "label": g.label,
                                **(
                                    {"wikidata_url": f"https://www.wikidata.org/wiki/{g.kb_id}"}
                                    if isinstance(g.kb_id, str)
                                    else {}
                                ),
                            }
                            for g in t.gold_answers
                        ],
                        **({"completed": t.completed_question} if t.completed_question else {}),
                        **({"paraphrase": t.paraphrase} if t.paraphrase else {}),
                        "entities": list(t.question_entities),
                        "sources": sorted(
                            code for code, name in SOURCE_CODES.items()
                            if name in t.sources_used
                        ),
                    }
                    for t in conv.turns
                ],
            }
        )
    return records


def split_convmix(conversations: list[Conversation], seed: int) -> BenchmarkSplit:
    """Deterministic 60/20/20 partition by conversation; train takes the remainder."""
    if len(conversations) < 5:
        raise ValueError("need at least 5 conversations to split 60:20:20")
    shuffled = list(conversations)
    random.Random(seed).shuffle(shuffled)
    n = len(shuffled)
    n_dev = n // 5
    n_test = n // 5
    n_train = n - n_dev - n_test
    return BenchmarkSplit(
        train=tuple(shuffled[:n_train]),
        dev=tuple(shuffled[n_train : n_train + n_dev]),
        test=tuple(shuffled[n_train + n_dev :]),
    )
