"""Heterogeneous answering: one crisp answer out of the top-e evidences.

Ships a deterministic extractive answerer (BM25-weighted mention voting with
an answer-type bonus) plus a thin client for an external generative reader,
and prepares training instances for such readers.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass

import requests

from .benchmark import GoldAnswer
from .corpus import Corpus, EntityId, Literal
from .qu import StructuredRepresentation
from .retrieval import RankedEvidence
from .supervision import is_answering
from .textnorm import normalize_surface

log = logging.getLogger(__name__)

NO_ANSWER = "no answer"
MAX_ANSWER_WORDS = 10
READER_TIMEOUT_SECONDS = 30.0
TYPE_MATCH_BONUS = 2.0


class ReaderServiceError(RuntimeError):
    """External reader failure (transport or protocol level)."""


@dataclass(frozen=True)
class PredictedAnswer:
    raw: str
    normalized: EntityId | Literal | None = None
    supporting_evidence_ids: tuple[str, ...] = ()

    @property
    def is_no_answer(self) -> bool:
        return self.raw == NO_ANSWER

    def to_dict(self) -> dict:
        normalized: dict | str | None
        if isinstance(self.normalized, Literal):
            normalized = self.normalized.to_dict()
        else:
            normalized = self.normalized
        return {
            "raw": self.raw,
            "normalized": normalized,
            "supporting_evidence_ids": list(self.supporting_evidence_ids),
        }


@dataclass(frozen=True)
class HaTrainingInstance:
    sr_text: str
    evidences: tuple[str, ...]
    gold_answer: str


def _candidate_key(item: EntityId | Literal) -> str:
    return item if isinstance(item, str) else item.sort_key()


def _candidate_type(item: EntityId | Literal, corpus: Corpus) -> str:
    if isinstance(item, Literal):
        return item.kind
    entity = corpus.entities.get(item)
    return entity.main_type if entity else ""


def _excluded_keys(sr: StructuredRepresentation, corpus: Corpus) -> tuple[set[str], set[str]]:
    """(normalized surfaces, entity ids) named by the frame's entity slots."""
    surfaces: set[str] = set()
    entity_ids: set[str] = set()
    for mention in sr.entity_mentions():
        key = normalize_surface(mention)
        if not key:
            continue
        surfaces.add(key)
        for entity_id, _prior in corpus.lookup_surface(mention):
            entity_ids.add(entity_id)
    return surfaces, entity_ids


def extractive_answer(
    sr: StructuredRepresentation, ranked: list[RankedEvidence], corpus: Corpus
) -> PredictedAnswer:
    """Pick the best-supported mention across the ranked evidences.

    A candidate scores the sum of the BM25 scores of the evidences carrying it,
    doubled when its type (most frequent entity type, or literal kind) matches
    the frame's answer-type slot. Mentions naming the frame's own entities are
    excluded; ties go to the candidate seen at the better rank, then to the
    lexicographically smaller id.
    """
    slot_surfaces, slot_entities = _excluded_keys(sr, corpus)
    wanted_type = normalize_surface(sr.answer_type)

    scores: dict[str, float] = {}
    best_rank: dict[str, int] = {}
    surfaces: dict[str, str] = {}  # candidate -> surface in its best-ranked evidence
    supporting: dict[str, list[str]] = {}
    items: dict[str, EntityId | Literal] = {}

    for entry in ranked:
        seen_here: set[str] = set()
        for surface, item in entry.evidence.mentions:
            if normalize_surface(surface) in slot_surfaces:
                continue
            if isinstance(item, str) and item in slot_entities:
                continue
            key = _candidate_key(item)
            items[key] = item
            bonus = (
                TYPE_MATCH_BONUS
                if wanted_type and normalize_surface(_candidate_type(item, corpus)) == wanted_type
                else 1.0
            )
            if key not in seen_here:
                seen_here.add(key)
                scores[key] = scores.get(key, 0.0) + entry.bm25 * bonus
                supporting.setdefault(key, []).append(entry.evidence.evidence_id)
            if key not in best_rank or entry.rank < best_rank[key]:
                best_rank[key] = entry.rank
                surfaces[key] = surface

    if not scores:
        return PredictedAnswer(raw=NO_ANSWER)

    winner = min(scores, key=lambda key: (-scores[key], best_rank[key], key))
    return PredictedAnswer(
        raw=surfaces[winner],
        normalized=items[winner],
        supporting_evidence_ids=tuple(supporting[winner]),
    )


def external_reader_client(
    endpoint: str,
    sr: StructuredRepresentation,
    ranked: list[RankedEvidence],
    timeout: float = READER_TIMEOUT_SECONDS,
    predicate_first: bool = False,
) -> PredictedAnswer:
    """POST the frame and evidence texts to a generative reader service."""
    payload = {
        "question": sr.serialized(predicate_first=predicate_first),
        "passages": [entry.evidence.text for entry in ranked],
    }
    try:
        response = requests.post(endpoint, json=payload, timeout=timeout)
    except requests.RequestException as exc:
        raise ReaderServiceError(f"reader service unreachable: {exc}") from exc
    if response.status_code != 200:
        raise ReaderServiceError(f"reader service returned HTTP {response.status_code}")
    try:
        answer = response.json()["answer"]
    except (ValueError, KeyError) as exc:
        raise ReaderServiceError(f"reader response missing 'answer' field: {exc}") from exc
    words = str(answer).split()
    if len(words) > MAX_ANSWER_WORDS:
        log.warning(
            "reader answer of %d words truncated to %d", len(words), MAX_ANSWER_WORDS
        )
        answer = " ".join(words[:MAX_ANSWER_WORDS])
    return PredictedAnswer(raw=str(answer) if answer else NO_ANSWER)


def prepare_training_set(
    labeled_runs: list[tuple[StructuredRepresentation, list[RankedEvidence], list[GoldAnswer]]],
) -> list[HaTrainingInstance]:
    """Keep only runs whose top-e evidences contain a gold answer (one unified
    set across all source types); the dropped count is logged."""
    instances = []
    dropped = 0
    for sr, ranked, golds in labeled_runs:
        if any(is_answering(entry.evidence, golds) for entry in ranked):
            instances.append(
                HaTrainingInstance(
                    sr_text=sr.serialized(),
                    evidences=tuple(entry.evidence.text for entry in ranked),
                    gold_answer=golds[0].label if golds else "",
                )
            )
        else:
            dropped += 1
    if dropped:
        log.info("prepare_training_set: dropped %d runs without answering evidence", dropped)
    return instances


def write_training_jsonl(path, instances: list[HaTrainingInstance]):
    """Conventional reader-training layout: question, contexts, target."""
    with open(path, "w", encoding="utf-8") as handle:
        for instance in instances:
            handle.write(
                json.dumps(
                    {
                        "question": instance.sr_text,
                        "ctxs": [{"text": text} for text in instance.evidences],
                        "target": instance.gold_answer,
                    },
                    ensure_ascii=False,
                )
                + "\n"
            )
