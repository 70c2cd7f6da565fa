"""Distant-supervision labeler.

Converts plain (question, gold answer) conversations into gold intent frames
by testing which entity mentions, when appended to a question, bring in
evidences that contain the gold answer.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass

from .benchmark import Conversation, GoldAnswer
from .corpus import Corpus, EntityId, Literal, normalize_literal, scan_date_mentions
from .qu import StructuredRepresentation
from .retrieval import Evidence, Retriever
from .textnorm import fold_text, normalize_surface, token_spans

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RelevantMention:
    surface: str
    source_turn: int
    entity: EntityId
    evidence_count: int  # answering evidences this mention brought in, >= 1


@dataclass(frozen=True)
class LabeledTurn:
    turn: int
    gold_sr: StructuredRepresentation
    relevant_mentions: tuple[RelevantMention, ...]

    def to_dict(self, conv_id: str) -> dict:
        return {
            "conv_id": conv_id,
            "turn": self.turn,
            "sr": self.gold_sr.serialized(),
            "mentions": [
                {
                    "surface": m.surface,
                    "source_turn": m.source_turn,
                    "entity": m.entity,
                    "evidence_count": m.evidence_count,
                }
                for m in self.relevant_mentions
            ],
        }


def _gold_literal(gold: GoldAnswer) -> Literal | None:
    if isinstance(gold.kb_id, Literal):
        return gold.kb_id
    literal = normalize_literal(gold.label)
    return literal if literal.kind != "string" else None


def _literal_in_text(literal: Literal, text: str) -> bool:
    if literal.kind == "date":
        return any(found.value == literal.value for _, found in scan_date_mentions(text))
    if literal.kind in ("year", "number"):
        for token in text.replace(",", " ").split():
            candidate = normalize_literal(token)
            if candidate.kind == literal.kind and candidate.value == literal.value:
                return True
    return False


def is_answering(evidence: Evidence, golds: list[GoldAnswer] | tuple[GoldAnswer, ...]) -> bool:
    """True iff the evidence contains a gold answer: a gold KB id among the
    mention items, or a gold label / normalized literal in the verbalized text."""
    folded_text = fold_text(evidence.text)
    items = evidence.mention_items()
    for gold in golds:
        if isinstance(gold.kb_id, str):
            if any(item == gold.kb_id for item in items if isinstance(item, str)):
                return True
        literal = _gold_literal(gold)
        if literal is not None:
            if any(
                isinstance(item, Literal) and item.same_value(literal) for item in items
            ):
                return True
            if _literal_in_text(literal, evidence.text):
                return True
        if gold.label and fold_text(gold.label) in folded_text:
            return True
    return False


def gold_answer_type(gold: GoldAnswer, corpus: Corpus) -> str:
    """Most frequent KB type of an entity answer, the kind name of a literal
    answer, blank otherwise."""
    if isinstance(gold.kb_id, Literal):
        return gold.kb_id.kind
    if isinstance(gold.kb_id, str):
        entity = corpus.entities.get(gold.kb_id)
        if entity is None:
            log.warning("gold answer id %s not in corpus; leaving type blank", gold.kb_id)
            return ""
        return entity.main_type
    return ""


@dataclass(frozen=True)
class _Candidate:
    surface: str
    source_turn: int


def _question_candidates(question: str, corpus: Corpus) -> list[tuple[str, tuple[int, int]]]:
    """Longest-match lexicon surfaces in the question with their token spans."""
    spans = token_spans(question)
    tokens = [t for _, _, t in spans]
    found = []
    for match in corpus.find_alias_spans(tokens):
        start_char = spans[match.token_start][0]
        end_char = spans[match.token_end - 1][1]
        found.append((question[start_char:end_char], (match.token_start, match.token_end)))
    return found


def _answering_by_anchor(
    evidences: list[Evidence], golds, surface: str
) -> tuple[int, EntityId | None]:
    """(count, entity) of answering evidences anchored to the given surface."""
    key = normalize_surface(surface)
    count = 0
    entity: EntityId | None = None
    for evidence in evidences:
        if evidence.anchor is None or normalize_surface(evidence.anchor.surface) != key:
            continue
        if is_answering(evidence, golds):
            count += 1
            if entity is None:
                entity = evidence.anchor.entity
    return count, entity


def relevant_mentions_for_turn(
    conversation: Conversation,
    turn_index: int,
    retriever: Retriever,
    prior_mentions: list[_Candidate] | None = None,
) -> list[RelevantMention]:
    """Mentions that bring in answering evidences for the turn; entries with
    source_turn == turn_index came from the current question, the rest from
    earlier turns.

    Turn 0 retrieves for the question as-is; follow-ups test each candidate
    (prior relevant mentions and answers in recency order, then lexicon matches
    in the current question) by appending it to the question.
    """
    turn = conversation.turns[turn_index]
    golds = turn.gold_answers
    current: list[RelevantMention] = []
    prior: list[RelevantMention] = []

    if turn_index == 0:
        evidences = retriever.retrieve(turn.question)
        for surface, _span in _question_candidates(turn.question, retriever.corpus):
            count, entity = _answering_by_anchor(evidences, golds, surface)
            if count >= 1 and entity is not None:
                current.append(RelevantMention(surface, 0, entity, count))
        return _dedup(current)

    seen: set[str] = set()
    for candidate in prior_mentions or []:
        key = normalize_surface(candidate.surface)
        if not key or key in seen:
            continue
        seen.add(key)
        augmented = f"{turn.question} {candidate.surface}"
        evidences = retriever.retrieve(augmented)
        count, entity = _answering_by_anchor(evidences, golds, candidate.surface)
        if count >= 1 and entity is not None:
            prior.append(
                RelevantMention(candidate.surface, candidate.source_turn, entity, count)
            )

    for surface, _span in _question_candidates(turn.question, retriever.corpus):
        key = normalize_surface(surface)
        if key in seen:
            continue
        seen.add(key)
        augmented = f"{turn.question} {surface}"
        evidences = retriever.retrieve(augmented)
        count, entity = _answering_by_anchor(evidences, golds, surface)
        if count >= 1 and entity is not None:
            current.append(RelevantMention(surface, turn_index, entity, count))

    return _dedup(current) + _dedup(prior)


def _dedup(mentions: list[RelevantMention]) -> list[RelevantMention]:
    seen: set[str] = set()
    unique = []
    for mention in mentions:
        key = normalize_surface(mention.surface)
        if key not in seen:
            seen.add(key)
            unique.append(mention)
    return unique


def _predicate_words(question: str, mentions: list[RelevantMention], corpus: Corpus) -> str:
    """Non-stopword question words outside the relevant current-turn mention spans."""
    spans = token_spans(question)
    tokens = [t for _, _, t in spans]
    mention_keys = {normalize_surface(m.surface) for m in mentions}
    covered: set[int] = set()
    for surface, (start, end) in _question_candidates(question, corpus):
        if normalize_surface(surface) in mention_keys:
            covered.update(range(start, end))
    words = [
        token
        for i, token in enumerate(tokens)
        if i not in covered and token not in corpus.stopwords
    ]
    return " ".join(words)


def label_conversation(
    conversation: Conversation, corpus: Corpus, retriever: Retriever
) -> list[LabeledTurn]:
    """Construct a gold frame per turn from the mentions that proved relevant.

    Relevant current-turn mentions fill the question-entity slot with prior
    mentions as context; when only prior mentions are relevant they take the
    question-entity slot themselves. Turns are strictly sequential because each
    feeds the candidate pool of the next.
    """
    labeled: list[LabeledTurn] = []
    pool: list[_Candidate] = []  # most recent source turn first
    for turn_index, turn in enumerate(conversation.turns):
        mentions = relevant_mentions_for_turn(
            conversation, turn_index, retriever, prior_mentions=pool
        )
        current = [m for m in mentions if m.source_turn == turn_index]
        prior = [m for m in mentions if m.source_turn != turn_index]
        if current:
            question_mentions = current
            context_mentions = prior
        else:
            question_mentions = prior
            context_mentions = []
        if not current and not prior:
            log.warning(
                "conversation %s turn %d: no relevant mentions found",
                conversation.conv_id,
                turn_index,
            )
        answer_type = (
            gold_answer_type(turn.gold_answers[0], corpus) if turn.gold_answers else ""
        )
        sr = StructuredRepresentation(
            context_entities=tuple(m.surface for m in context_mentions),
            question_entities=tuple(m.surface for m in question_mentions),
            predicate=_predicate_words(turn.question, current, corpus),
            answer_type=answer_type,
        )
        labeled.append(
            LabeledTurn(
                turn=turn_index,
                gold_sr=sr,
                relevant_mentions=tuple(current + prior),
            )
        )
        next_pool: list[_Candidate] = [
            _Candidate(gold.label, turn_index) for gold in turn.gold_answers
        ]
        next_pool += [_Candidate(m.surface, m.source_turn) for m in current + prior]
        pool = next_pool + pool
    return labeled


def write_labeled_jsonl(path, conversations_labels: list[tuple[str, list[LabeledTurn]]]):
    """One labeled turn per line: the training file for external QU models."""
    with open(path, "w", encoding="utf-8") as handle:
        for conv_id, labeled in conversations_labels:
            for turn in labeled:
                handle.write(json.dumps(turn.to_dict(conv_id), ensure_ascii=False) + "\n")
