"""Batch pipeline: question understanding -> evidence retrieval -> answering.

Runs a benchmark conversation-by-conversation in gold- or predicted-answer
history mode, applies frame-slot ablations, and writes run files the
evaluation module consumes.
"""

from __future__ import annotations

import json
import logging
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path

from .benchmark import Conversation, Turn
from .corpus import Corpus
from .qu import (
    ConversationHistory,
    QuVariant,
    StructuredRepresentation,
    build_cfg,
    generate_sr,
    prepend,
)
from .retrieval import (
    ALL_SOURCES,
    Disambiguation,
    RankedEvidence,
    Retriever,
    RetrieverConfig,
)
from .answering import NO_ANSWER, PredictedAnswer, external_reader_client, extractive_answer
from .supervision import gold_answer_type
from .textnorm import token_spans, tokenize

log = logging.getLogger(__name__)

ABLATABLE_SLOTS = frozenset({"context", "question_entity", "predicate", "type", "ordering"})
HISTORY_MODES = ("gold", "predicted")


class ConfigError(ValueError):
    """Inconsistent pipeline configuration."""


@dataclass(frozen=True)
class PipelineConfig:
    qu: QuVariant = QuVariant.HEURISTIC_SR
    retriever: RetrieverConfig = field(default_factory=RetrieverConfig)
    ablate: frozenset[str] = frozenset()
    history_mode: str = "gold"
    answerer: str = "extractive"  # "extractive" | "external"
    qu_endpoint: str | None = None
    reader_endpoint: str | None = None
    fallback_to_heuristic: bool = True
    fallback_to_extractive: bool = True

    def __post_init__(self):
        unknown = self.ablate - ABLATABLE_SLOTS
        if unknown:
            raise ConfigError(f"unknown ablation slots: {sorted(unknown)}")
        if self.history_mode not in HISTORY_MODES:
            raise ConfigError(f"history_mode must be one of {HISTORY_MODES}")
        if self.qu is QuVariant.EXTERNAL_SR and not self.qu_endpoint:
            raise ConfigError("qu=external_sr requires qu_endpoint")
        if self.answerer == "external" and not self.reader_endpoint:
            raise ConfigError("answerer=external requires reader_endpoint")
        if self.answerer not in ("extractive", "external"):
            raise ConfigError(f"unknown answerer {self.answerer!r}")

    @property
    def predicate_first(self) -> bool:
        return "ordering" in self.ablate


def load_config_file(path: str | Path) -> dict:
    """Raw config mapping from a TOML or JSON file."""
    text = Path(path).read_text("utf-8")
    if str(path).endswith(".json"):
        return json.loads(text)
    if sys.version_info >= (3, 11):
        import tomllib
    else:
        import tomli as tomllib
    return tomllib.loads(text)


def config_from_mapping(raw: dict) -> PipelineConfig:
    retriever_raw = dict(raw.get("retriever", {}))
    if "sources" in retriever_raw:
        retriever_raw["sources"] = frozenset(
            s.upper() for s in retriever_raw["sources"]
        )
    retriever = RetrieverConfig(**retriever_raw)
    return PipelineConfig(
        qu=QuVariant(raw.get("qu", "heuristic_sr")),
        retriever=retriever,
        ablate=frozenset(raw.get("ablate", [])),
        history_mode=raw.get("history_mode", "gold"),
        answerer=raw.get("answerer", "extractive"),
        qu_endpoint=raw.get("qu_endpoint"),
        reader_endpoint=raw.get("reader_endpoint"),
        fallback_to_heuristic=raw.get("fallback_to_heuristic", True),
        fallback_to_extractive=raw.get("fallback_to_extractive", True),
    )


def apply_ablation(
    sr: StructuredRepresentation, ablate: frozenset[str]
) -> StructuredRepresentation:
    """Blank out the ablated slots ("ordering" affects serialization only)."""
    changes = {}
    if "context" in ablate:
        changes["context_entities"] = ()
    if "question_entity" in ablate:
        changes["question_entities"] = ()
    if "predicate" in ablate:
        changes["predicate"] = ""
    if "type" in ablate:
        changes["answer_type"] = ""
    return replace(sr, **changes) if changes else sr


def gold_sr_for_turn(turn: Turn, corpus: Corpus) -> StructuredRepresentation:
    """Oracle frame from benchmark metadata: annotated entity labels fill the
    question-entity slot, the completed question supplies the predicate, the
    gold answer supplies the type."""
    labels = tuple(
        corpus.label_of(entity_id)
        for entity_id in turn.question_entities
        if entity_id in corpus.entities
    )
    question = turn.completed_question or turn.question
    spans = token_spans(question)
    tokens = [t for _, _, t in spans]
    label_tokens = {token for label in labels for token in tokenize(label)}
    predicate = " ".join(
        t for t in tokens if t not in corpus.stopwords and t not in label_tokens
    )
    answer_type = (
        gold_answer_type(turn.gold_answers[0], corpus) if turn.gold_answers else ""
    )
    return StructuredRepresentation(
        context_entities=(),
        question_entities=labels,
        predicate=predicate,
        answer_type=answer_type,
    )


def gold_anchors_for_turn(turn: Turn, corpus: Corpus) -> list[Disambiguation]:
    """Retrieval anchors seeded from the turn's gold entity annotations."""
    anchors = []
    for position, entity_id in enumerate(turn.question_entities):
        entity = corpus.entities.get(entity_id)
        if entity is None:
            log.warning("gold anchor %s not in corpus; skipped", entity_id)
            continue
        anchors.append(
            Disambiguation(
                span=(position, position + 1),
                surface=entity.label,
                entity=entity_id,
                score=1.0,
            )
        )
    return anchors


@dataclass
class TurnResult:
    conv_id: str
    turn: int
    question: str
    sr: StructuredRepresentation
    ranked: list[RankedEvidence]
    prediction: PredictedAnswer

    def to_record(self) -> dict:
        return {
            "conv_id": self.conv_id,
            "turn": self.turn,
            "question": self.question,
            "sr": self.sr.serialized(),
            "prediction_raw": self.prediction.raw,
            "normalized": self.prediction.to_dict()["normalized"],
            "top_evidence_ids": [entry.evidence.evidence_id for entry in self.ranked],
            "answer_presence_inputs": [
                {
                    **entry.evidence.to_dict(),
                    "rank": entry.rank,
                    "score": entry.bm25,
                }
                for entry in self.ranked
            ],
        }


class Pipeline:
    """One configured QU -> ERS -> HA stack over a loaded corpus."""

    def __init__(self, corpus: Corpus, config: PipelineConfig | None = None):
        self.corpus = corpus
        self.config = config or PipelineConfig()
        self.retriever = Retriever(corpus, self.config.retriever)

    def understand(
        self, history: ConversationHistory, question: str, turn: Turn | None = None
    ) -> tuple[StructuredRepresentation, list[Disambiguation] | None]:
        """Produce the (possibly ablated) frame and optional seeded anchors."""
        config = self.config
        anchors: list[Disambiguation] | None = None
        if config.qu is QuVariant.GOLD_SR:
            if turn is None:
                raise ConfigError("gold_sr mode needs benchmark turn metadata")
            sr = gold_sr_for_turn(turn, self.corpus)
            anchors = gold_anchors_for_turn(turn, self.corpus)
        elif config.qu in (QuVariant.HEURISTIC_SR, QuVariant.EXTERNAL_SR):
            sr = generate_sr(
                history,
                question,
                config.qu,
                corpus=self.corpus,
                endpoint=config.qu_endpoint,
                fallback_to_heuristic=config.fallback_to_heuristic,
            )
        else:  # prepend baselines: the flattened text becomes the question-entity-free frame
            flat = prepend(history, question, config.qu).replace("|", " ")
            sr = StructuredRepresentation(predicate=flat)
        sr = apply_ablation(sr, config.ablate)
        if anchors is not None and "question_entity" in config.ablate:
            anchors = []
        return sr, anchors

    def answer(
        self, sr: StructuredRepresentation, ranked: list[RankedEvidence]
    ) -> PredictedAnswer:
        config = self.config
        if config.answerer == "external":
            try:
                return external_reader_client(
                    config.reader_endpoint,
                    sr,
                    ranked,
                    predicate_first=config.predicate_first,
                )
            except Exception as exc:
                if not config.fallback_to_extractive:
                    raise
                log.warning("external reader failed (%s); using extractive answerer", exc)
        if not ranked:
            return PredictedAnswer(raw=NO_ANSWER)
        return extractive_answer(sr, ranked, self.corpus)

    def ask(
        self,
        history: ConversationHistory,
        question: str,
        turn: Turn | None = None,
        sr_override: StructuredRepresentation | None = None,
    ) -> TurnResult:
        if sr_override is not None:
            sr, anchors = apply_ablation(sr_override, self.config.ablate), None
        else:
            sr, anchors = self.understand(history, question, turn)
        ranked = self.run_ers(sr, anchors)
        prediction = self.answer(sr, ranked)
        return TurnResult(
            conv_id="",
            turn=len(history.turns),
            question=question,
            sr=sr,
            ranked=ranked,
            prediction=prediction,
        )

    def run_ers(
        self,
        sr: StructuredRepresentation,
        anchors: list[Disambiguation] | None = None,
    ) -> list[RankedEvidence]:
        # disambiguation always sees the full frame; the answer-type slot joins
        # the scoring query only when configured to
        retrieval_text = sr.serialized(predicate_first=self.config.predicate_first)
        scoring_text = sr.serialized(
            include_type=self.config.retriever.type_in_query,
            predicate_first=self.config.predicate_first,
        )
        evidences = self.retriever.retrieve(retrieval_text, anchors=anchors)
        return self.retriever.rank(scoring_text, evidences)

    def explain(self, history: ConversationHistory, question: str, sr):
        return build_cfg(sr, history, question, self.corpus.stopwords)


def run_conversation(pipeline: Pipeline, conversation: Conversation) -> list[TurnResult]:
    """Run every turn in order, threading gold or predicted answers into the
    history per the configured mode."""
    results = []
    history = ConversationHistory()
    for turn in conversation.turns:
        result = pipeline.ask(history, turn.question, turn=turn)
        result.conv_id = conversation.conv_id
        result.turn = turn.index
        results.append(result)
        if pipeline.config.history_mode == "gold":
            answers = tuple(g.label for g in turn.gold_answers)
        else:
            answers = (result.prediction.raw,)
        history = history.append(turn.question, answers)
    return results


def run_benchmark(
    corpus: Corpus,
    conversations: list[Conversation],
    config: PipelineConfig | None = None,
    run_path: str | Path | None = None,
    evidence_dump_path: str | Path | None = None,
) -> list[TurnResult]:
    """Execute the pipeline over a benchmark; optionally write the run JSONL
    and a per-evidence debug dump."""
    pipeline = Pipeline(corpus, config)
    results = []
    for conversation in conversations:
        results.extend(run_conversation(pipeline, conversation))
    if run_path is not None:
        write_run_file(run_path, results)
    if evidence_dump_path is not None:
        write_evidence_dump(evidence_dump_path, results)
    return results


def write_run_file(path: str | Path, results: list[TurnResult]):
    with open(path, "w", encoding="utf-8") as handle:
        for result in results:
            handle.write(json.dumps(result.to_record(), ensure_ascii=False) + "\n")


def write_evidence_dump(path: str | Path, results: list[TurnResult]):
    with open(path, "w", encoding="utf-8") as handle:
        for result in results:
            for entry in result.ranked:
                handle.write(
                    json.dumps(
                        {
                            "conv_id": result.conv_id,
                            "turn": result.turn,
                            "rank": entry.rank,
                            "score": entry.bm25,
                            **entry.evidence.to_dict(),
                        },
                        ensure_ascii=False,
                    )
                    + "\n"
                )
