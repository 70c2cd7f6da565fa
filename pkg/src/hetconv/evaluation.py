"""Answer normalization, P@1 / answer-presence metrics, breakdowns and
significance tests."""

from __future__ import annotations

import json
import logging
import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from pathlib import Path

from scipy.special import stdtr

from .benchmark import Conversation, GoldAnswer
from .corpus import EntityId, Literal, normalize_literal
from .retrieval import Evidence, RankedEvidence
from .supervision import is_answering

log = logging.getLogger(__name__)


class RunFormatError(ValueError):
    """A run file is missing records or fields the evaluation needs."""


class ZeroVarianceError(ValueError):
    """Paired t-test on differences with no variance is undefined."""


def levenshtein(a: str, b: str) -> int:
    """Minimal number of unit-cost insertions, deletions and substitutions."""
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    for i, char_a in enumerate(a, start=1):
        current = [i]
        for j, char_b in enumerate(b, start=1):
            cost = 0 if char_a == char_b else 1
            current.append(min(previous[j] + 1, current[j - 1] + 1, previous[j - 1] + cost))
        previous = current
    return previous[-1]


@dataclass(frozen=True)
class NormalizedAnswer:
    kb_id: EntityId | Literal | None
    matched_surface: str | None
    method: str  # "exact" | "edit_distance" | "literal" | "none"

    def to_dict(self) -> dict:
        kb_id: dict | str | None
        kb_id = self.kb_id.to_dict() if isinstance(self.kb_id, Literal) else self.kb_id
        return {"kb_id": kb_id, "matched_surface": self.matched_surface, "method": self.method}


def _item_key(item: EntityId | Literal) -> str:
    return item if isinstance(item, str) else item.sort_key()


def normalize_answer(
    raw: str, mention_maps: list[tuple[str, EntityId | Literal]]
) -> NormalizedAnswer:
    """Ground a predicted string in the KB via the retrieval phase's mention pairs.

    Literals (dates, years, numbers) normalize directly; otherwise a
    case-insensitive exact surface match wins, falling back to the surface with
    the smallest Levenshtein distance. Ties break by the most frequent id among
    the tied surfaces, then by lexicographic id.
    """
    literal = normalize_literal(raw)
    if literal.kind != "string":
        return NormalizedAnswer(kb_id=literal, matched_surface=None, method="literal")
    if not mention_maps:
        return NormalizedAnswer(kb_id=None, matched_surface=None, method="none")

    folded = raw.casefold()
    pair_counts: Counter = Counter()
    items_by_key: dict[str, EntityId | Literal] = {}
    surfaces_by_fold: dict[str, str] = {}
    for surface, item in mention_maps:
        key = _item_key(item)
        items_by_key[key] = item
        pair_counts[(surface.casefold(), key)] += 1
        surfaces_by_fold.setdefault(surface.casefold(), surface)

    def pick(candidate_folds: list[str], method: str) -> NormalizedAnswer:
        totals: Counter = Counter()
        for (fold, key), count in pair_counts.items():
            if fold in candidate_folds:
                totals[key] += count
        best_key = min(totals, key=lambda key: (-totals[key], key))
        matched_fold = next(
            fold for fold in candidate_folds
            if pair_counts.get((fold, best_key), 0) > 0
        )
        return NormalizedAnswer(
            kb_id=items_by_key[best_key],
            matched_surface=surfaces_by_fold[matched_fold],
            method=method,
        )

    exact = [fold for fold in surfaces_by_fold if fold == folded]
    if exact:
        return pick(exact, "exact")

    by_distance: dict[str, int] = {
        fold: levenshtein(folded, fold) for fold in surfaces_by_fold
    }
    best = min(by_distance.values())
    return pick([fold for fold, d in by_distance.items() if d == best], "edit_distance")


def _ids_match(predicted: EntityId | Literal, gold: EntityId | Literal) -> bool:
    if isinstance(predicted, str) and isinstance(gold, str):
        return predicted == gold
    if isinstance(predicted, Literal) and isinstance(gold, Literal):
        return predicted.same_value(gold)
    return False


def p_at_1(
    prediction: NormalizedAnswer, raw: str, golds: list[GoldAnswer] | tuple[GoldAnswer, ...]
) -> int:
    """1 iff the normalized id equals a gold id, or, when nothing could be
    normalized, the raw string equals a gold label case-insensitively."""
    if prediction.kb_id is not None:
        if any(
            gold.kb_id is not None and _ids_match(prediction.kb_id, gold.kb_id)
            for gold in golds
        ):
            return 1
    if prediction.method == "none":
        if any(raw.casefold() == gold.label.casefold() for gold in golds):
            return 1
    return 0


def answer_presence(
    ranked: list[RankedEvidence], golds: list[GoldAnswer] | tuple[GoldAnswer, ...]
) -> int:
    """1 iff any of the ranked evidences contains a gold answer."""
    return int(any(is_answering(entry.evidence, golds) for entry in ranked))


@dataclass(frozen=True)
class QuestionRecord:
    conv_id: str
    turn: int
    p_at_1: int
    answer_presence: int
    domain: str
    sources_mask: frozenset[str]
    prediction: str
    normalized: NormalizedAnswer

    def turn_bucket(self, conversation_length: int) -> str:
        if conversation_length <= 5:
            return "1" if self.turn == 0 else "2-5"
        number = self.turn + 1
        if number == 1:
            return "1"
        if number <= 4:
            return "2-4"
        if number <= 7:
            return "5-7"
        return "8-10"


@dataclass(frozen=True)
class MetricsReport:
    records: tuple[QuestionRecord, ...]
    p_at_1: float
    answer_presence: float
    by_turn: dict[str, float]
    by_domain: dict[str, float]
    by_source: dict[str, float]

    def to_dict(self) -> dict:
        return {
            "questions": len(self.records),
            "p_at_1": self.p_at_1,
            "answer_presence": self.answer_presence,
            "by_turn": self.by_turn,
            "by_domain": self.by_domain,
            "by_source": self.by_source,
            "records": [
                {
                    "conv_id": r.conv_id,
                    "turn": r.turn,
                    "p_at_1": r.p_at_1,
                    "answer_presence": r.answer_presence,
                    "domain": r.domain,
                    "sources": sorted(r.sources_mask),
                    "prediction": r.prediction,
                    "normalized": r.normalized.to_dict(),
                }
                for r in self.records
            ],
        }

    def format_table(self) -> str:
        lines = [
            f"{'questions':<18}{len(self.records):>8}",
            f"{'P@1':<18}{self.p_at_1:>8.3f}",
            f"{'answer presence':<18}{self.answer_presence:>8.3f}",
            "",
            "P@1 by turn",
        ]
        for bucket, value in sorted(self.by_turn.items()):
            lines.append(f"  {bucket:<16}{value:>8.3f}")
        lines.append("P@1 by domain")
        for domain, value in sorted(self.by_domain.items()):
            lines.append(f"  {domain:<16}{value:>8.3f}")
        lines.append("P@1 by source")
        for source, value in sorted(self.by_source.items()):
            lines.append(f"  {source:<16}{value:>8.3f}")
        return "\n".join(lines)


def read_run_file(path: str | Path) -> list[dict]:
    records = []
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                records.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise RunFormatError(f"{path}:{line_number}: {exc.msg}") from None
    return records


def ranked_from_record(record: dict, limit: int | None = None) -> list[RankedEvidence]:
    """Rebuild the ranked evidence list a run record carried, optionally
    truncated to the first `limit` ranks."""
    entries = record.get("answer_presence_inputs", [])
    ranked = []
    for entry in entries:
        ranked.append(
            RankedEvidence(
                evidence=Evidence.from_dict(entry),
                bm25=float(entry.get("score", 0.0)),
                rank=int(entry.get("rank", len(ranked) + 1)),
            )
        )
    ranked.sort(key=lambda r: r.rank)
    if limit is not None:
        ranked = ranked[:limit]
    return ranked


def evaluate_run(
    run_path: str | Path, conversations: list[Conversation]
) -> MetricsReport:
    """Score one run file against the benchmark, micro-averaged per question,
    with per-turn, per-domain and per-source breakdowns."""
    by_key = {}
    for record in read_run_file(run_path):
        by_key[(record["conv_id"], int(record["turn"]))] = record

    missing = [
        (conv.conv_id, turn.index)
        for conv in conversations
        for turn in conv.turns
        if (conv.conv_id, turn.index) not in by_key
    ]
    if missing:
        raise RunFormatError(f"run file misses benchmark questions: {missing[:10]}")

    records = []
    lengths = {conv.conv_id: len(conv.turns) for conv in conversations}
    for conv in conversations:
        for turn in conv.turns:
            raw_record = by_key[(conv.conv_id, turn.index)]
            ranked = ranked_from_record(raw_record)
            mention_maps = [
                mention for entry in ranked for mention in entry.evidence.mentions
            ]
            raw_prediction = raw_record.get("prediction_raw", "")
            normalized = normalize_answer(raw_prediction, mention_maps)
            records.append(
                QuestionRecord(
                    conv_id=conv.conv_id,
                    turn=turn.index,
                    p_at_1=p_at_1(normalized, raw_prediction, turn.gold_answers),
                    answer_presence=answer_presence(ranked, turn.gold_answers),
                    domain=conv.domain,
                    sources_mask=turn.sources_used,
                    prediction=raw_prediction,
                    normalized=normalized,
                )
            )

    def mean(values: list[int]) -> float:
        return sum(values) / len(values) if values else 0.0

    by_turn = defaultdict(list)
    by_domain = defaultdict(list)
    by_source = defaultdict(list)
    for record in records:
        by_turn[record.turn_bucket(lengths[record.conv_id])].append(record.p_at_1)
        by_domain[record.domain].append(record.p_at_1)
        for source in record.sources_mask:
            by_source[source].append(record.p_at_1)

    return MetricsReport(
        records=tuple(records),
        p_at_1=mean([r.p_at_1 for r in records]),
        answer_presence=mean([r.answer_presence for r in records]),
        by_turn={k: mean(v) for k, v in by_turn.items()},
        by_domain={k: mean(v) for k, v in by_domain.items()},
        by_source={k: mean(v) for k, v in by_source.items()},
    )


def mcnemar(outcomes_a: list[int], outcomes_b: list[int]) -> tuple[float, float]:
    """Continuity-corrected McNemar test on paired binary outcomes.

    statistic = (|b - c| - 1)^2 / (b + c) with b = A-only successes and
    c = B-only successes; p from chi-square with 1 df; (0, 1.0) when b + c = 0.
    """
    if len(outcomes_a) != len(outcomes_b):
        raise ValueError(
            f"paired outcome lengths differ: {len(outcomes_a)} vs {len(outcomes_b)}"
        )
    b = sum(1 for x, y in zip(outcomes_a, outcomes_b) if x == 1 and y == 0)
    c = sum(1 for x, y in zip(outcomes_a, outcomes_b) if x == 0 and y == 1)
    if b + c == 0:
        return 0.0, 1.0
    statistic = (abs(b - c) - 1) ** 2 / (b + c)
    p_value = math.erfc(math.sqrt(statistic / 2.0))  # chi2(1df) survival function
    return statistic, p_value


def paired_t_test(values_a: list[float], values_b: list[float]) -> tuple[float, float]:
    """Two-sided paired t-test; raises ZeroVarianceError when all differences
    are identical."""
    if len(values_a) != len(values_b):
        raise ValueError(
            f"paired value lengths differ: {len(values_a)} vs {len(values_b)}"
        )
    n = len(values_a)
    if n < 2:
        raise ValueError("paired t-test needs at least 2 observations")
    diffs = [x - y for x, y in zip(values_a, values_b)]
    mean_diff = sum(diffs) / n
    variance = sum((d - mean_diff) ** 2 for d in diffs) / (n - 1)
    if variance == 0:
        raise ZeroVarianceError("differences have zero variance; t is undefined")
    t = mean_diff / math.sqrt(variance / n)
    p_value = 2.0 * float(stdtr(n - 1, -abs(t)))
    return t, p_value
