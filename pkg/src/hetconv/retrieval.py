"""Evidence retrieval and scoring.

Disambiguates frame tokens against the alias lexicon, collects evidences for
each hit from all four source types (KB facts, page sentences, table rows,
infobox entries), verbalizes them on the fly with mention metadata, and keeps
the top-e by BM25 against the frame text.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, replace

from .corpus import (
    Corpus,
    EntityId,
    KBFact,
    Literal,
    WikiPage,
    normalize_literal,
    scan_date_mentions,
)
from .qu import StructuredRepresentation
from .textnorm import normalize_surface, tokenize

SOURCE_KB = "KB"
SOURCE_TEXT = "TEXT"
SOURCE_TABLE = "TABLE"
SOURCE_INFO = "INFO"
ALL_SOURCES = frozenset({SOURCE_KB, SOURCE_TEXT, SOURCE_TABLE, SOURCE_INFO})

AUTO_K = 5
AUTO_RELATIVE_CUTOFF = 0.5

Mention = tuple[str, "EntityId | Literal"]


@dataclass(frozen=True)
class Disambiguation:
    span: tuple[int, int]  # token range in the query, end exclusive
    surface: str
    entity: EntityId
    score: float


@dataclass(frozen=True)
class Evidence:
    evidence_id: str
    source: str
    text: str
    mentions: tuple[Mention, ...]
    provenance: tuple
    anchor: Disambiguation | None = None

    def mention_items(self) -> list["EntityId | Literal"]:
        return [item for _, item in self.mentions]

    def to_dict(self) -> dict:
        return {
            "id": self.evidence_id,
            "source": self.source,
            "text": self.text,
            "mentions": [
                {"surface": s, **({"entity": i} if isinstance(i, str) else {"literal": i.to_dict()})}
                for s, i in self.mentions
            ],
            "provenance": list(self.provenance),
            "anchor": None
            if self.anchor is None
            else {
                "surface": self.anchor.surface,
                "entity": self.anchor.entity,
                "score": self.anchor.score,
            },
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Evidence":
        mentions = []
        for m in data.get("mentions", []):
            if "entity" in m:
                mentions.append((m["surface"], m["entity"]))
            else:
                mentions.append((m["surface"], Literal.from_dict(m["literal"])))
        anchor = None
        if data.get("anchor"):
            anchor = Disambiguation(
                span=(0, 0),
                surface=data["anchor"]["surface"],
                entity=data["anchor"]["entity"],
                score=data["anchor"].get("score", 1.0),
            )
        return cls(
            evidence_id=data["id"],
            source=data["source"],
            text=data["text"],
            mentions=tuple(mentions),
            provenance=tuple(data.get("provenance", [])),
            anchor=anchor,
        )


@dataclass(frozen=True)
class RankedEvidence:
    evidence: Evidence
    bm25: float
    rank: int  # 1-based, contiguous


@dataclass(frozen=True)
class RetrieverConfig:
    k: int | None = None  # None = auto: up to AUTO_K with a relative-score cutoff
    p: int = 1000
    e: int = 100
    bm25_k1: float = 1.5
    bm25_b: float = 0.75
    sources: frozenset[str] = ALL_SOURCES
    type_in_query: bool = True

    def __post_init__(self):
        if self.e < 1:
            raise ValueError("e must be >= 1")
        if self.k is not None and self.k < 1:
            raise ValueError("k must be >= 1 or None for auto")
        unknown = self.sources - ALL_SOURCES
        if unknown:
            raise ValueError(f"unknown source types: {sorted(unknown)}")


# --- disambiguation ----------------------------------------------------------

def disambiguate(
    query_tokens: list[str], corpus: Corpus, config: RetrieverConfig
) -> list[Disambiguation]:
    """Longest-match lexicon spans mapped to their top-k candidate entities.

    Candidates rank by (label-vs-alias match quality, popularity prior); the
    global candidate count is capped at config.p, dropping the lowest scores.
    """
    results: list[Disambiguation] = []
    for span in corpus.find_alias_spans(query_tokens):
        bucket = corpus.alias_lexicon[span.key]
        max_prior = max(prior for _, prior in bucket)
        scored = []
        for entity_id, prior in bucket:
            entity = corpus.entities[entity_id]
            quality = 1.0 if normalize_surface(entity.label) == span.key else 0.9
            score = quality * (0.5 + 0.5 * prior / max_prior)
            scored.append((score, entity_id))
        scored.sort(key=lambda item: (-item[0], item[1]))
        limit = config.k if config.k is not None else AUTO_K
        kept = scored[:limit]
        if config.k is None and kept:
            best = kept[0][0]
            kept = [item for item in kept if item[0] >= AUTO_RELATIVE_CUTOFF * best]
        for score, entity_id in kept:
            results.append(
                Disambiguation(
                    span=(span.token_start, span.token_end),
                    surface=span.surface,
                    entity=entity_id,
                    score=score,
                )
            )
    if len(results) > config.p:
        order = sorted(
            range(len(results)),
            key=lambda i: (-results[i].score, results[i].span, results[i].entity),
        )
        keep = set(order[: config.p])
        results = [d for i, d in enumerate(results) if i in keep]
    return results


# --- verbalization -----------------------------------------------------------

def _object_text(obj: EntityId | Literal, corpus: Corpus) -> str:
    if isinstance(obj, Literal):
        return obj.surface
    return corpus.label_of(obj)


def _object_mention(obj: EntityId | Literal, corpus: Corpus) -> Mention:
    if isinstance(obj, Literal):
        return (obj.surface, obj)
    return (corpus.label_of(obj), obj)


def verbalize_fact(fact: KBFact, corpus: Corpus) -> Evidence:
    """Comma-join the fact constituents: subject, predicate, object, then any
    qualifier predicate/object pairs. Every entity and literal becomes a mention."""
    parts = [corpus.label_of(fact.subject), fact.predicate, _object_text(fact.object, corpus)]
    mentions: list[Mention] = [
        (corpus.label_of(fact.subject), fact.subject),
        _object_mention(fact.object, corpus),
    ]
    for qualifier_predicate, qualifier_object in fact.qualifiers:
        parts.append(qualifier_predicate)
        parts.append(_object_text(qualifier_object, corpus))
        mentions.append(_object_mention(qualifier_object, corpus))
    return Evidence(
        evidence_id=f"kb:{fact.fact_id}",
        source=SOURCE_KB,
        text=", ".join(parts),
        mentions=tuple(mentions),
        provenance=("kb", fact.fact_id),
    )


def _anchor_mentions(page: WikiPage, corpus: Corpus, units: list[str]) -> list[Mention]:
    """Resolved page anchors whose surface occurs in any of the text units."""
    mentions = []
    for surface, target in page.anchors:
        if any(surface in unit for unit in units):
            entity_id = corpus.resolve_link(target)
            if entity_id is not None:
                mentions.append((surface, entity_id))
    return mentions


def _literal_mentions(units: list[str]) -> list[Mention]:
    """Whole units that normalize to a date, year or number."""
    mentions = []
    for unit in units:
        literal = normalize_literal(unit)
        if literal.kind != "string":
            mentions.append((unit, literal))
    return mentions


def sentence_evidences(page: WikiPage, corpus: Corpus) -> list[Evidence]:
    """One evidence per page sentence, title prepended; mentions come from
    anchors overlapping the sentence plus normalized date substrings."""
    evidences = []
    for index, sentence in enumerate(page.sentences):
        mentions = _anchor_mentions(page, corpus, [sentence])
        mentions.extend(scan_date_mentions(sentence))
        evidences.append(
            Evidence(
                evidence_id=f"text:{page.page_id}:{index}",
                source=SOURCE_TEXT,
                text=f"{page.title}, {sentence}",
                mentions=tuple(mentions),
                provenance=("text", page.page_id, index),
            )
        )
    return evidences


def verbalize_table_row(
    page: WikiPage, table_index: int, row_index: int, corpus: Corpus
) -> Evidence:
    """Linearize one table row as "<header> is <cell>" pairs, title prepended."""
    try:
        table = page.tables[table_index]
        row = table.rows[row_index]
    except IndexError:
        raise IndexError(
            f"page {page.page_id!r} has no table row ({table_index}, {row_index})"
        ) from None
    cells = [
        (header, cell) for header, cell in zip(table.headers, row) if cell.strip()
    ]
    text = ", ".join([page.title] + [f"{header} is {cell}" for header, cell in cells])
    units = [cell for _, cell in cells]
    mentions = _anchor_mentions(page, corpus, units)
    mentions.extend(_literal_mentions(units))
    return Evidence(
        evidence_id=f"table:{page.page_id}:{table_index}:{row_index}",
        source=SOURCE_TABLE,
        text=text,
        mentions=tuple(mentions),
        provenance=("table", page.page_id, table_index, row_index),
    )


def verbalize_infobox_entry(page: WikiPage, attribute: str, corpus: Corpus) -> Evidence:
    """Comma-join title, attribute and the attribute's value lines."""
    lines = page.infobox.lines_for(attribute) if page.infobox else None
    if lines is None:
        raise KeyError(f"page {page.page_id!r} infobox has no attribute {attribute!r}")
    text = ", ".join([page.title, attribute, *lines])
    mentions = _anchor_mentions(page, corpus, list(lines))
    mentions.extend(_literal_mentions(list(lines)))
    return Evidence(
        evidence_id=f"info:{page.page_id}:{attribute}",
        source=SOURCE_INFO,
        text=text,
        mentions=tuple(mentions),
        provenance=("info", page.page_id, attribute),
    )


def page_evidences(page: WikiPage, corpus: Corpus, sources: frozenset[str]) -> list[Evidence]:
    evidences = []
    if SOURCE_TEXT in sources:
        evidences.extend(sentence_evidences(page, corpus))
    if SOURCE_TABLE in sources:
        for table_index, table in enumerate(page.tables):
            for row_index in range(len(table.rows)):
                evidences.append(verbalize_table_row(page, table_index, row_index, corpus))
    if SOURCE_INFO in sources and page.infobox is not None:
        for attribute, _ in page.infobox.entries:
            evidences.append(verbalize_infobox_entry(page, attribute, corpus))
    return evidences


# --- retrieval ---------------------------------------------------------------

def sr_query_tokens(sr: StructuredRepresentation, include_type: bool = True) -> list[str]:
    """Frame tokens for retrieval: the serialized form with separators dropped."""
    return tokenize(sr.serialized(include_type=include_type))


def retrieve_evidences(
    query: StructuredRepresentation | str,
    corpus: Corpus,
    config: RetrieverConfig | None = None,
    anchors: list[Disambiguation] | None = None,
) -> list[Evidence]:
    """Entity-centric evidence collection for a frame or plain-text query.

    For every disambiguated entity (or pre-seeded anchor): its KB facts plus
    its page's sentence, table-row and infobox evidences, deduplicated by
    provenance, each stamped with the anchor that triggered retrieval.
    """
    config = config or RetrieverConfig()
    if anchors is None:
        if isinstance(query, StructuredRepresentation):
            tokens = sr_query_tokens(query, include_type=config.type_in_query)
        else:
            tokens = tokenize(query)
        anchors = disambiguate(tokens, corpus, config)
    collected: dict[str, Evidence] = {}
    for anchor in anchors:
        entity = corpus.entities.get(anchor.entity)
        if entity is None:
            continue
        batch: list[Evidence] = []
        if SOURCE_KB in config.sources:
            batch.extend(verbalize_fact(f, corpus) for f in corpus.facts_for_entity(entity.id))
        if entity.page_id is not None:
            page = corpus.pages.get(entity.page_id)
            if page is not None:
                batch.extend(page_evidences(page, corpus, config.sources))
        for evidence in batch:
            if evidence.evidence_id not in collected:
                collected[evidence.evidence_id] = replace(evidence, anchor=anchor)
    return list(collected.values())


# --- BM25 scoring ------------------------------------------------------------

@dataclass(frozen=True)
class Bm25Stats:
    """Per-question collection statistics; every evidence is one document."""

    n_docs: int
    avgdl: float
    document_frequency: dict[str, int]
    term_frequencies: dict[str, Counter]
    doc_lengths: dict[str, int]


def build_bm25_stats(evidences: list[Evidence]) -> Bm25Stats:
    term_frequencies = {}
    doc_lengths = {}
    document_frequency: Counter = Counter()
    for evidence in evidences:
        tokens = tokenize(evidence.text)
        counts = Counter(tokens)
        term_frequencies[evidence.evidence_id] = counts
        doc_lengths[evidence.evidence_id] = len(tokens)
        for term in counts:
            document_frequency[term] += 1
    n_docs = len(evidences)
    avgdl = (sum(doc_lengths.values()) / n_docs) if n_docs else 0.0
    return Bm25Stats(
        n_docs=n_docs,
        avgdl=avgdl,
        document_frequency=dict(document_frequency),
        term_frequencies=term_frequencies,
        doc_lengths=doc_lengths,
    )


def bm25_score(
    query_tokens: list[str],
    evidence: Evidence,
    stats: Bm25Stats,
    k1: float = 1.5,
    b: float = 0.75,
) -> float:
    """Okapi BM25 with the non-negative idf variant ln((N-n+0.5)/(n+0.5) + 1)."""
    counts = stats.term_frequencies.get(evidence.evidence_id)
    if counts is None:
        counts = Counter(tokenize(evidence.text))
        doc_len = sum(counts.values())
    else:
        doc_len = stats.doc_lengths[evidence.evidence_id]
    if stats.n_docs == 0 or stats.avgdl == 0:
        return 0.0
    score = 0.0
    for term in query_tokens:
        tf = counts.get(term, 0)
        if tf == 0:
            continue
        n = stats.document_frequency.get(term, 0)
        idf = math.log((stats.n_docs - n + 0.5) / (n + 0.5) + 1.0)
        score += idf * tf * (k1 + 1.0) / (tf + k1 * (1.0 - b + b * doc_len / stats.avgdl))
    return score


def query_terms(
    query: StructuredRepresentation | str,
    stopwords: frozenset[str],
    include_type: bool = True,
    predicate_first: bool = False,
) -> list[str]:
    """Scoring query: frame/plain text tokens with stopwords dropped."""
    if isinstance(query, StructuredRepresentation):
        text = query.serialized(include_type=include_type, predicate_first=predicate_first)
    else:
        text = query
    return [t for t in tokenize(text) if t not in stopwords]


def top_e(
    query: StructuredRepresentation | str,
    evidences: list[Evidence],
    config: RetrieverConfig | None = None,
    stopwords: frozenset[str] | None = None,
) -> list[RankedEvidence]:
    """Score all evidences against the query and keep the best e, ties broken
    by ascending evidence id; ranks are contiguous from 1."""
    from .textnorm import default_stopwords

    config = config or RetrieverConfig()
    stopwords = stopwords if stopwords is not None else default_stopwords()
    terms = query_terms(query, stopwords, include_type=config.type_in_query)
    stats = build_bm25_stats(evidences)
    scored = [
        (bm25_score(terms, evidence, stats, config.bm25_k1, config.bm25_b), evidence)
        for evidence in evidences
    ]
    scored.sort(key=lambda item: (-item[0], item[1].evidence_id))
    return [
        RankedEvidence(evidence=evidence, bm25=score, rank=rank)
        for rank, (score, evidence) in enumerate(scored[: config.e], start=1)
    ]


class Retriever:
    """Corpus + config bundle: one-call retrieve/rank used by the pipeline and
    the distant-supervision labeler."""

    def __init__(self, corpus: Corpus, config: RetrieverConfig | None = None):
        self.corpus = corpus
        self.config = config or RetrieverConfig()

    def retrieve(
        self,
        query: StructuredRepresentation | str,
        anchors: list[Disambiguation] | None = None,
    ) -> list[Evidence]:
        return retrieve_evidences(query, self.corpus, self.config, anchors=anchors)

    def rank(
        self, query: StructuredRepresentation | str, evidences: list[Evidence]
    ) -> list[RankedEvidence]:
        return top_e(query, evidences, self.config, self.corpus.stopwords)

    def run(
        self,
        query: StructuredRepresentation | str,
        anchors: list[Disambiguation] | None = None,
    ) -> list[RankedEvidence]:
        return self.rank(query, self.retrieve(query, anchors=anchors))
