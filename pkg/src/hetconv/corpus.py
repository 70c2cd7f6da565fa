"""Immutable heterogeneous knowledge store.

Holds KB facts, wiki-style pages (sentences, tables, infoboxes), an alias
lexicon for surface-form lookup and a page-title link dictionary. Loaded once
from a JSON snapshot directory and safe for concurrent reads afterwards.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from datetime import date as _date
from pathlib import Path
from typing import Iterator, Union

from .textnorm import default_stopwords, normalize_surface, parse_stopwords

EntityId = str


class SnapshotError(Exception):
    """Base error for snapshot ingestion problems."""


class SnapshotParseError(SnapshotError):
    """Malformed JSON in a snapshot file."""


class SnapshotIntegrityError(SnapshotError):
    """A cross-reference inside the snapshot does not resolve."""


class UnknownEntityError(KeyError):
    """Lookup of an entity id that is not part of the corpus."""


@dataclass(frozen=True)
class Literal:
    """A normalized constant: date ("YYYY-MM-DD"), year ("YYYY"), number or string."""

    kind: str  # "string" | "date" | "year" | "number"
    value: str
    surface: str

    def same_value(self, other: "Literal") -> bool:
        """Value equality at matching granularity (year 2011 != date 2011-04-17)."""
        return self.kind == other.kind and self.value == other.value

    def sort_key(self) -> str:
        return f"{self.kind}:{self.value}"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "value": self.value, "surface": self.surface}

    @classmethod
    def from_dict(cls, data: dict) -> "Literal":
        return cls(kind=data["kind"], value=data["value"], surface=data["surface"])


FactObject = Union[EntityId, Literal]


@dataclass(frozen=True)
class KBFact:
    fact_id: str
    subject: EntityId
    predicate: str
    object: FactObject
    qualifiers: tuple[tuple[str, FactObject], ...] = ()


@dataclass(frozen=True)
class Entity:
    id: EntityId
    label: str
    aliases: tuple[str, ...] = ()
    types: tuple[tuple[str, int], ...] = ()  # sorted by descending frequency
    page_id: str | None = None

    @property
    def main_type(self) -> str:
        """Most frequent type label, or blank when the entity is untyped."""
        return self.types[0][0] if self.types else ""

    @property
    def prior(self) -> int:
        """Popularity proxy used to rank ambiguous surface forms."""
        return max(1, sum(freq for _, freq in self.types))

    def surface_forms(self) -> Iterator[str]:
        yield self.label
        yield from self.aliases


@dataclass(frozen=True)
class Table:
    headers: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]
    caption: str | None = None


@dataclass(frozen=True)
class Infobox:
    entries: tuple[tuple[str, tuple[str, ...]], ...]

    def lines_for(self, attribute: str) -> tuple[str, ...] | None:
        for name, lines in self.entries:
            if name == attribute:
                return lines
        return None


@dataclass(frozen=True)
class WikiPage:
    page_id: str
    title: str
    entity: EntityId
    sentences: tuple[str, ...] = ()
    tables: tuple[Table, ...] = ()
    infobox: Infobox | None = None
    anchors: tuple[tuple[str, str], ...] = ()  # (surface, target page title)


@dataclass(frozen=True)
class AliasSpan:
    """A longest-match lexicon hit inside a piece of text."""

    surface: str
    token_start: int
    token_end: int  # exclusive
    key: str  # normalized lexicon key


@dataclass(frozen=True)
class Corpus:
    entities: dict[EntityId, Entity]
    facts_by_subject: dict[EntityId, tuple[KBFact, ...]]
    facts_by_object: dict[EntityId, tuple[KBFact, ...]]
    pages: dict[str, WikiPage]
    alias_lexicon: dict[str, tuple[tuple[EntityId, int], ...]]
    link_dictionary: dict[str, EntityId]
    stopwords: frozenset[str]
    max_alias_tokens: int = field(default=1)

    def facts_for_entity(self, entity_id: EntityId) -> list[KBFact]:
        """All facts touching the entity: subject facts first, then object/qualifier
        facts, each group ordered by fact id; a fact appears at most once."""
        if entity_id not in self.entities:
            raise UnknownEntityError(entity_id)
        subject_facts = sorted(self.facts_by_subject.get(entity_id, ()), key=lambda f: f.fact_id)
        seen = {f.fact_id for f in subject_facts}
        object_facts = [
            f
            for f in sorted(self.facts_by_object.get(entity_id, ()), key=lambda f: f.fact_id)
            if f.fact_id not in seen
        ]
        return subject_facts + object_facts

    def resolve_link(self, page_title: str) -> EntityId | None:
        """Exact-title lookup of a page link target; None when unknown."""
        return self.link_dictionary.get(page_title)

    def lookup_surface(self, surface: str) -> tuple[tuple[EntityId, int], ...]:
        return self.alias_lexicon.get(normalize_surface(surface), ())

    def find_alias_spans(self, tokens: list[str]) -> list[AliasSpan]:
        """Greedy leftmost-longest, non-overlapping lexicon matches over tokens."""
        spans = []
        i = 0
        n = len(tokens)
        while i < n:
            matched = None
            for width in range(min(self.max_alias_tokens, n - i), 0, -1):
                key = " ".join(tokens[i : i + width])
                if key in self.alias_lexicon:
                    matched = AliasSpan(surface=key, token_start=i, token_end=i + width, key=key)
                    break
            if matched is None:
                i += 1
            else:
                spans.append(matched)
                i = matched.token_end
        return spans

    def label_of(self, entity_id: EntityId) -> str:
        entity = self.entities.get(entity_id)
        return entity.label if entity else entity_id

    def to_dict(self) -> dict:
        """Stable serialized form, mainly for determinism checks and `ingest --out`."""
        return {
            "entities": [
                {
                    "id": e.id,
                    "label": e.label,
                    "aliases": list(e.aliases),
                    "types": [{"label": t, "freq": f} for t, f in e.types],
                    **({"page_id": e.page_id} if e.page_id else {}),
                }
                for e in sorted(self.entities.values(), key=lambda e: e.id)
            ],
            "facts": [
                {
                    "fact_id": f.fact_id,
                    "subject": f.subject,
                    "predicate": f.predicate,
                    "object": _object_to_dict(f.object),
                    "qualifiers": [
                        {"predicate": p, "object": _object_to_dict(o)} for p, o in f.qualifiers
                    ],
                }
                for f in sorted(
                    {f.fact_id: f for fs in self.facts_by_subject.values() for f in fs}.values(),
                    key=lambda f: f.fact_id,
                )
            ],
            "pages": [
                {
                    "page_id": p.page_id,
                    "title": p.title,
                    "entity": p.entity,
                    "sentences": list(p.sentences),
                    "tables": [
                        {
                            **({"caption": t.caption} if t.caption else {}),
                            "headers": list(t.headers),
                            "rows": [list(r) for r in t.rows],
                        }
                        for t in p.tables
                    ],
                    "infobox": [
                        {"attribute": a, "lines": list(lines)} for a, lines in p.infobox.entries
                    ]
                    if p.infobox
                    else [],
                    "anchors": [{"surface": s, "target": t} for s, t in p.anchors],
                }
                for p in sorted(self.pages.values(), key=lambda p: p.page_id)
            ],
            "links": dict(sorted(self.link_dictionary.items())),
            "stopwords": sorted(self.stopwords),
        }


def _object_to_dict(obj: FactObject) -> dict:
    if isinstance(obj, Literal):
        return {"literal": obj.surface}
    return {"entity": obj}


# --- literal normalization ---------------------------------------------------

_MONTHS = {
    "january": 1, "february": 2, "march": 3, "april": 4, "may": 5, "june": 6,
    "july": 7, "august": 8, "september": 9, "october": 10, "november": 11,
    "december": 12,
}
_MONTH_NAMES = "|".join(_MONTHS)

_DMY_RE = re.compile(rf"\b(\d{{1,2}})(?:st|nd|rd|th)?\s+({_MONTH_NAMES})\s+(\d{{3,4}})\b", re.I)
_MDY_RE = re.compile(rf"\b({_MONTH_NAMES})\s+(\d{{1,2}})(?:st|nd|rd|th)?\s*,?\s+(\d{{3,4}})\b", re.I)
_NUMERIC_DMY_RE = re.compile(r"\b(\d{1,2})-(\d{1,2})-(\d{4})\b")
_ISO_RE = re.compile(r"\b(\d{4})-(\d{2})-(\d{2})\b")
_YEAR_RE = re.compile(r"^\d{4}$")
_NUMBER_RE = re.compile(
    r"^[+-]?\d{1,3}(?:,\d{3})+(?:\.\d+)?(?:\s?[A-Za-z%][A-Za-z]*)?$"
    r"|^[+-]?\d+(?:\.\d+)?(?:\s?[A-Za-z%][A-Za-z]*)?$"
)
_UNIT_RE = re.compile(r"\s?([A-Za-z%][A-Za-z]*)$")


def _valid_date(year: int, month: int, day: int) -> str | None:
    try:
        return _date(year, month, day).isoformat()
    except ValueError:
        return None


def _parse_full_date(text: str) -> str | None:
    m = _DMY_RE.fullmatch(text)
    if m:
        return _valid_date(int(m.group(3)), _MONTHS[m.group(2).lower()], int(m.group(1)))
    m = _MDY_RE.fullmatch(text)
    if m:
        return _valid_date(int(m.group(3)), _MONTHS[m.group(1).lower()], int(m.group(2)))
    m = _NUMERIC_DMY_RE.fullmatch(text)
    if m:  # day-first reading of 11-06-1969
        return _valid_date(int(m.group(3)), int(m.group(2)), int(m.group(1)))
    m = _ISO_RE.fullmatch(text)
    if m:
        return _valid_date(int(m.group(1)), int(m.group(2)), int(m.group(3)))
    return None


def _canonical_number(text: str) -> str:
    unit = ""
    m = _UNIT_RE.search(text)
    if m:
        unit = m.group(1)
        text = text[: m.start()]
    digits = text.replace(",", "").strip()
    if "." in digits:
        digits = digits.rstrip("0").rstrip(".")
    sign = ""
    if digits and digits[0] in "+-":
        sign, digits = ("-" if digits[0] == "-" else ""), digits[1:]
    if "." in digits:
        whole, frac = digits.split(".", 1)
        digits = f"{int(whole or 0)}.{frac}"
    else:
        digits = str(int(digits or 0))
    value = sign + digits
    return f"{value} {unit}" if unit else value


def normalize_literal(text: str) -> Literal:
    """Classify a raw constant into date / year / number / string form.

    Recognizes "11 June 1969", "June 11, 1969", "April 17, 2011", day-first
    "11-06-1969", ISO dates, bare 4-digit years and decimal numbers with an
    optional unit suffix. Anything else passes through as a trimmed string.
    Total and idempotent on its own outputs.
    """
    stripped = " ".join(text.split())
    iso = _parse_full_date(stripped)
    if iso is not None:
        return Literal(kind="date", value=iso, surface=text)
    if _YEAR_RE.fullmatch(stripped):
        return Literal(kind="year", value=stripped, surface=text)
    if _NUMBER_RE.fullmatch(stripped):
        return Literal(kind="number", value=_canonical_number(stripped), surface=text)
    return Literal(kind="string", value=stripped, surface=text)


def scan_date_mentions(text: str) -> list[tuple[str, Literal]]:
    """Full-date substrings of text with their normalized literals."""
    found = []
    for pattern in (_DMY_RE, _MDY_RE, _NUMERIC_DMY_RE, _ISO_RE):
        for m in pattern.finditer(text):
            lit = normalize_literal(m.group(0))
            if lit.kind == "date":
                found.append((m.group(0), lit))
    seen: set[tuple[str, str]] = set()
    unique = []
    for surface, lit in found:
        if (surface, lit.value) not in seen:
            seen.add((surface, lit.value))
            unique.append((surface, lit))
    return unique


# --- snapshot loading --------------------------------------------------------

def load_snapshot(path: str | Path) -> Corpus:
    """Load and fully validate a snapshot directory into an immutable Corpus.

    Expects entities.json, facts.json, pages.json, links.json and an optional
    stopwords.txt (bundled default list used when absent). Every cross
    reference is checked; a dangling id raises SnapshotIntegrityError naming it.
    """
    root = Path(path)
    raw_entities = _read_json(root / "entities.json")
    raw_facts = _read_json(root / "facts.json")
    raw_pages = _read_json(root / "pages.json")
    raw_links = _read_json(root / "links.json")

    entities: dict[EntityId, Entity] = {}
    for record in raw_entities:
        entity_id = _require(record, "id", "entities.json")
        if entity_id in entities:
            raise SnapshotIntegrityError(f"duplicate entity id {entity_id!r}")
        types = tuple(
            sorted(
                ((t["label"], int(t["freq"])) for t in record.get("types", [])),
                key=lambda item: (-item[1], item[0]),
            )
        )
        entities[entity_id] = Entity(
            id=entity_id,
            label=_require(record, "label", "entities.json"),
            aliases=tuple(record.get("aliases", [])),
            types=types,
            page_id=record.get("page_id"),
        )

    facts_by_subject: dict[EntityId, list[KBFact]] = {}
    facts_by_object: dict[EntityId, list[KBFact]] = {}
    seen_fact_ids: set[str] = set()
    for record in raw_facts:
        fact_id = _require(record, "fact_id", "facts.json")
        if fact_id in seen_fact_ids:
            raise SnapshotIntegrityError(f"duplicate fact id {fact_id!r}")
        seen_fact_ids.add(fact_id)
        subject = _require(record, "subject", "facts.json")
        if subject not in entities:
            raise SnapshotIntegrityError(f"fact {fact_id!r} subject {subject!r} not in entities")
        obj = _parse_object(record.get("object"), fact_id, entities)
        qualifiers = tuple(
            (q["predicate"], _parse_object(q.get("object"), fact_id, entities))
            for q in record.get("qualifiers", [])
        )
        fact = KBFact(
            fact_id=fact_id,
            subject=subject,
            predicate=_require(record, "predicate", "facts.json"),
            object=obj,
            qualifiers=qualifiers,
        )
        facts_by_subject.setdefault(subject, []).append(fact)
        for target in _entity_objects(fact):
            facts_by_object.setdefault(target, []).append(fact)

    pages: dict[str, WikiPage] = {}
    for record in raw_pages:
        page = _parse_page(record, entities)
        if page.page_id in pages:
            raise SnapshotIntegrityError(f"duplicate page id {page.page_id!r}")
        pages[page.page_id] = page

    for entity in entities.values():
        if entity.page_id is not None and entity.page_id not in pages:
            raise SnapshotIntegrityError(
                f"entity {entity.id!r} references missing page {entity.page_id!r}"
            )

    link_dictionary: dict[str, EntityId] = {}
    for title, entity_id in raw_links.items():
        if entity_id not in entities:
            raise SnapshotIntegrityError(f"link {title!r} targets unknown entity {entity_id!r}")
        link_dictionary[title] = entity_id

    stopwords_path = root / "stopwords.txt"
    if stopwords_path.exists():
        stopwords = parse_stopwords(stopwords_path.read_text("utf-8"))
    else:
        stopwords = default_stopwords()

    alias_lexicon: dict[str, list[tuple[EntityId, int]]] = {}
    for entity in entities.values():
        for surface in entity.surface_forms():
            key = normalize_surface(surface)
            if not key:
                continue
            bucket = alias_lexicon.setdefault(key, [])
            if all(eid != entity.id for eid, _ in bucket):
                bucket.append((entity.id, entity.prior))
    frozen_lexicon = {
        key: tuple(sorted(bucket, key=lambda item: (-item[1], item[0])))
        for key, bucket in alias_lexicon.items()
    }
    max_alias_tokens = max((len(key.split()) for key in frozen_lexicon), default=1)

    return Corpus(
        entities=entities,
        facts_by_subject={k: tuple(v) for k, v in facts_by_subject.items()},
        facts_by_object={k: tuple(v) for k, v in facts_by_object.items()},
        pages=pages,
        alias_lexicon=frozen_lexicon,
        link_dictionary=link_dictionary,
        stopwords=stopwords,
        max_alias_tokens=max_alias_tokens,
    )


def _read_json(path: Path):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError:
        raise SnapshotError(f"missing snapshot file: {path}") from None
    except json.JSONDecodeError as exc:
        raise SnapshotParseError(f"{path}:{exc.lineno}: {exc.msg}") from None


def _require(record: dict, key: str, filename: str):
    try:
        return record[key]
    except KeyError:
        raise SnapshotParseError(f"{filename}: record missing required field {key!r}") from None


def _parse_object(raw, fact_id: str, entities: dict[EntityId, Entity]) -> FactObject:
    if not isinstance(raw, dict) or len(raw) != 1:
        raise SnapshotParseError(
            f"facts.json: fact {fact_id!r} object must be {{'entity': id}} or {{'literal': text}}"
        )
    if "entity" in raw:
        entity_id = raw["entity"]
        if entity_id not in entities:
            raise SnapshotIntegrityError(
                f"fact {fact_id!r} references unknown entity {entity_id!r}"
            )
        return entity_id
    if "literal" in raw:
        return normalize_literal(str(raw["literal"]))
    raise SnapshotParseError(f"facts.json: fact {fact_id!r} object has unknown shape")


def _entity_objects(fact: KBFact) -> Iterator[EntityId]:
    seen: set[EntityId] = set()
    candidates = [fact.object] + [obj for _, obj in fact.qualifiers]
    for obj in candidates:
        if isinstance(obj, str) and obj not in seen:
            seen.add(obj)
            yield obj


def _parse_page(record: dict, entities: dict[EntityId, Entity]) -> WikiPage:
    page_id = _require(record, "page_id", "pages.json")
    entity_id = _require(record, "entity", "pages.json")
    if entity_id not in entities:
        raise SnapshotIntegrityError(f"page {page_id!r} references unknown entity {entity_id!r}")
    sentences = tuple(record.get("sentences", []))
    if any(not s for s in sentences):
        raise SnapshotIntegrityError(f"page {page_id!r} contains an empty sentence")
    tables = []
    for index, raw_table in enumerate(record.get("tables", [])):
        headers = tuple(raw_table.get("headers", []))
        rows = tuple(tuple(row) for row in raw_table.get("rows", []))
        for row in rows:
            if len(row) != len(headers):
                raise SnapshotIntegrityError(
                    f"page {page_id!r} table {index} row width {len(row)} != {len(headers)} headers"
                )
        tables.append(Table(headers=headers, rows=rows, caption=raw_table.get("caption")))
    infobox_entries = tuple(
        (entry["attribute"], tuple(entry.get("lines", [])))
        for entry in record.get("infobox", [])
    )
    for attribute, _ in infobox_entries:
        if not attribute:
            raise SnapshotIntegrityError(f"page {page_id!r} has an empty infobox attribute")
    anchors = tuple((a["surface"], a["target"]) for a in record.get("anchors", []))
    page_text_units = list(sentences)
    page_text_units += [cell for table in tables for row in table.rows for cell in row]
    page_text_units += [line for _, lines in infobox_entries for line in lines]
    for surface, _ in anchors:
        if not any(surface in unit for unit in page_text_units):
            raise SnapshotIntegrityError(
                f"page {page_id!r} anchor surface {surface!r} not found in page content"
            )
    return WikiPage(
        page_id=page_id,
        title=_require(record, "title", "pages.json"),
        entity=entity_id,
        sentences=sentences,
        tables=tuple(tables),
        infobox=Infobox(entries=infobox_entries) if infobox_entries else None,
        anchors=anchors,
    )
