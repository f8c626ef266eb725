"""Detection: anchor a schema's literal skeleton, then audit relations.

Matching is two-phase. Phase one aligns the whole normalized token
sequence against the schema: literals must appear verbatim, slots
capture one to three tokens, shortest capture first, leftmost binding
wins. Phase two checks each non-base slot's relation to its group base
and records one evidence item per satisfied relation. The skeleton
decides whether a sentence has a schema's shape; the relations decide
the score. An unknown base word leaves its relations checked but
unsatisfied, so a skeleton-only match scores 0.
"""
from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .generator import Binding
from .lexicon import Lexicon, PartOfSpeech
from .morphology import agentive_bases, apply_derivations, gerund_bases, plural_bases
from .schema import (ARTICLE_MARKER_RE, Relation, Schema, SlotSpec, SlotToken,
                     class_sort_key)

MAX_SLOT_SPAN = 3

_WORD_RE = re.compile(r"[a-z0-9]+(?:['\-][a-z0-9]+)*|[^a-z0-9\s]")


def normalize(sentence: str) -> tuple[str, ...]:
    """Lowercased tokens; punctuation splits off, but a hyphen or
    apostrophe between letters stays inside its word ("non-diary",
    "don't"). Typographic apostrophes are folded to plain ones."""
    text = sentence.lower().replace("’", "'")
    return tuple(_WORD_RE.findall(text))


class EvidenceKind(Enum):
    LEX_ANTONYM = "LexAntonym"
    LEX_SYNONYM = "LexSynonym"
    NEG_INF = "NegInf"
    SUFFIX_INVERSE = "SuffixInverse"
    IDENTITY_REPEAT = "IdentityRepeat"


@dataclass(frozen=True)
class Evidence:
    slot: int
    kind: EvidenceKind


@dataclass(frozen=True)
class Detection:
    class_id: str
    binding: Binding
    score: float
    relations_checked: int
    relations_satisfied: int
    sentence_index: int
    evidence: tuple[Evidence, ...]


@dataclass(frozen=True)
class _Lit:
    tokens: tuple[str, ...]


@dataclass(frozen=True)
class _Article:
    pass


@dataclass(frozen=True)
class _Slot:
    ordinal: int


@functools.lru_cache(maxsize=512)
def _compile(schema: Schema) -> tuple[tuple[_Lit | _Article | _Slot, ...], int]:
    """Schema -> match elements + literal token count (used for ranking).

    Article markers become their own element accepting "a" or "an" and
    count as one literal token.
    """
    elements: list[_Lit | _Article | _Slot] = []
    literal_count = 0
    ordinal = 0

    def push_literal(text: str) -> None:
        nonlocal literal_count
        toks = normalize(text)
        if toks:
            elements.append(_Lit(toks))
            literal_count += len(toks)

    for token in schema.tokens:
        if isinstance(token, SlotToken):
            elements.append(_Slot(ordinal))
            ordinal += 1
            continue
        pos = 0
        for m in ARTICLE_MARKER_RE.finditer(token.text):
            push_literal(token.text[pos:m.start()])
            elements.append(_Article())
            literal_count += 1
            pos = m.end()
        push_literal(token.text[pos:])
    return tuple(elements), literal_count


def _align(elements: Sequence[_Lit | _Article | _Slot],
           tokens: tuple[str, ...]) -> dict[int, tuple[int, int]] | None:
    """First alignment in shortest-capture order, or None."""
    n = len(tokens)

    def rec(ei: int, pos: int) -> dict[int, tuple[int, int]] | None:
        if ei == len(elements):
            return {} if pos == n else None
        el = elements[ei]
        if isinstance(el, _Lit):
            end = pos + len(el.tokens)
            if tokens[pos:end] == el.tokens:
                return rec(ei + 1, end)
            return None
        if isinstance(el, _Article):
            if pos < n and tokens[pos] in ("a", "an"):
                return rec(ei + 1, pos + 1)
            return None
        for span in range(1, MAX_SLOT_SPAN + 1):
            if pos + span > n:
                break
            rest = rec(ei + 1, pos + span)
            if rest is not None:
                rest[el.ordinal] = (pos, pos + span)
                return rest
        return None

    return rec(0, 0)


def _check_relation(lexicon: Lexicon, spec: SlotSpec, base: str,
                    base_span: tuple[str, ...], realized: str,
                    span: tuple[str, ...]) -> EvidenceKind | None:
    """Evidence kind if the slot's relation to its base holds, else None."""
    if lexicon.entry(base, spec.symbol) is None:
        return None
    if spec.relation is Relation.IDENTITY:
        if spec.derivations:
            if realized == apply_derivations(base, spec.derivations):
                return EvidenceKind.SUFFIX_INVERSE
            return None
        return EvidenceKind.IDENTITY_REPEAT if realized == base else None
    if spec.relation is Relation.ANTONYM:
        antonyms = lexicon.antonyms(base, spec.symbol)
        if spec.derivations:
            if any(apply_derivations(a, spec.derivations) == realized for a in antonyms):
                return EvidenceKind.SUFFIX_INVERSE
            return None
        if realized in antonyms:
            return EvidenceKind.LEX_ANTONYM
        if spec.symbol is PartOfSpeech.VERB and span == ("not", "to") + base_span:
            return EvidenceKind.NEG_INF
        return None
    synonyms = lexicon.synonyms(base, spec.symbol)
    if spec.derivations:
        if any(apply_derivations(s, spec.derivations) == realized for s in synonyms):
            return EvidenceKind.SUFFIX_INVERSE
        return None
    if realized in synonyms:
        return EvidenceKind.LEX_SYNONYM
    stripped: set[str] = set()
    for invert in (plural_bases, agentive_bases, gerund_bases):
        stripped.update(invert(realized))
    if stripped & synonyms:
        return EvidenceKind.SUFFIX_INVERSE
    return None


def _match_tokens(lexicon: Lexicon, schema: Schema, tokens: tuple[str, ...],
                  sentence_index: int) -> Detection | None:
    elements, _count = _compile(schema)
    captures = _align(elements, tokens)
    if captures is None:
        return None
    specs = schema.slot_specs()
    spans = {i: tokens[captures[i][0]:captures[i][1]] for i in captures}
    joined = {i: "-".join(spans[i]) for i in captures}
    bases = {gid: joined[schema.base_ordinal(gid)] for gid in schema.groups()}

    checked = satisfied = 0
    evidence: list[Evidence] = []
    for i, spec in enumerate(specs):
        base_ordinal = schema.base_ordinal(spec.group_id)
        if i == base_ordinal:
            continue
        checked += 1
        kind = _check_relation(lexicon, spec, bases[spec.group_id],
                               spans[base_ordinal], joined[i], spans[i])
        if kind is not None:
            satisfied += 1
            evidence.append(Evidence(i, kind))
    score = satisfied / checked if checked else 1.0
    binding = Binding(bases, tuple(joined[i] for i in range(len(specs))))
    return Detection(schema.class_id, binding, score, checked, satisfied,
                     sentence_index, tuple(evidence))


def match_schema(lexicon: Lexicon, schema: Schema, sentence: str,
                 sentence_index: int = 0) -> Detection | None:
    """Match one schema against one sentence; None when the skeleton is absent."""
    return _match_tokens(lexicon, schema, normalize(sentence), sentence_index)


def classify(lexicon: Lexicon, registry: Sequence[Schema], sentence: str,
             sentence_index: int = 0) -> list[Detection]:
    """All matching schemas, best first.

    Ranking: score, then literal token count (more anchoring text wins),
    then the natural class id order, so byte-identical patterns resolve
    to the lower id.
    """
    tokens = normalize(sentence)
    if not tokens:
        return []
    ranked: list[tuple[float, int, tuple[int, str], Detection]] = []
    for schema in registry:
        detection = _match_tokens(lexicon, schema, tokens, sentence_index)
        if detection is None:
            continue
        _elements, literal_count = _compile(schema)
        ranked.append((-detection.score, -literal_count,
                       class_sort_key(schema.class_id), detection))
    ranked.sort(key=lambda item: item[:3])
    return [item[3] for item in ranked]


def scan_corpus(lexicon: Lexicon, registry: Sequence[Schema], lines: Iterable[str],
                min_score: float = 0.5) -> tuple[list[Detection], dict[str, int]]:
    """Classify each line; keep detections scoring at or above min_score.

    The count table tallies each line's top kept detection only, so one
    line increments one class, and starts at zero for every registry
    class.
    """
    counts = {schema.class_id: 0 for schema in registry}
    detections: list[Detection] = []
    for index, line in enumerate(lines):
        kept = [d for d in classify(lexicon, registry, line, sentence_index=index)
                if d.score >= min_score]
        detections.extend(kept)
        if kept:
            counts[kept[0].class_id] += 1
    return detections, counts
