"""Sentence generation: fill schema slots from a lexicon, deterministically.

All randomness flows through one SplitMix64 stream per sentence. Pools
are sorted before every draw and a draw happens exactly once per choice
point, so equal (lexicon, schema, seed, overrides) always yields the
identical sentence. Candidate filtering happens before sampling; a group
with an empty pool raises NoCandidateError instead of rejection loops.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .lexicon import Lexicon, PartOfSpeech
from .morphology import apply_derivations, indefinite_article, negated_infinitive
from .rng import SplitMix64, sub_seed
from .schema import ARTICLE_MARKER_RE, LiteralToken, Relation, Schema, SlotSpec


class GenerateError(Exception):
    """Base class for generation failures."""


class NoCandidateError(GenerateError):
    """No lexicon word can fill the group under the schema's constraints."""

    def __init__(self, class_id: str, group_id: int):
        super().__init__(f"class {class_id}: no candidate word for group {group_id}")
        self.class_id = class_id
        self.group_id = group_id


class BadOverrideError(GenerateError):
    """A --slot override names a word the group cannot accept."""

    def __init__(self, group_id: int, word: str, reason: str):
        super().__init__(f"override {group_id}={word}: {reason}")
        self.group_id = group_id
        self.word = word


@dataclass(frozen=True)
class Binding:
    """Chosen base word per group, plus every slot's realized surface."""

    bases: dict[int, str]
    realized: tuple[str, ...]


@dataclass(frozen=True)
class GeneratedSentence:
    class_id: str
    sentence: str
    seed: int
    binding: Binding


@dataclass(frozen=True)
class SkippedSchema:
    class_id: str
    reason: str


@dataclass(frozen=True)
class BatchResult:
    sentences: tuple[GeneratedSentence, ...]
    skips: tuple[SkippedSchema, ...]


def _needs_antonym(lexicon: Lexicon, specs: Sequence[SlotSpec], group_id: int) -> bool:
    return any(s.group_id == group_id and s.relation is Relation.ANTONYM for s in specs)


def _candidates(lexicon: Lexicon, pos: PartOfSpeech, need_antonym: bool) -> list[str]:
    words = lexicon.words(pos)
    if not need_antonym:
        return list(words)
    if pos is PartOfSpeech.VERB:
        # Verbs always qualify: "not to <verb>" stands in for a missing antonym.
        return list(words)
    return [w for w in words if lexicon.antonyms(w, pos)]


def _fix_articles(text: str) -> str:
    def repl(m) -> str:
        tail = text[m.end():].lstrip()
        article = indefinite_article(tail) if tail else "a"
        return article.capitalize() if m.group(0)[0] == "A" else article
    return ARTICLE_MARKER_RE.sub(repl, text)


def _capitalize_first(text: str) -> str:
    for i, c in enumerate(text):
        if c.isalpha():
            return text[:i] + c.upper() + text[i + 1:]
    return text


def generate(lexicon: Lexicon, schema: Schema, seed: int = 0,
             overrides: Mapping[int, str] | None = None) -> GeneratedSentence:
    """Produce one sentence from the schema.

    Base words are drawn per group from the sorted candidate pool, or
    taken from `overrides` (group id -> word) after validation. Antonym
    slots draw from the word's antonyms, falling back to "not to <verb>"
    for antonym-less verbs. Synonym-prime slots prefer a synonym that is
    neither the base nor already used by an earlier prime slot of the
    group, relaxing in that order until a pool is non-empty.
    """
    rng = SplitMix64(seed)
    specs = schema.slot_specs()
    overrides = dict(overrides or {})

    bases: dict[int, str] = {}
    for gid, _ordinals in schema.groups().items():
        pos = next(s.symbol for s in specs if s.group_id == gid)
        need_ant = _needs_antonym(lexicon, specs, gid)
        if gid in overrides:
            word = overrides[gid].lower()
            if lexicon.entry(word, pos) is None:
                raise BadOverrideError(gid, word, f"not a known {pos.value} word")
            if need_ant and word not in _candidates(lexicon, pos, True):
                raise BadOverrideError(gid, word, "word has no antonym and is not a verb")
            bases[gid] = word
            continue
        pool = _candidates(lexicon, pos, need_ant)
        if not pool:
            raise NoCandidateError(schema.class_id, gid)
        bases[gid] = rng.choice(pool)

    used_synonyms: dict[int, set[str]] = {gid: set() for gid in bases}
    realized: list[str] = []
    for spec in specs:
        base = bases[spec.group_id]
        if spec.relation is Relation.IDENTITY:
            word = base
        elif spec.relation is Relation.ANTONYM:
            antonyms = sorted(lexicon.antonyms(base, spec.symbol))
            if antonyms:
                word = rng.choice(antonyms)
            else:
                # Candidate filtering guarantees this branch only for verbs.
                word = negated_infinitive(base)
        else:
            synonyms = lexicon.synonyms(base, spec.symbol)
            used = used_synonyms[spec.group_id]
            for pool_set in (synonyms - used - {base}, synonyms - used, synonyms - {base}):
                if pool_set:
                    word = rng.choice(sorted(pool_set))
                    break
            else:
                word = base
            used_synonyms[spec.group_id].add(word)
        realized.append(apply_derivations(word, spec.derivations))

    parts = []
    slot_iter = iter(realized)
    for token in schema.tokens:
        parts.append(token.text if isinstance(token, LiteralToken) else next(slot_iter))
    sentence = _capitalize_first(_fix_articles("".join(parts)))
    return GeneratedSentence(schema.class_id, sentence, seed,
                             Binding(bases, tuple(realized)))


def generate_batch(lexicon: Lexicon, schemas: Sequence[Schema], seed: int,
                   count: int, overrides: Mapping[int, str] | None = None) -> BatchResult:
    """Generate `count` sentences per schema.

    Iteration is schema-major: item (schema i, repetition r) uses
    sub_seed(seed, i*count + r), so a skipped schema never shifts the
    seeds of later items. A schema whose pool comes up empty is skipped
    once and recorded; bad overrides are caller errors and propagate.
    """
    sentences: list[GeneratedSentence] = []
    skips: list[SkippedSchema] = []
    for i, schema in enumerate(schemas):
        for rep in range(count):
            item_seed = sub_seed(seed, i * count + rep)
            try:
                sentences.append(generate(lexicon, schema, item_seed, overrides))
            except NoCandidateError as err:
                skips.append(SkippedSchema(schema.class_id, str(err)))
                break
    return BatchResult(tuple(sentences), tuple(skips))
