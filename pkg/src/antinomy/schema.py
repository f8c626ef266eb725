"""Template DSL: parsing, rendering, and the built-in class registry.

A template mixes literal text with slots. Slot grammar:

    slot  := "{" ["~"] symbol prime* [":" flag ("+" flag)*] ["#" digit] "}"
    symbol: N (noun), V (verb), A (attribute)
    ~     : fill with an antonym of the group's base word
    '     : synonym prime; {X'} and {X''} are distinct synonym picks
    flags : agent, ger, pl, neginf -- surface derivations, applied in order
    #d    : explicit group id; slots sharing a group share one base word

Slots without #d group implicitly: all unmarked slots of one symbol share
a group, numbered from the smallest id not claimed explicitly, in order
of first appearance. Every group needs one bare base slot (no ~, no
primes, no flags); the first such slot carries the group's base word.

The literal text "a(n)" is an article marker: generation resolves it
against the following word, detection accepts exactly one "a" or "an".
"""
from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field
from enum import Enum

from .lexicon import PartOfSpeech
from .morphology import Derivation

ARTICLE_MARKER_RE = re.compile(r"[Aa]\(n\)")

UNKNOWN_SYMBOL = "unknown-symbol"
UNBALANCED_BRACES = "unbalanced-braces"
ADJACENT_SLOTS = "adjacent-slots"
BAD_DERIVATION_FLAG = "bad-derivation-flag"
GROUP_CONFLICT = "group-conflict"
MISSING_BASE = "missing-base"


class TemplateError(ValueError):
    """Template rejected; `kind` is one of the module's error kind constants."""

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


class Relation(Enum):
    IDENTITY = "identity"
    ANTONYM = "antonym"
    SYNONYM = "synonym"


class SchemaKind(Enum):
    PARADOX = "paradox"
    SEMI_PARADOX = "semi-paradox"
    TAUTOLOGY = "tautology"


@dataclass(frozen=True)
class SlotSpec:
    symbol: PartOfSpeech
    relation: Relation
    prime: int
    derivations: tuple[Derivation, ...]
    group_id: int

    @property
    def is_base(self) -> bool:
        return (self.relation is Relation.IDENTITY and self.prime == 0
                and not self.derivations)


@dataclass(frozen=True)
class LiteralToken:
    text: str


@dataclass(frozen=True)
class SlotToken:
    spec: SlotSpec


Token = LiteralToken | SlotToken


@dataclass(frozen=True)
class Schema:
    class_id: str
    kind: SchemaKind
    tokens: tuple[Token, ...]
    label: str = field(default="", compare=False)

    @property
    def pattern(self) -> str:
        return render_tokens(self.tokens)

    def slot_specs(self) -> tuple[SlotSpec, ...]:
        """Slot specs in template order; index = the slot's ordinal."""
        return tuple(t.spec for t in self.tokens if isinstance(t, SlotToken))

    def groups(self) -> dict[int, tuple[int, ...]]:
        """group id -> slot ordinals, in order of first appearance."""
        out: dict[int, list[int]] = {}
        for i, spec in enumerate(self.slot_specs()):
            out.setdefault(spec.group_id, []).append(i)
        return {g: tuple(ix) for g, ix in out.items()}

    def base_ordinal(self, group_id: int) -> int:
        """Ordinal of the group's base slot (first bare slot of the group)."""
        for i, spec in enumerate(self.slot_specs()):
            if spec.group_id == group_id and spec.is_base:
                return i
        raise KeyError(group_id)


_FLAGS = {d.value: d for d in Derivation}

# flag -> (category it applies to, category it yields); "P" is terminal.
_TRANSITIONS = {
    Derivation.AGENTIVE: ("V", "N"),
    Derivation.GERUND: ("V", "N"),
    Derivation.PLURAL: ("N", "N"),
    Derivation.NEGATED_INFINITIVE: ("V", "P"),
}


@dataclass
class _RawSlot:
    tilde: bool
    symbol: PartOfSpeech
    prime: int
    derivations: tuple[Derivation, ...]
    explicit_group: int | None


def _parse_slot_body(body: str, at: int) -> _RawSlot:
    rest = body
    tilde = rest.startswith("~")
    if tilde:
        rest = rest[1:]
    if not rest or rest[0] not in "NVA":
        got = rest[:1] or "nothing"
        raise TemplateError(UNKNOWN_SYMBOL, f"unknown slot symbol {got!r} at offset {at}")
    symbol = PartOfSpeech(rest[0])
    rest = rest[1:]
    prime = 0
    while rest.startswith("'"):
        prime += 1
        rest = rest[1:]
    derivations: tuple[Derivation, ...] = ()
    if rest.startswith(":"):
        flag_text, had_hash, tail = rest[1:].partition("#")
        steps = []
        for name in flag_text.split("+"):
            if name not in _FLAGS:
                raise TemplateError(BAD_DERIVATION_FLAG, f"bad derivation flag {name!r} at offset {at}")
            steps.append(_FLAGS[name])
        derivations = tuple(steps)
        rest = ("#" + tail) if had_hash else ""
    explicit_group: int | None = None
    if rest.startswith("#"):
        digits = rest[1:]
        if len(digits) != 1 or not digits.isdigit():
            raise TemplateError(UNKNOWN_SYMBOL, f"bad group id {digits!r} at offset {at}")
        explicit_group = int(digits)
        rest = ""
    if rest:
        raise TemplateError(UNKNOWN_SYMBOL, f"unexpected {rest!r} in slot at offset {at}")

    category = symbol.value
    for step in derivations:
        needs, yields = _TRANSITIONS[step]
        if category != needs:
            raise TemplateError(
                BAD_DERIVATION_FLAG,
                f"flag {step.value!r} does not apply to {category} at offset {at}")
        category = yields
    return _RawSlot(tilde, symbol, prime, derivations, explicit_group)


def parse_template(dsl: str) -> tuple[Token, ...]:
    """Parse template text to a token sequence.

    Rejected templates raise TemplateError: stray or unclosed braces,
    unknown slot symbols, bad derivation flags, two slots with no
    literal text between them, groups mixing symbols, and groups
    without a bare base slot.
    """
    raw: list[LiteralToken | _RawSlot] = []
    i = 0
    literal_start = 0
    while i < len(dsl):
        c = dsl[i]
        if c == "}":
            raise TemplateError(UNBALANCED_BRACES, f"stray '}}' at offset {i}")
        if c != "{":
            i += 1
            continue
        close = dsl.find("}", i + 1)
        reopen = dsl.find("{", i + 1)
        if close == -1 or (reopen != -1 and reopen < close):
            raise TemplateError(UNBALANCED_BRACES, f"unclosed '{{' at offset {i}")
        literal = dsl[literal_start:i]
        if literal:
            raw.append(LiteralToken(literal))
        elif raw and isinstance(raw[-1], _RawSlot):
            raise TemplateError(ADJACENT_SLOTS, f"adjacent slots at offset {i}")
        raw.append(_parse_slot_body(dsl[i + 1:close], i))
        i = close + 1
        literal_start = i
    if literal_start < len(dsl):
        raw.append(LiteralToken(dsl[literal_start:]))

    slots = [r for r in raw if isinstance(r, _RawSlot)]
    used = {r.explicit_group for r in slots if r.explicit_group is not None}
    implicit: dict[PartOfSpeech, int] = {}
    assigned: list[int] = []
    for r in slots:
        if r.explicit_group is not None:
            assigned.append(r.explicit_group)
            continue
        if r.symbol not in implicit:
            g = 0
            while g in used:
                g += 1
            implicit[r.symbol] = g
            used.add(g)
        assigned.append(implicit[r.symbol])

    group_symbol: dict[int, PartOfSpeech] = {}
    for r, gid in zip(slots, assigned):
        if gid in group_symbol and group_symbol[gid] is not r.symbol:
            raise TemplateError(GROUP_CONFLICT, f"group {gid} mixes slot symbols")
        group_symbol.setdefault(gid, r.symbol)

    tokens: list[Token] = []
    it = iter(zip(slots, assigned))
    for r in raw:
        if isinstance(r, LiteralToken):
            tokens.append(r)
            continue
        slot, gid = next(it)
        relation = (Relation.ANTONYM if slot.tilde
                    else Relation.SYNONYM if slot.prime else Relation.IDENTITY)
        tokens.append(SlotToken(SlotSpec(slot.symbol, relation, slot.prime,
                                         slot.derivations, gid)))

    has_base = {gid: False for gid in group_symbol}
    for t in tokens:
        if isinstance(t, SlotToken) and t.spec.is_base:
            has_base[t.spec.group_id] = True
    for gid, ok in has_base.items():
        if not ok:
            raise TemplateError(MISSING_BASE, f"group {gid} has no bare base slot")
    return tuple(tokens)


def _implicit_ids(tokens: tuple[Token, ...]) -> list[int]:
    # Group ids the slots would get if no slot carried an explicit #d.
    implicit: dict[PartOfSpeech, int] = {}
    out = []
    for t in tokens:
        if not isinstance(t, SlotToken):
            continue
        sym = t.spec.symbol
        if sym not in implicit:
            implicit[sym] = len(implicit)
        out.append(implicit[sym])
    return out


def render_tokens(tokens: tuple[Token, ...]) -> str:
    """Render tokens back to template text.

    Explicit #d markers are emitted on every slot when the stored group
    ids differ from what implicit assignment would produce, otherwise on
    none; parse_template(render_tokens(t)) == t either way.
    """
    stored = [t.spec.group_id for t in tokens if isinstance(t, SlotToken)]
    explicit = stored != _implicit_ids(tokens)
    if explicit and any(g > 9 for g in stored):
        raise ValueError("group ids above 9 cannot be rendered")
    parts = []
    for t in tokens:
        if isinstance(t, LiteralToken):
            parts.append(t.text)
            continue
        s = t.spec
        body = "~" if s.relation is Relation.ANTONYM else ""
        body += s.symbol.value + "'" * s.prime
        if s.derivations:
            body += ":" + "+".join(d.value for d in s.derivations)
        if explicit:
            body += f"#{s.group_id}"
        parts.append("{" + body + "}")
    return "".join(parts)


def render_template(schema: Schema) -> str:
    return render_tokens(schema.tokens)


def class_sort_key(class_id: str) -> tuple[int, str]:
    """Natural order for class ids: 2a < 2n < 10, unparsable ids last."""
    m = re.fullmatch(r"(\d+)([a-z]*)", class_id)
    if m is None:
        return (10 ** 9, class_id)
    return (int(m.group(1)), m.group(2))


# One schema per pattern. Classes with several patterns get suffixed ids.
# 23 and 27 are intentionally byte-identical; detection ties resolve to 23.
_CLASS_TABLE: tuple[tuple[str, SchemaKind, str, str], ...] = (
    ("1", SchemaKind.PARADOX, "everything includes its opposite",
     "All is {A}, the {~A} too."),
    ("2n", SchemaKind.PARADOX, "the opposite makes a better noun",
     "{~N} is a better {N}."),
    ("2a", SchemaKind.PARADOX, "the opposite makes a better attribute",
     "{~A} is a better {A}."),
    ("2v", SchemaKind.PARADOX, "the opposite makes a better verb",
     "{~V} is a better {V}."),
    ("3n", SchemaKind.PARADOX, "only the noun is truly its opposite",
     "Only {N} is truly a(n) {~N}."),
    ("3a", SchemaKind.PARADOX, "only the attribute is truly its opposite",
     "Only {A} is truly a(n) {~A}."),
    ("4", SchemaKind.PARADOX, "so much so that it looks the opposite",
     "This is so {A}, that it looks {~A}."),
    ("5", SchemaKind.PARADOX, "both attributes at the same time",
     "There is some {N} which is {A} and {~A} at the same time."),
    ("6", SchemaKind.PARADOX, "does and undoes at the same time",
     "There is some {N} which {V} and really {~V} at the same time."),
    ("7", SchemaKind.PARADOX, "doing even while not doing",
     "To {V}, even when {~V}."),
    ("8", SchemaKind.PARADOX, "enough of its own opposite",
     "This {N} is enough {~N}."),
    ("9", SchemaKind.PARADOX, "refraining amounts to doing",
     "{~V} sometimes means to {V}."),
    ("10", SchemaKind.PARADOX, "a thing without itself",
     "{N} without {N}."),
    ("11a", SchemaKind.PARADOX, "the thing within its opposite",
     "{N} within the {~N}."),
    ("11b", SchemaKind.PARADOX, "the opposite in the thing",
     "{~N} in the {N}."),
    ("12", SchemaKind.PARADOX, "the attribute of its opposite",
     "The {A} of the {~A}."),
    ("13", SchemaKind.PARADOX, "doing what one cannot",
     "{V} what one {~V}."),
    ("14", SchemaKind.PARADOX, "acting by not acting",
     "Let's {V} by not {V:ger}."),
    ("15", SchemaKind.PARADOX, "a thing of its opposite",
     "{N} of the {~N}."),
    ("16", SchemaKind.PARADOX, "the opposite is the thing",
     "{~A} is {A}."),
    ("17", SchemaKind.PARADOX, "a thing qualified by its opposite",
     "A(n) {~N} {N}."),
    ("18", SchemaKind.PARADOX, "everything has both sides",
     "Everything has a(n) {A} and a(n) {~A}."),
    ("19", SchemaKind.PARADOX, "doing what is not done",
     "{V} what {~V}."),
    ("20a", SchemaKind.SEMI_PARADOX, "mirror repetition",
     "{N} of the {N'}."),
    ("20b", SchemaKind.SEMI_PARADOX, "double mirror repetition",
     "{N} of the {N'} of the {N''}."),
    ("21", SchemaKind.TAUTOLOGY, "not this but a synonym of it",
     "This is not a(n) {N}, this is a(n) {N'}."),
    ("22n", SchemaKind.TAUTOLOGY, "the noun is not enough of itself",
     "{N} is not enough {N'}."),
    ("22a", SchemaKind.TAUTOLOGY, "the attribute is not enough of itself",
     "{A} is not enough {A'}."),
    ("23", SchemaKind.TAUTOLOGY, "more than itself",
     "More {A} than {A'}."),
    ("24", SchemaKind.TAUTOLOGY, "how true is the so-called thing",
     "How {A#1} is a(n) {A'#1} {N#2}?"),
    ("25", SchemaKind.TAUTOLOGY, "none is really itself",
     "No {A} is really {A'}."),
    ("26", SchemaKind.TAUTOLOGY, "preferring a word over its synonym",
     "I would rather prefer {A}, than {A'}."),
    ("27", SchemaKind.TAUTOLOGY, "more than itself, second reading",
     "More {A} than {A'}."),
    ("28", SchemaKind.TAUTOLOGY, "doing back what is done to you",
     "{V} those who {V'} you."),
    ("29", SchemaKind.TAUTOLOGY, "because of doing it",
     "I {V} because I {V'}."),
    ("30", SchemaKind.TAUTOLOGY, "acting on one's own agents",
     "I {V} the {V':agent+pl}."),
)


@functools.lru_cache(maxsize=1)
def builtin_registry() -> tuple[Schema, ...]:
    """The 36 built-in schemas, in catalog order. Built once, immutable."""
    return tuple(
        Schema(class_id, kind, parse_template(dsl), label)
        for class_id, kind, label, dsl in _CLASS_TABLE
    )


CATALOG_HEADER = (
    "# class catalog: one schema per line, classId<TAB>kind<TAB>template\n"
    "# detection: slot captures span 1 to 3 tokens; ranking prefers score,\n"
    "# then literal token count, then the lower classId (so 23 beats 27,\n"
    "# whose template is identical by design)\n"
)


def dump_catalog(schemas: tuple[Schema, ...]) -> str:
    rows = [f"{s.class_id}\t{s.kind.value}\t{render_template(s)}" for s in schemas]
    return CATALOG_HEADER + "\n".join(rows) + "\n"


def load_catalog(text: str) -> tuple[Schema, ...]:
    """Read a catalog file; inverse of dump_catalog up to comments."""
    schemas = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise ValueError(f"catalog line {line_no}: expected 3 fields")
        class_id, kind_text, dsl = fields
        try:
            kind = SchemaKind(kind_text)
        except ValueError:
            raise ValueError(f"catalog line {line_no}: unknown kind {kind_text!r}") from None
        schemas.append(Schema(class_id, kind, parse_template(dsl)))
    return tuple(schemas)
