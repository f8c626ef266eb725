"""Tab-separated synonym/antonym lexicon: parsing, validation, repair.

One entry per line: ``surface<TAB>pos<TAB>synonyms<TAB>antonyms`` with
comma-separated word lists. `#` lines and blank lines are skipped.
Antonymy is kept symmetric by construction: a one-directional antonym
pair is repaired (the reverse direction is added) and the repair is
reported. Synonym lists stay directed, as thesaurus sources have them.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

POS_LETTERS = ("N", "V", "A")


class PartOfSpeech(Enum):
    NOUN = "N"
    VERB = "V"
    ATTRIBUTE = "A"


@dataclass(frozen=True)
class LexEntry:
    surface: str
    pos: PartOfSpeech
    synonyms: frozenset[str]
    antonyms: frozenset[str]


@dataclass(frozen=True)
class MalformedLine:
    line_no: int
    reason: str

    def __str__(self) -> str:
        return f"line {self.line_no}: malformed line ({self.reason})"


@dataclass(frozen=True)
class DuplicateEntry:
    surface: str
    pos: PartOfSpeech
    line_no: int

    def __str__(self) -> str:
        return f"line {self.line_no}: duplicate entry {self.surface}/{self.pos.value}"


@dataclass(frozen=True)
class DanglingReference:
    from_word: str
    to_word: str

    def __str__(self) -> str:
        return f"dangling reference: {self.from_word} -> {self.to_word}"


Defect = MalformedLine | DuplicateEntry | DanglingReference


@dataclass(frozen=True)
class SymmetryRepair:
    """`surface` gained `antonym` to restore symmetric antonymy."""

    surface: str
    pos: PartOfSpeech
    antonym: str

    def __str__(self) -> str:
        return f"repair: added {self.antonym} to antonyms of {self.surface}/{self.pos.value}"


@dataclass(frozen=True)
class SelfReferenceDropped:
    """A word listed itself as its own antonym; the reference was dropped."""

    surface: str
    pos: PartOfSpeech
    line_no: int

    def __str__(self) -> str:
        return f"repair: line {self.line_no}: dropped self-antonym of {self.surface}/{self.pos.value}"


Repair = SymmetryRepair | SelfReferenceDropped


@dataclass(frozen=True)
class ValidationReport:
    defects: tuple[Defect, ...] = ()
    repairs: tuple[Repair, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.defects

    def __str__(self) -> str:
        lines = [str(d) for d in self.defects] + [str(r) for r in self.repairs]
        return "\n".join(lines) if lines else "ok"


class Lexicon:
    """Immutable word store keyed by (surface, pos). Lookups are case-insensitive."""

    def __init__(self, entries: Mapping[tuple[str, PartOfSpeech], LexEntry],
                 report: ValidationReport | None = None):
        self._entries = dict(entries)
        self.report = report if report is not None else ValidationReport()

    @classmethod
    def empty(cls) -> "Lexicon":
        return cls({})

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        # The attached report is provenance, not content.
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self._entries == other._entries

    def __contains__(self, key: tuple[str, PartOfSpeech]) -> bool:
        surface, pos = key
        return (surface.lower(), pos) in self._entries

    def entries(self) -> tuple[LexEntry, ...]:
        return tuple(self._entries[k] for k in sorted(self._entries, key=_entry_key))

    def entry(self, surface: str, pos: PartOfSpeech) -> LexEntry | None:
        return self._entries.get((surface.lower(), pos))

    def words(self, pos: PartOfSpeech) -> tuple[str, ...]:
        """All surfaces of one part of speech, sorted."""
        return tuple(sorted(s for (s, p) in self._entries if p is pos))

    def synonyms(self, surface: str, pos: PartOfSpeech) -> frozenset[str]:
        """Synonym set of the word, always including the word itself."""
        surface = surface.lower()
        e = self._entries.get((surface, pos))
        if e is None:
            return frozenset({surface})
        return e.synonyms | {surface}

    def antonyms(self, surface: str, pos: PartOfSpeech) -> frozenset[str]:
        """Antonym set of the word; empty for unknown words."""
        e = self._entries.get((surface.lower(), pos))
        return e.antonyms if e is not None else frozenset()


def _entry_key(key: tuple[str, PartOfSpeech]) -> tuple[str, str]:
    surface, pos = key
    return (surface, pos.value)


def _split_words(field_text: str) -> list[str]:
    words = []
    for w in field_text.split(","):
        w = w.strip().lower()
        if w and w not in words:
            words.append(w)
    return words


def parse_lexicon(source: str) -> Lexicon | ValidationReport:
    """Parse lexicon text; a report (instead of a lexicon) means rejection.

    Unrecoverable defects: malformed lines, duplicate (surface, pos)
    entries, references to words with no entry under the same pos.
    Recoverable, repaired with a report entry: one-directional antonym
    pairs, self-antonyms. A returned Lexicon carries its repair report
    in `.report`.
    """
    defects: list[Defect] = []
    repairs: list[Repair] = []
    parsed: dict[tuple[str, PartOfSpeech], tuple[list[str], list[str]]] = {}
    order: list[tuple[str, PartOfSpeech]] = []

    for line_no, line in enumerate(source.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 4:
            defects.append(MalformedLine(line_no, f"expected 4 tab-separated fields, got {len(fields)}"))
            continue
        surface = fields[0].strip().lower()
        pos_text = fields[1].strip().upper()
        if not surface or any(c.isspace() for c in surface):
            defects.append(MalformedLine(line_no, f"bad surface {fields[0]!r}"))
            continue
        if pos_text not in POS_LETTERS:
            defects.append(MalformedLine(line_no, f"bad pos {fields[1]!r}"))
            continue
        pos = PartOfSpeech(pos_text)
        bad_word = next((w for w in fields[2].split(",") + fields[3].split(",")
                         if any(c.isspace() for c in w.strip())), None)
        if bad_word is not None:
            defects.append(MalformedLine(line_no, f"word with whitespace {bad_word!r}"))
            continue
        key = (surface, pos)
        if key in parsed:
            defects.append(DuplicateEntry(surface, pos, line_no))
            continue
        synonyms = _split_words(fields[2])
        antonyms = _split_words(fields[3])
        if surface in antonyms:
            antonyms.remove(surface)
            repairs.append(SelfReferenceDropped(surface, pos, line_no))
        parsed[key] = (synonyms, antonyms)
        order.append(key)

    # References must resolve within the same part of speech.
    for key in order:
        surface, pos = key
        synonyms, antonyms = parsed[key]
        for ref in synonyms + antonyms:
            if (ref, pos) not in parsed:
                defects.append(DanglingReference(surface, ref))

    if defects:
        return ValidationReport(tuple(defects), tuple(repairs))

    # Symmetric closure over antonyms, among existing entries only.
    for key in order:
        surface, pos = key
        for ant in sorted(parsed[key][1]):
            back = parsed[(ant, pos)][1]
            if surface not in back:
                back.append(surface)
                repairs.append(SymmetryRepair(ant, pos, surface))

    entries = {
        key: LexEntry(key[0], key[1], frozenset(parsed[key][0]), frozenset(parsed[key][1]))
        for key in order
    }
    return Lexicon(entries, ValidationReport(repairs=tuple(repairs)))


def serialize_lexicon(lexicon: Lexicon) -> str:
    """Render a lexicon back to its file format, sorted, one entry per line."""
    lines = []
    for e in lexicon.entries():
        lines.append("\t".join([
            e.surface,
            e.pos.value,
            ",".join(sorted(e.synonyms)),
            ",".join(sorted(e.antonyms)),
        ]))
    return "\n".join(lines) + ("\n" if lines else "")
