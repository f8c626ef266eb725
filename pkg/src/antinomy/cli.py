"""Command line front end: generate, detect, classes, lexicon validate.

Exit codes: 0 success, 1 bad input (unreadable or invalid lexicon,
unknown class, bad override, bad flag), 2 generation produced nothing
because every schema was skipped.
"""
from __future__ import annotations

import json
import sys
from importlib import resources
from pathlib import Path

import click

from .detector import scan_corpus
from .generator import BadOverrideError, GeneratedSentence, generate_batch
from .lexicon import Lexicon, ValidationReport, parse_lexicon
from .schema import Schema, builtin_registry, render_template

# Keep usage errors (bad flag values) on exit code 1; 2 is reserved for
# "nothing generated".
click.UsageError.exit_code = 1


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(1)


def _load_lexicon(path: str | None) -> Lexicon:
    if path is None:
        text = (resources.files("antinomy") / "data" / "demo.lex").read_text(encoding="utf-8")
    else:
        text = _read_text(path)
    parsed = parse_lexicon(text)
    if isinstance(parsed, ValidationReport):
        click.echo("lexicon rejected:", err=True)
        click.echo(str(parsed), err=True)
        sys.exit(1)
    return parsed


def _pick_schemas(class_id: str) -> list[Schema]:
    registry = builtin_registry()
    if class_id == "all":
        return list(registry)
    chosen = [s for s in registry if s.class_id == class_id]
    if not chosen:
        click.echo(f"error: unknown class {class_id!r}", err=True)
        sys.exit(1)
    return chosen


def _sentence_record(s: GeneratedSentence) -> str:
    return json.dumps({
        "class": s.class_id,
        "sentence": s.sentence,
        "seed": s.seed,
        "binding": {
            "bases": {str(g): w for g, w in sorted(s.binding.bases.items())},
            "realized": list(s.binding.realized),
        },
    })


@click.group()
def main() -> None:
    """Paradox and tautology sentences: generate them, detect them."""


@main.command()
@click.option("--lexicon", "lexicon_path", type=click.Path(), default=None,
              help="Lexicon file (defaults to the bundled demo lexicon).")
@click.option("--class", "class_id", default="all", show_default=True,
              help="Class id, or 'all'.")
@click.option("--count", type=click.IntRange(min=0), default=1, show_default=True,
              help="Sentences per class.")
@click.option("--seed", type=click.IntRange(min=0, max=2 ** 64 - 1), default=0,
              show_default=True, help="Batch seed.")
@click.option("--slot", "slot_options", multiple=True, metavar="GROUP=WORD",
              help="Pin a slot group's base word; repeatable.")
@click.option("--format", "fmt", type=click.Choice(["jsonl", "text"]),
              default="jsonl", show_default=True)
def generate(lexicon_path: str | None, class_id: str, count: int, seed: int,
             slot_options: tuple[str, ...], fmt: str) -> None:
    """Generate sentences from the built-in schemas."""
    lexicon = _load_lexicon(lexicon_path)
    schemas = _pick_schemas(class_id)
    overrides: dict[int, str] = {}
    for option in slot_options:
        group_text, sep, word = option.partition("=")
        if not sep or not group_text.isdigit() or not word:
            click.echo(f"error: bad --slot {option!r}, expected GROUP=WORD", err=True)
            sys.exit(1)
        overrides[int(group_text)] = word
    try:
        result = generate_batch(lexicon, schemas, seed, count, overrides)
    except BadOverrideError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(1)
    for skip in result.skips:
        click.echo(f"skipped: {skip.reason}", err=True)
    for sentence in result.sentences:
        click.echo(_sentence_record(sentence) if fmt == "jsonl" else sentence.sentence)
    if result.skips and not result.sentences:
        sys.exit(2)


@main.command()
@click.option("--lexicon", "lexicon_path", type=click.Path(), default=None,
              help="Lexicon file (defaults to the bundled demo lexicon).")
@click.option("--input", "input_path", default="-", show_default=True,
              help="File of sentences, one per line; '-' reads stdin.")
@click.option("--min-score", type=float, default=0.5, show_default=True,
              help="Keep detections scoring at least this.")
@click.option("--format", "fmt", type=click.Choice(["jsonl", "text"]),
              default="jsonl", show_default=True)
@click.option("--stats", is_flag=True,
              help="Print a per-class count table to stderr.")
def detect(lexicon_path: str | None, input_path: str, min_score: float,
           fmt: str, stats: bool) -> None:
    """Detect schema instances in text, one sentence per line."""
    lexicon = _load_lexicon(lexicon_path)
    registry = builtin_registry()
    text = sys.stdin.read() if input_path == "-" else _read_text(input_path)
    lines = text.splitlines()
    detections, counts = scan_corpus(lexicon, registry, lines, min_score)
    for d in detections:
        if fmt == "jsonl":
            click.echo(json.dumps({
                "line": d.sentence_index,
                "class": d.class_id,
                "score": d.score,
                "evidence": [{"slot": e.slot, "kind": e.kind.value} for e in d.evidence],
                "binding": {
                    "bases": {str(g): w for g, w in sorted(d.binding.bases.items())},
                    "realized": list(d.binding.realized),
                },
            }))
        else:
            click.echo(f"{d.sentence_index}\t{d.class_id}\t{d.score:.3f}\t"
                       f"{lines[d.sentence_index]}")
    if stats:
        for class_id in counts:
            click.echo(f"{class_id}\t{counts[class_id]}", err=True)


@main.command()
@click.option("--id", "class_id", default=None, help="Show a single class.")
def classes(class_id: str | None) -> None:
    """List the built-in classes as classId<TAB>kind<TAB>template."""
    registry = builtin_registry()
    if class_id is not None:
        registry = tuple(s for s in registry if s.class_id == class_id)
        if not registry:
            click.echo(f"error: unknown class {class_id!r}", err=True)
            sys.exit(1)
    for schema in registry:
        click.echo(f"{schema.class_id}\t{schema.kind.value}\t{render_template(schema)}")


@main.group("lexicon")
def lexicon_group() -> None:
    """Lexicon file utilities."""


@lexicon_group.command("validate")
@click.argument("path", type=click.Path())
def lexicon_validate(path: str) -> None:
    """Parse a lexicon file and report defects and repairs."""
    parsed = parse_lexicon(_read_text(path))
    if isinstance(parsed, ValidationReport):
        click.echo(str(parsed))
        sys.exit(1)
    report = parsed.report
    if report.repairs:
        click.echo(str(report))
    click.echo(f"ok: {len(parsed)} entries, {len(report.repairs)} repairs")


if __name__ == "__main__":
    main()
