"""
Detecting the classes in free text
==================================

Classification is the reverse of generation: anchor a template's literal
skeleton in the sentence, read the captured words back, then audit each
slot's relation against the lexicon. The score is the audited fraction.
"""
from importlib import resources

from antinomy import builtin_registry, classify, parse_lexicon, scan_corpus

source = (resources.files("antinomy") / "data" / "demo.lex").read_text()
lexicon = parse_lexicon(source)
registry = builtin_registry()

# a clean hit: every checked relation is backed by lexicon evidence
ranked = classify(lexicon, registry, "All is possible, the impossible too.")
top = ranked[0]
print(top.class_id, top.score, [(e.slot, e.kind.value) for e in top.evidence])

# evidence kinds vary with how the relation was satisfied:
# negated infinitive, suffix derivation, plain repetition
for sentence in ("Not to speak sometimes means to speak.",
                 "I hate the detesters.",
                 "Hell without hell."):
    top = classify(lexicon, registry, sentence)[0]
    kinds = ",".join(e.kind.value for e in top.evidence)
    print(f"{top.class_id:>3} {top.score:.2f} {kinds:<14} {sentence}")

# a sentence with the right shape but unknown words still matches the
# skeleton; unsatisfied relations pull the score to zero
weak = classify(lexicon, registry, "Gleeb without gleeb.")[0]
print(weak.class_id, weak.score)

# half-satisfied: two relations checked, one backed
half = classify(lexicon, registry, "Worst of the worst of the gleeb.")[0]
print(half.class_id, half.score, half.relations_satisfied, "of", half.relations_checked)

# scan_corpus filters at a threshold and tallies each line's best class
lines = [
    "All is possible, the impossible too.",
    "More pretty than beautiful.",
    "The weather is nice today.",
    "Silence of the noise.",
]
detections, counts = scan_corpus(lexicon, registry, lines, min_score=0.5)
print()
for d in detections:
    print(f"line {d.sentence_index}: class {d.class_id} at {d.score:.2f}")
print({c: n for c, n in counts.items() if n})
