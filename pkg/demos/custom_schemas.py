"""
Building your own template and lexicon
======================================

The built-in registry is just parsed template text; the same machinery
runs on templates and lexicons you write yourself.
"""
from antinomy import (Lexicon, Schema, SchemaKind, TemplateError, classify,
                      generate, parse_lexicon, parse_template, render_tokens)

# a lexicon is tab-separated text: surface, part of speech, synonyms, antonyms.
# antonym links may be one-directional in the source; parsing repairs them.
lexicon = parse_lexicon(
    "build\tV\tconstruct\tdestroy\n"
    "construct\tV\tbuild\t\n"
    "destroy\tV\t\t\n"
    "wall\tN\tfence\t\n"
    "fence\tN\twall\t\n"
)
assert isinstance(lexicon, Lexicon)
print("repairs made:", [str(r) for r in lexicon.report.repairs])

# slots: {V} base verb, {~V} its antonym, {N} base noun, {N:pl} its plural.
# slots of one symbol share a word group, and every group needs one bare
# base slot; "{N:pl} ... {~N}" alone would be rejected.
tokens = parse_template("To {V} {N:pl} is to {~V} the {N}.")
schema = Schema("demo", SchemaKind.PARADOX, tokens)
print(render_tokens(tokens))

out = generate(lexicon, schema, seed=5)
print(out.sentence)

# detection works against any schema list, not only the built-ins
ranked = classify(lexicon, [schema], out.sentence)
print(ranked[0].class_id, ranked[0].score)

# malformed templates are rejected with a reason kind
for bad in ("{N}{V} touching slots.", "{Q} unknown symbol.", "{~A} no base."):
    try:
        parse_template(bad)
    except TemplateError as err:
        print(f"{bad!r:<28} -> {err.kind}")
