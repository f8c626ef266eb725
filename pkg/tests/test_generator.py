from __future__ import annotations

import pytest

from antinomy import (BadOverrideError, Lexicon, NoCandidateError, SchemaKind,
                      Schema, SplitMix64, generate, generate_batch, parse_lexicon,
                      parse_template, sub_seed)

# Published reference outputs for seed 0.
SEED0_OUTPUTS = (0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F)


def make_schema(class_id: str, dsl: str) -> Schema:
    return Schema(class_id, SchemaKind.PARADOX, parse_template(dsl))


def lex(source: str) -> Lexicon:
    parsed = parse_lexicon(source)
    assert isinstance(parsed, Lexicon), str(parsed)
    return parsed


def test_splitmix64_reference_outputs():
    rng = SplitMix64(0)
    assert tuple(rng.next_u64() for _ in range(3)) == SEED0_OUTPUTS


def test_splitmix64_seed_masked_to_64_bits():
    assert SplitMix64(1 << 64).next_u64() == SplitMix64(0).next_u64()


def test_sub_seed_is_nth_output():
    for seed in (0, 42, 2**63):
        rng = SplitMix64(seed)
        outputs = [rng.next_u64() for _ in range(5)]
        assert [sub_seed(seed, i) for i in range(5)] == outputs


def test_choice_empty_pool_raises():
    with pytest.raises(IndexError):
        SplitMix64(1).choice([])


def test_choice_depends_on_pool_order():
    a = SplitMix64(5).choice(["x", "y", "z"])
    b = SplitMix64(5).choice(["z", "y", "x"])
    assert {a, b} <= {"x", "y", "z"}
    # same draw, different pool order, different element unless it hit the middle
    assert (a == b) == (a == "y")


OPPOSITES = lex(
    "possible\tA\t\timpossible\n"
    "impossible\tA\t\tpossible\n"
)


def test_override_fills_the_base_group():
    schema = make_schema("1", "All is {A}, the {~A} too.")
    out = generate(OPPOSITES, schema, seed=3, overrides={0: "possible"})
    assert out.sentence == "All is possible, the impossible too."
    assert out.binding.bases == {0: "possible"}
    assert out.binding.realized == ("possible", "impossible")
    assert out.class_id == "1"
    assert out.seed == 3


def test_override_is_case_insensitive():
    schema = make_schema("1", "All is {A}, the {~A} too.")
    out = generate(OPPOSITES, schema, overrides={0: "Possible"})
    assert out.binding.bases == {0: "possible"}


def test_generation_is_deterministic():
    schema = make_schema("1", "All is {A}, the {~A} too.")
    runs = {generate(OPPOSITES, schema, seed=9).sentence for _ in range(5)}
    assert len(runs) == 1


def test_different_seeds_cover_the_pool():
    schema = make_schema("1", "All is {A}, the {~A} too.")
    seen = {generate(OPPOSITES, schema, seed=s).binding.bases[0] for s in range(20)}
    assert seen == {"possible", "impossible"}


def test_no_candidate_when_pos_is_empty():
    schema = make_schema("10", "{N} without {N}.")
    with pytest.raises(NoCandidateError) as err:
        generate(OPPOSITES, schema)
    assert err.value.class_id == "10"
    assert err.value.group_id == 0


def test_no_candidate_when_no_word_has_an_antonym():
    lonely = lex("lone\tA\t\t\n")
    schema = make_schema("16", "{~A} is {A}.")
    with pytest.raises(NoCandidateError):
        generate(lonely, schema)


def test_verb_without_antonym_negates_the_infinitive():
    verbs = lex("wait\tV\t\t\n")
    schema = make_schema("7", "To {V}, even when {~V}.")
    out = generate(verbs, schema)
    assert out.sentence == "To wait, even when not to wait."


def test_lexical_antonym_wins_over_negation():
    verbs = lex("appear\tV\t\tdisappear\ndisappear\tV\t\tappear\n")
    schema = make_schema("7", "To {V}, even when {~V}.")
    for seed in range(10):
        out = generate(verbs, schema, seed=seed)
        assert "not to" not in out.sentence


def test_synonym_primes_prefer_distinct_words():
    nouns = lex(
        "alpha\tN\tbeta,gamma\t\n"
        "beta\tN\talpha,gamma\t\n"
        "gamma\tN\talpha,beta\t\n"
    )
    schema = make_schema("20b", "{N} of the {N'} of the {N''}.")
    out = generate(nouns, schema, overrides={0: "alpha"})
    assert out.binding.realized[0] == "alpha"
    assert set(out.binding.realized[1:]) == {"beta", "gamma"}


def test_synonym_primes_relax_to_reuse_when_starved():
    nouns = lex("alpha\tN\tbeta\t\nbeta\tN\talpha\t\n")
    schema = make_schema("20b", "{N} of the {N'} of the {N''}.")
    out = generate(nouns, schema, overrides={0: "alpha"})
    # only one synonym exists, so the third slot falls back to the base
    assert out.binding.realized == ("alpha", "beta", "alpha")


def test_synonym_prime_without_any_synonym_repeats_the_base():
    nouns = lex("echo\tN\t\t\n")
    schema = make_schema("20a", "{N} of the {N'}.")
    out = generate(nouns, schema)
    assert out.sentence == "Echo of the echo."


def test_article_resolves_against_next_word():
    nouns = lex("end\tN\t\torigin\norigin\tN\t\tend\n")
    schema = make_schema("3n", "Only {N} is truly a(n) {~N}.")
    out = generate(nouns, schema, overrides={0: "end"})
    assert out.sentence == "Only end is truly an origin."
    out = generate(nouns, schema, overrides={0: "origin"})
    assert out.sentence == "Only origin is truly an end."


def test_capitalized_article_marker():
    nouns = lex("end\tN\t\torigin\norigin\tN\t\tend\n")
    schema = make_schema("17", "A(n) {~N} {N}.")
    out = generate(nouns, schema, overrides={0: "origin"})
    assert out.sentence == "An end origin."


def test_first_letter_is_capitalized():
    nouns = lex("hell\tN\t\t\n")
    schema = make_schema("10", "{N} without {N}.")
    out = generate(nouns, schema, overrides={0: "hell"})
    assert out.sentence == "Hell without hell."


def test_derivation_chain_realizes_on_the_synonym():
    verbs = lex("hate\tV\tdetest\t\ndetest\tV\thate\t\n")
    schema = make_schema("30", "I {V} the {V':agent+pl}.")
    out = generate(verbs, schema, overrides={0: "hate"})
    assert out.sentence == "I hate the detesters."
    assert out.binding.realized == ("hate", "detesters")


def test_gerund_slot():
    verbs = lex("strike\tV\t\t\n")
    schema = make_schema("14", "Let's {V} by not {V:ger}.")
    out = generate(verbs, schema, overrides={0: "strike"})
    assert out.sentence == "Let's strike by not striking."


def test_bad_override_unknown_word():
    schema = make_schema("1", "All is {A}, the {~A} too.")
    with pytest.raises(BadOverrideError) as err:
        generate(OPPOSITES, schema, overrides={0: "gleeb"})
    assert err.value.group_id == 0
    assert err.value.word == "gleeb"


def test_bad_override_word_without_antonym():
    mixed = lex("possible\tA\t\timpossible\nimpossible\tA\t\tpossible\nplain\tA\t\t\n")
    schema = make_schema("1", "All is {A}, the {~A} too.")
    with pytest.raises(BadOverrideError):
        generate(mixed, schema, overrides={0: "plain"})


def test_override_on_foreign_group_is_ignored():
    schema = make_schema("1", "All is {A}, the {~A} too.")
    out = generate(OPPOSITES, schema, seed=4, overrides={7: "possible"})
    assert out.sentence == generate(OPPOSITES, schema, seed=4).sentence


def test_batch_uses_schema_major_sub_seeds():
    schemas = [make_schema("1", "All is {A}, the {~A} too."),
               make_schema("16", "{~A} is {A}.")]
    batch = generate_batch(OPPOSITES, schemas, seed=11, count=3)
    assert len(batch.sentences) == 6
    assert batch.skips == ()
    for i, schema in enumerate(schemas):
        for rep in range(3):
            expect = generate(OPPOSITES, schema, sub_seed(11, i * 3 + rep))
            assert batch.sentences[i * 3 + rep] == expect


def test_batch_skip_does_not_shift_later_seeds():
    blocked = make_schema("10", "{N} without {N}.")  # no nouns in OPPOSITES
    good = make_schema("16", "{~A} is {A}.")
    batch = generate_batch(OPPOSITES, [blocked, good], seed=5, count=2)
    assert [s.class_id for s in batch.skips] == ["10"]
    assert len(batch.sentences) == 2
    for rep in range(2):
        assert batch.sentences[rep] == generate(OPPOSITES, good, sub_seed(5, 1 * 2 + rep))


def test_batch_skips_a_schema_once_not_per_repetition():
    blocked = make_schema("10", "{N} without {N}.")
    batch = generate_batch(OPPOSITES, [blocked], seed=0, count=50)
    assert len(batch.skips) == 1


def test_batch_count_zero():
    schemas = [make_schema("1", "All is {A}, the {~A} too.")]
    batch = generate_batch(OPPOSITES, schemas, seed=0, count=0)
    assert batch == generate_batch(OPPOSITES, schemas, seed=0, count=0)
    assert batch.sentences == () and batch.skips == ()


def test_batch_propagates_bad_overrides():
    schemas = [make_schema("1", "All is {A}, the {~A} too.")]
    with pytest.raises(BadOverrideError):
        generate_batch(OPPOSITES, schemas, seed=0, count=1, overrides={0: "gleeb"})


def test_full_registry_runs_on_bundled_lexicon(demo_lexicon, registry):
    batch = generate_batch(demo_lexicon, registry, seed=1, count=1)
    assert batch.skips == ()
    assert len(batch.sentences) == 36
    for sentence in batch.sentences:
        assert sentence.sentence[0].isupper() or not sentence.sentence[0].isalpha()
        assert "a(n)" not in sentence.sentence.lower()
