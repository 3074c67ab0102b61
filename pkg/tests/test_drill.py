import json
import random
from collections import Counter

import pytest

from birealize import check_answer, errors, load_patterns, make_exercise, tokenize
from birealize.drill import (
    Variation,
    draw_variation,
    instantiate_pattern,
    instantiate_with_choices,
    run_drill,
)


@pytest.fixture(scope="module")
def patterns(engine):
    return load_patterns(engine)


def by_id(patterns, pid):
    return next(p for p in patterns if p.id == pid)


# ------------------------------------------------------------- tokenize

def test_tokenize_transcript_inventory():
    assert tokenize("L'enfant peut manger les melons d'eau.") == \
        ["L", "'", "enfant", "peut", "manger", "les", "melons", "d", "'", "eau", "."]
    assert tokenize("The children love avocados.") == \
        ["The", "children", "love", "avocados", "."]
    assert tokenize("") == []


def test_tokenize_splits_inversion_hyphens():
    assert tokenize("L'enfant adorera-t-il les melons d'eau?") == \
        ["L", "'", "enfant", "adorera", "-", "t", "-", "il",
         "les", "melons", "d", "'", "eau", "?"]


# ------------------------------------------------------------- patterns

def test_shipped_pattern_set(patterns):
    ids = {p.id for p in patterns}
    assert "F-02" in ids
    assert len(patterns) >= 6
    f02 = by_id(patterns, "F-02")
    assert f02.level == 0
    assert len(f02.slots) == len(f02.roles) == 5


def test_pattern_file_validation(engine):
    with pytest.raises(errors.ValidationError):
        load_patterns(engine, json.dumps(
            {"patterns": [{"id": "X", "level": 0, "fr": "nope_fr", "en": "nope_en",
                           "params": []}]}).encode())
    with pytest.raises(errors.ValidationError):
        load_patterns(engine, json.dumps(
            {"patterns": [{"id": "X", "level": 0, "fr": "copula_adjective_fr",
                           "en": "copula_adjective_en", "params": [[["s", "s"]]]}]}).encode())
    with pytest.raises(errors.ValidationError):
        load_patterns(engine, json.dumps(
            {"patterns": [{"id": "X", "level": 0, "fr": "copula_adjective_fr",
                           "en": "copula_adjective_en",
                           "params": [[["s", "s"]], [["mère", "mother"]],
                                      [[{"frag": "ghost"}, "happy"]]]}]}).encode())


# -------------------------------------------------------- instantiation

def test_transcript_exercise_one(engine, patterns):
    # the modal pair (pouvoir+adorer / can+love) with no variation
    f02 = by_id(patterns, "F-02")
    chain = next(i for i, pair in enumerate(f02.slots[2]) if pair[1] == ["can", "love"])
    the = next(i for i, pair in enumerate(f02.slots[3]) if pair[0] == "le")
    melon = next(i for i, pair in enumerate(f02.slots[4])
                 if pair[1].lemma == "watermelon")
    src, tgt, _ = instantiate_with_choices(
        engine, f02, [0, 0, chain, the, melon], Variation("p", {}), "en-fr")
    assert engine.realize(src).text == "The child can love the watermelons."
    assert engine.realize(tgt).text == "L'enfant peut adorer les melons d'eau."


def test_transcript_exercise_two(engine, patterns):
    f02 = by_id(patterns, "F-02")
    love = next(i for i, pair in enumerate(f02.slots[2]) if pair[1] == "love")
    the = next(i for i, pair in enumerate(f02.slots[3]) if pair[0] == "le")
    melon = next(i for i, pair in enumerate(f02.slots[4])
                 if pair[1].lemma == "watermelon")
    src, tgt, _ = instantiate_with_choices(
        engine, f02, [0, 0, love, the, melon], Variation("f", {"int": "yon"}), "en-fr")
    assert engine.realize(src).text == "Will the child love the watermelons?"
    assert engine.realize(tgt).text == "L'enfant adorera-t-il les melons d'eau?"


def test_transcript_exercise_three(engine, patterns):
    f02 = by_id(patterns, "F-02")
    manger = next(i for i, pair in enumerate(f02.slots[2]) if pair[0] == "manger")
    un = next(i for i, pair in enumerate(f02.slots[3]) if pair[0] == "un")
    melon = next(i for i, pair in enumerate(f02.slots[4])
                 if pair[1].lemma == "watermelon")
    choices = [0, next(i for i, pair in enumerate(f02.slots[1]) if pair[0] == "père"),
               manger, un, melon]
    src, tgt, _ = instantiate_with_choices(
        engine, f02, choices, Variation("f", {}), "en-fr")
    assert engine.realize(src).text == "The father will eat watermelons."
    assert engine.realize(tgt).text == "Le père mangera des melons d'eau."


def test_same_variation_hits_both_sides(engine, patterns):
    rng = random.Random(3)
    for _ in range(30):
        pattern = patterns[rng.randrange(len(patterns))]
        (src, tgt, variation), _ = instantiate_pattern(engine, pattern, rng,
                                                       level_cap=3, direction="en-fr")
        assert src.options.get("t") == tgt.options.get("t") == variation.tense
        assert src.options.get("typ") == tgt.options.get("typ")


def test_level_gates(engine, patterns):
    rng = random.Random(0)
    f06 = by_id(patterns, "F-06")
    with pytest.raises(errors.ValidationError):
        instantiate_pattern(engine, f06, rng, level_cap=0)
    for _ in range(50):
        variation = draw_variation(random.Random(rng.random()), 0, True)
        assert variation.typ == {}
    for _ in range(50):
        variation = draw_variation(random.Random(rng.random()), 1, False)
        assert variation.typ in ({}, {"neg": True})


def test_passive_only_for_passivable(patterns):
    rng = random.Random(9)
    seen_pas = False
    for _ in range(200):
        v = draw_variation(rng, 3, False)
        assert not v.typ.get("pas")
        seen_pas = seen_pas or draw_variation(rng, 3, True).typ.get("pas")
    assert seen_pas


# ------------------------------------------------------------ exercises

def test_exercise_reconstructibility(engine, patterns):
    rng = random.Random(1)
    exercise = make_exercise(engine, by_id(patterns, "F-02"), "fr-en", rng)
    expected_tokens = Counter(tokenize(exercise.expected))
    assert not expected_tokens - Counter(exercise.tokens)


def test_zero_distractors_presents_exact_tokens(engine, patterns):
    rng = random.Random(2)
    exercise = make_exercise(engine, by_id(patterns, "F-02"), "en-fr", rng, distractors=0)
    assert Counter(exercise.tokens) == Counter(tokenize(exercise.expected))


def test_distractors_come_from_unchosen_values(engine, patterns):
    rng = random.Random(4)
    f02 = by_id(patterns, "F-02")
    exercise = make_exercise(engine, f02, "en-fr", rng)
    extras = Counter(exercise.tokens) - Counter(tokenize(exercise.expected))
    vocabulary = set()
    for slot, role in zip(f02.slots, f02.roles):
        if role == "feat":
            continue
        for pair in slot:
            value = pair[0]  # target side of fr-en
            if isinstance(value, list):
                vocabulary.update(value)
            elif isinstance(value, str):
                vocabulary.add(value)
            else:
                vocabulary.update(tokenize(engine.realize(value.clone()).text))
    assert set(extras) <= vocabulary
    assert sum(extras.values()) > 0


def test_insufficient_distractors_downgraded(engine, patterns):
    rng = random.Random(5)
    exercise = make_exercise(engine, by_id(patterns, "F-01"), "fr-en", rng, distractors=500)
    assert len(exercise.tokens) >= len(tokenize(exercise.expected))


def test_seed_determinism(engine, patterns):
    f02 = by_id(patterns, "F-02")
    one = make_exercise(engine, f02, "fr-en", random.Random(7), seed=7)
    two = make_exercise(engine, f02, "fr-en", random.Random(7), seed=7)
    assert one == two


def test_check_answer(engine, patterns):
    rng = random.Random(6)
    exercise = make_exercise(engine, by_id(patterns, "F-02"), "fr-en", rng)
    good = check_answer(exercise, exercise.expected)
    assert good.correct and good.expected == exercise.expected
    padded = check_answer(exercise, "  " + exercise.expected.replace(" ", "   ") + " ")
    assert padded.correct
    bad = check_answer(exercise, "L'enfant peut manger les melons d'eau.")
    if exercise.expected != "L'enfant peut manger les melons d'eau.":
        assert not bad.correct
        assert bad.expected == exercise.expected


def test_run_drill_loop_transcript_shape(engine, patterns):
    lines = []
    answers = iter(["wrong answer", "end"])
    run_drill(engine, patterns, "en", "fr", level=0, seed=11,
              read=lambda prompt: next(answers), write=lines.append)
    assert lines[0].startswith("Translate in French")
    assert lines[1] == 'Type "end" to exit.'
    assert lines[4].endswith(":KO")
    expected = lines[4].strip().rsplit(":", 1)[0]
    assert Counter(tokenize(expected)) <= Counter(lines[3].split(", "))


def test_run_drill_seeded_repeatable(engine, patterns):
    def run(seed):
        lines = []
        answers = iter(["a", "b", "end"])
        run_drill(engine, patterns, "fr", "en", level=2, seed=seed,
                  read=lambda prompt: next(answers), write=lines.append)
        return lines

    assert run(3) == run(3)
    assert run(3) != run(4)
