"""Translation drill generation and checking.

A pattern pairs a French and an English sentence template with slots of
equivalent parameter pairs. One draw instantiates both trees with matching
halves, applies one tense + sentence-type variation to both, shows the
source realization and shuffles the target tokens with distractors drawn
from the unchosen target values.
"""

import json
import random
import re
from dataclasses import dataclass, field
from importlib import resources

from .errors import ValidationError
from .interchange import parse_tree
from .syntax import Constituent, Template

# slot roles: "feat" slots carry feature codes and never feed distractors
TEMPLATES = {}


def template(name, lang, roles):
    def register(fn):
        TEMPLATES[name] = {"lang": lang, "roles": roles, "build": Template(fn, len(roles) + 1)}
        return fn

    return register


def _verb_chain(e, value):
    """A verb slot value: one lemma or a chain (finite first, rest base)."""
    if isinstance(value, str):
        return [e.V(value)]
    return [e.V(v) for v in value]


def _noun_like(e, value):
    return value.clone() if isinstance(value, Constituent) else e.N(value)


@template("svo_plural_object_fr", "fr", ("feat", "lemma", "verb", "lemma", "np"))
def _f02_fr(e, n, noun, verb, det, obj):
    return e.S(
        e.NP(e.D("le"), e.N(noun).n(n)),
        e.VP(*_verb_chain(e, verb), e.NP(e.D(det), _noun_like(e, obj).n("p"))),
    )


@template("svo_plural_object_en", "en", ("feat", "lemma", "verb", "lemma", "np"))
def _f02_en(e, n, noun, verb, det, obj):
    return e.S(
        e.NP(e.D("the"), e.N(noun).n(n)),
        e.VP(*_verb_chain(e, verb), e.NP(e.D(det), _noun_like(e, obj).n("p"))),
    )


@template("copula_adjective_fr", "fr", ("feat", "lemma", "lemma"))
def _cop_fr(e, n, noun, adj):
    return e.S(e.NP(e.D("le"), e.N(noun).n(n)), e.VP(e.V("être"), e.A(adj)))


@template("copula_adjective_en", "en", ("feat", "lemma", "lemma"))
def _cop_en(e, n, noun, adj):
    return e.S(e.NP(e.D("the"), e.N(noun).n(n)), e.VP(e.V("be"), e.A(adj)))


@template("motion_pp_fr", "fr", ("feat", "lemma", "verb", "lemma", "lemma"))
def _motion_fr(e, n, subj, verb, prep, place):
    return e.S(
        e.NP(e.D("le"), e.N(subj).n(n)),
        e.VP(*_verb_chain(e, verb), e.PP(e.P(prep), e.NP(e.D("le"), e.N(place)))),
    )


@template("motion_pp_en", "en", ("feat", "lemma", "verb", "lemma", "lemma"))
def _motion_en(e, n, subj, verb, prep, place):
    return e.S(
        e.NP(e.D("the"), e.N(subj).n(n)),
        e.VP(*_verb_chain(e, verb), e.PP(e.P(prep), e.NP(e.D("the"), e.N(place)))),
    )


@template("svo_adjective_fr", "fr", ("feat", "lemma", "verb", "lemma", "lemma"))
def _svo_adj_fr(e, n, subj, verb, obj, adj):
    return e.S(
        e.NP(e.D("le"), e.N(subj).n(n)),
        e.VP(*_verb_chain(e, verb), e.NP(e.D("le"), e.N(obj), e.A(adj)).n("p")),
    )


@template("svo_adjective_en", "en", ("feat", "lemma", "verb", "lemma", "lemma"))
def _svo_adj_en(e, n, subj, verb, obj, adj):
    return e.S(
        e.NP(e.D("the"), e.N(subj).n(n)),
        e.VP(*_verb_chain(e, verb), e.NP(e.D("the"), e.N(obj), e.A(adj)).n("p")),
    )


@template("svo_adverb_fr", "fr", ("feat", "lemma", "verb", "lemma", "lemma"))
def _svo_adv_fr(e, n, subj, verb, adv, obj):
    # French adverbs follow the finite verb
    return e.S(
        e.NP(e.D("le"), e.N(subj).n(n)),
        e.VP(*_verb_chain(e, verb), e.Adv(adv), e.NP(e.D("le"), e.N(obj).n("p"))),
    )


@template("svo_adverb_en", "en", ("feat", "lemma", "verb", "lemma", "lemma"))
def _svo_adv_en(e, n, subj, verb, adv, obj):
    return e.S(
        e.NP(e.D("the"), e.N(subj).n(n)),
        e.VP(e.Adv(adv), *_verb_chain(e, verb), e.NP(e.D("the"), e.N(obj).n("p"))),
    )


@template("coordinated_svo_fr", "fr", ("lemma", "lemma", "verb", "lemma"))
def _coord_fr(e, n1, n2, verb, obj):
    return e.S(
        e.CP(e.C("et"), e.NP(e.D("le"), e.N(n1)), e.NP(e.D("le"), e.N(n2))),
        e.VP(*_verb_chain(e, verb), e.NP(e.D("le"), e.N(obj).n("p"))),
    )


@template("coordinated_svo_en", "en", ("lemma", "lemma", "verb", "lemma"))
def _coord_en(e, n1, n2, verb, obj):
    return e.S(
        e.CP(e.C("and"), e.NP(e.D("the"), e.N(n1)), e.NP(e.D("the"), e.N(n2))),
        e.VP(*_verb_chain(e, verb), e.NP(e.D("the"), e.N(obj).n("p"))),
    )


@dataclass
class DrillPattern:
    id: str
    level: int
    fr_template: str
    en_template: str
    slots: list
    passivable: bool = False

    @property
    def roles(self):
        return TEMPLATES[self.fr_template]["roles"]


@dataclass
class Variation:
    tense: str = "p"
    typ: dict = field(default_factory=dict)


@dataclass
class Exercise:
    pattern_id: str
    direction: str
    source_text: str
    tokens: list
    expected: str
    variation: Variation
    seed: int = None


@dataclass
class Verdict:
    correct: bool
    expected: str
    normalized: str


_TOKEN_RE = re.compile(r"[^\s'’\-.,?!;:]+|['’\-.,?!;:]")


def tokenize(text, language=None):
    """Split into drill tokens: words, apostrophes, hyphens, punctuation."""
    return _TOKEN_RE.findall(text)


def load_patterns(engine, data=None):
    """Load a pattern file (default: the shipped set)."""
    if data is None:
        data = resources.files("birealize").joinpath("data/patterns.json").read_bytes()
    doc = json.loads(data)
    fragments = {
        name: parse_tree(engine, node) for name, node in doc.get("fragments", {}).items()
    }

    def value(raw):
        if isinstance(raw, dict):
            name = raw.get("frag")
            if name not in fragments:
                raise ValidationError(f"unknown fragment {name!r}")
            return fragments[name]
        if isinstance(raw, list):
            return list(raw)
        return raw

    patterns = []
    for spec in doc["patterns"]:
        fr, en = spec["fr"], spec["en"]
        for name in (fr, en):
            if name not in TEMPLATES:
                raise ValidationError(f"unknown template {name!r}")
        slots = [[(value(pair[0]), value(pair[1])) for pair in slot] for slot in spec["params"]]
        if len(slots) != len(TEMPLATES[fr]["roles"]) or len(slots) != len(TEMPLATES[en]["roles"]):
            raise ValidationError(f"pattern {spec['id']}: slot count != template arity")
        if not all(slots):
            raise ValidationError(f"pattern {spec['id']}: empty slot")
        patterns.append(
            DrillPattern(spec["id"], spec["level"], fr, en, slots, spec.get("passivable", False))
        )
    return patterns


def draw_variation(rng, level_cap, passivable):
    tense = ("p", "ps", "f")[rng.randrange(3)]
    pool = [{}]
    if level_cap >= 1:
        pool.append({"neg": True})
    if level_cap >= 2:
        pool += [{"int": "yon"}, {"int": "tag"}]
    if level_cap >= 3:
        pool += [{"neg": True, "int": "tag"}, {"neg": True, "int": "yon"}]
        if passivable:
            pool += [{"pas": True}, {"pas": True, "int": "yon"}, {"pas": True, "neg": True}]
    return Variation(tense, pool[rng.randrange(len(pool))])


def _build_side(engine, pattern, side, values, variation):
    name = pattern.fr_template if side == "fr" else pattern.en_template
    entry = TEMPLATES[name]
    tree = entry["build"](engine.load(entry["lang"]), *values)
    tree.t(variation.tense)
    if variation.typ:
        tree.typ(variation.typ)
    return tree


def instantiate_with_choices(engine, pattern, choices, variation, direction="fr-en"):
    fr_values = [slot[i][0] for slot, i in zip(pattern.slots, choices)]
    en_values = [slot[i][1] for slot, i in zip(pattern.slots, choices)]
    fr_tree = _build_side(engine, pattern, "fr", fr_values, variation)
    en_tree = _build_side(engine, pattern, "en", en_values, variation)
    if direction == "fr-en":
        return fr_tree, en_tree, variation
    return en_tree, fr_tree, variation


def instantiate_pattern(engine, pattern, rng, level_cap=3, direction="fr-en"):
    """Draw one pair per slot and one variation, bounded by the level cap.

    Direction "fr-en" shows a French source sentence and expects the English
    translation; "en-fr" is the terminal transcript's setup (read English,
    assemble the French answer).
    """
    if pattern.level > level_cap:
        raise ValidationError(f"pattern {pattern.id} is above level {level_cap}")
    choices = [rng.randrange(len(slot)) for slot in pattern.slots]
    variation = draw_variation(rng, level_cap, pattern.passivable)
    return instantiate_with_choices(engine, pattern, choices, variation, direction), choices


def _value_tokens(engine, value, lang):
    if isinstance(value, Constituent):
        return tokenize(engine.realize(value.clone()).text, lang)
    if isinstance(value, list):
        return list(value)
    return [value]


def make_exercise(engine, pattern, direction, rng, distractors=3, level_cap=3, seed=None):
    """One drill exercise; presented tokens always reconstruct the answer."""
    (src_tree, tgt_tree, variation), choices = instantiate_pattern(
        engine, pattern, rng, level_cap, direction
    )
    source_text = engine.realize(src_tree).text
    expected = engine.realize(tgt_tree).text
    tgt_lang = direction.split("-")[1]
    tgt_side = 0 if tgt_lang == "fr" else 1
    presented = tokenize(expected, tgt_lang)
    pool = []
    for slot, chosen, role in zip(pattern.slots, choices, pattern.roles):
        if role == "feat":
            continue
        pool += [pair[tgt_side] for i, pair in enumerate(slot) if i != chosen]
    take = min(distractors, len(pool))
    if take:
        for value in rng.sample(pool, take):
            presented = presented + _value_tokens(engine, value, tgt_lang)
    rng.shuffle(presented)
    return Exercise(pattern.id, direction, source_text, presented, expected, variation, seed)


def check_answer(exercise, answer):
    """Trim + collapse whitespace, then exact comparison."""
    normalized = " ".join(answer.split())
    return Verdict(normalized == exercise.expected, exercise.expected, normalized)


def run_drill(engine, patterns, source, target, level=0, seed=None,
              distractors=3, read=None, write=print):
    """Interactive terminal loop mirroring the drill transcript format."""
    if read is None:
        read = input
    direction = f"{source}-{target}"
    rng = random.Random(seed)
    eligible = [p for p in patterns if p.level <= level]
    if not eligible:
        raise ValidationError(f"no pattern at level {level}")
    names = {"en": "English", "fr": "French"}
    write(f"Translate in {names[target]} the following sentences using some of the suggested words.")
    write('Type "end" to exit.')
    while True:
        pattern = eligible[rng.randrange(len(eligible))]
        exercise = make_exercise(engine, pattern, direction, rng,
                                 distractors=distractors, level_cap=level)
        write(exercise.source_text)
        write(", ".join(exercise.tokens))
        try:
            answer = read("> ")
        except EOFError:
            break
        if answer.strip() == "end":
            break
        verdict = check_answer(exercise, answer)
        write(f"    {verdict.expected}:{'OK' if verdict.correct else 'KO'}")
