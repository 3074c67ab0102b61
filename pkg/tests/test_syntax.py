import datetime
import random

import pytest

from birealize import errors, one_of
from birealize.syntax import PHRASE_KINDS, Template


def test_terminal_creation(fresh_engine):
    e = fresh_engine.load_en()
    n = e.N("cat")
    assert n.kind == "N" and n.lemma == "cat" and n.lang == "en"
    no = e.NO(2)
    assert no.value == 2
    d = e.DT(datetime.date(2023, 5, 30))
    assert d.value == datetime.datetime(2023, 5, 30)


def test_terminal_kind_value_mismatch(fresh_engine):
    e = fresh_engine
    with pytest.raises(errors.KindValueMismatch):
        e.NO("two")
    with pytest.raises(errors.KindValueMismatch):
        e.DT(123)
    with pytest.raises(errors.KindValueMismatch):
        e.N(42)
    with pytest.raises(errors.KindValueMismatch):
        e.N("")
    with pytest.raises(errors.KindValueMismatch):
        e.terminal("XP", "zzz")


def test_language_stamp_fixed_at_creation(fresh_engine):
    e = fresh_engine.load_en()
    n = e.N("cat")
    e.load_fr()
    v = e.V("sauter")
    s = e.S(e.NP(n), e.VP(v))
    assert n.lang == "en" and v.lang == "fr" and s.lang == "fr"


def test_flattening_equivalence(fresh_engine):
    e = fresh_engine.load_en()
    for kind in PHRASE_KINDS:
        a, b, c = e.N("cat"), e.N("apple"), e.N("house")
        nested = e.phrase(kind, a.clone(), [b.clone(), c.clone()])
        flat = e.phrase(kind, a.clone(), b.clone(), c.clone())
        assert nested == flat
    deep = e.NP(e.D("the"), [[e.N("cat")], [e.A("small")]])
    assert len(deep.children) == 3


def test_phrase_rejects_non_constituents(fresh_engine):
    with pytest.raises(errors.NotAConstituent):
        fresh_engine.NP("cat")


def test_empty_phrase_realizes_empty(fresh_engine):
    assert fresh_engine.NP().realize() == ""


def test_set_option_validation(fresh_engine):
    e = fresh_engine.load_en()
    v = e.V("jump")
    assert v.t("ps") is v
    with pytest.raises(errors.IllegalValue):
        v.t("x")
    with pytest.raises(errors.UnknownOption):
        v.set_option("frobnicate", 1)
    with pytest.raises(errors.UnknownOption):
        e.N("cat").t("p")  # tense on a noun
    with pytest.raises(errors.IllegalValue):
        e.NP().ba(")")
    with pytest.raises(errors.IllegalValue):
        e.S().typ({"int": "wh"})
    with pytest.raises(errors.UnknownOption):
        e.S().typ({"mood": True})
    with pytest.raises(errors.UnknownOption):
        e.DT(datetime.datetime(2023, 1, 1)).dOpt({"nanosecond": False})
    with pytest.raises(errors.IllegalValue):
        e.DT(datetime.datetime(2023, 1, 1)).dOpt(
            {k: False for k in ("year", "month", "date", "day", "hour", "minute", "second")})


def test_option_overwrite(fresh_engine):
    e = fresh_engine.load_en()
    n = e.NP(e.D("the"), e.N("cat")).n("p").n("s")
    assert n.options["n"] == "s"


def test_add_child(fresh_engine):
    e = fresh_engine.load_en()
    vp = e.VP(e.V("jump"))
    pp = e.PP(e.P("on"), e.NP(e.D("the"), e.N("mat")))
    vp.add(pp)
    assert vp.children[-1] is pp
    first = e.Adv("often")
    vp.add(first, 0)
    assert vp.children[0] is first
    with pytest.raises(errors.NotAPhrase):
        e.N("cat").add(e.A("small"))
    with pytest.raises(errors.IndexOutOfRange):
        vp.add(e.Adv("always"), 99)
    with pytest.raises(errors.NotAConstituent):
        vp.add("often")


def test_clone_independence(fresh_engine):
    e = fresh_engine.load_en()
    tree = e.S(e.NP(e.D("the"), e.N("cat"), e.A("small")), e.VP(e.V("jump").t("ps")))
    before = tree.realize()
    copy = tree.clone()
    assert copy == tree
    copy.children[0].n("p")
    copy.children[0].add(e.A("green"))
    assert tree.realize() == before
    assert copy.realize() != before


def test_clone_realizes_identically(fresh_engine):
    e = fresh_engine.load_fr()
    t = e.NP(e.D("le"), e.N("enfant"))
    assert t.clone().realize() == t.realize() == "l'enfant"


def test_one_of_singleton_and_values():
    rng = random.Random(0)
    assert one_of(rng, "x") == "x"
    assert one_of(rng, ["only"]) == "only"
    with pytest.raises(errors.EmptyAlternatives):
        one_of(rng, [])


def test_one_of_calls_deferred_builders(fresh_engine):
    e = fresh_engine.load_en()
    rng = random.Random(0)
    built = one_of(rng, lambda: e.N("cat"))
    assert built.kind == "N" and built.lemma == "cat"
    again = one_of(rng, lambda: e.N("cat"))
    assert built == again and built is not again


def test_one_of_seeded_reproducible():
    picks1 = [one_of(random.Random(42), "a", "b", "c") for _ in range(1)]
    seq1 = [one_of(rng, "a", "b", "c") for rng in [random.Random(42)] for _ in range(10)]
    rng1, rng2 = random.Random(7), random.Random(7)
    seq_a = [one_of(rng1, "a", "b", "c") for _ in range(20)]
    seq_b = [one_of(rng2, "a", "b", "c") for _ in range(20)]
    assert seq_a == seq_b
    assert picks1 and seq1


def test_template_fresh_trees(fresh_engine):
    e = fresh_engine.load_en()
    template = Template(lambda lemma: e.NP(e.D("the"), e.N(lemma)), 1)
    one = template("cat")
    two = template("cat")
    assert one == two and one is not two
    two.n("p")
    assert one != two
    with pytest.raises(errors.IllegalValue):
        template("cat", "dog")
