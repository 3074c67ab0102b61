import datetime
import random
import re

import pytest

import birealize
from birealize.syntax import PHRASE_KINDS


def pytest_runtest_logreport(report):
    # the acceptance module prints [PASS] lines itself; mirror failures
    if report.when == "call" and report.failed and "test_acceptance" in report.nodeid:
        tag = re.search(r"test_([gp]\d+)", report.nodeid)
        if tag:
            print(f"\n[FAIL] {tag.group(1).upper()}")

# per-language word pools drawn from the shipped lexicons
POOLS = {
    "en": {
        "N": ["cat", "mother", "apple", "child", "house", "bird"],
        "V": ["eat", "love", "watch", "see"],
        "A": ["small", "green", "happy", "red"],
        "D": ["the", "a"],
        "Pro": ["he"],
        "Adv": ["often", "always"],
        "P": ["on", "at", "in"],
        "C": ["and", "or"],
    },
    "fr": {
        "N": ["chat", "mère", "pomme", "enfant", "maison", "oiseau"],
        "V": ["manger", "adorer", "regarder"],
        "A": ["petit", "vert", "heureux", "rouge"],
        "D": ["le", "un"],
        "Pro": ["il"],
        "Adv": ["souvent", "toujours"],
        "P": ["sur", "dans", "avec"],
        "C": ["et", "ou"],
    },
}


@pytest.fixture(scope="session")
def engine():
    e = birealize.Engine.default()
    birealize.add_participants(e, {"Alice": "f", "Eve": "f", "Bob": "m"})
    return e


@pytest.fixture()
def fresh_engine():
    return birealize.Engine.default()


def random_sentence(e, rng):
    """A random grammatical sentence with random tense/type variations."""
    lang = ("en", "fr")[rng.randrange(2)]
    e.load(lang)
    pool = POOLS[lang]

    def np():
        kids = [e.D(rng.choice(pool["D"])), e.N(rng.choice(pool["N"]))]
        if rng.random() < 0.5:
            kids.append(e.A(rng.choice(pool["A"])))
        node = e.NP(*kids)
        if rng.random() < 0.4:
            node.n("p")
        return node

    s = e.S(np(), e.VP(e.V(rng.choice(pool["V"])), np()))
    s.t(rng.choice(["p", "ps", "f"]))
    typ = {}
    if rng.random() < 0.3:
        typ["neg"] = True
    roll = rng.random()
    if roll < 0.2:
        typ["int"] = "yon"
    elif roll < 0.35:
        typ["int"] = "tag"
    if rng.random() < 0.2:
        typ["pas"] = True
    if typ:
        s.typ(typ)
    return s


def random_tree(e, rng, depth=0):
    """A random schema-valid tree (not necessarily grammatical)."""
    lang = ("en", "fr")[rng.randrange(2)]
    e.load(lang)
    pool = POOLS[lang]
    if depth >= 3 or rng.random() < 0.45:
        kind = rng.choice(("N", "V", "A", "D", "Pro", "Adv", "P", "C", "NO", "DT", "Q"))
        if kind == "NO":
            node = e.NO(rng.randrange(0, 5000))
            if rng.random() < 0.4:
                node.nat()
        elif kind == "DT":
            node = e.DT(datetime.datetime(
                rng.randrange(1990, 2030), rng.randrange(1, 13), rng.randrange(1, 28),
                rng.randrange(24), rng.randrange(60)))
            if rng.random() < 0.4:
                node.dOpt({"hour": False, "minute": False, "second": False})
        elif kind == "Q":
            node = e.Q(f"verbatim {rng.randrange(100)}")
        else:
            node = e.terminal(kind, rng.choice(pool[kind]))
            if kind in ("N", "Pro") and rng.random() < 0.4:
                node.n(rng.choice(["s", "p"]))
            if kind == "V" and rng.random() < 0.4:
                node.t(rng.choice(["p", "ps", "f"]))
    else:
        kind = rng.choice(PHRASE_KINDS)
        node = e.phrase(kind, *[random_tree(e, rng, depth + 1)
                                for _ in range(rng.randrange(0, 4))])
        if kind in ("S", "SP") and rng.random() < 0.3:
            node.typ({"neg": True} if rng.random() < 0.5 else {"int": "yon"})
        if kind in ("VP", "S", "SP") and rng.random() < 0.3:
            node.t(rng.choice(["p", "ps", "f"]))
        if kind in ("NP", "CP") and rng.random() < 0.3:
            node.n(rng.choice(["s", "p"]))
    if rng.random() < 0.1:
        node.ba("(")
    return node
