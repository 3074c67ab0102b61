"""Constituent tree model: terminals, phrases, options, templates, one_of.

Trees are built through an engine handle (see engine.py) which stamps each
terminal with the language current at creation time; the stamp is never
rewritten afterwards.
"""

import datetime

from .errors import (
    EmptyAlternatives,
    IllegalValue,
    IndexOutOfRange,
    KindValueMismatch,
    NotAConstituent,
    NotAPhrase,
    UnknownOption,
)
from .morphology import DATE_TOGGLES

TERMINAL_KINDS = ("N", "V", "A", "D", "Pro", "Adv", "P", "C", "NO", "DT", "Q")
PHRASE_KINDS = ("S", "SP", "NP", "VP", "AP", "CP", "PP", "AdvP")

# which kinds accept which option keys
_OPTION_KINDS = {
    "n": {"N", "Pro", "D", "A", "NO", "NP", "CP", "AP"},
    "g": {"N", "Pro", "D", "A", "NO", "NP", "CP", "AP"},
    "pe": {"N", "Pro", "NP", "CP"},
    "t": {"V", "VP", "S", "SP"},
    "typ": {"S", "SP"},
    "ba": set(TERMINAL_KINDS) | set(PHRASE_KINDS),
    "dOpt": {"DT", "NO"},
}

_SIMPLE_VALUES = {
    "n": ("s", "p"),
    "g": ("m", "f"),
    "pe": (1, 2, 3),
    "t": ("p", "ps", "f"),
    "ba": ("(",),
}


def validate_typ(value):
    if not isinstance(value, dict):
        raise IllegalValue(f"typ must be a dict, got {value!r}")
    unknown = set(value) - {"neg", "int", "pas"}
    if unknown:
        raise UnknownOption(f"unknown typ keys {sorted(unknown)}")
    out = {"neg": False, "int": None, "pas": False}
    out.update(value)
    if not isinstance(out["neg"], bool) or not isinstance(out["pas"], bool):
        raise IllegalValue("typ neg/pas must be booleans")
    if out["int"] not in (None, "yon", "tag"):
        raise IllegalValue(f"unsupported interrogative mode {out['int']!r}")
    return out


def validate_option(kind, key, value):
    allowed = _OPTION_KINDS.get(key)
    if allowed is None:
        raise UnknownOption(f"unknown option {key!r}")
    if kind not in allowed:
        raise UnknownOption(f"option {key!r} does not apply to {kind}")
    if key in _SIMPLE_VALUES:
        if value not in _SIMPLE_VALUES[key]:
            raise IllegalValue(f"illegal value {value!r} for option {key!r}")
        return value
    if key == "typ":
        return validate_typ(value)
    if key == "dOpt":
        if not isinstance(value, dict):
            raise IllegalValue("dOpt must be a dict")
        keys = {"nat"} if kind == "NO" else set(DATE_TOGGLES)
        unknown = set(value) - keys
        if unknown:
            raise UnknownOption(f"unknown dOpt keys {sorted(unknown)}")
        if not all(isinstance(v, bool) for v in value.values()):
            raise IllegalValue("dOpt values must be booleans")
        if kind == "NO":
            return {"nat": value.get("nat", False)}
        effective = {k: True for k in DATE_TOGGLES}
        effective.update(value)
        if not any(effective.values()):
            raise IllegalValue("at least one date toggle must stay on")
        return effective
    raise UnknownOption(f"unknown option {key!r}")


class Constituent:
    """One node of a phrase-structure tree (terminal or phrase)."""

    def __init__(self, kind, engine, lang, lemma=None, value=None):
        self.kind = kind
        self.engine = engine
        self.lang = lang
        self.lemma = lemma
        self.value = value
        self.options = {}
        self.children = []

    # -- structure ---------------------------------------------------

    @property
    def is_terminal(self):
        return self.kind in TERMINAL_KINDS

    def add(self, child, pos=None):
        """Insert a child (append by default); phrases only."""
        if not self.is_phrase:
            raise NotAPhrase(f"{self.kind} cannot take children")
        if not isinstance(child, Constituent):
            raise NotAConstituent(f"cannot add {child!r}")
        if pos is None:
            self.children.append(child)
        else:
            if not 0 <= pos <= len(self.children):
                raise IndexOutOfRange(f"position {pos} out of 0..{len(self.children)}")
            self.children.insert(pos, child)
        return self

    @property
    def is_phrase(self):
        return self.kind in PHRASE_KINDS

    def clone(self):
        """Deep, independent copy (shares the engine handle only)."""
        node = Constituent(self.kind, self.engine, self.lang, self.lemma, self.value)
        node.options = {
            k: (dict(v) if isinstance(v, dict) else v) for k, v in self.options.items()
        }
        node.children = [c.clone() for c in self.children]
        for attr in ("_styp", "_form"):
            if hasattr(self, attr):
                setattr(node, attr, getattr(self, attr))
        return node

    # -- options -----------------------------------------------------

    def set_option(self, key, value):
        self.options[key] = validate_option(self.kind, key, value)
        return self

    def n(self, value):
        return self.set_option("n", value)

    def g(self, value):
        return self.set_option("g", value)

    def pe(self, value):
        return self.set_option("pe", value)

    def t(self, value):
        return self.set_option("t", value)

    def typ(self, value):
        return self.set_option("typ", value)

    def ba(self, value="("):
        return self.set_option("ba", value)

    def dOpt(self, value):
        return self.set_option("dOpt", value)

    def nat(self, flag=True):
        if self.kind != "NO":
            raise UnknownOption("nat only applies to NO terminals")
        opts = dict(self.options.get("dOpt", {}))
        opts["nat"] = bool(flag)
        return self.set_option("dOpt", opts)

    # -- convenience -------------------------------------------------

    def realize(self):
        return self.engine.realize(self).text

    def __eq__(self, other):
        if not isinstance(other, Constituent):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.lemma == other.lemma
            and self.value == other.value
            and self.lang == other.lang
            and self.options == other.options
            and self.children == other.children
        )

    __hash__ = None

    def __repr__(self):
        core = self.lemma if self.lemma is not None else self.value
        if self.is_terminal:
            return f"{self.kind}({core!r})@{self.lang}"
        inner = ", ".join(repr(c) for c in self.children)
        return f"{self.kind}({inner})@{self.lang}"


def make_terminal(kind, value, engine, lang):
    if kind not in TERMINAL_KINDS:
        raise KindValueMismatch(f"unknown terminal kind {kind!r}")
    if kind == "NO":
        if not isinstance(value, int) or isinstance(value, bool):
            raise KindValueMismatch("NO takes an integer")
        return Constituent(kind, engine, lang, value=value)
    if kind == "DT":
        if isinstance(value, datetime.datetime):
            pass
        elif isinstance(value, datetime.date):
            value = datetime.datetime(value.year, value.month, value.day)
        else:
            raise KindValueMismatch("DT takes a date or datetime")
        return Constituent(kind, engine, lang, value=value)
    if kind == "Q":
        if not isinstance(value, str):
            raise KindValueMismatch("Q takes verbatim text")
        return Constituent(kind, engine, lang, value=value)
    if not isinstance(value, str) or not value:
        raise KindValueMismatch(f"{kind} takes a lemma string")
    return Constituent(kind, engine, lang, lemma=value)


def flatten_children(items):
    out = []
    for item in items:
        if isinstance(item, (list, tuple)):
            out.extend(flatten_children(item))
        elif isinstance(item, Constituent):
            out.append(item)
        else:
            raise NotAConstituent(f"{item!r} is not a constituent")
    return out


def make_phrase(kind, children, engine, lang):
    if kind not in PHRASE_KINDS:
        raise KindValueMismatch(f"unknown phrase kind {kind!r}")
    node = Constituent(kind, engine, lang)
    node.children = flatten_children(children)
    return node


def one_of(rng, *alternatives):
    """Pick one alternative uniformly; callables are invoked lazily."""
    if len(alternatives) == 1 and isinstance(alternatives[0], (list, tuple)):
        alternatives = tuple(alternatives[0])
    if not alternatives:
        raise EmptyAlternatives("one_of needs at least one alternative")
    chosen = alternatives[rng.randrange(len(alternatives))]
    return chosen() if callable(chosen) else chosen


class Template:
    """Deferred tree builder: every invocation yields a fresh, independent tree."""

    def __init__(self, build, arity):
        self.build = build
        self.arity = arity

    def __call__(self, *args):
        if len(args) != self.arity:
            raise IllegalValue(f"template expects {self.arity} values, got {len(args)}")
        tree = self.build(*args)
        if not isinstance(tree, Constituent):
            raise NotAConstituent("template did not build a constituent")
        return tree
