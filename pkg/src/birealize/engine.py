"""Engine: the per-language lexicons plus the builder context.

The current language is a value on the engine handle, never process-global
state; load_en/load_fr switch which lexicon stamps new terminals. Engines
are independent, so several can run side by side.
"""

import json
import os
from importlib import resources
from pathlib import Path

from . import realizer
from .errors import ValidationError
from .lexicon import load_lexicon
from .syntax import make_phrase, make_terminal

LANGUAGES = ("en", "fr")


def _packaged(name):
    return resources.files("birealize").joinpath("data").joinpath(name).read_bytes()


class Engine:
    def __init__(self, lexicons, mute_h=()):
        self._lexicons = dict(lexicons)
        for lang in LANGUAGES:
            if lang not in self._lexicons:
                raise ValidationError(f"engine needs a {lang} lexicon")
        self.mute_h = frozenset(mute_h)
        self._lang = "en"

    @classmethod
    def default(cls, lexicon_dir=None):
        """Engine over the shipped fixtures, or over BIREALIZE_LEXICON_DIR."""
        if lexicon_dir is None:
            lexicon_dir = os.environ.get("BIREALIZE_LEXICON_DIR")
        if lexicon_dir is None:
            read = _packaged
        else:
            folder = Path(lexicon_dir)

            def read(name):
                return (folder / name).read_bytes()

        lexicons = {
            lang: load_lexicon(lang, read(f"{lang}.lexicon.json"), read(f"{lang}.rules.json"))
            for lang in LANGUAGES
        }
        try:
            mute_h = json.loads(read("fr.mute_h.json"))
        except FileNotFoundError:
            mute_h = json.loads(_packaged("fr.mute_h.json"))
        return cls(lexicons, mute_h)

    # -- language context ---------------------------------------------

    @property
    def language(self):
        return self._lang

    def load_en(self):
        self._lang = "en"
        return self

    def load_fr(self):
        self._lang = "fr"
        return self

    def load(self, language):
        if language not in LANGUAGES:
            raise ValidationError(f"unknown language {language!r}")
        self._lang = language
        return self

    # -- lexicon access -------------------------------------------------

    def lexicon(self, language):
        return self._lexicons[language]

    def add_to_lexicon(self, lemma, entry, language=None):
        """Add/merge an entry in the current (or given) language's lexicon."""
        self._lexicons[language or self._lang].add(lemma, entry)
        return self

    def seal(self):
        """Freeze both lexicons; realization stays safe for concurrent use."""
        for lex in self._lexicons.values():
            lex.sealed = True
        return self

    def lexicon_counts(self):
        return {lang: len(lex) for lang, lex in self._lexicons.items()}

    # -- builders ---------------------------------------------------------

    def terminal(self, kind, value):
        return make_terminal(kind, value, self, self._lang)

    def phrase(self, kind, *children):
        return make_phrase(kind, children, self, self._lang)

    def N(self, lemma):
        return self.terminal("N", lemma)

    def V(self, lemma):
        return self.terminal("V", lemma)

    def A(self, lemma):
        return self.terminal("A", lemma)

    def D(self, lemma):
        return self.terminal("D", lemma)

    def Pro(self, lemma):
        return self.terminal("Pro", lemma)

    def Adv(self, lemma):
        return self.terminal("Adv", lemma)

    def P(self, lemma):
        return self.terminal("P", lemma)

    def C(self, lemma):
        return self.terminal("C", lemma)

    def NO(self, value):
        return self.terminal("NO", value)

    def DT(self, value):
        return self.terminal("DT", value)

    def Q(self, text):
        return self.terminal("Q", text)

    def S(self, *children):
        return self.phrase("S", *children)

    def SP(self, *children):
        return self.phrase("SP", *children)

    def NP(self, *children):
        return self.phrase("NP", *children)

    def VP(self, *children):
        return self.phrase("VP", *children)

    def AP(self, *children):
        return self.phrase("AP", *children)

    def CP(self, *children):
        return self.phrase("CP", *children)

    def PP(self, *children):
        return self.phrase("PP", *children)

    def AdvP(self, *children):
        return self.phrase("AdvP", *children)

    # -- realization -------------------------------------------------------

    def realize(self, tree):
        return realizer.realize(self, tree)

    def propagate_agreement(self, tree):
        return realizer.propagate_agreement(self, tree)
