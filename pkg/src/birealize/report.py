"""Bilingual meeting-report demo.

One language-independent content step feeds two per-language realizers, in
two flavours: a word-table style where both languages share one phrase
structure and only the words differ, and a subclass style where each
language owns its phrasing but the orchestration is shared.
"""

import datetime
from abc import ABC, abstractmethod
from dataclasses import dataclass, field

# parallel word tables for the shared-structure style
WORDS = {
    "conj": {"en": "and", "fr": "et"},
    "prep": {"en": "at", "fr": "à"},
    "det": {"en": "a", "fr": "un"},
    "copula": {"en": "be", "fr": "être"},
    "attribute": {"en": "present", "fr": "présent"},
    "individual": {"en": "person", "fr": "personne"},
}

DATE_OPTIONS = {"minute": False, "second": False}

# demo cast used by the CLI defaults
DEMO_PARTICIPANTS = {"Alice": "f", "Eve": "f", "Bob": "m"}


def tense_for(date, reference):
    """Present on the same day, future after it, simple past before it."""
    day, ref = date.toordinal(), reference.toordinal()
    if day == ref:
        return "p"
    return "f" if day > ref else "ps"


@dataclass
class ReportSpec:
    """Selected content shared by both languages."""

    event_en: str
    event_fr: str
    participants: list
    date: datetime.datetime
    today: datetime.datetime


def add_participants(engine, names):
    """Register proper nouns ({name: gender}) in both lexicons."""
    for name, gender in names.items():
        for lang in ("en", "fr"):
            engine.add_to_lexicon(name, {"N": {"g": gender, "tab": "nI"}}, language=lang)
    return engine


def word_table_sentence(engine, spec, lang):
    e = engine.load(lang)
    event = spec.event_en if lang == "en" else spec.event_fr
    meeting = e.PP(e.P(WORDS["prep"][lang]), e.NP(e.D(WORDS["det"][lang]), e.N(event)))
    return e.S(
        e.CP(e.C(WORDS["conj"][lang]), [e.N(p) for p in spec.participants]),
        e.NP(e.NO(len(spec.participants)).nat(), e.N(WORDS["individual"][lang])).ba("("),
        e.VP(
            e.V(WORDS["copula"][lang]),
            e.A(WORDS["attribute"][lang]),
            meeting,
            e.DT(spec.date).dOpt(DATE_OPTIONS),
        ),
    ).t(tense_for(spec.date, spec.today))


class LanguageRealizer(ABC):
    """Shared orchestration; word and phrase choices live in subclasses.

    Subclasses must expose the same operation set, so the two languages stay
    content-parallel even when their sentence structures diverge.
    """

    lang = None

    def __init__(self, engine):
        self.engine = engine

    @abstractmethod
    def conjunction(self):
        ...

    @abstractmethod
    def individual(self):
        ...

    @abstractmethod
    def meeting(self, event):
        ...

    @abstractmethod
    def attend(self, meeting):
        ...

    def sentence(self, event, persons, date, today):
        e = self.engine.load(self.lang)
        return e.S(
            e.CP(self.conjunction(), [e.N(p) for p in persons]),
            e.NP(e.NO(len(persons)).nat(), self.individual()).ba("("),
            self.attend(self.meeting(event)),
            e.DT(date).dOpt(DATE_OPTIONS),
        ).t(tense_for(date, today))

    def report(self, event, persons, date, today):
        return self.engine.realize(self.sentence(event, persons, date, today)).text


class EnglishRealizer(LanguageRealizer):
    lang = "en"

    def __init__(self, engine, phrasing="attend"):
        super().__init__(engine)
        self.phrasing = phrasing

    def conjunction(self):
        return self.engine.load("en").C("and")

    def individual(self):
        return self.engine.load("en").N("person")

    def meeting(self, event):
        e = self.engine.load("en")
        det = "the" if self.phrasing == "attend" else "a"
        return e.NP(e.D(det), e.N(event))

    def attend(self, meeting):
        e = self.engine.load("en")
        if self.phrasing == "attend":
            return e.VP(e.V("attend"), meeting)
        return e.VP(e.V("be"), e.A("present"), e.PP(e.P("at"), meeting))


class FrenchRealizer(LanguageRealizer):
    lang = "fr"

    def conjunction(self):
        return self.engine.load("fr").C("et")

    def individual(self):
        return self.engine.load("fr").N("individu")

    def meeting(self, event):
        e = self.engine.load("fr")
        return e.NP(e.D("le"), e.N(event))

    def attend(self, meeting):
        e = self.engine.load("fr")
        return e.VP(e.V("être"), e.A("présent"), e.PP(e.P("à"), meeting))


def generate_report(engine, spec, style="word-table", language="en"):
    """One report sentence; missing names surface as warnings, never failures."""
    if style == "word-table":
        tree = word_table_sentence(engine, spec, language)
        return engine.realize(tree).text
    if style != "interface":
        raise ValueError(f"unknown report style {style!r}")
    if language == "en":
        realizer = EnglishRealizer(engine)
        event = spec.event_en
    else:
        realizer = FrenchRealizer(engine)
        event = spec.event_fr
    return realizer.report(event, spec.participants, spec.date, spec.today)
