"""Per-language lexicons and inflection rule tables.

A lexicon maps a lemma to one record per part of speech; each record names
an inflection table in the companion rule set and may override single cells
with irregular forms. Everything is validated at load time so realization
never chases dangling table ids.
"""

import json
from dataclasses import dataclass, field

from .errors import MissingCell, MissingLemma, MissingPos, ParseError, ValidationError

POS_TAGS = ("N", "V", "A", "D", "Pro", "Adv", "P", "C")
# POS that inflect and therefore must name a table
INFLECTING = {"N", "V", "A", "D", "Pro"}
# POS whose records may carry a gender
GENDERED = {"N", "A", "D", "Pro"}

TABLE_KINDS = ("noun", "adjective", "verb", "determiner", "pronoun")
POS_TO_KIND = {"N": "noun", "V": "verb", "A": "adjective", "D": "determiner", "Pro": "pronoun"}

PERSONS = ("1", "2", "3")
NUMBERS = ("s", "p")
GENDER_NUMBER = ("ms", "fs", "mp", "fp")


def verb_cells(language):
    """Finite cells a verb entry must cover.

    English future is synthesized as "will" + base form, so English tables
    only need present and past; French tables need all three tenses.
    """
    tenses = ("p", "ps") if language == "en" else ("p", "ps", "f")
    return {f"{t}:{pe}{n}" for t in tenses for pe in PERSONS for n in NUMBERS}


def required_cells(kind, language):
    if kind == "noun":
        return set(NUMBERS)
    if kind in ("adjective", "determiner", "pronoun"):
        return set(GENDER_NUMBER)
    if kind == "verb":
        return verb_cells(language)
    return set()


@dataclass
class InflectionTable:
    id: str
    kind: str
    strip: int
    endings: dict

    def cell(self, lemma, key):
        if key not in self.endings:
            return None
        return lemma[: len(lemma) - self.strip] + self.endings[key]


@dataclass
class RuleSet:
    language: str
    tables: dict

    @classmethod
    def from_bytes(cls, language, data):
        try:
            doc = json.loads(data)
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise ParseError(f"rules file: {exc}") from exc
        if not isinstance(doc, dict) or not isinstance(doc.get("tables"), dict):
            raise ParseError('rules file must be {"tables": {...}}')
        tables = {}
        for tid, spec in doc["tables"].items():
            if not isinstance(spec, dict):
                raise ValidationError(f"table {tid!r} is not an object")
            kind = spec.get("kind")
            if kind not in TABLE_KINDS:
                raise ValidationError(f"table {tid!r} has unknown kind {kind!r}")
            strip = spec.get("strip", 0)
            if not isinstance(strip, int) or strip < 0:
                raise ValidationError(f"table {tid!r} has bad strip {strip!r}")
            endings = spec.get("endings", {})
            if not isinstance(endings, dict) or not all(
                isinstance(k, str) and isinstance(v, str) for k, v in endings.items()
            ):
                raise ValidationError(f"table {tid!r} has malformed endings")
            tables[tid] = InflectionTable(tid, kind, strip, dict(endings))
        return cls(language, tables)


@dataclass
class LexRecord:
    """One (lemma, part-of-speech) inflection record, table resolved."""

    lemma: str
    pos: str
    gender: str = None
    table: InflectionTable = None
    irr: dict = field(default_factory=dict)

    def form(self, key, language):
        if key in self.irr:
            return self.irr[key]
        if self.table is not None:
            out = self.table.cell(self.lemma, key)
            if out is not None:
                return out
        raise MissingCell(language, self.lemma, key)

    def has(self, key):
        return key in self.irr or (self.table is not None and key in self.table.endings)


class Lexicon:
    """Lemma -> {POS -> LexRecord}; mutable until the owning engine seals it."""

    def __init__(self, language, ruleset):
        self.language = language
        self.ruleset = ruleset
        self.entries = {}
        self.sealed = False

    def __len__(self):
        return len(self.entries)

    def lookup(self, lemma, pos):
        records = self.entries.get(lemma)
        if records is None:
            raise MissingLemma(self.language, lemma)
        record = records.get(pos)
        if record is None:
            raise MissingPos(self.language, lemma, pos)
        return record

    def add(self, lemma, entry):
        """Merge an entry ({POS: {g?, tab?, irr?}}); same-POS records are replaced."""
        if self.sealed:
            raise ValidationError(f"lexicon {self.language} is sealed")
        records = self._validate_entry(lemma, entry)
        self.entries.setdefault(lemma, {}).update(records)

    def _validate_entry(self, lemma, entry):
        if not isinstance(lemma, str) or not lemma:
            raise ValidationError(f"bad lemma {lemma!r}")
        if not isinstance(entry, dict) or not entry:
            raise ValidationError(f"{lemma!r}: entry must map POS to records")
        records = {}
        for pos, rec in entry.items():
            if pos not in POS_TAGS:
                raise ValidationError(f"{lemma!r}: unknown POS {pos!r}")
            if not isinstance(rec, dict):
                raise ValidationError(f"{lemma!r}/{pos}: record must be an object")
            unknown = set(rec) - {"g", "tab", "irr"}
            if unknown:
                raise ValidationError(f"{lemma!r}/{pos}: unknown keys {sorted(unknown)}")
            gender = rec.get("g")
            if gender is not None and (gender not in ("m", "f") or pos not in GENDERED):
                raise ValidationError(f"{lemma!r}/{pos}: bad gender {gender!r}")
            irr = rec.get("irr", {})
            if not isinstance(irr, dict) or not all(
                isinstance(k, str) and isinstance(v, str) for k, v in irr.items()
            ):
                raise ValidationError(f"{lemma!r}/{pos}: malformed irr")
            table = None
            tab = rec.get("tab")
            if tab is not None:
                table = self.ruleset.tables.get(tab)
                if table is None:
                    raise ValidationError(f"{lemma!r}/{pos}: table {tab!r} not in rule set")
                if table.kind != POS_TO_KIND.get(pos):
                    raise ValidationError(
                        f"{lemma!r}/{pos}: table {tab!r} is a {table.kind} table"
                    )
                if table.strip > len(lemma):
                    raise ValidationError(
                        f"{lemma!r}/{pos}: table {tab!r} strips more than the lemma has"
                    )
            elif pos in INFLECTING:
                raise ValidationError(f"{lemma!r}/{pos}: inflecting POS needs a table")
            record = LexRecord(lemma, pos, gender, table, dict(irr))
            if table is not None:
                missing = {
                    key
                    for key in required_cells(table.kind, self.language)
                    if not record.has(key)
                }
                if missing:
                    raise ValidationError(
                        f"{lemma!r}/{pos}: missing cells {sorted(missing)}"
                    )
            records[pos] = record
        return records

    def serialize(self):
        """Back to the on-disk entry mapping (round-trips through load)."""
        out = {}
        for lemma, records in self.entries.items():
            entry = {}
            for pos, rec in records.items():
                spec = {}
                if rec.gender is not None:
                    spec["g"] = rec.gender
                if rec.table is not None:
                    spec["tab"] = rec.table.id
                if rec.irr:
                    spec["irr"] = dict(rec.irr)
                entry[pos] = spec
            out[lemma] = entry
        return out


def load_lexicon(language, lexicon_bytes, rules_bytes):
    """Parse and validate a lexicon file against its rules file."""
    ruleset = RuleSet.from_bytes(language, rules_bytes)
    try:
        doc = json.loads(lexicon_bytes)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"lexicon file: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("lexicon file must be a JSON object")
    lexicon = Lexicon(language, ruleset)
    for lemma, entry in doc.items():
        lexicon.add(lemma, entry)
    return lexicon


def add_to_lexicon(lexicon, lemma, entry):
    """Functional-flavoured alias used by demo code; mutates and returns."""
    lexicon.add(lemma, entry)
    return lexicon
