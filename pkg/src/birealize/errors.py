"""Exception types shared across the engine."""


class BirealizeError(Exception):
    pass


class ParseError(BirealizeError):
    """Malformed input file (bad JSON, bad encoding)."""


class ValidationError(BirealizeError):
    """Well-formed file that violates lexicon/rules constraints."""


class SchemaError(BirealizeError):
    """Tree document violating the interchange schema; carries the node path."""

    def __init__(self, message, path="$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class MissingLemma(BirealizeError):
    def __init__(self, language, lemma):
        super().__init__(f"[{language}] no entry for lemma {lemma!r}")
        self.language = language
        self.lemma = lemma


class MissingPos(BirealizeError):
    def __init__(self, language, lemma, pos):
        super().__init__(f"[{language}] lemma {lemma!r} has no {pos} record")
        self.language = language
        self.lemma = lemma
        self.pos = pos


class MissingCell(BirealizeError):
    def __init__(self, language, lemma, key):
        super().__init__(f"[{language}] {lemma!r} has no form for {key!r}")
        self.language = language
        self.lemma = lemma
        self.key = key


class OutOfRange(BirealizeError):
    pass


class KindValueMismatch(BirealizeError):
    pass


class NotAConstituent(BirealizeError):
    pass


class NotAPhrase(BirealizeError):
    pass


class IndexOutOfRange(BirealizeError):
    pass


class UnknownOption(BirealizeError):
    pass


class IllegalValue(BirealizeError):
    pass


class EmptyAlternatives(BirealizeError):
    pass


class PassiveShapeError(BirealizeError):
    """Passive requested on a sentence without a subject + transitive VP."""
