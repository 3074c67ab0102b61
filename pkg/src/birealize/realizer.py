"""Realization pipeline: agreement, sentence transformations, linearization,
elision/contraction and the final string.

All failures downgrade to warnings; the offending lemma is emitted verbatim
so a realization is always produced.
"""

import json
from dataclasses import dataclass
from importlib import resources
from typing import NamedTuple

from . import morphology
from .errors import BirealizeError, MissingCell, MissingLemma, MissingPos, PassiveShapeError
from .syntax import Constituent, validate_typ

# French adjectives realized before the noun; everything else goes after.
PRENOMINAL_FR = {
    "petit", "grand", "beau", "bon", "jeune", "joli", "gros", "vieux",
    "nouveau", "mauvais", "premier", "dernier",
}

# tokens that elide before a vowel or mute h (drop final vowel, add ')
FR_ELIDERS = {"le", "la", "de", "ne", "que", "je", "me", "te", "se", "ce"}
FR_CONTRACTIONS = {
    ("de", "le"): "du",
    ("à", "le"): "au",
    ("de", "les"): "des",
    ("à", "les"): "aux",
}
_FR_VOWELS = set("aeiouyàâäéèêëîïôöùûü")
_EN_VOWELS = set("aeiou")

EN_NEG_CONTRACTIONS = {
    "is": "isn't", "are": "aren't", "was": "wasn't", "were": "weren't",
    "do": "don't", "does": "doesn't", "did": "didn't", "will": "won't",
    "would": "wouldn't", "can": "can't", "could": "couldn't",
    "must": "mustn't", "has": "hasn't", "have": "haven't", "had": "hadn't",
}

_NO_SPACE_BEFORE = {",", ".", "?", "!", ";", ":", ")"}

_SUBJECT_KINDS = ("NP", "CP", "Pro", "N")

_WARNING_TEXT = {
    ("MissingLemma", "en"): "no entry for '{lemma}'",
    ("MissingLemma", "fr"): "le mot '{lemma}' est absent du lexique",
    ("MissingPos", "en"): "'{lemma}' has no {context} reading",
    ("MissingPos", "fr"): "'{lemma}' n'a pas de lecture {context}",
    ("MissingCell", "en"): "no form of '{lemma}' for {context}",
    ("MissingCell", "fr"): "pas de forme de '{lemma}' pour {context}",
    ("UnsupportedOption", "en"): "option {context} ignored for '{lemma}'",
    ("UnsupportedOption", "fr"): "option {context} ignorée pour '{lemma}'",
}


@dataclass
class Warning:
    code: str
    language: str
    lemma: str
    context: str = ""

    @property
    def message(self):
        template = _WARNING_TEXT.get((self.code, self.language)) or "{lemma}: {context}"
        return template.format(lemma=self.lemma, context=self.context)


class Realization(NamedTuple):
    text: str
    warnings: list


class Token(str):
    """Surface token; carries its language and spacing flags."""

    def __new__(cls, text, lang="en", q=False, no_space_after=False, no_space_before=False):
        tok = super().__new__(cls, text)
        tok.lang = lang
        tok.q = q
        tok.no_space_after = no_space_after
        tok.no_space_before = no_space_before
        return tok


def _mute_h_default():
    global _MUTE_H
    if _MUTE_H is None:
        data = resources.files("birealize").joinpath("data/fr.mute_h.json").read_text("utf-8")
        _MUTE_H = frozenset(json.loads(data))
    return _MUTE_H


_MUTE_H = None


# ------------------------------------------------------------------ lookup

def _lookup(engine, node, pos, warnings):
    try:
        return engine.lexicon(node.lang).lookup(node.lemma, pos)
    except MissingLemma:
        warnings.append(Warning("MissingLemma", node.lang, node.lemma))
    except MissingPos:
        warnings.append(Warning("MissingPos", node.lang, node.lemma, pos))
    return None


def _form(record, key, node, warnings):
    try:
        return record.form(key, node.lang)
    except MissingCell:
        warnings.append(Warning("MissingCell", node.lang, node.lemma, key))
        return node.lemma


# ------------------------------------------------------- sentence types

def apply_sentence_type(tree, typ):
    """Return a transformed copy ready for realization.

    The passive rewrite is structural (object promoted, copula inserted,
    agent demoted to a by/par phrase); negation and interrogatives are
    recorded on the sentence and rendered by the linearizer.
    """
    styp = validate_typ(typ)
    work = tree.clone()
    work.options.pop("typ", None)
    if styp["pas"]:
        _passivize(work)
    work._styp = {"neg": styp["neg"], "int": styp["int"]}
    return work


def _direct_verbs(vp):
    return [c for c in vp.children if c.kind == "V"]


def _find_parts(s):
    subject = next((c for c in s.children if c.kind in _SUBJECT_KINDS), None)
    vp = next((c for c in s.children if c.kind == "VP"), None)
    container = vp if vp is not None else s
    verbs = _direct_verbs(container)
    return subject, container, verbs


def _passivize(s):
    subject, vp, verbs = _find_parts(s)
    if subject is None or not verbs or vp is s:
        raise PassiveShapeError("passive needs a subject and a transitive verb phrase")
    last = verbs[-1]
    obj = None
    for child in vp.children[vp.children.index(last) + 1:]:
        if child.kind in ("NP", "CP", "Pro", "N"):
            obj = child
            break
    if obj is None:
        raise PassiveShapeError("passive needs a direct object")
    engine = last.engine
    finite = verbs[0]
    be = Constituent("V", engine, last.lang, lemma="être" if last.lang == "fr" else "be")
    if "t" in finite.options:
        be.options["t"] = finite.options["t"]
    agent_p = Constituent("P", engine, last.lang, lemma="par" if last.lang == "fr" else "by")
    agent = Constituent("PP", engine, last.lang)
    agent.children = [agent_p, subject]
    # promote the object, demote the subject
    s.children[s.children.index(subject)] = obj
    vp.children.remove(obj)
    last._form = "pp"
    vp.children.insert(vp.children.index(last), be)
    if finite is not last:
        # modal chain keeps its finite verb; the copula joins as a base form
        be._form = "b"
        be.options.pop("t", None)
    vp.children.insert(vp.children.index(last) + 1, agent)


# --------------------------------------------------------- agreement

class _Feats(NamedTuple):
    n: str
    g: str
    pe: int


def propagate_agreement(engine, tree, warnings=None):
    """Annotate a copy of the tree with resolved number/gender/person."""
    work = tree.clone()
    _propagate(engine, work, [] if warnings is None else warnings)
    return work


def _quiet_gender(engine, node, pos):
    try:
        return engine.lexicon(node.lang).lookup(node.lemma, pos).gender
    except BirealizeError:
        return None


def _features_of(engine, node, warnings):
    if node.kind == "NP":
        return _np_features(engine, node, warnings)
    if node.kind == "CP":
        return _cp_features(engine, node, warnings)
    if node.kind == "Pro":
        feats = _Feats(
            node.options.get("n", "s"),
            node.options.get("g", "m"),
            node.options.get("pe", 3),
        )
        node._agr = feats
        return feats
    if node.kind == "N":
        feats = _Feats(
            node.options.get("n", "s"),
            node.options.get("g") or _quiet_gender(engine, node, "N"),
            3,
        )
        node._agr = feats
        return feats
    return _Feats("s", None, 3)


def _np_features(engine, np, warnings):
    head = next((c for c in np.children if c.kind == "N"), None)
    pro = next((c for c in np.children if c.kind == "Pro"), None)
    no = next((c for c in np.children if c.kind == "NO"), None)
    # a nested NP/CP acts as the head when there is no nominal terminal
    sub = None
    if head is None and pro is None:
        sub = next((c for c in np.children if c.kind in ("NP", "CP")), None)
    sub_feats = _features_of(engine, sub, warnings) if sub is not None else None
    # terminal-level options beat phrase-level ones, which beat lexicon data
    number = head.options.get("n") if head is not None else None
    if number is None and pro is not None:
        number = pro.options.get("n")
    if number is None:
        number = np.options.get("n")
    if number is None and no is not None:
        number = "s" if no.value == 1 else "p"
    if number is None and sub_feats is not None:
        number = sub_feats.n
    number = number or "s"
    gender = head.options.get("g") if head is not None else None
    if gender is None and pro is not None:
        gender = pro.options.get("g")
    if gender is None:
        gender = np.options.get("g")
    if gender is None and head is not None:
        gender = _quiet_gender(engine, head, "N")
    if gender is None and pro is not None:
        gender = "m"
    if gender is None and sub_feats is not None:
        gender = sub_feats.g
    person = np.options.get("pe") or (pro.options.get("pe", 3) if pro else 3)
    feats = _Feats(number, gender, person)
    for child in np.children:
        if child.kind in ("D", "A", "NO", "N", "Pro"):
            child._agr = feats
        elif child.kind == "AP":
            for sub in child.children:
                if sub.kind == "A":
                    sub._agr = feats
        else:
            _propagate(engine, child, warnings)
    return feats


def _cp_features(engine, cp, warnings):
    conjuncts = [c for c in cp.children if c.kind != "C"]
    feats = [_features_of(engine, c, warnings) for c in conjuncts]
    if len(conjuncts) >= 2:
        number = "p"
    else:
        number = feats[0].n if feats else "s"
    genders = [f.g for f in feats]
    if genders and all(g == "f" for g in genders):
        gender = "f"
    elif any(g in ("m", "f") for g in genders):
        gender = "m"
    else:
        gender = None
    person = min((f.pe for f in feats), default=3)
    out = _Feats(cp.options.get("n", number), cp.options.get("g", gender),
                 cp.options.get("pe", person))
    cp._agr = out
    return out


def _propagate(engine, node, warnings):
    if node.kind in ("S", "SP"):
        _propagate_sentence(engine, node, warnings)
    elif node.kind == "NP":
        _np_features(engine, node, warnings)
    elif node.kind == "CP":
        _cp_features(engine, node, warnings)
    elif node.is_phrase:
        for child in node.children:
            _propagate(engine, child, warnings)
    elif node.kind in ("N", "Pro"):
        _features_of(engine, node, warnings)


def _propagate_sentence(engine, s, warnings):
    subject, container, verbs = _find_parts(s)
    feats = _features_of(engine, subject, warnings) if subject is not None else _Feats("s", None, 3)
    s._subject = subject
    s._subj_feats = feats
    finite = next((v for v in verbs if getattr(v, "_form", None) is None), None)
    s._finite = finite
    if finite is not None:
        finite._agr = feats
        finite._tense = (
            finite.options.get("t")
            or (container.options.get("t") if container is not s else None)
            or s.options.get("t")
            or "p"
        )
        seen_finite = False
        for v in verbs:
            if v is finite:
                seen_finite = True
                continue
            if getattr(v, "_form", None) is None and seen_finite:
                v._form = "b"
            if getattr(v, "_form", None) == "pp":
                v._agr = feats
    if container is not s:
        for child in container.children:
            if child.kind in ("A",):
                child._agr = feats
            elif child.kind == "AP":
                for sub in child.children:
                    if sub.kind == "A":
                        sub._agr = feats
            elif child.kind != "V":
                _propagate(engine, child, warnings)
    for child in s.children:
        if child is subject or child is container:
            continue
        _propagate(engine, child, warnings)


# --------------------------------------------------------- linearization

def linearize(engine, tree, warnings=None):
    """Ordered surface tokens of a propagated tree (punctuation included for S roots)."""
    warnings = [] if warnings is None else warnings
    return _lin(engine, tree, warnings, root=True)


def _agr(node):
    feats = getattr(node, "_agr", None)
    if feats is None:
        feats = _Feats(node.options.get("n", "s"), node.options.get("g"), node.options.get("pe", 3))
    return feats


def _lin(engine, node, warnings, root=False):
    if node.is_terminal:
        toks = _lin_terminal(engine, node, warnings)
    elif node.kind in ("S", "SP"):
        toks = _lin_sentence(engine, node, warnings, root)
    elif node.kind == "NP":
        toks = _lin_np(engine, node, warnings)
    elif node.kind == "CP":
        toks = _lin_cp(engine, node, warnings)
    else:
        toks = []
        for child in node.children:
            toks += _lin(engine, child, warnings)
    if node.options.get("ba") == "(":
        toks = [Token("(", node.lang, no_space_after=True), *toks,
                Token(")", node.lang, no_space_before=True)]
    return toks


def _lin_sentence(engine, s, warnings, root):
    styp = getattr(s, "_styp", None) or {"neg": False, "int": None}
    finite = getattr(s, "_finite", None)
    fronted, suffix = [], []
    if finite is not None:
        fronted, suffix = _render_verb_group(engine, s, finite, styp, warnings)
    toks = list(fronted)
    for child in s.children:
        if getattr(child, "_skip", False):
            continue
        toks += _lin(engine, child, warnings)
    toks += suffix
    if root and s.kind == "S":
        mark = "?" if styp.get("int") else "."
        toks.append(Token(mark, s.lang))
    return toks


def _lin_np(engine, np, warnings):
    # children keep their order; only adjectives move relative to the head
    head = next((c for c in np.children if c.kind == "N"), None)
    if head is None:
        toks = []
        for child in np.children:
            toks += _lin(engine, child, warnings)
        return toks
    head_idx = np.children.index(head)
    before, pre, post, after = [], [], [], []
    for i, child in enumerate(np.children):
        if child is head:
            continue
        if child.kind in ("A", "AP"):
            lemma = child.lemma if child.kind == "A" else next(
                (c.lemma for c in child.children if c.kind == "A"), None)
            if np.lang == "fr" and lemma not in PRENOMINAL_FR:
                post.append(child)
            else:
                pre.append(child)
        elif i < head_idx:
            before.append(child)
        else:
            after.append(child)
    toks = []
    for child in (*before, *pre, head, *post, *after):
        toks += _lin(engine, child, warnings)
    return toks


def _lin_cp(engine, cp, warnings):
    conj = next((c for c in cp.children if c.kind == "C"), None)
    items = [c for c in cp.children if c.kind != "C"]
    if len(items) <= 1:
        return _lin(engine, items[0], warnings) if items else []
    toks = []
    for i, item in enumerate(items):
        toks += _lin(engine, item, warnings)
        if i < len(items) - 2:
            toks.append(Token(",", cp.lang))
        elif i == len(items) - 2:
            toks += _lin(engine, conj, warnings) if conj is not None else [Token(",", cp.lang)]
    return toks


def _lin_terminal(engine, node, warnings):
    lang = node.lang
    feats = _agr(node)
    if node.kind == "Q":
        return [Token(node.value, lang, q=True)]
    if node.kind == "DT":
        return [Token(t, lang) for t in
                morphology.format_date(node.value, node.options.get("dOpt"), lang)]
    if node.kind == "NO":
        if node.options.get("dOpt", {}).get("nat"):
            try:
                words = morphology.number_to_words(node.value, feats.g or "m", lang)
                return [Token(w, lang) for w in words]
            except BirealizeError:
                warnings.append(Warning("UnsupportedOption", lang, str(node.value), "nat"))
        return [Token(str(node.value), lang)]
    if node.kind in ("P", "C", "Adv"):
        _lookup(engine, node, node.kind, warnings)
        return [Token(node.lemma, lang)]
    record = _lookup(engine, node, node.kind, warnings)
    if record is None:
        return [Token(node.lemma, lang)]
    if node.kind == "N":
        return [Token(_form(record, feats.n, node, warnings), lang)]
    if node.kind == "A":
        key = (feats.g or "m") + feats.n
        return [Token(_form(record, key, node, warnings), lang)]
    if node.kind == "D":
        key = (feats.g or "m") + feats.n
        text = _form(record, key, node, warnings)
        return [Token(text, lang)] if text else []
    if node.kind == "Pro":
        key = (feats.g or "n") + feats.n
        return [Token(_form(record, key, node, warnings), lang)]
    # V
    group = getattr(node, "_group", None)
    if group is not None:
        return group
    form = getattr(node, "_form", None)
    if form == "b":
        return [Token(node.lemma, lang)]
    if form == "pp":
        return [Token(_participle_form(record, node, feats, warnings), lang)]
    tense = getattr(node, "_tense", None) or node.options.get("t", "p")
    toks = _conjugate(record, tense, feats, node, warnings)
    return [Token(t, lang) for t in toks]


def _conjugate(record, tense, feats, node, warnings):
    try:
        return morphology.conjugate(record, tense, feats.pe, feats.n, node.lang)
    except MissingCell:
        warnings.append(Warning("MissingCell", node.lang, node.lemma, f"{tense}:{feats.pe}{feats.n}"))
        return [node.lemma]


def _participle_form(record, node, feats, warnings):
    base = _form(record, "pp", node, warnings)
    if node.lang == "fr":
        suffix = {"fs": "e", "mp": "s", "fp": "es"}.get((feats.g or "m") + feats.n, "")
        return base + suffix
    return base


def _do_form(engine, s, tense, feats, warnings):
    try:
        record = engine.lexicon("en").lookup("do", "V")
        return morphology.conjugate(record, tense, feats.pe, feats.n, "en")[0]
    except BirealizeError:
        warnings.append(Warning("MissingLemma", "en", "do"))
        return "do"


def _render_verb_group(engine, s, finite, styp, warnings):
    """Fill finite._group and return (fronted, suffix) token lists."""
    lang = finite.lang
    feats = _agr(finite)
    tense = getattr(finite, "_tense", None) or "p"
    neg = styp.get("neg", False)
    imode = styp.get("int")
    record = _lookup(engine, finite, "V", warnings)
    if record is None:
        conjugated = [finite.lemma]
    else:
        conjugated = _conjugate(record, tense, feats, finite, warnings)

    fronted, suffix = [], []
    if lang == "fr":
        group = list(conjugated)
        if imode == "yon":
            # pronoun copy of the subject; a plain pronoun subject inverts instead
            subject = getattr(s, "_subject", None)
            pron = morphology.pronoun_for(feats.g, feats.n, "fr")
            if subject is not None and subject.kind == "Pro":
                subject._skip = True
            verb = group[-1]
            if verb[-1].lower() in "aeiouéè" and pron in ("il", "elle"):
                group[-1] = f"{verb}-t-{pron}"
            else:
                group[-1] = f"{verb}-{pron}"
        if neg:
            group = ["ne", *group, "pas"]
        if imode == "tag":
            suffix = [Token(",", lang), Token("n'est-ce", lang), Token("pas", lang)]
        finite._group = [Token(t, lang) for t in group]
        return fronted, suffix

    # English
    aux_like = tense == "f" or finite.lemma in morphology.EN_AUX
    if neg:
        if aux_like:
            group = [conjugated[0], "not", *conjugated[1:]]
        else:
            group = [_do_form(engine, s, tense, feats, warnings), "not", finite.lemma]
    else:
        group = list(conjugated)
    aux_token = group[0] if (aux_like or neg) else None
    if imode == "yon":
        if aux_token is None:
            fronted = [_do_form(engine, s, tense, feats, warnings)]
            group = [finite.lemma]
        else:
            fronted = [group[0]]
            group = group[1:]
    elif imode == "tag":
        base_aux = aux_token or _do_form(engine, s, tense, feats, warnings)
        tag_aux = base_aux if neg else EN_NEG_CONTRACTIONS.get(base_aux, base_aux + "n't")
        pron = morphology.pronoun_for(feats.g, feats.n, "en")
        suffix = [Token(",", lang), Token(tag_aux, lang), Token(pron, lang)]
    # merge "can not" into "cannot" when left adjacent in the remaining group
    merged = []
    i = 0
    while i < len(group):
        if group[i] == "can" and i + 1 < len(group) and group[i + 1] == "not":
            merged.append("cannot")
            i += 2
        else:
            merged.append(group[i])
            i += 1
    fronted = [Token(t, lang) for t in fronted]
    finite._group = [Token(t, lang) for t in merged]
    return fronted, suffix


# --------------------------------------------------------- post-processing

def _starts_with_vowel_fr(word, mute_h):
    if not word:
        return False
    first = word[0].lower()
    if first in _FR_VOWELS:
        return True
    if first == "h":
        w = word.lower()
        return w in mute_h or (w[-1] in "sx" and w[:-1] in mute_h)
    return False


def post_process(tokens, language, sentence=False, mute_h=None):
    """Elision, contraction, a/an, spacing, capitalization; idempotent on output."""
    if mute_h is None:
        mute_h = _mute_h_default()
    toks = [t if isinstance(t, Token) else Token(t, language) for t in tokens]
    toks = [t for t in toks if str(t)]

    out = []
    i = 0
    while i < len(toks):
        tok = toks[i]
        nxt = toks[i + 1] if i + 1 < len(toks) else None
        low = str(tok).lower()
        if tok.lang == "fr" and not tok.q and nxt is not None and not nxt.q:
            nlow = str(nxt).lower()
            if low in FR_ELIDERS and _starts_with_vowel_fr(str(nxt), mute_h):
                merged = Token(str(tok)[:-1] + "'" + str(nxt), "fr",
                               no_space_before=tok.no_space_before,
                               no_space_after=nxt.no_space_after)
                out.append(merged)
                i += 2
                continue
            if low in ("de", "à") and nlow in ("le", "les") and nxt.lang == "fr":
                after = toks[i + 2] if i + 2 < len(toks) else None
                elides_next = (
                    nlow == "le" and after is not None and not after.q
                    and _starts_with_vowel_fr(str(after), mute_h)
                )
                if not elides_next:
                    out.append(Token(FR_CONTRACTIONS[(low, nlow)], "fr"))
                    i += 2
                    continue
        if tok.lang == "en" and not tok.q and low == "a" and nxt is not None and not nxt.q:
            if str(nxt) and str(nxt)[0].lower() in _EN_VOWELS:
                out.append(Token("An" if str(tok) == "A" else "an", "en"))
                i += 1
                continue
        out.append(tok)
        i += 1

    if sentence and len(out) >= 2 and str(out[-1]) == "." and str(out[-2]).endswith("."):
        out.pop()

    pieces = []
    prev = None
    for tok in out:
        if prev is not None and not (
            str(tok) in _NO_SPACE_BEFORE or tok.no_space_before
            or prev.no_space_after or str(prev) == "("
        ):
            pieces.append(" ")
        pieces.append(str(tok))
        prev = tok
    text = "".join(pieces).strip()
    while "  " in text:
        text = text.replace("  ", " ")
    if sentence:
        for idx, ch in enumerate(text):
            if ch.isalpha():
                text = text[:idx] + ch.upper() + text[idx + 1:]
                break
    return text


# --------------------------------------------------------------- realize

def realize(engine, tree):
    """Deterministic realization of a constituent; never raises."""
    warnings = []
    work = tree.clone()
    if work.kind in ("S", "SP") and getattr(work, "_styp", None) is None:
        typ = work.options.get("typ")
        if typ:
            try:
                work = apply_sentence_type(work, typ)
            except PassiveShapeError:
                warnings.append(Warning("UnsupportedOption", work.lang, work.kind, "pas"))
                softened = dict(typ)
                softened["pas"] = False
                work = apply_sentence_type(work, softened)
    _propagate(engine, work, warnings)
    tokens = linearize(engine, work, warnings)
    text = post_process(tokens, work.lang, sentence=(work.kind == "S"), mute_h=engine.mute_h)
    return Realization(text, warnings)
