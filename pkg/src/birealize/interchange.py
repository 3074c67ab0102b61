"""Bit-exact tree document format (JSON, UTF-8).

A node is {"kind", "lemma"|"value", "lang"?, "options"?, "children"?}; the
language is inherited from the parent when omitted (required at the root).
Serialization is canonical: keys sorted, default values omitted, so
parse ∘ serialize is the identity on trees.
"""

import datetime
import json

from .errors import BirealizeError, ParseError, SchemaError
from .morphology import DATE_TOGGLES
from .syntax import PHRASE_KINDS, TERMINAL_KINDS, make_phrase, make_terminal

_TYP_DEFAULTS = {"neg": False, "int": None, "pas": False}


def parse_tree(engine, document):
    """Build a constituent from document bytes/str (or an already-parsed dict)."""
    if isinstance(document, (bytes, str)):
        try:
            doc = json.loads(document)
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            pos = f" (line {exc.lineno}, column {exc.colno})" if hasattr(exc, "lineno") else ""
            raise ParseError(f"bad tree document{pos}: {exc}") from exc
    else:
        doc = document
    return _parse_node(engine, doc, "$", None)


def _parse_node(engine, doc, path, parent_lang):
    if not isinstance(doc, dict):
        raise SchemaError("node must be an object", path)
    unknown = set(doc) - {"kind", "lemma", "value", "lang", "options", "children"}
    if unknown:
        raise SchemaError(f"unknown keys {sorted(unknown)}", path)
    kind = doc.get("kind")
    if kind not in TERMINAL_KINDS and kind not in PHRASE_KINDS:
        raise SchemaError(f"unknown kind {kind!r}", f"{path}.kind")
    lang = doc.get("lang", parent_lang)
    if lang is None:
        raise SchemaError("root node must carry a lang", f"{path}.lang")
    if lang not in ("en", "fr"):
        raise SchemaError(f"unknown lang {lang!r}", f"{path}.lang")

    if kind in TERMINAL_KINDS:
        if doc.get("children"):
            raise SchemaError("terminals cannot have children", f"{path}.children")
        if kind in ("NO", "DT", "Q"):
            if "lemma" in doc or "value" not in doc:
                raise SchemaError(f"{kind} takes a value", path)
            value = doc["value"]
            if kind == "DT":
                if not isinstance(value, str):
                    raise SchemaError("DT value must be an ISO date-time string", f"{path}.value")
                try:
                    value = datetime.datetime.fromisoformat(value)
                except ValueError as exc:
                    raise SchemaError(f"bad date-time: {exc}", f"{path}.value") from exc
        else:
            if "value" in doc or "lemma" not in doc:
                raise SchemaError(f"{kind} takes a lemma", path)
            value = doc["lemma"]
        try:
            node = make_terminal(kind, value, engine, lang)
        except BirealizeError as exc:
            raise SchemaError(str(exc), path) from exc
    else:
        if "lemma" in doc or "value" in doc:
            raise SchemaError("phrases carry no lemma/value", path)
        children = doc.get("children", [])
        if not isinstance(children, list):
            raise SchemaError("children must be a list", f"{path}.children")
        node = make_phrase(kind, [], engine, lang)
        node.children = [
            _parse_node(engine, child, f"{path}.children[{i}]", lang)
            for i, child in enumerate(children)
        ]

    options = doc.get("options", {})
    if not isinstance(options, dict):
        raise SchemaError("options must be an object", f"{path}.options")
    for key, value in options.items():
        try:
            node.set_option(key, value)
        except BirealizeError as exc:
            raise SchemaError(str(exc), f"{path}.options.{key}") from exc
    return node


def _dump_options(node):
    out = {}
    for key, value in node.options.items():
        if key == "typ":
            out[key] = {k: v for k, v in value.items() if v != _TYP_DEFAULTS[k]}
        elif key == "dOpt":
            if node.kind == "DT":
                out[key] = {k: v for k, v in value.items() if v is not True}
            else:
                out[key] = {k: v for k, v in value.items() if v}
        else:
            out[key] = value
    return out


def _dump_node(node, parent_lang):
    doc = {"kind": node.kind}
    if node.lang != parent_lang:
        doc["lang"] = node.lang
    if node.is_terminal:
        if node.kind == "DT":
            doc["value"] = node.value.isoformat()
        elif node.kind in ("NO", "Q"):
            doc["value"] = node.value
        else:
            doc["lemma"] = node.lemma
    elif node.children:
        doc["children"] = [_dump_node(c, node.lang) for c in node.children]
    options = _dump_options(node)
    if options:
        doc["options"] = options
    return doc


def serialize_tree(node):
    """Canonical UTF-8 bytes for a tree; parse(serialize(t)) == t structurally."""
    doc = _dump_node(node, None)
    return json.dumps(doc, sort_keys=True, ensure_ascii=False,
                      separators=(",", ":")).encode("utf-8")
