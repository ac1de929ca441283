"""Text formats for categories, functors, presheaves and transformations.

The format is a subset of JSON with only objects, arrays and strings.
Every document carries a ``"kind"`` field.  Functors and presheaves refer
to their categories either by a path (resolved against the referencing
file's directory) or by an inline category record.  Copresheaves are
presheaves read on the opposite of their base.

Serialization is canonical: sorted keys, sorted labels, two-space
indentation and a trailing newline, so equal values print identically.
"""
import json
import os
from dataclasses import dataclass, field
from json.decoder import scanstring

from .category import FinCategory, opposite, validate_category
from .errors import ParseError, SemanticError
from .presheaf import FinFunctor, NatTrans, Presheaf, validate_functor, validate_nattrans, validate_presheaf

KINDS = ("category", "functor", "presheaf", "copresheaf", "nattrans")

_WS = " \t\r\n"


class _Reader:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def where(self, pos=None):
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        column = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, column

    def fail(self, expected, pos=None):
        line, column = self.where(pos)
        raise ParseError(line, column, expected)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in _WS:
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.fail(repr(ch))
        self.pos += 1

    def value(self):
        ch = self.peek()
        if ch == "{":
            return self.obj()
        if ch == "[":
            return self.array()
        if ch == '"':
            return self.string()
        self.fail("object, array or string")

    def string(self):
        start = self.pos
        self.expect('"')
        try:
            s, self.pos = scanstring(self.text, self.pos)
        except json.JSONDecodeError as exc:
            self.fail(f"valid string ({exc.msg})", start if exc.pos is None else exc.pos)
        return s

    def obj(self):
        self.expect("{")
        out = {}
        if self.peek() == "}":
            self.pos += 1
            return out
        while True:
            if self.peek() != '"':
                self.fail("string key")
            key_pos = self.pos
            key = self.string()
            if key in out:
                self.fail(f"unique key (duplicate {key!r})", key_pos)
            self.expect(":")
            out[key] = self.value()
            ch = self.peek()
            self.pos += 1
            if ch == "}":
                return out
            if ch != ",":
                self.fail("',' or '}'", self.pos - 1)

    def array(self):
        self.expect("[")
        out = []
        if self.peek() == "]":
            self.pos += 1
            return out
        while True:
            out.append(self.value())
            ch = self.peek()
            self.pos += 1
            if ch == "]":
                return out
            if ch != ",":
                self.fail("',' or ']'", self.pos - 1)


def parse_text(text):
    """Parse the restricted JSON subset into dicts, lists and strings."""
    reader = _Reader(text)
    value = reader.value()
    if reader.peek():
        reader.fail("end of input")
    return value


@dataclass
class Document:
    """A parsed document: ``kind`` and the validated ``value``.

    ``refs`` remembers which fields were given as paths so that
    re-serializing a file reproduces it.
    """

    kind: str
    value: object
    refs: dict = field(default_factory=dict)


def _field(record, name, kind):
    try:
        return record[name]
    except KeyError:
        raise SemanticError(f"{kind} document lacks field {name!r}") from None


def _strings(value, what):
    if isinstance(value, str):
        return value
    raise SemanticError(f"{what} must be a string")


def _str_map(value, what):
    if not isinstance(value, dict):
        raise SemanticError(f"{what} must be an object")
    for k, v in value.items():
        _strings(v, f"{what}[{k!r}]")
    return value


def _category_value(record):
    objects = _field(record, "objects", "category")
    morphisms = _field(record, "morphisms", "category")
    if not isinstance(objects, list) or not isinstance(morphisms, list):
        raise SemanticError("objects and morphisms must be arrays")
    for m in morphisms:
        if not isinstance(m, dict):
            raise SemanticError("morphism records must be objects")
        for k in ("id", "src", "tgt"):
            _strings(_field(m, k, "morphism"), f"morphism {k}")
    return validate_category({
        "objects": [_strings(x, "object label") for x in objects],
        "morphisms": morphisms,
        "identity": _str_map(_field(record, "identity", "category"), "identity"),
        "compose": _str_map(_field(record, "compose", "category"), "compose"),
    })


class _Loader:
    def __init__(self, base_dir):
        self.base_dir = base_dir
        self.cache = {}

    def category_ref(self, ref, refs, name):
        """A category given as a path or an inline record."""
        if isinstance(ref, str):
            refs[name] = ref
            path = os.path.normpath(os.path.join(self.base_dir, ref))
            if path not in self.cache:
                doc = load(path)
                if doc.kind != "category":
                    raise SemanticError(f"{ref} is a {doc.kind} document, expected a category")
                self.cache[path] = doc.value
            return self.cache[path]
        if isinstance(ref, dict):
            return _category_value(ref)
        raise SemanticError(f"{name} must be a path or a category record")

    def presheaf_ref(self, ref, refs, name):
        if isinstance(ref, str):
            refs[name] = ref
            doc = load(os.path.join(self.base_dir, ref))
        elif isinstance(ref, dict):
            doc = self.document(ref)
        else:
            raise SemanticError(f"{name} must be a path or a presheaf record")
        if doc.kind not in ("presheaf", "copresheaf"):
            raise SemanticError(f"{name} is a {doc.kind} document, expected a presheaf")
        return doc.value

    def document(self, record) -> Document:
        if not isinstance(record, dict):
            raise SemanticError("document must be an object")
        kind = _field(record, "kind", "any")
        refs = {}
        if kind == "category":
            return Document(kind, _category_value(record))
        if kind == "functor":
            source = self.category_ref(_field(record, "source", kind), refs, "source")
            target = self.category_ref(_field(record, "target", kind), refs, "target")
            value = validate_functor(
                source, target,
                _str_map(_field(record, "obj_map", kind), "obj_map"),
                _str_map(_field(record, "mor_map", kind), "mor_map"),
            )
            return Document(kind, value, refs)
        if kind in ("presheaf", "copresheaf"):
            base = self.category_ref(_field(record, "base", kind), refs, "base")
            if kind == "copresheaf":
                base = opposite(base)
            elements = _field(record, "elements", kind)
            if not isinstance(elements, dict):
                raise SemanticError("elements must be an object")
            for x, labels in elements.items():
                if not isinstance(labels, list):
                    raise SemanticError(f"elements[{x!r}] must be an array")
                for p in labels:
                    _strings(p, "element label")
                if len(set(labels)) != len(labels):
                    raise SemanticError(f"duplicate element label at {x!r}")
            action = _field(record, "action", kind)
            if not isinstance(action, dict):
                raise SemanticError("action must be an object")
            for m, mapping in action.items():
                _str_map(mapping, f"action[{m!r}]")
            return Document(kind, validate_presheaf(base, elements, action), refs)
        if kind == "nattrans":
            source = self.presheaf_ref(_field(record, "source", kind), refs, "source")
            target = self.presheaf_ref(_field(record, "target", kind), refs, "target")
            comps = _field(record, "components", kind)
            if not isinstance(comps, dict):
                raise SemanticError("components must be an object")
            for x, mapping in comps.items():
                _str_map(mapping, f"components[{x!r}]")
            return Document(kind, validate_nattrans(source, target, comps), refs)
        raise SemanticError(f"unknown document kind {kind!r}")


def parse(text, base_dir=".") -> Document:
    """Parse and validate a document given as text."""
    return _Loader(base_dir).document(parse_text(text))


def load(path) -> Document:
    """Parse and validate the document stored at ``path``."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse(text, os.path.dirname(os.path.abspath(path)))


# ------------------------------------------------------------------ output

def category_record(C: FinCategory):
    return {
        "kind": "category",
        "objects": list(C.objects),
        "morphisms": [{"id": m.id, "src": m.src, "tgt": m.tgt} for m in C.morphisms],
        "identity": dict(C.identity),
        "compose": {f"{a}|{b}": c for (a, b), c in C.composition.items()},
    }


def functor_record(f: FinFunctor, refs=None):
    refs = refs or {}
    return {
        "kind": "functor",
        "source": refs.get("source", category_record(f.source)),
        "target": refs.get("target", category_record(f.target)),
        "obj_map": dict(f.obj_map),
        "mor_map": dict(f.mor_map),
    }


def presheaf_record(u: Presheaf, kind="presheaf", refs=None):
    """Identity actions are omitted; they are implied."""
    refs = refs or {}
    C = u.base
    base = opposite(C) if kind == "copresheaf" else C
    return {
        "kind": kind,
        "base": refs.get("base", category_record(base)),
        "elements": {x: list(u.elements[x]) for x in C.objects},
        "action": {m.id: dict(u.action[m.id]) for m in C.morphisms if not C.is_identity(m.id)},
    }


def nattrans_record(t: NatTrans, refs=None):
    refs = refs or {}
    return {
        "kind": "nattrans",
        "source": refs.get("source", presheaf_record(t.source)),
        "target": refs.get("target", presheaf_record(t.target)),
        "components": {x: dict(t.components[x].assignment) for x in t.source.base.objects},
    }


def record_of(doc: Document):
    if doc.kind == "category":
        return category_record(doc.value)
    if doc.kind == "functor":
        return functor_record(doc.value, doc.refs)
    if doc.kind in ("presheaf", "copresheaf"):
        return presheaf_record(doc.value, doc.kind, doc.refs)
    if doc.kind == "nattrans":
        return nattrans_record(doc.value, doc.refs)
    raise SemanticError(f"unknown document kind {doc.kind!r}")


def dumps(record) -> str:
    """Canonical text for a plain record."""
    return json.dumps(record, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def compact(record) -> str:
    """One-line canonical text, for human-readable reports."""
    return json.dumps(record, sort_keys=True, ensure_ascii=False, separators=(", ", ": "))


def serialize(doc) -> str:
    """Canonical text of a :class:`Document` or of a bare value."""
    if not isinstance(doc, Document):
        doc = Document(kind_of(doc), doc)
    return dumps(record_of(doc))


def kind_of(value):
    if isinstance(value, FinCategory):
        return "category"
    if isinstance(value, FinFunctor):
        return "functor"
    if isinstance(value, Presheaf):
        return "presheaf"
    if isinstance(value, NatTrans):
        return "nattrans"
    raise TypeError(f"cannot serialize {type(value).__name__}")
