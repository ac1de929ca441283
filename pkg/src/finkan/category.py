"""Finite categories given by an explicit composition table.

Composition of morphisms is diagrammatic: ``compose(a, b)`` is "a, then b"
and requires ``tgt(a) == src(b)``.  Objects are stored alongside their
identity morphisms rather than being identified with them.
"""
from collections.abc import Mapping
from typing import NamedTuple

from .errors import (
    AssociativityViolation,
    CompositionDomainError,
    IdentityLawViolation,
    MissingIdentity,
    SemanticError,
    SourceTargetMismatch,
    UnknownMorphism,
    UnknownObject,
)


class Morphism(NamedTuple):
    id: str
    src: str
    tgt: str


class FinCategory:
    """A validated finite category.

    Instances are immutable; build them with :func:`validate_category`.
    Objects and morphisms are kept sorted by label.
    """

    __slots__ = ("objects", "morphisms", "_identity", "_composition", "_mor", "_hom", "_key", "_hash")

    def __init__(self, objects, morphisms, identity, composition):
        self.objects = tuple(sorted(objects))
        self.morphisms = tuple(sorted(morphisms))
        self._identity = dict(identity)
        self._composition = dict(composition)
        self._mor = {m.id: m for m in self.morphisms}
        hom = {(x, y): [] for x in self.objects for y in self.objects}
        for m in self.morphisms:
            hom[m.src, m.tgt].append(m.id)
        self._hom = {k: tuple(v) for k, v in hom.items()}
        self._key = (
            self.objects,
            self.morphisms,
            tuple(sorted(self._identity.items())),
            tuple(sorted(self._composition.items())),
        )
        self._hash = hash(self._key)

    def __eq__(self, other):
        return self is other or (isinstance(other, FinCategory) and self._hash == other._hash and self._key == other._key)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FinCategory(objects={list(self.objects)}, morphisms={len(self.morphisms)})"

    @property
    def identity(self):
        return dict(self._identity)

    @property
    def composition(self):
        """The composition table as a dict ``{(a, b): ab}``."""
        return dict(self._composition)

    def morphism(self, label) -> Morphism:
        try:
            return self._mor[label]
        except KeyError:
            raise UnknownMorphism(label) from None

    def src(self, a):
        return self.morphism(a).src

    def tgt(self, a):
        return self.morphism(a).tgt

    def id(self, x):
        try:
            return self._identity[x]
        except KeyError:
            raise UnknownObject(x) from None

    def is_identity(self, a):
        m = self.morphism(a)
        return self._identity[m.src] == a

    def compose(self, a, b):
        """Diagrammatic composite ``ab`` (first ``a``, then ``b``)."""
        try:
            return self._composition[a, b]
        except KeyError:
            raise CompositionDomainError(a, b, present=False) from None

    def hom(self, x, y):
        try:
            return self._hom[x, y]
        except KeyError:
            raise UnknownObject(x if x not in self.objects else y) from None

    def composable_pairs(self):
        for a in self.morphisms:
            for b in self.morphisms:
                if a.tgt == b.src:
                    yield a.id, b.id


def hom_set(C: FinCategory, x, y):
    """All morphisms ``x -> y`` of ``C`` in canonical order."""
    return C.hom(x, y)


def _morphism_record(m):
    if isinstance(m, Morphism):
        return m
    if isinstance(m, Mapping):
        try:
            return Morphism(m["id"], m["src"], m["tgt"])
        except KeyError as exc:
            raise SemanticError(f"morphism record lacks field {exc.args[0]!r}") from None
    return Morphism(*m)


def _compose_key(key):
    if isinstance(key, str):
        parts = key.split("|")
        if len(parts) != 2:
            raise SemanticError(f"composition key {key!r} must have the form 'a|b'")
        return tuple(parts)
    a, b = key
    return a, b


def validate_category(raw) -> FinCategory:
    """Check the category axioms exhaustively and return a :class:`FinCategory`.

    ``raw`` is a mapping with keys ``objects``, ``morphisms`` (records with
    ``id``/``src``/``tgt``), ``identity`` (object -> morphism) and ``compose``
    (``(a, b)`` or ``"a|b"`` -> composite).  Checks run in the order:
    labels, identities, composition domain, identity laws, source/target of
    composites, associativity.
    """
    objects = list(raw["objects"])
    morphisms = [_morphism_record(m) for m in raw["morphisms"]]
    identity = dict(raw["identity"])
    compose = {_compose_key(k): v for k, v in dict(raw["compose"]).items()}

    for label in objects + [m.id for m in morphisms]:
        if not isinstance(label, str) or not label:
            raise SemanticError(f"labels must be nonempty strings, got {label!r}")
    if len(set(objects)) != len(objects):
        raise SemanticError("duplicate object label")
    mor = {}
    for m in morphisms:
        if m.id in mor:
            raise SemanticError(f"duplicate morphism label {m.id!r}")
        for end in (m.src, m.tgt):
            if end not in objects:
                raise UnknownObject(end)
        mor[m.id] = m

    obj_set = set(objects)
    for x in identity:
        if x not in obj_set:
            raise UnknownObject(x)
    for x in objects:
        if x not in identity:
            raise MissingIdentity(x)
        i = identity[x]
        if i not in mor:
            raise UnknownMorphism(i)
        if mor[i].src != x or mor[i].tgt != x:
            raise IdentityLawViolation(i)

    for (a, b), c in compose.items():
        for label in (a, b, c):
            if label not in mor:
                raise UnknownMorphism(label)
        if mor[a].tgt != mor[b].src:
            raise CompositionDomainError(a, b, present=True)
    for a in morphisms:
        for b in morphisms:
            if a.tgt == b.src and (a.id, b.id) not in compose:
                raise CompositionDomainError(a.id, b.id, present=False)

    for a in morphisms:
        if compose[identity[a.src], a.id] != a.id or compose[a.id, identity[a.tgt]] != a.id:
            raise IdentityLawViolation(a.id)

    for (a, b), c in compose.items():
        if mor[c].src != mor[a].src or mor[c].tgt != mor[b].tgt:
            raise SourceTargetMismatch(a, b)

    by_src = {}
    for m in morphisms:
        by_src.setdefault(m.src, []).append(m.id)
    for (a, b), ab in compose.items():
        for c in by_src.get(mor[b].tgt, ()):
            if compose[ab, c] != compose[a, compose[b, c]]:
                raise AssociativityViolation(a, b, c)

    return FinCategory(objects, morphisms, identity, compose)


def opposite(C: FinCategory) -> FinCategory:
    """The opposite category: same labels, ends swapped, composition reversed."""
    return FinCategory(
        C.objects,
        [Morphism(m.id, m.tgt, m.src) for m in C.morphisms],
        C.identity,
        {(b, a): c for (a, b), c in C.composition.items()},
    )


def category_from_parts(objects, morphisms, identity, compose) -> FinCategory:
    """Convenience wrapper around :func:`validate_category`."""
    return validate_category(
        {"objects": objects, "morphisms": morphisms, "identity": identity, "compose": compose}
    )
