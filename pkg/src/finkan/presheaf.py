"""Functors, set-valued presheaves and natural transformations.

A presheaf ``v`` on ``C`` assigns a finite set of string labels to each
object, and to each morphism ``a: c' -> c`` a map ``v(c) -> v(c')``.
Copresheaves are presheaves on the opposite category.

Natural transformations compose diagrammatically: ``compose_nat(beta, gamma)``
is "beta, then gamma".
"""
from itertools import product

from . import kernels
from .category import FinCategory, opposite
from .errors import (
    BaseMismatch,
    CompositionMismatch,
    CompositionNotPreserved,
    FunctorialityViolation,
    IdentityActionViolation,
    IdentityNotPreserved,
    IllTypedAction,
    IllTypedComponent,
    NaturalityViolation,
    SemanticError,
    SourceTargetNotPreserved,
    UnknownMorphism,
    UnknownObject,
)


def _frozen(mapping):
    return tuple(sorted(mapping.items()))


# ---------------------------------------------------------------- functors


class FinFunctor:
    """A functor between finite categories, given on objects and morphisms."""

    __slots__ = ("source", "target", "obj_map", "mor_map", "_key", "_hash")

    def __init__(self, source, target, obj_map, mor_map):
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        self.mor_map = dict(mor_map)
        self._key = (source, target, _frozen(self.obj_map), _frozen(self.mor_map))
        self._hash = hash(self._key)

    def __eq__(self, other):
        return self is other or (isinstance(other, FinFunctor) and self._hash == other._hash and self._key == other._key)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FinFunctor(obj_map={self.obj_map})"

    def __call__(self, label):
        """Apply to an object or a morphism label."""
        if label in self.obj_map:
            return self.obj_map[label]
        return self.mor_map[label]


def validate_functor(source: FinCategory, target: FinCategory, obj_map, mor_map) -> FinFunctor:
    obj_map, mor_map = dict(obj_map), dict(mor_map)
    for x in source.objects:
        if x not in obj_map:
            raise UnknownObject(x)
        if obj_map[x] not in target.objects:
            raise UnknownObject(obj_map[x])
    for x in obj_map:
        if x not in source.objects:
            raise UnknownObject(x)
    for m in source.morphisms:
        if m.id not in mor_map:
            raise UnknownMorphism(m.id)
        target.morphism(mor_map[m.id])
    for a in mor_map:
        source.morphism(a)

    for x in source.objects:
        if mor_map[source.id(x)] != target.id(obj_map[x]):
            raise IdentityNotPreserved(x)
    for m in source.morphisms:
        image = target.morphism(mor_map[m.id])
        if image.src != obj_map[m.src] or image.tgt != obj_map[m.tgt]:
            raise SourceTargetNotPreserved(m.id)
    for (a, b), ab in source.composition.items():
        if mor_map[ab] != target.compose(mor_map[a], mor_map[b]):
            raise CompositionNotPreserved(a, b)
    return FinFunctor(source, target, obj_map, mor_map)


def identity_functor(C: FinCategory) -> FinFunctor:
    return FinFunctor(C, C, {x: x for x in C.objects}, {m.id: m.id for m in C.morphisms})


def compose_functors(g: FinFunctor, f: FinFunctor) -> FinFunctor:
    """The functor ``g . f`` (apply ``f`` first), in applicative order."""
    if f.target != g.source:
        raise BaseMismatch("functors are not composable")
    return FinFunctor(
        f.source,
        g.target,
        {x: g.obj_map[y] for x, y in f.obj_map.items()},
        {a: g.mor_map[b] for a, b in f.mor_map.items()},
    )


def opposite_functor(f: FinFunctor) -> FinFunctor:
    return FinFunctor(opposite(f.source), opposite(f.target), f.obj_map, f.mor_map)


# ---------------------------------------------------------------- presheaves


class Presheaf:
    """A contravariant finite-set-valued functor on ``base``.

    ``elements[c]`` is a sorted tuple of labels; ``action[a]`` for
    ``a: c' -> c`` is a dict from ``elements[c]`` to ``elements[c']``.
    Every morphism, identities included, has an action entry.
    """

    __slots__ = ("base", "elements", "action", "_key", "_hash")

    def __init__(self, base, elements, action):
        self.base = base
        self.elements = {x: tuple(sorted(elements[x])) for x in base.objects}
        self.action = {a: dict(action[a]) for a in action}
        self._key = (
            base,
            tuple((x, self.elements[x]) for x in base.objects),
            tuple((m.id, _frozen(self.action[m.id])) for m in base.morphisms),
        )
        self._hash = hash(self._key)

    def __eq__(self, other):
        return self is other or (isinstance(other, Presheaf) and self._hash == other._hash and self._key == other._key)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({ {x: list(e) for x, e in self.elements.items()} })"

    def __call__(self, x):
        return self.elements[x]

    def act(self, a, p):
        return self.action[a][p]

    def size(self):
        return {x: len(e) for x, e in self.elements.items()}


def validate_presheaf(base: FinCategory, elements, action) -> Presheaf:
    """Validate a presheaf.  Identity actions may be omitted from ``action``."""
    elements = {x: list(e) for x, e in dict(elements).items()}
    for x in elements:
        if x not in base.objects:
            raise UnknownObject(x)
    for x in base.objects:
        if x not in elements:
            raise UnknownObject(x)
        if len(set(elements[x])) != len(elements[x]):
            raise SemanticError(f"duplicate element label at {x!r}")
        for p in elements[x]:
            if not isinstance(p, str):
                raise SemanticError(f"element labels must be strings, got {p!r}")
    action = {a: dict(m) for a, m in dict(action).items()}
    for a in action:
        base.morphism(a)
    for x in base.objects:
        i = base.id(x)
        if i not in action:
            action[i] = {p: p for p in elements[x]}
    for m in base.morphisms:
        if m.id not in action:
            raise IllTypedAction(m.id, "missing")
        amap = action[m.id]
        dom, cod = set(elements[m.tgt]), set(elements[m.src])
        if set(amap) != dom:
            raise IllTypedAction(m.id, "domain mismatch")
        for p, q in amap.items():
            if q not in cod:
                raise IllTypedAction(m.id, f"{p!r} -> {q!r} leaves the codomain")
    for x in base.objects:
        if any(p != q for p, q in action[base.id(x)].items()):
            raise IdentityActionViolation(x)
    for (a, b), ab in base.composition.items():
        # a: x -> y, b: y -> z; v(ab) = v(b) then v(a)
        va, vb, vab = action[a], action[b], action[ab]
        for p, q in vab.items():
            if va[vb[p]] != q:
                raise FunctorialityViolation(a, b)
    return Presheaf(base, elements, action)


def constant_presheaf(C: FinCategory, labels=("*",)) -> Presheaf:
    """Every value is ``labels``; every morphism acts as the identity."""
    labels = tuple(labels)
    return Presheaf(C, {x: labels for x in C.objects}, {m.id: {p: p for p in labels} for m in C.morphisms})


def restrict(f: FinFunctor, u: Presheaf, checked=True) -> Presheaf:
    """Precompose ``u`` (on ``f.target``) with ``f``; a presheaf on ``f.source``."""
    if u.base != f.target:
        raise BaseMismatch("presheaf is not on the functor's target")
    C = f.source
    elements = {c: u.elements[f.obj_map[c]] for c in C.objects}
    action = {m.id: u.action[f.mor_map[m.id]] for m in C.morphisms}
    if checked:
        return validate_presheaf(C, elements, action)
    return Presheaf(C, elements, action)


# ---------------------------------------------------------------- natural transformations


class SetMap:
    """A total map between finite label sets."""

    __slots__ = ("domain", "codomain", "assignment", "_key", "_hash")

    def __init__(self, domain, codomain, assignment):
        self.domain = tuple(domain)
        self.codomain = tuple(codomain)
        self.assignment = dict(assignment)
        self._key = (self.domain, self.codomain, tuple(self.assignment[p] for p in self.domain))
        self._hash = hash(self._key)

    def __eq__(self, other):
        return self is other or (isinstance(other, SetMap) and self._hash == other._hash and self._key == other._key)

    def __hash__(self):
        return self._hash

    def __call__(self, p):
        return self.assignment[p]

    def __repr__(self):
        return f"SetMap({self.assignment})"

    def is_injective(self):
        return len(set(self.assignment.values())) == len(self.domain)

    def is_surjective(self):
        return set(self.assignment.values()) == set(self.codomain)

    def is_bijective(self):
        return self.is_injective() and self.is_surjective()


class NatTrans:
    """A natural transformation between presheaves on the same base."""

    __slots__ = ("source", "target", "components", "_key", "_hash")

    def __init__(self, source, target, components):
        self.source = source
        self.target = target
        self.components = {
            x: comp if isinstance(comp, SetMap) else SetMap(source.elements[x], target.elements[x], comp)
            for x, comp in dict(components).items()
        }
        self._key = (source, target, tuple((x, self.components[x]) for x in source.base.objects))
        self._hash = hash(self._key)

    def __eq__(self, other):
        return self is other or (isinstance(other, NatTrans) and self._hash == other._hash and self._key == other._key)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"NatTrans({ {x: c.assignment for x, c in self.components.items()} })"

    def __getitem__(self, x):
        return self.components[x]

    def assignment_key(self):
        """Component values in object order; the canonical sort key."""
        return tuple(tuple(self.components[x](p) for p in self.source.elements[x]) for x in self.source.base.objects)


def validate_nattrans(source: Presheaf, target: Presheaf, components) -> NatTrans:
    if source.base != target.base:
        raise BaseMismatch()
    C = source.base
    comps = {}
    for x in components:
        if x not in C.objects:
            raise UnknownObject(x)
    for x in C.objects:
        if x not in components:
            raise IllTypedComponent(x, "missing")
        comp = components[x]
        amap = comp.assignment if isinstance(comp, SetMap) else dict(comp)
        if set(amap) != set(source.elements[x]):
            raise IllTypedComponent(x, "domain mismatch")
        cod = set(target.elements[x])
        for p, q in amap.items():
            if q not in cod:
                raise IllTypedComponent(x, f"{p!r} -> {q!r} leaves the codomain")
        comps[x] = amap
    for m in C.morphisms:
        # m: c' -> c; square: comp(c) then target(m)  ==  source(m) then comp(c')
        su, tv = source.action[m.id], target.action[m.id]
        cc, cc2 = comps[m.tgt], comps[m.src]
        for p in source.elements[m.tgt]:
            if tv[cc[p]] != cc2[su[p]]:
                raise NaturalityViolation(m.id, p)
    return NatTrans(source, target, comps)


def id_nat(u: Presheaf) -> NatTrans:
    return NatTrans(u, u, {x: {p: p for p in u.elements[x]} for x in u.base.objects})


def compose_nat(beta: NatTrans, gamma: NatTrans) -> NatTrans:
    """Diagrammatic composite: ``beta`` first, then ``gamma``."""
    if beta.target != gamma.source:
        raise CompositionMismatch()
    return NatTrans(
        beta.source,
        gamma.target,
        {x: {p: gamma.components[x](q) for p, q in beta.components[x].assignment.items()} for x in beta.source.base.objects},
    )


def restrict_nat(f: FinFunctor, beta: NatTrans) -> NatTrans:
    """Whisker ``beta`` with ``f``: the component at ``c`` is ``beta`` at ``f c``."""
    if beta.source.base != f.target:
        raise BaseMismatch("transformation is not on the functor's target")
    src = restrict(f, beta.source, checked=False)
    tgt = restrict(f, beta.target, checked=False)
    return NatTrans(src, tgt, {c: beta.components[f.obj_map[c]].assignment for c in f.source.objects})


def _search_order(C):
    """Objects ordered so each morphism's target precedes its source where possible.

    Naturality along ``a: c' -> c`` determines the component at ``c'`` from the
    one at ``c``; visiting ``c`` first turns those squares into forced values.
    """
    later = {x: set() for x in C.objects}
    pending = {x: 0 for x in C.objects}
    for m in C.morphisms:
        if m.src != m.tgt and m.src not in later[m.tgt]:
            later[m.tgt].add(m.src)
            pending[m.src] += 1
    order, placed = [], set()
    while len(order) < len(C.objects):
        ready = [x for x in C.objects if x not in placed and pending[x] == 0]
        # on a cycle, break it at the least label
        x = ready[0] if ready else next(y for y in C.objects if y not in placed)
        order.append(x)
        placed.add(x)
        for y in later[x]:
            pending[y] -= 1
    return order


def _family_problem(u: Presheaf, v: Presheaf):
    """Encode Nat(u, v) as an integer constraint problem for the kernels.

    Returns ``(sizes, constraints, variables)`` where ``variables[i]`` is the
    ``(object, element)`` pair of search variable ``i``.
    """
    C = u.base
    variables = [(x, p) for x in _search_order(C) for p in u.elements[x]]
    var_index = {key: i for i, key in enumerate(variables)}
    sizes = [len(v.elements[x]) for x, _ in variables]
    v_pos = {x: {q: i for i, q in enumerate(v.elements[x])} for x in C.objects}
    constraints = []
    for m in C.morphisms:
        if C.is_identity(m.id):
            continue
        # value at (src, u_m(p)) == v_m(value at (tgt, p))
        table = [v_pos[m.src][v.action[m.id][q]] for q in v.elements[m.tgt]]
        for p in u.elements[m.tgt]:
            constraints.append((var_index[m.tgt, p], var_index[m.src, u.action[m.id][p]], table))
    return sizes, constraints, variables


def enumerate_nat(u: Presheaf, v: Presheaf):
    """All natural transformations ``u -> v`` in canonical order.

    Backtracking over the components, pruning a partial family as soon as a
    naturality square between assigned components fails.  Canonical order is
    lexicographic in the component values, objects and elements sorted.
    """
    if u.base != v.base:
        raise BaseMismatch()
    C = u.base
    sizes, constraints, variables = _family_problem(u, v)
    canonical = [(x, p) for x in C.objects for p in u.elements[x]]
    where = {key: i for i, key in enumerate(variables)}
    perm = [where[key] for key in canonical]
    solutions = sorted(tuple(values[i] for i in perm) for values in kernels.enumerate_families(sizes, constraints))
    out = []
    for values in solutions:
        comps = {x: {} for x in C.objects}
        for (x, p), k in zip(canonical, values):
            comps[x][p] = v.elements[x][k]
        out.append(NatTrans(u, v, comps))
    return out


def enumerate_nat_brute(u: Presheaf, v: Presheaf):
    """Unpruned oracle: filter the full product of per-object maps."""
    if u.base != v.base:
        raise BaseMismatch()
    C = u.base
    per_object = []
    for x in C.objects:
        dom, cod = u.elements[x], v.elements[x]
        per_object.append([dict(zip(dom, image)) for image in product(cod, repeat=len(dom))])
    out = []
    for choice in product(*per_object):
        comps = dict(zip(C.objects, choice))
        try:
            out.append(validate_nattrans(u, v, comps))
        except NaturalityViolation:
            pass
    return out
