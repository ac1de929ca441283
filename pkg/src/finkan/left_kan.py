"""Tensor products of a presheaf with a copresheaf, and left Kan extensions.

``tensor(v, w)`` forms the disjoint union of ``v(c) x w(c)`` over all
objects and divides out the equivalence relation generated by sliding along
morphisms: for ``a: c -> c'`` in ``C``, ``(v(a)(p'), q)`` at ``c`` is related
to ``(p', w(a)(q))`` at ``c'``.  Pairs are triples ``(c, p, q)``; each class
is represented by its least triple.
"""
import json

from . import kernels
from .category import opposite
from .errors import BaseMismatch, NotCoequalizing
from .presheaf import (
    NatTrans,
    Presheaf,
    id_nat,
    opposite_functor,
    restrict,
    validate_nattrans,
    validate_presheaf,
)
from .report import TriangleReport
from .yoneda import co_yoneda_obj


class TensorProduct:
    """The quotient ``v (x)_C w`` together with its quotient map ``nu``.

    ``pairs`` lists every triple in lexicographic order, ``nu`` sends a triple
    to its class representative, ``classes`` lists the representatives and
    ``members`` lists the triples of each class.  ``relations`` records every
    generating instance as ``(a, p', q, left_triple, right_triple)``.
    """

    def __init__(self, left, right, pairs, nu, relations):
        self.left = left
        self.right = right
        self.pairs = pairs
        self.nu = nu
        self.relations = relations
        members = {}
        for pair in pairs:
            members.setdefault(nu[pair], []).append(pair)
        self.members = {rep: tuple(ms) for rep, ms in members.items()}
        self.classes = tuple(sorted(self.members))

    def __len__(self):
        return len(self.classes)

    def partition(self):
        return frozenset(frozenset(ms) for ms in self.members.values())


def relation_instances(v: Presheaf, w: Presheaf):
    """Every single-morphism instance of the sliding relation."""
    C = v.base
    out = []
    for m in C.morphisms:
        if C.is_identity(m.id):
            continue
        c, c2 = m.src, m.tgt
        va, wa = v.action[m.id], w.action[m.id]
        for p2 in v.elements[c2]:
            for q in w.elements[c]:
                out.append((m.id, p2, q, (c, va[p2], q), (c2, p2, wa[q])))
    return out


def tensor(v: Presheaf, w: Presheaf) -> TensorProduct:
    """``v`` is a presheaf on ``C``; ``w`` a copresheaf, i.e. a presheaf on ``opposite(C)``."""
    C = v.base
    if w.base != opposite(C):
        raise BaseMismatch("right factor must live on the opposite category")
    pairs = sorted((c, p, q) for c in C.objects for p in v.elements[c] for q in w.elements[c])
    index = {pair: i for i, pair in enumerate(pairs)}
    relations = relation_instances(v, w)
    roots = kernels.partition(
        len(pairs),
        [index[r[3]] for r in relations],
        [index[r[4]] for r in relations],
    )
    nu = {pair: pairs[roots[i]] for i, pair in enumerate(pairs)}
    return TensorProduct(v, w, tuple(pairs), nu, relations)


def tensor_universal(T: TensorProduct, nu_prime):
    """Factor ``nu_prime`` (triple -> X) through the quotient; returns class -> X.

    Raises :class:`NotCoequalizing` unless ``nu_prime`` identifies both sides
    of every generating relation instance.
    """
    for a, p2, q, lhs, rhs in T.relations:
        if nu_prime[lhs] != nu_prime[rhs]:
            raise NotCoequalizing(a, p2, q)
    return {rep: nu_prime[rep] for rep in T.classes}


def tensor_on_mor(m: NatTrans, n: NatTrans, source=None, target=None):
    """The map of quotients induced by ``m: v -> v'`` and ``n: w -> w'``.

    Returns a dict from classes of ``v (x) w`` to classes of ``v' (x) w'``.
    """
    T = source if source is not None else tensor(m.source, n.source)
    T2 = target if target is not None else tensor(m.target, n.target)
    mc, nc = m.components, n.components
    nu_prime = {(c, p, q): T2.nu[c, mc[c](p), nc[c](q)] for c, p, q in T.pairs}
    return tensor_universal(T, nu_prime)


def class_label(rep) -> str:
    return json.dumps(list(rep), separators=(",", ":"), ensure_ascii=False)


class LanPresheaf(Presheaf):
    """A presheaf on ``D`` whose value at ``d`` is ``v (x) D(d, f(-))``.

    ``tensors[d]`` holds the quotient; ``rep_of[d][label]`` the class
    representative behind an element label.
    """

    __slots__ = ("tensors", "rep_of", "functor", "argument", "hom_copresheaves")

    def label(self, d, pair):
        return class_label(self.tensors[d].nu[pair])


def hom_copresheaf(f, d) -> Presheaf:
    """``c -> D(d, f c)`` as a presheaf on ``opposite(C)``."""
    return restrict(opposite_functor(f), co_yoneda_obj(f.target, d), checked=False)


def _slide(f, a, w_src, w_tgt):
    """``D(d, f(-)) -> D(d', f(-))`` given by precomposition with ``a: d' -> d``."""
    D = f.target
    return NatTrans(w_src, w_tgt, {c: {q: D.compose(a, q) for q in w_src.elements[c]} for c in f.source.objects})


def lan(f, v: Presheaf, checked=True) -> LanPresheaf:
    if v.base != f.source:
        raise BaseMismatch("presheaf is not on the functor's source")
    D = f.target
    homs = {d: hom_copresheaf(f, d) for d in D.objects}
    tensors = {d: tensor(v, homs[d]) for d in D.objects}
    vid = id_nat(v)
    action = {}
    for m in D.morphisms:
        # m: d' -> d acts lan(d) -> lan(d')
        n = _slide(f, m.id, homs[m.tgt], homs[m.src])
        induced = tensor_on_mor(vid, n, tensors[m.tgt], tensors[m.src])
        action[m.id] = {class_label(r): class_label(r2) for r, r2 in induced.items()}
    elements = {d: [class_label(r) for r in tensors[d].classes] for d in D.objects}
    if checked:
        validate_presheaf(D, elements, action)
    out = LanPresheaf(D, elements, action)
    out.tensors = tensors
    out.rep_of = {d: {class_label(r): r for r in tensors[d].classes} for d in D.objects}
    out.functor = f
    out.argument = v
    out.hom_copresheaves = homs
    return out


def lan_map(f, t: NatTrans, source=None, target=None, checked=True) -> NatTrans:
    """``lan(f, t): lan(f, v) -> lan(f, v')``, acting on the left factor."""
    L = source if source is not None else lan(f, t.source, checked)
    L2 = target if target is not None else lan(f, t.target, checked)
    comps = {}
    for d in f.target.objects:
        w = L.hom_copresheaves[d]
        induced = tensor_on_mor(t, id_nat(w), L.tensors[d], L2.tensors[d])
        comps[d] = {class_label(r): class_label(r2) for r, r2 in induced.items()}
    if checked:
        return validate_nattrans(L, L2, comps)
    return NatTrans(L, L2, comps)


def lan_unit(f, v: Presheaf, target=None, checked=True) -> NatTrans:
    """Unit ``v -> f^lan(f, v)``: ``x`` in ``v(c)`` goes to the class of ``(c, x, 1_{fc})``."""
    L = target if target is not None else lan(f, v, checked)
    fL = restrict(f, L, checked=False)
    D = f.target
    comps = {}
    for c in f.source.objects:
        fc = f.obj_map[c]
        comps[c] = {x: L.label(fc, (c, x, D.id(fc))) for x in v.elements[c]}
    if checked:
        return validate_nattrans(v, fL, comps)
    return NatTrans(v, fL, comps)


def lan_counit(f, u: Presheaf, source=None, checked=True) -> NatTrans:
    """Counit ``lan(f, f^u) -> u``: the class of ``(c, p, q)`` goes to ``u(q)(p)``."""
    if u.base != f.target:
        raise BaseMismatch("presheaf is not on the functor's target")
    L = source if source is not None else lan(f, restrict(f, u, checked=checked), checked)
    comps = {}
    for d in f.target.objects:
        T = L.tensors[d]
        if checked:
            values = tensor_universal(T, {(c, p, q): u.action[q][p] for c, p, q in T.pairs})
        else:
            values = {(c, p, q): u.action[q][p] for c, p, q in T.classes}
        comps[d] = {class_label(r): x for r, x in values.items()}
    if checked:
        return validate_nattrans(L, u, comps)
    return NatTrans(L, u, comps)


def lan_triangles(f, u: Presheaf, v: Presheaf) -> TriangleReport:
    """Check both triangle identities elementwise, at ``u`` on D and ``v`` on C."""
    report = TriangleReport()
    D = f.target

    # f^u --(unit at f^u)--> f^lan(f, f^u) --(f^ counit)--> f^u
    fu = restrict(f, u)
    L0 = lan(f, fu)
    unit = lan_unit(f, fu, target=L0)
    counit = lan_counit(f, u, source=L0)
    for c in f.source.objects:
        fc = f.obj_map[c]
        for x in u.elements[fc]:
            label = unit.components[c](x)
            back = counit.components[fc](label)
            if back != x:
                report.failures.append({
                    "identity": "restriction", "object": c, "element": x,
                    "trace": [x, label, back],
                })

    # lan v --(lan unit)--> lan f^lan v --(counit at lan v)--> lan v
    L = lan(f, v)
    for d in D.objects:
        T = L.tensors[d]
        for c, s, t in T.pairs:
            fc = f.obj_map[c]
            inner = L.label(fc, (c, s, D.id(fc)))
            result = L.action[t][inner]
            expected = L.label(d, (c, s, t))
            if result != expected:
                report.failures.append({
                    "identity": "extension", "object": d, "element": class_label((c, s, t)),
                    "trace": [inner, result, expected],
                })
    return report
