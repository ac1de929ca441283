"""Yoneda and co-Yoneda embeddings, and the comparison isomorphism."""
from .category import FinCategory, opposite
from .errors import LawViolation, UnknownObject
from .presheaf import NatTrans, Presheaf, enumerate_nat


def yoneda_obj(C: FinCategory, x) -> Presheaf:
    """The representable presheaf ``c -> hom(c, x)``; ``a`` acts by precomposition."""
    if x not in C.objects:
        raise UnknownObject(x)
    elements = {c: C.hom(c, x) for c in C.objects}
    action = {m.id: {b: C.compose(m.id, b) for b in elements[m.tgt]} for m in C.morphisms}
    return Presheaf(C, elements, action)


def yoneda_mor(C: FinCategory, a) -> NatTrans:
    """``y(a): y(x) -> y(y)`` for ``a: x -> y``, postcomposition with ``a``."""
    m = C.morphism(a)
    src, tgt = yoneda_obj(C, m.src), yoneda_obj(C, m.tgt)
    return NatTrans(src, tgt, {c: {b: C.compose(b, a) for b in src.elements[c]} for c in C.objects})


def co_yoneda_obj(C: FinCategory, x) -> Presheaf:
    """The copresheaf ``c -> hom(x, c)``, stored as a presheaf on ``opposite(C)``."""
    return yoneda_obj(opposite(C), x)


def element_to_nat(v: Presheaf, c, p) -> NatTrans:
    """The transformation ``y(c) -> v`` sending ``b: c' -> c`` to ``v(b)(p)``."""
    C = v.base
    rep = yoneda_obj(C, c)
    return NatTrans(rep, v, {x: {b: v.action[b][p] for b in rep.elements[x]} for x in C.objects})


def nat_to_element(xi: NatTrans, c):
    """Evaluate the component at ``c`` on the identity of ``c``."""
    return xi.components[c](xi.source.base.id(c))


class Comparison:
    """A verified bijection ``Nat(y(c), v) <-> v(c)``.

    ``forward`` maps each transformation to an element, ``backward`` maps
    each element to its transformation.
    """

    def __init__(self, forward, backward):
        self.forward = forward
        self.backward = backward

    def __len__(self):
        return len(self.forward)


def yoneda_comparison(v: Presheaf, c) -> Comparison:
    C = v.base
    if c not in C.objects:
        raise UnknownObject(c)
    nats = enumerate_nat(yoneda_obj(C, c), v)
    forward = {xi: nat_to_element(xi, c) for xi in nats}
    backward = {p: element_to_nat(v, c, p) for p in v.elements[c]}
    for xi, p in forward.items():
        if backward[p] != xi:
            raise LawViolation(f"comparison at {c!r} is not injective at {p!r}")
    for p, xi in backward.items():
        if xi not in forward or forward[xi] != p:
            raise LawViolation(f"comparison at {c!r} fails to return {p!r}")
    return Comparison(forward, backward)
