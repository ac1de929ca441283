"""Right Kan extension of presheaves along a functor ``f: C -> D``.

The value at ``d`` is the set of natural transformations from the
restriction of the representable ``D(-, d)`` to ``v``.  Each such
transformation is labelled by a canonical JSON encoding of its components.
"""
import json

from .errors import BaseMismatch
from .presheaf import (
    NatTrans,
    Presheaf,
    compose_nat,
    enumerate_nat,
    restrict,
    restrict_nat,
    validate_nattrans,
    validate_presheaf,
)
from .report import TriangleReport
from .yoneda import yoneda_mor, yoneda_obj


def encode_nat(xi: NatTrans) -> str:
    comps = {x: xi.components[x].assignment for x in xi.source.base.objects}
    return json.dumps(comps, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


class RanPresheaf(Presheaf):
    """A presheaf on ``D`` whose elements encode transformations.

    ``decode[d][label]`` is the transformation ``f^(D(-, d)) -> v`` behind a label.
    """

    __slots__ = ("decode", "functor", "argument", "representables")

    def nat(self, d, label) -> NatTrans:
        return self.decode[d][label]


def _representables(f):
    D = f.target
    return {d: restrict(f, yoneda_obj(D, d), checked=False) for d in D.objects}


def ran(f, v: Presheaf, checked=True) -> RanPresheaf:
    if v.base != f.source:
        raise BaseMismatch("presheaf is not on the functor's source")
    D = f.target
    reps = _representables(f)
    decode = {}
    for d in D.objects:
        decode[d] = {encode_nat(xi): xi for xi in enumerate_nat(reps[d], v)}
    action = {}
    for m in D.morphisms:
        # m: d' -> d; precompose with the whiskered y(m): f^y(d') -> f^y(d)
        ym = restrict_nat(f, yoneda_mor(D, m.id))
        action[m.id] = {label: encode_nat(compose_nat(ym, xi)) for label, xi in decode[m.tgt].items()}
    elements = {d: list(decode[d]) for d in D.objects}
    if checked:
        validate_presheaf(D, elements, action)
    out = RanPresheaf(D, elements, action)
    out.decode = decode
    out.functor = f
    out.argument = v
    out.representables = reps
    return out


def ran_map(f, t: NatTrans, source=None, target=None, checked=True) -> NatTrans:
    """``ran(f, t): ran(f, v) -> ran(f, v')`` by postcomposition with ``t``."""
    R = source if source is not None else ran(f, t.source, checked)
    R2 = target if target is not None else ran(f, t.target, checked)
    comps = {d: {label: encode_nat(compose_nat(xi, t)) for label, xi in R.decode[d].items()} for d in f.target.objects}
    if checked:
        return validate_nattrans(R, R2, comps)
    return NatTrans(R, R2, comps)


def unit_element(f, u: Presheaf, d, x, reps=None) -> NatTrans:
    """The transformation ``f^(D(-, d)) -> f^u`` assigned to ``x`` in ``u(d)``.

    At ``c`` it sends ``a: f c -> d`` to ``u(a)(x)``.
    """
    reps = reps if reps is not None else _representables(f)
    fu = restrict(f, u, checked=False)
    rep = reps[d]
    return NatTrans(rep, fu, {c: {a: u.action[a][x] for a in rep.elements[c]} for c in f.source.objects})


def ran_unit(f, u: Presheaf, target=None, checked=True) -> NatTrans:
    """Unit ``u -> ran(f, f^u)``."""
    if u.base != f.target:
        raise BaseMismatch("presheaf is not on the functor's target")
    fu = restrict(f, u, checked=checked)
    R = target if target is not None else ran(f, fu, checked)
    comps = {}
    for d in f.target.objects:
        comp = {}
        for x in u.elements[d]:
            xi = unit_element(f, u, d, x, R.representables)
            if checked:
                validate_nattrans(xi.source, xi.target, xi.components)
            comp[x] = encode_nat(xi)
        comps[d] = comp
    if checked:
        return validate_nattrans(u, R, comps)
    return NatTrans(u, R, comps)


def counit_value(f, xi: NatTrans, c):
    """Evaluate ``xi`` at ``c`` on the identity of ``f c``."""
    return xi.components[c](f.target.id(f.obj_map[c]))


def ran_counit(f, v: Presheaf, source=None, checked=True) -> NatTrans:
    """Counit ``f^ran(f, v) -> v``."""
    R = source if source is not None else ran(f, v, checked)
    fR = restrict(f, R, checked=False)
    comps = {c: {label: counit_value(f, xi, c) for label, xi in R.decode[f.obj_map[c]].items()} for c in f.source.objects}
    if checked:
        return validate_nattrans(fR, v, comps)
    return NatTrans(fR, v, comps)


def ran_triangles(f, u: Presheaf, v: Presheaf) -> TriangleReport:
    """Check both triangle identities elementwise, at ``u`` on D and ``v`` on C."""
    report = TriangleReport()
    reps = _representables(f)

    # f^u --(f^ unit)--> f^ran(f, f^u) --(counit at f^u)--> f^u
    for c in f.source.objects:
        fc = f.obj_map[c]
        for x in u.elements[fc]:
            xi = unit_element(f, u, fc, x, reps)
            back = counit_value(f, xi, c)
            if back != x:
                report.failures.append({
                    "identity": "restriction", "object": c, "element": x,
                    "trace": [x, encode_nat(xi), back],
                })

    # ran v --(unit at ran v)--> ran f^ran v --(ran counit)--> ran v
    R = ran(f, v)
    for d in f.target.objects:
        for label, xi in R.decode[d].items():
            # unit at R sends xi to the family a -> R(a)(xi); then apply the counit of v
            theta = {c: {a: counit_value(f, R.decode[f.obj_map[c]][R.action[a][label]], c)
                         for a in reps[d].elements[c]}
                     for c in f.source.objects}
            result = NatTrans(reps[d], v, theta)
            if result != xi:
                report.failures.append({
                    "identity": "extension", "object": d, "element": label,
                    "trace": [label, encode_nat(result)],
                })
    return report
