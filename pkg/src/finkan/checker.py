"""Adjunction checking, probe families and brute-force oracles.

An adjunction between presheaf categories ``L: A^ -> B^`` and
``R: B^ -> A^`` is given operationally.  :func:`check_adjunction` evaluates
every law on a finite family of probe presheaves and returns an
:class:`AdjunctionReport` listing witnesses for each failure.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable

from .errors import SemanticError
from .generators import GenBounds, gen_presheaf
from .left_kan import lan, lan_counit, lan_unit
from .presheaf import (
    NatTrans,
    compose_nat,
    constant_presheaf,
    enumerate_nat,
    id_nat,
    restrict,
    validate_nattrans,
)
from .report import AdjunctionReport
from .right_kan import encode_nat, ran, ran_counit, ran_unit
from .yoneda import yoneda_obj


@dataclass
class AdjunctionCandidate:
    """``left: A^ -> B^`` and ``right: B^ -> A^`` with unit and counit builders.

    ``left_at(s, x, p)`` evaluates the image of the transformation ``s`` under
    ``left`` at object ``x`` and element ``p``; likewise ``right_at``.
    ``unit(a)`` must be a transformation ``a -> right(left(a))`` and
    ``counit(b)`` one ``left(right(b)) -> b``.
    """

    name: str
    left_base: object
    right_base: object
    left: Callable
    left_at: Callable
    right: Callable
    right_at: Callable
    unit: Callable
    counit: Callable


def _cached(fn):
    return lru_cache(maxsize=None)(fn)


def ran_candidate(f, checked=True) -> AdjunctionCandidate:
    """Restriction along ``f`` left adjoint to the right Kan extension."""
    ran_ = _cached(lambda v: ran(f, v, checked))
    restrict_ = _cached(lambda u: restrict(f, u, checked))

    def ran_at(t, d, label):
        return encode_nat(compose_nat(ran_(t.source).decode[d][label], t))

    return AdjunctionCandidate(
        name="ran",
        left_base=f.target,
        right_base=f.source,
        left=restrict_,
        left_at=lambda s, c, p: s.components[f.obj_map[c]](p),
        right=ran_,
        right_at=ran_at,
        unit=_cached(lambda u: ran_unit(f, u, ran_(restrict_(u)), checked)),
        counit=_cached(lambda v: ran_counit(f, v, ran_(v), checked)),
    )


def lan_candidate(f, checked=True) -> AdjunctionCandidate:
    """Left Kan extension left adjoint to restriction along ``f``."""
    lan_ = _cached(lambda v: lan(f, v, checked))
    restrict_ = _cached(lambda u: restrict(f, u, checked))

    def lan_at(t, d, label):
        c, p, q = lan_(t.source).rep_of[d][label]
        return lan_(t.target).label(d, (c, t.components[c](p), q))

    return AdjunctionCandidate(
        name="lan",
        left_base=f.source,
        right_base=f.target,
        left=lan_,
        left_at=lan_at,
        right=restrict_,
        right_at=lambda t, c, p: t.components[f.obj_map[c]](p),
        unit=_cached(lambda v: lan_unit(f, v, lan_(v), checked)),
        counit=_cached(lambda u: lan_counit(f, u, lan_(restrict_(u)), checked)),
    )


def _then(first: NatTrans, at, target):
    """``first`` followed by the elementwise map ``at(x, p)`` landing in ``target``."""
    C = first.source.base
    return NatTrans(first.source, target, {
        x: {p: at(x, q) for p, q in first.components[x].assignment.items()} for x in C.objects
    })


def _at_then(source, at, second: NatTrans):
    """The elementwise map ``at(x, p)`` out of ``source`` followed by ``second``."""
    C = source.base
    return NatTrans(source, second.target, {
        x: {p: second.components[x](at(x, p)) for p in source.elements[x]} for x in C.objects
    })


def map_left(K, s):
    return _at_then(K.left(s.source), lambda x, p: K.left_at(s, x, p), id_nat(K.left(s.target)))


def map_right(K, t):
    return _at_then(K.right(t.source), lambda x, p: K.right_at(t, x, p), id_nat(K.right(t.target)))


def _difference(lhs: NatTrans, rhs: NatTrans):
    """First ``(object, element, lhs value, rhs value)`` where two maps differ."""
    if lhs.source != rhs.source or lhs.target != rhs.target:
        return ("-", "-", "endpoints differ", "")
    for x in lhs.source.base.objects:
        for p in lhs.source.elements[x]:
            left, right = lhs.components[x](p), rhs.components[x](p)
            if left != right:
                return (x, p, left, right)
    return None


def _witness(check, where, diff):
    x, p, left, right = diff
    return {"check": check, "at": where, "object": x, "element": p, "trace": f"{left} != {right}"}


def _error_diff(exc):
    return ("-", "-", f"{type(exc).__name__}: {exc}", "")


def _component(report, check, where, build):
    """Build a unit or counit component; record a failure if it is not natural.

    A component that is built but fails naturality is still returned so the
    triangle and bijection checks can report their own witnesses.
    """
    try:
        t = build()
    except (SemanticError, KeyError) as exc:
        report.naturality_failures.append({"check": check, "at": where, "error": f"{type(exc).__name__}: {exc}"})
        return None
    try:
        validate_nattrans(t.source, t.target, t.components)
    except SemanticError as exc:
        report.naturality_failures.append({"check": check, "at": where, "error": f"{type(exc).__name__}: {exc}"})
    return t


def check_adjunction(candidate: AdjunctionCandidate, left_probes, right_probes, hom_naturality=True) -> AdjunctionReport:
    """Exhaustively check an adjunction on the given probe presheaves.

    ``left_probes`` live on ``candidate.left_base``; ``right_probes`` on
    ``candidate.right_base``.  Checks: unit and counit components are natural
    transformations with the right endpoints, naturality of unit and counit
    along every transformation between probes, both triangle identities, and
    that the induced hom-set correspondence is a natural bijection.
    """
    K = candidate
    report = AdjunctionReport()
    counts = dict.fromkeys(
        ["unit_components", "counit_components", "unit_squares", "counit_squares",
         "triangles", "hom_pairs", "hom_elements", "hom_squares"], 0)

    units, counits = {}, {}
    for i, a in enumerate(left_probes):
        eu = _component(report, "unit component", f"left probe {i}", lambda: K.unit(a))
        counts["unit_components"] += 1
        if eu is not None:
            if eu.source != a or eu.target != K.right(K.left(a)):
                report.naturality_failures.append({"check": "unit endpoints", "at": f"left probe {i}"})
            else:
                units[i] = eu
    for j, b in enumerate(right_probes):
        cb = _component(report, "counit component", f"right probe {j}", lambda: K.counit(b))
        counts["counit_components"] += 1
        if cb is not None:
            if cb.target != b or cb.source != K.left(K.right(b)):
                report.naturality_failures.append({"check": "counit endpoints", "at": f"right probe {j}"})
            else:
                counits[j] = cb

    # naturality of the unit along s: a -> a', and of the counit along t: b -> b'
    for i, a in enumerate(left_probes):
        for i2, a2 in enumerate(left_probes):
            if i not in units or i2 not in units:
                continue
            for s in enumerate_nat(a, a2):
                counts["unit_squares"] += 1
                lhs = compose_nat(s, units[i2])
                Ls = map_left(K, s)
                try:
                    rhs = _then(units[i], lambda x, q: K.right_at(Ls, x, q), units[i2].target)
                    diff = _difference(lhs, rhs)
                except (SemanticError, KeyError) as exc:
                    diff = _error_diff(exc)
                if diff:
                    report.naturality_failures.append(_witness("unit naturality", f"left probes {i}->{i2}", diff))
    for j, b in enumerate(right_probes):
        for j2, b2 in enumerate(right_probes):
            if j not in counits or j2 not in counits:
                continue
            for t in enumerate_nat(b, b2):
                counts["counit_squares"] += 1
                lhs = compose_nat(counits[j], t)
                try:
                    Rt = map_right(K, t)
                    rhs = _at_then(counits[j].source, lambda x, p: K.left_at(Rt, x, p), counits[j2])
                    diff = _difference(lhs, rhs)
                except (SemanticError, KeyError) as exc:
                    diff = _error_diff(exc)
                if diff:
                    report.naturality_failures.append(_witness("counit naturality", f"right probes {j}->{j2}", diff))

    # triangle identities
    for i, a in enumerate(left_probes):
        if i not in units:
            continue
        La = K.left(a)
        try:
            composite = _at_then(La, lambda x, p: K.left_at(units[i], x, p), K.counit(La))
            diff = _difference(composite, id_nat(La))
        except (SemanticError, KeyError) as exc:
            diff = _error_diff(exc)
        counts["triangles"] += 1
        if diff:
            report.triangle_failures.append(_witness("left triangle", f"left probe {i}", diff))
    for j, b in enumerate(right_probes):
        if j not in counits:
            continue
        Rb = K.right(b)
        try:
            composite = _then(K.unit(Rb), lambda x, q: K.right_at(counits[j], x, q), Rb)
            diff = _difference(composite, id_nat(Rb))
        except (SemanticError, KeyError) as exc:
            diff = _error_diff(exc)
        counts["triangles"] += 1
        if diff:
            report.triangle_failures.append(_witness("right triangle", f"right probe {j}", diff))

    # hom-set bijection  B^(L a, b) <-> A^(a, R b)
    def forward(i, j, g):
        return _then(units[i], lambda x, q: K.right_at(g, x, q), K.right(right_probes[j]))

    def backward(i, j, h):
        return _at_then(K.left(left_probes[i]), lambda x, p: K.left_at(h, x, p), counits[j])

    homs = {}
    for i, a in enumerate(left_probes):
        for j, b in enumerate(right_probes):
            if i not in units or j not in counits:
                continue
            counts["hom_pairs"] += 1
            where = f"probes ({i}, {j})"
            left_side = enumerate_nat(K.left(a), b)
            right_side = enumerate_nat(a, K.right(b))
            right_set = set(right_side)
            to_right = {}
            try:
                for g in left_side:
                    counts["hom_elements"] += 1
                    h = forward(i, j, g)
                    to_right[g] = h
                    if h not in right_set:
                        report.bijection_failures.append({"check": "forward image not natural", "at": where})
                        continue
                    diff = _difference(backward(i, j, h), g)
                    if diff:
                        report.bijection_failures.append(_witness("backward after forward", where, diff))
                for h in right_side:
                    counts["hom_elements"] += 1
                    g = backward(i, j, h)
                    fwd = to_right.get(g)
                    if fwd is None:
                        report.bijection_failures.append({"check": "backward image not natural", "at": where})
                        continue
                    diff = _difference(fwd, h)
                    if diff:
                        report.bijection_failures.append(_witness("forward after backward", where, diff))
            except (SemanticError, KeyError) as exc:
                report.bijection_failures.append({"check": "hom correspondence", "at": where, "error": f"{type(exc).__name__}: {exc}"})
                continue
            if len(left_side) != len(right_side):
                report.bijection_failures.append({
                    "check": "hom-set sizes", "at": where, "trace": f"{len(left_side)} != {len(right_side)}"})
            homs[i, j] = to_right

    if hom_naturality:
        # forward(L(s) g) = s forward(g) for s: a' -> a;  forward(g t) = forward(g) R(t) for t: b -> b'
        for (i, j), to_right in homs.items():
            for i2, a2 in enumerate(left_probes):
                if (i2, j) not in homs:
                    continue
                for s in enumerate_nat(a2, left_probes[i]):
                    for g, h in to_right.items():
                        counts["hom_squares"] += 1
                        moved = _at_then(K.left(a2), lambda x, p: K.left_at(s, x, p), g)
                        if _difference(forward(i2, j, moved), compose_nat(s, h)):
                            report.bijection_failures.append({"check": "hom naturality in source", "at": f"probes {i2}->{i}, {j}"})
            for j2, b2 in enumerate(right_probes):
                if (i, j2) not in homs:
                    continue
                for t in enumerate_nat(right_probes[j], b2):
                    for g, h in to_right.items():
                        counts["hom_squares"] += 1
                        lhs = forward(i, j2, compose_nat(g, t))
                        rhs = _then(h, lambda x, q: K.right_at(t, x, q), K.right(b2))
                        if _difference(lhs, rhs):
                            report.bijection_failures.append({"check": "hom naturality in target", "at": f"probes {i}, {j}->{j2}"})
    report.checked = counts
    return report


# ---------------------------------------------------------------- probes


def std_probes(C, seed=0, max_size=2):
    """Representables, constant singleton and doubleton, three seeded random presheaves."""
    probes = [yoneda_obj(C, x) for x in C.objects]
    probes.append(constant_presheaf(C, ("*",)))
    probes.append(constant_presheaf(C, ("0", "1")))
    for k in range(3):
        probes.append(gen_presheaf(GenBounds(len(C.objects), max(len(C.morphisms), 1), max_size, seed + k), C))
    unique = []
    for p in probes:
        if p not in unique:
            unique.append(p)
    return unique


def parse_probes(family, C):
    """``"std"`` or ``"seed:<n>"``."""
    if family == "std":
        return std_probes(C)
    if family.startswith("seed:"):
        return std_probes(C, seed=int(family[5:]))
    raise ValueError(f"unknown probe family {family!r}")


def mutate_component(t: NatTrans, obj=None, element=None):
    """Change one output of ``t`` to a different element of its codomain.

    Returns None when no component has a codomain with two elements.
    """
    C = t.source.base
    for x in ([obj] if obj is not None else C.objects):
        cod = t.target.elements[x]
        if len(cod) < 2:
            continue
        for p in t.source.elements[x]:
            if element is not None and p != element:
                continue
            comps = {y: dict(t.components[y].assignment) for y in C.objects}
            old = comps[x][p]
            comps[x][p] = next(q for q in cod if q != old)
            return NatTrans(t.source, t.target, comps)
    return None


def swap_outputs(t: NatTrans):
    """Exchange the outputs of two elements with different images in one component.

    Returns None when every component is constant.
    """
    C = t.source.base
    for x in C.objects:
        comp = t.components[x].assignment
        for p in t.source.elements[x]:
            for q in t.source.elements[x]:
                if comp[p] < comp[q]:
                    comps = {y: dict(t.components[y].assignment) for y in C.objects}
                    comps[x][p], comps[x][q] = comp[q], comp[p]
                    return NatTrans(t.source, t.target, comps)
    return None


def corrupt(candidate: AdjunctionCandidate, which="counit", how="swap") -> AdjunctionCandidate:
    """Wrap a candidate so every unit (or counit) component is damaged.

    ``how`` is ``"swap"`` (exchange two outputs) or ``"rewrite"`` (change one
    output).  Components that admit no such change are left alone.
    """
    original = getattr(candidate, which)
    damage = swap_outputs if how == "swap" else mutate_component

    def corrupted(p):
        t = original(p)
        return damage(t) or t

    fields = dict(candidate.__dict__)
    fields[which] = lru_cache(maxsize=None)(corrupted)
    fields["name"] = f"{candidate.name} with corrupted {which}"
    return AdjunctionCandidate(**fields)


# ---------------------------------------------------------------- oracles


def oracle_limit(v):
    """All object-indexed families compatible with every action map."""
    C = v.base
    out = []
    for family in product(*(v.elements[x] for x in C.objects)):
        pick = dict(zip(C.objects, family))
        if all(v.action[m.id][pick[m.tgt]] == pick[m.src] for m in C.morphisms):
            out.append(pick)
    return out


def naive_partition(nodes, related):
    """Equivalence closure of ``related`` by symmetric transitive closure of a matrix."""
    nodes = list(nodes)
    n = len(nodes)
    pos = {x: i for i, x in enumerate(nodes)}
    reach = [[i == j for j in range(n)] for i in range(n)]
    for x, y in related:
        reach[pos[x]][pos[y]] = reach[pos[y]][pos[x]] = True
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if reach[i][j]:
                    continue
                if any(reach[i][k] and reach[k][j] for k in range(n)):
                    reach[i][j] = True
                    changed = True
    return frozenset(frozenset(nodes[j] for j in range(n) if reach[i][j]) for i in range(n))


def oracle_colimit(v):
    """Partition of the disjoint union of all values by the sliding relation."""
    C = v.base
    nodes = [(x, p) for x in C.objects for p in v.elements[x]]
    related = [((m.tgt, p), (m.src, v.action[m.id][p])) for m in C.morphisms for p in v.elements[m.tgt]]
    return naive_partition(nodes, related)


def oracle_tensor_partition(v, w):
    """Partition of ``v (x) w`` computed without the disjoint-set kernel."""
    C = v.base
    nodes = [(x, p, q) for x in C.objects for p in v.elements[x] for q in w.elements[x]]
    related = []
    for m in C.morphisms:
        for p2 in v.elements[m.tgt]:
            for q in w.elements[m.src]:
                related.append(((m.src, v.action[m.id][p2], q), (m.tgt, p2, w.action[m.id][q])))
    return naive_partition(nodes, related)


# ---------------------------------------------------------------- fullness


def fullness_witness(f):
    """``(x, y, g)`` with ``g: fx -> fy`` not hit by ``f``, or None when ``f`` is full."""
    C, D = f.source, f.target
    for x in C.objects:
        for y in C.objects:
            image = {f.mor_map[a] for a in C.hom(x, y)}
            for g in D.hom(f.obj_map[x], f.obj_map[y]):
                if g not in image:
                    return (x, y, g)
    return None


def faithfulness_witness(f):
    """Distinct parallel ``(a, b)`` with equal images, or None when ``f`` is faithful."""
    C = f.source
    for x in C.objects:
        for y in C.objects:
            seen = {}
            for a in C.hom(x, y):
                g = f.mor_map[a]
                if g in seen:
                    return (seen[g], a)
                seen[g] = a
    return None


def is_full(f):
    return fullness_witness(f) is None


def is_faithful(f):
    return faithfulness_witness(f) is None
