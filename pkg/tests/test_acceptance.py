"""Acceptance criteria 1-9, each at exact tolerance.

Run with ``pytest tests/test_acceptance.py``; a summary line per criterion
is printed at the end of the session.  Instances are drawn at the desk
scale: at most 4 objects, 12 morphisms and 3 elements per value set.
"""
import os
import random
import subprocess
import sys
from itertools import product

import pytest

from finkan import documents, errors
from finkan.category import opposite, validate_category
from finkan.checker import (
    check_adjunction,
    corrupt,
    is_faithful,
    is_full,
    lan_candidate,
    mutate_component,
    oracle_colimit,
    oracle_limit,
    oracle_tensor_partition,
    ran_candidate,
    std_probes,
)
from finkan.fixtures import V, bang, cat1, cat2, singleton
from finkan.generators import (
    GenBounds,
    gen_category,
    gen_full_faithful,
    gen_full_not_faithful,
    gen_functor,
    gen_presheaf,
    terminal_functor,
)
from finkan.left_kan import lan, lan_counit, lan_unit, tensor, tensor_universal
from finkan.presheaf import (
    compose_nat,
    enumerate_nat,
    id_nat,
    identity_functor,
    validate_functor,
    validate_nattrans,
    validate_presheaf,
)
from finkan.right_kan import ran, ran_counit, ran_unit
from finkan.yoneda import yoneda_comparison, yoneda_obj

pytestmark = pytest.mark.acceptance

DESK = (4, 12, 3)
# extensions larger than this per object are resampled to keep the exhaustive hom checks quick
EXTENSION_CAP = 64


def desk(seed):
    return GenBounds(*DESK, seed)


def largest(u):
    return max([len(u.elements[x]) for x in u.base.objects] + [0])


def test_1_yoneda(criterion):
    checked = 0
    bad = []
    for seed in range(50):
        b = desk(seed)
        C = gen_category(b)
        v = gen_presheaf(b.with_seed(seed + 500), C)
        c = random.Random(seed).choice(C.objects)
        nats = enumerate_nat(yoneda_obj(C, c), v)
        comparison = yoneda_comparison(v, c)
        there_and_back = all(comparison.backward[p] == xi for xi, p in comparison.forward.items())
        back_and_there = all(comparison.forward[xi] == p for p, xi in comparison.backward.items())
        if not (len(nats) == len(v.elements[c]) == len(comparison) and there_and_back and back_and_there):
            bad.append(seed)
        checked += 1
    ok = criterion(1, checked == 50 and not bad, f"yoneda: {checked} instances, failing seeds {bad}")
    assert ok


def _adjunction_instances(mode, count=25):
    """Seeded (f, u, v) instances with their probe pairs, skipping oversize or vacuous ones."""
    seed = 0
    skipped = {"oversize": 0, "vacuous": 0}
    out = []
    while len(out) < count:
        b = desk(seed)
        C, D = gen_category(b), gen_category(b.with_seed(seed + 1000))
        f = gen_functor(b, C, D)
        K = ran_candidate(f) if mode == "ran" else lan_candidate(f)
        us = [gen_presheaf(b.with_seed(seed + k), K.left_base) for k in (1, 2)]
        vs = [gen_presheaf(b.with_seed(seed + k), K.right_base) for k in (3, 4)]
        seed += 1
        extensions = [K.right(v) for v in vs] if mode == "ran" else [K.left(u) for u in us]
        if max(largest(e) for e in extensions) > EXTENSION_CAP:
            skipped["oversize"] += 1
            continue
        if not enumerate_nat(K.left(us[0]), vs[0]) and not enumerate_nat(us[0], K.right(vs[0])):
            skipped["vacuous"] += 1
            continue
        out.append((seed - 1, K, us, vs))
    return out, skipped


@pytest.mark.parametrize("mode, number", [("ran", 2), ("lan", 3)])
def test_2_3_kan_adjunctions(mode, number, criterion):
    instances, skipped = _adjunction_instances(mode)
    failing = []
    totals = dict.fromkeys(["triangles", "unit_squares", "counit_squares", "hom_elements", "hom_squares"], 0)
    for seed, K, us, vs in instances:
        report = check_adjunction(K, us, vs)
        for key in totals:
            totals[key] += report.checked[key]
        if not report.ok:
            failing.append((seed, report.all_failures()[:1]))
    detail = (f"{mode}: {len(instances)} instances (resampled {skipped['oversize']} oversize, "
              f"{skipped['vacuous']} with empty hom-sets), "
              + ", ".join(f"{k}={v}" for k, v in totals.items()) + f", failing {failing}")
    assert criterion(number, len(instances) == 25 and not failing, detail)


def test_4_corollaries(criterion):
    ff_bad, fnf_bad = [], []
    ff = fnf = 0
    for seed in range(10):
        b = GenBounds(*DESK, seed)
        f = gen_full_faithful(b)
        v = gen_presheaf(b.with_seed(seed + 1), f.source)
        counit = ran_counit(f, v)
        unit = lan_unit(f, v)
        C = f.source.objects
        if not (is_full(f) and is_faithful(f)
                and all(counit.components[c].is_bijective() for c in C)
                and all(unit.components[c].is_bijective() for c in C)):
            ff_bad.append(seed)
        ff += 1

        g = gen_full_not_faithful(b)
        w = gen_presheaf(b.with_seed(seed + 2), g.source)
        counit = ran_counit(g, w)
        unit = lan_unit(g, w)
        C = g.source.objects
        if not (is_full(g) and not is_faithful(g)
                and all(counit.components[c].is_injective() for c in C)
                and all(unit.components[c].is_surjective() for c in C)):
            fnf_bad.append(seed)
        fnf += 1
    ok = ff == 10 and fnf == 10 and not ff_bad and not fnf_bad
    assert criterion(4, ok, f"corollaries: {ff} full+faithful, {fnf} full not faithful, failing {ff_bad} {fnf_bad}")


def _colourings(T, limit=256):
    k = len(T.classes)
    if 2 ** k <= limit:
        return [dict(zip(T.classes, bits)) for bits in product("01", repeat=k)]
    rng = random.Random(k)
    return [{rep: rng.choice("01") for rep in T.classes} for _ in range(limit)]


def test_5_tensor(criterion):
    bad = []
    maps = 0
    for seed in range(50):
        b = desk(seed)
        C = gen_category(b)
        v = gen_presheaf(b.with_seed(seed + 1), C)
        w = gen_presheaf(b.with_seed(seed + 2), opposite(C))
        T = tensor(v, w)
        if T.partition() != oracle_tensor_partition(v, w):
            bad.append((seed, "partition"))
            continue
        for colour in _colourings(T):
            nu_prime = {pair: colour[T.nu[pair]] for pair in T.pairs}
            factor = tensor_universal(T, nu_prime)
            maps += 1
            # existence: factor after nu is nu_prime; uniqueness: every class has a member fixing its value
            if any(factor[T.nu[pair]] != nu_prime[pair] for pair in T.pairs):
                bad.append((seed, "factorization"))
            if any(not T.members[rep] for rep in T.classes):
                bad.append((seed, "empty class"))
        for rep in T.classes:
            if len(T.members[rep]) > 1:
                split = {pair: "1" if pair == T.members[rep][-1] else "0" for pair in T.pairs}
                try:
                    tensor_universal(T, split)
                    bad.append((seed, "incompatible map accepted"))
                except errors.NotCoequalizing:
                    pass
    assert criterion(5, not bad, f"tensor: 50 instances, {maps} compatible test maps, failing {bad}")


def _limit_bijection(v):
    R = ran(terminal_functor(v.base), v)
    families = [{c: xi.components[c]("id*") for c in v.base.objects} for xi in R.decode["*"].values()]
    limit = oracle_limit(v)
    return len(families) == len(limit) and sorted(map(sorted_items, families)) == sorted(map(sorted_items, limit))


def sorted_items(d):
    return tuple(sorted(d.items()))


def _colimit_bijection(v):
    L = lan(terminal_functor(v.base), v)
    T = L.tensors["*"]
    classes = frozenset(frozenset((c, p) for c, p, _ in T.members[rep]) for rep in T.classes)
    return len(L.elements["*"]) == len(classes) and classes == oracle_colimit(v)


def test_6_terminal_functor_oracles(criterion):
    bad = []
    for seed in range(50):
        b = desk(seed)
        v = gen_presheaf(b.with_seed(seed + 1), gen_category(b))
        if not (_limit_bijection(v) and _colimit_bijection(v)):
            bad.append(seed)
    fixture_ran = len(ran(bang(), V()).elements["*"])
    fixture_lan = len(lan(bang(), V()).elements["*"])
    ok = not bad and fixture_ran == 2 and fixture_lan == 1 and _limit_bijection(V()) and _colimit_bijection(V())
    assert criterion(6, ok, f"terminal oracles: 50 instances, |ran(Bang,V)(*)|={fixture_ran}, "
                            f"|lan(Bang,V)(*)|={fixture_lan}, failing {bad}")


def test_7_identity_degeneration(criterion):
    bad = []
    probes = 0
    categories = [cat1(), cat2()] + [gen_category(desk(seed)) for seed in range(8)]
    for C in categories:
        f = identity_functor(C)
        for v in std_probes(C, max_size=3):
            probes += 1
            R = ran(f, v)
            unit, counit = ran_unit(f, v, target=R), ran_counit(f, v, source=R)
            if compose_nat(unit, counit) != id_nat(v) or compose_nat(counit, unit) != id_nat(R):
                bad.append(("ran", C, v))
            L = lan(f, v)
            unit, counit = lan_unit(f, v, target=L), lan_counit(f, v, source=L)
            if compose_nat(unit, counit) != id_nat(v) or compose_nat(counit, unit) != id_nat(L):
                bad.append(("lan", C, v))
    assert criterion(7, not bad, f"identity degeneration: {probes} probes on {len(categories)} categories, failing {len(bad)}")


def _raw(C):
    record = documents.category_record(C)
    del record["kind"]
    return record


def _rejects(build, error=errors.SemanticError):
    try:
        build()
    except error:
        return True
    return False


def _adjunction_detects(make, f, which, how):
    candidate = make(f)
    damaged = corrupt(candidate, which, how)
    return not check_adjunction(damaged, std_probes(candidate.left_base), std_probes(candidate.right_base)).ok


def _mutation_catalog():
    C2, Vf = cat2(), V()
    catalog = {}

    def rewrite_identity_composite():
        r = _raw(C2)
        r["compose"]["a|id1"] = "id0"
        return validate_category(r)

    def drop_composite():
        r = _raw(C2)
        del r["compose"]["id0|a"]
        return validate_category(r)

    def break_associativity():
        from finkan.generators import presented_category
        r = _raw(presented_category(2, [("f", 0, 1)], [("e", 0)]))
        r["compose"]["e|e"] = "id0"
        return validate_category(r)

    catalog["category: a.id1 rewritten to id0"] = lambda: _rejects(rewrite_identity_composite, errors.IdentityLawViolation)
    catalog["category: composite id0.a removed"] = lambda: _rejects(drop_composite, errors.CompositionDomainError)
    catalog["category: idempotent made invertible"] = lambda: _rejects(break_associativity)
    catalog["functor: a sent to id0"] = lambda: _rejects(
        lambda: validate_functor(C2, C2, {"0": "0", "1": "1"}, {"id0": "id0", "id1": "id1", "a": "id0"}),
        errors.SourceTargetNotPreserved)

    def functor_breaking_composition():
        from finkan.generators import presented_category
        E = presented_category(2, [("f", 0, 1)], [("e", 0)])
        # e.f must go to e.f; sending it to f while e goes to e breaks composition
        mor = {m.id: m.id for m in E.morphisms}
        mor["e.f"] = "f"
        return validate_functor(E, E, {"0": "0", "1": "1"}, mor)

    catalog["functor: composite image rewritten"] = lambda: _rejects(functor_breaking_composition, errors.CompositionNotPreserved)
    catalog["presheaf: action leaves its value set"] = lambda: _rejects(
        lambda: validate_presheaf(C2, {"1": ["x", "y"], "0": ["z"]}, {"a": {"x": "x", "y": "z"}}), errors.IllTypedAction)

    def presheaf_breaking_functoriality():
        from finkan.generators import presented_category
        E = presented_category(1, [], [("e", 0)])
        # an idempotent must act idempotently
        return validate_presheaf(E, {"0": ["p", "q"]}, {"e": {"p": "q", "q": "p"}})

    catalog["presheaf: idempotent acts as a swap"] = lambda: _rejects(presheaf_breaking_functoriality, errors.FunctorialityViolation)

    def transformation_off_square():
        W = validate_presheaf(C2, {"1": ["x"], "0": ["z", "w"]}, {"a": {"x": "z"}})
        t = mutate_component(id_nat(W), "0", "z")
        return validate_nattrans(W, W, {x: c.assignment for x, c in t.components.items()})

    catalog["transformation: one output rewritten"] = lambda: _rejects(transformation_off_square, errors.NaturalityViolation)
    catalog["tensor: map separating a class"] = lambda: _rejects(
        lambda: tensor_universal(tensor(Vf, singleton(opposite(C2))), {("0", "z", "*"): "0", ("1", "x", "*"): "0", ("1", "y", "*"): "1"}),
        errors.NotCoequalizing)
    ident = identity_functor(C2)
    catalog["ran: counit outputs swapped"] = lambda: _adjunction_detects(ran_candidate, ident, "counit", "swap")
    catalog["ran: unit output rewritten"] = lambda: _adjunction_detects(ran_candidate, ident, "unit", "rewrite")
    catalog["ran: counit output rewritten along Bang"] = lambda: _adjunction_detects(ran_candidate, bang(), "counit", "rewrite")
    catalog["lan: counit outputs swapped"] = lambda: _adjunction_detects(lan_candidate, ident, "counit", "swap")
    catalog["lan: unit output rewritten"] = lambda: _adjunction_detects(lan_candidate, ident, "unit", "rewrite")
    catalog["lan: unit output rewritten along Bang"] = lambda: _adjunction_detects(lan_candidate, bang(), "unit", "rewrite")
    return catalog


def test_8_mutation_sensitivity(criterion):
    catalog = _mutation_catalog()
    missed = [name for name, detected in catalog.items() if not detected()]
    assert criterion(8, len(catalog) >= 10 and not missed, f"mutations: {len(catalog)} cataloged, missed {missed}")


DATA = os.path.join(os.path.dirname(__file__), "data")
CORPUS = ["cat1.cat", "cat2.cat", "V.psh", "singleton.psh", "singleton.cpsh", "bang.fn", "inc1.fn", "id.fn"]
INVOCATIONS = [
    ["ran", "--functor", "bang.fn", "--presheaf", "V.psh"],
    ["lan", "--functor", "bang.fn", "--presheaf", "V.psh"],
    ["tensor", "--left", "V.psh", "--right", "singleton.cpsh", "--json"],
    ["check-adjunction", "--mode", "ran", "--functor", "id.fn", "--probes", "std", "--json"],
    ["check-adjunction", "--mode", "lan", "--functor", "bang.fn", "--probes", "seed:2"],
    ["unit", "--mode", "ran", "--functor", "inc1.fn", "--presheaf", "V.psh"],
    ["counit", "--mode", "lan", "--functor", "inc1.fn", "--presheaf", "V.psh"],
    ["nat", "--left", "V.psh", "--right", "V.psh", "--json"],
    ["yoneda", "--presheaf", "V.psh", "--object", "1", "--json"],
    ["gen", "functor", "--seed", "20240611", "--bounds", "4,12,3"],
]


def _cli(argv):
    env = dict(os.environ, PYTHONHASHSEED="random")
    result = subprocess.run([sys.executable, "-m", "finkan.cli", *argv], cwd=DATA, capture_output=True, env=env, check=False)
    return result.returncode, result.stdout


def test_9_determinism(criterion):
    unstable = [argv[0] for argv in INVOCATIONS if _cli(argv) != _cli(argv)]
    failed = [argv[0] for argv in INVOCATIONS if _cli(argv)[0] != 0]
    drift = []
    for name in CORPUS:
        path = os.path.join(DATA, name)
        with open(path, "rb") as fh:
            raw = fh.read()
        if documents.serialize(documents.load(path)).encode("utf-8") != raw:
            drift.append(name)
    ok = not unstable and not failed and not drift
    assert criterion(9, ok, f"determinism: {len(INVOCATIONS)} invocations run twice, unstable {unstable}, "
                            f"nonzero exit {failed}; round trip over {len(CORPUS)} files, drift {drift}")
