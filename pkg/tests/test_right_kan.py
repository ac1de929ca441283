import pytest
from hypothesis import given, strategies as st

from finkan import errors
from finkan.checker import is_faithful, is_full, oracle_limit
from finkan.fixtures import singleton
from finkan.generators import GenBounds, gen_category, gen_functor, gen_presheaf
from finkan.presheaf import compose_nat, enumerate_nat, id_nat, identity_functor, restrict, validate_presheaf
from finkan.right_kan import ran, ran_counit, ran_map, ran_triangles, ran_unit
from finkan.yoneda import element_to_nat, nat_to_element, yoneda_obj


def sizes(u):
    return {x: len(u.elements[x]) for x in u.base.objects}


def test_identity_extension_has_the_same_sizes(cat2, V):
    assert sizes(ran(identity_functor(cat2), V)) == sizes(V)


def test_terminal_extension_of_V(bang, V):
    R = ran(bang, V)
    assert len(R.elements["*"]) == 2 == len(oracle_limit(V))


def test_extension_along_object_inclusion(cat1, inc1):
    w = validate_presheaf(cat1, {"*": ["s", "t", "u"]}, {})
    assert len(ran(inc1, w).elements["1"]) == 3


def test_identity_unit_is_inverse_comparison(cat2, V):
    f = identity_functor(cat2)
    R = ran(f, V)
    unit = ran_unit(f, V, target=R)
    for c in cat2.objects:
        for p in V.elements[c]:
            assert R.nat(c, unit.components[c](p)) == element_to_nat(V, c, p)


def test_unit_into_singleton(bang, cat1):
    unit = ran_unit(bang, singleton(cat1))
    assert all(len(unit.target.elements[x]) == 1 for x in cat1.objects)


def test_terminal_unit_gives_constant_families(bang, cat1):
    u = validate_presheaf(cat1, {"*": ["s", "t"]}, {})
    unit = ran_unit(bang, u)
    for x in ("s", "t"):
        xi = unit.target.nat("*", unit.components["*"](x))
        assert {c: xi.components[c]("id*") for c in ("0", "1")} == {"0": x, "1": x}


def test_identity_counit_is_comparison(cat2, V):
    f = identity_functor(cat2)
    R = ran(f, V)
    counit = ran_counit(f, V, source=R)
    for c in cat2.objects:
        for label in R.elements[c]:
            assert counit.components[c](label) == nat_to_element(R.nat(c, label), c)


def test_counit_bijective_for_object_inclusion(cat1, inc1):
    w = validate_presheaf(cat1, {"*": ["s", "t"]}, {})
    counit = ran_counit(inc1, restrict(inc1, ran(inc1, w)))
    assert all(counit.components[c].is_bijective() for c in counit.source.base.objects)


def test_terminal_counit_components(bang, V):
    counit = ran_counit(bang, V)
    assert counit.components["1"].is_bijective()
    assert set(counit.components["0"].assignment.values()) == {"z"}
    assert not counit.components["0"].is_injective()


def test_base_mismatch(bang, V):
    with pytest.raises(errors.BaseMismatch):
        ran(bang, singleton(bang.target))
    with pytest.raises(errors.BaseMismatch):
        ran_unit(bang, V)


@pytest.mark.parametrize("name", ["bang", "inc1", "identity"])
def test_triangles_on_fixtures(name, cat1, cat2, V, bang, inc1):
    f = {"bang": bang, "inc1": inc1, "identity": identity_functor(cat2)}[name]
    C, D = f.source, f.target
    left = [singleton(D)] + [yoneda_obj(D, d) for d in D.objects] + ([V] if D == cat2 else [])
    right = [singleton(C)] + [yoneda_obj(C, c) for c in C.objects] + ([V] if C == cat2 else [])
    for u in left:
        for v in right:
            assert ran_triangles(f, u, v).ok


seeds = st.integers(0, 10 ** 6)


def generated(seed, bounds=(3, 7, 2)):
    b = GenBounds(*bounds, seed)
    C, D = gen_category(b), gen_category(b.with_seed(seed + 11))
    return b, C, D, gen_functor(b, C, D)


@given(seeds)
def test_triangles_on_generated_instances(seed):
    b, C, D, f = generated(seed)
    assert ran_triangles(f, gen_presheaf(b, D), gen_presheaf(b.with_seed(seed + 1), C)).ok


@given(seeds)
def test_extension_is_functorial(seed):
    b, C, D, f = generated(seed)
    v, w = gen_presheaf(b, C), gen_presheaf(b.with_seed(seed + 1), C)
    assert ran_map(f, id_nat(v)) == id_nat(ran(f, v))
    for s in enumerate_nat(v, w)[:4]:
        for t in enumerate_nat(w, w)[:4]:
            assert ran_map(f, compose_nat(s, t)) == compose_nat(ran_map(f, s), ran_map(f, t))


@given(seeds)
def test_counit_injective_when_full(seed):
    b, C, D, f = generated(seed)
    v = gen_presheaf(b, C)
    counit = ran_counit(f, v)
    if is_full(f):
        assert all(counit.components[c].is_injective() for c in C.objects)
        if is_faithful(f):
            assert all(counit.components[c].is_bijective() for c in C.objects)
