from hypothesis import given, strategies as st

from finkan.category import opposite
from finkan.generators import GenBounds, gen_category, gen_presheaf
from finkan.presheaf import compose_nat, enumerate_nat, id_nat
from finkan.yoneda import co_yoneda_obj, element_to_nat, nat_to_element, yoneda_comparison, yoneda_mor, yoneda_obj


def singleton_valued(u):
    # terminal up to its unique isomorphism
    return all(len(u.elements[x]) == 1 for x in u.base.objects)


def test_representables(cat1, cat2):
    assert singleton_valued(yoneda_obj(cat1, "*"))
    assert yoneda_obj(cat2, "1").elements == {"0": ("a",), "1": ("id1",)}
    assert yoneda_obj(cat2, "0").elements == {"0": ("id0",), "1": ()}


def test_yoneda_on_morphisms(cat2):
    ya = yoneda_mor(cat2, "a")
    assert ya.components["0"]("id0") == "a"
    assert yoneda_mor(cat2, "id1") == id_nat(yoneda_obj(cat2, "1"))


def test_co_representables(cat1, cat2):
    assert co_yoneda_obj(cat2, "0").elements["1"] == ("a",)
    assert singleton_valued(co_yoneda_obj(cat1, "*"))
    for C in (cat1, cat2):
        for x in C.objects:
            assert co_yoneda_obj(C, x) == yoneda_obj(opposite(C), x)


def test_comparison_on_fixture(cat2, V):
    at1 = yoneda_comparison(V, "1")
    assert len(at1) == 2 and set(at1.backward) == {"x", "y"}
    at0 = yoneda_comparison(V, "0")
    assert len(at0) == 1 and set(at0.forward.values()) == {"z"}


def test_identity_corresponds_to_identity(cat2):
    for x in cat2.objects:
        y = yoneda_obj(cat2, x)
        assert nat_to_element(id_nat(y), x) == cat2.id(x)
        assert element_to_nat(y, x, cat2.id(x)) == id_nat(y)


seeds = st.integers(0, 10 ** 6)


@given(seeds)
def test_yoneda_mor_preserves_composition(seed):
    C = gen_category(GenBounds(3, 8, 2, seed))
    for a, b in C.composable_pairs():
        assert yoneda_mor(C, C.compose(a, b)) == compose_nat(yoneda_mor(C, a), yoneda_mor(C, b))


@given(seeds)
def test_comparison_is_a_bijection(seed):
    b = GenBounds(3, 8, 3, seed)
    C = gen_category(b)
    v = gen_presheaf(b, C)
    for c in C.objects:
        comparison = yoneda_comparison(v, c)
        assert len(enumerate_nat(yoneda_obj(C, c), v)) == len(v.elements[c])
        for xi, p in comparison.forward.items():
            assert comparison.backward[p] == xi


@given(seeds)
def test_yoneda_is_full_and_faithful(seed):
    C = gen_category(GenBounds(3, 8, 2, seed))
    for x in C.objects:
        for y in C.objects:
            images = [yoneda_mor(C, a) for a in C.hom(x, y)]
            assert sorted(images, key=lambda t: t.assignment_key()) == enumerate_nat(yoneda_obj(C, x), yoneda_obj(C, y))
