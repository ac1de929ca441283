"""Small named categories, functors and presheaves used in docs and tests.

``cat1``   terminal category: object ``*``, identity ``id*``.
``cat2``   walking arrow: objects ``0``, ``1``, arrow ``a: 0 -> 1``.
``V``      presheaf on ``cat2`` with V(1) = {x, y}, V(0) = {z}; ``a`` sends x, y to z.
``bang``   the unique functor ``cat2 -> cat1``.
``inc1``   the functor ``cat1 -> cat2`` picking object ``1``.
"""
from .category import validate_category
from .presheaf import constant_presheaf, validate_functor, validate_presheaf


def cat1():
    return validate_category({
        "objects": ["*"],
        "morphisms": [{"id": "id*", "src": "*", "tgt": "*"}],
        "identity": {"*": "id*"},
        "compose": {"id*|id*": "id*"},
    })


def cat2():
    return validate_category({
        "objects": ["0", "1"],
        "morphisms": [
            {"id": "id0", "src": "0", "tgt": "0"},
            {"id": "id1", "src": "1", "tgt": "1"},
            {"id": "a", "src": "0", "tgt": "1"},
        ],
        "identity": {"0": "id0", "1": "id1"},
        "compose": {"id0|id0": "id0", "id1|id1": "id1", "id0|a": "a", "a|id1": "a"},
    })


def V():
    return validate_presheaf(cat2(), {"1": ["x", "y"], "0": ["z"]}, {"a": {"x": "z", "y": "z"}})


def singleton(C):
    return constant_presheaf(C, ("*",))


def bang():
    return validate_functor(cat2(), cat1(), {"0": "*", "1": "*"}, {"id0": "id*", "id1": "id*", "a": "id*"})


def inc1():
    return validate_functor(cat1(), cat2(), {"*": "1"}, {"id*": "id1"})
