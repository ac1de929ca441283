"""Seeded random generation of small categories, functors and presheaves.

Categories are built as the free category on a random acyclic multigraph
with optional idempotent loops (``e.e = e``), so associativity holds by
construction.  Functors and presheaves are found by randomized backtracking.
Everything is deterministic in ``GenBounds.seed``.
"""
import random
from dataclasses import dataclass, replace
from itertools import product

from .category import Morphism, validate_category
from .errors import GenerationExhausted
from .presheaf import constant_presheaf, validate_functor, validate_presheaf

# Seed used by the documented reproducibility check.
REFERENCE_SEED = 20240611

_NODE_BUDGET = 20000


@dataclass(frozen=True)
class GenBounds:
    max_objects: int = 3
    max_morphisms: int = 8
    max_element_set_size: int = 2
    seed: int = 0

    def __post_init__(self):
        if min(self.max_objects, self.max_morphisms, self.max_element_set_size) < 1:
            raise ValueError("bounds must be positive")
        if self.max_morphisms < self.max_objects:
            raise GenerationExhausted("every object needs an identity morphism")

    @classmethod
    def parse(cls, text, seed=0):
        """Parse ``"o,m,e"``."""
        o, m, e = (int(part) for part in text.split(","))
        return cls(o, m, e, seed)

    def with_seed(self, seed):
        return replace(self, seed=seed)


def _paths(n, edges, idempotents, limit):
    """Normal-form words of the presented category, or None past ``limit``."""
    out_edges = {i: [] for i in range(n)}
    for name, s, t in edges:
        out_edges[s].append((name, t))
    idem_at = {i: name for name, i in idempotents}
    words = []
    stack = [((), i, i) for i in range(n)]
    while stack:
        word, s, cur = stack.pop()
        words.append((word, s, cur))
        if len(words) > limit:
            return None
        e = idem_at.get(cur)
        if e is not None and (not word or word[-1] != e):
            stack.append((word + (e,), s, cur))
        for name, t in out_edges[cur]:
            stack.append((word + (name,), s, t))
    return words


def _reduce(word, idempotent_names):
    out = []
    for g in word:
        if out and g == out[-1] and g in idempotent_names:
            continue
        out.append(g)
    return tuple(out)


def presented_category(n, edges, idempotents):
    """The category presented by DAG ``edges`` and idempotent loops.

    ``edges`` are ``(name, src, tgt)`` with ``src < tgt``; ``idempotents``
    are ``(name, obj)``.  Objects are ``"0" .. "n-1"``.
    """
    words = _paths(n, edges, idempotents, limit=10 ** 6)
    idem_names = {name for name, _ in idempotents}

    def label(word, s):
        return ".".join(word) if word else f"id{s}"

    by_word = {}
    morphisms = []
    for word, s, t in words:
        m = Morphism(label(word, s), str(s), str(t))
        by_word[word, s] = m
        morphisms.append(m)
    compose = {}
    for wa, sa, ta in words:
        for wb, sb, tb in words:
            if ta != sb:
                continue
            w = _reduce(wa + wb, idem_names)
            compose[label(wa, sa), label(wb, sb)] = by_word[w, sa].id
    return validate_category({
        "objects": [str(i) for i in range(n)],
        "morphisms": morphisms,
        "identity": {str(i): f"id{i}" for i in range(n)},
        "compose": compose,
    })


def gen_category(bounds: GenBounds):
    rng = random.Random(bounds.seed)
    n = rng.randint(1, bounds.max_objects)
    if n > bounds.max_morphisms:
        raise GenerationExhausted("too many objects for the morphism bound")
    candidates = []
    for k in range(rng.randint(0, 2 * bounds.max_morphisms)):
        if n > 1 and rng.random() < 0.8:
            s, t = sorted(rng.sample(range(n), 2))
            candidates.append(("edge", s, t))
        else:
            candidates.append(("idem", rng.randrange(n), None))
    edges, idems = [], []
    used_idem = set()
    for kind, s, t in candidates:
        if kind == "edge":
            trial = (edges + [(f"f{len(edges)}", s, t)], idems)
        else:
            if s in used_idem:
                continue
            trial = (edges, idems + [(f"e{s}", s)])
        words = _paths(n, trial[0], trial[1], bounds.max_morphisms)
        if words is not None:
            edges, idems = trial
            if kind == "idem":
                used_idem.add(s)
    return presented_category(n, edges, idems)


def _search(variables, options, consistent, rng, budget=_NODE_BUDGET):
    """Randomized backtracking: assign each variable one of its options."""
    order = {v: rng.sample(options[v], len(options[v])) for v in variables}
    assignment = {}
    nodes = 0

    def go(i):
        nonlocal nodes
        if i == len(variables):
            return True
        var = variables[i]
        for value in order[var]:
            nodes += 1
            if nodes > budget:
                return False
            assignment[var] = value
            if consistent(assignment, var) and go(i + 1):
                return True
            del assignment[var]
        return False

    return assignment if go(0) else None


def _composites_touching(C):
    touching = {}
    for (a, b), ab in C.composition.items():
        for label in {a, b, ab}:
            touching.setdefault(label, []).append((a, b, ab))
    return touching


def gen_functor(bounds: GenBounds, C, D):
    """A random valid functor ``C -> D``; falls back to a constant functor."""
    rng = random.Random(bounds.seed)
    touching = _composites_touching(C)
    for _ in range(20):
        obj_map = {x: rng.choice(D.objects) for x in C.objects}
        mor_map = {C.id(x): D.id(obj_map[x]) for x in C.objects}
        variables = [m.id for m in C.morphisms if not C.is_identity(m.id)]
        options = {m.id: list(D.hom(obj_map[m.src], obj_map[m.tgt])) for m in C.morphisms}

        def consistent(assignment, var):
            full = {**mor_map, **assignment}
            for a, b, ab in touching.get(var, ()):
                if a in full and b in full and ab in full:
                    if D.compose(full[a], full[b]) != full[ab]:
                        return False
            return True

        if any(not options[v] for v in variables):
            continue
        found = _search(variables, options, consistent, rng)
        if found is not None:
            return validate_functor(C, D, obj_map, {**mor_map, **found})
    x = D.objects[0]
    return validate_functor(C, D, {c: x for c in C.objects}, {m.id: D.id(x) for m in C.morphisms})


def gen_presheaf(bounds: GenBounds, C, max_size=None):
    """A random valid presheaf on ``C`` with values of size at most ``max_size``."""
    rng = random.Random(bounds.seed)
    top = max_size if max_size is not None else bounds.max_element_set_size
    touching = _composites_touching(C)
    for _ in range(20):
        sizes = {x: (rng.randint(1, top) if rng.random() < 0.85 else 0) for x in C.objects}
        elements = {x: [f"p{k}" for k in range(sizes[x])] for x in C.objects}
        identity_actions = {C.id(x): {p: p for p in elements[x]} for x in C.objects}
        variables = [m.id for m in C.morphisms if not C.is_identity(m.id)]
        options = {}
        for m in C.morphisms:
            dom, cod = elements[m.tgt], elements[m.src]
            options[m.id] = [dict(zip(dom, image)) for image in product(cod, repeat=len(dom))]
        if any(not options[v] for v in variables):
            continue

        def consistent(assignment, var):
            full = {**identity_actions, **assignment}
            for a, b, ab in touching.get(var, ()):
                if a in full and b in full and ab in full:
                    va, vb = full[a], full[b]
                    if any(va[vb[p]] != q for p, q in full[ab].items()):
                        return False
            return True

        found = _search(variables, options, consistent, rng)
        if found is not None:
            return validate_presheaf(C, elements, {**identity_actions, **found})
    return constant_presheaf(C)


def full_subcategory_inclusion(D, objects):
    """The inclusion of the full subcategory of ``D`` on ``objects``."""
    keep = set(objects)
    morphisms = [m for m in D.morphisms if m.src in keep and m.tgt in keep]
    labels = {m.id for m in morphisms}
    C = validate_category({
        "objects": sorted(keep),
        "morphisms": morphisms,
        "identity": {x: D.id(x) for x in keep},
        "compose": {k: v for k, v in D.composition.items() if k[0] in labels and k[1] in labels},
    })
    return validate_functor(C, D, {x: x for x in keep}, {m.id: m.id for m in morphisms})


def thin_reflection(C):
    """The quotient of ``C`` onto its preorder of reachability."""
    reach = {(m.src, m.tgt) for m in C.morphisms}
    lab = {pair: f"{pair[0]}<={pair[1]}" for pair in reach}
    P = validate_category({
        "objects": list(C.objects),
        "morphisms": [Morphism(lab[s, t], s, t) for s, t in reach],
        "identity": {x: lab[x, x] for x in C.objects},
        "compose": {(lab[a], lab[b]): lab[a[0], b[1]] for a in reach for b in reach if a[1] == b[0]},
    })
    return validate_functor(C, P, {x: x for x in C.objects}, {m.id: lab[m.src, m.tgt] for m in C.morphisms})


def gen_full_faithful(bounds: GenBounds):
    rng = random.Random(bounds.seed)
    D = gen_category(bounds)
    k = rng.randint(1, len(D.objects))
    return full_subcategory_inclusion(D, rng.sample(D.objects, k))


def gen_full_not_faithful(bounds: GenBounds, attempts=200):
    """A full functor that identifies two parallel morphisms."""
    for i in range(attempts):
        C = gen_category(bounds.with_seed(bounds.seed * 7919 + i))
        if any(len(C.hom(x, y)) > 1 for x in C.objects for y in C.objects):
            return thin_reflection(C)
    raise GenerationExhausted("no category with a hom-set of size two within the bounds")


def terminal_functor(C):
    """The unique functor from ``C`` to the one-object, one-morphism category."""
    T = validate_category({
        "objects": ["*"],
        "morphisms": [("id*", "*", "*")],
        "identity": {"*": "id*"},
        "compose": {("id*", "id*"): "id*"},
    })
    return validate_functor(C, T, {x: "*" for x in C.objects}, {m.id: "id*" for m in C.morphisms})
