"""Time the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Workloads come from real presheaf problems (transformation enumeration and
tensor closure on generated instances) plus two synthetic stress cases.
"""
import argparse
import random
import timeit

from finkan import kernels
from finkan.category import opposite
from finkan.generators import GenBounds, gen_category, gen_presheaf
from finkan.left_kan import relation_instances
from finkan.presheaf import _family_problem


def enumeration_workloads():
    out = []
    for seed in range(40):
        b = GenBounds(4, 12, 3, seed)
        C = gen_category(b)
        u, v = gen_presheaf(b.with_seed(seed + 1), C), gen_presheaf(b.with_seed(seed + 2), C)
        sizes, constraints, _ = _family_problem(u, v)
        out.append((sizes, constraints))
    # a chain of 12 variables over 4 values, each pinned loosely to its neighbour
    rng = random.Random(0)
    chain = [(i, i + 1, [rng.randrange(4) if rng.random() < 0.3 else j for j in range(4)]) for i in range(11)]
    out.append(([4] * 12, chain))
    return out


def partition_workloads():
    out = []
    for seed in range(40):
        b = GenBounds(4, 12, 3, seed)
        C = gen_category(b)
        v, w = gen_presheaf(b.with_seed(seed + 1), C), gen_presheaf(b.with_seed(seed + 2), opposite(C))
        pairs = sorted((c, p, q) for c in C.objects for p in v.elements[c] for q in w.elements[c])
        index = {pair: i for i, pair in enumerate(pairs)}
        rel = relation_instances(v, w)
        out.append((len(pairs), [index[r[3]] for r in rel], [index[r[4]] for r in rel]))
    rng = random.Random(1)
    n = 20000
    out.append((n, [rng.randrange(n) for _ in range(n)], [rng.randrange(n) for _ in range(n)]))
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    enum_cases, part_cases = enumeration_workloads(), partition_workloads()
    backends = kernels.backends()
    print(f"default backend: {kernels.BACKEND}")
    if "cython" not in backends:
        print("compiled extension not built; only the Python backend is timed")

    results = {}
    for name, mod in sorted(backends.items()):
        def run_enum(mod=mod):
            for sizes, constraints in enum_cases:
                mod.enumerate_families(sizes, constraints)

        def run_part(mod=mod):
            for n, left, right in part_cases:
                mod.partition(n, left, right)

        results[name] = (
            min(timeit.repeat(run_enum, number=1, repeat=args.repeat)),
            min(timeit.repeat(run_part, number=1, repeat=args.repeat)),
        )

    print(f"{'backend':<8} {'enumerate (ms)':>15} {'partition (ms)':>15}")
    for name, (e, p) in sorted(results.items()):
        print(f"{name:<8} {e * 1000:>15.2f} {p * 1000:>15.2f}")
    if len(results) == 2:
        (pe, pp), (ce, cp) = results["python"], results["cython"]
        print(f"speedup  {pe / ce:>14.1f}x {pp / cp:>14.1f}x")


if __name__ == "__main__":
    main()
