"""Pure-Python kernels; reference behaviour for the compiled versions.

Both kernels work on integer encodings prepared by the callers:

``enumerate_families(sizes, constraints)``
    Variables ``0..n-1`` range over ``range(sizes[i])``.  Each constraint
    ``(i, k, table)`` demands ``value[k] == table[value[i]]``.  Returns every
    satisfying assignment as a tuple, in lexicographic order.

``partition(n, left, right)``
    Union-find closure of the pairs ``(left[j], right[j])`` on ``range(n)``.
    Returns the least member of each node's class.
"""


def _checks_by_variable(n, constraints):
    checks = [[] for _ in range(n)]
    for i, k, table in constraints:
        checks[max(i, k)].append((i, k, table))
    return checks


def enumerate_families(sizes, constraints):
    n = len(sizes)
    checks = _checks_by_variable(n, constraints)
    values = [-1] * n
    out = []
    pos = 0
    while pos >= 0:
        if pos == n:
            out.append(tuple(values))
            pos -= 1
            continue
        values[pos] += 1
        if values[pos] >= sizes[pos]:
            values[pos] = -1
            pos -= 1
            continue
        for i, k, table in checks[pos]:
            if table[values[i]] != values[k]:
                break
        else:
            pos += 1
    return out


def partition(n, left, right):
    parent = list(range(n))

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for a, b in zip(left, right):
        ra, rb = find(a), find(b)
        if ra != rb:
            # smaller index wins so roots are class minima
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb
    return [find(x) for x in range(n)]
