"""Slow, obviously-correct reference computations used by the tests.

Nothing here imports the package: every answer is computed from first
principles (explicit cell sets, explicit fillings, determinants).
"""
from __future__ import annotations

from collections import defaultdict
from itertools import permutations


def cell_set(lam):
    return {(i, j) for i, row in enumerate(lam, start=1) for j in range(1, row + 1)}


def conjugate_bf(lam):
    cs = cell_set(lam)
    width = max((j for _, j in cs), default=0)
    return tuple(sum(1 for (_, j) in cs if j == c) for c in range(1, width + 1))


def hook_bf(lam, i, j):
    cs = cell_set(lam)
    arm = sum(1 for (a, b) in cs if a == i and b > j)
    leg = sum(1 for (a, b) in cs if b == j and a > i)
    return arm + leg + 1


def is_core_bf(lam, k):
    return all(hook_bf(lam, i, j) != k + 1 for (i, j) in cell_set(lam))


def bounded_count_bf(lam, k):
    return sum(1 for (i, j) in cell_set(lam) if hook_bf(lam, i, j) <= k)


def row_counts_bf(lam, k):
    rows = [sum(1 for (a, b) in cell_set(lam) if a == i and hook_bf(lam, a, b) <= k)
            for i in range(1, len(lam) + 1)]
    return tuple(r for r in rows if r)


def all_partitions(n, max_part=None):
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in all_partitions(n - first, first):
            yield (first,) + rest


def subshapes(lam):
    """Every partition contained in ``lam``."""
    def rec(i, bound):
        if i == len(lam):
            yield ()
            return
        for p in range(min(bound, lam[i]), -1, -1):
            if p == 0:
                yield ()
            else:
                for rest in rec(i + 1, p):
                    yield (p,) + rest
    yield from rec(0, lam[0] if lam else 0)


def strong_covers_bf(shape, k):
    """Cores inside ``shape`` with one fewer k-bounded cell."""
    target = bounded_count_bf(shape, k) - 1
    return {
        sub for sub in subshapes(shape)
        if sub != shape and is_core_bf(sub, k) and bounded_count_bf(sub, k) == target
    }


def ssyt_fillings(lam, content):
    """Every semistandard filling (rows weak, columns strict, French) with the
    given content, as dicts cell -> letter."""
    cells = sorted(cell_set(lam))  # row-major from the bottom row
    letters = [a for a, c in enumerate(content, start=1) for _ in range(c)]
    n_letters = len(content)
    out = []

    def rec(t, filling, left):
        if t == len(cells):
            out.append(dict(filling))
            return
        i, j = cells[t]
        lo = 1
        if j > 1:
            lo = max(lo, filling[(i, j - 1)])
        if i > 1:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for a in range(lo, n_letters + 1):
            if left[a - 1]:
                left[a - 1] -= 1
                filling[(i, j)] = a
                rec(t + 1, filling, left)
                del filling[(i, j)]
                left[a - 1] += 1

    if sum(content) == len(letters) == len(cells):
        rec(0, {}, list(content))
    return out


def ktableaux_bf(shape, weight, k):
    """k-tableaux by filtering all semistandard fillings of ``shape``: letter a
    must cover exactly ``weight[a-1]`` residues.  Content is not fixed, so
    every content with the right number of letters is tried."""
    cells_ = cell_set(shape)
    r = len(weight)
    out = []
    for content in compositions(len(cells_), r):
        for f in ssyt_fillings(shape, content):
            ok = all(
                len({(j - i) % (k + 1) for (i, j), x in f.items() if x == a}) == weight[a - 1]
                for a in range(1, r + 1)
            )
            if ok:
                out.append(f)
    return out


def compositions(n, parts):
    """Compositions of n into exactly ``parts`` positive parts."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(1, n - parts + 2):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def jacobi_trudi_h(lam):
    """s_lam = det(h_{lam_i - i + j}) expanded into products of h's."""
    n = len(lam)
    acc = defaultdict(int)
    for perm in permutations(range(n)):
        sign = 1
        for a in range(n):
            for b in range(a + 1, n):
                if perm[a] > perm[b]:
                    sign = -sign
        idx = [lam[i] - i + perm[i] for i in range(n)]
        if any(x < 0 for x in idx):
            continue
        key = tuple(sorted((x for x in idx if x), reverse=True))
        acc[key] += sign
    return {key: c for key, c in acc.items() if c}
