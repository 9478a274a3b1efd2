"""Multiplication of k-Schur functions by h_ell (the k-Pieri rule).

Two formulations are provided: :func:`pieri_subsets` runs over residue
subsets ``A`` and applies ``sigma_A`` to the core; :func:`pieri_strips` runs
over target partitions and tests the horizontal-strip condition directly.
"""
from __future__ import annotations

from functools import lru_cache

from .cores import (
    Core,
    NotKBoundedError,
    UndefinedActionError,
    bounded_size,
    c_map,
    p_map,
    residue,
    residue_subsets,
    sigma_A,
)
from .partitions import Partition, SkewShape, contains, is_horizontal_strip, k_bounded_partitions
from .symspace import LinComb, linear_extend


def _check(lam: Partition, ell: int, k: int) -> None:
    if not 1 <= ell <= k:
        raise ValueError(f"ell must lie in 1..{k}, got {ell}")
    if lam and lam[0] > k:
        raise NotKBoundedError(f"{lam} is not {k}-bounded")


def pieri_subsets_of_core(core: Core, ell: int) -> list[tuple[frozenset[int], Core]]:
    """Subsets ``A`` of size ``ell`` for which ``sigma_A`` grows ``core`` by
    exactly ``ell`` k-bounded cells, with the resulting cores."""
    target = bounded_size(core) + ell
    out = []
    for A in residue_subsets(core.k, ell):
        try:
            grown = sigma_A(core, A)
        except UndefinedActionError:
            continue
        if bounded_size(grown) == target:
            out.append((A, grown))
    return out


def pieri_subsets(lam: Partition, ell: int, k: int) -> list[tuple[frozenset[int], Core]]:
    lam = tuple(lam)
    _check(lam, ell, k)
    return pieri_subsets_of_core(c_map(lam, k), ell)


@lru_cache(maxsize=None)
def _pieri_terms(lam: Partition, ell: int, k: int) -> tuple[Partition, ...]:
    return tuple(p_map(core) for _, core in pieri_subsets(lam, ell, k))


def multiply_h(ell: int, f: LinComb | Partition, k: int | None = None) -> LinComb:
    """``h_ell * f`` for a k-Schur combination ``f`` (or a single index)."""
    if not isinstance(f, LinComb):
        if k is None:
            raise TypeError("k is required when f is a partition")
        f = LinComb.unit("kschur", f, k=k)
    k = f.k
    if f.basis != "kschur":
        raise ValueError("multiply_h acts on the kschur basis")
    if ell == 0:
        return f

    def one(lam: Partition) -> LinComb:
        acc: dict[Partition, int] = {}
        for mu in _pieri_terms(lam, ell, k):
            acc[mu] = acc.get(mu, 0) + 1
        return LinComb("kschur", acc, k=k)

    return linear_extend(f, one, "kschur", k=k)


def pieri_strips(lam: Partition, ell: int, k: int) -> LinComb:
    """Sum over k-bounded ``mu`` with ``c(mu) / c(lam)`` a horizontal strip
    carrying exactly ``ell`` distinct residues."""
    lam = tuple(lam)
    _check(lam, ell, k)
    inner = c_map(lam, k).shape
    terms = {}
    for mu in k_bounded_partitions(sum(lam) + ell, k):
        outer = c_map(mu, k).shape
        if not contains(outer, inner):
            continue
        skew = SkewShape(outer, inner)
        if not is_horizontal_strip(skew):
            continue
        if len({residue(i, j, k) for i, j in skew.cells()}) == ell:
            terms[mu] = 1
    return LinComb("kschur", terms, k=k)
