"""Generalized Bernstein operators for k-Schur functions.

For a k-bounded ``lam = (r, nu)`` with core ``gamma = c(lam)``, the lowering
operator ``e_perp_k(ell, r, .)`` removes vertical (k, ell)-strips from
``gamma`` minus its bottom row, and

    B_r^(k) = sum_ell (-1)^ell h_{r+ell} e_perp_k(ell, r, .)

sends ``s^(k)_nu`` to ``s^(k)_lam``.  Unrolling the recursion gives the signed
h-expansion of :func:`h_expansion`.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .cores import (
    Core,
    CoreError,
    NotKBoundedError,
    Ribbon,
    c_map,
    hook_lengths,
    p_map,
    ribbon_components,
    strong_covers_below,
)
from .kpieri import multiply_h
from .partitions import Partition, SkewShape, contains, is_vertical_strip, part
from .symspace import LinComb


class DomainError(ValueError):
    """An index lies outside the domain ``V^(k,r)`` of the operator."""


@dataclass(frozen=True)
class MainSubpartitionInfo:
    sub: Partition
    start_column: int
    length: int
    context: Core


def main_subpartition(omega: Core) -> MainSubpartitionInfo:
    """Columns of ``omega`` minus its first row, from the column of the leftmost
    k-bounded cell of row 1 rightward."""
    if not omega.shape:
        raise CoreError("main subpartition of the empty core is undefined")
    hooks = hook_lengths(omega.shape)
    j = next(c for c in range(1, omega.shape[0] + 1) if hooks[(1, c)] <= omega.k)
    sub = tuple(p - (j - 1) for p in omega.shape[1:] if p >= j)
    return MainSubpartitionInfo(sub, j, len(sub), omega)


def _check_single_cover(delta: Core, omega: Core, ribbons: list[Ribbon]) -> None:
    # p(omega) = p(delta) + e_i with i the highest ribbon row
    top = max(i for rb in ribbons for i, _ in rb.cells)
    big, small = p_map(omega), p_map(delta)
    diff = [part(big, i) - part(small, i) for i in range(1, max(len(big), len(small)) + 1)]
    expect = [int(i == top) for i in range(1, len(diff) + 1)]
    if diff != expect:
        raise AssertionError(
            f"single-cover rule fails: p({omega.shape})={big}, p({delta.shape})={small}, row {top}"
        )


@lru_cache(maxsize=None)
def horizontal_covers_below(omega: Core) -> tuple[tuple[Core, int], ...]:
    """Strong covers ``delta`` of ``omega`` whose skew is a union of horizontal
    ribbons, each with the row of its lowest ribbon."""
    out = []
    for delta, _ in strong_covers_below(omega):
        ribbons = ribbon_components(delta, omega)
        if all(rb.is_horizontal for rb in ribbons):
            if __debug__:
                _check_single_cover(delta, omega, ribbons)
            out.append((delta, ribbons[0].lowest_row))
    return tuple(out)


def vertical_strip_chains(hat: Core, m: int, ell: int, ordered: bool = True) -> Iterator[tuple[tuple[Core, ...], tuple[int, ...]]]:
    """Chains ``hat = w1 > w2 > ... > w_{ell+1}`` removing a vertical
    (k, ell)-strip, with the rows of their lowest ribbons.

    With ``ordered`` the rows must strictly decrease, which reaches the same
    end cores with fewer chains.
    """
    def rec(omega: Core, used: tuple[int, ...], left: int):
        if left == 0:
            yield (omega,), ()
            return
        for delta, row in horizontal_covers_below(omega):
            if row > m or row in used:
                continue
            if ordered and used and row >= used[-1]:
                continue
            for chain, rows in rec(delta, used + (row,), left - 1):
                yield (omega,) + chain, (row,) + rows

    yield from rec(hat, (), ell)


@lru_cache(maxsize=None)
def enumerate_vertical_strips(hat: Core, m: int, ell: int, ordered: bool = True) -> frozenset[Core]:
    return frozenset(chain[-1] for chain, _ in vertical_strip_chains(hat, m, ell, ordered))


def _check_domain(nu: Partition, r: int, k: int) -> None:
    if not 1 <= r <= k:
        raise ValueError(f"r must lie in 1..{k}, got {r}")
    if nu and nu[0] > k:
        raise NotKBoundedError(f"{nu} is not {k}-bounded")
    if nu and nu[0] > r:
        raise DomainError(f"first part of {nu} exceeds r={r}")


@lru_cache(maxsize=None)
def _e_perp_k_terms(ell: int, r: int, nu: Partition, k: int) -> tuple[Partition, ...]:
    _check_domain(nu, r, k)
    gamma = c_map((r,) + nu, k)
    hat = gamma.hat()
    if hat != c_map(nu, k):
        raise AssertionError(f"core of {(r,) + nu} minus its first row is not c({nu})")
    m = main_subpartition(gamma).length
    out = []
    p_hat = p_map(hat)
    for delta in enumerate_vertical_strips(hat, m, ell):
        mu = p_map(delta)
        if __debug__:
            if sum(p_hat) - sum(mu) != ell:
                raise AssertionError(f"strip from {hat} to {delta} has inconsistent length")
            if not (contains(p_hat, mu) and is_vertical_strip(SkewShape(p_hat, mu))):
                raise AssertionError(f"{p_hat}/{mu} is not a vertical strip")
        out.append(mu)
    return tuple(sorted(out, reverse=True))


def e_perp_k(ell: int, r: int, nu: Partition | LinComb, k: int | None = None) -> LinComb:
    """The lowering operator ``e_{ell,r}^perp`` on ``V^(k,r)``."""
    if isinstance(nu, LinComb):
        f = nu
        acc: Counter = Counter()
        for ix, c in f:
            for mu in _e_perp_k_terms(ell, r, ix, f.k):
                acc[mu] += c
        return LinComb("kschur", acc, k=f.k)
    if k is None:
        raise TypeError("k is required when nu is a partition")
    return LinComb("kschur", Counter(_e_perp_k_terms(ell, r, tuple(nu), k)), k=k)


@dataclass(frozen=True)
class BernsteinTerm:
    sign: int
    index: Partition
    ell: int
    source: Partition  # the term of e_perp_k(ell, r, .) that was multiplied


def B_k_terms(r: int, f: LinComb) -> list[BernsteinTerm]:
    """The expansion of ``B_r^(k) f`` before cancellation, one entry per
    k-Schur function produced (for unit coefficients in ``f``)."""
    k = f.k
    out = []
    for ix, c in f:
        _check_domain(ix, r, k)
        for ell in range(0, k - r + 1):
            for src in _e_perp_k_terms(ell, r, ix, k):
                for mu, d in multiply_h(r + ell, src, k):
                    out.append(BernsteinTerm((-1) ** ell * c * d, mu, ell, src))
    return out


def B_k(r: int, f: LinComb) -> LinComb:
    """Apply ``B_r^(k)``; every index of ``f`` must have first part at most r."""
    if f.basis != "kschur":
        raise ValueError("B_k acts on the kschur basis")
    acc: Counter = Counter()
    for t in B_k_terms(r, f):
        acc[t.index] += t.sign
    return LinComb("kschur", acc, k=f.k)


def kschur_by_recursion(lam: Partition, k: int) -> LinComb:
    """Apply ``B_{lam_1} ... B_{lam_l}`` to 1; should give the unit at ``lam``."""
    lam = tuple(lam)
    if lam and lam[0] > k:
        raise NotKBoundedError(f"{lam} is not {k}-bounded")
    f = LinComb.unit("kschur", (), k=k)
    for r in reversed(lam):
        f = B_k(r, f)
    return f


@dataclass(frozen=True)
class StripSequence:
    chain: tuple[Core, ...]  # empty core first, c(lam) last
    ells: tuple[int, ...]
    firstrows: tuple[int, ...]

    @property
    def part(self) -> Partition:
        return tuple(sorted((l + p for l, p in zip(self.ells, self.firstrows)), reverse=True))

    @property
    def sign(self) -> int:
        return -1 if sum(self.ells) % 2 else 1


@lru_cache(maxsize=None)
def _sequences_down(gamma: Core) -> tuple[tuple[tuple[Core, ...], tuple[int, ...], tuple[int, ...]], ...]:
    # all ways to peel gamma down to the empty core; chains listed top first
    if not gamma.shape:
        return (((gamma,), (), ()),)
    k = gamma.k
    hat = gamma.hat()
    m = main_subpartition(gamma).length
    p = part(p_map(gamma), 1)
    out = []
    for ell in range(0, m + 1):
        for delta in sorted(enumerate_vertical_strips(hat, m, ell), key=lambda c: c.shape, reverse=True):
            if p + ell > k:
                raise AssertionError(f"strip of length {ell} under first row {p} exceeds k={k}")
            for chain, ells, rows in _sequences_down(delta):
                out.append(((gamma,) + chain, (ell,) + ells, (p,) + rows))
    return tuple(out)


def strip_sequences(lam: Partition, k: int) -> list[StripSequence]:
    lam = tuple(lam)
    if lam and lam[0] > k:
        raise NotKBoundedError(f"{lam} is not {k}-bounded")
    out = []
    for chain, ells, rows in _sequences_down(c_map(lam, k)):
        # store bottom-up: gamma^(0) = empty, ..., gamma^(r) = c(lam)
        out.append(StripSequence(chain[::-1], ells[::-1], rows[::-1]))
    return out


def h_expansion(lam: Partition, k: int) -> LinComb:
    """``s^(k)_lam = sum_S sgn(S) h_{part(S)}`` over strip sequences."""
    acc: dict[Partition, int] = defaultdict(int)
    for seq in strip_sequences(lam, k):
        acc[seq.part] += seq.sign
    return LinComb("h", acc)
