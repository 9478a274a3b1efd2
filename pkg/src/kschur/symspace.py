"""Exact integer linear combinations over the h, Schur and k-Schur bases.

Also holds the classical Schur-basis operators (multiplication by h_n,
``e_m^perp`` and the Bernstein operators) used as the large-k reference.
"""
from __future__ import annotations

import json
from collections import defaultdict
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple

from .partitions import Partition, as_partition, contains, part, partitions_of

BASES = ("h", "schur", "kschur")


class BasisMismatchError(ValueError):
    pass


class BasisKey(NamedTuple):
    basis: str
    k: int | None
    index: Partition


class LinComb:
    """Immutable finite Z-linear combination of basis elements.

    All terms share one basis tag (and one ``k`` for ``kschur``).  Zero
    coefficients are never stored.  Iteration yields ``(index, coeff)`` in
    canonical order: index partitions in descending lexicographic order.
    """

    __slots__ = ("basis", "k", "_terms")

    def __init__(self, basis: str, terms: Mapping[Partition, int] | Iterable = (), k: int | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        if (basis == "kschur") != (k is not None):
            raise ValueError("k is required for kschur and only for kschur")
        acc: dict[Partition, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for index, coeff in items:
            if not isinstance(coeff, int):
                raise TypeError(f"coefficients must be int, got {type(coeff).__name__}")
            acc[as_partition(index)] += coeff
        if basis == "kschur":
            bad = [ix for ix in acc if ix and ix[0] > k]
            if bad:
                raise ValueError(f"kschur indices must be {k}-bounded: {bad}")
        self.basis = basis
        self.k = k
        self._terms = {ix: c for ix, c in sorted(acc.items(), reverse=True) if c}

    @classmethod
    def unit(cls, basis: str, index: Iterable[int] = (), k: int | None = None) -> LinComb:
        return cls(basis, {tuple(index): 1}, k=k)

    @classmethod
    def zero(cls, basis: str, k: int | None = None) -> LinComb:
        return cls(basis, {}, k=k)

    def _check(self, other: LinComb) -> None:
        if (self.basis, self.k) != (other.basis, other.k):
            raise BasisMismatchError(
                f"cannot combine {self.basis}(k={self.k}) with {other.basis}(k={other.k})"
            )

    def coeff(self, index: Iterable[int]) -> int:
        return self._terms.get(tuple(index), 0)

    coeff_of = coeff

    def keys(self) -> list[BasisKey]:
        return [BasisKey(self.basis, self.k, ix) for ix in self._terms]

    def items(self):
        return self._terms.items()

    def support(self) -> list[Partition]:
        return list(self._terms)

    def __iter__(self) -> Iterator[tuple[Partition, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return (self.basis, self.k, self._terms) == (other.basis, other.k, other._terms)

    def __hash__(self):
        return hash((self.basis, self.k, tuple(self._terms.items())))

    def __add__(self, other: LinComb) -> LinComb:
        self._check(other)
        acc = dict(self._terms)
        for ix, c in other._terms.items():
            acc[ix] = acc.get(ix, 0) + c
        return LinComb(self.basis, acc, k=self.k)

    def __neg__(self) -> LinComb:
        return self.scale(-1)

    def __sub__(self, other: LinComb) -> LinComb:
        return self + (-other)

    def scale(self, c: int) -> LinComb:
        return LinComb(self.basis, {ix: c * v for ix, v in self._terms.items()}, k=self.k)

    def __mul__(self, c: int) -> LinComb:
        if not isinstance(c, int):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def is_unit(self, index: Iterable[int]) -> bool:
        return self._terms == {tuple(index): 1}

    def __repr__(self) -> str:
        return f"LinComb({self.basis!r}, {self._terms!r}, k={self.k!r})"

    def __str__(self) -> str:
        return format_text(self)

    def to_json(self) -> dict:
        out: dict = {"basis": self.basis}
        if self.k is not None:
            out["k"] = self.k
        out["terms"] = [{"index": list(ix), "coeff": c} for ix, c in self._terms.items()]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict | str) -> LinComb:
        if isinstance(data, str):
            data = json.loads(data)
        terms = [(tuple(t["index"]), int(t["coeff"])) for t in data["terms"]]
        return cls(data["basis"], terms, k=data.get("k"))


def linear_extend(f: LinComb, op: Callable[[Partition], LinComb], basis: str, k: int | None = None) -> LinComb:
    """Apply ``op`` to each basis element of ``f`` and collect the result."""
    acc: dict[Partition, int] = defaultdict(int)
    for ix, c in f:
        for jx, d in op(ix):
            acc[jx] += c * d
    return LinComb(basis, acc, k=k)


def format_term(basis: str, index: Partition) -> str:
    name = {"h": "h", "schur": "s", "kschur": "s"}[basis]
    return f"{name}({','.join(map(str, index))})"


def format_text(f: LinComb) -> str:
    if not f:
        return "0"
    out = []
    for n, (ix, c) in enumerate(f):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        term = format_term(f.basis, ix)
        body = term if mag == 1 else f"{mag}*{term}"
        if n == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


# ---------------------------------------------------------------------------
# classical Schur operators


def horizontal_strips_above(lam: Partition, ell: int) -> Iterator[Partition]:
    """All ``mu`` containing ``lam`` with ``mu / lam`` a horizontal ``ell``-strip."""
    n = len(lam)

    def rec(i: int, left: int) -> Iterator[tuple[int, ...]]:
        # row i is 1-indexed; rows 1..n+1 can grow
        if i == n + 2:
            if left == 0:
                yield ()
            return
        lo = part(lam, i)
        hi = lo + left if i == 1 else min(part(lam, i - 1), lo + left)
        for new in range(lo, hi + 1):
            for rest in rec(i + 1, left - (new - lo)):
                yield (new,) + rest

    for mu in rec(1, ell):
        yield as_partition(mu)


def vertical_strips_below(lam: Partition, m: int) -> Iterator[Partition]:
    """All ``mu`` inside ``lam`` with ``lam / mu`` a vertical ``m``-strip."""
    for rows in combinations(range(len(lam)), m):
        mu = list(lam)
        for r in rows:
            mu[r] -= 1
        if all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1)):
            yield as_partition(mu)


def classical_pieri_h(ell: int, lam: Partition) -> LinComb:
    return LinComb("schur", {mu: 1 for mu in horizontal_strips_above(lam, ell)})


def e_perp(m: int, lam: Partition) -> LinComb:
    return LinComb("schur", {mu: 1 for mu in vertical_strips_below(lam, m)})


def multiply_h_schur(n: int, f: LinComb) -> LinComb:
    return linear_extend(f, lambda ix: classical_pieri_h(n, ix), "schur")


def bernstein_B(n: int, f: LinComb) -> LinComb:
    """Bernstein creation operator ``sum_i (-1)^i h_{n+i} e_i^perp``."""
    if f.basis != "schur":
        raise BasisMismatchError("bernstein_B acts on the Schur basis")
    top = max((len(ix) for ix in f.support()), default=0)
    out = LinComb.zero("schur")
    for i in range(top + 1):
        lowered = linear_extend(f, lambda ix: e_perp(i, ix), "schur")
        out = out + multiply_h_schur(n + i, lowered).scale((-1) ** i)
    return out


def schur_by_bernstein(lam: Partition) -> LinComb:
    f = LinComb.unit("schur", ())
    for n in reversed(lam):
        f = bernstein_B(n, f)
    return f


def classical_kostka(mu: Partition, alpha: Iterable[int]) -> int:
    """Number of SSYT of shape ``mu`` and content ``alpha`` via iterated Pieri."""
    alpha = tuple(alpha)
    if sum(mu) != sum(alpha):
        raise ValueError(f"degree mismatch: |{mu}| != |{alpha}|")
    f = LinComb.unit("schur", ())
    for a in alpha:
        f = LinComb("schur", {ix: c for ix, c in multiply_h_schur(a, f) if contains(mu, ix)})
    return f.coeff(mu)


def solve_unitriangular(
    indices: Iterable[Partition], kostka: Callable[[Partition, Partition], int]
) -> dict[Partition, dict[Partition, int]]:
    """Invert ``h_lam = s_lam + sum_{mu > lam} K[mu, lam] s_mu``.

    ``indices`` is a set of same-degree partitions closed under going up in
    dominance; lexicographic order is used as the linear extension.  Returns
    ``lam -> {alpha: coeff}`` giving ``s_lam`` in the h basis.
    """
    order = sorted(indices, reverse=True)
    expansions: dict[Partition, dict[Partition, int]] = {}
    for lam in order:
        diag = kostka(lam, lam)
        if diag != 1:
            raise ArithmeticError(f"diagonal entry K[{lam},{lam}] = {diag}, expected 1")
        row: dict[Partition, int] = defaultdict(int)
        row[lam] += 1
        for mu in order:
            if mu == lam:
                break
            c = kostka(mu, lam)
            if c:
                for alpha, d in expansions[mu].items():
                    row[alpha] -= c * d
        expansions[lam] = {a: c for a, c in row.items() if c}
    return expansions


@lru_cache(maxsize=None)
def _classical_table(n: int) -> dict[Partition, dict[Partition, int]]:
    return solve_unitriangular(partitions_of(n), classical_kostka)


def classical_h_expansion(lam: Partition) -> LinComb:
    """``s_lam`` in the h basis by inverting the classical Kostka matrix."""
    return LinComb("h", _classical_table(sum(lam))[tuple(lam)])
