"""k-tableaux, k-Kostka numbers and the defining h-expansion of k-Schur functions.

This module is the independent witness for the recursion in
:mod:`kschur.kbernstein`: it works straight from the k-tableau definition and
does not import the Pieri or Bernstein machinery.

A filling with weakly increasing rows and strictly increasing columns is the
same thing as a chain of partitions whose successive differences are
horizontal strips, so tableaux are enumerated letter by letter.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Sequence

from .cores import Core, NotKBoundedError, bounded_size, c_map, residue
from .partitions import Cell, Partition, conjugate, dominates, k_bounded_partitions, part
from .symspace import LinComb, solve_unitriangular

CACHE_FORMAT_VERSION = 1


class DegreeMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class KTableau:
    shape: Core
    rows: tuple[tuple[int, ...], ...]  # rows[i - 1][j - 1] is the letter in cell (i, j)
    weight: tuple[int, ...]

    def letter(self, cell: Cell) -> int:
        i, j = cell
        return self.rows[i - 1][j - 1]

    def residues_of(self, letter: int) -> set[int]:
        k = self.shape.k
        return {
            residue(i, j, k)
            for i, row in enumerate(self.rows, start=1)
            for j, x in enumerate(row, start=1)
            if x == letter
        }

    def is_valid(self) -> bool:
        rows = self.rows
        for i, row in enumerate(rows):
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                return False
            if i and any(row[j] <= rows[i - 1][j] for j in range(len(row))):
                return False
        return all(
            len(self.residues_of(a)) == w for a, w in enumerate(self.weight, start=1)
        )

    def __str__(self) -> str:
        # top row first, as drawn
        return "\n".join(" ".join(map(str, row)) for row in reversed(self.rows))


def _strips(inner: Partition, outer: Partition, conj_outer: Partition, k: int,
            want: int, letters_left: int) -> Iterator[Partition]:
    """Horizontal strips ``kappa / inner`` inside ``outer`` covering exactly
    ``want`` residues, leaving columns short enough for ``letters_left`` letters."""
    n = len(outer)

    def rec(i: int, res: frozenset[int]) -> Iterator[tuple[tuple[int, ...], frozenset[int]]]:
        if i > n:
            yield (), res
            return
        lo = part(inner, i)
        hi = part(outer, i) if i == 1 else min(part(outer, i), part(inner, i - 1))
        added = res
        for new in range(lo, hi + 1):
            if new > lo:
                added = added | {residue(i, new, k)}
                if len(added) > want:
                    break
            for rest, r in rec(i + 1, added):
                yield (new,) + rest, r

    for rows, res in rec(1, frozenset()):
        if len(res) != want:
            continue
        kappa = tuple(p for p in rows if p)
        # every column of outer still needs its remaining cells stacked with distinct letters
        kc = conjugate(kappa)
        if all(conj_outer[j] - part(kc, j + 1) <= letters_left for j in range(len(conj_outer))):
            yield kappa


def _tableaux_of(core: Core, alpha: Sequence[int]) -> Iterator[tuple[Partition, ...]]:
    outer = core.shape
    conj_outer = conjugate(outer)
    r = len(alpha)

    def rec(i: int, inner: Partition) -> Iterator[tuple[Partition, ...]]:
        if i == r:
            if inner == outer:
                yield ()
            return
        for kappa in _strips(inner, outer, conj_outer, core.k, alpha[i], r - i - 1):
            for rest in rec(i + 1, kappa):
                yield (kappa,) + rest

    yield from rec(0, ())


def _chain_to_rows(chain: Sequence[Partition], outer: Partition) -> tuple[tuple[int, ...], ...]:
    rows = [[0] * p for p in outer]
    prev: Partition = ()
    for letter, kappa in enumerate(chain, start=1):
        for i, p in enumerate(kappa, start=1):
            for j in range(part(prev, i) + 1, p + 1):
                rows[i - 1][j - 1] = letter
        prev = kappa
    return tuple(tuple(row) for row in rows)


def _check_weight(core: Core, alpha: Sequence[int]) -> None:
    m = bounded_size(core)
    if sum(alpha) != m:
        raise DegreeMismatchError(
            f"weight {tuple(alpha)} has size {sum(alpha)}, core {core} has {m} k-bounded cells"
        )


def enumerate_ktableaux_of_core(core: Core, alpha: Sequence[int]) -> list[KTableau]:
    alpha = tuple(alpha)
    _check_weight(core, alpha)
    return [
        KTableau(core, _chain_to_rows(chain, core.shape), alpha)
        for chain in _tableaux_of(core, alpha)
    ]


def enumerate_ktableaux(mu: Partition, alpha: Sequence[int], k: int) -> list[KTableau]:
    """All k-tableaux of shape ``c_map(mu)`` and k-weight ``alpha``."""
    return enumerate_ktableaux_of_core(c_map(tuple(mu), k), alpha)


@lru_cache(maxsize=None)
def _count(outer: Partition, k: int, alpha: tuple[int, ...]) -> int:
    conj_outer = conjugate(outer)
    r = len(alpha)

    @lru_cache(maxsize=None)
    def rec(i: int, inner: Partition) -> int:
        if i == r:
            return int(inner == outer)
        return sum(
            rec(i + 1, kappa)
            for kappa in _strips(inner, outer, conj_outer, k, alpha[i], r - i - 1)
        )

    return rec(0, ())


def count_ktableaux_of_core(core: Core, alpha: Sequence[int]) -> int:
    alpha = tuple(alpha)
    _check_weight(core, alpha)
    return _count(core.shape, core.k, alpha)


def kkostka(mu: Partition, alpha: Sequence[int], k: int) -> int:
    """The k-Kostka number: number of k-tableaux of shape c(mu), weight alpha."""
    for p in (tuple(mu), tuple(alpha)):
        if p and max(p) > k:
            raise NotKBoundedError(f"{p} is not {k}-bounded")
    if sum(mu) != sum(alpha):
        raise DegreeMismatchError(f"|{tuple(mu)}| != |{tuple(alpha)}|")
    return count_ktableaux_of_core(c_map(tuple(mu), k), alpha)


# ---------------------------------------------------------------------------
# K-matrix and its on-disk cache


class KostkaCache:
    """JSON table ``(k, degree) -> K-matrix`` with a checksum per entry.

    Entries failing their checksum, or written under another format version,
    are ignored (treated as a miss).  Writes go through an atomic rename.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)

    @staticmethod
    def _key(k: int, n: int) -> str:
        return f"k={k};n={n}"

    @staticmethod
    def _digest(payload: dict) -> str:
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def _load(self) -> dict:
        try:
            data = json.loads(self.path.read_text())
        except (OSError, ValueError):
            return {}
        if not isinstance(data, dict) or data.get("format_version") != CACHE_FORMAT_VERSION:
            return {}
        entries = data.get("entries")
        return entries if isinstance(entries, dict) else {}

    def get(self, k: int, n: int) -> dict[tuple[Partition, Partition], int] | None:
        entry = self._load().get(self._key(k, n))
        if not isinstance(entry, dict):
            return None
        payload = entry.get("payload")
        if not isinstance(payload, dict) or entry.get("sha256") != self._digest(payload):
            return None
        try:
            return {
                (tuple(row["shape"]), tuple(row["weight"])): int(row["value"])
                for row in payload["rows"]
            }
        except (KeyError, TypeError, ValueError):
            return None

    def put(self, k: int, n: int, matrix: dict[tuple[Partition, Partition], int]) -> None:
        entries = self._load()
        payload = {
            "k": k,
            "degree": n,
            "rows": [
                {"shape": list(mu), "weight": list(lam), "value": v}
                for (mu, lam), v in sorted(matrix.items())
            ],
        }
        entries[self._key(k, n)] = {"payload": payload, "sha256": self._digest(payload)}
        doc = {"format_version": CACHE_FORMAT_VERSION, "entries": entries}
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=self.path.name, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh, sort_keys=True)
        os.replace(tmp, self.path)


def kkostka_matrix(k: int, n: int, cache: KostkaCache | None = None) -> dict[tuple[Partition, Partition], int]:
    """``(mu, lam) -> K^(k)_{mu lam}`` over all k-bounded partitions of ``n``."""
    if cache is not None:
        hit = cache.get(k, n)
        if hit is not None:
            return hit
    parts = k_bounded_partitions(n, k)
    matrix = {}
    for mu in parts:
        for lam in parts:
            # zero below the diagonal in dominance; skip the enumeration there
            matrix[(mu, lam)] = kkostka(mu, lam, k) if dominates(mu, lam) else 0
    if cache is not None:
        cache.put(k, n, matrix)
    return matrix


def full_kkostka_matrix(k: int, n: int) -> dict[tuple[Partition, Partition], int]:
    """Like :func:`kkostka_matrix` but enumerating every entry, for checks."""
    parts = k_bounded_partitions(n, k)
    return {(mu, lam): kkostka(mu, lam, k) for mu in parts for lam in parts}


@lru_cache(maxsize=None)
def _oracle_table(k: int, n: int) -> dict[Partition, dict[Partition, int]]:
    return _solve(k, n, kkostka_matrix(k, n))


def _solve(k: int, n: int, matrix) -> dict[Partition, dict[Partition, int]]:
    return solve_unitriangular(k_bounded_partitions(n, k), lambda mu, lam: matrix[(mu, lam)])


def oracle_kschur_h(lam: Partition, k: int, cache: KostkaCache | None = None) -> LinComb:
    """``s^(k)_lam`` in the h basis, by back-substitution in the k-Kostka system."""
    lam = tuple(lam)
    if lam and lam[0] > k:
        raise NotKBoundedError(f"{lam} is not {k}-bounded")
    n = sum(lam)
    if cache is None:
        table = _oracle_table(k, n)
    else:
        table = _solve(k, n, kkostka_matrix(k, n, cache))
    return LinComb("h", table[lam])
