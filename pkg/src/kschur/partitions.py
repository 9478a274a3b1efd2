"""Integer partitions as plain tuples.

Partitions are stored as weakly decreasing tuples of positive integers with
no trailing zeros; ``()`` is the empty partition.

Diagrams use the French convention: row 1 is the BOTTOM row and rows are
numbered upward, columns are numbered from 1 at the left.  A cell is the pair
``(row, column)``, so ``(i, j)`` belongs to ``lam`` iff ``j <= lam[i - 1]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Cell = tuple[int, int]


class PartitionError(ValueError):
    pass


class CellOutOfShapeError(PartitionError):
    pass


def is_partition(seq: Sequence[int]) -> bool:
    if any(p < 1 for p in seq):
        return False
    return all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


def as_partition(seq: Iterable[int]) -> Partition:
    """Canonicalize ``seq``: drop trailing zeros and check monotonicity."""
    parts = tuple(int(p) for p in seq)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if not is_partition(parts):
        raise PartitionError(f"not a partition: {parts!r}")
    return parts


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text format; the empty string is ``()``."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise PartitionError(f"cannot parse partition {text!r}") from None
    if any(p < 1 for p in parts):
        raise PartitionError(f"parts must be positive: {text!r}")
    return as_partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def size(lam: Partition) -> int:
    return sum(lam)


def part(lam: Partition, i: int) -> int:
    """Length of row ``i`` (1-indexed); zero past the last row."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def cells(lam: Partition) -> Iterator[Cell]:
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            yield (i, j)


def in_shape(lam: Partition, cell: Cell) -> bool:
    i, j = cell
    return i >= 1 and j >= 1 and j <= part(lam, i)


def hook_length(lam: Partition, i: int, j: int) -> int:
    """Arm plus leg plus one for the cell ``(i, j)`` of ``lam``."""
    if not in_shape(lam, (i, j)):
        raise CellOutOfShapeError(f"cell {(i, j)} not in {lam}")
    col = sum(1 for p in lam if p >= j)
    return lam[i - 1] - j + col - i + 1


def hook_lengths(lam: Partition) -> dict[Cell, int]:
    conj = conjugate(lam)
    return {
        (i, j): lam[i - 1] - j + conj[j - 1] - i + 1 for (i, j) in cells(lam)
    }


def dominates(lam: Partition, mu: Partition) -> bool:
    """True iff ``lam`` is weakly above ``mu`` in dominance order."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += part(lam, i + 1)
        b += part(mu, i + 1)
        if a < b:
            return False
    return True


def contains(mu: Partition, lam: Partition) -> bool:
    """True iff ``lam`` is a subdiagram of ``mu``."""
    if len(lam) > len(mu):
        return False
    return all(lam[i] <= mu[i] for i in range(len(lam)))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        if not contains(self.outer, self.inner):
            raise PartitionError(f"{self.inner} is not contained in {self.outer}")

    @property
    def degree(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def cells(self) -> list[Cell]:
        return [
            (i, j)
            for i, row in enumerate(self.outer, start=1)
            for j in range(part(self.inner, i) + 1, row + 1)
        ]


def is_horizontal_strip(s: SkewShape) -> bool:
    # no two cells in one column <=> inner interlaces outer
    return all(part(s.inner, i) >= part(s.outer, i + 1) for i in range(1, len(s.outer) + 1))


def is_vertical_strip(s: SkewShape) -> bool:
    return all(s.outer[i] - part(s.inner, i + 1) <= 1 for i in range(len(s.outer)))


def removable_corners(lam: Partition) -> list[Cell]:
    return [
        (i, lam[i - 1])
        for i in range(1, len(lam) + 1)
        if lam[i - 1] > part(lam, i + 1)
    ]


def addable_corners(lam: Partition) -> list[Cell]:
    """Addable cells, including ``(1, lam_1 + 1)`` and ``(len + 1, 1)``."""
    out = []
    for i in range(1, len(lam) + 2):
        if i == 1 or part(lam, i) < part(lam, i - 1):
            out.append((i, part(lam, i) + 1))
    return out


def corners(lam: Partition) -> tuple[list[Cell], list[Cell]]:
    return removable_corners(lam), addable_corners(lam)


def extremal_cells(lam: Partition) -> list[Cell]:
    return [(i, j) for (i, j) in cells(lam) if not in_shape(lam, (i + 1, j + 1))]


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` with parts at most ``max_part``, lex-descending."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def k_bounded_partitions(n: int, k: int) -> tuple[Partition, ...]:
    return partitions_of(n, k)


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """Every partition contained in ``lam`` (including ``()`` and ``lam``)."""
    def rec(i: int, bound: int) -> Iterator[Partition]:
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
