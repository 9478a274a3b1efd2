"""(k+1)-cores and the affine symmetric group acting on them.

A :class:`Core` is a partition with no hook of length ``k + 1``.  The cell
``(i, j)`` has residue ``(j - i) mod (k + 1)``.  The generator ``sigma_i``
adds every addable corner of residue ``i`` or removes every removable corner
of residue ``i``; when neither kind exists the action is undefined for
minimal coset words and :class:`UndefinedActionError` is raised.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .partitions import (
    Cell,
    Partition,
    PartitionError,
    addable_corners,
    as_partition,
    cells,
    conjugate,
    contains,
    extremal_cells,
    hook_lengths,
    part,
    removable_corners,
)


class CoreError(ValueError):
    pass


class NotKBoundedError(CoreError):
    pass


class UndefinedActionError(CoreError):
    """``sigma_i`` has neither an addable nor a removable corner of residue i."""


class ImproperSubsetError(CoreError):
    pass


class MismatchedKError(CoreError):
    pass


class NotACoverError(CoreError):
    pass


class RibbonStructureError(AssertionError):
    pass


def is_core(shape: Partition, k: int) -> bool:
    return all(h != k + 1 for h in hook_lengths(shape).values())


@dataclass(frozen=True)
class Core:
    shape: Partition
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise CoreError(f"k must be positive, got {self.k}")
        if __debug__:
            try:
                as_partition(self.shape)
            except PartitionError as exc:
                raise CoreError(str(exc)) from None
            if not is_core(self.shape, self.k):
                raise CoreError(f"{self.shape} has a hook of length {self.k + 1}")

    def __len__(self) -> int:
        return len(self.shape)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def row(self, i: int) -> int:
        return part(self.shape, i)

    def residue(self, cell: Cell) -> int:
        return residue(cell[0], cell[1], self.k)

    def hat(self) -> Core:
        """The core with its first (bottom) row removed."""
        return Core(self.shape[1:], self.k)

    def bounded_cells(self) -> list[Cell]:
        """Cells whose hook length is at most ``k``."""
        return [c for c, h in hook_lengths(self.shape).items() if h <= self.k]

    def __str__(self) -> str:
        return f"{self.shape}@k={self.k}"


def residue(i: int, j: int, k: int) -> int:
    return (j - i) % (k + 1)


def empty_core(k: int) -> Core:
    return Core((), k)


def p_map(core: Core) -> Partition:
    """Count the k-bounded cells in each row."""
    hooks = hook_lengths(core.shape)
    rows = [0] * len(core.shape)
    for (i, _), h in hooks.items():
        if h <= core.k:
            rows[i - 1] += 1
    return as_partition(rows)


def bounded_size(core: Core) -> int:
    return sum(1 for h in hook_lengths(core.shape).values() if h <= core.k)


@lru_cache(maxsize=None)
def _c_map(lam: Partition, k: int) -> Partition:
    # Attach rows from the top down; each new bottom row is shifted right until
    # its leftmost cell has hook at most k.
    shape: Partition = ()
    for length in reversed(lam):
        heights = conjugate(shape)
        shift = 0
        while shift < len(heights) and length + heights[shift] > k:
            shift += 1
        first = shift + length
        if shape and first < shape[0]:
            raise AssertionError(f"row attachment broke shape for {lam}, k={k}")
        shape = (first,) + shape
    return shape


def c_map(lam: Partition, k: int) -> Core:
    """The core whose k-bounded cells have row counts ``lam``."""
    if lam and lam[0] > k:
        raise NotKBoundedError(f"{lam} is not {k}-bounded")
    return Core(_c_map(tuple(lam), k), k)


def _corners_of_residue(core: Core, i: int) -> tuple[list[Cell], list[Cell]]:
    k = core.k
    rem = [c for c in removable_corners(core.shape) if residue(*c, k) == i]
    add = [c for c in addable_corners(core.shape) if residue(*c, k) == i]
    return rem, add


def sigma(core: Core, i: int, strict: bool = True) -> Core:
    """Apply the generator ``sigma_i`` (indices taken mod k + 1).

    With ``strict=False`` a generator with no corner of residue ``i`` acts as
    the identity, which is the full affine symmetric group action.
    """
    i %= core.k + 1
    rem, add = _corners_of_residue(core, i)
    rows = list(core.shape)
    if rem:
        for r, _ in rem:
            rows[r - 1] -= 1
    elif add:
        for r, _ in add:
            if r > len(rows):
                rows.append(1)
            else:
                rows[r - 1] += 1
    elif strict:
        raise UndefinedActionError(f"sigma_{i} undefined on {core}")
    else:
        return core
    return Core(as_partition(rows), core.k)


def apply_word(core: Core, word: Iterable[int], strict: bool = True) -> Core:
    """Apply generators in the order given (first element acts first)."""
    for i in word:
        core = sigma(core, i, strict=strict)
    return core


def check_residue_set(A: Iterable[int], k: int) -> frozenset[int]:
    A = frozenset(A)
    if any(not 0 <= a <= k for a in A):
        raise ImproperSubsetError(f"residues out of range for k={k}: {sorted(A)}")
    if len(A) > k:
        raise ImproperSubsetError(f"{sorted(A)} is not a proper subset of Z_{k + 1}")
    return A


def cyclic_components(A: Iterable[int], k: int) -> list[tuple[int, int]]:
    """Maximal cyclic runs ``[a, b]`` of a proper subset of Z_{k+1}."""
    A = check_residue_set(A, k)
    if not A:
        return []
    n = k + 1
    # start scanning just after a gap so no run is split
    start = next(x for x in range(n) if x not in A)
    out = []
    run_start = None
    for step in range(1, n + 1):
        x = (start + step) % n
        if x in A:
            if run_start is None:
                run_start = x
            prev = x
        elif run_start is not None:
            out.append((run_start, prev))
            run_start = None
    if run_start is not None:
        out.append((run_start, prev))
    return sorted(out)


def component_word(a: int, b: int, k: int) -> list[int]:
    """Generators for the component ``[a, b]`` in application order a, a+1, ..., b."""
    n = k + 1
    length = (b - a) % n + 1
    return [(a + t) % n for t in range(length)]


def sigma_A(core: Core, A: Iterable[int], order: Iterable[int] | None = None) -> Core:
    """Apply ``sigma_A``: for each component ``[a, b]`` the product
    ``sigma_b ... sigma_a`` (so ``sigma_a`` acts first).

    ``order`` optionally permutes the components (indices into the sorted
    component list); the result does not depend on it.
    """
    comps = cyclic_components(A, core.k)
    if order is not None:
        comps = [comps[t] for t in order]
    for a, b in comps:
        core = apply_word(core, component_word(a, b, core.k))
    return core


def transposition_word(r: int, s: int, k: int, form: str = "first") -> list[int]:
    """Palindromic generator word of ``t_{r,s}`` in application order.

    When ``s <= r`` the pair is read cyclically: ``s`` is lifted by multiples
    of ``k + 1`` until it exceeds ``r``.
    """
    n = k + 1
    if s <= r:
        s += n * ((r - s) // n + 1)
    up = [t % n for t in range(r, s)]  # r, r+1, ..., s-1
    if form == "first":
        return up + up[-2::-1]
    if form == "second":
        if s - r >= n:
            raise ValueError("second word form needs s - r < k + 1")
        down = up[::-1]  # s-1, ..., r
        return down + down[-2::-1]
    raise ValueError(f"unknown word form {form!r}")


def transposition(
    core: Core, r: int, s: int, form: str = "first", strict: bool = True
) -> Core:
    return apply_word(core, transposition_word(r, s, core.k, form), strict=strict)


def core_property_violations(core: Core) -> list[str]:
    """Check the basic facts about extremal cells and corners of a core.

    For extremal cells ``c, c'`` of equal residue with ``c'`` weakly north-west
    of ``c``: if ``c`` ends its row so does ``c'``, and if ``c`` has a cell above
    it so does ``c'``.  Symmetrically (``c'`` weakly south-east of ``c``) for
    "top of its column" and "has a cell to its right".  No residue labels both
    a removable and an addable corner.  Returns a description of each failure.
    """
    shape, k = core.shape, core.k
    inside = set(cells(shape))
    ext = extremal_cells(shape)
    out = []
    for c in ext:
        for c2 in ext:
            if c2 == c or residue(*c, k) != residue(*c2, k):
                continue
            if c2[0] >= c[0] and c2[1] <= c[1]:  # c2 weakly north-west of c
                if (c[0], c[1] + 1) not in inside and (c2[0], c2[1] + 1) in inside:
                    out.append(f"{c} ends its row but {c2} does not")
                if (c[0] + 1, c[1]) in inside and (c2[0] + 1, c2[1]) not in inside:
                    out.append(f"{c} has a cell above but {c2} does not")
            if c2[0] <= c[0] and c2[1] >= c[1]:  # c2 weakly south-east of c
                if (c[0] + 1, c[1]) not in inside and (c2[0] + 1, c2[1]) in inside:
                    out.append(f"{c} tops its column but {c2} does not")
                if (c[0], c[1] + 1) in inside and (c2[0], c2[1] + 1) not in inside:
                    out.append(f"{c} has a cell to its right but {c2} does not")
    for i in range(k + 1):
        rem, add = _corners_of_residue(core, i)
        if rem and add:
            out.append(f"residue {i} has removable {rem} and addable {add}")
    return out


def is_strong_cover(delta: Core, gamma: Core) -> bool:
    """``delta`` is covered by ``gamma`` in the strong (Bruhat) order."""
    if delta.k != gamma.k:
        raise MismatchedKError(f"k differs: {delta.k} vs {gamma.k}")
    if delta.shape == gamma.shape or not contains(gamma.shape, delta.shape):
        return False
    return bounded_size(gamma) == bounded_size(delta) + 1


@dataclass(frozen=True)
class Ribbon:
    cells: tuple[Cell, ...]
    head: Cell  # south-east end
    r: int  # residue of the tail
    s: int  # r + number of cells

    @property
    def lowest_row(self) -> int:
        return min(i for i, _ in self.cells)

    @property
    def is_horizontal(self) -> bool:
        return len({i for i, _ in self.cells}) == 1


def _components(cell_set: set[Cell]) -> list[list[Cell]]:
    seen: set[Cell] = set()
    out = []
    for start in sorted(cell_set):
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            i, j = stack.pop()
            comp.append((i, j))
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in cell_set and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        out.append(sorted(comp))
    return out


def ribbon_components(delta: Core, gamma: Core) -> list[Ribbon]:
    """Decompose ``gamma / delta`` for a strong cover into its ribbons.

    Checks that every component is a ribbon, that all are translates of one
    another with at most ``k`` cells, and that their heads lie on consecutive
    diagonals of one residue.  Ribbons are returned bottom to top.
    """
    if not is_strong_cover(delta, gamma):
        raise NotACoverError(f"{delta} is not covered by {gamma}")
    k = gamma.k
    skew = {c for c in cells(gamma.shape) if c not in set(cells(delta.shape))}
    ribbons = []
    for comp in _components(skew):
        comp_set = set(comp)
        if any(
            {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= comp_set for i, j in comp
        ):
            raise RibbonStructureError(f"component {comp} contains a 2x2 block")
        contents = sorted(j - i for i, j in comp)
        if contents != list(range(contents[0], contents[0] + len(comp))):
            raise RibbonStructureError(f"component {comp} is not a ribbon")
        head = max(comp, key=lambda c: c[1] - c[0])
        tail = min(comp, key=lambda c: c[1] - c[0])
        r = residue(*tail, k)
        ribbons.append(Ribbon(tuple(comp), head, r, r + len(comp)))
    ribbons.sort(key=lambda rb: rb.head[1] - rb.head[0])

    first = ribbons[0]
    shape0 = {(i - first.head[0], j - first.head[1]) for i, j in first.cells}
    for rb in ribbons:
        shape = {(i - rb.head[0], j - rb.head[1]) for i, j in rb.cells}
        if shape != shape0:
            raise RibbonStructureError("ribbons are not translates of each other")
    if len(first.cells) > k:
        raise RibbonStructureError(f"ribbon of size {len(first.cells)} exceeds k={k}")
    diags = [rb.head[1] - rb.head[0] for rb in ribbons]
    if any(b - a != k + 1 for a, b in zip(diags, diags[1:])):
        raise RibbonStructureError(f"heads not on consecutive diagonals: {diags}")
    ribbons.sort(key=lambda rb: (rb.lowest_row, rb.head[1]))
    return ribbons


@lru_cache(maxsize=None)
def strong_covers_below(core: Core) -> tuple[tuple[Core, tuple[int, int]], ...]:
    """All ``delta`` with ``delta`` strongly covered by ``core``.

    Candidates are ``t_{r,s}(core)`` over all residues ``r`` and lengths
    ``1 <= s - r <= k``; words hitting an undefined generator contribute
    nothing.  Each result is returned with one ``(r, s)`` realizing it.
    """
    k = core.k
    found: dict[Core, tuple[int, int]] = {}
    target = bounded_size(core) - 1
    for r in range(k + 1):
        for length in range(1, k + 1):
            try:
                delta = transposition(core, r, r + length)
            except UndefinedActionError:
                continue
            if delta in found or delta.shape == core.shape:
                continue
            if contains(core.shape, delta.shape) and bounded_size(delta) == target:
                found[delta] = (r, r + length)
    return tuple(sorted(found.items(), key=lambda kv: kv[0].shape, reverse=True))


def all_cores(k: int, max_bounded: int) -> list[Core]:
    """Every core with at most ``max_bounded`` k-bounded cells."""
    from .partitions import k_bounded_partitions

    return [
        c_map(lam, k)
        for n in range(max_bounded + 1)
        for lam in k_bounded_partitions(n, k)
    ]


def residue_subsets(k: int, size: int) -> Iterable[frozenset[int]]:
    return (frozenset(c) for c in combinations(range(k + 1), size))
