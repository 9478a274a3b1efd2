"""The sign-reversing involution behind the k-Bernstein recursion.

For a k-bounded ``lam`` with ``gamma = c(lam)`` and ``hat`` its core minus the
bottom row, a pair ``(delta, A)`` consists of a core ``delta`` obtained from
``hat`` by removing a vertical (k, ell)-strip and a residue set ``A`` with
``|A| = lam_1 + ell`` such that ``sigma_A(delta)`` has ``|lam|`` k-bounded
cells.  Its OX diagram marks ``hat / delta`` with O and
``sigma_A(delta) / delta`` with X.

:func:`phi` pairs up every pair that has a changeable cell, flipping the
parity of ``|A|`` while keeping ``sigma_A(delta)`` fixed; the lemma-level
claims it relies on are checked as hard assertions.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .cores import Core, c_map, cells, p_map, residue, sigma_A, transposition
from .kbernstein import enumerate_vertical_strips, main_subpartition
from .kpieri import pieri_subsets_of_core
from .partitions import Cell, Partition, conjugate, in_shape


class NoChangeableCellError(ValueError):
    pass


class InvolutionLemmaError(AssertionError):
    pass


@dataclass(frozen=True)
class OXPair:
    delta: Core
    A: frozenset[int]
    lam: Partition

    @cached_property
    def k(self) -> int:
        return self.delta.k

    @cached_property
    def gamma(self) -> Core:
        return c_map(self.lam, self.k)

    @cached_property
    def hat(self) -> Core:
        return self.gamma.hat()

    @cached_property
    def main(self):
        return main_subpartition(self.gamma)

    @property
    def m(self) -> int:
        return self.main.length

    @property
    def ell(self) -> int:
        return len(self.A) - self.lam[0]

    @cached_property
    def top(self) -> Core:
        """``sigma_A(delta)``."""
        return sigma_A(self.delta, self.A)

    @cached_property
    def o_cells(self) -> frozenset[Cell]:
        inner = set(cells(self.delta.shape))
        return frozenset(c for c in cells(self.hat.shape) if c not in inner)

    @cached_property
    def x_cells(self) -> frozenset[Cell]:
        inner = set(cells(self.delta.shape))
        return frozenset(c for c in cells(self.top.shape) if c not in inner)

    @property
    def sign(self) -> int:
        return -1 if self.ell % 2 else 1

    def result(self) -> Partition:
        return p_map(self.top)

    def residue(self, cell: Cell) -> int:
        return residue(cell[0], cell[1], self.k)

    def render(self) -> str:
        return render_ox(self)

    def __str__(self) -> str:
        return f"({self.delta.shape}, {{{','.join(map(str, sorted(self.A)))}}})"


def render_ox(pair: OXPair) -> str:
    """Plain-text OX diagram, top row first.

    ``O`` removed cell, ``X`` added cell, ``⊠`` both, ``·`` untouched
    cell of ``hat``; changeable cells are bracketed.
    """
    region = set(cells(pair.hat.shape)) | set(pair.x_cells)
    if not region:
        return "(empty)"
    change = set(changeable_cells(pair))
    height = max(i for i, _ in region)
    width = max(j for _, j in region)
    lines = []
    for i in range(height, 0, -1):
        row = []
        for j in range(1, width + 1):
            c = (i, j)
            if c not in region:
                ch = " "
            elif c in pair.o_cells and c in pair.x_cells:
                ch = "⊠"
            elif c in pair.o_cells:
                ch = "O"
            elif c in pair.x_cells:
                ch = "X"
            else:
                ch = "·"
            row.append(f"[{ch}]" if c in change else f" {ch} ")
        lines.append("".join(row).rstrip())
    return "\n".join(lines)


@lru_cache(maxsize=None)
def _d_pairs(lam: Partition, k: int) -> tuple[OXPair, ...]:
    gamma = c_map(lam, k)
    hat = gamma.hat()
    m = main_subpartition(gamma).length
    out = []
    for ell in range(0, k - lam[0] + 1):
        for delta in sorted(enumerate_vertical_strips(hat, m, ell), key=lambda c: c.shape, reverse=True):
            for A, _ in pieri_subsets_of_core(delta, lam[0] + ell):
                out.append(OXPair(delta, A, lam))
    return tuple(out)


def d_pairs(lam: Partition, k: int) -> list[OXPair]:
    """Every pair ``(delta, A)`` in the family attached to ``lam``."""
    lam = tuple(lam)
    if not lam:
        raise ValueError("the pair family needs a nonempty partition")
    return list(_d_pairs(lam, k))


def changeable_cells(pair: OXPair) -> list[Cell]:
    """Cells of ``sigma_A(delta)`` at the top of their column that lie in ``hat``."""
    heights = conjugate(pair.top.shape)
    out = []
    for j, h in enumerate(heights, start=1):
        if h and in_shape(pair.hat.shape, (h, j)):
            out.append((h, j))
    return out


def _fail(pair: OXPair, msg: str):
    text = f"{msg}\npair {pair} for lam={pair.lam}, k={pair.k}\n{render_ox(pair)}"
    print(text, file=sys.stderr)
    raise InvolutionLemmaError(text)


def unique_nochangeable(lam: Partition, k: int) -> OXPair:
    """The only pair without a changeable cell, which is ``(hat, B)`` with
    ``sigma_B(hat) = gamma``."""
    lam = tuple(lam)
    fixed = [p for p in _d_pairs(lam, k) if not changeable_cells(p)]
    if len(fixed) != 1:
        raise InvolutionLemmaError(
            f"expected one pair without changeable cells for {lam}, k={k}, found {len(fixed)}"
        )
    pair = fixed[0]
    if pair.delta != pair.hat or len(pair.A) != lam[0] or pair.top != pair.gamma:
        _fail(pair, "the pair without changeable cells is not (hat, B)")
    start = pair.main.start_column
    right = {pair.residue(c) for c in pair.x_cells if c[1] >= start}
    if right != set(pair.A):
        _fail(pair, f"B={sorted(pair.A)} differs from residues of X cells from column {start}: {sorted(right)}")
    return pair


def _cyclic_interval(a: int, b: int, k: int) -> set[int]:
    n = k + 1
    return {(a + t) % n for t in range((b - a) % n + 1)}


def check_position_lemma(pair: OXPair) -> Cell:
    """No O cell right of the rightmost changeable cell, which lies in the
    main subpartition.  Returns that cell."""
    change = changeable_cells(pair)
    if not change:
        raise NoChangeableCellError(f"{pair} has no changeable cell")
    c = max(change, key=lambda cell: cell[1])
    if any(j > c[1] for _, j in pair.o_cells):
        _fail(pair, f"O cell to the right of the rightmost changeable cell {c}")
    if c[1] < pair.main.start_column:
        _fail(pair, f"rightmost changeable cell {c} is outside the main subpartition")
    return c


def phi(pair: OXPair) -> OXPair:
    """Apply the involution to a pair that has a changeable cell."""
    c = check_position_lemma(pair)
    k = pair.k
    i, col = c
    r = pair.residue(c)
    A = set(pair.A)
    if c in pair.o_cells and c in pair.x_cells:
        # case I: strip the OX ribbon in row i
        ox_row = [cell for cell in pair.o_cells & pair.x_cells if cell[0] == i]
        if {cell for cell in pair.o_cells if cell[0] == i} != set(ox_row):
            _fail(pair, f"row {i} holds O cells that are not OX cells")
        left = min(ox_row, key=lambda cell: cell[1])
        r1 = pair.residue(left)
        if (r1 - 1) % (k + 1) in A:
            _fail(pair, f"case I: residue r'-1={(r1 - 1) % (k + 1)} lies in A")
        if r not in A:
            _fail(pair, f"case I: residue {r} of an OX cell is not in A")
        new_A = A - {r}
    else:
        # case II: turn cells b..c of row i into OX cells
        if r in A:
            _fail(pair, f"case II: residue r={r} lies in A")
        allowed = A | {r}
        candidates = [
            cell for cell in changeable_cells(pair)
            if cell[0] == i and cell[1] <= col
            and _cyclic_interval(pair.residue(cell), r, k) <= allowed
        ]
        b = min(candidates, key=lambda cell: cell[1])
        r1 = pair.residue(b)
        if (r1 - 1) % (k + 1) in A:
            _fail(pair, f"case II: residue r'-1={(r1 - 1) % (k + 1)} lies in A")
        new_A = A | {r}
    new_delta = transposition(pair.delta, r1, r + 1)
    return OXPair(new_delta, frozenset(new_A), pair.lam)


def check_phi(pair: OXPair, family: set[OXPair] | None = None) -> OXPair:
    """Apply ``phi`` and assert every property the involution must have."""
    image = phi(pair)
    if family is None:
        family = set(_d_pairs(pair.lam, pair.k))
    if image not in family:
        _fail(pair, f"phi image {image} is not in the pair family")
    if not changeable_cells(image):
        _fail(pair, f"phi image {image} has no changeable cell")
    if image == pair:
        _fail(pair, "phi has a fixed point")
    if abs(len(image.A) - len(pair.A)) != 1:
        _fail(pair, f"phi does not change |A| by one: {len(pair.A)} -> {len(image.A)}")
    if image.top != pair.top:
        _fail(pair, f"phi changes sigma_A(delta): {pair.top.shape} -> {image.top.shape}")
    back = phi(image)
    if back != pair:
        _fail(pair, f"phi(phi(p)) = {back} != p (image {image})")
    return image
