"""k-Schur functions at t = 1 through generalized Bernstein operators.

Partitions are plain tuples of positive ints, rows indexed from the bottom
(French convention), cells ``(row, column)`` 1-indexed.
"""
from .cores import Core, c_map, p_map, residue, sigma, sigma_A, transposition
from .involution import OXPair, changeable_cells, d_pairs, phi, unique_nochangeable
from .kbernstein import (
    B_k,
    e_perp_k,
    enumerate_vertical_strips,
    h_expansion,
    kschur_by_recursion,
    main_subpartition,
    strip_sequences,
)
from .kpieri import multiply_h, pieri_strips, pieri_subsets
from .ktableaux import enumerate_ktableaux, kkostka, oracle_kschur_h
from .partitions import Partition, parse_partition
from .symspace import LinComb

__all__ = [
    "B_k", "Core", "LinComb", "OXPair", "Partition", "c_map", "changeable_cells",
    "d_pairs", "e_perp_k", "enumerate_ktableaux", "enumerate_vertical_strips",
    "h_expansion", "kkostka", "kschur_by_recursion", "main_subpartition",
    "multiply_h", "oracle_kschur_h", "p_map", "parse_partition", "phi",
    "pieri_strips", "pieri_subsets", "residue", "sigma", "sigma_A",
    "strip_sequences", "transposition", "unique_nochangeable",
]
