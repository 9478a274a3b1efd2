import pytest
from hypothesis import given, settings, strategies as st

from kschur.cores import NotKBoundedError, UndefinedActionError, c_map, p_map, residue, sigma_A
from kschur.kpieri import multiply_h, pieri_strips, pieri_subsets
from kschur.partitions import k_bounded_partitions
from kschur.symspace import LinComb
from oracles import all_partitions, bounded_count_bf, cell_set, is_core_bf, row_counts_bf

EXPECTED_H4 = {
    (6, 3, 3, 2, 2, 1, 1),
    (5, 3, 3, 2, 2, 2, 1),
    (5, 4, 3, 2, 2, 2),
    (5, 4, 2, 2, 2, 2, 1),
    (4, 4, 3, 2, 2, 2, 1),
}


def ks(k, *terms):
    return LinComb("kschur", {t: 1 for t in terms}, k=k)


def test_subset_example():
    subsets = {A for A, _ in pieri_subsets((4, 3, 2, 2, 2, 1), 4, 6)}
    assert subsets == {
        frozenset(s) for s in ({6, 0, 1, 2}, {6, 0, 1, 3}, {6, 0, 3, 4}, {6, 1, 3, 4}, {0, 1, 3, 4})
    }
    assert {p_map(core) for _, core in pieri_subsets((4, 3, 2, 2, 2, 1), 4, 6)} == EXPECTED_H4


def test_empty_partition_grows_one_row():
    for k in range(1, 6):
        for ell in range(1, k + 1):
            ((A, core),) = pieri_subsets((), ell, k)
            assert A == frozenset(range(ell))
            assert core == c_map((ell,), k)


def test_singletons_by_hand():
    # only residues touching an addable corner of (1) can grow it
    k, lam = 3, (1,)
    gamma = c_map(lam, k)
    expect = set()
    for i in range(k + 1):
        try:
            grown = sigma_A(gamma, {i})
        except UndefinedActionError:
            continue
        if sum(p_map(grown)) == 2:
            expect.add(frozenset({i}))
    assert {A for A, _ in pieri_subsets(lam, 1, k)} == expect == {frozenset({1}), frozenset({3})}


def test_multiply_examples():
    assert multiply_h(4, (4, 3, 2, 2, 2, 1), 6) == ks(6, *EXPECTED_H4)
    assert pieri_strips((4, 3, 2, 2, 2, 1), 4, 6) == ks(6, *EXPECTED_H4)
    for k in range(1, 5):
        for ell in range(1, k + 1):
            assert multiply_h(ell, (), k) == ks(k, (ell,)) == pieri_strips((), ell, k)
    assert multiply_h(1, (1,), 1) == ks(1, (1, 1)) == pieri_strips((1,), 1, 1)


def test_multiply_h_is_linear():
    f = LinComb("kschur", {(2, 1): 2, (1, 1, 1): -1}, k=3)
    assert multiply_h(2, f) == multiply_h(2, (2, 1), 3).scale(2) - multiply_h(2, (1, 1, 1), 3)
    assert multiply_h(0, f) == f
    with pytest.raises(TypeError):
        multiply_h(1, (1,))
    with pytest.raises(ValueError):
        multiply_h(1, LinComb.unit("h", (1,)))


def test_argument_checks():
    with pytest.raises(ValueError):
        pieri_subsets((1,), 4, 3)
    with pytest.raises(ValueError):
        pieri_strips((1,), 0, 3)
    with pytest.raises(NotKBoundedError):
        pieri_subsets((4,), 1, 3)


def test_strip_form_by_brute_force_over_cores():
    # k=2, lam=(2,1), ell=2, straight from cell sets
    k, lam, ell = 2, (2, 1), 2
    inner = cell_set(c_map(lam, k).shape)
    expect = set()
    for n in range(0, 16):
        for shape in all_partitions(n):
            if not is_core_bf(shape, k) or bounded_count_bf(shape, k) != sum(lam) + ell:
                continue
            outer = cell_set(shape)
            if not inner <= outer:
                continue
            skew = outer - inner
            cols = [j for _, j in skew]
            if len(cols) == len(set(cols)) and len({residue(i, j, k) for i, j in skew}) == ell:
                expect.add(row_counts_bf(shape, k))
    assert pieri_strips(lam, ell, k) == ks(k, *expect)
    assert multiply_h(ell, lam, k) == ks(k, *expect)


def test_formulations_agree_exhaustively():
    for k in range(1, 6):
        for n in range(8):
            for lam in k_bounded_partitions(n, k):
                for ell in range(1, k + 1):
                    a = multiply_h(ell, lam, k)
                    assert a == pieri_strips(lam, ell, k)
                    assert all(c == 1 for _, c in a)
                    assert all(sum(mu) == n + ell for mu in a.support())


@st.composite
def pieri_input(draw):
    k = draw(st.integers(1, 6))
    n = draw(st.integers(0, 8))
    lam = draw(st.sampled_from(k_bounded_partitions(n, k)))
    return lam, draw(st.integers(1, k)), k


@settings(max_examples=60, deadline=None)
@given(pieri_input(), st.integers(1, 6))
def test_h_multiplication_commutes(data, ell2):
    lam, ell, k = data
    ell2 = min(ell2, k)
    one = multiply_h(ell2, multiply_h(ell, lam, k))
    two = multiply_h(ell, multiply_h(ell2, lam, k))
    assert one == two
