import pytest
from hypothesis import given, strategies as st

from hookcells import (
    HilbertFunction,
    Partition,
    count_hooks_diff,
    diagonal_lengths,
    enumerate_with_diagonal_lengths,
    hilbert_functions_upto,
    hooks,
    partitions_of,
    t_invariants,
)
from hookcells.errors import InvalidT

partitions = st.lists(st.integers(1, 9), max_size=8).map(
    lambda xs: Partition(sorted(xs, reverse=True))
)


def test_diagonal_lengths_examples():
    assert diagonal_lengths(Partition([5, 2, 1, 1])).t == (1, 2, 3, 2, 1)
    assert diagonal_lengths(Partition([])).t == ()
    assert diagonal_lengths(Partition([2, 2])).t == (1, 2, 1)


def test_diagonal_profile_raw_flag():
    assert diagonal_lengths(Partition([3, 1]), raw=True) == (1, 2, 1)


def test_dual_examples():
    assert Partition([3, 1]).dual() == Partition([2, 1, 1])
    assert Partition([2, 2]).dual() == Partition([2, 2])
    assert Partition([5, 2, 1, 1]).dual() == Partition([4, 2, 1, 1, 1])


def test_hooks_examples():
    diffs = sorted(h.difference for h in hooks(Partition([2, 2])))
    assert diffs == [-1, 0, 0, 1]
    (h,) = hooks(Partition([1]))
    assert (h.arm, h.leg, h.difference) == (1, 1, 0)
    p31 = hooks(Partition([3, 1]))
    assert sorted(h.difference for h in p31) == [0, 0, 1, 1]
    ones = [h for h in p31 if h.difference == 1]
    assert all(h.hand == (0, 2) and h.hand_degree == 2 for h in ones)


def test_count_hooks_diff_examples():
    assert count_hooks_diff(Partition([2, 2]), 1) == 1
    assert count_hooks_diff(Partition([1]), 1) == 0
    assert count_hooks_diff(Partition([5, 2, 1, 1]), 1) == 2


def test_enumerate_examples():
    assert [p.parts for p in enumerate_with_diagonal_lengths([1, 2, 1])] == [
        (3, 1),
        (2, 2),
        (2, 1, 1),
    ]
    assert [p.parts for p in enumerate_with_diagonal_lengths([1])] == [(1,)]
    assert len(enumerate_with_diagonal_lengths([1, 2, 3, 2, 1])) == 9


def test_enumerate_matches_naive_filter():
    for T in hilbert_functions_upto(9):
        naive = sorted(
            (p for p in partitions_of(T.n) if p.diagonal_profile() == T.t),
            key=lambda p: p.parts,
            reverse=True,
        )
        assert list(enumerate_with_diagonal_lengths(T)) == naive


def test_t_invariants_examples():
    inv = t_invariants(HilbertFunction([1, 2, 3, 2, 1]))
    assert inv.dim_gt == 4
    assert inv.f_t == 2
    inv2 = t_invariants(HilbertFunction([1, 2, 3, 3, 3, 3, 1]))
    assert inv2.dim_bgrass == 24
    assert inv2.dim_gt == 5 == 2 * inv2.mu - 1
    # the whole ideal variety over the staircase is a single point
    stair = t_invariants(HilbertFunction([1, 2, 3]))
    assert stair.dim_zt == 0 and stair.dim_gt == 0


def test_invalid_t_rejected():
    for bad in ([2], [1, 1, 2], [1, 2, 0, 1], [1, 3], [1, 2, 2, 3]):
        with pytest.raises(InvalidT):
            HilbertFunction(bad)


def test_mu_j_edge_cases():
    T = HilbertFunction([1])
    assert (T.mu, T.j, T.n) == (1, 0, 1)
    stair = HilbertFunction([1, 2, 3])
    assert (stair.mu, stair.j) == (3, 2)
    empty = HilbertFunction([])
    assert (empty.mu, empty.j, empty.n) == (0, -1, 0)


@given(partitions)
def test_dual_is_involution(p):
    assert p.dual().dual() == p


@given(partitions)
def test_diagonals_invariant_under_dual(p):
    assert p.dual().diagonal_profile() == p.diagonal_profile()


@given(partitions)
def test_hook_count_equals_weight(p):
    assert len(hooks(p)) == p.weight


@given(partitions)
def test_hook_differences_mirror_under_dual(p):
    from collections import Counter

    c1 = Counter(h.difference for h in hooks(p))
    c2 = Counter(-h.difference for h in hooks(p.dual()))
    assert c1 == c2


@given(partitions)
def test_raw_diagonals_always_admissible(p):
    HilbertFunction(p.diagonal_profile())  # must not raise


@given(partitions)
def test_hook_arm_leg_geometry(p):
    d = p.dual()
    for h in hooks(p):
        assert h.arm == p[h.row] - h.col >= 1
        assert h.leg == d[h.col] - h.row >= 1
        assert h.hand_degree == h.row + h.col + h.arm - 1


def test_balanced_hook_counts_per_degree():
    # number of balanced degree-i hooks is a binomial in the next diagonal drop
    from math import comb

    for T in hilbert_functions_upto(12):
        for p in enumerate_with_diagonal_lengths(T):
            for i in range(T.mu - 1, T.j + 2):
                drop = T.value(i) - T.value(i + 1)
                assert count_hooks_diff(p, 0, i) == comb(drop + 1, 2)


def test_hook_difference_classes_partition_all_hooks():
    for T in hilbert_functions_upto(10):
        for p in enumerate_with_diagonal_lengths(T):
            total = sum(
                count_hooks_diff(p, a)
                for a in range(-p.weight, p.weight + 1)
            )
            assert total == T.n == p.weight


def test_hilbert_functions_upto_count():
    ts = hilbert_functions_upto(12)
    assert len(ts) == 69
    assert all(T.n <= 12 for T in ts)
    assert HilbertFunction([1, 2, 3, 2, 1]) in ts


def test_partition_serialization():
    p = Partition([5, 2, 1, 1])
    assert Partition.from_json(p.to_json()) == p
    assert p.to_json() == [5, 2, 1, 1]
