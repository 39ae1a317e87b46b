import itertools

import pytest
from hypothesis import given, strategies as st

from qschur.qcoord import xi
from qschur.weightcomb import (
    bar, derived_l, dominant, dot_action_s2, finite_type_predicate, is_restricted,
    little_block_n2, little_index, pr_count, recursion_check, residues, restricted,
    restricted_shifted, semisimple_predicate, simple_index_set,
)


def brute_x1lr(n, r, l):
    """lambda in Lambda(n, r) with lambda - l nu restricted for some nu >= 0."""
    out = set()
    for lam in itertools.product(range(r + 1), repeat=n):
        if sum(lam) != r:
            continue
        for nu in itertools.product(range(r // l + 1), repeat=n):
            mu = [a - l * b for a, b in zip(lam, nu)]
            ext = mu + [0]
            if min(mu) >= 0 and all(0 <= ext[i] - ext[i + 1] < l for i in range(n)):
                out.add(lam)
                break
    return sorted(out)


def brute_pr_count(n, r, l, m):
    seen = set()
    for A in itertools.product(range(r + 1), repeat=n * n):
        if sum(A) != r:
            continue
        if any(A[i * n + j] >= l for i in range(n) for j in range(n) if i != j):
            continue
        seen.add(tuple(a % m if k % (n + 1) == 0 else a for k, a in enumerate(A)))
    return len(seen)


@pytest.mark.parametrize("n,r,l", [(2, 5, 3), (2, 6, 2), (3, 4, 3), (3, 5, 2)])
def test_restricted_shifted_matches_brute_force(n, r, l):
    assert restricted_shifted(n, l, r) == brute_x1lr(n, r, l)


@pytest.mark.parametrize("n,r", [(2, 3), (2, 5), (3, 3)])
@pytest.mark.parametrize("lp", [3, 4, 5, 6])
def test_pr_count_matches_brute_force(n, r, lp):
    l = derived_l(lp)
    assert pr_count(n, r, l, lp) == brute_pr_count(n, r, l, lp)
    assert pr_count(n, r, l, l) == brute_pr_count(n, r, l, l)


def test_pinned_counts():
    assert pr_count(2, 3, 3, 3) == 17
    assert pr_count(2, 2, 2, 4) == 8
    assert pr_count(2, 2, 2, 2) == 7


def test_little_index_size_equals_pr_count():
    for n, r, lp in [(2, 4, 3), (2, 3, 4), (3, 3, 5)]:
        l = derived_l(lp)
        assert len(little_index(n, r, l, lp)) == pr_count(n, r, l, lp)


def test_restricted_weights():
    assert restricted(2, 3, 4) == [(2, 2), (3, 1)]
    assert restricted(2, 2) == [(0, 0), (1, 0), (1, 1), (2, 1)]
    assert is_restricted((2, 1, 0), 2)
    assert not is_restricted((3, 1), 2)


def test_simple_index_set_example():
    assert simple_index_set(2, 3, 3, 3) == [(0, 0), (2, 1)]
    assert simple_index_set(3, 3, 3, 3) == [(0, 0, 0), (1, 1, 1), (2, 1, 0)]
    assert simple_index_set(2, -1, 3, 3) == []


@pytest.mark.parametrize("lp", [3, 4])
def test_index_sets_cover_all_residues(lp):
    l = derived_l(lp)
    n = 2
    union = set()
    for r in range(n * (lp + l) + 1):
        union |= set(simple_index_set(n, r, l, lp))
    assert union == set(itertools.product(range(lp), repeat=n))


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("l", [3, 5])
def test_odd_index_set_is_dominant_residues(n, l):
    for r in range(7):
        assert simple_index_set(n, r, l, l) == sorted({bar(m, l) for m in dominant(n, r)})


@pytest.mark.parametrize("n,r", [(2, 4), (2, 6), (3, 5)])
def test_recursion(n, r):
    assert recursion_check(n, r, 3)


def test_dot_action_and_blocks():
    assert dot_action_s2((3, 0)) == (-1, 4)
    assert little_block_n2((3, 0), 3, 3) == [(0, 0), (2, 1)]
    assert little_block_n2((2, 2), 4, 3) == [(1, 0), (2, 2)]
    with pytest.raises(ValueError):
        little_block_n2((2, 2), 4, 4)


def test_block_sets_partition_index_set():
    for r in range(7):
        labels = simple_index_set(2, r, 3, 3)
        blocks = {tuple(little_block_n2(lam, r, 3)) for lam in dominant(2, r)}
        covered = sorted({mu for b in blocks for mu in b})
        assert covered == labels


def test_predicates():
    assert semisimple_predicate(2, 5, 2)
    assert not semisimple_predicate(2, 4, 2)
    assert semisimple_predicate(3, 2, 3)
    assert not semisimple_predicate(3, 3, 3)
    assert finite_type_predicate(2, 2, 3)
    with pytest.raises(ValueError):
        finite_type_predicate(2, 2, 2, lprime=4)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=4), st.integers(2, 9))
def test_bar_is_idempotent(lam, m):
    b = bar(lam, m)
    assert bar(b, m) == b
    assert all(0 <= x < m for x in b)


def test_residue_counts():
    assert residues(3, 4, 3) == sorted({bar(m, 3) for m in itertools.product(range(5), repeat=3)
                                        if sum(m) == 4})
    assert len(residues(3, 4, 3)) == 9
    assert residues(2, -1, 3) == []
