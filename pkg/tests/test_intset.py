import pytest
from hypothesis import given
from hypothesis import strategies as st

from weakschur import IntSet

small_sets = st.lists(st.integers(min_value=1, max_value=500), max_size=80)


def test_basic_construction():
    s = IntSet([3, 1, 2, 3])
    assert s.elements == (1, 2, 3)
    assert len(s) == 3
    assert list(s) == [1, 2, 3]
    assert 2 in s
    assert 4 not in s
    assert s.min == 1
    assert s.max == 3


def test_empty():
    s = IntSet()
    assert len(s) == 0
    assert not s
    assert s.max is None
    assert list(s) == []
    assert 1 not in s


def test_rejects_non_positive():
    with pytest.raises(ValueError):
        IntSet([0, 1])
    with pytest.raises(ValueError):
        IntSet([-3])


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        IntSet([1.5])


def test_membership_is_type_tolerant():
    s = IntSet([1, 2])
    assert "x" not in s
    assert -1 not in s
    assert 10**9 not in s


def test_mask_matches_elements():
    s = IntSet([1, 5, 9])
    assert s.mask == (1 << 1) | (1 << 5) | (1 << 9)


def test_from_mask_round_trip():
    s = IntSet([2, 7, 300])
    assert IntSet.from_mask(s.mask) == s
    assert IntSet.from_mask(0) == IntSet()


def test_from_mask_rejects_bit_zero():
    with pytest.raises(ValueError):
        IntSet.from_mask(1)
    with pytest.raises(ValueError):
        IntSet.from_mask(-2)


def test_union_and_with_element():
    a = IntSet([1, 2])
    b = IntSet([2, 9])
    assert a.union(b) == IntSet([1, 2, 9])
    assert a.union([5]) == IntSet([1, 2, 5])
    assert a.with_element(4) == IntSet([1, 2, 4])
    assert a.with_element(2) is a
    with pytest.raises(ValueError):
        a.with_element(0)


def test_equality_and_hash():
    assert IntSet([1, 2]) == IntSet((2, 1))
    assert hash(IntSet([1, 2])) == hash(IntSet([1, 2]))
    assert IntSet([1]) != IntSet([2])
    assert IntSet([1]) != (1,)


def test_repr_small_and_large():
    assert repr(IntSet([1, 2])) == "IntSet({1, 2})"
    big = IntSet(range(1, 50))
    assert "len=49" in repr(big)


@given(small_sets)
def test_iteration_sorted_and_unique(elems):
    s = IntSet(elems)
    out = list(s)
    assert out == sorted(set(elems))
    assert all(e in s for e in out)


@given(small_sets)
def test_mask_and_tuple_views_agree(elems):
    s = IntSet(elems)
    assert IntSet.from_mask(s.mask).elements == s.elements
    assert s.mask.bit_count() == len(s)
