import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import tables
from ttmin.core import (
    AND,
    MAJ,
    OR,
    PARITY,
    PartialTruthTable,
    TableError,
    TruthTable,
    all_tables,
    consistent_with,
    count_ones,
    equal_functional,
    evaluate,
    from_text,
    reduce_to_support,
    restrict,
    to_text,
)


def test_from_text_examples():
    assert from_text("0001") == AND(2)
    assert from_text("01") == TruthTable(1, 0b10)
    p = from_text("0*11")
    assert isinstance(p, PartialTruthTable) and p.n == 2
    assert str(p) == "0*11"
    assert from_text("n=2\n0110\n") == PARITY(2)
    assert from_text("0★11") == p


@pytest.mark.parametrize("bad", ["011", "0", "", "01a1", "n=3\n0110"])
def test_from_text_errors(bad):
    with pytest.raises(TableError):
        from_text(bad)


def test_to_text_round_trip():
    for tt in all_tables(3):
        assert from_text(to_text(tt)) == tt


def test_evaluate_examples():
    assert evaluate(AND(2), [1, 1]) == 1
    assert evaluate(AND(2), [1, 0]) == 0
    assert evaluate(PARITY(3), [1, 0, 1]) == 0
    with pytest.raises(TableError):
        evaluate(AND(2), [1, 0, 1])


def test_restrict_examples():
    assert str(restrict(AND(2), "1*")) == "01"
    assert str(restrict(AND(2), "0*")) == "00"
    assert str(restrict(MAJ(3), "**1")) == "0111"
    with pytest.raises(TableError):
        restrict(AND(2), "1")


def test_reduce_to_support_examples():
    red, keep = reduce_to_support(from_text("0101"))
    assert str(red) == "01" and keep == [0]
    assert reduce_to_support(AND(2)) == (AND(2), [0, 1])
    red, keep = reduce_to_support(from_text("1111"))
    assert red.n == 0 and red.constant_value() == 1 and keep == []


def test_equal_functional_examples():
    assert equal_functional(AND(2), AND(2))
    assert not equal_functional(AND(2), OR(2))
    built = TruthTable.from_function(2, lambda a: a[0] ^ a[1])
    assert equal_functional(PARITY(2), built)
    with pytest.raises(TableError):
        equal_functional(AND(2), AND(3))


def test_count_ones_examples():
    assert count_ones(AND(2)) == 1
    assert count_ones(OR(2)) == 3
    assert count_ones(PARITY(3)) == 4


def test_consistent_with_examples():
    assert consistent_with(from_text("0*"), from_text("01"))
    assert not consistent_with(from_text("0*"), from_text("11"))
    with pytest.raises(TableError):
        consistent_with(from_text("**"), from_text("0110"))


def _cubes(n):
    return itertools.product("01*", repeat=n)


def test_restrict_composes_exhaustive():
    for n in range(1, 4):
        for tt in all_tables(n):
            for c1 in _cubes(n):
                free = [j for j, ch in enumerate(c1) if ch == "*"]
                once = restrict(tt, c1)
                for c2 in _cubes(len(free)):
                    composed = list(c1)
                    for j, ch in zip(free, c2):
                        composed[j] = ch
                    assert restrict(once, c2) == restrict(tt, composed)


def test_reduce_to_support_exhaustive():
    for n in range(1, 5):
        for tt in all_tables(n):
            red, keep = reduce_to_support(tt)
            assert reduce_to_support(red) == (red, list(range(red.n)))
            assert all(red.depends_on(j) for j in range(red.n))
            if red.n:
                assert red.embed(n, keep) == tt
            else:
                assert tt.is_constant()


@given(tables(1, 6), st.data())
def test_index_round_trip(tt, data):
    s = str(tt)
    a = data.draw(st.lists(st.integers(0, 1), min_size=tt.n, max_size=tt.n))
    idx = sum(b << j for j, b in enumerate(a))
    assert evaluate(from_text(s), a) == int(s[idx])


@given(tables(1, 6), st.integers(0, 63))
def test_shift_is_involution(tt, a):
    a &= (1 << tt.n) - 1
    assert tt.shift(a).shift(a) == tt
    assert tt.shift(a)[0] == tt[a]
