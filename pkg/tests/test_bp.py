import itertools
import random

import pytest
from hypothesis import given

from strategies import tables
from ttmin.bp import (
    OBDD_MAX_N,
    eval_bp,
    mubp_construct,
    obdd_build,
    obdd_optimal_order,
    obdd_size,
)
from ttmin.core import AND, OR, PARITY, TableError, TruthTable, all_tables, from_text, reduce_to_support
from ttmin.trees import CapError, Reject


def fn(n, f):
    return TruthTable.from_function(n, f)


MUX = fn(3, lambda a: a[1] if a[2] else a[0])
CHAIN = fn(3, lambda a: a[0] | (a[1] & a[2]))


def test_obdd_build_examples():
    assert obdd_build(AND(2), [1, 2]).size == 2
    for order in ([0, 1], [1, 0]):
        assert obdd_build(PARITY(2), order).size == 3
    assert obdd_build(TruthTable(2, 0b1111), [0, 1]).size == 0
    with pytest.raises(TableError):
        obdd_build(AND(2), [0, 0])


def test_obdd_serialization():
    p = obdd_build(AND(2), [0, 1])
    assert p.serialize() == "(obdd n=2 order=1,2 root=0\n  (0 x1 T0 1)\n  (1 x2 T0 T1))"
    assert p.to_dot().startswith("digraph bp {")


def test_optimal_order_examples():
    order, size = obdd_optimal_order(MUX)
    assert size == 3 and order[0] == 2
    assert obdd_optimal_order(AND(3))[1] == 3
    # a reduced OBDD of parity on n variables has 2n - 1 nodes in every order
    assert obdd_optimal_order(PARITY(4))[1] == 7
    with pytest.raises(CapError):
        obdd_optimal_order(TruthTable(OBDD_MAX_N + 1, 0))


def test_mubp_examples():
    p = mubp_construct(CHAIN)
    assert p.size == 3 and p.table() == CHAIN
    with pytest.raises(Reject) as e:
        mubp_construct(PARITY(2))
    assert e.value.reason == "no-mubp"
    p = mubp_construct(from_text("10"))
    assert p.size == 1 and p.table() == from_text("10")


def test_mubp_needs_search_beyond_greedy():
    f = fn(3, lambda a: (1 - a[2]) if a[0] else (1 - a[1]))
    p = mubp_construct(f)
    assert p.table() == f and p.size == 3


def test_eval_bp_examples():
    assert eval_bp(mubp_construct(CHAIN), [1, 0, 0]) == 1
    assert eval_bp(obdd_build(PARITY(2), [0, 1]), [1, 1]) == 0
    assert eval_bp(obdd_build(AND(2), [0, 1]), [0, 1]) == 0


def test_obdd_canonical_exhaustive():
    for n in range(1, 4):
        for order in itertools.permutations(range(n)):
            for tt in all_tables(n):
                a = obdd_build(tt, order)
                b = obdd_build(TruthTable.from_bits(tt.bits), list(order))
                assert a == b and a.table() == tt


def test_optimal_order_against_permutations():
    rng = random.Random(29)
    for n in range(1, 6):
        for _ in range(50):
            tt = TruthTable(n, rng.getrandbits(1 << n))
            order, size = obdd_optimal_order(tt)
            brute = min(obdd_size(tt, p) for p in itertools.permutations(range(n)))
            assert size == brute == obdd_size(tt, order)


def width_one(tt):
    # every variable f reads labels at least one node, so the optimal
    # size equals the support size exactly when each layer has width <= 1
    order, size = obdd_optimal_order(tt)
    widths = obdd_build(tt, order).layer_widths()
    assert (size == len(tt.support())) == all(w <= 1 for w in widths)
    return size == len(tt.support())


def test_mubp_characterization_exhaustive():
    for n in range(1, 5):
        for tt in all_tables(n):
            try:
                p = mubp_construct(tt)
            except Reject:
                assert not width_one(tt)
                continue
            assert width_one(tt)
            assert p.table() == tt
            assert p.size == len(tt.support())


@given(tables(1, 5))
def test_one_based_orders_accepted(tt):
    zero = list(range(tt.n))
    assert obdd_build(tt, zero) == obdd_build(tt, [v + 1 for v in zero])
