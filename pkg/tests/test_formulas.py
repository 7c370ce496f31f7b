import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import read_once, tables
from ttmin import oracles
from ttmin.core import AND, MAJ, OR, PARITY, TruthTable, all_tables, from_text, reduce_to_support
from ttmin.formulas import (
    count_gates,
    count_leaves,
    find_unate_orientation,
    flip,
    greedy_basis,
    is_unate,
    minimize_boolean_rof,
    minimize_f2a,
    minimize_monotone_dnf,
    minimize_pi2a,
    minimize_rof_neg,
    minimize_rof_xor,
    minimize_rof_xor_a,
    minimize_rof_xor_neg,
    minimize_uf2,
    minimize_unate_cnf,
    minimize_unate_dnf,
    pi2a_size,
    rof_neg_by_flips,
    rof_xor_neg_by_flips,
    sigma2a,
    table_value,
)
from ttmin.formulas.formula import serialize
from ttmin.formulas.rof import boolean_paths
from ttmin.trees import Reject


def fn(n, f):
    return TruthTable.from_function(n, f)


NOR = fn(2, lambda a: (1 - a[0]) & (1 - a[1]))
NAND = from_text("1110")
NX1_X2 = fn(2, lambda a: (1 - a[0]) & a[1])


def test_monotone_dnf_examples():
    r = minimize_monotone_dnf(MAJ(3))
    assert r.size == 3 and r.to_text() == "x1 & x2 | x1 & x3 | x2 & x3"
    assert minimize_monotone_dnf(AND(2)).size == 1
    with pytest.raises(Reject) as e:
        minimize_monotone_dnf(PARITY(2))
    assert e.value.reason == "not-monotone"


def test_orientation_examples():
    assert find_unate_orientation(NX1_X2).a == (1, 0)
    assert find_unate_orientation(MAJ(3)).a == (0, 0, 0)
    with pytest.raises(Reject):
        find_unate_orientation(PARITY(2))


def test_unate_dnf_cnf_examples():
    assert minimize_unate_dnf(NX1_X2).size == 1
    r = minimize_unate_cnf(OR(2))
    assert r.size == 1 and r.table() == OR(2)
    assert minimize_unate_cnf(MAJ(3)).size == 3


def test_rof_xor_examples():
    r = minimize_rof_xor(PARITY(3))
    assert r.size == 1 and r.serialize() == "(xor x1 x2 x3)"
    r = minimize_rof_xor(fn(3, lambda a: (a[0] & a[1]) ^ a[2]))
    assert r.size == 2
    with pytest.raises(Reject) as e:
        minimize_rof_xor(MAJ(3))
    assert e.value.reason == "indecomposable"
    with pytest.raises(Reject):
        minimize_rof_xor(TruthTable(2, 0))


def test_boolean_rof_examples():
    f = fn(3, lambda a: (a[0] | a[1]) & a[2])
    r = minimize_boolean_rof(f)
    assert r.serialize() == "(and (or x1 x2) x3)"
    with pytest.raises(Reject):
        minimize_boolean_rof(PARITY(2))
    assert minimize_boolean_rof(from_text("10")).serialize() == "~x1"


def test_flip_examples():
    f = minimize_boolean_rof(AND(2)).formula
    g = flip(f)
    assert serialize(g) == "(not (or (not x1) (not x2)))"
    assert flip(g) == f
    assert table_value(g, 2) == AND(2).value
    with pytest.raises(ValueError):
        flip(minimize_rof_xor(PARITY(2)).formula)


def test_rof_neg_examples():
    r = minimize_rof_neg(NOR)
    assert r.serialize() == "(not (or x1 x2))" and r.size == 2 and r.nots == 1
    r = minimize_rof_neg(AND(2))
    assert r.nots == 0 and r.size == 1
    r = minimize_rof_neg(from_text("10"))
    assert r.serialize() == "(not x1)" and r.nots == 1


def test_rof_xor_a_examples():
    xnor_like = fn(2, lambda a: (1 - a[0]) ^ a[1])
    r = minimize_rof_xor_a(xnor_like, (1, 0))
    assert r.serialize() == "(xor ~x1 x2)" and r.table() == xnor_like
    assert minimize_rof_xor_a(AND(2), (0, 0)).serialize() == "(and x1 x2)"
    with pytest.raises(Reject):
        minimize_rof_xor_a(NAND, (0, 0))


def test_rof_xor_neg_examples():
    r = minimize_rof_xor_neg(NAND)
    assert r.serialize() == "(not (and x1 x2))" and r.nots == 1 and r.size == 2
    r = minimize_rof_xor_neg(PARITY(2))
    assert r.serialize() == "(xor x1 x2)" and r.nots == 0
    with pytest.raises(Reject):
        minimize_rof_xor_neg(MAJ(3))


def test_uf2_examples():
    r = minimize_uf2(fn(4, lambda a: (a[0] | a[1]) & (a[2] | a[3])))
    assert r.size == 4
    assert minimize_uf2(MAJ(3)).size == 6
    assert minimize_uf2(AND(2)).size == 2
    with pytest.raises(Reject):
        minimize_uf2(PARITY(2))


def test_pi2a_examples():
    assert minimize_pi2a(AND(2)).size == 2
    r = minimize_pi2a(PARITY(2))
    assert r.size == 2 and r.table() == PARITY(2)
    with pytest.raises(Reject) as e:
        minimize_pi2a(OR(2))
    assert e.value.reason == "not-affine"


def test_sigma2a_examples():
    r = sigma2a(OR(2))
    assert r.size == 4 and r.to_text() == "x1 + x2 + x1*x2"
    assert sigma2a(PARITY(3)).size == 3
    assert sigma2a(TruthTable(2, 0b1111)).size == 0


def test_f2a_examples():
    assert minimize_f2a(fn(3, lambda a: (a[0] & a[1]) ^ a[2])).size == 3
    r = minimize_f2a(NAND)
    assert r.size == 2 and r.serialize() == "(add (mul x1 x2) 1)"
    assert minimize_f2a(PARITY(3)).size == 3


def test_f2a_complemented_product_form():
    # f + 1 is an affine indicator needing 3 leaves: 4 leaves in all
    f = from_text("01111110")
    r = minimize_f2a(f)
    assert r.size == 4 and r.table() == f


def test_every_formula_reproduces_table_n3():
    for tt in all_tables(3):
        outs = [sigma2a(tt), minimize_f2a(tt)]
        for op in (minimize_monotone_dnf, minimize_unate_dnf, minimize_unate_cnf, minimize_uf2, minimize_pi2a,
                   minimize_rof_xor, minimize_boolean_rof, minimize_rof_neg, minimize_rof_xor_neg):
            try:
                outs.append(op(tt))
            except Reject:
                pass
        for r in outs:
            assert r.table() == tt, (r.model, str(tt))


def test_negation_dp_matches_flip_enumeration():
    for n in range(1, 4):
        for tt in all_tables(n):
            for fast, slow in ((minimize_rof_neg, rof_neg_by_flips), (minimize_rof_xor_neg, rof_xor_neg_by_flips)):
                try:
                    a = fast(tt)
                except Reject:
                    with pytest.raises(Reject):
                        slow(tt)
                    continue
                b = slow(tt)
                assert a.size == b.size and a.table() == b.table() == tt


def test_uf2_f2a_oracle_n3():
    u, f = oracles.uf2_sizes(3), oracles.f2a_sizes(3)
    for tt in all_tables(3):
        assert minimize_f2a(tt).size == f[tt.value]
        if is_unate(tt):
            assert minimize_uf2(tt).size == u[tt.value]
        else:
            assert tt.value not in u


def _paths(node):
    return boolean_paths(node)


@given(read_once(max_n=6, ops=("and", "or")), st.data())
@settings(max_examples=200)
def test_flip_preserves_function_and_is_involution(spec, data):
    n, node = spec
    paths = _paths(node)
    if not paths:
        return
    p = data.draw(st.sampled_from(paths))
    g = flip(node, p)
    assert table_value(g, n) == table_value(node, n)
    assert flip(g, p) == node


@given(read_once(max_n=8))
@settings(max_examples=150)
def test_rof_xor_round_trip(spec):
    n, node = spec
    tt = TruthTable(n, table_value(node, n))
    r = minimize_rof_xor(tt)
    assert r.table() == tt
    assert r.size <= count_gates(node)


@given(read_once(max_n=8, ops=("and", "or")))
@settings(max_examples=150)
def test_boolean_rof_is_canonical(spec):
    n, node = spec
    r = minimize_boolean_rof(TruthTable(n, table_value(node, n)))
    again = minimize_boolean_rof(r.table())
    assert again.serialize() == r.serialize()


# -- direct products -----------------------------------------------------------


def random_unate(rng, n):
    """Random monotone DNF, then a random orientation."""
    terms = [rng.getrandbits(n) or 1 for _ in range(rng.randint(1, 3))]
    tt = fn(n, lambda a: int(any(all(a[j] for j in range(n) if (t >> j) & 1) for t in terms)))
    return tt.shift(rng.getrandbits(n))


def random_affine_or_table(rng, n):
    if rng.random() < 0.5:
        return TruthTable(n, rng.getrandbits(1 << n) or 1)
    # indicator of a random affine subspace
    rows = [rng.getrandbits(n) for _ in range(rng.randint(0, n))]
    shift = rng.getrandbits(n)
    bits = [int(all(((r & (x ^ shift)).bit_count() & 1) == 0 for r in rows)) for x in range(1 << n)]
    return TruthTable.from_bits(bits)


def split(rng):
    n1 = rng.randint(1, 4)
    n2 = rng.randint(1, 8 - n1)
    return n1, n2


def combine(f1, f2, op):
    n = f1.n + f2.n
    a = f1.embed(n, range(f1.n))
    b = f2.embed(n, range(f1.n, n))
    return {"and": a & b, "xor": a ^ b}[op]


def dnf_leaves(tt):
    return count_leaves(minimize_unate_dnf(tt).formula)


def cnf_leaves(tt):
    return count_leaves(minimize_unate_cnf(tt).formula)


def test_direct_product_unate():
    rng = random.Random(17)
    for _ in range(200):
        n1, n2 = split(rng)
        f1, f2 = random_unate(rng, n1), random_unate(rng, n2)
        g = combine(f1, f2, "and")
        if g.is_constant():
            continue
        assert dnf_leaves(g) >= dnf_leaves(f1) + dnf_leaves(f2)
        assert cnf_leaves(g) == cnf_leaves(f1) + cnf_leaves(f2)


def test_direct_product_arithmetic():
    rng = random.Random(19)
    for _ in range(200):
        n1, n2 = split(rng)
        f1, f2 = random_affine_or_table(rng, n1), random_affine_or_table(rng, n2)
        prod, total = combine(f1, f2, "and"), combine(f1, f2, "xor")
        s1, s2 = sigma2a(f1).size, sigma2a(f2).size
        assert sigma2a(prod).size >= s1 + s2
        assert sigma2a(total).size == s1 + s2
        p1, p2 = pi2a_size(f1), pi2a_size(f2)
        if p1 is not None and p2 is not None:
            assert pi2a_size(prod) == p1 + p2
        pt = pi2a_size(total)
        # the sum law assumes neither part is the constant 1
        if None not in (p1, p2, pt) and not f1.is_constant() and not f2.is_constant():
            assert pt >= p1 + p2


# -- greedy basis --------------------------------------------------------------


def span(vectors):
    out = {0}
    for v in vectors:
        out |= {x ^ v for x in out}
    return out


def rank(vectors):
    return len(greedy_basis(vectors))


def exhaustive_min_weight(vectors):
    space = sorted(span(vectors) - {0})
    d = rank(space)
    best = None
    for combo in combinations(space, d):
        if len(span(combo)) == 1 << d:
            w = sum(v.bit_count() for v in combo)
            best = w if best is None else min(best, w)
    return best


def test_greedy_basis_is_minimum():
    rng = random.Random(23)
    for _ in range(100):
        n = rng.randint(1, 8)
        gens = [rng.getrandbits(n) for _ in range(rng.randint(1, 4))]
        space = sorted(span(gens) - {0})
        if not space:
            continue
        basis = greedy_basis(space)
        assert len(span(basis)) == len(space) + 1
        assert sum(v.bit_count() for v in basis) == exhaustive_min_weight(space)
