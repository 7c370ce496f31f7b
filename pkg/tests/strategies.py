"""Shared Hypothesis strategies."""

from hypothesis import strategies as st

from ttmin.core import TruthTable


@st.composite
def tables(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    return TruthTable(n, draw(st.integers(0, (1 << (1 << n)) - 1)))


@st.composite
def read_once(draw, max_n=8, ops=("and", "or", "xor")):
    """A random read-once formula: (n, node) with a random leaf order and polarity."""
    from ttmin.formulas.formula import Gate, gate, lit

    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, n))
    leaves = draw(st.permutations(range(n)))[:k]

    def build(vars_):
        if len(vars_) == 1:
            return lit(vars_[0], draw(st.booleans()))
        cut = draw(st.integers(1, len(vars_) - 1))
        op = draw(st.sampled_from(ops))
        return gate(op, [build(vars_[:cut]), build(vars_[cut:])])

    return n, build(list(leaves))
