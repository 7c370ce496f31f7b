"""Ordinary decision trees by dynamic programming over all 3^n cubes."""

from __future__ import annotations

from ttmin.core import TruthTable
from ttmin.kernels import dt_cube_table
from ttmin.trees.model import CapError, Leaf, Node, TreeResult, VarTest

DT_MAX_N = 13


def _label_order(n: int) -> list[int]:
    # ties go to the variable whose rendered label sorts first
    return sorted(range(n), key=lambda j: VarTest(j).label(n))


def cube_sizes(tt: TruthTable):
    """Sizes and split choices for every cube (base-3 index, digit 2 = free)."""
    if tt.n > DT_MAX_N:
        raise CapError(f"n={tt.n} exceeds {DT_MAX_N} for the cube DP")
    bits = bytes((tt.value >> i) & 1 for i in range(1 << tt.n))
    return dt_cube_table(bits, tt.n, _label_order(tt.n))


def minimize_dt(tt: TruthTable) -> TreeResult:
    n = tt.n
    size, best = cube_sizes(tt)
    pow3 = [3 ** j for j in range(n)]

    def build(c):
        j = best[c]
        if j < 0:
            point = sum(1 << k for k in range(n) if (c // pow3[k]) % 3 == 1)
            return Leaf((tt.value >> point) & 1)
        return Node(VarTest(j), build(c - 2 * pow3[j]), build(c - pow3[j]))

    tree = build(3 ** n - 1)
    assert tree.size == size[3 ** n - 1]
    return TreeResult("dt", n, tree)
