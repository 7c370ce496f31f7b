"""Unate formulas of order 2: read-once composition of unate DNF/CNF blocks.

A minimum formula either is a unate DNF or CNF of f, or follows the
maximal and/or decomposition of f with each factor minimized on its own.
Size is the number of leaves.
"""

from __future__ import annotations

from ttmin.core import TruthTable, reduce_to_support
from ttmin.formulas.formula import AND, OR, Const, count_leaves, gate, relabel, result, sort_children
from ttmin.formulas.unate import find_unate_orientation, minimize_unate_cnf, minimize_unate_dnf
from ttmin.mlpoly import and_decompose, or_decompose


def _uf2(tt: TruthTable):
    """Formula on local indices for a table depending on all its variables."""
    dnf = minimize_unate_dnf(tt).formula
    cnf = minimize_unate_cnf(tt).formula
    # candidate order settles ties: DNF, then CNF, then the decomposition
    cands = [dnf, cnf]
    if tt.n >= 2:
        for dec, op in ((and_decompose(tt), AND), (or_decompose(tt), OR)):
            if dec is None:
                continue
            kids = [relabel(_uf2(f), block) for f, block in zip(dec.factors, dec.blocks)]
            cands.append(gate(op, kids))
    best = None
    for c in cands:
        key = count_leaves(c)
        if best is None or key < best[0]:
            best = (key, c)
    return best[1]


def minimize_uf2(tt: TruthTable):
    find_unate_orientation(tt)  # raises Reject when f is not unate
    if tt.is_constant():
        return result("uf2", tt.n, Const(tt.constant_value()))
    red, keep = reduce_to_support(tt)
    node = sort_children(relabel(_uf2(red), keep))
    return result("uf2", tt.n, node)

