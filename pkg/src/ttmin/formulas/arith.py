"""Arithmetic formulas over GF(2): sums of monomials, products of affine
forms, and their read-once composition.

Leaf counts exclude constants throughout.
"""

from __future__ import annotations

from ttmin.core import TruthTable, reduce_to_support
from ttmin.formulas.formula import ADD, MUL, Const, Gate, count_leaves, gate, lit, relabel, result, sort_children
from ttmin.mlpoly import and_decompose, to_multilinear, xor_decompose
from ttmin.trees.model import Reject


def _sigma(n: int, coeffs: int):
    terms = []
    const = 0
    c = coeffs
    while c:
        b = c & -c
        s = b.bit_length() - 1
        c ^= b
        if s == 0:
            const = 1
            continue
        terms.append(gate(MUL, [lit(j) for j in range(n) if (s >> j) & 1]))
    terms.sort(key=lambda t: count_leaves(t))
    if const:
        terms.append(Const(1))
    if not terms:
        return Const(0)
    return gate(ADD, terms)


def sigma2a(tt: TruthTable):
    """The multilinear polynomial of f written out as a sum of monomials."""
    return result("sigma2a", tt.n, _sigma(tt.n, to_multilinear(tt).coeffs))


def constraint_space(tt: TruthTable) -> dict[int, int]:
    """All alpha != 0 with <alpha, x> constant on f^-1(1), mapped to that constant."""
    ones = [x for x in range(1 << tt.n) if (tt.value >> x) & 1]
    out = {}
    for alpha in range(1, 1 << tt.n):
        vals = {(alpha & x).bit_count() & 1 for x in ones}
        if len(vals) == 1:
            out[alpha] = vals.pop()
    return out


def is_affine_set(tt: TruthTable) -> bool:
    ones = [x for x in range(1 << tt.n) if (tt.value >> x) & 1]
    if not ones:
        return False
    s = set(ones)
    base = ones[0]
    return all((a ^ b ^ base) in s for a in ones for b in ones)


def greedy_basis(vectors) -> list[int]:
    """Minimum total Hamming weight basis of span(vectors); bases form a matroid."""
    basis: dict[int, int] = {}
    chosen = []
    for v in sorted(set(vectors), key=lambda u: (u.bit_count(), u)):
        w = v
        while w:
            p = w.bit_length() - 1
            if p not in basis:
                basis[p] = w
                chosen.append(v)
                break
            w ^= basis[p]
    return chosen


def minimize_pi2a(tt: TruthTable):
    """Product of affine forms, one per basis constraint of f^-1(1)."""
    if not is_affine_set(tt):
        raise Reject("not-affine", "f^-1(1) is not a nonempty affine subspace")
    space = constraint_space(tt)
    factors = []
    for alpha in greedy_basis(space):
        # <alpha, x> = c on every true point, so <alpha, x> + c + 1 is 1 there
        kids = [lit(j) for j in range(tt.n) if (alpha >> j) & 1]
        if not space[alpha]:
            kids.append(Const(1))
        factors.append(gate(ADD, kids))
    if not factors:
        return result("pi2a", tt.n, Const(1))
    return result("pi2a", tt.n, sort_children(gate(MUL, factors)))


def _top(node):
    return node.op if isinstance(node, Gate) else None


def _add_const(node, c: int):
    """node + c, folding into a top-level sum."""
    if not c:
        return node
    if isinstance(node, Const):
        return Const(node.bit ^ 1)
    if _top(node) == ADD:
        kids = list(node.children)
        if kids and isinstance(kids[-1], Const):
            kids.pop()
            return gate(ADD, kids) if len(kids) > 1 else (kids[0] if kids else Const(0))
        return Gate(ADD, tuple(kids) + (Const(1),))
    return Gate(ADD, (node, Const(1)))


def _f2a(tt: TruthTable):
    """Local-index formula for a table depending on all its variables."""
    n = tt.n
    if n == 1:
        return lit(0) if tt.value == 0b10 else Gate(ADD, (lit(0), Const(1)))
    # depth-2 forms first, so they win ties against the decompositions
    cands = [_sigma(n, to_multilinear(tt).coeffs)]
    # a product form of f + 1 with the constant put back is also allowed
    for b in (0, 1):
        try:
            cands.append(_add_const(minimize_pi2a(tt ^ b).formula, b))
        except Reject:
            pass
    for b in (0, 1):
        d = and_decompose(tt ^ b)
        if d is not None:
            kids = [relabel(_f2a(f), block) for f, block in zip(d.factors, d.blocks)]
            cands.append(_add_const(gate(MUL, kids), b))
            break
    d = xor_decompose(tt)
    if d is not None:
        kids = []
        const = d.constant
        for f, block in zip(d.factors, d.blocks):
            t0, t1 = _f2a(f), _f2a(~f)
            if count_leaves(t1) < count_leaves(t0):
                kids.append(relabel(t1, block))
                const ^= 1
            else:
                kids.append(relabel(t0, block))
        # fold constants of the parts into the one at the top
        flat = []
        for k in kids:
            if _top(k) == ADD and isinstance(k.children[-1], Const):
                const ^= 1
                k = _add_const(k, 1)
            flat.append(k)
        cands.append(_add_const(gate(ADD, flat), const))
    best = None
    for c in cands:
        key = count_leaves(c)
        if best is None or key < best[0]:
            best = (key, c)
    return best[1]


def minimize_f2a(tt: TruthTable):
    if tt.is_constant():
        return result("f2a", tt.n, Const(tt.constant_value()))
    red, keep = reduce_to_support(tt)
    node = sort_children(relabel(_f2a(red), keep))
    return result("f2a", tt.n, node)


def pi2a_size(tt: TruthTable):
    """Leaf count of the minimum product form, or None if there is none."""
    try:
        return minimize_pi2a(tt).size
    except Reject:
        return None

