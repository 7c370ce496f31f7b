"""Read-once formulas over {and, or} and {and, or, xor}, with and without
costed negations.

Every ROF follows the unique maximal decomposition of its function, so
the minimizers just recurse on the factors.  For the costly-negation
models the skeleton of the optimum equals the skeleton of that ROF; only
the gate labels and NOT placement vary, and those are optimized by a DP
over the skeleton (see :func:`_place_negations`).
"""

from __future__ import annotations

from itertools import product

from ttmin.core import TruthTable, reduce_to_support
from ttmin.formulas.formula import (
    AND,
    NOT,
    OR,
    XOR,
    Const,
    Gate,
    Lit,
    count_gates,
    gate,
    lit,
    negate,
    relabel,
    result,
    serialize,
    sort_children,
)
from ttmin.mlpoly import and_decompose, or_decompose, xor_decompose
from ttmin.trees.model import CapError, Reject

ROF_XOR_NEG_MAX_N = 12
FLIP_ENUM_MAX_GATES = 16

_DUAL = {AND: OR, OR: AND}


def _rof(tt: TruthTable, allow_xor: bool, allow_neg: bool = True):
    """ROF for a table depending on all its variables, on local indices."""
    if tt.n == 1:
        if tt.value == 0b10:
            return lit(0)
        if allow_neg:
            return lit(0, True)
        raise Reject("negation", "a negated literal is not allowed here")
    dec = [and_decompose(tt), or_decompose(tt)]
    if allow_xor:
        dec.append(xor_decompose(tt))
    fired = [d for d in dec if d is not None]
    assert len(fired) <= 1, "more than one decomposition applies"
    if not fired:
        raise Reject("indecomposable", "no decomposition and not a literal")
    d = fired[0]
    factors = list(d.factors)
    if d.op == "XOR":
        if allow_neg:
            if d.constant:
                factors[0] = ~factors[0]
            kids = [_rof(f, allow_xor, allow_neg) for f in factors]
        else:
            kids = []
            parity = 0
            for f in factors:
                # at most one of f and its complement has a negation-free form
                for b in (0, 1):
                    try:
                        kids.append(_rof(f ^ b, allow_xor, False))
                        parity ^= b
                        break
                    except Reject:
                        continue
                else:
                    raise Reject("negation", "a factor needs a negation either way")
            if parity != d.constant:
                raise Reject("negation", "the xor constant cannot be absorbed")
        op = XOR
    else:
        kids = [_rof(f, allow_xor, allow_neg) for f in factors]
        op = AND if d.op == "AND" else OR
    kids = [relabel(k, block) for k, block in zip(kids, d.blocks)]
    return gate(op, kids)


def _run(tt: TruthTable, allow_xor: bool, allow_neg: bool = True):
    if tt.is_constant():
        raise Reject("constant", "read-once formulas have no constants")
    red, keep = reduce_to_support(tt)
    node = _rof(red, allow_xor, allow_neg)
    return sort_children(relabel(node, keep))


def minimize_rof_xor(tt: TruthTable):
    """Minimum gate count ROF over {and, or, xor} with negated leaves."""
    node = _run(tt, True)
    return result("rof_xor", tt.n, node)


def minimize_boolean_rof(tt: TruthTable):
    node = _run(tt, False)
    return result("rof", tt.n, node)


def minimize_rof_xor_a(tt: TruthTable, a):
    """The ROF over {and, or, xor} whose negated leaves are exactly the x_i with a_i = 1."""
    if not isinstance(a, int):
        a = sum((b & 1) << j for j, b in enumerate(a))
    if tt.is_constant():
        raise Reject("constant", "read-once formulas have no constants")
    shifted = tt.shift(a)
    red, keep = reduce_to_support(shifted)
    if any((a >> j) & 1 for j in range(tt.n) if j not in keep):
        raise Reject("negation", "a negates a variable f does not read")
    node = _rof(red, True, allow_neg=False)
    node = relabel(node, keep)
    node = _map_leaves(node, lambda v: Lit(v.var, bool((a >> v.var) & 1)))
    return result("rof_xor_a", tt.n, sort_children(node))


def _map_leaves(node, fn):
    if isinstance(node, Lit):
        return fn(node)
    if isinstance(node, Const):
        return node
    return Gate(node.op, tuple(_map_leaves(c, fn) for c in node.children))


# -- flips ---------------------------------------------------------------


def flip(formula, path=()):
    """De Morgan at the node reached by ``path``.

    The path lists child indices from the root, ignoring NOT gates.  The
    node's label swaps between and/or and a NOT is toggled on every edge
    touching it, the edge to its parent (or the output) included.
    """
    if isinstance(formula, Gate) and formula.op == NOT:
        # the NOT sits on the edge above the node; toggling cancels it
        return negate(flip(formula.children[0], path))
    if not path:
        return negate(_flip_here(formula))
    i, rest = path[0], path[1:]
    if not isinstance(formula, Gate):
        raise ValueError("path runs past a leaf")
    kids = list(formula.children)
    kids[i] = flip(kids[i], rest)
    return Gate(formula.op, tuple(kids))


def _flip_here(node):
    if not isinstance(node, Gate) or node.op not in _DUAL:
        raise ValueError("flip applies to and/or gates only")
    return Gate(_DUAL[node.op], tuple(negate(c) for c in node.children))


def lift_negations(node):
    """Negated leaves become NOT gates over positive leaves."""
    return _map_leaves(node, lambda v: Gate(NOT, (Lit(v.var),)) if v.neg else v)


def boolean_paths(node, path=()):
    """Paths (NOT-transparent) to every and/or gate, root first."""
    while isinstance(node, Gate) and node.op == NOT:
        node = node.children[0]
    if not isinstance(node, Gate):
        return []
    out = [path] if node.op in _DUAL else []
    for i, c in enumerate(node.children):
        out.extend(boolean_paths(c, path + (i,)))
    return out


def erase_xor_not_pairs(node):
    """Around each xor gate keep at most one NOT, on the output edge if possible."""
    def strip(n):
        k = 0
        while isinstance(n, Gate) and n.op == NOT:
            n, k = n.children[0], k + 1
        return n, k

    def go(n):
        core, k = strip(n)
        if not isinstance(core, Gate):
            return _wrap(core, k & 1)
        kids = [go(c) for c in core.children]
        if core.op != XOR:
            return _wrap(Gate(core.op, tuple(kids)), k & 1)
        parity = k
        bare = []
        for c in kids:
            c0, ck = strip(c)
            parity += ck
            bare.append(c0)
        return _wrap(Gate(XOR, tuple(bare)), parity & 1)

    return go(node)


def _wrap(node, k):
    return Gate(NOT, (node,)) if k else node


def apply_flips(formula, paths):
    for p in paths:
        formula = flip(formula, p)
    return formula


# -- negation placement ----------------------------------------------------

_INF = float("inf")


def _place_negations(node):
    """Cheapest labels and NOT gates over the skeleton of a ROF with negated leaves.

    Each skeleton node v outputs T_v xor q_v, where T_v is the function of v
    in the given formula.  An and/or node outputting the complement must
    take complemented inputs and swap its label; a xor node outputs the
    xor of its inputs' polarities; a positive leaf x_i has q = neg.  A NOT
    sits on an edge iff the child's polarity differs from what the parent
    consumes.  Returns (NOT count, formula).
    """
    memo = {}

    def cost(v, q):
        key = (id(v), q)
        if key in memo:
            return memo[key]
        if isinstance(v, Lit):
            ans = (0, None) if q == int(v.neg) else (_INF, None)
        elif v.op in _DUAL:
            total, picks = 0, []
            for c in v.children:
                cc, qc = into(c, q)
                total += cc
                picks.append(qc)
            ans = (total, tuple(picks))
        else:
            # parity DP: best[p] = (cost, choices) with xor of consumed bits p
            best = {0: (0, ()), 1: (_INF, ())}
            for c in v.children:
                opts = [(into(c, r)[0], r) for r in (0, 1)]
                nxt = {}
                for p, (bc, ch) in best.items():
                    for oc, r in opts:
                        cand = (bc + oc, ch + (r,))
                        cur = nxt.get(p ^ r)
                        if cur is None or cand < cur:
                            nxt[p ^ r] = cand
                best = nxt
            total, rs = best[q]
            ans = (total, rs)
        memo[key] = ans
        return ans

    def into(c, r):
        """Cheapest way to deliver T_c xor r; returns (cost, child polarity)."""
        same = cost(c, r)[0]
        other = cost(c, 1 - r)[0] + 1
        return (same, r) if same <= other else (other, 1 - r)

    def build(v, q):
        if isinstance(v, Lit):
            return Lit(v.var)
        _, picks = cost(v, q)
        if v.op in _DUAL:
            op = v.op if q == 0 else _DUAL[v.op]
            kids = []
            for c in v.children:
                qc = into(c, q)[1]
                kids.append(_wrap(build(c, qc), qc != q))
            return Gate(op, tuple(kids))
        kids = []
        for c, r in zip(v.children, picks):
            qc = into(c, r)[1]
            kids.append(_wrap(build(c, qc), qc != r))
        return Gate(XOR, tuple(kids))

    c0, c1 = cost(node, 0)[0], cost(node, 1)[0] + 1
    q = 0 if c0 <= c1 else 1
    return min(c0, c1), _wrap(build(node, q), q)


def minimize_rof_neg(tt: TruthTable):
    """Minimum ROF over {and, or, not} counting every gate, NOTs included."""
    base = minimize_boolean_rof(tt).formula
    _, node = _place_negations(base)
    return result("rof_neg", tt.n, node)


def minimize_rof_xor_neg(tt: TruthTable):
    """Minimum ROF over {and, or, xor, not} counting every gate, NOTs included."""
    if tt.n > ROF_XOR_NEG_MAX_N:
        raise CapError(f"n={tt.n} exceeds {ROF_XOR_NEG_MAX_N}")
    base = minimize_rof_xor(tt).formula
    _, node = _place_negations(base)
    return result("rof_xor_neg", tt.n, node)


# -- literal enumeration, kept as a cross-check -------------------------


def rof_neg_by_flips(tt: TruthTable):
    """minimize_rof_neg by trying every subset of flipped gates."""
    base = lift_negations(minimize_boolean_rof(tt).formula)
    paths = boolean_paths(base)
    if len(paths) > FLIP_ENUM_MAX_GATES:
        raise CapError(f"{len(paths)} gates exceed the flip enumeration cap")
    best = None
    for bits in product((0, 1), repeat=len(paths)):
        cand = apply_flips(base, [p for p, b in zip(paths, bits) if b])
        key = (count_gates(cand, nots=True), serialize(cand))
        if best is None or key < best[0]:
            best = (key, cand)
    return result("rof_neg", tt.n, best[1])


def rof_xor_neg_by_flips(tt: TruthTable):
    """minimize_rof_xor_neg by the a-loop over every negation pattern and flip set."""
    best = None
    for a in range(1 << tt.n):
        try:
            fa = minimize_rof_xor_a(tt, a).formula
        except Reject:
            continue
        base = lift_negations(fa)
        paths = boolean_paths(base)
        for bits in product((0, 1), repeat=len(paths)):
            cand = erase_xor_not_pairs(apply_flips(base, [p for p, b in zip(paths, bits) if b]))
            key = (count_gates(cand, nots=True), serialize(cand))
            if best is None or key < best[0]:
                best = (key, cand)
    if best is None:
        raise Reject("indecomposable", "no negation pattern admits a read-once form")
    return result("rof_xor_neg", tt.n, best[1])
