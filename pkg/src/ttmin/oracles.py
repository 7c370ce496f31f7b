"""Exhaustive reference solvers used to validate the minimizers.

These work on whole functions rather than on the minimizers' regions:
each builds the table of minimum sizes for *every* function on n variables
by closing the set of representable functions under the model's node
constructor in order of increasing size.  They share no code with the
algorithms they check beyond table bit helpers.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from ttmin.core import full_mask, var_mask

INF = float("inf")


def _parity_mask(n, u):
    m = 0
    for j in range(n):
        if (u >> j) & 1:
            m ^= var_mask(n, j)
    return m


def _tree_closure(n: int, test_masks) -> dict[int, int]:
    """Minimum node count of a tree over the given point-set tests, for all f."""
    full = full_mask(n)
    best = {0: 1, full: 1}
    by_size = {1: [0, full]}
    total = 1 << (1 << n)
    size = 1
    while len(best) < total:
        size += 2
        found = []
        for s0 in range(1, size - 1, 2):
            s1 = size - 1 - s0
            for g0 in by_size.get(s0, ()):
                for g1 in by_size.get(s1, ()):
                    for m in test_masks:
                        f = (m & g1) | (full & ~m & g0)
                        if f not in best:
                            best[f] = size
                            found.append(f)
        by_size[size] = found
        if size > 4 * total:
            break
    return best


@lru_cache(maxsize=None)
def dt_sizes(n: int) -> dict[int, int]:
    return _tree_closure(n, [var_mask(n, j) for j in range(n)])


@lru_cache(maxsize=None)
def ldt_sizes(n: int, max_weight: int | None = None) -> dict[int, int]:
    us = [u for u in range(1, 1 << n) if max_weight is None or u.bit_count() <= max_weight]
    return _tree_closure(n, [_parity_mask(n, u) for u in us])


@lru_cache(maxsize=None)
def srodt_sizes(n: int) -> dict[int, int]:
    """Minimum symmetric read-once trees, by the set of variables still usable."""
    full = full_mask(n)

    def sym_masks(vars_):
        k = len(vars_)
        weight_sets = []
        for x in range(1 << n):
            weight_sets.append(sum((x >> v) & 1 for v in vars_))
        out = []
        for g in range(1, (1 << (k + 1)) - 1):
            m = 0
            for x in range(1 << n):
                if (g >> weight_sets[x]) & 1:
                    m |= 1 << x
            out.append(m)
        return out

    # best[V] maps function -> minimum size using only variables in V, each once per path
    best: dict[int, dict[int, int]] = {}
    for vmask in sorted(range(1 << n), key=lambda v: (v.bit_count(), v)):
        table = {0: 1, full: 1}
        vars_ = [j for j in range(n) if (vmask >> j) & 1]
        options = []
        for r in range(1, len(vars_) + 1):
            for a in combinations(vars_, r):
                rest = vmask & ~sum(1 << j for j in a)
                options.append((sym_masks(a), best[rest]))
        # children only use variables outside A, whose tables are final
        for masks, sub in options:
            items = list(sub.items())
            for g0, s0 in items:
                for g1, s1 in items:
                    s = 1 + s0 + s1
                    for m in masks:
                        f = (m & g1) | (full & ~m & g0)
                        if s < table.get(f, INF):
                            table[f] = s
        best[vmask] = table
    return best[(1 << n) - 1]


@lru_cache(maxsize=None)
def ldl_sizes(n: int) -> dict[int, int]:
    """Minimum list length for every function that has a linear decision list."""
    full = full_mask(n)
    tests = []
    for u in range(1, 1 << n):
        pm = _parity_mask(n, u)
        tests.extend([pm, full & ~pm])
    best = {0: 0, full: 0}
    frontier = [0, full]
    k = 0
    while frontier:
        k += 1
        nxt = []
        for g in frontier:
            for m in tests:
                for v in (0, 1):
                    f = (m if v else 0) | (g & ~m & full)
                    if f not in best:
                        best[f] = k
                        nxt.append(f)
        frontier = nxt
    return best


def _order2_closure(n: int, arithmetic: bool, targets) -> dict[int, int]:
    """Least leaf count of a well-formed order-2 formula, per function.

    Formulas are built bottom-up by leaf count.  A state keeps what later
    composition needs: the function, the top gate, the depth (0, 1 or
    "2 or more") and the variables read with their polarity.  A gate is
    well formed when every variable read by two or more of its children
    is read only inside children of depth <= 1, so that the sub-formula it
    induces at this gate has depth <= 2.  Adjacent gates differ.  In the
    arithmetic case leaves are positive, sums may carry a free constant 1,
    and a sum may have a single non-constant child.
    """
    full = full_mask(n)
    ops = ("add", "mul") if arithmetic else ("and", "or")
    best = {0: 0, full: 0}
    want = set(targets) - set(best)
    comp: dict[int, list] = {}
    part: dict[int, list] = {}
    seen_c, seen_p = set(), set()

    def merge_pol(p, q):
        out = []
        for a, b in zip(p, q):
            if a and b and a != b:
                return None
            out.append(a or b)
        return tuple(out)

    def add_comp(L, st):
        if st in seen_c:
            return False
        seen_c.add(st)
        comp.setdefault(L, []).append(st)
        if st[0] not in best:
            best[st[0]] = L
            want.discard(st[0])
        return True

    def add_part(L, st):
        if st in seen_p:
            return False
        seen_p.add(st)
        part.setdefault(L, []).append(st)
        return True

    def combine(op, acc, child_val):
        if op in ("and", "mul"):
            return acc & child_val
        if op == "or":
            return acc | child_val
        return acc ^ child_val

    def start(op, cs):
        val, top, dep, pol = cs
        cnt = tuple(1 if p else 0 for p in pol)
        deep = tuple(1 if (p and dep >= 2) else 0 for p in pol)
        return (op, val, pol, cnt, deep, 1, dep)

    def extend(ps, cs):
        op, acc, pol, cnt, deep, k, md = ps
        val, top, dep, cpol = cs
        npol = merge_pol(pol, cpol)
        if npol is None:
            return None
        ncnt, ndeep = [], []
        for j in range(n):
            c = min(2, cnt[j] + (1 if cpol[j] else 0))
            d = deep[j] or (1 if (cpol[j] and dep >= 2) else 0)
            if c >= 2 and d:
                return None
            ncnt.append(c)
            ndeep.append(d)
        return (op, combine(op, acc, val), npol, tuple(ncnt), tuple(ndeep), 2, max(md, dep))

    def finish(L, ps):
        op, acc, pol, cnt, deep, k, md = ps
        dep = min(2, md + 1)
        new = []
        if k >= 2:
            new.append((acc, op, dep, pol))
        if op == "add":
            new.append((acc ^ full, op, dep, pol))
        for st in new:
            if add_comp(L, st):
                spawn(L, st)

    def spawn(L, st):
        for op in ops:
            if st[1] != op:
                ps = start(op, st)
                if add_part(L, ps):
                    finish(L, ps)

    L = 0
    while want:
        L += 1
        if L > 4 * n * n + 8:
            break
        if L == 1:
            for j in range(n):
                for neg in ((0,) if arithmetic else (0, 1)):
                    m = var_mask(n, j)
                    pol = tuple((2 if neg else 1) if i == j else 0 for i in range(n))
                    st = (full & ~m if neg else m, "leaf", 0, pol)
                    if add_comp(1, st):
                        spawn(1, st)
            continue
        fresh = []
        for L1 in range(1, L):
            for ps in part.get(L1, ()):
                for cs in comp.get(L - L1, ()):
                    if cs[1] == ps[0]:
                        continue
                    nxt = extend(ps, cs)
                    if nxt is not None and add_part(L, nxt):
                        fresh.append(nxt)
        for ps in fresh:
            finish(L, ps)
    return best


@lru_cache(maxsize=None)
def uf2_sizes(n: int) -> dict[int, int]:
    """Least UF2 leaf count for every unate function on n variables."""
    from ttmin.core import TruthTable
    from ttmin.formulas.unate import is_unate

    targets = [v for v in range(1 << (1 << n)) if is_unate(TruthTable(n, v))]
    return _order2_closure(n, False, targets)


@lru_cache(maxsize=None)
def f2a_sizes(n: int) -> dict[int, int]:
    """Least arithmetic order-2 leaf count for every function on n variables."""
    return _order2_closure(n, True, range(1 << (1 << n)))
