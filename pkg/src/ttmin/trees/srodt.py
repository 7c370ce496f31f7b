"""Symmetric read-once decision trees.

A node applies a symmetric function g to a variable set A; no variable
may appear in two node sets on one root-to-leaf path.  Hence below a node
on A the subtrees cannot read A, and for each class {beta : g(beta|A) = b}
every extension beta must leave the same residual function.  The DP runs
over (free variables, residual function) pairs, which identifies cubes
whose restrictions coincide.
"""

from __future__ import annotations

from ttmin.core import TruthTable, full_mask, restrict
from ttmin.trees.model import CapError, Leaf, Node, SymTest, TreeResult, choose

SRODT_MAX_N = 4


class _SymDP:
    def __init__(self):
        self.memo: dict = {}
        self._ser: dict = {}

    def solve(self, free: tuple, h: int):
        key = (free, h)
        e = self.memo.get(key)
        if e is not None:
            return e
        k = len(free)
        if h == 0 or h == full_mask(k):
            e = (1, f"(leaf {1 if h else 0})", ("leaf", 1 if h else 0))
            self.memo[key] = e
            return e
        table = TruthTable(k, h)
        best = None
        for amask in range(1, 1 << k):
            alocal = [i for i in range(k) if (amask >> i) & 1]
            rest = tuple(free[i] for i in range(k) if not (amask >> i) & 1)
            per_weight: dict[int, int] = {}
            ok = True
            for beta in range(1 << len(alocal)):
                cube = ["*"] * k
                for pos, i in enumerate(alocal):
                    cube[i] = (beta >> pos) & 1
                r = restrict(table, cube).value
                w = beta.bit_count()
                if per_weight.setdefault(w, r) != r:
                    ok = False
                    break
            if not ok:
                continue
            values = sorted(set(per_weight.values()), key=lambda r: min(w for w in per_weight if per_weight[w] == r))
            if len(values) > 2:
                continue
            if len(values) == 1:
                child = self.solve(rest, values[0])
                best = choose(best, (child[0], child[1], ("alias", rest, values[0])), self._payload_serial)
                continue
            h0, h1 = values  # h0 is the residual at weight 0, so g(0) = 0
            g = tuple(0 if per_weight[w] == h0 else 1 for w in range(len(alocal) + 1))
            test = SymTest(tuple(free[i] for i in alocal), g)
            e0 = self.solve(rest, h0)
            e1 = self.solve(rest, h1)
            cand = (1 + e0[0] + e1[0], "(node " + test.label(0), ("node", test, rest, h0, h1))
            best = choose(best, cand, self._payload_serial)
        payload = best[2]
        if payload[0] == "alias":
            src = self.memo[(payload[1], payload[2])]
            e = (src[0], src[1], payload)
        else:
            e = best
        self.memo[key] = e
        return e

    def _payload_serial(self, payload) -> str:
        return self._tree_of(payload).serialize(0)

    def _tree_of(self, payload):
        if payload[0] == "leaf":
            return Leaf(payload[1])
        if payload[0] == "alias":
            return self.tree(payload[1], payload[2])
        _, test, rest, h0, h1 = payload
        return Node(test, self.tree(rest, h0), self.tree(rest, h1))

    def tree(self, free: tuple, h: int):
        return self._tree_of(self.memo[(free, h)][2])


def minimize_srodt(tt: TruthTable) -> TreeResult:
    if tt.n > SRODT_MAX_N:
        raise CapError(f"n={tt.n} exceeds {SRODT_MAX_N} for the symmetric-tree DP")
    dp = _SymDP()
    free = tuple(range(tt.n))
    dp.solve(free, tt.value)
    return TreeResult("srodt", tt.n, dp.tree(free, tt.value))
