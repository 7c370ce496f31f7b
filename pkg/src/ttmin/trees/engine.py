"""Bottom-up tree minimization over point sets reachable by a test family.

Every region is a set of points stored as a table-style bitmask, so two
regions are equal exactly when their masks are.  For linear tests the
reachable regions are the affine subspaces; for variable tests they are
the cubes.  The recursion visits regions top-down with memoization,
which computes the same values as a layer-by-layer sweep.
"""

from __future__ import annotations

import sys

from ttmin.trees.model import Leaf, Node, choose


class RegionDP:
    def __init__(self, f: int, n: int, tests):
        self.f = f
        self.n = n
        self.tests = [(t, t.points(n), t.label(n)) for t in tests]
        self.memo: dict[int, tuple] = {}
        self._ser: dict[int, str] = {}

    # entry layout: (size, head, func, kind, a, b)
    def solve(self, region: int):
        e = self.memo.get(region)
        if e is not None:
            return e
        fv = self.f & region
        if fv == 0 or fv == region:
            v = 1 if fv else 0
            e = (1, f"(leaf {v})", (1 << (1 << self.n)) - 1 if v else 0, "leaf", v, None)
            self.memo[region] = e
            return e
        best = None
        for idx, (t, pts, lab) in enumerate(self.tests):
            r1 = region & pts
            if not r1 or r1 == region:
                continue
            r0 = region ^ r1
            e0 = self.solve(r0)
            e1 = self.solve(r1)
            if e0 is None or e1 is None:
                continue
            if e0[2] == e1[2]:
                # children compute the same function: either one serves alone
                pick = choose((e0[0], e0[1], r0), (e1[0], e1[1], r1), self.serial)
                best = choose(best, (pick[0], pick[1], ("alias", pick[2])), self._payload_serial)
            cand = (1 + e0[0] + e1[0], "(node " + lab, ("node", idx, r0, r1))
            best = choose(best, cand, self._payload_serial)
        if best is None:
            self.memo[region] = None
            return None
        kind = best[2]
        if kind[0] == "alias":
            src = self.memo[kind[1]]
            e = (src[0], src[1], src[2], "alias", kind[1], None)
        else:
            _, idx, r0, r1 = kind
            pts = self.tests[idx][1]
            func = (pts & self.memo[r1][2]) | (~pts & self.memo[r0][2])
            e = (best[0], best[1], func, "node", idx, (r0, r1))
        self.memo[region] = e
        return e

    def _payload_serial(self, payload) -> str:
        if payload[0] == "alias":
            return self.serial(payload[1])
        _, idx, r0, r1 = payload
        return f"(node {self.tests[idx][2]} {self.serial(r0)} {self.serial(r1)})"

    def serial(self, region: int) -> str:
        s = self._ser.get(region)
        if s is None:
            s = self.tree(region).serialize(self.n)
            self._ser[region] = s
        return s

    def tree(self, region: int):
        e = self.memo[region]
        if e[3] == "leaf":
            return Leaf(e[4])
        if e[3] == "alias":
            return self.tree(e[4])
        r0, r1 = e[5]
        return Node(self.tests[e[4]][0], self.tree(r0), self.tree(r1))


def minimize_over_tests(f: int, n: int, tests, region: int):
    """Minimum tree for ``f`` on ``region`` using ``tests``; None if impossible."""
    limit = sys.getrecursionlimit()
    need = 4 * len(tests) + 100
    if need > limit:
        sys.setrecursionlimit(need)
    dp = RegionDP(f, n, tests)
    if dp.solve(region) is None:
        return None, dp
    return dp.tree(region), dp
