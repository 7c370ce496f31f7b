"""Branching programs: reduced OBDDs, optimal variable order, and
mu-branching programs (each variable read at most once in the program).

Node ids are ints; the terminals are the strings "T0" and "T1".
Variable indices are 0-based here and printed 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass

from ttmin.core import TableError, TruthTable, cofactor_value, depends_value, full_mask, reduce_to_support, var_mask
from ttmin.trees.model import CapError, Reject

OBDD_MAX_N = 12

TERMINALS = ("T0", "T1")


@dataclass(frozen=True)
class BranchingProgram:
    n: int
    root: object
    nodes: tuple  # ((id, var, lo, hi), ...)
    kind: str = "bp"
    order: tuple | None = None

    @property
    def size(self) -> int:
        return len(self.nodes)

    def node_map(self) -> dict:
        return {i: (v, lo, hi) for i, v, lo, hi in self.nodes}

    def evaluate(self, a) -> int:
        x = a if isinstance(a, int) else sum((b & 1) << j for j, b in enumerate(a))
        nodes = self.node_map()
        cur = self.root
        steps = 0
        while cur not in TERMINALS:
            v, lo, hi = nodes[cur]
            cur = hi if (x >> v) & 1 else lo
            steps += 1
            if steps > len(nodes):
                raise ValueError("cycle in branching program")
        return 1 if cur == "T1" else 0

    def table(self) -> TruthTable:
        return TruthTable.from_bits([self.evaluate(x) for x in range(1 << self.n)])

    def layer_widths(self) -> list[int]:
        """Nodes per variable, in the program's order (or by index)."""
        order = self.order if self.order is not None else tuple(range(self.n))
        count = {v: 0 for v in order}
        for _, v, _, _ in self.nodes:
            count[v] += 1
        return [count[v] for v in order]

    def serialize(self) -> str:
        head = f"({self.kind} n={self.n}"
        if self.order is not None:
            head += " order=" + ",".join(str(v + 1) for v in self.order)
        lines = [head + f" root={self.root}"]
        for i, v, lo, hi in self.nodes:
            lines.append(f"  ({i} x{v + 1} {lo} {hi})")
        return "\n".join(lines) + ")"

    def to_dot(self) -> str:
        out = ["digraph bp {", '  T0 [shape=box,label="0"];', '  T1 [shape=box,label="1"];']
        for i, v, lo, hi in self.nodes:
            out.append(f'  n{i} [label="x{v + 1}"];')
        for i, v, lo, hi in self.nodes:
            for tgt, style in ((lo, "dashed"), (hi, "solid")):
                name = tgt if tgt in TERMINALS else f"n{tgt}"
                out.append(f"  n{i} -> {name} [style={style}];")
        out.append("}")
        return "\n".join(out)


def eval_bp(program: BranchingProgram, a) -> int:
    return program.evaluate(a)


def _check_order(order, n: int) -> tuple:
    order = tuple(order)
    if sorted(order) == list(range(n)):
        return order
    # 1-based orders are accepted too; they never coincide with a 0-based one
    if n and sorted(order) == list(range(1, n + 1)):
        return tuple(v - 1 for v in order)
    raise TableError(f"{order!r} is not a permutation of the {n} variables")


def obdd_build(tt: TruthTable, order) -> BranchingProgram:
    """Reduced OBDD of ``tt`` under ``order`` (top variable first)."""
    n = tt.n
    order = _check_order(order, n)
    full = full_mask(n)
    pos = {v: k for k, v in enumerate(order)}

    def label(g):
        # first variable in the order that g still reads
        for v in order:
            if depends_value(g, n, v):
                return v
        return None

    ids: dict[int, object] = {0: "T0", full: "T1"}
    by_level: dict[int, list[int]] = {}
    stack = [tt.value]
    seen = {tt.value}
    while stack:
        g = stack.pop()
        if g in (0, full):
            continue
        v = label(g)
        by_level.setdefault(pos[v], []).append(g)
        m = var_mask(n, v)
        s = 1 << v
        for h in ((g & ~m & full) | ((g & ~m & full) << s), (g & m) | ((g & m) >> s)):
            if h not in seen:
                seen.add(h)
                stack.append(h)
    nodes = []
    info = {}
    nid = 0
    for k in sorted(by_level):
        for g in sorted(by_level[k]):
            ids[g] = nid
            info[nid] = (g, order[k])
            nid += 1
    for i in range(nid):
        g, v = info[i]
        m = var_mask(n, v)
        s = 1 << v
        lo = (g & ~m & full) | ((g & ~m & full) << s)
        hi = (g & m) | ((g & m) >> s)
        nodes.append((i, v, ids[lo], ids[hi]))
    return BranchingProgram(n, ids[tt.value], tuple(nodes), "obdd", order)


def obdd_size(tt: TruthTable, order) -> int:
    return obdd_build(tt, order).size


def obdd_optimal_order(tt: TruthTable):
    """An order minimizing the reduced OBDD size, and that size.

    With the variable set S placed first, the level of v placed next holds
    one node per distinct cofactor of f over S that depends on v; that count
    does not depend on how S is ordered, so a DP over subsets is exact.
    Among optimal orders the lexicographically least is returned.
    """
    n = tt.n
    if n > OBDD_MAX_N:
        raise CapError(f"n={n} exceeds {OBDD_MAX_N} for the ordering DP")
    if n == 0:
        return (), 0
    cost = {}
    # cofactors over S, as tables on the variables outside S (index order)
    layer = {0: {tt.value}}
    for _ in range(n):
        nxt: dict[int, set] = {}
        for S, cofs in layer.items():
            rest = [v for v in range(n) if not (S >> v) & 1]
            k = len(rest)
            for local, v in enumerate(rest):
                cost[S, v] = sum(1 for g in cofs if depends_value(g, k, local))
                T = S | (1 << v)
                if T in nxt:
                    continue  # the cofactor set of T does not depend on the path
                bucket = nxt[T] = set()
                for g in cofs:
                    bucket.add(cofactor_value(g, k, local, 0))
                    bucket.add(cofactor_value(g, k, local, 1))
        layer = nxt
    full = (1 << n) - 1
    rest_cost = {full: 0}
    for S in sorted(range(full), key=lambda s: -s.bit_count()):
        rest_cost[S] = min(cost[S, v] + rest_cost[S | (1 << v)] for v in range(n) if not (S >> v) & 1)
    order = []
    S = 0
    while S != full:
        for v in range(n):
            if not (S >> v) & 1 and cost[S, v] + rest_cost[S | (1 << v)] == rest_cost[S]:
                order.append(v)
                S |= 1 << v
                break
    return tuple(order), rest_cost[0]


def mubp_construct(tt: TruthTable) -> BranchingProgram:
    """A mu-branching program, or Reject.

    Reading every variable once forces one node per variable, so a
    mu-BP for a function of its full support is a reduced OBDD of width 1
    at every level.  The search grows the set S of variables placed first,
    admitting v next only when exactly one cofactor of f over S depends
    on v.  Variables are tried by index with failed sets memoized, so the
    search is complete; the first success fixes the order.
    """
    if tt.is_constant():
        return BranchingProgram(tt.n, "T1" if tt.value else "T0", (), "mubp")
    red, keep = reduce_to_support(tt)
    k = red.n
    failed: set[int] = set()

    def search(S: int, cofs: frozenset, rest: tuple):
        if not rest:
            return []
        if S in failed:
            return None
        m = len(rest)
        for local, v in enumerate(rest):
            live = [g for g in cofs if depends_value(g, m, local)]
            if len(live) != 1:
                continue
            nxt = set()
            for g in cofs:
                nxt.add(cofactor_value(g, m, local, 0))
                nxt.add(cofactor_value(g, m, local, 1))
            tail = search(S | (1 << v), frozenset(nxt), rest[:local] + rest[local + 1:])
            if tail is not None:
                return [v] + tail
        failed.add(S)
        return None

    order = search(0, frozenset([red.value]), tuple(range(k)))
    if order is None:
        raise Reject("no-mubp", "every order has a level with two or more nodes")
    prog = obdd_build(red, order)
    nodes = tuple((i, keep[v], lo, hi) for i, v, lo, hi in prog.nodes)
    return BranchingProgram(tt.n, prog.root, nodes, "mubp", tuple(keep[v] for v in order))
