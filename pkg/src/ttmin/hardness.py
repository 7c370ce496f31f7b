"""Executable versions of two hardness reductions, with brute-force
solvers for both sides.

* set cover -> decision trees over an explicit test family, counted by
  the number of distinct tests;
* 3-partite set cover -> monotone DNF consistent with a partial table.

Set elements are 1-based; table positions are 0-based.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from ttmin.core import PartialTruthTable, TruthTable, full_mask, to_text, var_mask
from ttmin.trees.family import decide_test_family_tree
from ttmin.trees.model import CapError

INF = float("inf")
SC_MAX_SETS = 20
DNF_MAX_ONES = 20
PSC_MAX_N = 9


class InstanceError(ValueError):
    pass


@dataclass(frozen=True)
class SetCoverInstance:
    m: int
    sets: tuple  # tuple of frozensets over 1..m
    k: int
    partition: tuple | None = None  # three tuples of elements, for 3PSC

    @classmethod
    def make(cls, m, sets, k, partition=None):
        sets = tuple(frozenset(s) for s in sets)
        part = None if partition is None else tuple(tuple(sorted(b)) for b in partition)
        inst = cls(m, sets, k, part)
        inst.check()
        return inst

    def check(self):
        if self.m < 1:
            raise InstanceError("universe must be nonempty")
        for s in self.sets:
            if not s:
                raise InstanceError("empty set")
            if not all(isinstance(d, int) and 1 <= d <= self.m for d in s):
                raise InstanceError(f"set {sorted(s)} leaves 1..{self.m}")

    def to_text(self) -> str:
        sets = "; ".join(",".join(str(d) for d in sorted(s)) for s in self.sets)
        out = f"{self.m}\n{self.k}\nsets: {sets}\n"
        if self.partition is not None:
            out += "partition: " + "; ".join(",".join(map(str, b)) for b in self.partition) + "\n"
        return out


def parse_sets(text: str) -> list[frozenset]:
    """'1,2; 3' -> [{1, 2}, {3}]."""
    out = []
    for chunk in text.replace("|", ";").split(";"):
        chunk = chunk.strip()
        if chunk:
            out.append(frozenset(int(d) for d in chunk.replace(" ", ",").split(",") if d))
    return out


def parse_instance(text: str) -> SetCoverInstance:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) < 3 or not lines[2].startswith("sets:"):
        raise InstanceError("expected 'm', 'k' and 'sets: ...' lines")
    m, k = int(lines[0]), int(lines[1])
    sets = parse_sets(lines[2][len("sets:"):])
    part = None
    for ln in lines[3:]:
        if ln.startswith("partition:"):
            part = [sorted(b) for b in parse_sets(ln[len("partition:"):])]
    return SetCoverInstance.make(m, sets, k, part)


@dataclass(frozen=True)
class ReducedTreeInstance:
    tt: TruthTable
    tests: tuple  # sorted position tuples
    k: int
    u: int

    def accepted(self) -> bool:
        return decide_test_family_tree(self.tt, [set(t) for t in self.tests], self.k)

    def to_json(self) -> dict:
        return {"tt": to_text(self.tt), "tests": [list(t) for t in self.tests], "k": self.k, "u": self.u}


@dataclass(frozen=True)
class ReducedDnfInstance:
    ptt: PartialTruthTable
    k: int
    q: int
    t: int
    V: tuple
    W: tuple
    A: tuple = field(default=(), repr=False)
    B: tuple = field(default=(), repr=False)

    def metadata(self) -> dict:
        return {"k": self.k, "q": self.q, "t": self.t, "V": list(self.V), "W": list(self.W),
                "A": len(self.A), "B": len(self.B)}


# -- set cover -> tree over tests ------------------------------------------


def reduce_sc_to_tree(inst: SetCoverInstance, offset: int = 0) -> ReducedTreeInstance:
    """T_f = 0^u 1^m with u the least positive value making u + m a power of two.

    Element d lands on position d - 1 + u.  ``offset`` shifts that map and
    exists only to build broken instances for negative controls.
    """
    m = inst.m
    size = 1
    while size - m < 1:
        size <<= 1
    u = size - m
    n = size.bit_length() - 1
    tt = TruthTable(n, ((1 << m) - 1) << u)
    tests = []
    for s in inst.sets:
        pos = sorted(d - 1 + u + offset for d in s)
        tests.append(tuple(p for p in pos if 0 <= p < size))
    return ReducedTreeInstance(tt, tuple(tests), inst.k, u)


def brute_set_cover(inst: SetCoverInstance):
    """Minimum number of sets covering 1..m, or infinity."""
    if len(inst.sets) > SC_MAX_SETS:
        raise CapError(f"{len(inst.sets)} sets exceed {SC_MAX_SETS}")
    universe = (1 << inst.m) - 1
    masks = [sum(1 << (d - 1) for d in s) for s in inst.sets]
    for r in range(len(masks) + 1):
        for combo in combinations(masks, r):
            acc = 0
            for x in combo:
                acc |= x
            if acc == universe:
                return r
    return INF


# -- 3PSC -> monotone DNF over a partial table ----------------------------


def check_3psc(inst: SetCoverInstance) -> None:
    if inst.partition is None or len(inst.partition) != 3:
        raise InstanceError("3PSC needs a partition into three blocks")
    flat = [d for b in inst.partition for d in b]
    if sorted(flat) != list(range(1, inst.m + 1)) or any(not b for b in inst.partition):
        raise InstanceError("the blocks must partition 1..m into nonempty parts")
    block = {d: i for i, b in enumerate(inst.partition) for d in b}
    if len(set(inst.sets)) != len(inst.sets):
        raise InstanceError("repeated set")
    for s in inst.sets:
        if len(s) != 3 or sorted(block[d] for d in s) != [0, 1, 2]:
            raise InstanceError(f"set {sorted(s)} must take one element from each block")
    covered = set().union(*inst.sets) if inst.sets else set()
    if covered != set(range(1, inst.m + 1)):
        raise InstanceError("the sets must cover 1..m")


def _q_for(n: int) -> int:
    q = 2
    while comb(q, q // 2) < n:
        q += 2
    return q


def _spread_down(table: int, t: int) -> int:
    """All points below some point of ``table`` (as a 2^t-bit set)."""
    for j in range(t):
        table |= (table & var_mask(t, j)) >> (1 << j)
    return table


def _spread_up(table: int, t: int) -> int:
    full = full_mask(t)
    for j in range(t):
        table |= ((table & ~var_mask(t, j)) << (1 << j)) & full
    return table


def reduce_3psc_to_mondnf_star(inst: SetCoverInstance, neighbours_only: bool = False) -> ReducedDnfInstance:
    """Partial table whose least monotone DNF has as many terms as a least cover.

    f is 1 on V, 0 on A (one below each w) and 0 on B.  With
    ``neighbours_only=True``, B holds the in-neighbours of V not above any w.
    That B is too small: when three elements from different blocks
    pairwise share a set but never all three, the meet of their v's is an
    allowed term, and the DNF can beat every cover.  By default B holds
    every point below some v and above no w, which forces each useful term
    above some w and makes the reduction answer-preserving.
    """
    check_3psc(inst)
    n = inst.m
    if n > PSC_MAX_N:
        raise CapError(f"n={n} exceeds {PSC_MAX_N}")
    q = _q_for(n)
    t = 3 * q
    half = list(combinations(range(q), q // 2))
    block = {d: i for i, b in enumerate(inst.partition) for d in b}
    ones_q = (1 << q) - 1
    V = []
    for d in range(1, n + 1):
        pattern = sum(1 << j for j in half[d - 1])
        v = 0
        for bi in range(3):
            v |= (pattern if bi == block[d] else ones_q) << (bi * q)
        V.append(v)
    W = []
    for s in inst.sets:
        w = (1 << t) - 1
        for d in s:
            w &= V[d - 1]
        W.append(w)
    vtab = sum(1 << v for v in V)
    wtab = sum(1 << w for w in W)
    above_w = _spread_up(wtab, t)
    atab = 0
    for j in range(t):
        atab |= (wtab & var_mask(t, j)) >> (1 << j)
    if neighbours_only:
        below = 0
        for j in range(t):
            below |= (vtab & var_mask(t, j)) >> (1 << j)
    else:
        below = _spread_down(vtab, t) & ~vtab
    btab = below & ~above_w
    care = atab | btab | vtab
    ptt = PartialTruthTable(t, care, vtab)
    return ReducedDnfInstance(ptt, inst.k, q, t, tuple(V), tuple(W), tuple(_points(atab)), tuple(_points(btab)))


def _points(table: int) -> list[int]:
    out = []
    while table:
        b = table & -table
        out.append(b.bit_length() - 1)
        table ^= b
    return out


def weight_conditions(red: ReducedDnfInstance) -> bool:
    """Constant weights: every w has 3q/2 ones, every v has 2q + q/2."""
    q = red.q
    return (all(w.bit_count() == 3 * q // 2 for w in red.W)
            and all(v.bit_count() == 2 * q + q // 2 for v in red.V))


def membership_condition(inst: SetCoverInstance, red: ReducedDnfInstance) -> bool:
    """alpha in S_i  <=>  w^{S_i} <= v^alpha, for every pair."""
    for s, w in zip(inst.sets, red.W):
        for alpha in range(1, inst.m + 1):
            v = red.V[alpha - 1]
            if (alpha in s) != (w & v == w):
                return False
    return True


def brute_min_mondnf_partial(ptt: PartialTruthTable):
    """Fewest monotone terms consistent with every cared-for entry.

    A term may cover a 1-entry p only if it lies below p, and is allowed
    only if no 0-entry lies above it.  A group of 1-entries shares a term
    iff the meet of the group is allowed, so the answer is a minimum cover
    of the 1-entries by groups with allowed meets.
    """
    ones = ptt.ones()
    zeros = ptt.zeros()
    if len(ones) > DNF_MAX_ONES:
        raise CapError(f"{len(ones)} one-entries exceed {DNF_MAX_ONES}")
    if not ones:
        return 0

    def ok(term):
        return not any(term & z == term for z in zeros)

    if not all(ok(p) for p in ones):
        return INF
    # all allowed meets, grown one 1-entry at a time
    meets = {}
    frontier = []
    for i, p in enumerate(ones):
        if p not in meets:
            meets[p] = 0
            frontier.append(p)
    while frontier:
        nxt = []
        for mt in frontier:
            for p in ones:
                c = mt & p
                if c not in meets and ok(c):
                    meets[c] = 0
                    nxt.append(c)
        frontier = nxt
    covers = set()
    for mt in meets:
        covers.add(sum(1 << i for i, p in enumerate(ones) if mt & p == mt))
    # keep maximal cover sets only
    covers = sorted(covers, key=lambda c: -c.bit_count())
    maximal = []
    for c in covers:
        if not any(c | d == d for d in maximal):
            maximal.append(c)
    full = (1 << len(ones)) - 1
    dist = {0: 0}
    frontier = [0]
    steps = 0
    while frontier:
        steps += 1
        nxt = []
        for s in frontier:
            # cover the lowest uncovered entry first
            low = (full & ~s) & -(full & ~s)
            for c in maximal:
                if c & low:
                    t = s | c
                    if t == full:
                        return steps
                    if t not in dist:
                        dist[t] = steps
                        nxt.append(t)
        frontier = nxt
    return INF


# -- fuzz harness -------------------------------------------------------------


def random_sc_instance(rng: random.Random, max_m: int = 8, max_sets: int = 6) -> SetCoverInstance:
    m = rng.randint(1, max_m)
    count = rng.randint(1, max_sets)
    sets = []
    for _ in range(count):
        size = rng.randint(1, m)
        sets.append(frozenset(rng.sample(range(1, m + 1), size)))
    return SetCoverInstance.make(m, sets, 0)


def all_3psc_instances(max_n: int = 6):
    """Every valid instance with contiguous blocks, n <= max_n."""
    for n in range(3, max_n + 1):
        for a in range(1, n - 1):
            for b in range(1, n - a):
                blocks = (tuple(range(1, a + 1)), tuple(range(a + 1, a + b + 1)), tuple(range(a + b + 1, n + 1)))
                triples = [frozenset((x, y, z)) for x in blocks[0] for y in blocks[1] for z in blocks[2]]
                for mask in range(1, 1 << len(triples)):
                    sets = [tr for i, tr in enumerate(triples) if (mask >> i) & 1]
                    if set().union(*sets) == set(range(1, n + 1)):
                        yield SetCoverInstance.make(n, sets, 0, blocks)


def verify_reduction_pair(sc_instances=(), psc_instances=(), offset: int = 0, neighbours_only: bool = False) -> dict:
    """Check answer preservation on both reductions; failures are dumped.

    ``offset`` corrupts the tree reduction and ``neighbours_only`` shrinks the
    B set of the DNF reduction; both serve as negative controls.
    """
    report = {"sc_checked": 0, "psc_checked": 0, "failures": []}
    for inst in sc_instances:
        best = brute_set_cover(inst)
        for k in range(len(inst.sets) + 1):
            red = reduce_sc_to_tree(SetCoverInstance(inst.m, inst.sets, k), offset=offset)
            if (best <= k) != red.accepted():
                report["failures"].append({"kind": "sc", "instance": inst.to_text(), "k": k, "cover": best})
                break
        report["sc_checked"] += 1
    for inst in psc_instances:
        red = reduce_3psc_to_mondnf_star(inst, neighbours_only=neighbours_only)
        best = brute_set_cover(inst)
        got = brute_min_mondnf_partial(red.ptt)
        good = got == best and weight_conditions(red) and membership_condition(inst, red)
        if not good:
            report["failures"].append({"kind": "3psc", "instance": inst.to_text(), "cover": best, "dnf": got})
        report["psc_checked"] += 1
    report["ok"] = not report["failures"]
    return report
