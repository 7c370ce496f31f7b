"""Tree value types shared by the decision-tree minimizers.

A tree is a ``Leaf`` or a ``Node(test, lo, hi)``; ``hi`` is followed when
the test is satisfied.  Size is the total node count.  Each test renders
as a parenthesised label and can report the set of points where it holds
as a table-style bitmask.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ttmin.core import TableError, full_mask, var_mask


class CapError(ValueError):
    """Input exceeds the documented size cap of an algorithm."""


class Reject(Exception):
    """The function is outside the model class; ``reason`` is machine readable."""

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason
        self.detail = detail


def parity_mask(n: int, u: int) -> int:
    """Points x with <u, x> = 1."""
    m = 0
    for j in range(n):
        if (u >> j) & 1:
            m ^= var_mask(n, j)
    return m


def vec_str(u: int, n: int) -> str:
    return "".join("1" if (u >> j) & 1 else "0" for j in range(n))


@dataclass(frozen=True)
class VarTest:
    var: int

    def label(self, n: int) -> str:
        return f"(var {self.var + 1})"

    def points(self, n: int) -> int:
        return var_mask(n, self.var)

    def holds(self, x: int) -> bool:
        return bool((x >> self.var) & 1)


@dataclass(frozen=True)
class LinearTest:
    """The test <u, x> = b."""

    u: int
    b: int = 1

    def label(self, n: int) -> str:
        return f"(lin {vec_str(self.u, n)} b={self.b})"

    def points(self, n: int) -> int:
        m = parity_mask(n, self.u)
        return m if self.b else full_mask(n) & ~m

    def holds(self, x: int) -> bool:
        return ((self.u & x).bit_count() & 1) == self.b


@dataclass(frozen=True)
class SymTest:
    """Symmetric function ``g`` on variables ``vars``; g[w] is its value at weight w."""

    vars: tuple
    g: tuple

    def label(self, n: int) -> str:
        names = ",".join(str(v + 1) for v in self.vars)
        return f"(sym {{{names}}} {''.join(map(str, self.g))})"

    def points(self, n: int) -> int:
        m = 0
        for x in range(1 << n):
            if self.holds(x):
                m |= 1 << x
        return m

    def holds(self, x: int) -> bool:
        w = sum((x >> v) & 1 for v in self.vars)
        return bool(self.g[w])


@dataclass(frozen=True)
class SetTest:
    """Membership in an explicit point set, identified by its index in the input list."""

    index: int
    mask: int

    def label(self, n: int) -> str:
        return f"(test {self.index + 1})"

    def points(self, n: int) -> int:
        return self.mask

    def holds(self, x: int) -> bool:
        return bool((self.mask >> x) & 1)


@dataclass(frozen=True)
class Leaf:
    value: int

    size = 1

    def serialize(self, n: int) -> str:
        return f"(leaf {self.value})"

    def evaluate(self, x: int) -> int:
        return self.value

    def table(self, n: int) -> int:
        return full_mask(n) if self.value else 0

    def depth(self) -> int:
        return 0


@dataclass(frozen=True)
class Node:
    test: object
    lo: object
    hi: object

    @cached_property
    def size(self) -> int:
        return 1 + self.lo.size + self.hi.size

    def serialize(self, n: int) -> str:
        return f"(node {self.test.label(n)} {self.lo.serialize(n)} {self.hi.serialize(n)})"

    def evaluate(self, x: int) -> int:
        node = self
        while isinstance(node, Node):
            node = node.hi if node.test.holds(x) else node.lo
        return node.value

    def table(self, n: int) -> int:
        pts = self.test.points(n)
        return (pts & self.hi.table(n)) | (full_mask(n) & ~pts & self.lo.table(n))

    def depth(self) -> int:
        return 1 + max(self.lo.depth(), self.hi.depth())


@dataclass(frozen=True)
class TreeResult:
    """A minimized tree together with the dimension it is defined over."""

    model: str
    n: int
    tree: object

    @property
    def size(self) -> int:
        return self.tree.size

    def serialize(self) -> str:
        return self.tree.serialize(self.n)

    def evaluate(self, a) -> int:
        return self.tree.evaluate(_index(a, self.n))

    def table(self) -> int:
        return self.tree.table(self.n)

    def tests(self) -> list:
        out, stack = [], [self.tree]
        while stack:
            t = stack.pop()
            if isinstance(t, Node):
                out.append(t.test)
                stack.extend((t.hi, t.lo))
        return out


def _index(a, n: int) -> int:
    if isinstance(a, int):
        return a
    if isinstance(a, str):
        a = [int(c) for c in a]
    if len(a) != n:
        raise TableError(f"assignment has {len(a)} bits, expected {n}")
    return sum((b & 1) << j for j, b in enumerate(a))


def choose(best, cand, full_key):
    """Keep the smaller of two candidates ordered by (size, head, full serialization).

    Candidates are ``(size, head, payload)``.  ``full_key(payload)`` is only
    consulted when size and head tie, which keeps comparisons cheap.
    """
    if best is None:
        return cand
    if cand[:2] != best[:2]:
        return cand if cand[:2] < best[:2] else best
    if cand[2] == best[2]:
        return best
    return cand if full_key(cand[2]) < full_key(best[2]) else best
