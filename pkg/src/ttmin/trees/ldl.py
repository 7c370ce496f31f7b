"""Linear decision lists.

A list ``(t_1, v_1), ..., (t_r, v_r), (1, v)`` outputs the value of the
first satisfied test.  Its size is the number of non-constant tests.  Two
non-redundant lists for the same function have the same size, which pins
the size of any accepted function to the least k with 2^(n-k) dividing
|f^-1(1)|.
"""

from __future__ import annotations

from dataclasses import dataclass

from ttmin.core import TruthTable, count_ones, full_mask
from ttmin.trees.ldt import LDT_MAX_N
from ttmin.trees.model import CapError, LinearTest, Reject, parity_mask


class MalformedList(ValueError):
    pass


@dataclass(frozen=True)
class LinearDecisionList:
    n: int
    rules: tuple  # ((LinearTest, value), ...)
    default: int

    @property
    def size(self) -> int:
        return len(self.rules)

    @property
    def pairs(self) -> list:
        """All pairs; the final one carries ``None`` for the constant-1 test."""
        return list(self.rules) + [(None, self.default)]

    def evaluate(self, a) -> int:
        x = a if isinstance(a, int) else sum((b & 1) << j for j, b in enumerate(a))
        for test, v in self.rules:
            if test.holds(x):
                return v
        return self.default

    def table(self) -> int:
        full = full_mask(self.n)
        out = full if self.default else 0
        for test, v in reversed(self.rules):
            pts = test.points(self.n)
            out = (out & ~pts) | (pts if v else 0)
        return out & full

    def serialize(self) -> str:
        parts = [f"({t.label(self.n)} {v})" for t, v in self.rules]
        parts.append(f"((const 1) {self.default})")
        return "(ldl " + " ".join(parts) + ")"


def ldl_size_lower_bound(tt: TruthTable) -> int:
    """Least k with 2^(n-k) dividing the number of ones (0 for constants)."""
    c = count_ones(tt)
    if c == 0:
        return 0
    twos = (c & -c).bit_length() - 1
    return tt.n - min(twos, tt.n)


def _test_order(n: int) -> list[LinearTest]:
    us = sorted(range(1, 1 << n), key=lambda u: (u.bit_count(), u))
    return [LinearTest(u, b) for u in us for b in (0, 1)]


def minimize_ldl(tt: TruthTable) -> LinearDecisionList:
    """Some minimum list, or :class:`Reject` when f has no linear decision list.

    Searches affine subspaces: at each step a test whose satisfied half
    carries a constant value is emitted and the search continues on the
    other half.  Failures are memoized per subspace, so the search is
    complete, and every list it can return is non-redundant.
    """
    n = tt.n
    if n > LDT_MAX_N:
        raise CapError(f"n={n} exceeds {LDT_MAX_N} for the list search")
    f = tt.value
    tests = [(t, t.points(n)) for t in _test_order(n)]
    failed: set[int] = set()

    def search(region: int):
        fv = f & region
        if fv == 0 or fv == region:
            return [], (1 if fv else 0)
        if region in failed:
            return None
        for t, pts in tests:
            sel = region & pts
            if not sel or sel == region:
                continue
            fs = f & sel
            if fs != 0 and fs != sel:
                continue
            found = search(region ^ sel)
            if found is not None:
                rules, default = found
                return [(t, 1 if fs else 0)] + rules, default
        failed.add(region)
        return None

    found = search(full_mask(n))
    if found is None:
        raise Reject("no-ldl", "no linear decision list computes this function")
    rules, default = found
    return LinearDecisionList(n, tuple(rules), default)


def model_minimize_ldl(lst: LinearDecisionList) -> LinearDecisionList:
    """Drop tests dependent on earlier ones, then merge equal trailing leaves."""
    n = lst.n
    umask = (1 << n) - 1
    kept = []
    # pivot -> (row, parity forced on the path): reaching a rule means every
    # earlier kept test failed, i.e. <u, x> = 1 - b for each of them
    basis: dict[int, tuple[int, int]] = {}
    default = lst.default
    for test, v in lst.rules:
        if not isinstance(test, LinearTest) or test.u & ~umask or test.b not in (0, 1):
            raise MalformedList(f"bad test {test!r}")
        if v not in (0, 1):
            raise MalformedList(f"bad value {v!r}")
        u, par = test.u, 0
        for p in sorted(basis, reverse=True):
            if (u >> p) & 1:
                row, rp = basis[p]
                u ^= row
                par ^= rp
        if u == 0:
            if par == test.b:
                # always satisfied here: everything reaching it outputs v
                default = v
                break
            continue
        p = u.bit_length() - 1
        basis[p] = (u, par ^ 1 ^ test.b)
        kept.append((test, v))
    while kept and kept[-1][1] == default:
        kept.pop()
    return LinearDecisionList(n, tuple(kept), default)


def ldl_from_pairs(n: int, pairs) -> LinearDecisionList:
    """Build from ``[(u, b, v), ..., (None, v)]``; ``u`` as int or bit string."""
    if not pairs or pairs[-1][0] is not None:
        raise MalformedList("the last pair must carry the constant-1 test (None)")
    rules = []
    for item in pairs[:-1]:
        u, b, v = item
        if isinstance(u, str):
            u = sum(1 << j for j, ch in enumerate(u) if ch == "1")
        rules.append((LinearTest(u, b), v))
    return LinearDecisionList(n, tuple(rules), pairs[-1][1])
