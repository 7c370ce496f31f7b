"""Minimum decision trees over an explicitly given family of tests."""

from __future__ import annotations

from ttmin.core import TableError, TruthTable, full_mask
from ttmin.trees.engine import minimize_over_tests
from ttmin.trees.model import Reject, SetTest, TreeResult


def _as_mask(test, n: int) -> int:
    if isinstance(test, TruthTable):
        if test.n != n:
            raise TableError(f"test on {test.n} variables, function on {n}")
        return test.value
    if isinstance(test, int):
        if test < 0 or test > full_mask(n):
            raise TableError("test mask out of range")
        return test
    mask = 0
    for x in test:
        if not 0 <= x < (1 << n):
            raise TableError(f"point {x} outside 0..{(1 << n) - 1}")
        mask |= 1 << x
    return mask


def test_masks(tests, n: int) -> list[int]:
    """Tests as point masks; accepts tables, masks or iterables of point indices."""
    return [_as_mask(t, n) for t in tests]


def atoms(masks, n: int) -> list[int]:
    """Classes of points with identical membership in every test."""
    groups: dict[tuple, int] = {}
    for x in range(1 << n):
        sig = tuple((m >> x) & 1 for m in masks)
        groups[sig] = groups.get(sig, 0) | (1 << x)
    return list(groups.values())


def minimize_fixed_tests(tt: TruthTable, tests) -> TreeResult:
    """Minimum tree whose nodes are drawn from ``tests``.

    Raises :class:`Reject` when two points no test separates carry
    different values, since then no tree over these tests computes f.
    """
    masks = test_masks(tests, tt.n)
    for atom in atoms(masks, tt.n):
        fv = tt.value & atom
        if fv and fv != atom:
            raise Reject("indistinguishable", "points separated by no test take different values")
    family = [SetTest(i, m) for i, m in enumerate(masks)]
    tree, _ = minimize_over_tests(tt.value, tt.n, family, full_mask(tt.n))
    return TreeResult("fixed", tt.n, tree)
