"""Trees counted by the number of distinct tests, over explicit test sets.

A tree over a chosen set of tests I computes f iff no point of f^-1(0)
shares its membership signature over I with a point of f^-1(1).  Deciding
whether some |I| <= k works is NP-hard, so this is exhaustive search for
small instances only.
"""

from __future__ import annotations

from itertools import combinations

from ttmin.core import TruthTable
from ttmin.trees.meta import test_masks
from ttmin.trees.model import CapError

MAX_TESTS = 16
MAX_K = 8


def separates(tt: TruthTable, masks) -> bool:
    zeros, ones = set(), set()
    for x in range(1 << tt.n):
        sig = tuple((m >> x) & 1 for m in masks)
        (ones if (tt.value >> x) & 1 else zeros).add(sig)
    return not (zeros & ones)


def find_test_family(tt: TruthTable, tests, k: int):
    """Indices of at most k tests separating f, or None."""
    masks = test_masks(tests, tt.n)
    if k < 0:
        return None
    k = min(k, len(masks))
    if len(masks) > MAX_TESTS:
        raise CapError(f"{len(masks)} tests exceed the cap of {MAX_TESTS}")
    if k > MAX_K:
        raise CapError(f"k={k} exceeds the cap of {MAX_K}")
    # supersets of a separating family still separate, so size k suffices
    for combo in combinations(range(len(masks)), k):
        if separates(tt, [masks[i] for i in combo]):
            return list(combo)
    return None


def decide_test_family_tree(tt: TruthTable, tests, k: int) -> bool:
    return find_test_family(tt, tests, k) is not None
