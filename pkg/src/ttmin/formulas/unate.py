"""Monotone and unate two-level forms.

For a monotone f the minimal DNF is the disjunction of its minimal true
points, each read as the conjunction of the coordinates set to 1.  A unate
f becomes monotone after flipping the coordinates in which it decreases.
"""

from __future__ import annotations

from dataclasses import dataclass

from ttmin.core import TruthTable, full_mask, var_mask
from ttmin.formulas.formula import AND, OR, Const, gate, lit, result
from ttmin.trees.model import Reject


@dataclass(frozen=True)
class UnateOrientation:
    n: int
    a: tuple  # a[i] = 1 iff x_i appears negated

    @property
    def mask(self) -> int:
        return sum(b << i for i, b in enumerate(self.a))


def _decreasing(n: int, v: int, j: int) -> int:
    """Points x with x_j = 0, f(x) = 1 and f(x + e_j) = 0."""
    m, s = var_mask(n, j), 1 << j
    return (v & ~m) & ~(v >> s) & (full_mask(n) & ~m)


def is_monotone(tt: TruthTable) -> bool:
    return not any(_decreasing(tt.n, tt.value, j) for j in range(tt.n))


def minimal_true_points(tt: TruthTable) -> list[int]:
    n, v = tt.n, tt.value
    low = v
    for j in range(n):
        # drop points whose lower neighbour in direction j is also true
        low &= ~((v & ~var_mask(n, j)) << (1 << j))
    out = []
    while low:
        b = low & -low
        out.append(b.bit_length() - 1)
        low ^= b
    return out


def _terms_formula(terms, inner: str, outer: str):
    if not terms:
        return Const(0 if outer == OR else 1)
    parts = []
    for t in terms:
        if not t:
            return Const(1 if outer == OR else 0)
        parts.append(gate(inner, [lit(v, neg) for v, neg in t]))
    return gate(outer, parts)


def _monotone_terms(tt: TruthTable, a_mask: int = 0):
    terms = []
    for p in minimal_true_points(tt):
        terms.append(tuple((j, bool((a_mask >> j) & 1)) for j in range(tt.n) if (p >> j) & 1))
    # shorter terms first, then by the variables they read
    terms.sort(key=lambda t: (len(t), [v for v, _ in t]))
    return tuple(terms)


def minimize_monotone_dnf(tt: TruthTable):
    if not is_monotone(tt):
        raise Reject("not-monotone", "some hypercube edge goes from 1 down to 0")
    terms = _monotone_terms(tt)
    return result("dnf", tt.n, _terms_formula(terms, AND, OR), len(terms), terms)


def find_unate_orientation(tt: TruthTable) -> UnateOrientation:
    a = tuple(1 if _decreasing(tt.n, tt.value, j) else 0 for j in range(tt.n))
    o = UnateOrientation(tt.n, a)
    if not is_monotone(tt.shift(o.mask)):
        raise Reject("not-unate", "some variable is both increasing and decreasing")
    return o


def is_unate(tt: TruthTable) -> bool:
    try:
        find_unate_orientation(tt)
    except Reject:
        return False
    return True


def unate_dnf_terms(tt: TruthTable):
    o = find_unate_orientation(tt)
    return _monotone_terms(tt.shift(o.mask), o.mask)


def minimize_unate_dnf(tt: TruthTable):
    terms = unate_dnf_terms(tt)
    return result("dnf", tt.n, _terms_formula(terms, AND, OR), len(terms), terms)


def minimize_unate_cnf(tt: TruthTable):
    # clauses of f are the negated terms of the complement's DNF
    terms = unate_dnf_terms(~tt)
    clauses = tuple(tuple((v, not neg) for v, neg in t) for t in terms)
    return result("cnf", tt.n, _terms_formula(clauses, OR, AND), len(clauses), clauses)
