"""Multilinear polynomials over GF(2) and variable-disjoint decompositions.

Coefficients are stored like truth tables: bit S of ``coeffs`` is the
coefficient of the monomial prod_{j in S} x_j, with S read as a variable
subset in the same bit order as table indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ttmin.core import TableError, TruthTable, full_mask, restrict, var_mask
from ttmin.kernels import delta_vanishes


class DecompositionError(ValueError):
    """Decomposition requested for an input outside its domain."""


@dataclass(frozen=True)
class MultilinearPoly:
    n: int
    coeffs: int

    def __post_init__(self):
        if self.coeffs < 0 or self.coeffs > full_mask(self.n):
            raise TableError("coefficient vector longer than 2**n")

    def monomials(self) -> list[int]:
        out, c = [], self.coeffs
        while c:
            low = c & -c
            out.append(low.bit_length() - 1)
            c ^= low
        return out

    @property
    def constant(self) -> int:
        return self.coeffs & 1

    def is_zero(self) -> bool:
        return self.coeffs == 0

    def degree(self) -> int:
        return max((s.bit_count() for s in self.monomials()), default=-1)

    def __add__(self, other):
        if isinstance(other, int):
            return MultilinearPoly(self.n, self.coeffs ^ (other & 1))
        _same(self, other)
        return MultilinearPoly(self.n, self.coeffs ^ other.coeffs)

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other):
        """Product reduced with x*x = x, i.e. the product of the functions."""
        if isinstance(other, int):
            return self if other & 1 else MultilinearPoly(self.n, 0)
        _same(self, other)
        a = to_truth_table(self).value & to_truth_table(other).value
        return MultilinearPoly(self.n, _mobius(a, self.n))

    def __str__(self) -> str:
        return format_poly(self)


def _same(p, q):
    if p.n != q.n:
        raise TableError(f"dimension mismatch: {p.n} vs {q.n}")


def _mobius(a: int, n: int) -> int:
    # the GF(2) subset transform is its own inverse
    full = full_mask(n)
    for j in range(n):
        a ^= (a & ~var_mask(n, j) & full) << (1 << j)
    return a


def to_multilinear(tt: TruthTable) -> MultilinearPoly:
    return MultilinearPoly(tt.n, _mobius(tt.value, tt.n))


def to_truth_table(p: MultilinearPoly) -> TruthTable:
    return TruthTable(p.n, _mobius(p.coeffs, p.n))


def from_monomials(n: int, monomials) -> MultilinearPoly:
    """Build from monomials given as iterables of 0-based variable indices."""
    c = 0
    for mono in monomials:
        c ^= 1 << sum(1 << j for j in set(mono))
    return MultilinearPoly(n, c)


def format_poly(p: MultilinearPoly) -> str:
    terms = []
    for s in p.monomials():
        if s == 0:
            terms.append("1")
        else:
            terms.append("*".join(f"x{j + 1}" for j in range(p.n) if (s >> j) & 1))
    return " + ".join(terms) if terms else "0"


def _check_var(p: MultilinearPoly, i: int) -> None:
    if not 0 <= i < p.n:
        raise TableError(f"variable index {i} out of range for n={p.n}")


def restrict_poly(p: MultilinearPoly, i: int, b: int) -> MultilinearPoly:
    """Substitute x_i = b; the result keeps n variables and omits x_i."""
    _check_var(p, i)
    m = var_mask(p.n, i)
    low = p.coeffs & ~m & full_mask(p.n)
    if b:
        low ^= (p.coeffs & m) >> (1 << i)
    return MultilinearPoly(p.n, low)


def partial_derivative(p: MultilinearPoly, i: int) -> MultilinearPoly:
    _check_var(p, i)
    return MultilinearPoly(p.n, (p.coeffs & var_mask(p.n, i)) >> (1 << i))


def _pair_restrictions(p, i, j):
    _check_var(p, i)
    _check_var(p, j)
    if i == j:
        raise DecompositionError("commutator needs two distinct variables")
    r = {}
    for a in (0, 1):
        for b in (0, 1):
            r[a, b] = restrict_poly(restrict_poly(p, i, a), j, b)
    return r


def commutator_delta(p: MultilinearPoly, i: int, j: int) -> MultilinearPoly:
    """P|11 * P|00 - P|10 * P|01 with products reduced by x*x = x.

    This is the commutator as a function of the remaining variables.  The
    decomposition test uses the unreduced product instead, see
    :func:`is_pair_decomposable`.
    """
    r = _pair_restrictions(p, i, j)
    return r[1, 1] * r[0, 0] + r[1, 0] * r[0, 1]


def _compress(s: int, keep: list[int]) -> int:
    out = 0
    for k, v in enumerate(keep):
        if (s >> v) & 1:
            out |= 1 << k
    return out


def is_pair_decomposable(p: MultilinearPoly, i: int, j: int) -> bool:
    """True iff no irreducible factor of p involves both x_i and x_j.

    Tested as exact vanishing of P|11 * P|00 - P|10 * P|01 where the
    products are formed without reducing squares: two multilinear
    polynomials can have a product that vanishes only after x*x = x is
    applied, so the reduced commutator is not a sound test.
    """
    r = _pair_restrictions(p, i, j)
    keep = [v for v in range(p.n) if v not in (i, j)]
    mono = {k: [_compress(s, keep) for s in q.monomials()] for k, q in r.items()}
    return delta_vanishes(mono[1, 1], mono[0, 0], mono[1, 0], mono[0, 1], len(keep))


# decompositions ------------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    op: str  # "AND", "OR" or "XOR"
    factors: tuple
    blocks: tuple
    constant: int = 0
    n: int = field(default=0)

    def recombine(self) -> TruthTable:
        acc = None
        for f, block in zip(self.factors, self.blocks):
            g = f.embed(self.n, block)
            if acc is None:
                acc = g
            elif self.op == "AND":
                acc = acc & g
            elif self.op == "OR":
                acc = acc | g
            else:
                acc = acc ^ g
        if self.op == "XOR" and self.constant:
            acc = ~acc
        return acc


def _check_decomposable_input(tt: TruthTable) -> None:
    if tt.is_constant():
        raise DecompositionError("constant function")
    if tt.n < 2:
        raise DecompositionError("fewer than two variables")
    for j in range(tt.n):
        if not tt.depends_on(j):
            raise DecompositionError(f"dummy variable x{j + 1}; reduce to support first")


def _components(n: int, edges) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def _pointwise_delta_zero(tt: TruthTable, i: int, j: int) -> bool:
    # f11*f00 + f10*f01 as functions: a necessary condition for exact vanishing
    n, v = tt.n, tt.value
    mi, mj = var_mask(n, i), var_mask(n, j)
    full = full_mask(n)
    q = {}
    for a in (0, 1):
        for b in (0, 1):
            sel = (mi if a else full & ~mi) & (mj if b else full & ~mj)
            q[a, b] = v & sel
    si, sj = 1 << i, 1 << j
    f00 = q[0, 0]
    f10 = q[1, 0] >> si
    f01 = q[0, 1] >> sj
    f11 = q[1, 1] >> (si + sj)
    return (f11 & f00) == (f10 & f01)


def and_graph_edges(tt: TruthTable, p: MultilinearPoly | None = None):
    """Variable pairs whose commutator is non-zero (an irreducible factor spans both)."""
    if p is None:
        p = to_multilinear(tt)
    edges = []
    for i in range(tt.n):
        for j in range(i + 1, tt.n):
            if not _pointwise_delta_zero(tt, i, j) or not is_pair_decomposable(p, i, j):
                edges.append((i, j))
    return edges


def and_decompose(tt: TruthTable) -> Decomposition | None:
    _check_decomposable_input(tt)
    blocks = _components(tt.n, and_graph_edges(tt))
    if len(blocks) < 2:
        return None
    # lowest true point: its restriction to any set of blocks is the
    # smallest assignment there on which those factors are all 1
    low = tt.value & -tt.value
    point = low.bit_length() - 1
    factors = []
    for block in blocks:
        cube = ["*" if j in block else (point >> j) & 1 for j in range(tt.n)]
        factors.append(restrict(tt, cube))
    return Decomposition("AND", tuple(factors), tuple(tuple(b) for b in blocks), 0, tt.n)


def or_decompose(tt: TruthTable) -> Decomposition | None:
    _check_decomposable_input(tt)
    d = and_decompose(~tt)
    if d is None:
        return None
    return Decomposition("OR", tuple(~f for f in d.factors), d.blocks, 0, tt.n)


def xor_decompose(tt: TruthTable) -> Decomposition | None:
    _check_decomposable_input(tt)
    p = to_multilinear(tt)
    mons = [s for s in p.monomials() if s]
    edges = []
    for s in mons:
        vs = [j for j in range(tt.n) if (s >> j) & 1]
        edges.extend((vs[0], w) for w in vs[1:])
    blocks = _components(tt.n, edges)
    if len(blocks) < 2:
        return None
    factors = []
    for block in blocks:
        bm = sum(1 << j for j in block)
        c = 0
        for s in mons:
            if s & bm == s:
                c ^= 1 << _compress(s, block)
        factors.append(to_truth_table(MultilinearPoly(len(block), c)))
    return Decomposition("XOR", tuple(factors), tuple(tuple(b) for b in blocks), p.constant, tt.n)
