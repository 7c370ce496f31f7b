"""Linear decision trees over the lattice of affine subspaces."""

from __future__ import annotations

from dataclasses import dataclass

from ttmin.core import TruthTable, full_mask
from ttmin.trees.engine import minimize_over_tests
from ttmin.trees.model import CapError, LinearTest, TreeResult, parity_mask, vec_str

LDT_MAX_N = 6
LDT_C_MAX_N = 12


@dataclass(frozen=True)
class AffineSubspace:
    """{x : <a_i, x> = b_i} in reduced row-echelon form.

    Each row is an int: bits 0..n-1 hold a_i, bit n holds b_i.  Rows are
    reduced so every pivot (lowest set bit of a_i) appears in one row only,
    and sorted, which makes the form unique per subspace.
    """

    n: int
    rows: tuple

    @property
    def dim(self) -> int:
        return self.n - len(self.rows)

    @classmethod
    def from_constraints(cls, n: int, constraints) -> "AffineSubspace":
        rows = rref(n, [(u | (b << n)) for u, b in constraints])
        return cls(n, tuple(rows))

    @classmethod
    def from_points(cls, n: int, mask: int) -> "AffineSubspace":
        pts = _bits(mask)
        if not pts:
            raise ValueError("empty point set")
        base = pts[0]
        dirs = _basis([p ^ base for p in pts[1:]])
        size = 1 << len(dirs)
        if size != len(pts):
            raise ValueError("point set is not an affine subspace")
        cons = []
        for u in range(1, 1 << n):
            if all(((u & d).bit_count() & 1) == 0 for d in dirs):
                cons.append((u, (u & base).bit_count() & 1))
        return cls.from_constraints(n, cons)

    def points(self) -> int:
        full = full_mask(self.n)
        m = full
        for r in self.rows:
            u, b = r & ((1 << self.n) - 1), r >> self.n
            pm = parity_mask(self.n, u)
            m &= pm if b else full & ~pm
        return m

    def contains(self, x: int) -> bool:
        return all((((r & ((1 << self.n) - 1)) & x).bit_count() & 1) == r >> self.n
                   for r in self.rows)

    def __str__(self) -> str:
        if not self.rows:
            return "[]"
        return "[" + "; ".join(f"{vec_str(r & ((1 << self.n) - 1), self.n)}|{r >> self.n}"
                               for r in self.rows) + "]"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _basis(vectors) -> list[int]:
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return basis


def rref(n: int, rows) -> list[int]:
    """Reduced echelon form over GF(2); raises ValueError if inconsistent."""
    umask = (1 << n) - 1
    pivots: dict[int, int] = {}
    for r in rows:
        for p, pr in pivots.items():
            if (r >> p) & 1:
                r ^= pr
        if not r & umask:
            if r:
                raise ValueError("inconsistent constraints")
            continue
        p = (r & umask & -(r & umask)).bit_length() - 1
        for q in list(pivots):
            if (pivots[q] >> p) & 1:
                pivots[q] ^= r
        pivots[p] = r
    return sorted(pivots.values())


def test_vectors(n: int, max_weight: int | None = None) -> list[int]:
    return [u for u in range(1, 1 << n) if max_weight is None or u.bit_count() <= max_weight]


def _check_cap(n: int, max_weight: int | None) -> None:
    if max_weight is not None and max_weight < 1:
        raise ValueError("test weight bound must be at least 1")
    if max_weight is not None and max_weight <= 2:
        if n > LDT_C_MAX_N:
            raise CapError(f"n={n} exceeds {LDT_C_MAX_N} for weight-bounded lattices")
    elif n > LDT_MAX_N:
        raise CapError(f"n={n} exceeds {LDT_MAX_N} for the full affine lattice")


class LatticeGraph:
    """Layered graph of affine subspaces reachable by tests of bounded weight.

    Layer ``i`` (0-based here) holds the subspaces cut out by ``i``
    independent constraints.  Edges are generated on demand.
    """

    def __init__(self, n: int, max_weight: int | None = None):
        _check_cap(n, max_weight)
        self.n = n
        self.max_weight = max_weight
        self.vectors = test_vectors(n, max_weight)
        self._pm = {u: parity_mask(n, u) for u in self.vectors}
        layers = [[full_mask(n)]]
        for _ in range(n):
            seen: dict[int, None] = {}
            for region in layers[-1]:
                for _, child in self._children(region):
                    seen.setdefault(child)
            layers.append(sorted(seen))
        self.layers = layers

    def _children(self, region: int):
        for u in self.vectors:
            r1 = region & self._pm[u]
            if r1 and r1 != region:
                yield LinearTest(u, 1), r1
                yield LinearTest(u, 0), region ^ r1

    def out_edges(self, region: int):
        """(test, child region) pairs leaving ``region``."""
        return list(self._children(region))

    @property
    def layer_sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]

    def subspace(self, region: int) -> AffineSubspace:
        return AffineSubspace.from_points(self.n, region)


def build_affine_lattice(n: int, max_weight: int | None = None) -> LatticeGraph:
    return LatticeGraph(n, max_weight)


def _minimize(tt: TruthTable, max_weight, model: str) -> TreeResult:
    _check_cap(tt.n, max_weight)
    tests = [LinearTest(u, 1) for u in test_vectors(tt.n, max_weight)]
    tree, _ = minimize_over_tests(tt.value, tt.n, tests, full_mask(tt.n))
    return TreeResult(model, tt.n, tree)


def minimize_ldt(tt: TruthTable) -> TreeResult:
    return _minimize(tt, None, "ldt")


def minimize_ldt_c(tt: TruthTable, c: int) -> TreeResult:
    return _minimize(tt, c, "ldt_c")
