"""Truth tables, partial truth tables and cube restrictions.

A table on ``n`` variables is stored as a Python int of ``2**n`` bits.  Bit
``i`` holds ``f(x)`` where bit ``j`` of ``i`` is the value of variable
``x_{j+1}`` (``x_1`` is the least significant index bit).  Variables are
addressed 0-based in the Python API and rendered 1-based in text output.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

MAX_VARS = 20
STAR = "*"
_STAR_CHARS = {"*", "★"}


class TableError(ValueError):
    """Malformed table, dimension mismatch or out-of-range variable."""


@lru_cache(maxsize=None)
def full_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


@lru_cache(maxsize=None)
def var_mask(n: int, j: int) -> int:
    """Bits of a table on ``n`` variables whose index has bit ``j`` set."""
    size = 1 << j
    period = size << 1
    block = ((1 << size) - 1) << size
    total = 1 << n
    return block * (full_mask(n) // ((1 << period) - 1)) if total >= period else 0


def _swap_adjacent(value: int, n: int, j: int) -> int:
    # exchange variables j and j+1
    shift = (1 << (j + 1)) - (1 << j)
    low = var_mask(n, j) & ~var_mask(n, j + 1)
    t = (value ^ (value >> shift)) & low
    return value ^ t ^ (t << shift)


def cofactor_value(value: int, n: int, j: int, b: int) -> int:
    """Table on n-1 variables of ``f`` with ``x_j = b``; other variables keep order."""
    for k in range(j, n - 1):
        value = _swap_adjacent(value, n, k)
    half = 1 << (n - 1)
    return (value >> (half * b)) & ((1 << half) - 1)


def expand_value(value: int, n: int, j: int) -> int:
    """Inverse of dropping a dummy variable: insert ``x_j`` (ignored) at position j."""
    half = 1 << n
    value = value | (value << half)
    for k in range(n - 1, j - 1, -1):
        value = _swap_adjacent(value, n + 1, k)
    return value


def depends_value(value: int, n: int, j: int) -> bool:
    m = var_mask(n, j)
    return ((value & m) >> (1 << j)) != (value & ~m & full_mask(n))


@dataclass(frozen=True)
class TruthTable:
    n: int
    value: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VARS:
            raise TableError(f"n={self.n} outside 0..{MAX_VARS}")
        if self.value < 0 or self.value > full_mask(self.n):
            raise TableError("table value has bits beyond 2**n entries")

    # construction -------------------------------------------------------
    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "TruthTable":
        n = _log2_exact(len(bits))
        value = 0
        for i, b in enumerate(bits):
            if b not in (0, 1, True, False):
                raise TableError(f"bit {b!r} at position {i}")
            if b:
                value |= 1 << i
        return cls(n, value)

    @classmethod
    def from_function(cls, n: int, fn) -> "TruthTable":
        """Tabulate ``fn(x)`` where ``x`` is a tuple of ``n`` bits (x_1 first)."""
        value = 0
        for i in range(1 << n):
            if fn(tuple((i >> j) & 1 for j in range(n))):
                value |= 1 << i
        return cls(n, value)

    @classmethod
    def constant(cls, bit: int, n: int = 0) -> "TruthTable":
        return cls(n, full_mask(n) if bit else 0)

    @classmethod
    def variable(cls, n: int, j: int) -> "TruthTable":
        return cls(n, var_mask(n, j))

    # basic views --------------------------------------------------------
    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def bits(self) -> list[int]:
        return [(self.value >> i) & 1 for i in range(self.size)]

    def __getitem__(self, index: int) -> int:
        if not 0 <= index < self.size:
            raise IndexError(index)
        return (self.value >> index) & 1

    def __str__(self) -> str:
        return "".join("1" if (self.value >> i) & 1 else "0" for i in range(self.size))

    def __repr__(self) -> str:
        text = str(self) if self.n <= 6 else f"<{self.size} bits>"
        return f"TruthTable(n={self.n}, {text})"

    def is_constant(self) -> bool:
        return self.value == 0 or self.value == full_mask(self.n)

    def constant_value(self) -> int | None:
        if self.value == 0:
            return 0
        if self.value == full_mask(self.n):
            return 1
        return None

    # boolean algebra ----------------------------------------------------
    def _check(self, other: "TruthTable") -> None:
        if other.n != self.n:
            raise TableError(f"dimension mismatch: {self.n} vs {other.n}")

    def __and__(self, other):
        self._check(other)
        return TruthTable(self.n, self.value & other.value)

    def __or__(self, other):
        self._check(other)
        return TruthTable(self.n, self.value | other.value)

    def __xor__(self, other):
        if isinstance(other, int):
            return ~self if other & 1 else self
        self._check(other)
        return TruthTable(self.n, self.value ^ other.value)

    def __invert__(self):
        return TruthTable(self.n, self.value ^ full_mask(self.n))

    # structure ----------------------------------------------------------
    def cofactor(self, j: int, b: int) -> "TruthTable":
        self._var(j)
        return TruthTable(self.n - 1, cofactor_value(self.value, self.n, j, b))

    def depends_on(self, j: int) -> bool:
        self._var(j)
        return depends_value(self.value, self.n, j)

    def support(self) -> list[int]:
        return [j for j in range(self.n) if depends_value(self.value, self.n, j)]

    def shift(self, a: Sequence[int] | int) -> "TruthTable":
        """``x -> f(x xor a)`` for a vector ``a`` (sequence or index-style int)."""
        if not isinstance(a, int):
            a = sum((bit & 1) << j for j, bit in enumerate(a))
        value = self.value
        for j in range(self.n):
            if (a >> j) & 1:
                m = var_mask(self.n, j)
                step = 1 << j
                value = ((value & m) >> step) | ((value & ~m & full_mask(self.n)) << step)
        return TruthTable(self.n, value)

    def embed(self, n: int, positions: Sequence[int]) -> "TruthTable":
        """Re-express on ``n`` variables; local variable k becomes ``positions[k]``."""
        if len(positions) != self.n:
            raise TableError("one position per variable required")
        value = 0
        for i in range(1 << n):
            local = 0
            for k, p in enumerate(positions):
                local |= ((i >> p) & 1) << k
            if (self.value >> local) & 1:
                value |= 1 << i
        return TruthTable(n, value)

    def _var(self, j: int) -> None:
        if not 0 <= j < self.n:
            raise TableError(f"variable index {j} out of range for n={self.n}")


@dataclass(frozen=True)
class PartialTruthTable:
    """Table over {0, 1, *}; ``care`` marks non-star positions, ``value`` their bits."""

    n: int
    care: int
    value: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VARS:
            raise TableError(f"n={self.n} outside 0..{MAX_VARS}")
        if self.value & ~self.care:
            raise TableError("value bits set on star positions")
        if self.care > full_mask(self.n):
            raise TableError("care bits beyond 2**n entries")

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def entries(self) -> list[str]:
        return [self.entry(i) for i in range(self.size)]

    def entry(self, i: int) -> str:
        if not (self.care >> i) & 1:
            return STAR
        return "1" if (self.value >> i) & 1 else "0"

    def ones(self) -> list[int]:
        return _positions(self.value)

    def zeros(self) -> list[int]:
        return _positions(self.care & ~self.value)

    def __str__(self) -> str:
        return "".join(self.entry(i) for i in range(self.size))


def _positions(value: int) -> list[int]:
    out = []
    while value:
        low = value & -value
        out.append(low.bit_length() - 1)
        value ^= low
    return out


def _log2_exact(length: int) -> int:
    if length < 1 or length & (length - 1):
        raise TableError(f"length {length} is not a power of two")
    n = length.bit_length() - 1
    if n > MAX_VARS:
        raise TableError(f"n={n} exceeds the maximum of {MAX_VARS}")
    return n


# operations ----------------------------------------------------------------

def from_text(s: str) -> TruthTable | PartialTruthTable:
    """Parse the table text format.

    An optional first line ``n=<k>`` is checked against the table length.
    A table containing ``*`` becomes a :class:`PartialTruthTable`.
    """
    lines = [ln.strip() for ln in s.strip().splitlines() if ln.strip()]
    if not lines:
        raise TableError("empty table text")
    declared = None
    if lines[0].startswith("n="):
        try:
            declared = int(lines[0][2:])
        except ValueError:
            raise TableError(f"bad header {lines[0]!r}") from None
        lines = lines[1:]
    body = "".join(lines)
    if len(body) < 2:
        raise TableError("a table needs at least two entries")
    n = _log2_exact(len(body))
    if declared is not None and declared != n:
        raise TableError(f"header says n={declared} but table has {len(body)} entries")
    care = value = 0
    for i, ch in enumerate(body):
        if ch == "1":
            care |= 1 << i
            value |= 1 << i
        elif ch == "0":
            care |= 1 << i
        elif ch not in _STAR_CHARS:
            raise TableError(f"illegal character {ch!r} at position {i}")
    if care == full_mask(n):
        return TruthTable(n, value)
    return PartialTruthTable(n, care, value)


def to_text(tt: TruthTable | PartialTruthTable, header: bool = True) -> str:
    body = str(tt)
    return f"n={tt.n}\n{body}\n" if header else body + "\n"


def parse_table(s: str) -> TruthTable:
    tt = from_text(s)
    if not isinstance(tt, TruthTable):
        raise TableError("a full truth table is required here")
    return tt


def index_of(a: Sequence[int]) -> int:
    return sum((bit & 1) << j for j, bit in enumerate(a))


def _assignment(a, n: int) -> int:
    if isinstance(a, str):
        a = [int(ch) for ch in a]
    a = list(a)
    if len(a) != n:
        raise TableError(f"assignment has {len(a)} bits, table has n={n}")
    if any(bit not in (0, 1) for bit in a):
        raise TableError("assignment bits must be 0 or 1")
    return index_of(a)


def evaluate(tt: TruthTable, a) -> int:
    """Value of ``tt`` on assignment ``a`` (sequence or string, x_1 first)."""
    return (tt.value >> _assignment(a, tt.n)) & 1


def _pattern(c, n: int) -> list[int | None]:
    out = []
    for ch in c:
        if ch in (None, STAR, "★"):
            out.append(None)
        elif ch in (0, 1, "0", "1"):
            out.append(int(ch))
        else:
            raise TableError(f"illegal cube entry {ch!r}")
    if len(out) != n:
        raise TableError(f"cube has length {len(out)}, table has n={n}")
    return out


def restrict(tt: TruthTable, c) -> TruthTable:
    """Fix the non-star positions of cube ``c``; free variables keep their order."""
    pattern = _pattern(c, tt.n)
    value, n = tt.value, tt.n
    for j in range(tt.n - 1, -1, -1):
        if pattern[j] is not None:
            value = cofactor_value(value, n, j, pattern[j])
            n -= 1
    return TruthTable(n, value)


def reduce_to_support(tt: TruthTable) -> tuple[TruthTable, list[int]]:
    """Drop dummy variables; returns the reduced table and surviving indices."""
    keep = tt.support()
    value, n = tt.value, tt.n
    for j in range(tt.n - 1, -1, -1):
        if j not in keep:
            value = cofactor_value(value, n, j, 0)
            n -= 1
    return TruthTable(n, value), keep


def equal_functional(a: TruthTable, b: TruthTable) -> bool:
    a._check(b)
    return a.value == b.value


def count_ones(tt: TruthTable) -> int:
    return tt.value.bit_count()


def consistent_with(p: PartialTruthTable, tt: TruthTable) -> bool:
    if p.n != tt.n:
        raise TableError(f"dimension mismatch: {p.n} vs {tt.n}")
    return (tt.value & p.care) == p.value


def all_tables(n: int) -> Iterable[TruthTable]:
    for v in range(1 << (1 << n)):
        yield TruthTable(n, v)


# named functions used throughout tests and examples
def AND(n: int = 2) -> TruthTable:
    return TruthTable(n, 1 << ((1 << n) - 1))


def OR(n: int = 2) -> TruthTable:
    return TruthTable(n, full_mask(n) ^ 1)


def PARITY(n: int) -> TruthTable:
    return TruthTable.from_function(n, lambda x: sum(x) & 1)


def MAJ(n: int = 3) -> TruthTable:
    return TruthTable.from_function(n, lambda x: 2 * sum(x) > n)
