"""Formula trees shared by the formula-family minimizers.

Variables are 0-based internally and printed as x1, x2, ...  A negated
literal ``~x1`` is part of the leaf; a NOT *gate* is a node of its own and
is what the costly-negation models count.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ttmin.core import TruthTable, full_mask, var_mask

AND, OR, XOR, NOT, ADD, MUL = "and", "or", "xor", "not", "add", "mul"

_INFIX = {AND: " & ", OR: " | ", XOR: " ^ ", ADD: " + ", MUL: "*"}


@dataclass(frozen=True)
class Lit:
    var: int
    neg: bool = False


@dataclass(frozen=True)
class Const:
    bit: int


@dataclass(frozen=True)
class Gate:
    op: str
    children: tuple

    def __post_init__(self):
        if self.op == NOT and len(self.children) != 1:
            raise ValueError("a NOT gate has exactly one child")
        if self.op not in (AND, OR, XOR, NOT, ADD, MUL):
            raise ValueError(f"unknown gate {self.op!r}")


def lit(var: int, neg=False) -> Lit:
    return Lit(var, bool(neg))


def gate(op: str, children) -> "Lit | Const | Gate":
    """Gate over ``children`` with same-op children spliced in; one child collapses."""
    flat = []
    for c in children:
        if isinstance(c, Gate) and c.op == op and op != NOT:
            flat.extend(c.children)
        else:
            flat.append(c)
    if len(flat) == 1 and op != NOT:
        return flat[0]
    return Gate(op, tuple(flat))


def negate(node):
    """Toggle a NOT gate on top of ``node``."""
    if isinstance(node, Gate) and node.op == NOT:
        return node.children[0]
    return Gate(NOT, (node,))


def variables(node) -> set[int]:
    if isinstance(node, Lit):
        return {node.var}
    if isinstance(node, Const):
        return set()
    out: set[int] = set()
    for c in node.children:
        out |= variables(c)
    return out


def min_var(node) -> int:
    vs = variables(node)
    return min(vs) if vs else 1 << 30


def sort_children(node):
    """Children ordered by their smallest variable, recursively."""
    if not isinstance(node, Gate):
        return node
    kids = [sort_children(c) for c in node.children]
    kids.sort(key=lambda c: (min_var(c), serialize(c)))
    return Gate(node.op, tuple(kids))


def relabel(node, mapping):
    """Rename variable ``v`` to ``mapping[v]``."""
    if isinstance(node, Lit):
        return Lit(mapping[node.var], node.neg)
    if isinstance(node, Const):
        return node
    return Gate(node.op, tuple(relabel(c, mapping) for c in node.children))


def table_value(node, n: int) -> int:
    full = full_mask(n)
    if isinstance(node, Const):
        return full if node.bit else 0
    if isinstance(node, Lit):
        m = var_mask(n, node.var)
        return full & ~m if node.neg else m
    vals = [table_value(c, n) for c in node.children]
    if node.op == NOT:
        return full & ~vals[0]
    acc = vals[0]
    for v in vals[1:]:
        if node.op in (AND, MUL):
            acc &= v
        elif node.op == OR:
            acc |= v
        else:
            acc ^= v
    return acc


def evaluate(node, x: int) -> int:
    if isinstance(node, Const):
        return node.bit
    if isinstance(node, Lit):
        return ((x >> node.var) & 1) ^ int(node.neg)
    vals = [evaluate(c, x) for c in node.children]
    if node.op == NOT:
        return 1 - vals[0]
    if node.op in (AND, MUL):
        return int(all(vals))
    if node.op == OR:
        return int(any(vals))
    return sum(vals) & 1


def serialize(node) -> str:
    if isinstance(node, Const):
        return str(node.bit)
    if isinstance(node, Lit):
        return ("~" if node.neg else "") + f"x{node.var + 1}"
    return "(" + node.op + " " + " ".join(serialize(c) for c in node.children) + ")"


def to_text(node) -> str:
    """Infix rendering: & | ^ for boolean gates, + * over GF(2), ~ for NOT."""
    if not isinstance(node, Gate):
        return serialize(node)
    if node.op == NOT:
        inner = to_text(node.children[0])
        return "~" + (inner if not isinstance(node.children[0], Gate) else f"({inner})")
    parts = []
    for c in node.children:
        s = to_text(c)
        # products inside sums and ands inside ors need no brackets
        if isinstance(c, Gate) and c.op != NOT and (node.op, c.op) not in ((OR, AND), (ADD, MUL)):
            s = f"({s})"
        parts.append(s)
    return _INFIX[node.op].join(parts)


def count_leaves(node) -> int:
    """Variable leaves; constants are free."""
    if isinstance(node, Lit):
        return 1
    if isinstance(node, Const):
        return 0
    return sum(count_leaves(c) for c in node.children)


def count_gates(node, nots: bool = False) -> int:
    """Binary-or-wider gates, plus NOT gates when ``nots``."""
    if not isinstance(node, Gate):
        return 0
    own = 1 if node.op != NOT or nots else 0
    return own + sum(count_gates(c, nots) for c in node.children)


def count_nots(node) -> int:
    if not isinstance(node, Gate):
        return 0
    return int(node.op == NOT) + sum(count_nots(c) for c in node.children)


def depth(node) -> int:
    if not isinstance(node, Gate):
        return 0
    return 1 + max(depth(c) for c in node.children)


# size measure per model
MEASURES = {
    "rof": "gates",
    "rof_xor": "gates",
    "rof_xor_a": "gates",
    "rof_neg": "gates+nots",
    "rof_xor_neg": "gates+nots",
    "dnf": "terms",
    "cnf": "clauses",
    "uf2": "leaves",
    "sigma2a": "leaves",
    "pi2a": "leaves",
    "f2a": "leaves",
}


def measure(model: str, node) -> int:
    kind = MEASURES[model]
    if kind == "gates":
        return count_gates(node)
    if kind == "gates+nots":
        return count_gates(node, nots=True)
    if kind == "leaves":
        return count_leaves(node)
    raise ValueError(f"{model} is sized by its term list")


@dataclass(frozen=True)
class FormulaResult:
    model: str
    n: int
    formula: object
    size: int
    terms: tuple | None = field(default=None, compare=False)

    @property
    def measure(self) -> str:
        return MEASURES[self.model]

    @property
    def leaves(self) -> int:
        return count_leaves(self.formula)

    @property
    def nots(self) -> int:
        return count_nots(self.formula)

    def serialize(self) -> str:
        return serialize(self.formula)

    def to_text(self) -> str:
        return to_text(self.formula)

    def table(self) -> TruthTable:
        return TruthTable(self.n, table_value(self.formula, self.n))

    def evaluate(self, a) -> int:
        x = a if isinstance(a, int) else sum((b & 1) << j for j, b in enumerate(a))
        return evaluate(self.formula, x)

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "n": self.n,
            "measure": self.measure,
            "size": self.size,
            "leaves": self.leaves,
            "formula": self.serialize(),
            "text": self.to_text(),
        }


def result(model: str, n: int, node, size: int | None = None, terms=None) -> FormulaResult:
    if size is None:
        size = measure(model, node)
    return FormulaResult(model, n, node, size, terms)
