"""Exact truth-table minimization toolkit."""

from ttmin.core import (
    PartialTruthTable,
    TableError,
    TruthTable,
    consistent_with,
    count_ones,
    equal_functional,
    evaluate,
    from_text,
    reduce_to_support,
    restrict,
)

__version__ = "0.1.0"
