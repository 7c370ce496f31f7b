"""Formula-family minimizers: two-level forms, read-once formulas and
their order-2 and arithmetic generalizations."""

from ttmin.formulas.arith import (
    constraint_space,
    greedy_basis,
    is_affine_set,
    minimize_f2a,
    minimize_pi2a,
    pi2a_size,
    sigma2a,
)
from ttmin.formulas.formula import (
    Const,
    FormulaResult,
    Gate,
    Lit,
    count_gates,
    count_leaves,
    count_nots,
    evaluate,
    serialize,
    table_value,
    to_text,
)
from ttmin.formulas.rof import (
    erase_xor_not_pairs,
    flip,
    lift_negations,
    minimize_boolean_rof,
    minimize_rof_neg,
    minimize_rof_xor,
    minimize_rof_xor_a,
    minimize_rof_xor_neg,
    rof_neg_by_flips,
    rof_xor_neg_by_flips,
)
from ttmin.formulas.uf2 import minimize_uf2
from ttmin.formulas.unate import (
    UnateOrientation,
    find_unate_orientation,
    is_monotone,
    is_unate,
    minimal_true_points,
    minimize_monotone_dnf,
    minimize_unate_cnf,
    minimize_unate_dnf,
)
