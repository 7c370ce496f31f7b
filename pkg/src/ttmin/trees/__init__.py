"""Decision-tree family minimizers."""

from ttmin.trees.dt import minimize_dt
from ttmin.trees.family import decide_test_family_tree, find_test_family
from ttmin.trees.ldl import (
    LinearDecisionList,
    ldl_from_pairs,
    ldl_size_lower_bound,
    minimize_ldl,
    model_minimize_ldl,
)
from ttmin.trees.ldt import AffineSubspace, build_affine_lattice, minimize_ldt, minimize_ldt_c
from ttmin.trees.meta import minimize_fixed_tests
from ttmin.trees.model import CapError, LinearTest, Reject, SetTest, SymTest, TreeResult, VarTest
from ttmin.trees.srodt import minimize_srodt
