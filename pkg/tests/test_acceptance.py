"""The thirteen acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL ...`` line straight to
the terminal and then asserts, so the log reads as a checklist.
"""

import random
import time
from itertools import combinations

import pytest

from ttmin import oracles
from ttmin.bp import mubp_construct, obdd_optimal_order
from ttmin.core import TruthTable, all_tables, count_ones
from ttmin.formulas import (
    constraint_space,
    count_gates,
    count_leaves,
    greedy_basis,
    is_unate,
    minimize_pi2a,
    minimize_rof_xor,
    minimize_unate_cnf,
    minimize_unate_dnf,
    pi2a_size,
    sigma2a,
    table_value,
)
from ttmin.formulas.formula import gate, lit
from ttmin.mlpoly import MultilinearPoly, commutator_delta, partial_derivative
from ttmin.suites import SUITES, dumps, run_suite
from ttmin.trees import Reject, ldl_size_lower_bound, minimize_dt, minimize_ldl, minimize_ldt_c


@pytest.fixture(scope="module")
def suite_runs():
    """Each suite twice, with wall times of the first run."""
    runs = {}
    for name in SUITES:
        t0 = time.perf_counter()
        first = run_suite(name)
        elapsed = time.perf_counter() - t0
        runs[name] = (first, run_suite(name), elapsed)
    return runs


@pytest.fixture
def line(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} {detail}")
        return ok

    return emit


def test_c01_trichotomy(suite_runs, line):
    rep, _, secs = suite_runs["trichotomy"]
    ok = rep["ok"] and rep["checked"]["functions"] == 65536 and secs < 60
    assert line(1, ok, f"{rep['checked']['functions']} functions, {rep['failures']} violations, {secs:.1f}s")


def test_c02_tree_oracles(suite_runs, line):
    rep, _, secs = suite_runs["oracles"]
    bad = {m: rep["failures_by_model"][m] for m in ("dt", "ldt", "srodt", "ldl")}
    ok = not any(bad.values()) and secs < 600
    assert line(2, ok, f"256 functions, mismatches {bad}")


def test_c03_ldt_c1_is_dt(line):
    bad = checked = 0
    for n in range(1, 4):
        for tt in all_tables(n):
            checked += 1
            bad += minimize_ldt_c(tt, 1).size != minimize_dt(tt).size
    assert line(3, bad == 0, f"{checked} functions, {bad} mismatches")


def test_c04_ldl_size_law(line):
    tables = [tt for n in range(1, 4) for tt in all_tables(n)]
    rng = random.Random(4)
    tables += [TruthTable(4, rng.getrandbits(16)) for _ in range(200)]
    accepted = bad = 0
    for tt in tables:
        try:
            size = minimize_ldl(tt).size
        except Reject:
            continue
        accepted += 1
        k = min(k for k in range(tt.n + 1) if count_ones(tt) % (1 << (tt.n - k)) == 0)
        bad += size != k or size != ldl_size_lower_bound(tt)
    assert line(4, bad == 0 and accepted > 0, f"{accepted} accepted of {len(tables)}, {bad} mismatches")


def test_c05_commutator_identities(line):
    rng = random.Random(5)
    bad = 0
    for _ in range(1000):
        n = rng.randint(2, 8)
        q = MultilinearPoly(n, rng.getrandbits(1 << n))
        i, j = rng.sample(range(n), 2)
        d2 = partial_derivative(partial_derivative(q, i), j)
        bad += d2 != partial_derivative(partial_derivative(q, j), i)
        for c in (0, 1):
            bad += commutator_delta(q + c, i, j) != commutator_delta(q, i, j) + d2 * c
    assert line(5, bad == 0, f"1000 polynomials, {bad} mismatches")


def random_rof(rng, n):
    vars_ = rng.sample(range(n), rng.randint(1, n))

    def build(vs):
        if len(vs) == 1:
            return lit(vs[0], rng.random() < 0.5)
        cut = rng.randint(1, len(vs) - 1)
        return gate(rng.choice(("and", "or", "xor")), [build(vs[:cut]), build(vs[cut:])])

    return build(vars_)


def test_c06_rof_round_trip(line):
    rng = random.Random(6)
    bad = 0
    for _ in range(500):
        n = rng.randint(1, 8)
        node = random_rof(rng, n)
        tt = TruthTable(n, table_value(node, n))
        r = minimize_rof_xor(tt)
        bad += r.table() != tt or r.size > count_gates(node)
    assert line(6, bad == 0, f"500 formulas, {bad} failures")


def _unate(rng, n):
    terms = [rng.getrandbits(n) or 1 for _ in range(rng.randint(1, 3))]
    tt = TruthTable.from_function(n, lambda a: int(any(all(a[j] for j in range(n) if (t >> j) & 1) for t in terms)))
    return tt.shift(rng.getrandbits(n))


def _arith(rng, n):
    if rng.random() < 0.5:
        return TruthTable(n, rng.getrandbits(1 << n) or 1)
    rows = [rng.getrandbits(n) for _ in range(rng.randint(0, n))]
    shift = rng.getrandbits(n)
    return TruthTable.from_bits([int(all(((r & (x ^ shift)).bit_count() & 1) == 0 for r in rows)) for x in range(1 << n)])


def _join(f1, f2):
    n = f1.n + f2.n
    return f1.embed(n, range(f1.n)), f2.embed(n, range(f1.n, n))


def test_c07_direct_products(line):
    rng = random.Random(7)
    leaves = lambda r: count_leaves(r.formula)  # noqa: E731
    bad = checks = 0
    for _ in range(200):
        n1 = rng.randint(1, 4)
        n2 = rng.randint(1, 8 - n1)
        # unate lemma
        f1, f2 = _unate(rng, n1), _unate(rng, n2)
        a, b = _join(f1, f2)
        g = a & b
        if not g.is_constant():
            checks += 2
            bad += leaves(minimize_unate_dnf(g)) < leaves(minimize_unate_dnf(f1)) + leaves(minimize_unate_dnf(f2))
            bad += leaves(minimize_unate_cnf(g)) != leaves(minimize_unate_cnf(f1)) + leaves(minimize_unate_cnf(f2))
        # arithmetic lemma
        f1, f2 = _arith(rng, n1), _arith(rng, n2)
        a, b = _join(f1, f2)
        s1, s2 = sigma2a(f1).size, sigma2a(f2).size
        checks += 2
        bad += sigma2a(a & b).size < s1 + s2
        bad += sigma2a(a ^ b).size != s1 + s2
        p1, p2 = pi2a_size(f1), pi2a_size(f2)
        if p1 is not None and p2 is not None:
            checks += 1
            bad += pi2a_size(a & b) != p1 + p2
            pt = pi2a_size(a ^ b)
            if pt is not None and not f1.is_constant() and not f2.is_constant():
                checks += 1
                bad += pt < p1 + p2
    assert line(7, bad == 0, f"200 pairs, {checks} law checks, {bad} violations")


def _span(vectors):
    out = {0}
    for v in vectors:
        out |= {x ^ v for x in out}
    return out


def test_c08_pi2a_basis(line):
    rng = random.Random(8)
    bad = done = 0
    while done < 100:
        n = rng.randint(1, 8)
        rows = [rng.getrandbits(n) for _ in range(rng.randint(1, 4))]
        space = sorted(_span(rows) - {0})
        if not space:
            continue
        done += 1
        dim = len(_span(rows)).bit_length() - 1
        best = min(sum(v.bit_count() for v in c) for c in combinations(space, dim) if len(_span(c)) == 1 << dim)
        basis = greedy_basis(space)
        bad += sum(v.bit_count() for v in basis) != best or len(basis) != dim
        # the same space as the constraints of an affine indicator
        shift = rng.getrandbits(n)
        f = TruthTable.from_bits([int(all(((r & (x ^ shift)).bit_count() & 1) == 0 for r in rows)) for x in range(1 << n)])
        bad += sorted(constraint_space(f)) != space or minimize_pi2a(f).size != best
    assert line(8, bad == 0, f"100 constraint spaces, {bad} mismatches")


def test_c09_uf2_f2a_oracles(suite_runs, line):
    rep, _, secs = suite_runs["oracles"]
    bad = {m: rep["failures_by_model"][m] for m in ("uf2", "f2a")}
    unate = sum(1 for tt in all_tables(3) if is_unate(tt))
    ok = not any(bad.values()) and len(oracles.uf2_sizes(3)) == unate and secs < 900
    assert line(9, ok, f"256 functions ({unate} unate), mismatches {bad}")


def test_c10_obdd_orders(suite_runs, line):
    rep, _, _ = suite_runs["obdd-orders"]
    assert line(10, rep["ok"] and rep["checked"]["tables"] == 250, f"{rep['checked']['tables']} tables n<=5, {rep['failures']} mismatches")


def test_c11_mubp_characterization(line):
    bad = checked = 0
    for n in range(1, 5):
        for tt in all_tables(n):
            checked += 1
            _, size = obdd_optimal_order(tt)
            width_one = size == len(tt.support())
            try:
                p = mubp_construct(tt)
                accepted = p.table() == tt and p.size == len(tt.support())
            except Reject:
                accepted = False
            bad += accepted != width_one
    assert line(11, bad == 0, f"{checked} functions, {bad} disagreements")


def test_c12_reductions(suite_runs, line):
    rep, _, secs = suite_runs["reductions"]
    c = rep["checked"]
    ok = rep["ok"] and c["sc_instances"] == 50 and c["psc_instances"] > 0 and secs < 600
    assert line(12, ok, f"{c['sc_instances']} SC and {c['psc_instances']} 3PSC instances, {rep['failures']} discrepancies")


def test_c13_determinism(suite_runs, line):
    differ = [name for name, (a, b, _) in suite_runs.items() if dumps(a) != dumps(b)]
    assert line(13, not differ, f"{len(suite_runs)} suites run twice, differing: {differ or 'none'}")
