"""Acceptance suites with deterministic JSON reports.

Each suite returns a plain dict: the suite name, ``ok``, the counts of
what was checked and at most ``MAX_DUMP`` counterexamples.  Work is split
over processes (``TTMIN_THREADS`` caps how many), and results come back in
input order, so a report never depends on scheduling.
"""

from __future__ import annotations

import itertools
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor

from ttmin.bp import obdd_optimal_order, obdd_size
from ttmin.core import TruthTable, reduce_to_support
from ttmin.hardness import (
    SetCoverInstance,
    all_3psc_instances,
    brute_min_mondnf_partial,
    brute_set_cover,
    membership_condition,
    random_sc_instance,
    reduce_3psc_to_mondnf_star,
    reduce_sc_to_tree,
    weight_conditions,
)
from ttmin.mlpoly import and_decompose, or_decompose, xor_decompose

MAX_DUMP = 20
DEFAULT_SEED = 2024

SUITES = ("trichotomy", "oracles", "reductions", "obdd-orders")


class UnknownSuite(ValueError):
    pass


def threads() -> int:
    raw = os.environ.get("TTMIN_THREADS", "")
    if raw.strip():
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return max(1, min(8, os.cpu_count() or 1))


def _pmap(fn, items, chunk: int = 1):
    items = list(items)
    workers = min(threads(), max(1, len(items) // max(chunk, 1)))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def _report(name: str, checked: dict, failures: list, extra: dict | None = None) -> dict:
    out = {
        "suite": name,
        "ok": not failures,
        "checked": checked,
        "failures": len(failures),
        "counterexamples": failures[:MAX_DUMP],
    }
    if extra:
        out.update(extra)
    return out


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


# -- trichotomy ---------------------------------------------------------------


def _trichotomy_block(start: int) -> tuple[int, list]:
    checked, bad = 0, []
    for v in range(start, start + 4096):
        tt = TruthTable(4, v)
        if tt.is_constant():
            continue
        red, _ = reduce_to_support(tt)
        if red.n < 2:
            continue
        hits = [name for name, dec in (("and", and_decompose), ("or", or_decompose), ("xor", xor_decompose)) if dec(red) is not None]
        checked += 1
        if len(hits) > 1:
            bad.append({"table": str(tt), "decompositions": hits})
    return checked, bad


def suite_trichotomy(seed: int = DEFAULT_SEED) -> dict:
    """At most one of the and/or/xor decompositions exists, over all n=4 tables."""
    parts = _pmap(_trichotomy_block, range(0, 1 << 16, 4096))
    failures = [b for _, bs in parts for b in bs]
    nontrivial = sum(c for c, _ in parts)
    return _report("trichotomy", {"functions": 1 << 16, "decomposition_checked": nontrivial}, failures)


# -- oracles ------------------------------------------------------------------


def _oracle_one(v: int) -> list:
    from ttmin import oracles
    from ttmin.formulas import is_unate, minimize_f2a, minimize_uf2
    from ttmin.trees import Reject, minimize_dt, minimize_ldl, minimize_ldt, minimize_srodt

    n = 3
    tt = TruthTable(n, v)
    bad = []

    def cmp(model, got, want):
        if got != want:
            bad.append({"model": model, "table": str(tt), "got": got, "want": want})

    cmp("dt", minimize_dt(tt).size, oracles.dt_sizes(n)[v])
    cmp("ldt", minimize_ldt(tt).size, oracles.ldt_sizes(n)[v])
    cmp("srodt", minimize_srodt(tt).size, oracles.srodt_sizes(n)[v])
    try:
        got = minimize_ldl(tt).size
    except Reject:
        got = None
    cmp("ldl", got, oracles.ldl_sizes(n).get(v))
    if is_unate(tt):
        cmp("uf2", minimize_uf2(tt).size, oracles.uf2_sizes(n).get(v))
    elif v in oracles.uf2_sizes(n):
        cmp("uf2", None, oracles.uf2_sizes(n)[v])
    cmp("f2a", minimize_f2a(tt).size, oracles.f2a_sizes(n)[v])
    return bad


def suite_oracles(seed: int = DEFAULT_SEED) -> dict:
    """Every minimizer against exhaustive enumeration, all n=3 tables."""
    parts = _pmap(_oracle_one, range(256), chunk=16)
    failures = [b for bs in parts for b in bs]
    models = ["dt", "ldt", "srodt", "ldl", "uf2", "f2a"]
    by_model = {m: sum(1 for b in failures if b["model"] == m) for m in models}
    return _report("oracles", {"functions": 256, "models": models}, failures, {"failures_by_model": by_model})


# -- reductions ---------------------------------------------------------------


def _sc_one(text: str) -> list:
    from ttmin.hardness import parse_instance

    inst = parse_instance(text)
    best = brute_set_cover(inst)
    bad = []
    for k in range(len(inst.sets) + 1):
        red = reduce_sc_to_tree(SetCoverInstance(inst.m, inst.sets, k))
        if (best <= k) != red.accepted():
            bad.append({"kind": "sc", "instance": text, "k": k, "cover": best})
    return bad


def _psc_one(text: str) -> list:
    from ttmin.hardness import parse_instance

    inst = parse_instance(text)
    red = reduce_3psc_to_mondnf_star(inst)
    best = brute_set_cover(inst)
    got = brute_min_mondnf_partial(red.ptt)
    if got == best and weight_conditions(red) and membership_condition(inst, red):
        return []
    return [{"kind": "3psc", "instance": text, "cover": best, "dnf": got}]


def suite_reductions(seed: int = DEFAULT_SEED, sc_count: int = 50, psc_max_n: int = 6) -> dict:
    rng = random.Random(seed)
    sc = [random_sc_instance(rng).to_text() for _ in range(sc_count)]
    psc = [inst.to_text() for inst in all_3psc_instances(psc_max_n)]
    failures = [b for bs in _pmap(_sc_one, sc, chunk=4) for b in bs]
    failures += [b for bs in _pmap(_psc_one, psc, chunk=8) for b in bs]
    return _report("reductions", {"sc_instances": len(sc), "psc_instances": len(psc)}, failures, {"seed": seed})


# -- obdd orders --------------------------------------------------------------


def _obdd_one(job: tuple[int, int]) -> list:
    n, v = job
    tt = TruthTable(n, v)
    order, size = obdd_optimal_order(tt)
    brute = min(obdd_size(tt, p) for p in itertools.permutations(range(n)))
    bad = []
    if size != brute or obdd_size(tt, order) != size:
        bad.append({"table": str(tt), "dp": size, "brute": brute, "order": [j + 1 for j in order]})
    return bad


def suite_obdd_orders(seed: int = DEFAULT_SEED, per_n: int = 50, max_n: int = 5) -> dict:
    rng = random.Random(seed)
    jobs = [(n, rng.getrandbits(1 << n)) for n in range(1, max_n + 1) for _ in range(per_n)]
    failures = [b for bs in _pmap(_obdd_one, jobs, chunk=10) for b in bs]
    return _report("obdd-orders", {"tables": len(jobs), "max_n": max_n}, failures, {"seed": seed})


_RUNNERS = {
    "trichotomy": suite_trichotomy,
    "oracles": suite_oracles,
    "reductions": suite_reductions,
    "obdd-orders": suite_obdd_orders,
}


def run_suite(name: str, seed: int = DEFAULT_SEED) -> dict:
    if name not in _RUNNERS:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return _RUNNERS[name](seed=seed)
