"""Command-line front end.

    ttmin min --model ldt --tt 01101001
    ttmin oracle --model dt --tt 00010111
    ttmin gen sc2tree --m 2 --sets 1,2 --k 1
    ttmin verify trichotomy
    ttmin eval --tt 0111 --a 10

Exit codes: 0 on success, 2 when the function lies outside the model class
(the reason is printed), 1 on usage, input or cap errors and on a failing
suite.  Set TTMIN_THREADS to cap the worker processes used by ``verify``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from ttmin.core import PartialTruthTable, TableError, TruthTable, from_text, to_text
from ttmin.trees.model import CapError, Reject

EXIT_OK, EXIT_USAGE, EXIT_REJECT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for rejections here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- model registry -----------------------------------------------------------


def _need(value, flag: str, model: str):
    if value is None:
        raise UsageError(f"model {model} needs {flag}")
    return value


def _min_obdd(tt, args):
    from ttmin.bp import obdd_build, obdd_optimal_order

    if args.order is not None:
        return obdd_build(tt, args.order)
    order, _ = obdd_optimal_order(tt)
    return obdd_build(tt, order)


def _min_ml(tt, args):
    from ttmin.mlpoly import to_multilinear

    return to_multilinear(tt)


def _registry():
    from ttmin import formulas as F
    from ttmin import trees as T
    from ttmin.bp import mubp_construct

    return {
        "dt": lambda tt, a: T.minimize_dt(tt),
        "ldt": lambda tt, a: T.minimize_ldt(tt),
        "ldt-c": lambda tt, a: T.minimize_ldt_c(tt, _need(a.c, "--c", "ldt-c")),
        "srodt": lambda tt, a: T.minimize_srodt(tt),
        "ldl": lambda tt, a: T.minimize_ldl(tt),
        "rof": lambda tt, a: F.minimize_boolean_rof(tt),
        "rofxor": lambda tt, a: F.minimize_rof_xor(tt),
        "rofxor-a": lambda tt, a: F.minimize_rof_xor_a(tt, _need(a.a, "--a", "rofxor-a")),
        "rofneg": lambda tt, a: F.minimize_rof_neg(tt),
        "rofxorneg": lambda tt, a: F.minimize_rof_xor_neg(tt),
        "mondnf": lambda tt, a: F.minimize_monotone_dnf(tt),
        "dnf": lambda tt, a: F.minimize_unate_dnf(tt),
        "cnf": lambda tt, a: F.minimize_unate_cnf(tt),
        "uf2": lambda tt, a: F.minimize_uf2(tt),
        "sigma2a": lambda tt, a: F.sigma2a(tt),
        "pi2a": lambda tt, a: F.minimize_pi2a(tt),
        "f2a": lambda tt, a: F.minimize_f2a(tt),
        "obdd": _min_obdd,
        "mubp": lambda tt, a: mubp_construct(tt),
        "ml": _min_ml,
    }


MODELS = (
    "dt", "ldt", "ldt-c", "srodt", "ldl", "rof", "rofxor", "rofxor-a", "rofneg", "rofxorneg",
    "mondnf", "dnf", "cnf", "uf2", "sigma2a", "pi2a", "f2a", "obdd", "mubp", "ml",
)

ORACLE_MODELS = ("dt", "ldt", "srodt", "ldl", "uf2", "f2a")
ORACLE_MAX_N = 3


def _describe(model: str, obj) -> dict:
    """Size and serialized form of any minimizer result."""
    from ttmin.mlpoly import MultilinearPoly, format_poly

    if isinstance(obj, MultilinearPoly):
        return {"model": model, "n": obj.n, "size": len(obj.monomials()), "degree": obj.degree(), "text": format_poly(obj)}
    out = {"model": model, "n": obj.n, "size": obj.size, "text": obj.serialize()}
    order = getattr(obj, "order", None)
    if order is not None:
        out["order"] = [v + 1 for v in order]
    return out


# -- input helpers ------------------------------------------------------------


def _read_table(args, partial_ok: bool = False):
    if (args.tt is None) == (args.file is None):
        raise UsageError("give exactly one of --tt and --file")
    text = args.tt if args.tt is not None else Path(args.file).read_text()
    tt = from_text(text)
    if isinstance(tt, PartialTruthTable) and not partial_ok:
        raise UsageError("a full truth table is required (no * entries)")
    if args.max_n is not None and tt.n > args.max_n:
        raise CapError(f"n={tt.n} exceeds --max-n {args.max_n}")
    return tt


def _parse_bits(text: str) -> list[int]:
    text = text.strip()
    parts = text.split(",") if "," in text else list(text)
    try:
        bits = [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"bad bit vector {text!r}") from None
    if any(b not in (0, 1) for b in bits):
        raise UsageError(f"bad bit vector {text!r}")
    return bits


def _parse_order(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"bad order {text!r}") from None


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(lines))


# -- commands -----------------------------------------------------------------


def cmd_min(args) -> int:
    tt = _read_table(args)
    if args.model not in MODELS:
        raise UsageError(f"unknown model {args.model!r}")
    obj = _registry()[args.model](tt, args)
    info = _describe(args.model, obj)
    lines = [f"model: {args.model}", f"size: {info['size']}"]
    if "order" in info:
        lines.append("order: " + ",".join(map(str, info["order"])))
    lines.append(info["text"])
    _emit(args, info, lines)
    return EXIT_OK


def cmd_oracle(args) -> int:
    from ttmin import oracles

    tt = _read_table(args)
    if args.model not in ORACLE_MODELS:
        raise UsageError(f"no oracle for model {args.model!r}; choose from {', '.join(ORACLE_MODELS)}")
    cap = ORACLE_MAX_N if args.max_n is None else args.max_n
    if tt.n > cap:
        raise CapError(f"n={tt.n} exceeds the oracle cap {cap}")
    table = {
        "dt": oracles.dt_sizes, "ldt": oracles.ldt_sizes, "srodt": oracles.srodt_sizes,
        "ldl": oracles.ldl_sizes, "uf2": oracles.uf2_sizes, "f2a": oracles.f2a_sizes,
    }[args.model](tt.n)
    if tt.value not in table:
        raise Reject("outside-class", f"no {args.model} of any size computes {tt}")
    size = table[tt.value]
    _emit(args, {"model": args.model, "n": tt.n, "size": size, "oracle": True}, [f"model: {args.model}", f"size: {size}"])
    return EXIT_OK


def _instance(args):
    from ttmin.hardness import InstanceError, SetCoverInstance, parse_instance, parse_sets, random_sc_instance

    try:
        if args.file is not None:
            return parse_instance(Path(args.file).read_text())
        if args.sets is None:
            rng = random.Random(args.seed)
            inst = random_sc_instance(rng)
            return SetCoverInstance.make(inst.m, inst.sets, args.k or 0)
        if args.m is None or args.k is None:
            raise UsageError("--sets needs --m and --k")
        part = [sorted(b) for b in parse_sets(args.partition)] if args.partition else None
        return SetCoverInstance.make(args.m, parse_sets(args.sets), args.k, part)
    except (InstanceError, ValueError) as e:
        if isinstance(e, UsageError):
            raise
        raise UsageError(str(e)) from None


def cmd_gen(args) -> int:
    from ttmin.hardness import reduce_3psc_to_mondnf_star, reduce_sc_to_tree

    inst = _instance(args)
    meta = {"kind": args.kind, "seed": args.seed, "instance": inst.to_text()}
    if args.kind == "sc":
        body = inst.to_text()
    elif args.kind == "sc2tree":
        red = reduce_sc_to_tree(inst)
        meta.update(red.to_json())
        body = to_text(red.tt)
    else:
        red = reduce_3psc_to_mondnf_star(inst)
        meta.update(red.metadata())
        body = to_text(red.ptt)
    if args.out:
        Path(args.out + (".txt" if args.kind == "sc" else ".tt")).write_text(body)
        Path(args.out + ".json").write_text(json.dumps(meta, sort_keys=True, indent=2) + "\n")
        print(f"wrote {args.out}.*")
    elif args.json:
        print(json.dumps({"body": body, "meta": meta}, sort_keys=True))
    else:
        sys.stdout.write(body if body.endswith("\n") else body + "\n")
        print(json.dumps(meta, sort_keys=True))
    return EXIT_OK


def cmd_verify(args) -> int:
    from ttmin.suites import DEFAULT_SEED, UnknownSuite, dumps, run_suite

    try:
        report = run_suite(args.suite, seed=DEFAULT_SEED if args.seed is None else args.seed)
    except UnknownSuite as e:
        raise UsageError(str(e)) from None
    if args.json:
        sys.stdout.write(dumps(report))
    else:
        state = "pass" if report["ok"] else "FAIL"
        counts = ", ".join(f"{k}={v}" for k, v in sorted(report["checked"].items()))
        print(f"{report['suite']}: {state} ({counts}; failures={report['failures']})")
    return EXIT_OK if report["ok"] else EXIT_USAGE


def cmd_eval(args) -> int:
    tt = _read_table(args)
    if args.a is None:
        raise UsageError("eval needs --a")
    a = args.a
    if len(a) != tt.n:
        raise UsageError(f"--a has {len(a)} bits but the table has n={tt.n}")
    x = sum(b << j for j, b in enumerate(a))
    value = tt[x]
    payload = {"n": tt.n, "a": a, "value": value}
    if args.model:
        if args.model not in MODELS or args.model in ("ml",):
            raise UsageError(f"cannot evaluate model {args.model!r}")
        obj = _registry()[args.model](tt, args)
        payload["model"] = args.model
        payload["model_value"] = obj.evaluate(a)
    _emit(args, payload, [str(payload.get("model_value", value))])
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ttmin", description="Exact truth-table minimization.",
                formatter_class=argparse.RawDescriptionHelpFormatter,
                epilog="exit codes: 0 ok, 1 usage/cap error or failing suite, 2 outside the model class")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def table_flags(sp):
        sp.add_argument("--tt", help="table text, entry i = f(i) with x1 the low bit of i")
        sp.add_argument("--file", help="file holding the table text (optional 'n=k' header)")
        sp.add_argument("--max-n", type=int, dest="max_n", help="refuse tables with more variables")
        sp.add_argument("--json", action="store_true", help="print one JSON object")

    def model_flags(sp):
        sp.add_argument("--c", type=int, help="max test weight for ldt-c")
        sp.add_argument("--order", type=_parse_order, help="variable order for obdd, e.g. 2,1,3")
        sp.add_argument("--a", type=_parse_bits, help="bit vector, x1 first, e.g. 101")

    sp = sub.add_parser("min", help="minimize in a model", description="Models: " + ", ".join(MODELS))
    sp.add_argument("--model", required=True, help="one of: " + ", ".join(MODELS))
    table_flags(sp)
    model_flags(sp)
    sp.set_defaults(func=cmd_min)

    sp = sub.add_parser("oracle", help="exhaustive minimum size (small n)")
    sp.add_argument("--model", required=True, help="one of: " + ", ".join(ORACLE_MODELS))
    table_flags(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("gen", help="write a set cover instance or a reduced instance")
    sp.add_argument("kind", choices=("sc", "sc2tree", "3psc2dnf"))
    sp.add_argument("--m", type=int, help="universe size, elements 1..m")
    sp.add_argument("--sets", help="sets as '1,2; 3'")
    sp.add_argument("--partition", help="3PSC blocks as '1; 2; 3'")
    sp.add_argument("--k", type=int)
    sp.add_argument("--file", help="instance file (m, k, 'sets:' lines)")
    sp.add_argument("--seed", type=int, default=0, help="seed for a random instance when --sets is absent")
    sp.add_argument("--out", help="path prefix for the table and the JSON sidecar")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="run an acceptance suite")
    sp.add_argument("suite", help="trichotomy, oracles, reductions or obdd-orders")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--json", action="store_true", help="print the full JSON report")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("eval", help="evaluate a table, or a minimized model, at one point")
    sp.add_argument("--model", help="minimize first and evaluate the result")
    table_flags(sp)
    model_flags(sp)
    sp.set_defaults(func=cmd_eval)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except Reject as r:
        if getattr(args, "json", False):
            print(json.dumps({"reject": r.reason, "detail": r.detail}, sort_keys=True))
        else:
            print(f"reject: {r.reason}" + (f" ({r.detail})" if r.detail else ""))
        return EXIT_REJECT
    except (UsageError, TableError, CapError, OSError) as e:
        print(f"ttmin: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
