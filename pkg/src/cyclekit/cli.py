"""``cyclekit`` command-line front end."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from fractions import Fraction
from math import factorial

from . import btd as btd_mod
from ._parallel import THREADS_ENV
from .aset import CycleLengthSet, aset_from_members, complement_aset, make_aset
from .characters import (
    Hook,
    hook_character_lemma,
    hooks_of,
    mn_character,
    partitions_of,
    product_class_prob,
    q_by_characters,
    dimension,
)
from .oracle import (
    count_no_backstep_cycles,
    count_one_odd_cycle,
    product_class_distribution,
    q_bruteforce,
    q_montecarlo,
)
from .permcore import CycleType, Permutation, class_size
from .probs import p_closed, p_closed_divisible, p_partition_sum, p_series, pc_partition_sum
from .qformulas import (
    asymptotic_estimate,
    c_n_formula,
    derangement_q_sum,
    q_divisible,
    q_even,
    q_general,
    q_odd,
)


class UsageError(Exception):
    pass


def _frac(x: Fraction) -> dict[str, str]:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _emit(record: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(record) + "\n")
        return
    flat = {}
    for key, value in record.items():
        if isinstance(value, dict) and set(value) == {"num", "den"}:
            flat[key] = f"{value['num']}/{value['den']}"
        else:
            flat[key] = value
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(flat.keys())
        writer.writerow(flat.values())
        out.write(buf.getvalue())
    else:
        for key, value in flat.items():
            out.write(f"{key}: {value}\n")


def _rows(header: list[str], rows, out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", ",").split(",") if t]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


def _aset(spec: str, n: int) -> CycleLengthSet:
    try:
        return make_aset(spec, max(n, 1))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _one_line(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "," in text or " " in text:
        return tuple(_ints(text))
    return tuple(int(c) for c in text)


# subcommands ----------------------------------------------------------------


def cmd_prob(args, out) -> int:
    a = _aset(args.aset, args.n)
    if args.route == "series":
        value = p_series(a, args.n)[args.n]
    elif args.route == "partition":
        value = p_partition_sum(a, args.n)
    else:
        kind = a.descriptor
        if kind in ("even", "odd"):
            if kind == "even" and args.n % 2:
                value = Fraction(0)
            else:
                value = p_closed(kind, args.n)
        elif kind.startswith("div:"):
            d = int(kind[4:])
            value = p_closed_divisible(args.n, d) if args.n % d == 0 else Fraction(0)
        else:
            raise UsageError("closed route needs --aset even, odd or div:<d>")
    _emit({"n": args.n, "aset": a.descriptor, "route": args.route, "p": _frac(value), "float": float(value)}, args.format, out)
    return 0


def _q_record(res, count: bool = True) -> dict:
    record = {"n": res.n, "aset": res.aset, "q": _frac(res.value)}
    if count:
        record["count"] = str(res.numerator_count)
    record["float"] = float(res.value)
    return record


def cmd_q(args, out) -> int:
    formula = args.formula
    spec = args.aset
    if spec is None:
        if formula in ("even", "odd"):
            spec = formula
        elif formula.startswith("div:"):
            spec = formula
        else:
            raise UsageError("--aset is required for the general formula")
    a = _aset(spec, args.n)
    if formula == "general":
        res = q_general(a, args.n)
    elif formula == "even":
        res = q_even(args.n)
    elif formula == "odd":
        res = q_odd(args.n)
    elif formula.startswith("div:"):
        try:
            d = int(formula[4:])
        except ValueError:
            raise UsageError(f"bad divisor in {formula!r}") from None
        res = q_divisible(args.n, d)
    else:
        raise UsageError(f"unknown formula {formula!r}")
    _emit(_q_record(res), args.format, out)
    return 0


def cmd_oracle(args, out) -> int:
    a = _aset(args.aset, args.n)
    if args.dist:
        dist = product_class_distribution(args.n, max_n=args.max_n)
        rows = [(str(t), class_size(t), str(p), float(p)) for t, p in dist.entries.items()]
        _rows(["cycle_type", "class_size", "probability", "float"], rows, out)
        return 0
    if args.mc:
        res = q_montecarlo(a, args.n, args.trials, args.seed)
        record = {
            "n": args.n,
            "aset": a.descriptor,
            "trials": res.trials,
            "hits": res.hits,
            "estimate": res.estimate,
            "stderr": res.stderr,
            "seed": args.seed,
        }
        _emit(record, args.format, out)
        return 0
    _emit(_q_record(q_bruteforce(a, args.n, max_n=args.max_n)), args.format, out)
    return 0


def cmd_char(args, out) -> int:
    if args.product_dist:
        if args.n is None:
            raise UsageError("--product-dist needs --n")
        rows = []
        for lam in partitions_of(args.n):
            t = CycleType(lam)
            p = product_class_prob(t)
            size = class_size(t)
            rows.append((str(t), size, str(p), str(p * size), float(p * size)))
        _rows(["cycle_type", "class_size", "prob_each", "class_prob", "float"], rows, out)
        return 0
    if args.lam is None or args.cls is None:
        raise UsageError("char needs --lambda and --class (or --product-dist --n)")
    lam = tuple(sorted(_ints(args.lam), reverse=True))
    t = CycleType(_ints(args.cls))
    if sum(lam) != t.n:
        raise UsageError(f"|lambda|={sum(lam)} but the class has size {t.n}")
    record = {"lambda": ",".join(map(str, lam)), "class": str(t), "chi": mn_character(lam, t), "dimension": dimension(lam)}
    is_hook = len(lam) == 1 or all(p == 1 for p in lam[1:])
    if is_hook:
        record["hook_lemma"] = hook_character_lemma(Hook(t.n, lam[0], len(lam)), t)
    _emit(record, args.format, out)
    return 0


def cmd_btd(args, out) -> int:
    table = btd_mod.btd_bfs(args.n, max_n=args.max_n)
    did = False
    if args.perm is not None:
        u = _one_line(args.perm)
        try:
            Permutation(u)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if len(u) != args.n:
            raise UsageError(f"--perm has length {len(u)}, expected {args.n}")
        _emit({"perm": "".join(map(str, u)) if args.n < 10 else ",".join(map(str, u)), "btd": table.distance(u)}, args.format, out)
        did = True
    if args.verify_bound:
        rep = btd_mod.verify_lower_bound(args.n, max_n=args.max_n, table=table)
        record = {
            "n": rep.n,
            "threshold": rep.threshold,
            "count_hard": rep.count_hard,
            "bound": rep.bound,
            "holds": rep.holds,
            "vacuous": rep.vacuous,
        }
        _emit(record, args.format, out)
        did = True
    if args.dist or not did:
        _rows(["distance", "count"], sorted(btd_mod.btd_distribution(table).items()), out)
    return 0


def cmd_table(args, out) -> int:
    rows = []
    for n in range(args.n_min, args.n_max + 1, args.step):
        qe, qo = float(q_even(n).value), float(q_odd(n).value)
        est = asymptotic_estimate(n)
        rows.append((n, repr(qe), repr(qo), repr(est), repr(qe / est), repr(qo / est)))
    _rows(["n", "q_even", "q_odd", "asymptotic", "ratio_even", "ratio_odd"], rows, out)
    return 0


def run_verification(max_n: int, out) -> bool:
    """Cross-check every independent route up to ``max_n``; one line per check."""
    ok_all = True

    def report(name: str, ok: bool) -> None:
        nonlocal ok_all
        ok_all &= ok
        out.write(f"{'PASS' if ok else 'FAIL'} {name}\n")

    rng = random.Random(20240611)
    enum_top = min(max_n, 10)
    for n in range(2, enum_top + 1):
        sets = [make_aset(s, n) for s in ("even", "odd", "div:3", "div:4", "min:2")]
        sets += [aset_from_members([r for r in range(1, n + 1) if rng.random() < 0.5], n) for _ in range(20)]
        ok = all(q_general(a, n).value == q_bruteforce(a, n).value for a in sets)
        report(f"formula=oracle n={n} sets={len(sets)}", ok)

    spec_top = max(max_n, 30)
    ok = all(
        q_general(make_aset("even", n), n).value == q_even(n).value
        and q_general(make_aset("odd", n), n).value == q_odd(n).value
        for n in range(1, spec_top + 1)
    )
    report(f"general=even/odd formulas n<={spec_top}", ok)
    ok = all(q_general(make_aset(f"div:{d}", n), n).value == q_divisible(n, d).value for d in range(1, 6) for n in range(1, spec_top + 1))
    report(f"general=divisible formula d<=5 n<={spec_top}", ok)

    for n in range(1, min(max_n, 12) + 1):
        ok = all(
            hook_character_lemma(h, CycleType(lam)) == mn_character(h.partition, CycleType(lam))
            for h in hooks_of(n)
            for lam in partitions_of(n)
        )
        report(f"hook lemma=Murnaghan-Nakayama n={n}", ok)

    for n in range(2, enum_top + 1):
        dist = product_class_distribution(n)
        ok = all(product_class_prob(CycleType(lam)) * class_size(CycleType(lam)) == dist[CycleType(lam)] for lam in partitions_of(n))
        ok &= sum(dist.entries.values()) == 1
        ok &= q_by_characters(make_aset("even", n), n) == q_general(make_aset("even", n), n).value
        report(f"class probabilities=oracle distribution n={n}", ok)

    ok = all(derangement_q_sum(n) == c_n_formula(n) for n in range(2, 101))
    report("derangement double sum=inclusion-exclusion n<=100", ok)
    ok = all(count_no_backstep_cycles(n) == c_n_formula(n) for n in range(2, enum_top + 1))
    report(f"no-backstep cycle count=inclusion-exclusion n<={enum_top}", ok)

    ok = True
    for n in range(1, min(max_n, 8) + 1):
        rng_sets = [aset_from_members([r for r in range(1, n + 1) if rng.random() < 0.5], n) for _ in range(10)]
        for a in rng_sets:
            ok &= p_partition_sum(a, n) == p_series(a, n)[n]
            ok &= pc_partition_sum(a, n) == p_series(complement_aset(a), n)[n]
    report(f"p partition sums=series n<={min(max_n, 8)}", ok)

    boc_top = min(max_n, 9)
    ok = all(count_one_odd_cycle(n) == (2 * factorial(n) // (n + 2) if n % 2 == 0 else 0) for n in range(1, boc_top + 1))
    report(f"single odd cycle count=2n!/(n+2) n<={boc_top}", ok)

    for n in range(2, min(max_n, 9) + 1):
        table = btd_mod.btd_bfs(n)
        rep = btd_mod.verify_lower_bound(n, table=table)
        ok = rep.holds and btd_mod.check_table(table)
        if n >= 3:
            ok &= table.distance(tuple(range(n, 0, -1))) == -(-(n + 1) // 2)
        if n >= 5:
            ok &= table.max_distance <= 2 * n // 3
        report(f"block transposition bounds n={n} hard={rep.count_hard} bound={rep.bound}", ok)

    out.write(("ALL PASS" if ok_all else "FAILURES") + "\n")
    return ok_all


def cmd_verify(args, out) -> int:
    return 0 if run_verification(args.max_n, out) else 1


# parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclekit", description=__doc__)
    parser.add_argument("--threads", type=int, default=None, help=f"worker processes (default: ${THREADS_ENV} or CPU count)")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, default="json"):
        p.add_argument("--format", choices=["json", "csv", "plain"], default=default)

    p = sub.add_parser("prob", help="p_n(A) for a uniform permutation")
    p.add_argument("--aset", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--route", choices=["series", "partition", "closed"], default="series")
    fmt(p)
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("q", help="q_n(A) for the product of two n-cycles")
    p.add_argument("--aset")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--formula", default="general", help="general | even | odd | div:<d>")
    fmt(p)
    p.set_defaults(func=cmd_q)

    p = sub.add_parser("oracle", help="brute-force or Monte-Carlo ground truth")
    p.add_argument("--aset", default="set:")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mc", action="store_true")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dist", action="store_true")
    p.add_argument("--max-n", type=int, default=10)
    fmt(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("char", help="character values and class-product probabilities")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--class", dest="cls")
    p.add_argument("--product-dist", action="store_true")
    p.add_argument("--n", type=int)
    fmt(p)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("btd", help="block-transposition distances")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dist", action="store_true")
    p.add_argument("--verify-bound", action="store_true")
    p.add_argument("--perm")
    p.add_argument("--max-n", type=int, default=10)
    fmt(p)
    p.set_defaults(func=cmd_btd)

    p = sub.add_parser("verify", help="run the cross-validation suite")
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="q_even / q_odd sweep with asymptotic ratios")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--step", type=int, default=1)
    p.set_defaults(func=cmd_table)
    return parser


def run_cli(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads is not None:
        if args.threads < 1:
            print("cyclekit: --threads must be >= 1", file=sys.stderr)
            return 2
        os.environ[THREADS_ENV] = str(args.threads)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"cyclekit: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
