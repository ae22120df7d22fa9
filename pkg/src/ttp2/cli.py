"""Command-line surface: solve, validate, lb, oracle and bench.

Machine-readable JSON goes to stdout; --pretty switches to human tables.
Exit codes: 0 ok, 1 infeasible/quality failure, 2 input error.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
import time
from pathlib import Path

from .errors import DomainError, FormatError, ValidationError
from .even import build_even_template, normalize_packing, packing_chain
from .instance import parse_instance
from .matching import independent_lower_bound, min_weight_perfect_matching
from .odd import build_odd_template
from .oracle import BRUTE_FORCE_LIMIT, brute_force_optimal
from .ordering import run_rounds
from .schedule import parse_schedule_csv, render_schedule, total_distance, validate_schedule


def _report(name, n, lb, total, rounds, seed, elapsed_ms, construction, packing):
    gap = 100.0 * (total - lb) / lb if lb else 0.0
    return {
        "instance": name,
        "n": n,
        "lb": lb,
        "total": total,
        "gap_percent": round(gap, 2),
        "rounds": rounds,
        "seed": seed,
        "elapsed_ms": round(elapsed_ms, 1),
        "construction": construction,
        "packing": packing,
    }


def _emit(obj, pretty: bool):
    if pretty and isinstance(obj, dict):
        width = max(len(k) for k in obj)
        for k, v in obj.items():
            print(f"{k:<{width}}  {v}")
    else:
        print(json.dumps(obj))


def _solve_instance(inst, name, rounds, seed, derandomize_flag, packing_arg):
    """Shared solve path; returns (report dict, schedule)."""
    start = time.perf_counter()
    matching = min_weight_perfect_matching(inst)
    lb = independent_lower_bound(inst, matching).total
    n = inst.n

    if n <= BRUTE_FORCE_LIMIT:
        schedule, total = brute_force_optimal(inst, lower_bound=lb)
        elapsed = 1000 * (time.perf_counter() - start)
        return _report(name, n, lb, total, rounds, seed, elapsed, "brute", []), schedule

    if n % 4 == 0:
        if packing_arg == "auto":
            chain = packing_chain(n)
        else:
            chain = normalize_packing(n, int(packing_arg))
        template = build_even_template(n, chain)
        construction = "even" if chain == [1] else "even-dc"
    else:
        chain = []
        template = build_odd_template(n)
        construction = "odd"

    _, schedule, dist = run_rounds(
        inst,
        template,
        matching,
        rounds,
        base_seed=seed,
        lb=lb,
        include_derandomized=derandomize_flag,
    )
    elapsed = 1000 * (time.perf_counter() - start)
    return _report(name, n, lb, dist.total, rounds, seed, elapsed, construction, chain), schedule


def cmd_solve(args) -> int:
    path = Path(args.instance)
    try:
        inst = parse_instance(path.read_text())
    except (OSError, FormatError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if inst.n <= BRUTE_FORCE_LIMIT:
        print(f"note: n={inst.n} is solved exactly by brute force", file=sys.stderr)
    try:
        report, schedule = _solve_instance(
            inst, path.stem, args.rounds, args.seed, args.derandomize, args.packing
        )
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = path.with_suffix(".schedule.csv")
    out.write_text(render_schedule(schedule))
    report["schedule_csv"] = str(out)
    _emit(report, args.pretty)
    return 0 if validate_schedule(schedule).feasible else 1


def cmd_validate(args) -> int:
    try:
        schedule = parse_schedule_csv(Path(args.schedule).read_text())
        inst = parse_instance(Path(args.instance).read_text())
    except (OSError, FormatError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    feas = validate_schedule(schedule, k=args.k)
    matching = min_weight_perfect_matching(inst)
    lb = independent_lower_bound(inst, matching).total
    dist = total_distance(schedule, inst, lb=lb)
    _emit(
        {
            "feasible": feas.feasible,
            "violations": [list(v) for v in feas.violations],
            "total": dist.total,
            "per_team": list(dist.per_team),
            "lb": lb,
            "gap_percent": None if dist.lb_gap_percent is None else round(dist.lb_gap_percent, 2),
        },
        args.pretty,
    )
    return 0 if feas.feasible else 1


def cmd_lb(args) -> int:
    try:
        inst = parse_instance(Path(args.instance).read_text())
    except (OSError, FormatError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    matching = min_weight_perfect_matching(inst)
    bound = independent_lower_bound(inst, matching)
    _emit(
        {
            "n": inst.n,
            "matching": [list(p) for p in matching.pairs],
            "d_m": matching.weight,
            "lb": bound.total,
            "per_team": list(bound.per_team),
        },
        args.pretty,
    )
    return 0


def cmd_oracle(args) -> int:
    try:
        inst = parse_instance(Path(args.instance).read_text())
    except (OSError, FormatError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        start = time.perf_counter()
        matching = min_weight_perfect_matching(inst)
        lb = independent_lower_bound(inst, matching).total
        schedule, total = brute_force_optimal(inst, lower_bound=lb)
        elapsed = 1000 * (time.perf_counter() - start)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(_report(Path(args.instance).stem, inst.n, lb, total, 1, 0, elapsed, "brute", []), args.pretty)
    return 0 if validate_schedule(schedule).feasible else 1


def _load_baseline(path):
    baseline = {}
    if path is None:
        return baseline
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#") or line.lower().startswith("instance"):
            continue
        name, value = [p.strip() for p in line.split(",")[:2]]
        baseline[name] = int(value)
    return baseline


def cmd_bench(args) -> int:
    directory = Path(args.directory)
    files = sorted(p for p in directory.glob("*") if p.is_file() and p.suffix != ".csv")
    baseline = _load_baseline(args.baseline)
    workers = int(os.environ.get("TTP2_THREADS", "0")) or None

    def solve_one(path):
        inst = parse_instance(path.read_text())
        report, schedule = _solve_instance(inst, path.stem, args.rounds, args.seed, False, "auto")
        feasible = validate_schedule(schedule).feasible
        return report, feasible

    results = []
    any_infeasible = False
    if files:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            for report, feasible in pool.map(solve_one, files):
                results.append(report)
                any_infeasible |= not feasible

    ratios = []
    for report in results:
        prev = baseline.get(report["instance"])
        if prev:
            report["previous"] = prev
            report["improvement_ratio"] = round(100.0 * (prev - report["total"]) / prev, 2)
            ratios.append(report["improvement_ratio"])
        _emit(report, args.pretty)
    summary = {
        "instances": len(results),
        "mean_improvement_percent": round(sum(ratios) / len(ratios), 2) if ratios else None,
    }
    _emit(summary, args.pretty)
    return 1 if any_infeasible else 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="ttp2", description="TTP-2 schedule construction")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="construct a schedule for an instance file")
    p.add_argument("instance")
    p.add_argument("--rounds", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--derandomize", action="store_true")
    p.add_argument("--packing", default="auto", help="'auto' or an integer p")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("validate", help="check a schedule CSV against an instance")
    p.add_argument("schedule")
    p.add_argument("instance")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("lb", help="independent lower bound of an instance")
    p.add_argument("instance")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_lb)

    p = sub.add_parser("oracle", help="exact brute-force optimum (n <= 6)")
    p.add_argument("instance")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="solve every instance file in a directory")
    p.add_argument("directory")
    p.add_argument("--rounds", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--baseline", default=None, help="CSV of instance,previous_total")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_bench)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
