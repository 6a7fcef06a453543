"""Command-line interface: scenario verification and the statement catalog.

    banlab verify <scenario> [--seed N] [--precision BITS] [--json OUT] [--timings]
    banlab catalog
    banlab --list

Exit codes: 0 all checks pass (inexact-pass allowed), 1 some check failed
or errored, 2 usage or parse problems.  Reports are byte-identical across
runs for a fixed seed and precision budget; --timings opts into wall-clock
fields (and out of byte identity).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources

from . import scalar
from .checks import CATALOG, CheckRecord, run_check
from .errors import BanlabError, ParseError
from .scenario import Scenario, load_scenario

ASSUMPTIONS = {
    "tensor_norm": "projective (the completed tensor is otherwise unspecified; recorded as an assumption)",
    "arch_extension_norm": "power-basis l1 with minimal power-of-two weights; norm statements tagged norm-model-dependent",
    "comultiplication_order": "function spaces on groups use Delta(f)(g)(g') = f(gg'); the twisted descent convention uses Delta(f)(sigma)(tau) = f(tau sigma); reports name the active one",
    "window_truncation": "integer-graded multiplication is omitted on windows rather than truncated",
}


def bundled_scenarios() -> dict[str, str]:
    base = resources.files("banlab").joinpath("scenarios")
    out = {}
    for entry in sorted(base.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".toml"):
            out[entry.name[: -len(".toml")]] = entry.name
    return out


def _load(target: str) -> Scenario:
    bundled = bundled_scenarios()
    if target in bundled:
        data = resources.files("banlab").joinpath("scenarios").joinpath(bundled[target]).read_bytes()
        return load_scenario(data, name_hint=target)
    return load_scenario(target)


def run_scenario(scn: Scenario, seed: int | None = None, precision: int | None = None, timings: bool = False) -> dict:
    if seed is not None:
        scn.seed = seed
    budget = precision if precision is not None else scn.precision
    if budget is not None:
        scalar.set_precision_budget(budget)
    records: list[CheckRecord] = []
    for params in scn.checks:
        t0 = time.perf_counter()
        batch = run_check(scn, params)
        elapsed = (time.perf_counter() - t0) * 1000.0
        for rec in batch:
            rec.timing_ms = round(elapsed / max(len(batch), 1), 3) if timings else None
        records.extend(batch)
    records.sort(key=lambda r: r.name)
    summary = {"pass": 0, "fail": 0, "inexact-pass": 0, "error": 0}
    for rec in records:
        summary[rec.status] += 1
    return {
        "scenario": scn.name,
        "seed": scn.seed,
        "precision_budget": scalar.precision_budget(),
        "backend": scn.field.backend + (f"({scn.field.prime})" if scn.field.is_padic else ""),
        "assumptions": ASSUMPTIONS,
        "checks": [r.to_json() for r in records],
        "summary": summary,
    }


def _print_report(report: dict, stream=None) -> None:
    stream = stream if stream is not None else sys.stdout
    print(f"scenario {report['scenario']} [{report['backend']}] seed={report['seed']}", file=stream)
    for rec in report["checks"]:
        line = f"  {rec['status']:12s} {rec['name']}"
        if rec["status"] in ("fail", "error") and rec.get("witness") is not None:
            line += f"  witness={json.dumps(rec['witness'], sort_keys=True)}"
        print(line, file=stream)
    s = report["summary"]
    print(
        f"  -> {s['pass']} pass, {s['inexact-pass']} inexact-pass, {s['fail']} fail, {s['error']} error",
        file=stream,
    )


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="banlab", description="exact verification scenarios for normed (co)algebra constructions")
    parser.add_argument("--list", action="store_true", help="list bundled scenarios and exit")
    sub = parser.add_subparsers(dest="command")
    p_verify = sub.add_parser("verify", help="run a scenario file or bundled scenario name")
    p_verify.add_argument("scenario")
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--precision", type=int, default=None, help="interval refinement budget in bits")
    p_verify.add_argument("--json", dest="json_out", default=None, help="write the JSON report here")
    p_verify.add_argument("--timings", action="store_true", help="include wall-clock timings (breaks byte identity)")
    sub.add_parser("catalog", help="print the statement-to-scenario catalog")

    args = parser.parse_args(argv)

    if args.list:
        for name in bundled_scenarios():
            print(name)
        return 0
    if args.command == "catalog":
        width = max(len(s) for s, _ in CATALOG)
        for statement, scenario in CATALOG:
            print(f"{statement:<{width}}  scenarios/{scenario}")
        print(f"({len(CATALOG)} entries)")
        return 0
    if args.command != "verify":
        parser.print_help()
        return 2

    try:
        scn = _load(args.scenario)
    except ParseError as exc:
        loc = f" (line {exc.line}, column {exc.column})" if getattr(exc, "line", None) else ""
        print(f"parse error{loc}: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError:
        print(f"no such scenario: {args.scenario}", file=sys.stderr)
        return 2
    except BanlabError as exc:
        print(f"cannot build scenario: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2

    from .errors import UnknownCheck

    try:
        report = run_scenario(scn, seed=args.seed, precision=args.precision, timings=args.timings)
    except UnknownCheck as exc:
        print(f"unknown check: {exc}", file=sys.stderr)
        return 2
    _print_report(report)
    if args.json_out:
        with open(args.json_out, "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
    bad = report["summary"]["fail"] + report["summary"]["error"]
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
