"""Command-line front end.

    solidtm classify --scenario r2.json --set ring
    solidtm measure  --scenario puncdisk.json --set X --verbose
    solidtm check    --suite oracle-equivalence --scenario tiny.json --seed 1 --budget 0
    solidtm witness  --scenario line-and-point
    solidtm render   --scenario r2.json --set ring --out ring.svg

``--scenario`` takes a JSON path or the name of a builtin scenario.
Exit status: 0 success, 1 failed check, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import scenario as sc
from .cellspace import ModelError, canonical
from .extend import lambda2, mu
from .regions import RegionError, classify, solid_hull
from .ssf import SSFError
from .verify import SUITES, UnknownScenario, UnknownSuite, run_suite, run_witness

DEFAULT_SCENARIO = "two-point-area"


class UsageError(Exception):
    pass


def _value(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else str(v)
    if isinstance(v, float) and v == float("inf"):
        return "inf"
    return v


def _cells(S):
    return [list(c) for c in canonical(S)]


def _jsonable(x):
    if isinstance(x, frozenset):
        return _cells(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (Fraction, float)):
        return _value(x)
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return str(x)


def _color(text, code):
    if os.environ.get("QTM_COLOR", "1") == "0" or not sys.stdout.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


def load_scenario(arg: str | None) -> sc.Scenario:
    arg = arg or DEFAULT_SCENARIO
    if arg in sc.BUILTIN and not Path(arg).exists():
        return sc.builtin(arg)
    if not Path(arg).exists():
        raise UsageError(f"no scenario file or builtin named {arg!r}")
    return sc.load(arg)


def _get_set(s: sc.Scenario, name: str | None):
    if not name:
        raise UsageError("--set is required")
    if name == "X":
        return s.model.X
    if name not in s.sets:
        known = ", ".join(["X", *s.sets])
        raise UsageError(f"unknown set {name!r}; scenario defines {known}")
    return s.sets[name]


def cmd_classify(args, out):
    s = load_scenario(args.scenario)
    A = _get_set(s, args.set)
    cls = classify(s.model, A)
    flags = {k: v for k, v in cls.as_dict().items() if k != "families"}
    fams = [k for k, v in cls.families().items() if v]
    if args.format == "json":
        return 0, {"set": args.set, "flags": flags, "families": fams}
    lines = [f"{k} = {str(v).lower()}" for k, v in flags.items()]
    lines.append("families: " + " ".join(fams))
    return 0, "\n".join(lines)


def cmd_hull(args, out):
    s = load_scenario(args.scenario)
    H = solid_hull(s.model, _get_set(s, args.set))
    if args.format == "json":
        return 0, {"set": args.set, "hull": _cells(H)}
    return 0, f"hull ({len(H)} cells): " + " ".join(f"({x},{y})" for x, y in canonical(H))


def cmd_measure(args, out):
    s = load_scenario(args.scenario)
    A = _get_set(s, args.set)
    trace: dict = {}
    v = mu(s.ssf, s.model, A, trace)
    res = {"set": args.set, "mu": _value(v)}
    if args.verbose:
        core = trace["compact_witness"]
        res["lambda1"] = [_value(x) for x in trace["lambda1"]]
        res["lambda2"] = _value(lambda2(s.ssf, s.model, core))
        res["compact_witness_cells"] = len(core)
        if "open_witness" in trace:
            res["open_witness_cells"] = len(trace["open_witness"])
    if args.format == "json":
        return 0, res
    lines = [f"mu = {res['mu']}"]
    if args.verbose:
        if "open_witness_cells" in res:
            lines.append(f"open witness: {res['open_witness_cells']} cells")
        lines.append(f"compact witness: {res['compact_witness_cells']} cells in "
                     f"{len(res['lambda1'])} components")
        lines.append("lambda1 = " + ", ".join(map(str, res["lambda1"])))
        lines.append(f"lambda2 = {res['lambda2']}")
    return 0, "\n".join(lines)


def _report(rep):
    return {
        "suite": rep.suite,
        "passed": rep.passed,
        "casesRun": rep.cases_run,
        "seed": rep.seed,
        "failures": _jsonable(rep.failures[:50]),
        "failureCount": len(rep.failures),
        "notes": _jsonable(rep.notes),
    }


def _report_text(rep, verbose):
    state = _color("PASS", 32) if rep.passed else _color("FAIL", 31)
    lines = [f"{state} {rep.suite}: {rep.cases_run} cases, seed {rep.seed}"]
    for f in rep.failures[: None if verbose else 10]:
        lines.append(f"  failed {f['case']}: expected {f['expected']}, got {f['actual']}")
    if len(rep.failures) > 10 and not verbose:
        lines.append(f"  ... {len(rep.failures) - 10} more")
    if verbose and rep.notes:
        lines.append("  notes: " + json.dumps(_jsonable(rep.notes), sort_keys=True))
    return "\n".join(lines)


def cmd_check(args, out):
    if not args.suite:
        raise UsageError("--suite is required; one of " + ", ".join(SUITES))
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; one of " + ", ".join(SUITES))
    s = load_scenario(args.scenario)
    rep = run_suite(args.suite, s.model, s.ssf, seed=args.seed, budget=args.budget)
    code = 0 if rep.passed else 1
    return code, _report(rep) if args.format == "json" else _report_text(rep, args.verbose)


def cmd_witness(args, out):
    name = args.scenario or ""
    if name in sc.BUILTIN and not Path(name).exists():
        rep = run_witness(name)
    elif Path(name).exists():
        rep = run_witness(sc.load(name))
    else:
        raise UsageError(f"unknown scenario {name!r}; builtins: " + ", ".join(sc.BUILTIN))
    code = 0 if rep.passed else 1
    return code, _report(rep) if args.format == "json" else _report_text(rep, args.verbose)


def cmd_render(args, out):
    from .render import render_svg

    s = load_scenario(args.scenario)
    A = _get_set(s, args.set)
    if not args.out:
        raise UsageError("--out is required for render")
    render_svg(s.model, A, args.out, title=f"{s.name}: {args.set}")
    if args.format == "json":
        return 0, {"set": args.set, "out": str(args.out)}
    return 0, f"wrote {args.out}"


COMMANDS = {
    "classify": cmd_classify, "hull": cmd_hull, "measure": cmd_measure,
    "check": cmd_check, "witness": cmd_witness, "render": cmd_render,
}


def build_parser():
    p = argparse.ArgumentParser(prog="solidtm", description="Topological measures from solid-set functions on grid models.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--scenario", help="scenario JSON path or builtin name")
    p.add_argument("--set", help="name of a set in the scenario (X is always defined)")
    p.add_argument("--suite", help="suite for check: " + ", ".join(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--out", help="output path for render")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--verbose", "-v", action="store_true")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        code, payload = COMMANDS[args.command](args, sys.stdout)
    except (UsageError, sc.ScenarioError, ModelError, RegionError, SSFError,
            UnknownSuite, UnknownScenario) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        print(f"solidtm {args.command}: error: {msg}", file=sys.stderr)
        return 2
    if isinstance(payload, dict):
        payload = {"schema": sc.SCHEMA_VERSION, "command": args.command, **payload}
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(payload)
    return code


if __name__ == "__main__":
    sys.exit(main())
