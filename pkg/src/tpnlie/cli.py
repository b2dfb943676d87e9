"""Command-line entry points: check, extend, tower, gen, hunt.

Exit codes form a closed contract:
    0   all checks passed / nothing found
    1   an identity violation in a check or verify run
    2   input error (bad flags, malformed file, unknown name)
    3   hunter finding (a mathematical result, not a failure)
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .axioms import CheckReport, IdentityId, run_suite
from .construct import build_tower, extend_bracket
from .core import AlgebraSystem, InputError
from .corpus import (
    hunt_counterexample,
    make_tensor_trunc,
    make_truncated_poly,
    make_zero_bracket_system,
    random_system,
)
from .files import load_system, report_to_dict, save_finding, save_system

__all__ = ["main", "main_entry"]

_DER_IDS = {IdentityId.DER_MUL, IdentityId.DER_BRK, IdentityId.LEM1, IdentityId.LEM2}


def _parse_suite(spec: str, have_derivation: bool) -> list[IdentityId]:
    if spec.strip().lower() == "all":
        if have_derivation:
            return list(IdentityId)
        return [i for i in IdentityId if i not in _DER_IDS]
    ids = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            ids.append(IdentityId[token.upper()])
        except KeyError:
            known = ", ".join(i.name for i in IdentityId)
            raise InputError(f"unknown identity {token!r} (known: {known})") from None
    return ids


def _print_reports(reports: list[CheckReport], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps([report_to_dict(r) for r in reports], indent=2))
        return
    for r in reports:
        line = f"{r.identity.name}: {r.status} ({r.tuples_checked} tuples, {r.elapsed:.3f}s)"
        if r.counterexample is not None:
            residual = [str(c) for c in r.residual.coords]
            line += f" counterexample={list(r.counterexample)} residual={residual}"
        print(line)


def cmd_check(args) -> int:
    system = load_system(args.file)
    ids = _parse_suite(args.suite, args.derivation is not None)
    reports = run_suite(system, args.bracket, args.derivation, ids)
    _print_reports(reports, args.format)
    return 0 if all(r.passed for r in reports) else 1


def cmd_extend(args) -> int:
    system = load_system(args.file)
    bracket = system.bracket(args.bracket)
    derivation = system.derivation(args.derivation)
    extension = extend_bracket(system.product, bracket, derivation)
    name = f"{args.bracket}_ext"
    extended = system.with_bracket(name, extension)
    save_system(extended, args.output)
    print(f"wrote {args.output} with bracket {name!r} (arity {extension.arity})")
    if args.verify:
        reports = run_suite(extended, name, args.derivation)
        _print_reports(reports, args.format)
        if not all(r.passed for r in reports):
            return 1
    return 0


def cmd_tower(args) -> int:
    system = load_system(args.file)
    derivations = list(args.derivation)
    steps = args.steps if args.steps is not None else len(derivations)
    if steps != len(derivations):
        raise InputError(
            f"--steps is {steps} but {len(derivations)} derivation(s) were given; "
            "pass one --derivation per step, in order"
        )
    levels = build_tower(system, args.bracket, derivations, verify=not args.no_verify)
    out_dir = Path(args.out_dir) if args.out_dir else Path(args.file).parent
    stem = Path(args.file).stem
    current = system
    name = args.bracket
    ok = True
    for k, level in enumerate(levels, start=1):
        name = f"{name}_ext"
        current = current.with_bracket(name, level.bracket)
        path = out_dir / f"{stem}_level{k}.json"
        save_system(current, path)
        stored = len(level.bracket.entries)
        print(f"level {k}: bracket {name!r} (arity {level.bracket.arity}, "
              f"{stored} stored entries) -> {path}")
        if level.reports:
            _print_reports(list(level.reports), args.format)
            if not level.all_passed:
                ok = False
    return 0 if ok else 1


def _require_flag(value, flag: str, family: str):
    if value is None:
        raise InputError(f"--family {family} requires {flag}")
    return value


def cmd_gen(args) -> int:
    family = args.family
    if family == "trunc-poly":
        system = make_truncated_poly(_require_flag(args.m, "--m", family))
    elif family == "tensor-trunc":
        system = make_tensor_trunc(
            _require_flag(args.a, "--a", family), _require_flag(args.b, "--b", family)
        )
    elif family == "zero":
        base = make_truncated_poly(_require_flag(args.m, "--m", family))
        zero = make_zero_bracket_system(base.product, _require_flag(args.arity, "--arity", family))
        system = AlgebraSystem(
            base.dim, base.product, zero.brackets, base.derivations, base.basis_labels
        )
    elif family == "random":
        system = random_system(
            _require_flag(args.dim, "--dim", family),
            _require_flag(args.arity, "--arity", family),
            args.density,
            _require_flag(args.seed, "--seed", family),
        )
    else:  # unreachable: argparse restricts choices
        raise InputError(f"unknown family {family!r}")
    save_system(system, args.output)
    print(f"wrote {args.output}")
    return 0


def cmd_hunt(args) -> int:
    finding = hunt_counterexample(args.dim, args.arity, args.trials, args.seed)
    if finding is None:
        print(f"no finding in {args.trials} trials")
        return 0
    save_finding(finding, args.output)
    failing = ", ".join(r.identity.name for r in finding.failure_reports)
    print(f"finding at trial {finding.trial}: extension fails {failing}; wrote {args.output}")
    return 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tpnlie",
        description=(
            "Exact workbench for transposed Poisson n-Lie algebras given by "
            "structure constants: exhaustive identity checking, derivation-"
            "driven arity extensions, towers, and counterexample hunting."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="verify identities against a system file")
    check.add_argument("file")
    check.add_argument("--bracket", required=True)
    check.add_argument("--derivation")
    check.add_argument("--suite", default="all", help='comma-separated identity ids or "all"')
    check.add_argument("--format", choices=("text", "json"), default="text")
    check.set_defaults(func=cmd_check)

    extend = sub.add_parser("extend", help="extend a bracket by a derivation")
    extend.add_argument("file")
    extend.add_argument("--bracket", required=True)
    extend.add_argument("--derivation", required=True)
    extend.add_argument("-o", "--output", required=True)
    extend.add_argument("--verify", action="store_true", help="run the full suite on the extension")
    extend.add_argument("--format", choices=("text", "json"), default="text")
    extend.set_defaults(func=cmd_extend)

    tower = sub.add_parser("tower", help="iterate extensions, one derivation per step")
    tower.add_argument("file")
    tower.add_argument("--bracket", required=True)
    tower.add_argument(
        "--derivation", action="append", required=True,
        help="derivation for the next step; repeat once per step, in order",
    )
    tower.add_argument("--steps", type=int)
    tower.add_argument("--out-dir")
    tower.add_argument("--no-verify", action="store_true")
    tower.add_argument("--format", choices=("text", "json"), default="text")
    tower.set_defaults(func=cmd_tower)

    gen = sub.add_parser("gen", help="generate a system file from a family")
    gen.add_argument(
        "--family", required=True, choices=("trunc-poly", "tensor-trunc", "zero", "random")
    )
    gen.add_argument("--m", type=int)
    gen.add_argument("--a", type=int)
    gen.add_argument("--b", type=int)
    gen.add_argument("--dim", type=int)
    gen.add_argument("--arity", type=int)
    gen.add_argument("--density", default="1/2", help='rational in [0, 1], e.g. "1/2"')
    gen.add_argument("--seed", type=int)
    gen.add_argument("-o", "--output", required=True)
    gen.set_defaults(func=cmd_gen)

    hunt = sub.add_parser("hunt", help="search for extensions that break NL or TP")
    hunt.add_argument("--dim", type=int, required=True)
    hunt.add_argument("--arity", type=int, required=True)
    hunt.add_argument("--trials", type=int, required=True)
    hunt.add_argument("--seed", type=int, required=True)
    hunt.add_argument("-o", "--output", default="finding.json")
    hunt.set_defaults(func=cmd_hunt)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    main_entry()
