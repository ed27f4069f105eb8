"""Command-line interface.

Exit codes: 0 success or member, 1 negative finding (non-member, failed
campaign instance), 2 error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from . import formats
from .campaigns import KINDS, CampaignConfig, CampaignConfigError, run_campaign, run_instance
from .graph import (Graph, GraphError, complete_graph, cycle_graph, gen_complete_multipartite,
                    gen_pattern, gen_random, path_graph, petersen_graph)
from .guards import DEFAULT_GUARDS, GuardError
from .serialize import SCHEMA_VERSION, dumps, witness_json
from .structure.bounds import BoundsError, compute_bounds
from .structure.driver import DriverConfig, DriverError, decompose_driver, parse_tau_mode
from .subdivision import detect_induced_subdivision

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


class UsageError(ValueError):
    pass


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _guards(overrides: Sequence[str] | None):
    changes = {}
    for item in overrides or []:
        name, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--guard-override expects NAME=VALUE, got {item!r}")
        try:
            changes[name.strip()] = int(value)
        except ValueError:
            raise UsageError(f"guard {name!r} needs an integer value, got {value!r}")
    try:
        return DEFAULT_GUARDS.override(**changes)
    except ValueError as exc:
        raise UsageError(str(exc))


def _read(args) -> Graph:
    if not args.input:
        raise UsageError("--input is required")
    fmt = args.format or formats.infer_format(args.input)
    return formats.read_graph(args.input, fmt)


def _write(args, payload) -> None:
    text = dumps(payload)
    if getattr(args, "json_out", None):
        Path(args.json_out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_detect(args) -> int:
    g = _read(args)
    pattern = gen_pattern(args.a, args.a)
    w = detect_induced_subdivision(pattern, g, guards=_guards(args.guard_override))
    payload = {"schema_version": SCHEMA_VERSION, "a": args.a, "n": g.n, "m": g.edge_count,
               "member": w is None}
    if w is not None:
        payload["witness"] = witness_json(w, pattern)
    _write(args, payload)
    return EXIT_OK if w is None else EXIT_NEGATIVE


def cmd_decompose(args) -> int:
    g = _read(args)
    parse_tau_mode(args.tau_mode)
    cfg = DriverConfig(c_const=args.c_const, tau_mode=args.tau_mode,
                       guards=_guards(args.guard_override))
    try:
        report = decompose_driver(g, args.a, cfg)
    except DriverError as exc:
        payload = {"schema_version": SCHEMA_VERSION, "a": args.a, "error": {
            "stage": exc.stage, "message": str(exc), "detail": exc.detail}}
        _write(args, payload)
        return EXIT_NEGATIVE if exc.stage == "membership" else EXIT_ERROR
    _write(args, report)
    return EXIT_OK


def _campaign_config(args) -> CampaignConfig:
    base: dict = {}
    if args.config:
        base = json.loads(Path(args.config).read_text())
        if not isinstance(base, dict):
            raise UsageError("campaign config file must hold a JSON object")
    for name in ("kind", "seed", "count", "n_min", "n_max", "p_min", "p_max", "a"):
        value = getattr(args, name)
        if value is not None:
            base[name] = value
    if args.guard_override:
        _guards(args.guard_override)
        base["guard_overrides"] = {k: int(v) for k, _, v in
                                   (item.partition("=") for item in args.guard_override)}
    if "kind" not in base:
        raise UsageError("--kind is required (or a config file naming it)")
    return CampaignConfig.from_dict(base)


def cmd_verify(args) -> int:
    cfg = _campaign_config(args)
    if args.replay is not None:
        result = run_instance(cfg, args.replay)
        _write(args, result)
        return EXIT_OK if result["ok"] else EXIT_NEGATIVE
    summary = run_campaign(cfg, workers=args.workers)
    _write(args, summary)
    return EXIT_OK if not summary["failures"] else EXIT_NEGATIVE


def cmd_bounds(args) -> int:
    sheet = compute_bounds(args.a, args.omega, args.tau, c_const=args.c_const)
    _write(args, {"schema_version": SCHEMA_VERSION, "bounds": sheet})
    return EXIT_OK


def _ints(params: Sequence[str], count: int | None, name: str) -> list[int]:
    try:
        values = [int(p) for p in params]
    except ValueError:
        raise UsageError(f"generator {name!r} takes integer parameters, got {list(params)}")
    if count is not None and len(values) != count:
        raise UsageError(f"generator {name!r} takes {count} parameter(s), got {len(values)}")
    return values


def _no_params(params: Sequence[str], name: str, make: Callable[[], Graph]) -> Graph:
    _ints(params, 0, name)
    return make()


def _gen_random(params: Sequence[str], seed: int) -> Graph:
    if len(params) != 2:
        raise UsageError("generator 'random' takes N P")
    try:
        n, p = int(params[0]), float(params[1])
    except ValueError:
        raise UsageError(f"generator 'random' takes an integer N and a float P, got {list(params)}")
    return gen_random(n, p, seed)


GENERATORS: dict[str, tuple[str, Callable[[Sequence[str], int], Graph]]] = {
    "pattern": ("A B", lambda ps, _: gen_pattern(*_ints(ps, 2, "pattern")).underlying),
    "multipartite": ("SIZE...", lambda ps, _: gen_complete_multipartite(_ints(ps, None, "multipartite"))),
    "complete": ("N", lambda ps, _: complete_graph(*_ints(ps, 1, "complete"))),
    "cycle": ("N", lambda ps, _: cycle_graph(*_ints(ps, 1, "cycle"))),
    "path": ("N", lambda ps, _: path_graph(*_ints(ps, 1, "path"))),
    "petersen": ("", lambda ps, _: _no_params(ps, "petersen", petersen_graph)),
    "random": ("N P", _gen_random),
}


def cmd_gen(args) -> int:
    if args.name not in GENERATORS:
        raise UsageError(f"unknown generator {args.name!r}; choose from {', '.join(sorted(GENERATORS))}")
    g = GENERATORS[args.name][1](args.params, args.seed or 0)
    text = formats.emit(g, args.format or "graph6")
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_convert(args) -> int:
    g = _read(args)
    text = formats.emit(g, args.to)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pabfree", description=(
        "Graphs without an induced subdivision of P(a, b): detection, decomposition, "
        "verification campaigns and bound arithmetic."))
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, graph: bool = True, a: bool = True) -> None:
        if graph:
            p.add_argument("--input", help="graph file")
            p.add_argument("--format", choices=formats.FORMATS,
                           help="input format (default: inferred from the extension)")
        if a:
            p.add_argument("--a", type=int, default=2, help="pattern parameter a (default 2)")
        p.add_argument("--json-out", help="write JSON here instead of standard output")
        p.add_argument("--guard-override", action="append", metavar="NAME=VALUE",
                       help="raise or lower a size guard (repeatable)")

    p = sub.add_parser("detect", help="test membership; exit 0 member, 1 non-member")
    common(p)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("decompose", help="run the structural decomposition on a member")
    common(p)
    p.add_argument("--c-const", type=_fraction, default=Fraction(1))
    p.add_argument("--tau-mode", default="oracle", help="oracle or fixed:N")
    p.add_argument("--seed", type=int, default=0, help="accepted for symmetry; the driver is deterministic")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run a randomised verification campaign")
    common(p, graph=False, a=False)
    p.add_argument("--kind", choices=KINDS)
    p.add_argument("--config", help="JSON file with campaign settings")
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--p-min", type=float)
    p.add_argument("--p-max", type=float)
    p.add_argument("--a", type=int)
    p.add_argument("--replay", type=int, metavar="INDEX", help="run one instance only")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="evaluate the bound formulas exactly")
    common(p, graph=False)
    p.add_argument("--omega", type=int, required=True)
    p.add_argument("--tau", type=int, default=0)
    p.add_argument("--c-const", type=_fraction, default=Fraction(1))
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("gen", help="write a generated graph")
    p.add_argument("name", help=", ".join(f"{k} {v[0]}".strip() for k, v in sorted(GENERATORS.items())))
    p.add_argument("params", nargs="*")
    p.add_argument("--format", choices=formats.FORMATS, default="graph6")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", help="output file (default: standard output)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("convert", help="convert between graph formats")
    p.add_argument("--input")
    p.add_argument("--format", choices=formats.FORMATS)
    p.add_argument("--to", choices=formats.FORMATS, required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args)
    except formats.FormatError as exc:
        print(f"error: cannot parse {args.input}: {exc}", file=sys.stderr)
    except (UsageError, GuardError, GraphError, BoundsError, CampaignConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
