"""Command-line entry point.

Subcommands: generate (network edge list), solve (one scenario to JSON),
thresholds (analytic thresholds), sweep / phase / eta-curve (experiment
drivers from a config file). Exit codes: 0 success, 1 usage error,
2 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analytics import coco_thresholds, vanilla_thresholds
from .equilibrium import ConvergenceError, solve
from .experiments import (
    ConfigError,
    build_network,
    eta_args_from_file,
    parse_topology,
    phase_args_from_file,
    run_eta_curve,
    run_phase_diagram,
    run_shock_sweep,
    sweep_config_from_file,
)
from .networks import edge_list_text, write_edge_list
from .params import EconomyParams, RegimeParams, ShockScenario, SolverSettings

USAGE_EXIT = 1
NUMERICAL_EXIT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        raise SystemExit(self._fail(message))

    def _fail(self, message):
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        return USAGE_EXIT


def _add_network_args(p, with_economy: bool):
    p.add_argument("--topology", required=True,
                   help="ring, complete, or regular:<c>")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--c", type=int, help="connectivity shorthand for regular")
    p.add_argument("--seed", type=int, default=0,
                   help="RNG seed for the random regular family")
    if with_economy:
        p.add_argument("--a", type=float, required=True)
        p.add_argument("--s", type=float, required=True)
        p.add_argument("--A", type=float, default=0.0)
        p.add_argument("--zeta", type=float, default=0.0)


def _resolve_topology(args):
    spec = args.topology
    if spec == "regular" and args.c is not None:
        spec = f"regular:{args.c}"
    return parse_topology(spec, args.n)


def build_parser() -> _Parser:
    parser = _Parser(prog="cocontagion")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a network edge list")
    _add_network_args(p, with_economy=False)
    p.add_argument("-o", "--output", help="output path (default: stdout)")

    p = sub.add_parser("solve", help="solve one shock scenario, print JSON")
    _add_network_args(p, with_economy=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--shocked", type=int, default=1,
                   help="1-based index of the shocked bank (default 1)")
    p.add_argument("--tau", type=float, default=0.0)
    p.add_argument("--eta", type=float, default=0.0)
    p.add_argument("--tol", type=float, default=1e-12)

    p = sub.add_parser("thresholds", help="print analytic thresholds as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--tau", type=float, default=0.0)
    p.add_argument("--topology", choices=["ring", "complete"],
                   help="required when tau > 0")
    p.add_argument("--y", type=float,
                   help="evaluate the shock threshold at this exposure")

    for name, helptext in (
        ("sweep", "run a shock sweep from a config file"),
        ("phase", "rasterize safe regions from a config file"),
        ("eta-curve", "critical shock vs eta from a config file"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--config", required=True)
        p.add_argument("--seed", type=int, help="override master_seed")
    return parser


def _cmd_generate(args) -> int:
    kind, c = _resolve_topology(args)
    net = build_network(kind, c, args.n, args.y, args.seed)
    if args.output:
        write_edge_list(net, args.output)
    else:
        sys.stdout.write(edge_list_text(net))
    return 0


def _cmd_solve(args) -> int:
    kind, c = _resolve_topology(args)
    economy = EconomyParams(n=args.n, a=args.a, s=args.s, y=args.y,
                            A=args.A, zeta=args.zeta)
    net = build_network(kind, c, args.n, args.y, args.seed)
    scenario = ShockScenario(frozenset({args.shocked - 1}), args.eps)
    regime = RegimeParams(args.tau, args.eta)
    result = solve(net, economy, scenario, regime,
                   SolverSettings(tol=args.tol))
    print(json.dumps({
        "phi": [float(v) for v in result.phi],
        "extent": result.extent,
        "distress": result.distress,
        "iterations": result.iterations,
        "residual": result.residual,
    }))
    return 0


def _cmd_thresholds(args) -> int:
    if args.tau == 0:
        eps_star, y_star = vanilla_thresholds(args.n, args.a, args.s)
        print(json.dumps({"eps_star": eps_star, "y_star": y_star, "tau": 0.0}))
        return 0
    if not args.topology:
        print("cocontagion thresholds: --topology is required when tau > 0",
              file=sys.stderr)
        return USAGE_EXIT
    region = coco_thresholds(args.n, args.a, args.s, args.tau, args.topology)
    out = {
        "tau": args.tau,
        "topology": args.topology,
        "lambda": region.lam,
        "b": region.b,
        "y_star": region.y_star,
        "eps_slope": region.eps_slope,
        "eps_intercept": region.eps_intercept,
    }
    if args.y is not None:
        out["eps_star"] = float(region.eps_star_of_y(args.y))
        out["eps_noshock"] = float(region.eps_noshock_of_y(args.y))
    print(json.dumps(out))
    return 0


def _cmd_sweep(args) -> int:
    config = sweep_config_from_file(args.config, seed_override=args.seed)
    run_shock_sweep(config)
    return 0


def _cmd_phase(args) -> int:
    run_phase_diagram(**phase_args_from_file(args.config))
    return 0


def _cmd_eta_curve(args) -> int:
    run_eta_curve(**eta_args_from_file(args.config))
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "solve": _cmd_solve,
    "thresholds": _cmd_thresholds,
    "sweep": _cmd_sweep,
    "phase": _cmd_phase,
    "eta-curve": _cmd_eta_curve,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT
    try:
        return _COMMANDS[args.command](args)
    except (ConfigError, ValueError, OSError) as exc:
        print(f"cocontagion: error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except ConvergenceError as exc:
        print(f"cocontagion: numerical failure: {exc}", file=sys.stderr)
        return NUMERICAL_EXIT


if __name__ == "__main__":
    raise SystemExit(main())
