"""Command line interface.

Exit codes: 0 ok, 1 bound violation found by the oracle, 2 invalid params or
usage, 3 unreadable graph file, 4 profile/strategies mismatch, 5 internal
realization failure, 6 graph too large for enumeration.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import analysis, game, oracle, worstcase
from .errors import (
    CoordPoAError,
    EmptyGraph,
    InternalRealizationFailure,
    InvalidParams,
    NotAnEquilibrium,
    ParseError,
    ProfileMismatch,
    TooLarge,
)
from .formats import dumps, graph_to_json, read_graph_file, to_jsonable
from .graph import Params, Profile, Strategy, classify_edges, format_rational, to_rational

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARAMS = 2
EXIT_PARSE = 3
EXIT_PROFILE = 4
EXIT_INTERNAL = 5
EXIT_TOO_LARGE = 6


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def parse_params(alpha, beta, gamma) -> Params:
    try:
        return Params(to_rational(alpha), to_rational(beta), to_rational(gamma))
    except (InvalidParams, ParseError) as exc:
        raise CliError(EXIT_PARAMS, f"invalid params: {exc}") from exc


def _params_from_args(args) -> Params:
    missing = [n for n in ("alpha", "beta", "gamma") if getattr(args, n) is None]
    if missing:
        raise CliError(EXIT_PARAMS, "missing " + ", ".join("--" + n for n in missing))
    return parse_params(args.alpha, args.beta, args.gamma)


def _load_graph(path):
    try:
        return read_graph_file(path)
    except ProfileMismatch as exc:
        raise CliError(EXIT_PROFILE, str(exc)) from exc
    except ParseError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from exc


def _approx(x: Fraction) -> str:
    return f"{format_rational(x)} (~{float(x):.6g})"


def render_text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat_list(v):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(obj))
    return "\n".join(lines)


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, Fraction):
        return _approx(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "(" + ", ".join(_scalar(x) if not isinstance(x, Fraction) else format_rational(x) for x in v) + ")"
    if v is None:
        return "-"
    return str(v)


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(dumps(payload))
    else:
        print(render_text(_textable(payload)))


def _textable(x):
    # keep Fractions for the approximate rendering, flatten everything else
    if isinstance(x, Fraction):
        return x
    if isinstance(x, dict):
        return {k: _textable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_textable(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return to_jsonable(x)


def cmd_bound(args) -> int:
    p = _params_from_args(args)
    rep = analysis.poa_upper_bound(p)
    _emit(
        {
            "params": p,
            "bound": rep.bound,
            "corollary_bound": rep.corollary_bound,
            "gamma_eq_beta_value": rep.gamma_eq_beta_value,
            "degenerate": rep.degenerate,
        },
        args.format,
    )
    return EXIT_OK


def cmd_analyze(args) -> int:
    p = _params_from_args(args)
    g, s = _load_graph(args.graph)
    if s is None:
        raise CliError(EXIT_PROFILE, "graph file has no strategies")
    try:
        n = classify_edges(g, s)
    except ProfileMismatch as exc:
        raise CliError(EXIT_PROFILE, str(exc)) from exc

    sw = game.social_welfare(g, s, p)
    nash = game.is_nash(g, s, p)
    bound = analysis.poa_upper_bound(p)
    d = analysis.decompose(g, s)
    out = {
        "params": p,
        "nodes": g.num_nodes,
        "edges": g.num_edges,
        "edge_state": n,
        "social_welfare": sw,
        "optimal_welfare": game.optimal_welfare(g, p),
        "quotient": game.quotient(n, p) if sw > 0 else None,
        "bound": bound.bound,
        "nash": {
            "is_nash": nash.is_nash,
            "deviators": [
                {"node": dv.node, "current": dv.current, "best": dv.best} for dv in nash.deviators
            ],
        },
        "decomposition": {
            "phi_edges": len(d.phi_edges),
            "lambda_edges": len(d.lambda_edges),
            "phi_state": d.phi_state,
            "lambda_state": d.lambda_state,
        },
    }
    checks: dict = {}
    if nash.is_nash:
        checks["nash_decomposition"] = analysis.nash_decomposition_check(g, s, p)
        if not n.is_zero():
            checks["mediant"] = analysis.mediant_check(n, d, p)
            checks["quotient_le_bound"] = game.quotient(n, p) <= bound.bound
        checks["lambda_bound"] = (
            None if d.lambda_state.is_zero() else analysis.lambda_bound_check(d.lambda_state, p)
        )
        checks["phi_counting"] = (
            analysis.phi_counting_check(g, s, p) if p.gamma < p.beta else None
        )
    out["checks"] = checks
    _emit(out, args.format)
    return EXIT_OK


def cmd_worst_case(args) -> int:
    p = _params_from_args(args)
    try:
        rep = worstcase.worst_case_report(p)
    except InternalRealizationFailure as exc:
        raise CliError(EXIT_INTERNAL, str(exc)) from exc
    instance = graph_to_json(rep.graph, rep.profile)
    if args.out:
        Path(args.out).write_text(json.dumps(instance, indent=2) + "\n")
    payload = {
        "params": p,
        "plan": rep.plan,
        "state": rep.state,
        "social_welfare": rep.welfare,
        "optimal_welfare": rep.optimum,
        "achieved": rep.achieved,
        "bound": rep.bound,
        "equal": rep.equal,
    }
    if args.format == "json":
        payload["graph"] = instance
    else:
        payload["graph"] = f"{rep.graph.num_nodes} nodes, {rep.graph.num_edges} edges"
    _emit(payload, args.format)
    return EXIT_OK if rep.equal else EXIT_INTERNAL


def _campaign_config(args) -> oracle.CampaignConfig:
    cfg = oracle.CampaignConfig(seed=args.seed, cap=args.cap, workers=args.workers)
    if args.campaign:
        try:
            raw = json.loads(Path(args.campaign).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise CliError(EXIT_PARSE, f"cannot read campaign config: {exc}") from exc
        cfg.num_graphs = int(raw.get("num_graphs", cfg.num_graphs))
        cfg.n = int(raw.get("n", cfg.n))
        cfg.edge_probability = to_rational(raw.get("edge_probability", "1/2"))
        cfg.seed = int(raw.get("seed", cfg.seed))
        cfg.params_list = [parse_params(*t) for t in raw.get("params_list", [])]
    else:
        cfg.num_graphs = args.num_graphs
        cfg.n = args.nodes
        cfg.edge_probability = to_rational(args.edge_prob)
    if not cfg.params_list:
        cfg.params_list = [_params_from_args(args)]
    return cfg


def cmd_oracle(args) -> int:
    try:
        if args.graph:
            p = _params_from_args(args)
            g, _ = _load_graph(args.graph)
            try:
                res = oracle.exact_poa(g, p, cap=args.cap, workers=args.workers)
            except EmptyGraph as exc:
                raise CliError(EXIT_PARSE, str(exc)) from exc
            payload = {
                "params": p,
                "equilibria": len(res.nash_profiles),
                "worst_ne_welfare": res.worst_ne_welfare,
                "optimal_welfare": res.optimal_welfare,
                "exact_poa": res.exact_poa,
                "bound": res.bound,
                "margin": res.margin,
            }
            if args.list:
                payload["nash_profiles"] = [s.label(g.nodes) for s in res.nash_profiles]
            _emit(payload, args.format)
            return EXIT_OK if res.margin >= 0 else EXIT_VIOLATION

        cfg = _campaign_config(args)
        rep = oracle.verify_bound_campaign(cfg)
    except TooLarge as exc:
        raise CliError(EXIT_TOO_LARGE, str(exc)) from exc
    payload = {
        "config": {
            "num_graphs": cfg.num_graphs,
            "n": cfg.n,
            "edge_probability": cfg.edge_probability,
            "params_list": cfg.params_list,
            "seed": cfg.seed,
            "cap": cfg.cap,
        },
        "prng": rep.prng,
        "graphs": rep.graphs,
        "runs": rep.runs,
        "equilibria": rep.equilibria,
        "checks": rep.checks,
        "skipped": rep.skipped,
        "violations": rep.violations,
    }
    if args.format == "json":
        payload["results"] = rep.results
    if args.timing:
        payload["wall_time_s"] = round(rep.wall_time, 3)
    _emit(payload, args.format)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_dynamics(args) -> int:
    p = _params_from_args(args)
    g, s = _load_graph(args.graph)
    if s is None:
        s = Profile.uniform(g.nodes, Strategy.B)
    try:
        trace = game.run_dynamics(g, s, p, order=args.schedule, seed=args.seed)
    except ProfileMismatch as exc:
        raise CliError(EXIT_PROFILE, str(exc)) from exc
    payload = {
        "params": p,
        "schedule": args.schedule,
        "seed": args.seed,
        "steps": [
            {"node": st.node, "from": st.old.value, "to": st.new.value, "potential": st.potential_after}
            for st in trace.steps
        ],
        "converged": trace.converged,
        "final": trace.final.label(g.nodes),
        "final_is_nash": game.is_nash(g, trace.final, p).is_nash,
        "final_welfare": game.social_welfare(g, trace.final, p),
    }
    _emit(payload, args.format)
    return EXIT_OK


def _add_params(sp) -> None:
    sp.add_argument("-a", "--alpha", help="A-A payoff (p, p/q or decimal)")
    sp.add_argument("-b", "--beta", help="B-B payoff")
    sp.add_argument("-g", "--gamma", help="mixed-edge payoff")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coordpoa", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        _add_params(sp)
        sp.add_argument("--format", choices=("json", "text"), default="text")

    sp = sub.add_parser("bound", help="closed-form price-of-anarchy bound")
    common(sp)
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("analyze", help="welfare, equilibrium and lemma checks for a graph with strategies")
    common(sp)
    sp.add_argument("--graph", required=True, help="graph JSON or edge list")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("worst-case", help="build a tight worst-case equilibrium")
    common(sp)
    sp.add_argument("--out", help="write the instance as graph JSON")
    sp.set_defaults(func=cmd_worst_case)

    sp = sub.add_parser("oracle", help="exhaustive price of anarchy or a random-graph campaign")
    common(sp)
    src = sp.add_mutually_exclusive_group()
    src.add_argument("--graph", help="graph JSON or edge list")
    src.add_argument("--campaign", help="campaign config JSON")
    sp.add_argument("--num-graphs", type=int, default=100)
    sp.add_argument("--nodes", type=int, default=8)
    sp.add_argument("--edge-prob", default="1/2")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--list", action="store_true", help="list equilibrium profiles")
    sp.add_argument("--timing", action="store_true", help="include wall time in the campaign report")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("dynamics", help="best-response dynamics from the file's strategies (all-B if absent)")
    common(sp)
    sp.add_argument("--graph", required=True)
    sp.add_argument("--schedule", choices=game.SCHEDULES, default="round-robin")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_dynamics)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NotAnEquilibrium as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PROFILE
    except CoordPoAError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
