"""Exhaustive ground truth for small graphs.

Profiles are indexed by integers: bit i of the index is set iff node
``g.nodes[i]`` plays B, so index 0 is all-A and the last index is all-B.
Enumeration walks indices in increasing order and can be split across worker
processes over disjoint index ranges.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .analysis import (
    decompose,
    lambda_bound_check,
    mediant_check,
    nash_decomposition_check,
    phi_counting_check,
    poa_upper_bound,
)
from .errors import EmptyGraph, TooLarge
from .game import optimal_welfare, quotient, social_welfare
from .graph import Graph, Params, Profile, Strategy, classify_edges, format_rational

DEFAULT_CAP = 20
PRNG_NAME = "python random.Random (MT19937)"


def _integer_payoffs(p: Params) -> tuple[int, int, int]:
    # equilibrium comparisons are invariant under positive scaling
    d = lcm(p.alpha.denominator, p.beta.denominator, p.gamma.denominator)
    return int(p.alpha * d), int(p.beta * d), int(p.gamma * d)


def _neighbor_masks(g: Graph) -> list[int]:
    idx = g.index
    masks = [0] * g.num_nodes
    for u, w in g.edges:
        masks[idx[u]] |= 1 << idx[w]
        masks[idx[w]] |= 1 << idx[u]
    return masks


def _scan(masks: Sequence[int], payoffs: tuple[int, int, int], start: int, stop: int) -> list[int]:
    alpha, beta, gamma = payoffs
    degs = [m.bit_count() for m in masks]
    found = []
    for mask in range(start, stop):
        for i, nb in enumerate(masks):
            n_b = (nb & mask).bit_count()
            n_a = degs[i] - n_b
            if mask >> i & 1:
                if n_a * alpha + n_b * gamma > n_b * beta + n_a * gamma:
                    break
            elif n_b * beta + n_a * gamma > n_a * alpha + n_b * gamma:
                break
        else:
            found.append(mask)
    return found


def profile_from_index(g: Graph, mask: int) -> Profile:
    return Profile({v: Strategy.B if mask >> i & 1 else Strategy.A for i, v in enumerate(g.nodes)})


def nash_indices(g: Graph, p: Params, cap: int = DEFAULT_CAP, workers: int = 1) -> list[int]:
    if g.num_nodes > cap:
        raise TooLarge(f"{g.num_nodes} nodes exceeds the enumeration cap of {cap}")
    masks = _neighbor_masks(g)
    payoffs = _integer_payoffs(p)
    total = 1 << g.num_nodes
    if workers <= 1 or total < 2 * workers:
        return _scan(masks, payoffs, 0, total)
    bounds = [total * k // workers for k in range(workers + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_scan, masks, payoffs, lo, hi) for lo, hi in zip(bounds, bounds[1:])]
        chunks = [f.result() for f in futures]
    return [m for chunk in chunks for m in chunk]


def enumerate_nash(g: Graph, p: Params, cap: int = DEFAULT_CAP, workers: int = 1) -> list[Profile]:
    return [profile_from_index(g, m) for m in nash_indices(g, p, cap, workers)]


@dataclass(frozen=True)
class OracleResult:
    nash_profiles: tuple[Profile, ...]
    worst_ne_welfare: Fraction
    optimal_welfare: Fraction
    exact_poa: Fraction
    bound: Fraction
    margin: Fraction


def exact_poa(g: Graph, p: Params, cap: int = DEFAULT_CAP, workers: int = 1) -> OracleResult:
    if g.num_edges == 0:
        raise EmptyGraph("price of anarchy is undefined on a graph without edges")
    profiles = enumerate_nash(g, p, cap, workers)
    worst = min(social_welfare(g, s, p) for s in profiles)
    opt = optimal_welfare(g, p)
    poa = opt / worst
    bound = poa_upper_bound(p).bound
    return OracleResult(tuple(profiles), worst, opt, poa, bound, bound - poa)


def random_graph(n: int, edge_probability, seed: int) -> Graph:
    """G(n, p) sample with nodes ``v0..v{n-1}``.

    Each pair (i, j), i < j, is visited in lexicographic order and kept when
    ``random.Random(seed).random() < p``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    prob = Fraction(edge_probability)
    if not 0 <= prob <= 1:
        raise ValueError(f"edge probability must lie in [0, 1], got {prob}")
    rng = random.Random(seed)
    nodes = [f"v{i}" for i in range(n)]
    edges = [(nodes[i], nodes[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < prob]
    return Graph(tuple(nodes), tuple(edges))


@dataclass
class CampaignConfig:
    num_graphs: int = 100
    n: int = 8
    edge_probability: Fraction = Fraction(1, 2)
    params_list: list[Params] = field(default_factory=list)
    seed: int = 0
    cap: int = DEFAULT_CAP
    workers: int = 1


@dataclass
class CampaignReport:
    config: CampaignConfig | None
    graphs: int = 0
    runs: int = 0
    equilibria: int = 0
    checks: dict[str, int] = field(default_factory=dict)
    skipped: dict[str, int] = field(default_factory=dict)
    results: list[dict] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    wall_time: float = 0.0
    prng: str = PRNG_NAME

    @property
    def ok(self) -> bool:
        return not self.violations

    def _count(self, name: str, table: dict[str, int]) -> None:
        table[name] = table.get(name, 0) + 1


def check_graph(g: Graph, p: Params, report: CampaignReport, label: str, cap: int = DEFAULT_CAP, workers: int = 1) -> None:
    """Run the oracle on one graph and every lemma check on each equilibrium found."""
    if g.num_edges == 0:
        report._count("empty_graph", report.skipped)
        return
    res = exact_poa(g, p, cap, workers)
    report.runs += 1
    report.equilibria += len(res.nash_profiles)
    report.results.append(
        {
            "graph": label,
            "params": [format_rational(x) for x in p.as_tuple()],
            "edges": g.num_edges,
            "equilibria": len(res.nash_profiles),
            "exact_poa": format_rational(res.exact_poa),
            "bound": format_rational(res.bound),
            "margin": format_rational(res.margin),
        }
    )

    def fail(check: str, s: Profile | None, detail: str = "") -> None:
        report.violations.append(
            {
                "graph": label,
                "params": [format_rational(x) for x in p.as_tuple()],
                "check": check,
                "profile": s.label(g.nodes) if s is not None else None,
                "detail": detail,
            }
        )

    report._count("exact_poa_le_bound", report.checks)
    if res.exact_poa > res.bound:
        fail("exact_poa_le_bound", None, f"{res.exact_poa} > {res.bound}")

    counting_defined = p.gamma != p.beta and p.gamma != p.alpha
    for s in res.nash_profiles:
        n = classify_edges(g, s)
        d = decompose(g, s)
        r = quotient(n, p)

        report._count("quotient_le_bound", report.checks)
        if r > res.bound:
            fail("quotient_le_bound", s, f"{r} > {res.bound}")

        report._count("nash_decomposition", report.checks)
        if not nash_decomposition_check(g, s, p):
            fail("nash_decomposition", s)

        report._count("mediant", report.checks)
        if not mediant_check(n, d, p):
            fail("mediant", s)

        if d.lambda_state.is_zero():
            report._count("lambda_bound", report.skipped)
        else:
            report._count("lambda_bound", report.checks)
            if not lambda_bound_check(d.lambda_state, p):
                fail("lambda_bound", s)

        if counting_defined:
            report._count("phi_counting", report.checks)
            if not phi_counting_check(g, s, p):
                fail("phi_counting", s)
        else:
            report._count("phi_counting", report.skipped)


def run_campaign(graphs: Sequence[tuple[str, Graph]], params_list: Sequence[Params], cap: int = DEFAULT_CAP, workers: int = 1) -> CampaignReport:
    report = CampaignReport(config=None)
    t0 = time.perf_counter()
    for label, g in graphs:
        if g.num_nodes > cap:
            raise TooLarge(f"graph {label} has {g.num_nodes} nodes, cap is {cap}")
        report.graphs += 1
        for p in params_list:
            check_graph(g, p, report, label, cap, workers)
    report.wall_time = time.perf_counter() - t0
    return report


def campaign_graphs(config: CampaignConfig) -> list[tuple[str, Graph]]:
    master = random.Random(config.seed)
    out = []
    for i in range(config.num_graphs):
        graph_seed = master.getrandbits(32)
        out.append((f"G{i}(seed={graph_seed})", random_graph(config.n, config.edge_probability, graph_seed)))
    return out


def verify_bound_campaign(config: CampaignConfig) -> CampaignReport:
    if config.n > config.cap:
        raise TooLarge(f"n={config.n} exceeds the enumeration cap of {config.cap}")
    report = run_campaign(campaign_graphs(config), config.params_list, config.cap, config.workers)
    report.config = config
    return report
