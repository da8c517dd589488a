"""Tight worst-case equilibria.

Write (beta-gamma)/(alpha-gamma) = a/b in lowest terms. In the emitted
instance every A-player has b C-edges and a A-edges, every B-player has a
C-edges and b B-edges, which makes each of them exactly indifferent. A-edges
and B-edges are circulant regular graphs on the A- and B-players; C-edges form
a biregular bipartite circulant between the two sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .analysis import poa_upper_bound
from .errors import InternalRealizationFailure, PerfectCompatibility, ZeroState
from .game import is_nash, optimal_welfare, quotient, social_welfare
from .graph import EdgeState, Graph, Params, Profile, Strategy, classify_edges


@dataclass(frozen=True)
class WorstCasePlan:
    fractional_state: EdgeState
    integral_state: EdgeState
    n_c_min: Fraction
    scaling_factor: Fraction
    realizability_multiplier: int
    a_group_size: int  # C-edges per A-player
    b_group_size: int  # C-edges per B-player
    num_a_players: int
    num_b_players: int


def _ratios(p: Params) -> tuple[Fraction, Fraction]:
    if p.gamma == p.beta:
        raise PerfectCompatibility(p.alpha / p.beta)
    x = (p.beta - p.gamma) / (p.alpha - p.gamma)
    return x, 1 / x


def feasibility_threshold(p: Params) -> Fraction:
    """Least C-edge count for which both counting bounds can be met."""
    _, y = _ratios(p)
    return y + 1


def fractional_worst_state(p: Params) -> EdgeState:
    x, y = _ratios(p)
    n_c = y + 1
    return EdgeState(x / 2 * n_c, y / 2 * n_c, n_c)


def scale_to_integral(n: EdgeState) -> tuple[EdgeState, Fraction]:
    """Smallest positive multiple of ``n`` with integer components.

    The result has components with gcd 1; the factor is returned alongside.
    """
    if n.is_zero():
        raise ZeroState("cannot scale the zero state")
    den = lcm(*(x.denominator for x in n.as_tuple()))
    ints = [int(x * den) for x in n.as_tuple()]
    g = gcd(*ints)
    factor = Fraction(den, g)
    return n.scale(factor), factor


def circulant_regular(names: list[str], degree: int) -> list[tuple[str, str]]:
    """Simple ``degree``-regular graph on ``names`` (needs degree < m, degree*m even)."""
    m = len(names)
    if degree >= m or (degree * m) % 2:
        raise ValueError(f"no simple {degree}-regular graph on {m} vertices")
    edges = []
    for i in range(m):
        for off in range(1, degree // 2 + 1):
            edges.append((names[i], names[(i + off) % m]))
    if degree % 2:
        for i in range(m // 2):
            edges.append((names[i], names[i + m // 2]))
    return edges


def bipartite_circulant(left: list[str], right: list[str], left_degree: int) -> list[tuple[str, str]]:
    """Biregular bipartite edges: edge t joins left[t % L] and right[t % R].

    Simple as long as L*left_degree <= lcm(L, R), which holds for the sizes
    used here (L = k*a, R = k*b, left_degree = b, a and b coprime).
    """
    total = len(left) * left_degree
    if total > lcm(len(left), len(right)):
        raise ValueError("bipartite circulant would repeat a pair")
    return [(left[t % len(left)], right[t % len(right)]) for t in range(total)]


def _realizable(k: int, a: int, b: int) -> bool:
    na, nb = k * a, k * b
    return a < na and (a * na) % 2 == 0 and b < nb and (b * nb) % 2 == 0


def plan_worst_case(p: Params) -> WorstCasePlan:
    frac = fractional_worst_state(p)
    integral, factor = scale_to_integral(frac)
    x, _ = _ratios(p)
    a, b = x.numerator, x.denominator
    # integral n_ec is always a multiple of lcm(a, b) = a*b; C-edges come in
    # blocks of a*b so the player counts stay integral
    base = int(integral.n_ec) // (a * b)
    mult = 1
    while not _realizable(base * mult, a, b):
        mult += 1
    k = base * mult
    return WorstCasePlan(
        fractional_state=frac,
        integral_state=integral,
        n_c_min=feasibility_threshold(p),
        scaling_factor=factor,
        realizability_multiplier=mult,
        a_group_size=b,
        b_group_size=a,
        num_a_players=k * a,
        num_b_players=k * b,
    )


def _names(prefix: str, count: int) -> list[str]:
    width = len(str(max(count - 1, 0)))
    return [f"{prefix}{i:0{width}d}" for i in range(count)]


def realize_graph(p: Params) -> tuple[Graph, Profile, WorstCasePlan]:
    plan = plan_worst_case(p)
    a, b = plan.b_group_size, plan.a_group_size
    a_players = _names("a", plan.num_a_players)
    b_players = _names("b", plan.num_b_players)
    edges = (
        circulant_regular(a_players, a)
        + circulant_regular(b_players, b)
        + bipartite_circulant(a_players, b_players, b)
    )
    g = Graph(tuple(a_players + b_players), tuple(edges))
    s = Profile({**{v: Strategy.A for v in a_players}, **{v: Strategy.B for v in b_players}})

    report = is_nash(g, s, p)
    if not report.is_nash:
        raise InternalRealizationFailure(f"constructed instance for {p} is not an equilibrium: {report.deviators}")
    state = classify_edges(g, s)
    expected = plan.integral_state.scale(plan.realizability_multiplier)
    if state != expected:
        raise InternalRealizationFailure(f"constructed state {state} != planned {expected}")
    bound = poa_upper_bound(p).bound
    if quotient(state, p) != bound:
        raise InternalRealizationFailure(f"constructed quotient {quotient(state, p)} != bound {bound}")
    return g, s, plan


@dataclass(frozen=True)
class WorstCaseReport:
    params: Params
    plan: WorstCasePlan | None  # None when gamma == beta
    graph: Graph
    profile: Profile
    state: EdgeState
    welfare: Fraction
    optimum: Fraction
    achieved: Fraction
    bound: Fraction

    @property
    def equal(self) -> bool:
        return self.achieved == self.bound


def worst_case_report(p: Params) -> WorstCaseReport:
    try:
        g, s, plan = realize_graph(p)
    except PerfectCompatibility:
        # all-B on a single edge is the worst equilibrium here
        g = Graph(("b0", "b1"), (("b0", "b1"),))
        s = Profile.uniform(g.nodes, Strategy.B)
        plan = None
    state = classify_edges(g, s)
    return WorstCaseReport(
        params=p,
        plan=plan,
        graph=g,
        profile=s,
        state=state,
        welfare=social_welfare(g, s, p),
        optimum=optimal_welfare(g, p),
        achieved=quotient(state, p),
        bound=poa_upper_bound(p).bound,
    )
