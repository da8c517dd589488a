"""Utilities, welfare, equilibrium checks and best-response dynamics."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import CoordPoAError, UnknownNode, ZeroWelfare
from .graph import EdgeState, Graph, Params, Profile, Strategy, check_profile, classify_edges

SCHEDULES = ("round-robin", "random")


def _utility_as(g: Graph, s: Profile, p: Params, v: str, strategy: Strategy) -> Fraction:
    return sum((p.payoff(strategy, s[w]) for w in g.neighbors(v)), Fraction(0))


def utility(g: Graph, s: Profile, p: Params, v: str) -> Fraction:
    if v not in g.index:
        raise UnknownNode(f"unknown node {v!r}")
    return _utility_as(g, s, p, v, s[v])


def social_welfare(g: Graph, s: Profile, p: Params) -> Fraction:
    """Sum of all utilities, computed from the edge classification."""
    return classify_edges(g, s).welfare(p)


def optimal_welfare(g: Graph, p: Params) -> Fraction:
    return 2 * g.num_edges * p.alpha


def potential(g: Graph, s: Profile, p: Params) -> Fraction:
    """Exact potential of the game: half the social welfare."""
    return social_welfare(g, s, p) / 2


@dataclass(frozen=True)
class Deviation:
    node: str
    current: Fraction
    best: Fraction


@dataclass(frozen=True)
class NashReport:
    is_nash: bool
    deviators: tuple[Deviation, ...]

    def __bool__(self):
        return self.is_nash


def is_nash(g: Graph, s: Profile, p: Params) -> NashReport:
    """Weak equilibrium test: nobody gains strictly by switching."""
    check_profile(g, s)
    deviators = []
    for v in g.nodes:
        cur = _utility_as(g, s, p, v, s[v])
        alt = _utility_as(g, s, p, v, s[v].other)
        if alt > cur:
            deviators.append(Deviation(v, cur, alt))
    return NashReport(not deviators, tuple(deviators))


def quotient(n: EdgeState, p: Params) -> Fraction:
    """Optimal welfare on ``n.total`` edges divided by the welfare of ``n``."""
    w = n.welfare(p)
    if w == 0:
        raise ZeroWelfare(f"state {n} has zero welfare under {p}")
    return 2 * n.total * p.alpha / w


@dataclass(frozen=True)
class Step:
    node: str
    old: Strategy
    new: Strategy
    potential_after: Fraction


@dataclass(frozen=True)
class DynamicsTrace:
    steps: tuple[Step, ...]
    final: Profile
    converged: bool


def run_dynamics(
    g: Graph,
    s0: Profile,
    p: Params,
    order: str = "round-robin",
    seed: int = 0,
    max_rounds: int | None = None,
) -> DynamicsTrace:
    """Asynchronous strict best-response dynamics.

    Nodes are visited in ``g.nodes`` order (``round-robin``) or in a fresh
    permutation every round drawn from ``random.Random(seed)`` (``random``).
    A node switches only if that strictly raises its utility. Stops after the
    first round with no switch.
    """
    check_profile(g, s0)
    if order not in SCHEDULES:
        raise CoordPoAError(f"unknown schedule {order!r}; expected one of {SCHEDULES}")
    rng = random.Random(seed)
    current = dict(s0.assignment)
    pot = potential(g, s0, p)
    steps: list[Step] = []
    rounds = 0
    while True:
        visit = list(g.nodes)
        if order == "random":
            rng.shuffle(visit)
        changed = False
        for v in visit:
            mine = current[v]
            cur = sum((p.payoff(mine, current[w]) for w in g.neighbors(v)), Fraction(0))
            alt = sum((p.payoff(mine.other, current[w]) for w in g.neighbors(v)), Fraction(0))
            if alt > cur:
                current[v] = mine.other
                # exact potential: the potential moves by the deviator's gain
                pot += alt - cur
                steps.append(Step(v, mine, mine.other, pot))
                changed = True
        rounds += 1
        if not changed:
            return DynamicsTrace(tuple(steps), Profile(current), True)
        if max_rounds is not None and rounds >= max_rounds:
            return DynamicsTrace(tuple(steps), Profile(current), False)
