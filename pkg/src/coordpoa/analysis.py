"""Decomposition of an equilibrium and the bounds built on it.

The closed-form bound is alpha*(alpha + beta - 2*gamma) / (alpha*beta - gamma**2).
Every other function here is a checker for one step of the argument that
leads to it, meant to be run against concrete equilibria.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    DegenerateRatio,
    InvalidLambdaState,
    NotAnEquilibrium,
    ZeroWelfare,
)
from .game import is_nash, quotient
from .graph import (
    Edge,
    EdgeState,
    Graph,
    Params,
    Profile,
    check_profile,
    classify_edges,
    count_edges,
    edge_type,
)


@dataclass(frozen=True)
class Decomposition:
    phi_edges: tuple[Edge, ...]
    lambda_edges: tuple[Edge, ...]
    phi_state: EdgeState
    lambda_state: EdgeState


def decompose(g: Graph, s: Profile) -> Decomposition:
    """Split E(G) into the edges touching a C-edge endpoint and the rest."""
    check_profile(g, s)
    c_nodes = set()
    for e in g.edges:
        if edge_type(s, e) == "c":
            c_nodes.update(e)
    phi = tuple(e for e in g.edges if e[0] in c_nodes or e[1] in c_nodes)
    lam = tuple(e for e in g.edges if e[0] not in c_nodes and e[1] not in c_nodes)
    return Decomposition(phi, lam, count_edges(phi, s), count_edges(lam, s))


def _require_nash(g: Graph, s: Profile, p: Params) -> None:
    report = is_nash(g, s, p)
    if not report.is_nash:
        bad = ", ".join(d.node for d in report.deviators)
        raise NotAnEquilibrium(f"profile is not an equilibrium; deviators: {bad}")


def nash_decomposition_check(g: Graph, s: Profile, p: Params) -> bool:
    """True iff ``s`` restricted to each part is an equilibrium of that part."""
    _require_nash(g, s, p)
    d = decompose(g, s)
    for edges in (d.phi_edges, d.lambda_edges):
        h = g.edge_induced(edges)
        if not is_nash(h, s.restrict(h.nodes), p).is_nash:
            return False
    return True


def mediant_check(n: EdgeState, d: Decomposition, p: Params) -> bool:
    """quotient(n) <= max over the nonempty parts of their quotients."""
    if n != d.phi_state + d.lambda_state:
        raise ValueError(f"state {n} is not the sum of the decomposition parts")
    parts = [x for x in (d.phi_state, d.lambda_state) if not x.is_zero()]
    if not parts:
        raise ZeroWelfare("both decomposition parts are empty")
    return quotient(n, p) <= max(quotient(x, p) for x in parts)


def lambda_bound_check(lambda_state: EdgeState, p: Params) -> bool:
    if lambda_state.n_ec != 0:
        raise InvalidLambdaState(f"homogeneous part has {lambda_state.n_ec} C-edges")
    return quotient(lambda_state, p) <= p.alpha / p.beta


def counting_bounds(n_c: Fraction, p: Params) -> dict[str, Fraction]:
    """Lower bounds on the A- and B-edge counts of the C-edge part.

    ``a_pairs``/``b_pairs`` assume every A-/B-edge is shared by two players;
    ``a_simple``/``b_simple`` use that at most n_c*(n_c-1)/2 edges fit among
    n_c players.
    """
    if p.gamma == p.beta or p.gamma == p.alpha:
        raise DegenerateRatio(f"counting bounds undefined for gamma == beta or gamma == alpha ({p})")
    x = (p.beta - p.gamma) / (p.alpha - p.gamma)
    pairs = Fraction(n_c * (n_c - 1), 2)
    return {
        "a_pairs": x / 2 * n_c,
        "b_pairs": n_c / (2 * x),
        "a_simple": x * n_c - pairs,
        "b_simple": n_c / x - pairs,
    }


def phi_counting_check(g: Graph, s: Profile, p: Params) -> bool:
    if p.gamma == p.beta or p.gamma == p.alpha:
        raise DegenerateRatio(f"counting bounds undefined for gamma == beta or gamma == alpha ({p})")
    _require_nash(g, s, p)
    phi = decompose(g, s).phi_state
    lb = counting_bounds(phi.n_ec, p)
    return (
        phi.n_ea >= lb["a_pairs"]
        and phi.n_eb >= lb["b_pairs"]
        and phi.n_ea >= lb["a_simple"]
        and phi.n_eb >= lb["b_simple"]
    )


@dataclass(frozen=True)
class BoundReport:
    bound: Fraction
    corollary_bound: Fraction
    gamma_eq_beta_value: Fraction
    inputs: Params
    degenerate: bool = False


def closed_form_bound(p: Params) -> Fraction:
    a, b, g = p.as_tuple()
    return a * (a + b - 2 * g) / (a * b - g * g)


def poa_upper_bound(p: Params) -> BoundReport:
    a, b, g = p.as_tuple()
    degenerate = a * b == g * g  # only at alpha == beta == gamma
    bound = Fraction(1) if degenerate else closed_form_bound(p)
    return BoundReport(bound, a / b + 1, a / b, p, degenerate)


@dataclass
class MonotonicityReport:
    checks: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def monotonicity_report(
    p_grid: Sequence[Params], state_grid: Sequence[EdgeState], step: Fraction = Fraction(1)
) -> MonotonicityReport:
    """Finite-difference sign checks of the quotient and of the bound.

    For every (params, state) pair the quotient must not increase when one
    A-edge (``step``) is added, must not decrease when a C-edge is added, and
    must move in the direction of n_ea*(alpha-beta) + n_ec*(gamma-beta) when a
    B-edge is added. Separately, params sharing (alpha, beta) are sorted by
    gamma and the bound must be non-increasing along them.
    """
    step = Fraction(step)
    rep = MonotonicityReport()
    for p in p_grid:
        for n in state_grid:
            r = quotient(n, p)
            da = quotient(n + EdgeState(step, 0, 0), p) - r
            db = quotient(n + EdgeState(0, step, 0), p) - r
            dc = quotient(n + EdgeState(0, 0, step), p) - r
            expect_b = _sign(n.n_ea * (p.alpha - p.beta) + n.n_ec * (p.gamma - p.beta))
            rep.checks += 3
            if da > 0:
                rep.violations.append(f"quotient increased with n_ea at {n}, {p}")
            if dc < 0:
                rep.violations.append(f"quotient decreased with n_ec at {n}, {p}")
            if _sign(db) != expect_b:
                rep.violations.append(f"n_eb difference has sign {_sign(db)}, expected {expect_b} at {n}, {p}")

    by_ab: dict[tuple[Fraction, Fraction], list[Params]] = {}
    for p in p_grid:
        by_ab.setdefault((p.alpha, p.beta), []).append(p)
    for group in by_ab.values():
        group.sort(key=lambda q: q.gamma)
        bounds = [poa_upper_bound(q).bound for q in group]
        for (q0, b0), (q1, b1) in zip(zip(group, bounds), zip(group[1:], bounds[1:])):
            rep.checks += 1
            if b1 > b0:
                rep.violations.append(f"bound increased from {b0} at {q0} to {b1} at {q1}")
    return rep
