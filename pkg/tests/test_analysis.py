from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coordpoa import (
    DegenerateRatio,
    EdgeState,
    InvalidLambdaState,
    NotAnEquilibrium,
    Profile,
    build_graph,
    classify_edges,
    decompose,
    enumerate_nash,
    lambda_bound_check,
    mediant_check,
    monotonicity_report,
    nash_decomposition_check,
    phi_counting_check,
    poa_upper_bound,
    quotient,
    random_graph,
    validate_params,
)
from coordpoa.analysis import Decomposition, counting_bounds

from .conftest import graph_and_profile, params

P321 = validate_params(3, 2, 1)
P110 = validate_params(1, 1, 0)


def test_decompose_all_a(fig2):
    g, _ = fig2
    d = decompose(g, Profile.uniform(g.nodes, "A"))
    assert d.phi_edges == ()
    assert d.lambda_state == EdgeState(9, 0, 0)


def test_decompose_cycle(cycle4):
    g, s = cycle4
    d = decompose(g, s)
    assert set(d.phi_edges) == set(g.edges)
    assert d.lambda_edges == ()


def test_decompose_path():
    g = build_graph(["v1", "v2", "v3", "v4"], [("v1", "v2"), ("v2", "v3"), ("v3", "v4")])
    d = decompose(g, Profile.from_string(g.nodes, "AAAB"))
    assert set(d.phi_edges) == {("v2", "v3"), ("v3", "v4")}
    assert d.lambda_edges == (("v1", "v2"),)
    assert d.phi_state == EdgeState(1, 0, 1)
    assert d.lambda_state == EdgeState(1, 0, 0)


@given(graph_and_profile())
def test_decomposition_invariants(gs):
    g, s = gs
    d = decompose(g, s)
    assert set(d.phi_edges).isdisjoint(d.lambda_edges)
    assert set(d.phi_edges) | set(d.lambda_edges) == set(g.edges)
    assert d.lambda_state.n_ec == 0
    assert d.phi_state + d.lambda_state == classify_edges(g, s)
    c_edges = [e for e in g.edges if s[e[0]] is not s[e[1]]]
    for e in d.phi_edges:
        assert any(set(e) & set(c) for c in c_edges)
    # homogeneous part: every edge joins equal strategies
    for u, w in d.lambda_edges:
        assert s[u] is s[w]


def test_nash_decomposition_simple(cycle4, fig2):
    g, s = cycle4
    assert nash_decomposition_check(g, s, P110)
    g, s = fig2
    assert nash_decomposition_check(g, Profile.uniform(g.nodes, "B"), P321)
    assert nash_decomposition_check(g, s, P321)


def test_nash_decomposition_requires_nash():
    g = build_graph(["x", "y"], [("x", "y")])
    with pytest.raises(NotAnEquilibrium):
        nash_decomposition_check(g, Profile.from_string(g.nodes, "AB"), P110)


@pytest.mark.parametrize("seed", range(20))
def test_nash_decomposition_on_enumerated_equilibria(seed):
    g = random_graph(8, Fraction(1, 2), seed)
    for p in (P321, P110, validate_params(5, 2, 1)):
        for s in enumerate_nash(g, p):
            assert nash_decomposition_check(g, s, p)


def test_mediant_tight_instance():
    d = Decomposition((), (), EdgeState(1, 4, 4), EdgeState(0, 0, 0))
    assert mediant_check(EdgeState(1, 4, 4), d, P321)


def test_mediant_path_split():
    d = Decomposition((), (), EdgeState(1, 0, 1), EdgeState(1, 0, 0))
    n = EdgeState(2, 0, 1)
    assert quotient(n, P110) == Fraction(3, 2)
    assert quotient(d.phi_state, P110) == 2
    assert quotient(d.lambda_state, P110) == 1
    assert mediant_check(n, d, P110)


def test_mediant_rejects_wrong_sum():
    d = Decomposition((), (), EdgeState(1, 0, 1), EdgeState(1, 0, 0))
    with pytest.raises(ValueError):
        mediant_check(EdgeState(1, 1, 1), d, P110)


nonzero_states = st.tuples(st.integers(0, 20), st.integers(0, 20), st.integers(0, 20)).filter(
    lambda t: t[0] + t[1] > 0
)


@given(nonzero_states, nonzero_states, params())
def test_mediant_any_split(x, y, p):
    x, y = EdgeState(*x), EdgeState(*y)
    d = Decomposition((), (), x, y)
    assert mediant_check(x + y, d, p)


def test_lambda_bound_examples():
    for p in (P321, P110, validate_params(7, 3, 2)):
        assert lambda_bound_check(EdgeState(0, 5, 0), p)
        assert quotient(EdgeState(0, 5, 0), p) == p.alpha / p.beta
        assert lambda_bound_check(EdgeState(5, 0, 0), p)
    p = validate_params(3, 2, 0)
    assert quotient(EdgeState(1, 1, 0), p) == Fraction(12, 10)
    assert lambda_bound_check(EdgeState(1, 1, 0), p)


def test_lambda_bound_rejects_c_edges():
    with pytest.raises(InvalidLambdaState):
        lambda_bound_check(EdgeState(1, 1, 1), P321)


def test_counting_bounds_tight_at_fig2(fig2):
    g, s = fig2
    phi = decompose(g, s).phi_state
    lb = counting_bounds(phi.n_ec, P321)
    assert phi.n_ea == lb["a_pairs"] == 1
    assert phi.n_eb == lb["b_pairs"] == 4
    assert phi_counting_check(g, s, P321)


def test_phi_counting_vacuous_without_c_edges(fig2):
    g, _ = fig2
    assert phi_counting_check(g, Profile.uniform(g.nodes, "B"), P321)


def test_phi_counting_degenerate(fig2):
    g, _ = fig2
    with pytest.raises(DegenerateRatio):
        phi_counting_check(g, Profile.uniform(g.nodes, "B"), validate_params(3, 2, 2))


def test_phi_counting_requires_nash(cycle4):
    g, s = cycle4
    with pytest.raises(NotAnEquilibrium):
        phi_counting_check(g, s, validate_params(2, 1, 0))


def test_phi_counting_on_enumerated_equilibria():
    for seed in range(50):
        g = random_graph(8, Fraction(1, 2), 1000 + seed)
        for s in enumerate_nash(g, P321):
            assert phi_counting_check(g, s, P321)


@pytest.mark.parametrize(
    "abg, bound",
    [((1, 1, 0), 2), ((3, 2, 1), Fraction(9, 5)), ((2, 1, 0), 3), ((5, 2, 2), Fraction(5, 2)), ((4, 3, 3), Fraction(4, 3))],
)
def test_poa_upper_bound(abg, bound):
    assert poa_upper_bound(validate_params(*abg)).bound == bound


def test_poa_upper_bound_corollary_at_gamma_zero():
    rep = poa_upper_bound(validate_params(2, 1, 0))
    assert rep.bound == rep.corollary_bound == 3
    assert rep.gamma_eq_beta_value == 2


def test_poa_upper_bound_degenerate():
    rep = poa_upper_bound(validate_params(2, 2, 2))
    assert rep.degenerate and rep.bound == 1


@given(params())
def test_bound_vs_corollary(p):
    rep = poa_upper_bound(p)
    assert rep.bound <= rep.corollary_bound
    assert (rep.bound == rep.corollary_bound) == (p.gamma == 0)
    if p.gamma == p.beta:
        assert rep.bound == p.alpha / p.beta


def test_bound_gamma_sweep_values():
    gammas = [Fraction(k, 2) for k in range(5)]
    bounds = [poa_upper_bound(validate_params(3, 2, g)).bound for g in gammas]
    assert bounds == [Fraction(5, 2), Fraction(48, 23), Fraction(9, 5), Fraction(8, 5), Fraction(3, 2)]
    assert all(b1 < b0 for b0, b1 in zip(bounds, bounds[1:]))


def test_monotonicity_report_clean():
    grid_p = [validate_params(3, 2, Fraction(k, 2)) for k in range(5)] + [P110, validate_params(2, 2, 1)]
    grid_n = [EdgeState(a, b, c) for a in range(3) for b in range(3) for c in range(3) if a + b > 0]
    rep = monotonicity_report(grid_p, grid_n)
    assert rep.ok, rep.violations
    assert rep.checks == 3 * len(grid_p) * len(grid_n) + 4 + 0 + 0


def test_monotonicity_adding_a_edge():
    for p in (P321, P110, validate_params(2, 1, 1)):
        assert quotient(EdgeState(2, 1, 1), p) <= quotient(EdgeState(1, 1, 1), p)


def test_monotonicity_gamma_equal_beta_endpoint():
    rep = monotonicity_report([validate_params(3, 2, 2), validate_params(3, 2, 2)], [EdgeState(1, 0, 0)])
    assert rep.ok
