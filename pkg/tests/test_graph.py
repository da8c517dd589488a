from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coordpoa import (
    DuplicateEdge,
    DuplicateNode,
    EdgeState,
    Graph,
    InvalidParams,
    ParseError,
    Profile,
    ProfileMismatch,
    SelfLoop,
    Strategy,
    UnknownEndpoint,
    build_graph,
    classify_edges,
    to_rational,
    validate_params,
)

from .conftest import FIG2_EDGES, FIG2_NODES, graph_and_profile


def test_smallest_graph():
    g = build_graph(["v1", "v2"], [("v1", "v2")])
    assert g.num_nodes == 2
    assert g.num_edges == 1


def test_fig2_graph_has_nine_edges():
    g = build_graph(FIG2_NODES, FIG2_EDGES)
    assert (g.num_nodes, g.num_edges) == (6, 9)


def test_edges_are_canonical():
    g = build_graph(["b", "a", "c"], [("c", "a"), ("b", "a")])
    assert g.edges == (("a", "b"), ("a", "c"))
    assert g.nodes == ("b", "a", "c")


@pytest.mark.parametrize(
    "nodes, edges, exc, culprit",
    [
        (["v1"], [("v1", "v1")], SelfLoop, "v1"),
        (["v1", "v1"], [], DuplicateNode, "v1"),
        (["v1", "v2"], [("v1", "v2"), ("v2", "v1")], DuplicateEdge, "v2"),
        (["v1"], [("v1", "zz")], UnknownEndpoint, "zz"),
    ],
)
def test_build_graph_errors(nodes, edges, exc, culprit):
    with pytest.raises(exc, match=culprit):
        build_graph(nodes, edges)


def test_isolated_nodes_allowed():
    g = build_graph(["a", "b", "c"], [("a", "b")])
    assert g.degree("c") == 0


def test_params_paper_example():
    p = validate_params(3, 2, 1)
    assert p.as_tuple() == (3, 2, 1)
    assert all(isinstance(x, Fraction) for x in p.as_tuple())


def test_params_boundary_allowed():
    validate_params(1, 1, 1)
    validate_params(2, 1, 1)
    validate_params(1, 1, 0)


@pytest.mark.parametrize(
    "args, fragment",
    [
        ((1, 2, 0), "beta <= alpha"),
        ((1, 0, 0), "beta > 0"),
        ((2, 1, -1), "gamma >= 0"),
        ((3, 1, 2), "gamma <= beta"),
    ],
)
def test_params_invalid(args, fragment):
    with pytest.raises(InvalidParams, match=fragment):
        validate_params(*args)


@pytest.mark.parametrize(
    "text, value",
    [("3", Fraction(3)), ("9/5", Fraction(9, 5)), ("0.1", Fraction(1, 10)), (" 2.50 ", Fraction(5, 2)), (0.5, Fraction(1, 2))],
)
def test_to_rational(text, value):
    assert to_rational(text) == value


@pytest.mark.parametrize("text", ["1/0", "3/-2", "abc", "1/x", True])
def test_to_rational_rejects(text):
    with pytest.raises(ParseError):
        to_rational(text)


def test_classify_cycle(cycle4):
    g, s = cycle4
    assert classify_edges(g, s) == EdgeState(1, 1, 2)


def test_classify_fig2(fig2):
    g, s = fig2
    assert classify_edges(g, s) == EdgeState(1, 4, 4)


def test_classify_all_a(fig2):
    g, _ = fig2
    assert classify_edges(g, Profile.uniform(g.nodes, "A")) == EdgeState(9, 0, 0)


def test_classify_profile_mismatch(cycle4):
    g, _ = cycle4
    with pytest.raises(ProfileMismatch):
        classify_edges(g, Profile({"v1": "A"}))
    with pytest.raises(ProfileMismatch):
        classify_edges(g, Profile({**{v: "A" for v in g.nodes}, "extra": "B"}))


def test_profile_rejects_bad_strategy():
    with pytest.raises(ProfileMismatch):
        Profile({"v": "C"})


def test_profile_value_semantics():
    s = Profile({"x": "A", "y": Strategy.B})
    assert s == Profile({"y": "B", "x": "A"})
    assert hash(s) == hash(Profile({"y": "B", "x": "A"}))
    assert s.switched("x")["x"] is Strategy.B
    assert s.flipped() == Profile({"x": "B", "y": "A"})


def test_edge_state_rejects_negative():
    with pytest.raises(ValueError):
        EdgeState(-1, 0, 0)


@given(graph_and_profile())
def test_counts_sum_to_edges(gs):
    g, s = gs
    assert classify_edges(g, s).total == g.num_edges


@given(graph_and_profile())
def test_flip_swaps_a_and_b(gs):
    g, s = gs
    n, m = classify_edges(g, s), classify_edges(g, s.flipped())
    assert (m.n_ea, m.n_eb, m.n_ec) == (n.n_eb, n.n_ea, n.n_ec)


@given(graph_and_profile(), st.randoms(use_true_random=False))
def test_relabeling_invariance(gs, rnd):
    g, s = gs
    perm = list(g.nodes)
    rnd.shuffle(perm)
    rename = {v: "w_" + perm[i] for i, v in enumerate(g.nodes)}
    h = Graph(tuple(rename[v] for v in g.nodes), tuple((rename[u], rename[w]) for u, w in g.edges))
    t = Profile({rename[v]: s[v] for v in g.nodes})
    assert classify_edges(h, t) == classify_edges(g, s)
