from fractions import Fraction

import pytest
from hypothesis import strategies as st

from coordpoa import Graph, Params, Profile, build_graph

FIG2_NODES = ["a1", "a2", "b1", "b2", "b3", "b4"]
FIG2_EDGES = [
    ("a1", "a2"),
    ("a1", "b1"),
    ("a1", "b2"),
    ("a2", "b3"),
    ("a2", "b4"),
    ("b1", "b2"),
    ("b2", "b3"),
    ("b3", "b4"),
    ("b4", "b1"),
]


@pytest.fixture
def cycle4():
    g = build_graph(["v1", "v2", "v3", "v4"], [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1")])
    return g, Profile.from_string(g.nodes, "AABB")


@pytest.fixture
def fig2():
    g = build_graph(FIG2_NODES, FIG2_EDGES)
    return g, Profile.from_string(g.nodes, "AABBBB")


@pytest.fixture
def triangle():
    return build_graph(["x", "y", "z"], [("x", "y"), ("y", "z"), ("x", "z")])


# hypothesis strategies

@st.composite
def graphs(draw, min_nodes=1, max_nodes=7):
    n = draw(st.integers(min_nodes, max_nodes))
    nodes = [f"v{i}" for i in range(n)]
    pairs = [(nodes[i], nodes[j]) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(tuple(nodes), tuple(p for p, k in zip(pairs, keep) if k))


@st.composite
def profiles(draw, g):
    letters = draw(st.text(alphabet="AB", min_size=g.num_nodes, max_size=g.num_nodes))
    return Profile.from_string(g.nodes, letters)


@st.composite
def graph_and_profile(draw, min_nodes=1, max_nodes=7):
    g = draw(graphs(min_nodes, max_nodes))
    return g, draw(profiles(g))


fractions = st.builds(Fraction, st.integers(0, 12), st.integers(1, 6))


@st.composite
def params(draw, strict_gamma=False):
    beta = draw(st.builds(Fraction, st.integers(1, 12), st.integers(1, 6)))
    alpha = beta + draw(fractions)
    hi = draw(st.integers(1, 6))
    k = draw(st.integers(0, hi - 1 if strict_gamma else hi))
    return Params(alpha, beta, beta * Fraction(k, hi))


edge_states = st.builds(
    lambda a, b, c: (a, b, c),
    fractions,
    fractions,
    fractions,
)


_acceptance: list[tuple[str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None and rep.when == "call":
        name = marker.args[0]
        callspec = getattr(item, "callspec", None)
        if callspec is not None:
            name += f" [{callspec.id}]"
        _acceptance.append((name, "PASS" if rep.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, verdict in sorted(_acceptance):
        terminalreporter.write_line(f"{verdict}  {name}")
