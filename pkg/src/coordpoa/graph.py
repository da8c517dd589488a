"""Graphs, payoff parameters, strategy profiles and edge classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import (
    DuplicateEdge,
    DuplicateNode,
    GraphError,
    InvalidParams,
    ParseError,
    ProfileMismatch,
    SelfLoop,
    UnknownEndpoint,
    UnknownNode,
)

Edge = tuple[str, str]


def to_rational(value) -> Fraction:
    """Convert ``value`` to an exact :class:`Fraction`.

    Accepts ints, Fractions, and strings of the form ``p``, ``p/q`` (``q > 0``)
    or a decimal such as ``0.25``. Decimal strings are converted exactly, so
    ``"0.1"`` is ``1/10``. Floats go through their shortest repr for the same
    reason.
    """
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, float):
        value = repr(value)
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            try:
                p, q = int(num), int(den)
            except ValueError:
                raise ParseError(f"not a rational: {value!r}") from None
            if q <= 0:
                raise ParseError(f"denominator must be positive: {value!r}")
            return Fraction(p, q)
        try:
            return Fraction(text)
        except ValueError:
            raise ParseError(f"not a rational: {value!r}") from None
    raise ParseError(f"not a rational: {value!r}")


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


class Strategy(str, enum.Enum):
    A = "A"
    B = "B"

    @property
    def other(self) -> "Strategy":
        return Strategy.B if self is Strategy.A else Strategy.A

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph.

    ``edges`` is stored canonically: each pair is sorted lexicographically and
    the tuple of pairs is sorted. Use :func:`build_graph` to construct one from
    arbitrary input.
    """

    nodes: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        nodes = tuple(self.nodes)
        seen = set()
        for v in nodes:
            if not isinstance(v, str):
                raise GraphError(f"node ids must be strings, got {v!r}")
            if v in seen:
                raise DuplicateNode(f"duplicate node {v!r}")
            seen.add(v)

        canon = set()
        for pair in self.edges:
            if len(pair) != 2:
                raise GraphError(f"edge must have two endpoints: {pair!r}")
            u, w = pair
            if u == w:
                raise SelfLoop(f"self-loop at {u!r}")
            for x in (u, w):
                if x not in seen:
                    raise UnknownEndpoint(f"edge ({u!r}, {w!r}) has unknown endpoint {x!r}")
            e = (u, w) if u < w else (w, u)
            if e in canon:
                raise DuplicateEdge(f"duplicate edge {e!r}")
            canon.add(e)

        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @cached_property
    def adjacency(self) -> Mapping[str, tuple[str, ...]]:
        adj: dict[str, list[str]] = {v: [] for v in self.nodes}
        for u, w in self.edges:
            adj[u].append(w)
            adj[w].append(u)
        return MappingProxyType({v: tuple(ns) for v, ns in adj.items()})

    @cached_property
    def index(self) -> Mapping[str, int]:
        return MappingProxyType({v: i for i, v in enumerate(self.nodes)})

    @property
    def num_nodes(self) -> int:
        return len(self.nodes)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: str) -> tuple[str, ...]:
        try:
            return self.adjacency[v]
        except KeyError:
            raise UnknownNode(f"unknown node {v!r}") from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def edge_induced(self, edges: Iterable[Edge]) -> "Graph":
        """Subgraph on exactly the given edges and their endpoints.

        Endpoints keep their relative order from ``self.nodes``.
        """
        edges = list(edges)
        touched = {x for e in edges for x in e}
        return Graph(tuple(v for v in self.nodes if v in touched), tuple(edges))


def build_graph(nodes: Sequence[str], edges: Iterable[Sequence[str]]) -> Graph:
    return Graph(tuple(nodes), tuple(tuple(e) for e in edges))


@dataclass(frozen=True)
class Params:
    """Payoffs: ``alpha`` for A-A, ``beta`` for B-B, ``gamma`` for mixed edges."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        a, b, g = (to_rational(x) for x in (self.alpha, self.beta, self.gamma))
        if not b > 0:
            raise InvalidParams(f"beta > 0 violated (beta={b})")
        if not b <= a:
            raise InvalidParams(f"beta <= alpha violated (beta={b}, alpha={a})")
        if not g >= 0:
            raise InvalidParams(f"gamma >= 0 violated (gamma={g})")
        if not g <= b:
            raise InvalidParams(f"gamma <= beta violated (gamma={g}, beta={b})")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)
        object.__setattr__(self, "gamma", g)

    def payoff(self, mine: Strategy, theirs: Strategy) -> Fraction:
        if mine is not theirs:
            return self.gamma
        return self.alpha if mine is Strategy.A else self.beta

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.alpha, self.beta, self.gamma)

    def __str__(self) -> str:
        return "({}, {}, {})".format(*map(format_rational, self.as_tuple()))


def validate_params(alpha, beta, gamma) -> Params:
    return Params(alpha, beta, gamma)


class Profile:
    """Immutable assignment of a strategy to every node."""

    __slots__ = ("_assignment",)

    def __init__(self, assignment: Mapping[str, Strategy | str]):
        norm = {}
        for v, s in assignment.items():
            try:
                norm[v] = Strategy(s)
            except ValueError:
                raise ProfileMismatch(f"strategy for {v!r} must be 'A' or 'B', got {s!r}") from None
        self._assignment = MappingProxyType(norm)

    @classmethod
    def uniform(cls, nodes: Iterable[str], strategy: Strategy | str) -> "Profile":
        strategy = Strategy(strategy)
        return cls({v: strategy for v in nodes})

    @classmethod
    def from_string(cls, nodes: Sequence[str], letters: str) -> "Profile":
        """``Profile.from_string(["v1", "v2"], "AB")``"""
        if len(nodes) != len(letters):
            raise ProfileMismatch(f"{len(letters)} strategies for {len(nodes)} nodes")
        return cls(dict(zip(nodes, letters)))

    @property
    def assignment(self) -> Mapping[str, Strategy]:
        return self._assignment

    def __getitem__(self, v: str) -> Strategy:
        try:
            return self._assignment[v]
        except KeyError:
            raise UnknownNode(f"profile has no strategy for {v!r}") from None

    def __len__(self) -> int:
        return len(self._assignment)

    def __iter__(self):
        return iter(self._assignment)

    def __eq__(self, other):
        if not isinstance(other, Profile):
            return NotImplemented
        return dict(self._assignment) == dict(other._assignment)

    def __hash__(self):
        return hash(frozenset(self._assignment.items()))

    def __repr__(self):
        body = ", ".join(f"{v}={s.value}" for v, s in self._assignment.items())
        return f"Profile({body})"

    def label(self, nodes: Sequence[str]) -> str:
        return "".join(self[v].value for v in nodes)

    def switched(self, v: str) -> "Profile":
        d = dict(self._assignment)
        d[v] = self[v].other
        return Profile(d)

    def flipped(self) -> "Profile":
        return Profile({v: s.other for v, s in self._assignment.items()})

    def restrict(self, nodes: Iterable[str]) -> "Profile":
        return Profile({v: self[v] for v in nodes})

    def to_json(self) -> dict[str, str]:
        return {v: s.value for v, s in self._assignment.items()}


def check_profile(g: Graph, s: Profile) -> None:
    assigned = set(s.assignment)
    declared = set(g.nodes)
    if assigned != declared:
        missing = sorted(declared - assigned)
        extra = sorted(assigned - declared)
        raise ProfileMismatch(f"profile does not cover the graph (missing={missing}, extra={extra})")


@dataclass(frozen=True)
class EdgeState:
    """Counts of A-, B- and C-edges; may be fractional after scaling."""

    n_ea: Fraction
    n_eb: Fraction
    n_ec: Fraction

    def __post_init__(self):
        vals = [to_rational(x) for x in (self.n_ea, self.n_eb, self.n_ec)]
        if any(x < 0 for x in vals):
            raise ValueError(f"edge counts must be non-negative: {vals}")
        for name, x in zip(("n_ea", "n_eb", "n_ec"), vals):
            object.__setattr__(self, name, x)

    def __add__(self, other: "EdgeState") -> "EdgeState":
        return EdgeState(self.n_ea + other.n_ea, self.n_eb + other.n_eb, self.n_ec + other.n_ec)

    def scale(self, c) -> "EdgeState":
        c = to_rational(c)
        return EdgeState(c * self.n_ea, c * self.n_eb, c * self.n_ec)

    @property
    def total(self) -> Fraction:
        return self.n_ea + self.n_eb + self.n_ec

    def is_zero(self) -> bool:
        return self.total == 0

    def welfare(self, p: Params) -> Fraction:
        return 2 * (self.n_ea * p.alpha + self.n_eb * p.beta + self.n_ec * p.gamma)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.n_ea, self.n_eb, self.n_ec)

    def __str__(self) -> str:
        return "({}, {}, {})".format(*map(format_rational, self.as_tuple()))


def edge_type(s: Profile, e: Edge) -> str:
    """'a', 'b' or 'c' for the edge under profile ``s``."""
    x, y = s[e[0]], s[e[1]]
    if x is not y:
        return "c"
    return "a" if x is Strategy.A else "b"


def count_edges(edges: Iterable[Edge], s: Profile) -> EdgeState:
    counts = {"a": 0, "b": 0, "c": 0}
    for e in edges:
        counts[edge_type(s, e)] += 1
    return EdgeState(counts["a"], counts["b"], counts["c"])


def classify_edges(g: Graph, s: Profile) -> EdgeState:
    check_profile(g, s)
    return count_edges(g.edges, s)
