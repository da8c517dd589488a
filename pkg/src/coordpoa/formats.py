"""Graph files and JSON serialization.

Graph JSON::

    {"nodes": ["v1", "v2"], "edges": [["v1", "v2"]], "strategies": {"v1": "A", "v2": "B"}}

``strategies`` is optional. The plain-text edge list has one ``u v`` pair per
line; ``#`` starts a comment. Rationals are always written as ``"p/q"``
strings (``"2"`` when the denominator is 1).
"""

from __future__ import annotations

import json
from dataclasses import fields, is_dataclass
from fractions import Fraction
from pathlib import Path

from .errors import CoordPoAError, ParseError
from .graph import EdgeState, Graph, Params, Profile, Strategy, format_rational


def graph_to_json(g: Graph, s: Profile | None = None) -> dict:
    obj = {"nodes": list(g.nodes), "edges": [list(e) for e in g.edges]}
    if s is not None:
        obj["strategies"] = {v: s[v].value for v in g.nodes}
    return obj


def graph_from_json(obj) -> tuple[Graph, Profile | None]:
    if not isinstance(obj, dict) or "nodes" not in obj or "edges" not in obj:
        raise ParseError('graph JSON must be an object with "nodes" and "edges"')
    nodes, edges = obj["nodes"], obj["edges"]
    if not isinstance(nodes, list) or not all(isinstance(v, str) for v in nodes):
        raise ParseError('"nodes" must be an array of strings')
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e) for e in edges
    ):
        raise ParseError('"edges" must be an array of 2-element string arrays')
    try:
        g = Graph(tuple(nodes), tuple(tuple(e) for e in edges))
    except CoordPoAError as exc:
        raise ParseError(str(exc)) from exc
    strategies = obj.get("strategies")
    if strategies is None:
        return g, None
    if not isinstance(strategies, dict):
        raise ParseError('"strategies" must be an object mapping node ids to "A" or "B"')
    return g, Profile(strategies)


def parse_edge_list(text: str) -> Graph:
    nodes: dict[str, None] = {}
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        for v in parts:
            nodes.setdefault(v)
        edges.append(tuple(parts))
    try:
        return Graph(tuple(nodes), tuple(edges))
    except CoordPoAError as exc:
        raise ParseError(str(exc)) from exc


def read_graph_file(path) -> tuple[Graph, Profile | None]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc}") from exc
        return graph_from_json(obj)
    return parse_edge_list(text), None


def to_jsonable(x):
    """Recursively convert package objects to JSON-ready values."""
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, float, str)):
        return x
    if isinstance(x, Strategy):
        return x.value
    if isinstance(x, Params):
        return {"alpha": format_rational(x.alpha), "beta": format_rational(x.beta), "gamma": format_rational(x.gamma)}
    if isinstance(x, EdgeState):
        return [format_rational(v) for v in x.as_tuple()]
    if isinstance(x, Profile):
        return x.to_json()
    if isinstance(x, Graph):
        return graph_to_json(x)
    if is_dataclass(x):
        return {f.name: to_jsonable(getattr(x, f.name)) for f in fields(x)}
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=True)
