"""JSON schemas for graphs, packings, realizations, and oriented duals.

One envelope shape: ``{"type": ..., "version": 1, ...}``.  Floats are
emitted with Python's shortest round-trip representation, so parsing the
output reproduces every value bit for bit and identical inputs serialize to
identical bytes.
"""

from __future__ import annotations

import json

from .coloring import ILGraph
from .embedding import EmbeddedGraph, build_embedding
from .equivalence import OrientedDual
from .packing import Circle, Packing
from .realization import Arc, RealPoint, Realization

VERSION = 1


def _fmt(value):
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        inner = ",".join(f"{json.dumps(k)}:{_fmt(v)}" for k, v in value.items())
        return "{" + inner + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_fmt(v) for v in value) + "]"
    raise TypeError(f"cannot serialize {type(value)!r}")


def dumps(obj) -> str:
    return _fmt(obj)


# -- graphs ----------------------------------------------------------------------


def graph_to_obj(g: EmbeddedGraph, type_name="graph"):
    return {
        "type": type_name,
        "version": VERSION,
        "n": g.n,
        "rotation": g.to_neighbor_lists(),
        "outer_face": g.outer_face,
    }


def serialize_graph(g: EmbeddedGraph) -> str:
    return dumps(graph_to_obj(g))


def parse_graph(data) -> EmbeddedGraph:
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("type") not in ("graph", "il_graph"):
        raise ValueError(f"expected a graph document, got {data.get('type')!r}")
    return build_embedding(data["rotation"], data.get("outer_face"))


def serialize_il(il: ILGraph) -> str:
    obj = graph_to_obj(il.graph, type_name="il_graph")
    obj["edge_labels"] = list(il.edge_vertex)
    return dumps(obj)


# -- packings --------------------------------------------------------------------


def packing_to_obj(p: Packing):
    return {
        "type": "packing",
        "version": VERSION,
        "circles": [
            {"id": i, "cx": c.cx, "cy": c.cy, "r": c.r}
            for i, c in enumerate(p.circles)
        ],
        "residual": p.residual,
    }


def serialize_packing(p: Packing) -> str:
    return dumps(packing_to_obj(p))


def parse_packing(data) -> Packing:
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("type") != "packing":
        raise ValueError(f"expected a packing document, got {data.get('type')!r}")
    circles = [None] * len(data["circles"])
    for entry in data["circles"]:
        circles[entry["id"]] = Circle(entry["cx"], entry["cy"], entry["r"])
    return Packing(
        circles=tuple(circles), residual=data["residual"], iterations=0
    )


# -- realizations ----------------------------------------------------------------


def realization_to_obj(r: Realization):
    return {
        "type": "realization",
        "version": VERSION,
        "circles": [
            {"id": i, "cx": c.cx, "cy": c.cy, "r": c.r}
            for i, c in enumerate(r.circles)
        ],
        "points": [
            {"id": i, "x": p.x, "y": p.y, "on": list(p.on), "kind": p.kind}
            for i, p in enumerate(r.points)
        ],
        "arcs": [
            {
                "circle": a.circle,
                "from_angle": a.from_angle,
                "to_angle": a.to_angle,
                "edge": a.edge,
            }
            for a in r.arcs
        ],
    }


def serialize_realization(r: Realization) -> str:
    return dumps(realization_to_obj(r))


def parse_realization(data) -> Realization:
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("type") != "realization":
        raise ValueError(
            f"expected a realization document, got {data.get('type')!r}"
        )
    circles = [None] * len(data["circles"])
    for entry in data["circles"]:
        circles[entry["id"]] = Circle(entry["cx"], entry["cy"], entry["r"])
    points = [None] * len(data["points"])
    for entry in data["points"]:
        points[entry["id"]] = RealPoint(
            entry["x"], entry["y"], tuple(entry["on"]), entry["kind"]
        )
    arcs = [
        Arc(e["circle"], e["from_angle"], e["to_angle"], e["edge"])
        for e in data["arcs"]
    ]
    return Realization(circles, points, arcs)


# -- oriented duals ---------------------------------------------------------------


def serialize_dual(d: OrientedDual) -> str:
    return dumps(
        {
            "type": "oriented_dual",
            "version": VERSION,
            "nodes": list(d.nodes),
            "edges": [[t, h] for t, h, _ in d.edges],
            "outer": d.outer,
        }
    )


def parse_dual(data) -> OrientedDual:
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("type") != "oriented_dual":
        raise ValueError(f"expected a dual document, got {data.get('type')!r}")
    return OrientedDual(
        nodes=tuple(data["nodes"]),
        edges=tuple((t, h, i) for i, (t, h) in enumerate(data["edges"])),
        outer=data["outer"],
    )


def parse_any(text: str):
    data = json.loads(text)
    kind = data.get("type")
    if kind in ("graph", "il_graph"):
        return parse_graph(data)
    if kind == "packing":
        return parse_packing(data)
    if kind == "realization":
        return parse_realization(data)
    if kind == "oriented_dual":
        return parse_dual(data)
    raise ValueError(f"unknown document type {kind!r}")
