"""JSON schemas for graphs, drawings, orderings, and related values.

Rational numbers serialize as strings "p/q" in lowest terms with positive
denominator (plain "p" for integers), because JSON numbers cannot carry exact
rationals.  Parsers accept integers, decimal strings, and "p/q" strings.
All serializers are byte-deterministic for identical inputs.

Graph schema::

    {"vertices": [{"id": "a", "height": "3/2"}, ...],
     "edges": [["a", "b"], ["a", "b"], ...]}       # duplicates = parallel edges

Drawing schema::

    {"graph": {...},
     "x": {"a": "0", ...},
     "edges": [{"endpoints": ["a", "b"], "bends": [["1/2", "3/4"], ...]}, ...]}

The i-th drawing edge corresponds to the i-th graph edge.  Plain graphs for
arrangement problems use ``{"vertices": ["a", ...], "edges": [["a","b"], ...]}``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .core import ReebGraph, as_height
from .crossings import CrossingCertificate, Drawing, LevelOrdering
from .errors import GraphStructureError
from .gadget import GadgetInstance, OlaGraph


def format_rational(value: Fraction) -> str:
    return str(value)


def parse_rational(value: Any, what: str = "value") -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise GraphStructureError(
            f"{what} must be an integer or an exact string, got {value!r}", code="bad-rational"
        )
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise GraphStructureError(f"cannot parse {what} {value!r}: {exc}", code="bad-rational") from None
    raise GraphStructureError(f"{what} must be an integer or string, got {type(value).__name__}",
                              code="bad-rational")


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphStructureError(f"malformed JSON: {exc}", code="bad-json") from None


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise GraphStructureError(message, code="bad-schema")


# ---------------------------------------------------------------------------
# Reeb graphs
# ---------------------------------------------------------------------------

def graph_to_obj(g: ReebGraph) -> dict:
    return {
        "vertices": [{"id": v, "height": format_rational(h)} for v, h in g.vertices.items()],
        "edges": [[a, b] for a, b in g.edges],
    }


def graph_from_obj(obj: Any) -> ReebGraph:
    _require(isinstance(obj, dict), "graph must be an object")
    _require(isinstance(obj.get("vertices"), list), "graph.vertices must be a list")
    _require(isinstance(obj.get("edges"), list), "graph.edges must be a list")
    heights: dict[str, Fraction] = {}
    for item in obj["vertices"]:
        _require(isinstance(item, dict) and isinstance(item.get("id"), str),
                 "each vertex needs a string id")
        vid = item["id"]
        if vid in heights:
            raise GraphStructureError(f"duplicate vertex id {vid!r}", code="duplicate-vertex")
        heights[vid] = parse_rational(item.get("height"), f"height of {vid!r}")
    edges = []
    for pair in obj["edges"]:
        _require(isinstance(pair, list) and len(pair) == 2
                 and all(isinstance(p, str) for p in pair), "each edge must be a pair of ids")
        edges.append((pair[0], pair[1]))
    return ReebGraph(heights, tuple(edges))


def serialize_graph(g: ReebGraph) -> str:
    return json.dumps(graph_to_obj(g), indent=2) + "\n"


def parse_graph(text: str) -> ReebGraph:
    return graph_from_obj(_loads(text))


# ---------------------------------------------------------------------------
# Drawings
# ---------------------------------------------------------------------------

def drawing_to_obj(d: Drawing) -> dict:
    return {
        "graph": graph_to_obj(d.graph),
        "x": {v: format_rational(d.x[v]) for v in d.graph.vertices},
        "edges": [
            {
                "endpoints": [a, b],
                "bends": [[format_rational(px), format_rational(py)] for px, py in d.bends[i]],
            }
            for i, (a, b) in enumerate(d.graph.edges)
        ],
    }


def drawing_from_obj(obj: Any) -> Drawing:
    _require(isinstance(obj, dict), "drawing must be an object")
    g = graph_from_obj(obj.get("graph"))
    _require(isinstance(obj.get("x"), dict), "drawing.x must be an object")
    xs = {v: parse_rational(c, f"x of {v!r}") for v, c in obj["x"].items()}
    _require(isinstance(obj.get("edges"), list), "drawing.edges must be a list")
    entries = obj["edges"]
    if len(entries) != len(g.edges):
        raise GraphStructureError(
            f"drawing lists {len(entries)} edges, graph has {len(g.edges)}", code="edge-mismatch"
        )
    bends = []
    for i, entry in enumerate(entries):
        _require(isinstance(entry, dict), "each drawing edge must be an object")
        eps = entry.get("endpoints")
        _require(isinstance(eps, list) and len(eps) == 2, "drawing edge needs two endpoints")
        if tuple(sorted(eps)) != g.edges[i]:
            raise GraphStructureError(
                f"drawing edge {i} endpoints {eps} do not match graph edge {list(g.edges[i])}",
                code="edge-mismatch",
            )
        raw = entry.get("bends", [])
        _require(isinstance(raw, list), "bends must be a list")
        eb = []
        for pair in raw:
            _require(isinstance(pair, list) and len(pair) == 2, "each bend must be an [x, y] pair")
            eb.append((parse_rational(pair[0], "bend x"), parse_rational(pair[1], "bend y")))
        bends.append(tuple(eb))
    return Drawing(graph=g, x=xs, bends=tuple(bends))


def serialize_drawing(d: Drawing) -> str:
    return json.dumps(drawing_to_obj(d), indent=2) + "\n"


def parse_drawing(text: str) -> Drawing:
    return drawing_from_obj(_loads(text))


# ---------------------------------------------------------------------------
# Orderings, certificates, plain graphs
# ---------------------------------------------------------------------------

def ordering_to_obj(ordering: LevelOrdering) -> list[list[str]]:
    return [list(order) for order in ordering.orders]


def certificate_to_obj(cert: CrossingCertificate) -> dict:
    return {
        "count": cert.count,
        "crossings": [
            {
                "edges": list(pair.edges),
                "point": [format_rational(pair.point[0]), format_rational(pair.point[1])],
            }
            for pair in cert.pairs
        ],
    }


def ola_graph_from_obj(obj: Any) -> OlaGraph:
    _require(isinstance(obj, dict), "graph must be an object")
    _require(isinstance(obj.get("vertices"), list)
             and all(isinstance(v, str) for v in obj["vertices"]),
             "vertices must be a list of ids")
    _require(isinstance(obj.get("edges"), list), "edges must be a list")
    edges = []
    for pair in obj["edges"]:
        _require(isinstance(pair, list) and len(pair) == 2
                 and all(isinstance(p, str) for p in pair), "each edge must be a pair of ids")
        edges.append((pair[0], pair[1]))
    return OlaGraph(tuple(obj["vertices"]), tuple(edges))


def parse_ola_graph(text: str) -> OlaGraph:
    return ola_graph_from_obj(_loads(text))


def gadget_to_obj(inst: GadgetInstance) -> dict:
    return {
        "graph": graph_to_obj(inst.graph),
        "vertex_parts": dict(inst.vertex_parts),
        "edge_parts": list(inst.edge_parts),
        "budget": inst.budget,
        "source": {
            "vertices": list(inst.source.vertices),
            "edges": [[a, b] for a, b in inst.source.edges],
            "budget": inst.source_budget,
        },
    }
