"""Straighten crossing-free curved drawings while preserving per-level order.

A crossing-free drawing orders its edges left-to-right wherever two edges
share a y interval; that relation is acyclic, and it induces an insertion
order on the vertices in which each new vertex only needs to connect to
vertices currently exposed on the right frontier.  Placing each vertex far
enough to the right therefore lets every edge be drawn as a straight segment
without hitting anything, keeping the left-to-right order of vertices on each
level intact.

Inputs with crossings are rejected outright: stretching a drawing that has
crossings can force additional crossings, so silently proceeding would betray
the contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import geometry
from .crossings import Drawing, count_crossings_geometric, per_level_order
from .errors import DegeneracyError, GraphStructureError, InternalInvariantError


@dataclass(frozen=True)
class EdgeLeftRightOrder:
    """Directed relation over edge indices: i -> j iff i and j share part of
    their open y intervals and i runs strictly left of j there."""

    edge_count: int
    left_of: tuple[tuple[int, ...], ...]  # successors: edges strictly to the right

    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        preds: list[list[int]] = [[] for _ in range(self.edge_count)]
        for i, succs in enumerate(self.left_of):
            for j in succs:
                preds[j].append(i)
        return tuple(tuple(p) for p in preds)


@dataclass(frozen=True)
class VertexInsertionOrder:
    sequence: tuple[str, ...]


def _x_at(poly, y: Fraction) -> Fraction:
    """x coordinate of a strictly y-monotone polyline at height y."""
    for a, b in zip(poly, poly[1:]):
        if a[1] <= y <= b[1]:
            if a[1] == b[1]:
                return a[0]
            return a[0] + (b[0] - a[0]) * (y - a[1]) / (b[1] - a[1])
    raise InternalInvariantError(f"height {y} outside polyline span")


def _edge_partial_order_unchecked(d: Drawing) -> EdgeLeftRightOrder:
    n = len(d.graph.edges)
    polys = [d.polyline(i) for i in range(n)]
    spans = [(poly[0][1], poly[-1][1]) for poly in polys]
    succs: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            lo = max(spans[i][0], spans[j][0])
            hi = min(spans[i][1], spans[j][1])
            if lo >= hi:
                continue
            y = (lo + hi) / 2
            xi, xj = _x_at(polys[i], y), _x_at(polys[j], y)
            if xi == xj:
                raise DegeneracyError(f"edges {i} and {j} coincide at height {y}")
            if xi < xj:
                succs[i].append(j)
            else:
                succs[j].append(i)
    order = EdgeLeftRightOrder(n, tuple(tuple(s) for s in succs))
    _check_acyclic(order)
    return order


def _check_acyclic(order: EdgeLeftRightOrder) -> None:
    state = [0] * order.edge_count  # 0 unseen, 1 on stack, 2 done
    for root in range(order.edge_count):
        if state[root]:
            continue
        stack = [(root, iter(order.left_of[root]))]
        state[root] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                state[node] = 2
                stack.pop()
                continue
            if state[nxt] == 1:
                raise InternalInvariantError("left-right edge relation contains a cycle")
            if state[nxt] == 0:
                state[nxt] = 1
                stack.append((nxt, iter(order.left_of[nxt])))


def edge_partial_order(d: Drawing) -> EdgeLeftRightOrder:
    """Left-right relation between edges of a crossing-free drawing.

    For each pair of edges with overlapping open y intervals, exactly one
    direction is recorded, decided by exact x comparison at the midpoint of
    the shared interval.
    """
    if count_crossings_geometric(d).count != 0:
        raise GraphStructureError("edge order is only defined for crossing-free drawings",
                                  code="has-crossings")
    return _edge_partial_order_unchecked(d)


def _vertex_insertion_order_unchecked(d: Drawing, order: EdgeLeftRightOrder) -> VertexInsertionOrder:
    g = d.graph
    preds = order.predecessors()
    incident = g.incident_edges()
    placed: set[str] = set()
    sequence: list[str] = []

    start = min(g.vertices, key=lambda v: (d.x[v], g.vertices[v], v))

    def free(v: str) -> bool:
        # Edges incident to v itself are drawn in the same step as v, so they
        # count as settled when checking v's obligations.
        def settled(i: int) -> bool:
            a, b = g.edges[i]
            return (a in placed or a == v) and (b in placed or b == v)

        for e in incident[v]:
            other = g.edges[e][0] if g.edges[e][1] == v else g.edges[e][1]
            if other not in placed:
                continue
            if any(not settled(p) for p in preds[e]):
                return False
        return True

    sequence.append(start)
    placed.add(start)
    remaining = set(g.vertices) - placed
    while remaining:
        candidates = sorted((v for v in remaining if free(v)), key=lambda v: (d.x[v], v))
        if not candidates:
            raise InternalInvariantError("no free vertex found; drawing is not crossing-free")
        v = candidates[0]
        sequence.append(v)
        placed.add(v)
        remaining.remove(v)
    return VertexInsertionOrder(tuple(sequence))


def vertex_insertion_order(d: Drawing, order: EdgeLeftRightOrder) -> VertexInsertionOrder:
    """Greedy left-to-right vertex order: start at the leftmost (lowest on
    ties) vertex, then repeatedly take the free vertex with least x (ties by
    id).  A vertex is free when, for each edge to an already-placed vertex,
    every edge left of it joins placed vertices only."""
    if count_crossings_geometric(d).count != 0:
        raise GraphStructureError("insertion order is only defined for crossing-free drawings",
                                  code="has-crossings")
    return _vertex_insertion_order_unchecked(d, order)


def stretch(d: Drawing) -> Drawing:
    """Redraw a crossing-free drawing with straight segments only.

    Vertices are placed in insertion order, each at an x strictly beyond
    everything placed so far and pushed further right (doubling the offset)
    until its new straight edges verifiably intersect nothing.  The output has
    zero crossings and the same per-level vertex order as the input.
    """
    if count_crossings_geometric(d).count != 0:
        raise GraphStructureError("cannot stretch a drawing with crossings", code="has-crossings")
    g = d.graph
    if len(set(g.edges)) != len(g.edges):
        # Two straight segments between the same endpoints always coincide.
        raise GraphStructureError("parallel edges cannot be drawn as straight segments",
                                  code="parallel-edges")
    order = _edge_partial_order_unchecked(d)
    insertion = _vertex_insertion_order_unchecked(d, order)

    new_x: dict[str, Fraction] = {}
    drawn: list[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction], frozenset[str]]] = []
    incident = g.incident_edges()

    for v in insertion.sequence:
        if not new_x:
            new_x[v] = Fraction(0)
            continue
        neighbors = sorted(
            {g.edges[e][0] if g.edges[e][1] == v else g.edges[e][1] for e in incident[v]}
            & set(new_x)
        )
        base = max(new_x.values())
        offset = Fraction(1)
        for _ in range(64):
            x = base + offset
            pv = (x, g.vertices[v])
            if _placement_clean(g, d, new_x, drawn, v, pv, neighbors):
                break
            offset *= 2
        else:
            raise InternalInvariantError(f"could not place vertex {v!r} clear of obstacles")
        new_x[v] = x
        for u in neighbors:
            drawn.append(((new_x[u], g.vertices[u]), pv, frozenset((u, v))))

    out = Drawing(graph=g, x=new_x)
    if per_level_order(out) != per_level_order(d):
        raise InternalInvariantError("stretching changed a per-level vertex order")
    if count_crossings_geometric(out).count != 0:
        raise InternalInvariantError("stretched drawing has crossings")
    return out


def _placement_clean(g, d, new_x, drawn, v, pv, neighbors) -> bool:
    """True if v's new straight edges miss all drawn segments and vertices."""
    new_segs = [((new_x[u], g.vertices[u]), pv, u) for u in neighbors]
    for (a, b, u) in new_segs:
        for (c, e, ends) in drawn:
            kind, pt = geometry.classify_segments(a, b, c, e)
            if kind == geometry.NONE:
                continue
            if kind == geometry.TOUCH and u in ends and pt == (new_x[u], g.vertices[u]):
                continue
            return False
        for w, wx in new_x.items():
            if w == u:
                continue
            if geometry.on_segment((wx, g.vertices[w]), a, b):
                return False
    # New edges pairwise share only v (collinear overlaps would slip past the
    # drawn-segment checks above).
    for i in range(len(new_segs)):
        for j in range(i + 1, len(new_segs)):
            kind, pt = geometry.classify_segments(new_segs[i][0], new_segs[i][1],
                                                  new_segs[j][0], new_segs[j][1])
            if kind == geometry.NONE or (kind == geometry.TOUCH and pt == pv):
                continue
            return False
    return True
