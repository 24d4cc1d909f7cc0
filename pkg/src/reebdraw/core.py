"""Reeb graph data model: exact heights, levels, degrees, validation, shape classes.

A Reeb graph here is an undirected multigraph whose vertices carry heights.
Heights are exact rationals (``Fraction``) so that level ranks and all
downstream crossing predicates are bit-exact; float ties would silently
corrupt level assignment.  Parallel edges are allowed everywhere (surfaces of
positive genus need them); self-loops and edges between equal-height vertices
are rejected at construction because they cannot be drawn as strictly
y-monotone curves.

All types are immutable values after construction and every operation is a
pure function, so everything in this module is safe to share across threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import GraphStructureError, LayoutError

HeightLike = Fraction | int | str

#: Prefix used for vertex ids generated by edge subdivision.  User graphs
#: should avoid it; generated ids are made collision-free regardless.
GENERATED_ID_PREFIX = "__sub_"


def as_height(value: HeightLike) -> Fraction:
    """Convert an int, exact-decimal/rational string, or Fraction to a Fraction."""
    if isinstance(value, bool):
        raise GraphStructureError(f"height must be a number, got {value!r}", code="bad-height")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise GraphStructureError(f"cannot parse height {value!r}: {exc}", code="bad-height") from None
    raise GraphStructureError(f"height must be int, string, or Fraction, got {type(value).__name__}", code="bad-height")


@dataclass(frozen=True)
class ReebGraph:
    """Vertices with heights plus an edge multiset (unordered vertex-id pairs).

    Edge pairs are stored in canonical (lexicographically sorted) order but the
    position of each edge in ``edges`` is preserved: parallel edges are
    distinguished by index, and drawings refer to edges by that index.
    """

    vertices: dict[str, Fraction]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        verts = dict(self.vertices)
        canon = []
        for pair in self.edges:
            a, b = pair
            if a not in verts:
                raise GraphStructureError(f"edge endpoint {a!r} is not a declared vertex", code="unknown-vertex")
            if b not in verts:
                raise GraphStructureError(f"edge endpoint {b!r} is not a declared vertex", code="unknown-vertex")
            if a == b:
                raise GraphStructureError(f"self-loop at vertex {a!r}", code="self-loop")
            if verts[a] == verts[b]:
                raise GraphStructureError(
                    f"edge ({a!r}, {b!r}) joins two vertices of equal height {verts[a]}",
                    code="horizontal-edge",
                )
            canon.append((a, b) if a <= b else (b, a))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(canon))

    @classmethod
    def build(cls, heights: Mapping[str, HeightLike], edges: Iterable[tuple[str, str]]) -> "ReebGraph":
        """Build a graph from height-like values (ints, 'p/q' or decimal strings)."""
        return cls({v: as_height(h) for v, h in heights.items()}, tuple((a, b) for a, b in edges))

    def height(self, v: str) -> Fraction:
        return self.vertices[v]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def incident_edges(self) -> dict[str, list[int]]:
        """Map each vertex to the indices of its incident edges (with multiplicity)."""
        out: dict[str, list[int]] = {v: [] for v in self.vertices}
        for i, (a, b) in enumerate(self.edges):
            out[a].append(i)
            out[b].append(i)
        return out

    def adjacency(self) -> dict[str, list[tuple[str, int]]]:
        """Map each vertex to (neighbor, edge index) pairs, with multiplicity."""
        out: dict[str, list[tuple[str, int]]] = {v: [] for v in self.vertices}
        for i, (a, b) in enumerate(self.edges):
            out[a].append((b, i))
            out[b].append((a, i))
        return out

    def lower_upper(self, edge_index: int) -> tuple[str, str]:
        """Endpoints of an edge ordered by height (lower first)."""
        a, b = self.edges[edge_index]
        return (a, b) if self.vertices[a] < self.vertices[b] else (b, a)


@dataclass(frozen=True)
class DegreeProfile:
    """Total, downward, and upward degree per vertex (parallel edges counted)."""

    total: dict[str, int]
    down: dict[str, int]
    up: dict[str, int]


@dataclass(frozen=True)
class LevelAssignment:
    """Dense integer ranks of the distinct height values, lowest = 0."""

    level: dict[str, int]
    count: int
    level_heights: tuple[Fraction, ...]

    def by_level(self) -> list[list[str]]:
        """Vertices grouped by level, ids sorted within each level."""
        groups: list[list[str]] = [[] for _ in range(self.count)]
        for v in sorted(self.level):
            groups[self.level[v]].append(v)
        return groups


@dataclass(frozen=True)
class Violation:
    """One broken rule, naming the vertex or edge that breaks it."""

    rule: str
    subject: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    is_generic: bool
    is_subdivided: bool
    is_connected: bool
    violations: tuple[Violation, ...]


class ShapeClass(enum.Enum):
    PATH = "path"
    CATERPILLAR = "caterpillar"
    SINGLE_CYCLE = "single-cycle"
    TREE = "tree"
    GENERAL = "general"


def degree_profile(g: ReebGraph) -> DegreeProfile:
    """Per-vertex total/downward/upward degrees; parallel edges count with multiplicity."""
    total = {v: 0 for v in g.vertices}
    down = {v: 0 for v in g.vertices}
    up = {v: 0 for v in g.vertices}
    for a, b in g.edges:
        total[a] += 1
        total[b] += 1
        if g.vertices[a] < g.vertices[b]:
            up[a] += 1
            down[b] += 1
        else:
            down[a] += 1
            up[b] += 1
    return DegreeProfile(total=total, down=down, up=up)


def levels(g: ReebGraph) -> LevelAssignment:
    """Dense ranks of distinct heights; equal heights share a level."""
    distinct = sorted(set(g.vertices.values()))
    rank = {h: i for i, h in enumerate(distinct)}
    return LevelAssignment(
        level={v: rank[h] for v, h in g.vertices.items()},
        count=len(distinct),
        level_heights=tuple(distinct),
    )


def connected_components(g: ReebGraph) -> list[set[str]]:
    """Connected components as vertex-id sets, in order of their smallest id."""
    adj = g.adjacency()
    seen: set[str] = set()
    comps: list[set[str]] = []
    for start in sorted(g.vertices):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w, _ in adj[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: ReebGraph) -> bool:
    return len(connected_components(g)) <= 1


def validate(g: ReebGraph) -> ValidationReport:
    """Classify the graph and list every rule violation.

    ``is_generic``: all heights distinct, every degree 1 or 3, and at most two
    edges up / two down per vertex.  ``is_subdivided``: every edge spans
    consecutive levels and degrees are at most 3 with up/down at most 2.  The
    two flags are computed independently.  Violations are data, not errors.
    """
    prof = degree_profile(g)
    lev = levels(g)
    violations: list[Violation] = []

    by_height: dict[Fraction, list[str]] = {}
    for v, h in g.vertices.items():
        by_height.setdefault(h, []).append(v)
    height_clashes = {h: vs for h, vs in by_height.items() if len(vs) > 1}
    for h, vs in sorted(height_clashes.items()):
        violations.append(
            Violation("unique-heights", ",".join(sorted(vs)), f"vertices {sorted(vs)} share height {h}")
        )

    generic = not height_clashes
    for v in sorted(g.vertices):
        if prof.total[v] not in (1, 3):
            generic = False
            violations.append(Violation("degree-1-or-3", v, f"deg({v}) = {prof.total[v]}"))
        if prof.down[v] > 2:
            generic = False
            violations.append(Violation("down-degree", v, f"deg_down({v}) = {prof.down[v]} > 2"))
        if prof.up[v] > 2:
            generic = False
            violations.append(Violation("up-degree", v, f"deg_up({v}) = {prof.up[v]} > 2"))

    subdivided = True
    for i, (a, b) in enumerate(g.edges):
        if abs(lev.level[a] - lev.level[b]) != 1:
            subdivided = False
            violations.append(
                Violation("consecutive-levels", f"{a}-{b}",
                          f"edge {i} ({a}, {b}) spans levels {lev.level[a]} and {lev.level[b]}")
            )
    for v in sorted(g.vertices):
        if prof.total[v] > 3 or prof.down[v] > 2 or prof.up[v] > 2:
            subdivided = False
            if prof.total[v] > 3:
                violations.append(Violation("degree-at-most-3", v, f"deg({v}) = {prof.total[v]} > 3"))

    connected = is_connected(g)
    if not connected:
        comps = connected_components(g)
        violations.append(
            Violation("connected", ";".join(sorted(min(c) for c in comps)),
                      f"graph has {len(comps)} connected components")
        )

    return ValidationReport(
        is_generic=generic,
        is_subdivided=subdivided,
        is_connected=connected,
        violations=tuple(violations),
    )


def classify_shape(g: ReebGraph) -> ShapeClass:
    """First match among: path, caterpillar, single cycle, tree, general.

    A path has all degrees <= 2 and no cycle; a caterpillar is a tree whose
    non-leaf vertices form a path; a single cycle has every degree exactly 2.
    """
    if not is_connected(g):
        raise LayoutError("shape classification requires a connected graph", code="disconnected")
    prof = degree_profile(g)
    n, m = g.vertex_count, g.edge_count
    acyclic = m == n - 1 or n == 0

    if acyclic and all(d <= 2 for d in prof.total.values()):
        return ShapeClass.PATH
    if acyclic and _is_caterpillar(g, prof):
        return ShapeClass.CATERPILLAR
    if n >= 2 and all(d == 2 for d in prof.total.values()):
        return ShapeClass.SINGLE_CYCLE
    if acyclic:
        return ShapeClass.TREE
    return ShapeClass.GENERAL


def _is_caterpillar(g: ReebGraph, prof: DegreeProfile) -> bool:
    """True iff the non-leaf vertices of a tree induce a path."""
    spine = {v for v, d in prof.total.items() if d >= 2}
    if not spine:
        return True
    spine_deg = {v: 0 for v in spine}
    for a, b in g.edges:
        if a in spine and b in spine:
            spine_deg[a] += 1
            spine_deg[b] += 1
    if any(d > 2 for d in spine_deg.values()):
        return False
    # Degrees <= 2 in an induced forest: a path iff connected, i.e. exactly
    # |spine| - 1 induced edges.
    induced = sum(1 for a, b in g.edges if a in spine and b in spine)
    return induced == len(spine) - 1


def spine_and_legs(g: ReebGraph) -> tuple[list[str], dict[str, list[str]]]:
    """Ordered spine vertices of a caterpillar plus the legs per spine vertex.

    The spine is the path induced by non-leaf vertices, oriented to start at
    its lexicographically smaller end.  Raises if the graph is not a
    path/caterpillar.
    """
    shape = classify_shape(g)
    if shape not in (ShapeClass.PATH, ShapeClass.CATERPILLAR):
        raise LayoutError(f"expected a caterpillar, got {shape.value}", code="not-caterpillar")
    prof = degree_profile(g)
    spine_set = {v for v, d in prof.total.items() if d >= 2}
    if not spine_set:
        # Single vertex or single edge: treat every vertex as spine.
        spine_set = set(g.vertices)
    adj = g.adjacency()
    spine_adj = {v: sorted({w for w, _ in adj[v] if w in spine_set}) for v in spine_set}
    ends = [v for v in spine_set if len(spine_adj[v]) <= 1]
    start = min(ends) if ends else min(spine_set)
    order = [start]
    seen = {start}
    while True:
        nxt = [w for w in spine_adj[order[-1]] if w not in seen]
        if not nxt:
            break
        order.append(nxt[0])
        seen.add(nxt[0])
    legs = {v: [] for v in order}
    for v in order:
        for w, _ in adj[v]:
            if w not in spine_set:
                legs[v].append(w)
        legs[v].sort()
    return order, legs
