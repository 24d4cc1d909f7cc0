"""Constructive layouts: paths, caterpillars, cycles, and an auto dispatcher.

Paths are drawn left to right, one column per vertex, so edge interiors occupy
disjoint x ranges and nothing can cross.  Caterpillars reuse the path layout
for the spine and hang legs on short offset segments toward the open side of
each spine vertex.  Cycles are decomposed by their alternation between the top
and bottom level: the alternation count k fixes a skeleton that is drawn like
a bowtie, corridors between skeleton columns carry the connecting paths, and
the construction emits exactly k-1 crossings.  The bowtie layout itself covers
the fully alternating case with the provably minimal (N-2)/2 crossings.

Everything is deterministic: start vertices, traversal directions, corridor
offsets, and tie-breaks are all fixed functions of the input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .core import (
    ReebGraph,
    ShapeClass,
    classify_shape,
    degree_profile,
    levels,
    spine_and_legs,
)
from .crossings import (
    DEFAULT_SEARCH_BUDGET,
    Drawing,
    LevelOrdering,
    barycenter_ordering,
    count_crossings_geometric,
    count_crossings_layered,
    exact_rgcn,
    realize_layered,
)
from .errors import (
    BudgetExhaustedError,
    DegeneracyError,
    GraphStructureError,
    InternalInvariantError,
    LayoutError,
)
from .subdivide import subdivide, unsubdivide_drawing

Rect = tuple[Fraction, Fraction, Fraction, Fraction]


# ---------------------------------------------------------------------------
# Paths and caterpillars
# ---------------------------------------------------------------------------

def _path_order(g: ReebGraph) -> list[str]:
    """Vertices of a path graph from its lexicographically smaller endpoint."""
    if g.vertex_count == 0:
        return []
    prof = degree_profile(g)
    ends = sorted(v for v, d in prof.total.items() if d <= 1)
    start = ends[0] if ends else min(g.vertices)
    adj = g.adjacency()
    order = [start]
    seen = {start}
    while len(order) < g.vertex_count:
        nxt = [w for w, _ in adj[order[-1]] if w not in seen]
        if not nxt:
            raise InternalInvariantError("path traversal stalled")
        order.append(nxt[0])
        seen.add(nxt[0])
    return order


def layout_path(g: ReebGraph) -> Drawing:
    """Draw a path with vertex i at x = i; straight edges, zero crossings."""
    if classify_shape(g) != ShapeClass.PATH:
        raise LayoutError("layout_path requires a path graph", code="not-path")
    order = _path_order(g)
    xs = {v: Fraction(i + 1) for i, v in enumerate(order)}
    return Drawing(graph=g, x=xs)


def layout_caterpillar(g: ReebGraph) -> Drawing:
    """Draw a caterpillar: path layout for the spine, legs as short offset segments.

    Legs lean at most 1/4 column toward the side where the adjacent spine edge
    departs in the opposite vertical direction, so they stay clear of
    everything except (possibly) incidences that a deterministic shrink-and
    -retry loop removes.  Emits zero crossings.
    """
    shape = classify_shape(g)
    if shape == ShapeClass.PATH:
        return layout_path(g)
    if shape != ShapeClass.CATERPILLAR:
        raise LayoutError("layout_caterpillar requires a caterpillar", code="not-caterpillar")
    prof = degree_profile(g)
    spine, legs = spine_and_legs(g)
    for v in spine:
        if prof.total[v] > 3:
            raise LayoutError(
                f"spine vertex {v!r} has degree {prof.total[v]}, legs would collide",
                code="degree",
            )

    spine_x = {v: Fraction(i + 1) for i, v in enumerate(spine)}
    spine_index = {v: i for i, v in enumerate(spine)}

    def open_side(v: str, up: bool) -> int:
        """+1 to lean right, -1 to lean left, preferring a side whose spine edge
        departs away from the leg's vertical direction."""
        i = spine_index[v]
        h = g.vertices[v]
        right_ok = i == len(spine) - 1 or (g.vertices[spine[i + 1]] < h) == up
        left_ok = i == 0 or (g.vertices[spine[i - 1]] < h) == up
        if right_ok:
            return 1
        if left_ok:
            return -1
        return 1

    base = Fraction(1, 4)
    for _ in range(40):
        xs = dict(spine_x)
        for v in spine:
            h = g.vertices[v]
            ups = sorted((w for w in legs[v] if g.vertices[w] > h),
                         key=lambda w: (-g.vertices[w], w))
            downs = sorted((w for w in legs[v] if g.vertices[w] < h),
                           key=lambda w: (g.vertices[w], w))
            for group, up in ((ups, True), (downs, False)):
                if not group:
                    continue
                side = open_side(v, up)
                for rank, w in enumerate(group, start=1):
                    xs[w] = spine_x[v] + side * base * Fraction(rank, len(group))
        d = Drawing(graph=g, x=xs)
        try:
            if count_crossings_geometric(d).count == 0:
                return d
        except DegeneracyError:
            pass
        base /= 2
    raise InternalInvariantError("caterpillar legs could not be placed cleanly")


# ---------------------------------------------------------------------------
# Cycle decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CycleDecomposition:
    """A cycle's alternation structure between its top and bottom level.

    ``keys`` lists the alternating key vertices (first of each run of
    top-level visits, first of each bottom run) in cycle order, starting at
    the top; ``paths[j]`` is the cycle segment from ``keys[j]`` to the next
    key, endpoints included.  ``iteration_count`` is the number of top runs.
    """

    top: int
    bottom: int
    keys: tuple[str, ...]
    iteration_count: int
    paths: tuple[tuple[str, ...], ...]


def _cycle_order(g: ReebGraph) -> list[str]:
    """Cycle traversal starting at the lexicographically least top-level vertex,
    stepping first toward its lexicographically least neighbor."""
    lev = levels(g)
    top = lev.count - 1
    start = min(v for v in g.vertices if lev.level[v] == top)
    adj = g.adjacency()
    first = min(adj[start], key=lambda t: (t[0], t[1]))
    order = [start]
    used = {first[1]}
    cur = first[0]
    while cur != start:
        order.append(cur)
        nxt = min((t for t in adj[cur] if t[1] not in used), key=lambda t: (t[0], t[1]))
        used.add(nxt[1])
        cur = nxt[0]
    return order


def top_down_iteration_number(g: ReebGraph) -> CycleDecomposition:
    """Count a cycle's alternations between its extreme levels and name the keys.

    The traversal is projected to T (top level) / B (bottom level) symbols,
    consecutive repeats collapse into runs (cyclically), and the number of T
    runs is the iteration count; each run's first vertex is a key.
    """
    if classify_shape(g) != ShapeClass.SINGLE_CYCLE:
        raise LayoutError("top-down iteration number requires a single cycle", code="not-single-cycle")
    lev = levels(g)
    top, bottom = lev.count - 1, 0
    order = _cycle_order(g)

    def runs_of(seq: list[str]) -> list[tuple[str, list[int]]]:
        out: list[tuple[str, list[int]]] = []
        for i, v in enumerate(seq):
            if lev.level[v] not in (top, bottom):
                continue
            sym = "T" if lev.level[v] == top else "B"
            if out and out[-1][0] == sym:
                out[-1][1].append(i)
            else:
                out.append((sym, [i]))
        return out

    # The start vertex may sit mid-run (its run wrapping around the cycle);
    # rotate the traversal to that run's cyclic start so every run is a
    # contiguous stretch and each connecting path touches at most one extreme
    # level beyond its endpoints.
    runs = runs_of(order)
    if len(runs) > 1 and runs[-1][0] == runs[0][0]:
        order = order[runs[-1][1][0]:] + order[:runs[-1][1][0]]
        runs = runs_of(order)
    k = sum(1 for sym, _ in runs if sym == "T")

    keys = [order[positions[0]] for _, positions in runs]
    key_pos = [positions[0] for _, positions in runs]
    paths: list[tuple[str, ...]] = []
    for j in range(len(keys)):
        a = key_pos[j]
        if j + 1 < len(keys):
            paths.append(tuple(order[a:key_pos[j + 1] + 1]))
        else:
            paths.append(tuple(order[a:] + order[:1]))
    return CycleDecomposition(
        top=top,
        bottom=bottom,
        keys=tuple(keys),
        iteration_count=k,
        paths=tuple(paths),
    )


# ---------------------------------------------------------------------------
# Cycle layouts
# ---------------------------------------------------------------------------

def layout_bowtie(g: ReebGraph) -> Drawing:
    """Draw a two-level alternating cycle with the minimal (N-2)/2 crossings.

    Vertices are numbered around the cycle from a fixed top start; the first
    half goes in columns 1..n, the second half comes back over the same
    columns mirrored, which closes the cycle with a vertical segment.
    """
    if classify_shape(g) != ShapeClass.SINGLE_CYCLE:
        raise LayoutError("bowtie layout requires a single cycle", code="not-single-cycle")
    lev = levels(g)
    if lev.count != 2:
        raise LayoutError("bowtie layout requires a cycle alternating between two levels",
                          code="not-alternating")
    order = _cycle_order(g)
    n = len(order) // 2
    xs: dict[str, Fraction] = {}
    for i, v in enumerate(order, start=1):
        xs[v] = Fraction(i) if i <= n else Fraction(2 * n + 1 - i)

    bends: list[tuple[tuple[Fraction, Fraction], ...]] = [() for _ in g.edges]
    groups: dict[tuple[str, str], list[int]] = {}
    for idx, pair in enumerate(g.edges):
        groups.setdefault(pair, []).append(idx)
    for pair, members in groups.items():
        # Parallel edges only occur in the two-vertex cycle; bow extra copies out.
        mid_y = (g.vertices[pair[0]] + g.vertices[pair[1]]) / 2
        for c, idx in enumerate(members[1:], start=1):
            bends[idx] = ((xs[pair[0]] + Fraction(c, 2), mid_y),)

    d = Drawing(graph=g, x=xs, bends=tuple(bends))
    cert = count_crossings_geometric(d)
    if cert.count != n - 1:
        raise InternalInvariantError(
            f"bowtie emitted {cert.count} crossings, expected {n - 1}"
        )
    return d


def _cycle_level_ordering(g2: ReebGraph, dec: CycleDecomposition) -> LevelOrdering:
    """Per-level orderings realizing the corridor scheme for a leveled cycle.

    Key j sits in column j (first half) or its mirror 2k+1-j (second half).
    First-half connecting paths run left-to-right through the left half of the
    corridor right of their start column; second-half paths run right-to-left
    through the right half.  Exactly the k-1 designated pairs invert.
    """
    k = dec.iteration_count
    vx: dict[str, Fraction] = {}
    for j0, key in enumerate(dec.keys):
        j = j0 + 1
        vx[key] = Fraction(j if j <= k else 2 * k + 1 - j)
    for j0, path in enumerate(dec.paths):
        j = j0 + 1
        interior = path[1:-1]
        m = len(interior)
        start_x = vx[path[0]]
        for i, v in enumerate(interior, start=1):
            off = Fraction(i, 2 * (m + 1))
            vx[v] = start_x + off if j <= k else start_x - off
    lev = levels(g2)
    orders = []
    for l in range(lev.count):
        vs = sorted((v for v in g2.vertices if lev.level[v] == l), key=lambda v: (vx[v], v))
        orders.append(tuple(vs))
    return LevelOrdering(tuple(orders))


def layout_cycle(g: ReebGraph) -> Drawing:
    """Draw any single cycle with exactly k-1 crossings (k = iteration count).

    The cycle is leveled, its key skeleton is drawn bowtie-style, connecting
    paths are routed through disjoint corridors (free paths crossing-free, the
    k-1 designated pairs crossing once each), and the leveled drawing is
    merged back so the output is a drawing of the input graph.
    """
    if classify_shape(g) != ShapeClass.SINGLE_CYCLE:
        raise LayoutError("cycle layout requires a single cycle", code="not-single-cycle")
    g2, smap = subdivide(g)
    dec = top_down_iteration_number(g2)
    ordering = _cycle_level_ordering(g2, dec)
    layered = count_crossings_layered(g2, ordering)
    if layered != dec.iteration_count - 1:
        raise InternalInvariantError(
            f"cycle corridor ordering produced {layered} crossings, expected {dec.iteration_count - 1}"
        )
    d = unsubdivide_drawing(realize_layered(g2, ordering), smap)
    cert = count_crossings_geometric(d)
    if cert.count != dec.iteration_count - 1:
        raise InternalInvariantError(
            f"cycle drawing has {cert.count} crossings, expected {dec.iteration_count - 1}"
        )
    return d


def layout_cycle_unique_extrema(g: ReebGraph) -> Drawing:
    """Draw a cycle with a unique topmost and bottommost vertex without crossings.

    The two extrema split the cycle into two paths which are laid out on
    opposite sides of a shared column.
    """
    if classify_shape(g) != ShapeClass.SINGLE_CYCLE:
        raise LayoutError("unique-extrema layout requires a single cycle", code="not-single-cycle")
    lev = levels(g)
    tops = [v for v in g.vertices if lev.level[v] == lev.count - 1]
    bottoms = [v for v in g.vertices if lev.level[v] == 0]
    if len(tops) != 1 or len(bottoms) != 1:
        raise LayoutError(
            f"extrema are not unique ({len(tops)} topmost, {len(bottoms)} bottommost)",
            code="extrema-not-unique",
        )
    d = layout_cycle(g)
    if count_crossings_geometric(d).count != 0:
        raise InternalInvariantError("unique-extrema cycle drawing is not crossing-free")
    return d


# ---------------------------------------------------------------------------
# The two-crossing-paths subproblem
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Type2Subproblem:
    """Two vertex-disjoint paths between opposite corners of a column pair.

    ``path_r`` runs from the top-left corner to the bottom-right corner,
    ``path_g`` from the bottom-left corner to the top-right corner; all
    interior vertices lie strictly between the two corner heights.  Since the
    paths must swap sides, one crossing is unavoidable; the solver places
    exactly one, between the designated edge pair (the last edge of ``path_r``
    and the first edge of ``path_g``), just above the bottom corners where
    nothing else dips.
    """

    heights: dict[str, Fraction]
    path_r: tuple[str, ...]
    path_g: tuple[str, ...]
    x_left: Fraction = Fraction(0)
    x_right: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "heights", {v: Fraction(h) for v, h in self.heights.items()})
        object.__setattr__(self, "x_left", Fraction(self.x_left))
        object.__setattr__(self, "x_right", Fraction(self.x_right))
        r, gpath = self.path_r, self.path_g
        if len(r) < 2 or len(gpath) < 2:
            raise LayoutError("both paths need at least two vertices", code="bad-subproblem")
        if set(r) & set(gpath):
            raise LayoutError("the two paths must be vertex-disjoint", code="bad-subproblem")
        if self.x_left >= self.x_right:
            raise LayoutError("left column must be left of right column", code="bad-subproblem")
        h = self.heights
        top = h[r[0]]
        bottom = h[r[-1]]
        if h[gpath[-1]] != top or h[gpath[0]] != bottom or bottom >= top:
            raise LayoutError("corner heights must pair up (two on top, two on bottom)",
                              code="bad-subproblem")
        for v in (*r[1:-1], *gpath[1:-1]):
            if not (bottom < h[v] < top):
                raise LayoutError(
                    f"interior vertex {v!r} sits on an extreme level",
                    code="interior-at-extreme",
                )

    @property
    def top(self) -> Fraction:
        return self.heights[self.path_r[0]]

    @property
    def bottom(self) -> Fraction:
        return self.heights[self.path_r[-1]]

    @property
    def crossing_level(self) -> Fraction:
        """A fresh height below every interior vertex where the crossing goes."""
        interiors = [self.heights[v] for v in (*self.path_r[1:-1], *self.path_g[1:-1])]
        return (self.bottom + (min(interiors) if interiors else self.top)) / 2

    @property
    def crossing_edges(self) -> tuple[tuple[str, str], tuple[str, str]]:
        """The designated pair: last edge of path_r and first edge of path_g."""
        return ((self.path_r[-2], self.path_r[-1]), (self.path_g[0], self.path_g[1]))

    @property
    def regions(self) -> dict[str, Rect]:
        """Disjoint axis-aligned corridors holding the non-crossing path portions."""
        mid = (self.x_left + self.x_right) / 2
        ly = self.crossing_level
        return {
            "r-body": (self.x_left, ly, mid, self.top),
            "g-body": (mid, ly, self.x_right, self.top),
            "r-end": (self.x_right, self.bottom, self.x_right, self.bottom),
            "g-end": (self.x_left, self.bottom, self.x_left, self.bottom),
        }


def solve_type2(p: Type2Subproblem) -> Drawing:
    """Route the two paths with exactly one crossing between the designated edges.

    Each path body is drawn column-by-column inside its half of the corridor;
    the two edges to the bottom corners drop to a fresh height below all
    interiors and swap sides there.
    """
    r, gpath = p.path_r, p.path_g
    edges = [*zip(r, r[1:]), *zip(gpath, gpath[1:])]
    graph = ReebGraph(dict(p.heights), tuple(edges))

    span = p.x_right - p.x_left
    m_r, m_g = len(r) - 2, len(gpath) - 2
    xs: dict[str, Fraction] = {
        r[0]: p.x_left,
        r[-1]: p.x_right,
        gpath[0]: p.x_left,
        gpath[-1]: p.x_right,
    }
    for i, v in enumerate(r[1:-1], start=1):
        xs[v] = p.x_left + span * Fraction(i, 2 * (m_r + 1))
    for j, v in enumerate(gpath[1:-1], start=1):
        xs[v] = p.x_right - span * Fraction(m_g + 1 - j, 2 * (m_g + 1))

    delta = span / Fraction(8 * (max(m_r, m_g) + 1))
    ly = p.crossing_level
    bends: list[tuple[tuple[Fraction, Fraction], ...]] = [() for _ in edges]
    bends[len(r) - 2] = ((xs[r[-2]] + delta, ly),)
    bends[len(r) - 1] = ((xs[gpath[1]] - delta, ly),)

    d = Drawing(graph=graph, x=xs, bends=tuple(bends))
    cert = count_crossings_geometric(d)
    designated = (len(r) - 2, len(r) - 1)
    if cert.count != 1 or cert.pairs[0].edges != designated:
        raise InternalInvariantError("two-path routing failed to cross exactly once")
    return d


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

def layout_heuristic(g: ReebGraph, rounds: int = 10) -> Drawing:
    """Barycenter-sweep layout for graphs beyond the exact search budget.

    After leveling, each level is repeatedly reordered by the mean position of
    its lower (upward pass) or upper (downward pass) neighbors, ten rounds,
    ties broken by vertex id.
    """
    g2, smap = subdivide(g)
    ordering = barycenter_ordering(g2, rounds)
    return unsubdivide_drawing(realize_layered(g2, ordering), smap)


def layout_auto(g: ReebGraph, budget: int | None = DEFAULT_SEARCH_BUDGET) -> Drawing:
    """Dispatch on shape: path/caterpillar/cycle constructions, else exact search
    (realized from its witness ordering), falling back to the barycenter
    heuristic when the search budget runs out."""
    shape = classify_shape(g)
    if shape == ShapeClass.PATH:
        return layout_path(g)
    if shape == ShapeClass.CATERPILLAR:
        try:
            return layout_caterpillar(g)
        except LayoutError:
            pass  # spine degree beyond the leg construction; use the exact route
    if shape == ShapeClass.SINGLE_CYCLE:
        return layout_cycle(g)
    try:
        res = exact_rgcn(g, budget)
    except BudgetExhaustedError:
        return layout_heuristic(g)
    return unsubdivide_drawing(realize_layered(res.graph, res.ordering), res.mapping)
