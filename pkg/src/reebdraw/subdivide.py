"""Edge subdivision: normalize a Reeb graph so every edge spans consecutive levels.

Subdividing replaces each edge that skips levels with a path of generated
vertices, one per skipped level, and rewrites all heights as integer level
ranks.  The transform is reversible on drawings: cutting polylines at level
heights and, conversely, turning generated vertices back into bend points are
inverse operations that preserve the geometric crossing count exactly (both
directions only re-scale strips in y, which is an affine map inside each
strip).

Works for graphs with shared heights too: levels are dense ranks, so vertices
at equal heights land on one level.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, NamedTuple

from .core import GENERATED_ID_PREFIX, ReebGraph, is_connected, levels
from .errors import GraphStructureError, LayoutError

if TYPE_CHECKING:  # import cycle: crossings imports subdivide for the oracle
    from .crossings import Drawing


@dataclass(frozen=True)
class SubdivisionMap:
    """Bidirectional record linking original edges to their replacement paths.

    ``paths[i]`` lists the vertices of edge i's path from the lower original
    endpoint to the upper one; ``sub_edges[i]`` gives the corresponding edge
    indices in the subdivided graph.  ``owner`` maps each generated vertex to
    (original edge index, position within the path).
    """

    original: ReebGraph
    subdivided: ReebGraph
    paths: tuple[tuple[str, ...], ...]
    sub_edges: tuple[tuple[int, ...], ...]
    owner: dict[str, tuple[int, int]]

    @property
    def generated(self) -> tuple[str, ...]:
        return tuple(self.owner)


class Subdivision(NamedTuple):
    graph: ReebGraph
    mapping: SubdivisionMap


def subdivide(g: ReebGraph, *, require_connected: bool = True) -> Subdivision:
    """Subdivide level-skipping edges; heights become integer level ranks.

    Every vertex of the output sits at its level rank, every output edge spans
    consecutive levels, and un-subdividing reproduces the input up to the
    height renaming.  Idempotent on already-leveled graphs (no generated
    vertices).
    """
    if require_connected and not is_connected(g):
        raise LayoutError("subdivision requires a connected graph", code="disconnected")
    lev = levels(g)
    heights2: dict[str, Fraction] = {v: Fraction(lev.level[v]) for v in g.vertices}
    edges2: list[tuple[str, str]] = []
    paths: list[tuple[str, ...]] = []
    sub_edges: list[tuple[int, ...]] = []
    owner: dict[str, tuple[int, int]] = {}

    def fresh_id(base: str) -> str:
        name = base
        while name in heights2:
            name = "_" + name
        return name

    for i in range(len(g.edges)):
        lo, hi = g.lower_upper(i)
        r_lo, r_hi = lev.level[lo], lev.level[hi]
        path = [lo]
        for k in range(r_lo + 1, r_hi):
            name = fresh_id(f"{GENERATED_ID_PREFIX}{i}_{k}")
            heights2[name] = Fraction(k)
            owner[name] = (i, len(path))
            path.append(name)
        path.append(hi)
        indices = []
        for a, b in zip(path, path[1:]):
            indices.append(len(edges2))
            edges2.append((a, b))
        paths.append(tuple(path))
        sub_edges.append(tuple(indices))

    g2 = ReebGraph(heights2, tuple(edges2))
    return Subdivision(g2, SubdivisionMap(g, g2, tuple(paths), tuple(sub_edges), owner))


def _rank_to_height(mapping: SubdivisionMap) -> tuple[Fraction, ...]:
    return levels(mapping.original).level_heights


def _remap_y(y: Fraction, src_lo: Fraction, src_hi: Fraction, dst_lo: Fraction, dst_hi: Fraction) -> Fraction:
    return dst_lo + (y - src_lo) * (dst_hi - dst_lo) / (src_hi - src_lo)


def unsubdivide_drawing(d2: "Drawing", mapping: SubdivisionMap) -> "Drawing":
    """Merge subdivision paths back into single edges with bends; counts are preserved.

    Generated vertices become bend points, surviving vertices keep their x
    coordinates, and y values are mapped strip-by-strip back to the original
    heights (strictly monotone piecewise-affine, so the geometric crossing
    count cannot change).
    """
    from .crossings import Drawing

    if d2.graph != mapping.subdivided:
        raise GraphStructureError("drawing does not match the subdivision's output graph", code="map-mismatch")
    heights = _rank_to_height(mapping)

    def back(y: Fraction) -> Fraction:
        k = int(y)
        if y == k:
            return heights[k]
        return _remap_y(y, Fraction(k), Fraction(k + 1), heights[k], heights[k + 1])

    g = mapping.original
    xs = {v: d2.x[v] for v in g.vertices}
    bends: list[tuple[tuple[Fraction, Fraction], ...]] = []
    for i in range(len(g.edges)):
        pts: list[tuple[Fraction, Fraction]] = []
        path = mapping.paths[i]
        for j, sub in enumerate(mapping.sub_edges[i]):
            for (bx, by) in d2.bends[sub]:
                pts.append((bx, back(by)))
            if j < len(mapping.sub_edges[i]) - 1:
                mid = path[j + 1]
                pts.append((d2.x[mid], back(d2.graph.vertices[mid])))
        bends.append(tuple(pts))
    return Drawing(graph=g, x=xs, bends=tuple(bends))


def subdivide_drawing(d: "Drawing", g: ReebGraph, mapping: SubdivisionMap) -> "Drawing":
    """Cut a drawing's polylines at every level height; cut points become vertices.

    Cut x coordinates come from exact rational interpolation along each
    segment, so the crossing count is preserved bit-exactly.
    """
    from .crossings import Drawing

    if g != mapping.original or d.graph != g:
        raise GraphStructureError("drawing does not match the subdivision's input graph", code="map-mismatch")
    heights = _rank_to_height(mapping)
    rank_of = {h: k for k, h in enumerate(heights)}

    def fwd(y: Fraction) -> Fraction:
        if y in rank_of:
            return Fraction(rank_of[y])
        k = _strip_index(heights, y)
        return _remap_y(y, heights[k], heights[k + 1], Fraction(k), Fraction(k + 1))

    xs: dict[str, Fraction] = {v: d.x[v] for v in g.vertices}
    bends2: list[tuple[tuple[Fraction, Fraction], ...]] = [()] * len(mapping.subdivided.edges)
    for i in range(len(g.edges)):
        poly = d.polyline(i)
        path = mapping.paths[i]
        cut_heights = [heights[k] for k in range(int(fwd(poly[0][1])) + 1, int(fwd(poly[-1][1])))]
        pieces = _cut_polyline(poly, cut_heights)
        if len(pieces) != len(mapping.sub_edges[i]):
            raise GraphStructureError(
                f"edge {i} cuts into {len(pieces)} pieces, expected {len(mapping.sub_edges[i])}",
                code="map-mismatch",
            )
        for j, sub in enumerate(mapping.sub_edges[i]):
            piece = pieces[j]
            if j < len(pieces) - 1:
                xs[path[j + 1]] = piece[-1][0]
            bends2[sub] = tuple((px, fwd(py)) for px, py in piece[1:-1])
    return Drawing(graph=mapping.subdivided, x=xs, bends=tuple(bends2))


def _strip_index(heights: tuple[Fraction, ...], y: Fraction) -> int:
    lo, hi = 0, len(heights) - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if heights[mid] <= y:
            lo = mid
        else:
            hi = mid
    return lo


def _cut_polyline(
    poly: tuple[tuple[Fraction, Fraction], ...], cut_heights: list[Fraction]
) -> list[list[tuple[Fraction, Fraction]]]:
    """Split a strictly y-monotone polyline at the given interior heights."""
    pieces: list[list[tuple[Fraction, Fraction]]] = []
    current: list[tuple[Fraction, Fraction]] = [poly[0]]
    remaining = list(cut_heights)
    for a, b in zip(poly, poly[1:]):
        while remaining and a[1] <= remaining[0] <= b[1]:
            yc = remaining.pop(0)
            if yc == a[1]:
                # The previous point already sits exactly on the cut line.
                pieces.append(current)
                current = [current[-1]]
                continue
            xc = a[0] + (b[0] - a[0]) * (yc - a[1]) / (b[1] - a[1])
            if yc == b[1]:
                current.append((xc, yc))
                pieces.append(current)
                current = [(xc, yc)]
                a = (xc, yc)
                continue
            current.append((xc, yc))
            pieces.append(current)
            current = [(xc, yc)]
            a = (xc, yc)
        if current[-1] != b:
            current.append(b)
    pieces.append(current)
    return pieces
