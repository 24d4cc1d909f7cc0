"""Deterministic SVG rendering of drawings.

The drawing's bounding box is scaled linearly into the canvas and the y axis
is flipped (screen y grows downward, so the topmost height maps to the top
margin).  Identical input and options produce byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .crossings import Drawing
from .errors import GraphStructureError

#: Stroke styles per gadget edge part.
PART_STYLES = {
    "E1": ("#e07000", None),    # orange
    "E2": ("#404040", "4 3"),   # dotted
    "E3": ("#c00000", None),    # red
    "E4": ("#000000", None),    # black
}


@dataclass(frozen=True)
class RenderOptions:
    width: int = 800
    height: int = 600
    margin: int = 40
    vertex_radius: float = 3.0
    stroke_width: float = 1.5
    show_level_lines: bool = False
    color_by_part: bool = False

    def __post_init__(self):
        for name in ("width", "height", "margin", "vertex_radius", "stroke_width"):
            if getattr(self, name) <= 0:
                raise GraphStructureError(f"render option {name} must be positive", code="bad-options")


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def render_svg(
    d: Drawing,
    opts: RenderOptions = RenderOptions(),
    edge_parts: Sequence[str] | None = None,
) -> str:
    """Render a drawing to SVG text; ``edge_parts`` enables per-part styling."""
    pts: list[tuple[Fraction, Fraction]] = [d.point(v) for v in d.graph.vertices]
    for i in range(len(d.graph.edges)):
        pts.extend(d.bends[i])
    if pts:
        min_x = min(p[0] for p in pts)
        max_x = max(p[0] for p in pts)
        min_y = min(p[1] for p in pts)
        max_y = max(p[1] for p in pts)
    else:
        min_x = max_x = min_y = max_y = Fraction(0)

    inner_w = opts.width - 2 * opts.margin
    inner_h = opts.height - 2 * opts.margin
    span_x = max_x - min_x
    span_y = max_y - min_y

    def sx(x: Fraction) -> float:
        if span_x == 0:
            return opts.margin + inner_w / 2
        return opts.margin + float((x - min_x) / span_x) * inner_w

    def sy(y: Fraction) -> float:
        if span_y == 0:
            return opts.margin + inner_h / 2
        # Flip: the greatest height lands at the top margin.
        return opts.margin + float((max_y - y) / span_y) * inner_h

    lines: list[str] = []
    lines.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{opts.width}" height="{opts.height}" '
        f'viewBox="0 0 {opts.width} {opts.height}">'
    )
    lines.append("<!-- y axis flipped: screen y = margin + (max_height - height) * scale -->")
    lines.append(f'<rect width="{opts.width}" height="{opts.height}" fill="white"/>')

    if opts.show_level_lines:
        for h in sorted(set(d.graph.vertices.values())):
            y = _fmt(sy(h))
            lines.append(
                f'<line x1="{opts.margin}" y1="{y}" x2="{opts.width - opts.margin}" y2="{y}" '
                f'stroke="#d0d0d0" stroke-width="0.5"/>'
            )

    for i in range(len(d.graph.edges)):
        poly = d.polyline(i)
        points = " ".join(f"{_fmt(sx(px))},{_fmt(sy(py))}" for px, py in poly)
        color, dash = "#303030", None
        if opts.color_by_part and edge_parts is not None and i < len(edge_parts):
            color, dash = PART_STYLES.get(edge_parts[i], (color, None))
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        lines.append(
            f'<polyline points="{points}" fill="none" stroke="{color}" '
            f'stroke-width="{opts.stroke_width}"{dash_attr}/>'
        )

    for v in d.graph.vertices:
        px, py = d.point(v)
        lines.append(
            f'<circle cx="{_fmt(sx(px))}" cy="{_fmt(sy(py))}" r="{opts.vertex_radius}" fill="#1050a0">'
            f"<title>{v}</title></circle>"
        )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
