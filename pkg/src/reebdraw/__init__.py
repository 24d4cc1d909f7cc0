"""Crossing-minimal drawings of Reeb graphs.

Data model and validation live in :mod:`reebdraw.core`; exact crossing
counting and the exact minimum search in :mod:`reebdraw.crossings`; edge
subdivision in :mod:`reebdraw.subdivide`; constructive layouts in
:mod:`reebdraw.layout`; drawing straightening in :mod:`reebdraw.stretch`; the
hardness gadget machinery in :mod:`reebdraw.gadget`.
"""

from .core import (
    DegreeProfile,
    LevelAssignment,
    ReebGraph,
    ShapeClass,
    ValidationReport,
    classify_shape,
    degree_profile,
    levels,
    validate,
)
from .crossings import (
    CrossingCertificate,
    Drawing,
    ExactResult,
    LevelOrdering,
    count_crossings_geometric,
    count_crossings_layered,
    exact_rgcn,
    per_level_order,
    realize_layered,
)
from .errors import (
    BudgetExhaustedError,
    DegeneracyError,
    GraphStructureError,
    InternalInvariantError,
    LayoutError,
    ReebError,
)
from .gadget import (
    GadgetInstance,
    LinearArrangement,
    OlaGraph,
    TriHexGrid,
    arrangement_to_drawing,
    extract_arrangement,
    ola_brute,
    ola_cost,
    ola_reduce,
    tri_hex_grid,
)
from .layout import (
    CycleDecomposition,
    Type2Subproblem,
    layout_auto,
    layout_bowtie,
    layout_caterpillar,
    layout_cycle,
    layout_cycle_unique_extrema,
    layout_heuristic,
    layout_path,
    solve_type2,
    top_down_iteration_number,
)
from .stretch import (
    EdgeLeftRightOrder,
    VertexInsertionOrder,
    edge_partial_order,
    stretch,
    vertex_insertion_order,
)
from .subdivide import SubdivisionMap, subdivide, subdivide_drawing, unsubdivide_drawing
from .svg import RenderOptions, render_svg

__all__ = [
    "BudgetExhaustedError",
    "CrossingCertificate",
    "CycleDecomposition",
    "DegeneracyError",
    "DegreeProfile",
    "Drawing",
    "EdgeLeftRightOrder",
    "ExactResult",
    "GadgetInstance",
    "GraphStructureError",
    "InternalInvariantError",
    "LayoutError",
    "LevelAssignment",
    "LevelOrdering",
    "LinearArrangement",
    "OlaGraph",
    "ReebError",
    "ReebGraph",
    "RenderOptions",
    "ShapeClass",
    "SubdivisionMap",
    "TriHexGrid",
    "Type2Subproblem",
    "ValidationReport",
    "VertexInsertionOrder",
    "arrangement_to_drawing",
    "classify_shape",
    "count_crossings_geometric",
    "count_crossings_layered",
    "degree_profile",
    "edge_partial_order",
    "exact_rgcn",
    "extract_arrangement",
    "layout_auto",
    "layout_bowtie",
    "layout_caterpillar",
    "layout_cycle",
    "layout_cycle_unique_extrema",
    "layout_heuristic",
    "layout_path",
    "levels",
    "ola_brute",
    "ola_cost",
    "ola_reduce",
    "per_level_order",
    "realize_layered",
    "render_svg",
    "solve_type2",
    "stretch",
    "subdivide",
    "subdivide_drawing",
    "top_down_iteration_number",
    "tri_hex_grid",
    "unsubdivide_drawing",
    "validate",
    "vertex_insertion_order",
]

__version__ = "0.1.0"
