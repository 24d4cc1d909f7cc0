from __future__ import annotations

import random
from fractions import Fraction

import pytest

from reebdraw import (
    Drawing,
    GraphStructureError,
    ReebGraph,
    count_crossings_geometric,
    edge_partial_order,
    layout_caterpillar,
    layout_path,
    per_level_order,
    stretch,
    vertex_insertion_order,
)

from helpers import curved_copy, random_caterpillar_graph, random_path_graph


def vertical_pair():
    g = ReebGraph.build({"a": 0, "b": 2, "c": 0, "d": 2}, [("a", "b"), ("c", "d")])
    d = Drawing(graph=g, x={"a": Fraction(0), "b": Fraction(0),
                            "c": Fraction(1), "d": Fraction(1)})
    return g, d


class TestEdgePartialOrder:
    def test_left_edge_precedes_right(self):
        g, d = vertical_pair()
        order = edge_partial_order(d)
        assert order.left_of[0] == (1,)
        assert order.left_of[1] == ()

    def test_disjoint_spans_incomparable(self):
        g = ReebGraph.build({"a": 0, "b": 1, "c": 2, "d": 3},
                            [("a", "b"), ("c", "d")])
        d = Drawing(graph=g, x={"a": Fraction(0), "b": Fraction(5),
                                "c": Fraction(0), "d": Fraction(5)})
        order = edge_partial_order(d)
        assert order.left_of == ((), ())

    def test_three_nested_curves_form_a_chain(self):
        g = ReebGraph.build(
            {"a1": 0, "b1": 3, "a2": 0, "b2": 3, "a3": 0, "b3": 3},
            [("a1", "b1"), ("a2", "b2"), ("a3", "b3")],
        )
        bends = (
            ((Fraction(-1), Fraction(1)),),
            ((Fraction(1), Fraction(2)),),
            ((Fraction(3), Fraction(1)),),
        )
        d = Drawing(
            graph=g,
            x={"a1": Fraction(0), "b1": Fraction(0), "a2": Fraction(1), "b2": Fraction(1),
               "a3": Fraction(2), "b3": Fraction(2)},
            bends=bends,
        )
        order = edge_partial_order(d)
        assert 1 in order.left_of[0] and 2 in order.left_of[1] and 2 in order.left_of[0]

    def test_crossing_drawing_rejected(self):
        g = ReebGraph.build({"a": 0, "b": 0, "c": 1, "d": 1}, [("a", "d"), ("b", "c")])
        d = Drawing(graph=g, x={"a": Fraction(0), "b": Fraction(1),
                                "c": Fraction(0), "d": Fraction(1)})
        with pytest.raises(GraphStructureError) as exc:
            edge_partial_order(d)
        assert exc.value.code == "has-crossings"


class TestVertexInsertionOrder:
    def test_single_edge_lower_left_first(self):
        g = ReebGraph.build({"a": 0, "b": 1}, [("a", "b")])
        d = Drawing(graph=g, x={"a": Fraction(0), "b": Fraction(1)})
        order = vertex_insertion_order(d, edge_partial_order(d))
        assert order.sequence == ("a", "b")

    def test_path_layout_inserts_left_to_right(self):
        rng = random.Random(1)
        g = random_path_graph(7, rng)
        d = layout_path(g)
        order = vertex_insertion_order(d, edge_partial_order(d))
        assert [d.x[v] for v in order.sequence] == sorted(d.x.values())

    def test_terminates_on_curved_planar_drawing(self):
        rng = random.Random(2)
        g = random_caterpillar_graph(10, rng)
        d = curved_copy(layout_caterpillar(g), rng)
        order = vertex_insertion_order(d, edge_partial_order(d))
        assert len(order.sequence) == g.vertex_count


class TestStretch:
    def test_already_straight_keeps_level_orders(self):
        rng = random.Random(3)
        g = random_caterpillar_graph(8, rng)
        d = layout_caterpillar(g)
        out = stretch(d)
        assert per_level_order(out) == per_level_order(d)
        assert count_crossings_geometric(out).count == 0

    def test_curved_drawing_straightens(self):
        rng = random.Random(4)
        g = random_caterpillar_graph(9, rng)
        d = curved_copy(layout_caterpillar(g), rng)
        out = stretch(d)
        assert all(not b for b in out.bends)
        assert count_crossings_geometric(out).count == 0
        assert per_level_order(out) == per_level_order(d)

    def test_s_shaped_legs(self):
        g = ReebGraph.build(
            {"s1": 0, "s2": 2, "s3": 1, "l1": 4, "l2": -2},
            [("s1", "s2"), ("s2", "s3"), ("s2", "l1"), ("s1", "l2")],
        )
        d0 = layout_caterpillar(g)
        sx = dict(d0.x)
        bends = [() for _ in g.edges]
        leg = g.edges.index(tuple(sorted(("s2", "l1"))))
        # an S-shaped leg: wiggle left then right on the way up
        x2 = sx["s2"]
        bends[leg] = ((x2 - Fraction(1, 3), Fraction(5, 2)), (x2 + Fraction(1, 3), Fraction(7, 2)))
        d = Drawing(graph=g, x=sx, bends=tuple(bends))
        assert count_crossings_geometric(d).count == 0
        out = stretch(d)
        assert all(not b for b in out.bends)
        assert count_crossings_geometric(out).count == 0

    def test_idempotent_on_level_orders(self):
        rng = random.Random(5)
        g = random_caterpillar_graph(9, rng)
        d = curved_copy(layout_caterpillar(g), rng)
        once = stretch(d)
        twice = stretch(once)
        assert per_level_order(once) == per_level_order(twice)

    def test_crossing_input_rejected(self):
        g = ReebGraph.build({"a": 0, "b": 0, "c": 1, "d": 1}, [("a", "d"), ("b", "c")])
        d = Drawing(graph=g, x={"a": Fraction(0), "b": Fraction(1),
                                "c": Fraction(0), "d": Fraction(1)})
        with pytest.raises(GraphStructureError) as exc:
            stretch(d)
        assert exc.value.code == "has-crossings"

    def test_parallel_edges_rejected(self):
        g = ReebGraph.build({"a": 0, "b": 1}, [("a", "b"), ("a", "b")])
        d = Drawing(
            graph=g,
            x={"a": Fraction(0), "b": Fraction(0)},
            bends=((), ((Fraction(1), Fraction(1, 2)),)),
        )
        with pytest.raises(GraphStructureError) as exc:
            stretch(d)
        assert exc.value.code == "parallel-edges"

    def test_output_partial_order_consistent_with_input(self):
        rng = random.Random(6)
        g = random_caterpillar_graph(8, rng)
        d = curved_copy(layout_caterpillar(g), rng)
        before = edge_partial_order(d)
        out = stretch(d)
        after = edge_partial_order(out)
        for i, succs in enumerate(before.left_of):
            for j in succs:
                # comparable pairs keep their direction
                assert i not in after.left_of[j]
