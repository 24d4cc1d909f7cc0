from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reebdraw import (
    GraphStructureError,
    LayoutError,
    ReebGraph,
    ShapeClass,
    classify_shape,
    degree_profile,
    levels,
    validate,
)

from helpers import random_connected_graph


class TestReebGraph:
    def test_build_parses_heights(self):
        g = ReebGraph.build({"a": "3/2", "b": 1, "c": "0.25"}, [("a", "b"), ("b", "c")])
        assert g.vertices["a"] == Fraction(3, 2)
        assert g.vertices["c"] == Fraction(1, 4)

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(GraphStructureError) as exc:
            ReebGraph.build({"a": 0}, [("a", "b")])
        assert exc.value.code == "unknown-vertex"

    def test_self_loop_rejected(self):
        with pytest.raises(GraphStructureError) as exc:
            ReebGraph.build({"a": 0}, [("a", "a")])
        assert exc.value.code == "self-loop"

    def test_horizontal_edge_rejected(self):
        with pytest.raises(GraphStructureError) as exc:
            ReebGraph.build({"a": 1, "b": 1}, [("a", "b")])
        assert exc.value.code == "horizontal-edge"

    def test_parallel_edges_kept_with_multiplicity(self):
        g = ReebGraph.build({"a": 0, "b": 1}, [("a", "b"), ("b", "a")])
        assert g.edges == (("a", "b"), ("a", "b"))


class TestDegreeProfile:
    def test_single_edge(self):
        g = ReebGraph.build({"a": 0, "b": 1}, [("a", "b")])
        prof = degree_profile(g)
        assert prof.total["a"] == 1 and prof.up["a"] == 1 and prof.down["a"] == 0

    def test_parallel_multiplicity(self):
        g = ReebGraph.build({"a": 0, "b": 1}, [("a", "b"), ("a", "b")])
        prof = degree_profile(g)
        assert prof.total["a"] == 2 and prof.up["a"] == 2

    def test_branch_vertex_one_down_two_up(self):
        g = ReebGraph.build(
            {"lo": 0, "v": 1, "u1": 2, "u2": 3},
            [("lo", "v"), ("v", "u1"), ("v", "u2")],
        )
        prof = degree_profile(g)
        assert prof.total["v"] == 3 and prof.down["v"] == 1 and prof.up["v"] == 2

    def test_degree_sum_is_twice_edge_count(self):
        rng = random.Random(1)
        for _ in range(25):
            g = random_connected_graph(rng.randint(1, 9), rng)
            prof = degree_profile(g)
            assert sum(prof.total.values()) == 2 * g.edge_count
            assert all(prof.down[v] + prof.up[v] == prof.total[v] for v in g.vertices)


class TestLevels:
    def test_distinct_heights(self):
        g = ReebGraph.build({"a": "1/2", "b": 2, "c": "73/10"}, [("a", "b"), ("b", "c")])
        assert levels(g).level == {"a": 0, "b": 1, "c": 2}

    def test_ties_share_a_level(self):
        g = ReebGraph.build({"a": 1, "b": 1, "c": 3}, [("a", "c"), ("b", "c")])
        lev = levels(g)
        assert lev.level == {"a": 0, "b": 0, "c": 1}
        assert lev.count == 2

    def test_empty_graph(self):
        lev = levels(ReebGraph({}, ()))
        assert lev.level == {} and lev.count == 0

    @given(st.integers(min_value=1, max_value=7), st.integers(min_value=0, max_value=2**20))
    def test_invariant_under_monotone_height_maps(self, scale, seed):
        rng = random.Random(seed)
        g = random_connected_graph(rng.randint(1, 8), rng)
        mapped = ReebGraph(
            {v: 2 * scale * h + 1 for v, h in g.vertices.items()},
            g.edges,
        )
        assert levels(mapped).level == levels(g).level


class TestValidate:
    def test_small_path_is_generic_and_subdivided(self):
        g = ReebGraph.build({"a": 0, "b": 1}, [("a", "b")])
        rep = validate(g)
        assert rep.is_generic and rep.is_subdivided and rep.is_connected
        assert rep.violations == ()

    def test_degree_five_vertex_named(self):
        heights = {"v": 2, "a": 0, "b": 1, "c": 3, "d": 4, "e": 5}
        g = ReebGraph.build(heights, [("v", w) for w in "abcde"])
        rep = validate(g)
        assert not rep.is_generic
        assert any(v.rule == "degree-1-or-3" and v.subject == "v" for v in rep.violations)

    def test_level_skipping_edge_named(self):
        g = ReebGraph.build({"a": 0, "b": 1, "c": 2}, [("a", "b"), ("b", "c"), ("a", "c")])
        rep = validate(g)
        assert not rep.is_subdivided
        assert any(v.rule == "consecutive-levels" and "a-c" in v.subject for v in rep.violations)

    def test_flags_are_independent(self):
        # Generic but not leveled: a long edge between distinct heights.
        g = ReebGraph.build(
            {"a": 0, "b": 1, "c": 2, "d": 3},
            [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d"), ("a", "d")],
        )
        rep = validate(g)
        assert not rep.is_subdivided

    def test_disconnected_reported_not_raised(self):
        g = ReebGraph.build({"a": 0, "b": 1, "c": 0, "d": 1}, [("a", "b"), ("c", "d")])
        rep = validate(g)
        assert not rep.is_connected
        assert any(v.rule == "connected" for v in rep.violations)


class TestClassifyShape:
    def test_path(self):
        g = ReebGraph.build({"a": 0, "b": 2, "c": 1, "d": 3},
                            [("a", "b"), ("b", "c"), ("c", "d")])
        assert classify_shape(g) == ShapeClass.PATH

    def test_caterpillar(self):
        g = ReebGraph.build(
            {"s1": 0, "s2": 1, "s3": 0, "l1": 2, "l2": -1},
            [("s1", "s2"), ("s2", "s3"), ("s2", "l1"), ("s1", "l2")],
        )
        assert classify_shape(g) == ShapeClass.CATERPILLAR

    def test_two_parallel_edges_form_a_cycle(self):
        g = ReebGraph.build({"a": 0, "b": 1}, [("a", "b"), ("a", "b")])
        assert classify_shape(g) == ShapeClass.SINGLE_CYCLE

    def test_lobster_is_tree_not_caterpillar(self):
        # A branch of length two off the middle of the spine makes the
        # non-leaf vertices branch, so they no longer form a path.
        g = ReebGraph.build(
            {"s1": 0, "s2": 1, "s3": 0, "s4": 1, "s5": 0, "m": 2, "tip": 3},
            [("s1", "s2"), ("s2", "s3"), ("s3", "s4"), ("s4", "s5"),
             ("s3", "m"), ("m", "tip")],
        )
        assert classify_shape(g) == ShapeClass.TREE

    def test_cycle_with_chord_is_general(self):
        g = ReebGraph.build(
            {"a": 0, "b": 1, "c": 2, "d": 1},
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")],
        )
        assert classify_shape(g) == ShapeClass.GENERAL

    def test_disconnected_rejected(self):
        g = ReebGraph.build({"a": 0, "b": 1, "c": 0, "d": 1}, [("a", "b"), ("c", "d")])
        with pytest.raises(LayoutError) as exc:
            classify_shape(g)
        assert exc.value.code == "disconnected"

    def test_deterministic(self):
        rng = random.Random(4)
        for _ in range(20):
            g = random_connected_graph(rng.randint(1, 8), rng)
            assert classify_shape(g) == classify_shape(g)
