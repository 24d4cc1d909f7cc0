from __future__ import annotations

import random
from fractions import Fraction

import pytest

from reebdraw import (
    Drawing,
    GraphStructureError,
    ReebGraph,
    layout_auto,
)
from reebdraw.jsonio import (
    parse_drawing,
    parse_graph,
    parse_ola_graph,
    parse_rational,
    serialize_drawing,
    serialize_graph,
)

from helpers import alternating_cycle, random_connected_graph


class TestRationals:
    def test_forms(self):
        assert parse_rational(3) == Fraction(3)
        assert parse_rational("1/3") == Fraction(1, 3)
        assert parse_rational("0.25") == Fraction(1, 4)
        assert parse_rational("-7/2") == Fraction(-7, 2)

    def test_rejects_floats_and_garbage(self):
        for bad in (0.25, True, "x/y", "1/0", None):
            with pytest.raises(GraphStructureError):
                parse_rational(bad)


class TestGraphRoundTrip:
    def test_minimal(self):
        g = ReebGraph.build({"a": 0, "b": 1}, [("a", "b")])
        assert parse_graph(serialize_graph(g)) == g

    def test_exact_heights(self):
        g = parse_graph('{"vertices": [{"id": "a", "height": "1/3"}, '
                        '{"id": "b", "height": "0.25"}], "edges": [["a", "b"]]}')
        assert g.vertices["a"] == Fraction(1, 3)
        assert g.vertices["b"] == Fraction(1, 4)

    def test_parallel_edge_multiplicity(self):
        g = ReebGraph.build({"a": 0, "b": 1}, [("a", "b"), ("a", "b")])
        assert parse_graph(serialize_graph(g)).edges == g.edges

    def test_random_round_trips(self):
        rng = random.Random(7)
        for _ in range(20):
            g = random_connected_graph(rng.randint(1, 8), rng)
            assert parse_graph(serialize_graph(g)) == g

    def test_missing_endpoint_names_id(self):
        with pytest.raises(GraphStructureError) as exc:
            parse_graph('{"vertices": [{"id": "a", "height": 1}], "edges": [["a", "ghost"]]}')
        assert exc.value.code == "unknown-vertex"
        assert "ghost" in str(exc.value)

    def test_error_codes_distinct(self):
        cases = {
            "bad-json": "{nope",
            "duplicate-vertex": '{"vertices": [{"id": "a", "height": 1}, {"id": "a", "height": 2}], "edges": []}',
            "self-loop": '{"vertices": [{"id": "a", "height": 1}], "edges": [["a", "a"]]}',
            "horizontal-edge": '{"vertices": [{"id": "a", "height": 1}, {"id": "b", "height": 1}], "edges": [["a", "b"]]}',
        }
        for code, text in cases.items():
            with pytest.raises(GraphStructureError) as exc:
                parse_graph(text)
            assert exc.value.code == code


class TestDrawingRoundTrip:
    def test_without_bends(self):
        d = layout_auto(ReebGraph.build({"a": 0, "b": 1}, [("a", "b")]))
        assert parse_drawing(serialize_drawing(d)) == d

    def test_with_rational_bends(self):
        g = ReebGraph.build({"a": 0, "b": 1}, [("a", "b")])
        d = Drawing(graph=g, x={"a": Fraction(0), "b": Fraction(0)},
                    bends=(((Fraction(1, 2), Fraction(3, 4)),),))
        text = serialize_drawing(d)
        assert parse_drawing(text) == d
        assert '"1/2"' in text and '"3/4"' in text

    def test_byte_deterministic(self):
        d = layout_auto(alternating_cycle(6))
        assert serialize_drawing(d) == serialize_drawing(parse_drawing(serialize_drawing(d)))

    def test_bend_with_decreasing_height_rejected(self):
        text = (
            '{"graph": {"vertices": [{"id": "a", "height": 0}, {"id": "b", "height": 2}],'
            ' "edges": [["a", "b"]]},'
            ' "x": {"a": "0", "b": "0"},'
            ' "edges": [{"endpoints": ["a", "b"], "bends": [["1", "3/2"], ["2", "1"]]}]}'
        )
        with pytest.raises(GraphStructureError) as exc:
            parse_drawing(text)
        assert exc.value.code == "bad-bend"

    def test_edge_list_mismatch_rejected(self):
        text = (
            '{"graph": {"vertices": [{"id": "a", "height": 0}, {"id": "b", "height": 2}],'
            ' "edges": [["a", "b"]]},'
            ' "x": {"a": "0", "b": "0"}, "edges": []}'
        )
        with pytest.raises(GraphStructureError) as exc:
            parse_drawing(text)
        assert exc.value.code == "edge-mismatch"


class TestOlaGraphParsing:
    def test_plain_graph(self):
        g = parse_ola_graph('{"vertices": ["a", "b"], "edges": [["a", "b"]]}')
        assert g.vertices == ("a", "b") and g.edges == (("a", "b"),)

    def test_bad_schema(self):
        with pytest.raises(GraphStructureError):
            parse_ola_graph('{"vertices": "ab", "edges": []}')
