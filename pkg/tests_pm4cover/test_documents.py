#!/usr/bin/env python3
# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
Document and graph6 tests
"""

import json
import sys
import unittest
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

try:
    import networkx as nx

    from pm4cover.engine import TraceStep, compute_proper_cover
    from pm4cover.errors import (
        DegreeError,
        DocumentReferenceError,
        DocumentSyntaxError,
        DocumentValidationError,
    )
    from pm4cover.documents import (
        parse_cover,
        parse_pole,
        parse_pole_stream,
        parse_trace,
        parse_two_factor,
        serialize_certificate,
        serialize_cover,
        serialize_partial_certificate,
        serialize_pole,
        serialize_trace,
        serialize_two_factor,
    )
    from pm4cover.graph_io import bundled_graphs, load_bundled_graph, parse_graph6, parse_graph6_lines, serialize_graph6
    from pm4cover.graphs import CubicGraph, compose_two_circuit_graph, cover_two_circuit_graph
    from pm4cover.pole import ProperCover
    from tests_pm4cover.fixtures import B9, B9_COVER, DATA_DIR, P5, T3
    DOCUMENTS_IMPORTS_AVAILABLE = True
except ImportError as e:
    print(f"Warning: Could not import pm4cover document modules: {e}")
    DOCUMENTS_IMPORTS_AVAILABLE = False


B9_LINE = '{"n":9,"spokes":[0,8,4],"chords":[[1,6],[2,7],[3,5]]}\n'


@unittest.skipUnless(DOCUMENTS_IMPORTS_AVAILABLE, "pm4cover document modules not available")
class TestPoleDocuments(unittest.TestCase):
    """One compact object per pole"""

    def test_serialize(self):
        self.assertEqual(serialize_pole(B9), B9_LINE)

    def test_parse(self):
        self.assertEqual(parse_pole(B9_LINE), B9)
        self.assertEqual(parse_pole('{"n": 5, "spokes": [0, 4, 2], "chords": [[3, 1]]}'), P5)

    def test_stream(self):
        text = serialize_pole(T3) + "\n" + B9_LINE
        self.assertEqual(parse_pole_stream(text), [T3, B9])

    def test_syntax_error(self):
        with self.assertRaises(DocumentSyntaxError):
            parse_pole('{"n": 9,')

    def test_validation_errors(self):
        for text in (
            '{"n": "9", "spokes": [0, 8, 4], "chords": [[1, 6], [2, 7], [3, 5]]}',
            '{"n": 9, "spokes": [0, 8, 4]}',
            '{"n": 3, "spokes": [0, 1, 2], "chords": [], "name": "t3"}',
            '{"n": 4, "spokes": [0, 1, 2], "chords": [[3, 3]]}',
            '{"n": 5, "spokes": [0, 1, 2], "chords": []}',
        ):
            with self.assertRaises(DocumentValidationError, msg=text):
                parse_pole(text)


@unittest.skipUnless(DOCUMENTS_IMPORTS_AVAILABLE, "pm4cover document modules not available")
class TestCoverDocuments(unittest.TestCase):
    """Cover documents"""

    def setUp(self):
        self.golden = (DATA_DIR / "b9.cover.json").read_text()

    def test_serialize_matches_golden(self):
        cover, trace = compute_proper_cover(B9)
        self.assertEqual(serialize_cover(B9, cover, trace), self.golden)

    def test_parse_golden(self):
        parsed = parse_cover(self.golden, B9)
        self.assertEqual(parsed.pole, B9)
        self.assertEqual(parsed.cover, ProperCover(B9_COVER))
        self.assertTrue(parsed.proper)
        self.assertEqual(parsed.trace[1], TraceStep("Len2", 5, 5, "route=backtrack"))

    def test_partial_cover(self):
        text = serialize_cover(B9, ProperCover({}), [TraceStep("Suppress", 9, 5, "")], proper=False)
        parsed = parse_cover(text)
        self.assertFalse(parsed.proper)
        self.assertEqual(len(parsed.cover), 0)
        self.assertIn('"edges": []', text)

    def test_other_pole(self):
        with self.assertRaises(DocumentReferenceError):
            parse_cover(self.golden, P5)

    def test_reference_errors(self):
        for old, new in (
            ('"ends": [1, 6]', '"ends": [1, 5]'),
            ('"ends": [8, 0]', '"ends": [0, 8]'),
            ('"kind": "spoke", "ends": [4]', '"kind": "spoke", "ends": [5]'),
        ):
            with self.assertRaises(DocumentReferenceError, msg=new):
                parse_cover(self.golden.replace(old, new))

    def test_validation_errors(self):
        for old, new in (
            ('"kind": "spoke", "ends": [4]', '"kind": "spoke", "ends": [0]'),
            ('"kind": "spoke", "ends": [4]', '"kind": "spike", "ends": [4]'),
            ('"matchings": [3, 4]}', '"matchings": [3, 5]}'),
            ('"ends": [3, 4]', '"ends": [3]'),
            ('"proper": true', '"proper": "yes"'),
        ):
            with self.assertRaises(DocumentValidationError, msg=new):
                parse_cover(self.golden.replace(old, new))


@unittest.skipUnless(DOCUMENTS_IMPORTS_AVAILABLE, "pm4cover document modules not available")
class TestTracesAndFactors(unittest.TestCase):
    """Trace lines, two-factor documents and certificates"""

    def test_trace_lines(self):
        _, trace = compute_proper_cover(B9)
        text = serialize_trace(trace)
        self.assertEqual(len(text.splitlines()), 2)
        self.assertEqual(parse_trace(text), trace)

    def test_two_factor(self):
        text = serialize_two_factor((0, 1, 2), (3, 4, 5))
        self.assertEqual(text, '{"c1":[0,1,2],"c2":[3,4,5]}\n')
        self.assertEqual(parse_two_factor(text), ([0, 1, 2], [3, 4, 5]))
        with self.assertRaises(DocumentValidationError):
            parse_two_factor('{"c1": [0, 1, 2]}')

    def test_certificate(self):
        graph, split = compose_two_circuit_graph(B9, T3)
        doc = json.loads(serialize_certificate(cover_two_circuit_graph(graph, split)))
        self.assertTrue(doc["verified"])
        self.assertEqual(doc["n"], 12)
        self.assertEqual(len(doc["matchings"]), 4)
        self.assertEqual(doc["two_factor"], {"c1": list(range(9)), "c2": [9, 10, 11]})
        self.assertEqual(parse_graph6(doc["graph6"]), CubicGraph.from_edges(12, doc["edges"]))
        self.assertEqual([r["rule"] for r in doc["trace1"]], ["Suppress", "Len2"])
        self.assertEqual(doc["trace2"][0]["rule"], "ThreeOdd")

    def test_partial_certificate(self):
        graph, split = compose_two_circuit_graph(T3, T3)
        doc = json.loads(serialize_partial_certificate(graph, split, [], "boom"))
        self.assertFalse(doc["verified"])
        self.assertEqual(doc["error"], "boom")
        self.assertEqual(doc["trace"], [])
        self.assertIsNone(json.loads(serialize_partial_certificate(graph, None, [], "x"))["two_factor"])


@unittest.skipUnless(DOCUMENTS_IMPORTS_AVAILABLE, "pm4cover document modules not available")
class TestGraph6(unittest.TestCase):
    """graph6 records"""

    def test_petersen(self):
        expected = nx.to_graph6_bytes(nx.petersen_graph(), header=False).rstrip(b"\n")
        self.assertEqual(serialize_graph6(CubicGraph.petersen()), expected)
        self.assertEqual(parse_graph6(expected), CubicGraph.petersen())

    def test_header_and_lines(self):
        self.assertEqual(parse_graph6(">>graph6<<C~\n"), CubicGraph.k4())
        self.assertEqual(parse_graph6_lines("C~\n\nC~\n"), [CubicGraph.k4(), CubicGraph.k4()])

    def test_bundled(self):
        self.assertEqual(bundled_graphs(), ["k4", "petersen"])
        self.assertEqual(load_bundled_graph("petersen"), CubicGraph.petersen())
        with self.assertRaises(DocumentReferenceError):
            load_bundled_graph("heawood")

    def test_rejected_records(self):
        for record in ("", ":Fa@x^", "&C]|w", "Ihe"):
            with self.assertRaises(DocumentSyntaxError, msg=record):
                parse_graph6(record)

    def test_not_cubic(self):
        with self.assertRaises(DegreeError):
            parse_graph6(nx.to_graph6_bytes(nx.path_graph(4), header=False))

    def test_parallel_edges(self):
        with self.assertRaises(DocumentValidationError):
            serialize_graph6(CubicGraph(2, ((0, 1), (0, 1), (0, 1))))


if __name__ == '__main__':
    unittest.main()
