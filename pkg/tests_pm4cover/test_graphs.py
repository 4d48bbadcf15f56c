#!/usr/bin/env python3
# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
Graph level tests: splitting along two odd circuits, composing two poles and
covering the result by four perfect matchings.
"""

import sys
import unittest
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

try:
    from pm4cover.engine import compute_proper_cover
    from pm4cover.errors import DegreeError, GraphError, ImproperInputError, NoQualifyingTwoFactorError
    from pm4cover.graphs import (
        CubicGraph,
        combine_covers,
        compose_two_circuit_graph,
        cover_two_circuit_graph,
        find_two_odd_circuit_factor,
        split_from_circuits,
        verify_matching_cover,
    )
    from tests_pm4cover.fixtures import A7, B9, H, P5, T3, T3_COVER
    GRAPHS_IMPORTS_AVAILABLE = True
except ImportError as e:
    print(f"Warning: Could not import pm4cover graph modules: {e}")
    GRAPHS_IMPORTS_AVAILABLE = False


@unittest.skipUnless(GRAPHS_IMPORTS_AVAILABLE, "pm4cover graph modules not available")
class TestCubicGraph(unittest.TestCase):
    """Cubic graph construction"""

    def test_known_graphs(self):
        petersen = CubicGraph.petersen()
        self.assertEqual((petersen.n, len(petersen.edges)), (10, 15))
        self.assertTrue(petersen.is_simple())
        self.assertEqual(CubicGraph.k4().edges, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))

    def test_not_cubic(self):
        with self.assertRaises(DegreeError):
            CubicGraph(4, ((0, 1), (1, 2), (2, 3), (3, 0)))

    def test_loop(self):
        with self.assertRaises(DegreeError):
            CubicGraph(2, ((0, 0), (0, 1), (1, 1)))

    def test_multigraph_round_trip(self):
        graph = CubicGraph(2, ((0, 1), (0, 1), (0, 1)))
        self.assertFalse(graph.is_simple())
        self.assertEqual(graph.to_networkx().number_of_edges(), 3)


@unittest.skipUnless(GRAPHS_IMPORTS_AVAILABLE, "pm4cover graph modules not available")
class TestSplitting(unittest.TestCase):
    """Two odd circuits joined by three edges"""

    def test_prism(self):
        graph, composed = compose_two_circuit_graph(T3, T3)
        self.assertEqual(graph.n, 6)
        split = find_two_odd_circuit_factor(graph)
        self.assertIsNotNone(split)
        self.assertEqual((split.c1, split.c2), ((0, 1, 2), (3, 4, 5)))
        self.assertEqual((split.pole1, split.pole2), (T3, T3))
        self.assertEqual(split.spokes, composed.spokes)

    def test_compose_offsets_second_pole(self):
        graph, split = compose_two_circuit_graph(B9, A7, pairing=(2, 0, 1))
        self.assertEqual(graph.n, 16)
        self.assertEqual(split.c2, tuple(range(9, 16)))
        self.assertEqual(graph.edges[split.edge2[H(7, 0)]], (9, 10))
        self.assertEqual(graph.edges[split.spokes[0]], (B9.spokes[0], 9 + A7.spokes[2]))

    def test_explicit_circuits(self):
        graph, _ = compose_two_circuit_graph(P5, T3)
        split = split_from_circuits(graph, range(5), range(5, 8))
        self.assertEqual(split.pole1.chords, P5.chords)
        self.assertEqual(sorted(split.pole1.spokes), sorted(P5.spokes))
        self.assertEqual(split.pole2.chords, ())
        self.assertEqual(split.c2, (5, 6, 7))

    def test_bad_circuits(self):
        graph, _ = compose_two_circuit_graph(T3, T3)
        with self.assertRaises(GraphError):
            split_from_circuits(graph, (0, 1), (2, 3, 4))
        with self.assertRaises(GraphError):
            compose_two_circuit_graph(T3, T3, pairing=(0, 0, 1))

    def test_no_qualifying_factor(self):
        self.assertIsNone(find_two_odd_circuit_factor(CubicGraph.petersen()))
        self.assertIsNone(find_two_odd_circuit_factor(CubicGraph.k4()))
        with self.assertRaises(NoQualifyingTwoFactorError):
            cover_two_circuit_graph(CubicGraph.petersen())


@unittest.skipUnless(GRAPHS_IMPORTS_AVAILABLE, "pm4cover graph modules not available")
class TestMatchingCovers(unittest.TestCase):
    """Four perfect matchings from two proper covers"""

    def test_prism(self):
        graph, split = compose_two_circuit_graph(T3, T3, pairing=(1, 2, 0))
        matchings = combine_covers(split, T3_COVER, T3_COVER)
        self.assertEqual(len(matchings), 4)
        self.assertTrue(verify_matching_cover(graph, matchings).ok)
        self.assertEqual(matchings[3], frozenset(split.spokes))

    def test_composed_graphs(self):
        for pole1, pole2, pairing in ((B9, B9, (0, 1, 2)), (B9, A7, (2, 0, 1)), (P5, A7, (1, 0, 2)), (T3, A7, (0, 1, 2))):
            graph, split = compose_two_circuit_graph(pole1, pole2, pairing)
            result = cover_two_circuit_graph(graph, split)
            self.assertTrue(result.report.ok, str(result.report))
            self.assertEqual([s.rule for s in result.trace1], [s.rule for s in compute_proper_cover(pole1)[1]])

    def test_found_split(self):
        graph, _ = compose_two_circuit_graph(B9, T3)
        result = cover_two_circuit_graph(graph)
        self.assertTrue(result.report.ok, str(result.report))

    def test_improper_cover_rejected(self):
        graph, split = compose_two_circuit_graph(T3, T3)
        bad = dict(T3_COVER)
        bad[H(3, 0)] = {1}
        with self.assertRaises(ImproperInputError):
            combine_covers(split, bad, T3_COVER)

    def test_verify_matching_cover(self):
        k4 = CubicGraph.k4()
        self.assertTrue(verify_matching_cover(k4, [[0, 5], [1, 4], [2, 3]]).ok)
        self.assertEqual(verify_matching_cover(k4, [[0, 5], [1, 4]]).laws(), {"coverage"})
        self.assertIn("perfect-matching", verify_matching_cover(k4, [[0, 1], [5], [2, 3], [4]]).laws())
        self.assertIn("edge-set", verify_matching_cover(k4, [[0, 5, 9], [1, 4], [2, 3]]).laws())


if __name__ == '__main__':
    unittest.main()
