#!/usr/bin/env python3
# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
Exhaustive search tests
"""

import sys
import unittest
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

try:
    from pm4cover.errors import SizeCapError
    from pm4cover.graphs import CubicGraph
    from pm4cover.oracle import (
        brute_alternating_circuits,
        brute_force_proper_cover,
        covers_with_k_matchings,
        enumerate_perfect_matchings,
        is_three_edge_colourable,
        perfect_matching_index,
    )
    from pm4cover.pole import ProperCover, circuit_from_walk, verify_proper_cover
    from tests_pm4cover.fixtures import A7, B9, H, P5, P5_COVER, S, T3
    ORACLE_IMPORTS_AVAILABLE = True
except ImportError as e:
    print(f"Warning: Could not import pm4cover oracle modules: {e}")
    ORACLE_IMPORTS_AVAILABLE = False


@unittest.skipUnless(ORACLE_IMPORTS_AVAILABLE, "pm4cover oracle modules not available")
class TestPerfectMatchings(unittest.TestCase):
    """Perfect matching enumeration"""

    def test_t3(self):
        matchings = enumerate_perfect_matchings(T3)
        self.assertEqual(len(matchings), 4)
        self.assertIn(frozenset({S(0), S(1), S(2)}), matchings)
        self.assertIn(frozenset({H(3, 0), S(2)}), matchings)

    def test_known_graphs(self):
        self.assertEqual(len(enumerate_perfect_matchings(CubicGraph.petersen())), 6)
        self.assertEqual(len(enumerate_perfect_matchings(CubicGraph.k4())), 3)

    def test_size_cap(self):
        with self.assertRaises(SizeCapError):
            enumerate_perfect_matchings(CubicGraph.petersen(), cap=8)
        self.assertEqual(len(enumerate_perfect_matchings(CubicGraph.petersen(), cap=None)), 6)


@unittest.skipUnless(ORACLE_IMPORTS_AVAILABLE, "pm4cover oracle modules not available")
class TestMatchingCovers(unittest.TestCase):
    """k perfect matchings covering every edge"""

    def test_petersen_needs_five(self):
        ok, witness = covers_with_k_matchings(CubicGraph.petersen(), 4)
        self.assertFalse(ok)
        self.assertEqual(witness, [])
        ok, witness = covers_with_k_matchings(CubicGraph.petersen(), 5)
        self.assertTrue(ok)
        self.assertEqual(len(witness), 5)
        self.assertEqual(set().union(*witness), set(range(15)))

    def test_index(self):
        self.assertEqual(perfect_matching_index(CubicGraph.petersen()), 5)
        self.assertEqual(perfect_matching_index(CubicGraph.k4()), 3)
        self.assertIsNone(perfect_matching_index(CubicGraph.petersen(), max_k=4))

    def test_colourability(self):
        self.assertIsNotNone(is_three_edge_colourable(CubicGraph.k4()))
        self.assertIsNone(is_three_edge_colourable(CubicGraph.petersen()))


@unittest.skipUnless(ORACLE_IMPORTS_AVAILABLE, "pm4cover oracle modules not available")
class TestProperCoverSearch(unittest.TestCase):
    """Brute-force proper 4-covers"""

    def test_small_poles(self):
        for pole in (T3, A7, P5, B9):
            cover = brute_force_proper_cover(pole)
            self.assertIsNotNone(cover)
            self.assertTrue(verify_proper_cover(pole, cover).ok)

    def test_p5_has_one_cover(self):
        self.assertEqual(brute_force_proper_cover(P5), ProperCover(P5_COVER))

    def test_cap(self):
        with self.assertRaises(SizeCapError):
            brute_force_proper_cover(B9, cap=7)


@unittest.skipUnless(ORACLE_IMPORTS_AVAILABLE, "pm4cover oracle modules not available")
class TestAlternatingCircuits(unittest.TestCase):
    """Alternating circuit enumeration"""

    def test_no_chords(self):
        self.assertEqual(brute_alternating_circuits(T3), [])

    def test_b9(self):
        circuits = brute_alternating_circuits(B9)
        short = [c for c in circuits if len(c) == 4]
        self.assertEqual(len(short), 1)
        self.assertEqual(short[0].key(), circuit_from_walk(9, [1, 6, 7, 2]).key())
        self.assertEqual(circuits, sorted(circuits, key=lambda c: (len(c), c.vertices)))

    def test_p5_has_none(self):
        # both neighbours of 3 are spoke ends
        self.assertEqual(brute_alternating_circuits(P5), [])


if __name__ == '__main__':
    unittest.main()
