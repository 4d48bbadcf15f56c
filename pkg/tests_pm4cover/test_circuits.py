#!/usr/bin/env python3
# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
Alternating circuit construction tests
"""

import sys
import unittest
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

try:
    from pm4cover import circuits
    from pm4cover.circuits import base_case_circuit, find_alternating_circuit, induction_step
    from pm4cover.constants import CIRCUIT_SOURCE_CONSTRUCTION, CIRCUIT_SOURCE_FALLBACK, RULE_FAMILY_G
    from pm4cover.engine import compute_proper_cover
    from pm4cover.errors import WrongProfileError
    from pm4cover.generators import GenSpec, gen_random_pole
    from pm4cover.oracle import brute_alternating_circuits
    from pm4cover.pole import relabel, validate_pole, verify_alternating_circuit, verify_proper_cover
    from tests_pm4cover.fixtures import B9, C, H, I11, P5, T3, W13, W15
    CIRCUITS_IMPORTS_AVAILABLE = True
except ImportError as e:
    print(f"Warning: Could not import pm4cover circuit modules: {e}")
    CIRCUITS_IMPORTS_AVAILABLE = False


@unittest.skipUnless(CIRCUITS_IMPORTS_AVAILABLE, "pm4cover circuit modules not available")
class TestBaseCase(unittest.TestCase):
    """Both even segments of length 4"""

    def test_b9(self):
        circ = base_case_circuit(B9)
        self.assertEqual(circ.vertices, (1, 6, 7, 2))
        self.assertEqual(circ.edges, (C(1, 6), H(9, 6), C(2, 7), H(9, 1)))
        self.assertEqual(circ.source, CIRCUIT_SOURCE_CONSTRUCTION)

    def test_b9_relabelled(self):
        pole, rel = relabel(B9, rotation=5, reflect=True)
        circ = find_alternating_circuit(pole)
        self.assertTrue(verify_alternating_circuit(pole, circ).ok)
        self.assertEqual(rel.inverse().circuit(circ).key(), base_case_circuit(B9).key())

    def test_only_for_length_four(self):
        with self.assertRaises(WrongProfileError):
            base_case_circuit(I11)
        with self.assertRaises(WrongProfileError):
            base_case_circuit(P5)

    def test_coloured_window(self):
        # removes C(1,9) and C(5,12); O contributes H(10,11)
        with self.assertNoLogs("pm4cover.circuits", level="WARNING"):
            circ = base_case_circuit(W13)
        self.assertEqual(circ.vertices, (2, 6, 7, 11, 10, 3))
        self.assertEqual(circ.edges, (C(2, 6), H(13, 6), C(7, 11), H(13, 10), C(3, 10), H(13, 2)))
        self.assertEqual(circ.source, CIRCUIT_SOURCE_CONSTRUCTION)
        self.assertTrue(verify_alternating_circuit(W13, circ).ok)

    def test_coloured_window_with_grey_path_through_o(self):
        # window 13..10 skips the grey pair 11, 12; O contributes H(10,11) and H(12,13)
        with self.assertNoLogs("pm4cover.circuits", level="WARNING"):
            circ = base_case_circuit(W15)
        self.assertEqual(circ.vertices, (1, 13, 12, 6, 5, 10, 11, 2))
        self.assertEqual(
            circ.edges,
            (C(1, 13), H(15, 12), C(6, 12), H(15, 5), C(5, 10), H(15, 10), C(2, 11), H(15, 1)),
        )
        self.assertEqual(circ.source, CIRCUIT_SOURCE_CONSTRUCTION)
        self.assertTrue(verify_alternating_circuit(W15, circ).ok)

    def test_coloured_window_covers(self):
        for pole in (W13, W15):
            circ = find_alternating_circuit(pole)
            keys = {c.key() for c in brute_alternating_circuits(pole)}
            self.assertIn(circ.key(), keys)
            cover, trace = compute_proper_cover(pole)
            self.assertTrue(verify_proper_cover(pole, cover).ok)
            self.assertEqual(trace[0].rule, "Suppress")

    def test_fallback(self):
        with self.assertLogs("pm4cover.circuits", level="WARNING"):
            circ = circuits._fallback(B9, "forced")
        self.assertEqual(circ.vertices, (1, 6, 7, 2))
        self.assertEqual(circ.source, CIRCUIT_SOURCE_FALLBACK)


@unittest.skipUnless(CIRCUITS_IMPORTS_AVAILABLE, "pm4cover circuit modules not available")
class TestInduction(unittest.TestCase):
    """Shortening a long even segment"""

    def test_i11(self):
        circ = find_alternating_circuit(I11)
        self.assertEqual(circ.vertices, (3, 8, 7, 4))
        self.assertEqual(circ.edges, (C(3, 8), H(11, 7), C(4, 7), H(11, 3)))

    def test_front_digon(self):
        pole = validate_pole(11, (0, 10, 6), [(1, 2), (3, 9), (4, 8), (5, 7)])
        circ = induction_step(pole)
        self.assertEqual(circ.vertices, (1, 2))
        self.assertTrue(verify_alternating_circuit(pole, circ).ok)

    def test_back_digon(self):
        pole = validate_pole(11, (0, 10, 6), [(1, 9), (2, 8), (3, 7), (4, 5)])
        circ = induction_step(pole)
        self.assertEqual(circ.vertices, (4, 5))
        self.assertTrue(verify_alternating_circuit(pole, circ).ok)

    def test_needs_a_long_segment(self):
        with self.assertRaises(WrongProfileError):
            induction_step(B9)

    def test_needs_the_family(self):
        for pole in (T3, P5):
            with self.assertRaises(WrongProfileError):
                find_alternating_circuit(pole)


@unittest.skipUnless(CIRCUITS_IMPORTS_AVAILABLE, "pm4cover circuit modules not available")
class TestAgainstExhaustiveSearch(unittest.TestCase):
    """Constructed circuits are alternating circuits the exhaustive search also finds"""

    def test_b9_in_exhaustive_list(self):
        keys = {c.key() for c in brute_alternating_circuits(B9)}
        self.assertIn(find_alternating_circuit(B9).key(), keys)

    def test_random_small_family(self):
        for n in (9, 11, 13):
            for seed in range(15):
                pole = gen_random_pole(GenSpec(n, seed=seed, profile=RULE_FAMILY_G))
                circ = find_alternating_circuit(pole)
                self.assertTrue(verify_alternating_circuit(pole, circ).ok, f"n={n} seed={seed}")
                keys = {c.key() for c in brute_alternating_circuits(pole)}
                self.assertIn(circ.key(), keys, f"n={n} seed={seed}")

    def test_random_large_family(self):
        for n in (15, 21, 27, 33, 41):
            for seed in range(40):
                pole = gen_random_pole(GenSpec(n, seed=seed, profile=RULE_FAMILY_G, scramble=True))
                circ = find_alternating_circuit(pole)
                self.assertTrue(verify_alternating_circuit(pole, circ).ok, f"n={n} seed={seed}")


if __name__ == '__main__':
    unittest.main()
