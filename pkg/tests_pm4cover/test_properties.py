#!/usr/bin/env python3
# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
Agreement runs: the engine over every small pole and over seeded random
poles, each cover checked by the verifier and, where affordable, against the
exhaustive search.
"""

import sys
import time
import unittest
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

try:
    from pm4cover.circuits import find_alternating_circuit
    from pm4cover.colouring import colour_gstar
    from pm4cover.constants import PROFILE_CONSTRAINTS, RULE_ANY, RULE_FAMILY_G, RULE_LEN2, RULE_THREE_ODD, RULE_UNIQ_EXTERIOR
    from pm4cover.engine import compute_proper_cover, extend_through_suppression, extend_unique_exterior, reduce_unique_exterior, suppress_alternating
    from pm4cover.generators import GenSpec, enumerate_poles, gen_random_pole
    from pm4cover.graphs import compose_two_circuit_graph, cover_two_circuit_graph
    from pm4cover.oracle import brute_force_proper_cover
    from pm4cover.pole import relabel, rule_for, segment_profile, verify_alternating_circuit, verify_proper_cover
    PROPERTIES_IMPORTS_AVAILABLE = True
except ImportError as e:
    print(f"Warning: Could not import pm4cover modules: {e}")
    PROPERTIES_IMPORTS_AVAILABLE = False

# wall-clock ceilings per instance at n=101
COLOURING_SECONDS = 1.0
ENGINE_SECONDS = 2.0


@unittest.skipUnless(PROPERTIES_IMPORTS_AVAILABLE, "pm4cover modules not available")
class TestExhaustiveSmallPoles(unittest.TestCase):
    """Every pole up to eleven vertices"""

    def test_engine_covers_every_pole(self):
        for n in (3, 5, 7, 9, 11):
            for pole in enumerate_poles(n):
                cover, trace = compute_proper_cover(pole)
                report = verify_proper_cover(pole, cover)
                self.assertTrue(report.ok, f"{pole}\n{report}")
                self.assertEqual(cover.spoke_colours(pole), (1, 2, 3))
                self.assertEqual(trace[0].size_before, n)

    def test_every_pole_of_eleven(self):
        self.assertEqual(sum(1 for _ in enumerate_poles(11)), 4725)

    def test_oracle_agrees(self):
        for n in (3, 5, 7, 9, 11):
            for pole in enumerate_poles(n):
                witness = brute_force_proper_cover(pole)
                self.assertIsNotNone(witness, f"{pole}")
                self.assertTrue(verify_proper_cover(pole, witness).ok)

    def test_sizes_shrink(self):
        for pole in enumerate_poles(9):
            _, trace = compute_proper_cover(pole)
            for before, after in zip(trace, trace[1:]):
                self.assertEqual(after.size_before, before.size_after)
            self.assertIn(trace[-1].rule, ("ThreeOdd", "Len2"))


@unittest.skipUnless(PROPERTIES_IMPORTS_AVAILABLE, "pm4cover modules not available")
class TestRandomPoles(unittest.TestCase):
    """Seeded poles of every profile up to 101 vertices"""

    def test_engine(self):
        for profile in PROFILE_CONSTRAINTS:
            for n in (15, 31, 61, 101):
                for seed in range(25):
                    pole = gen_random_pole(GenSpec(n, seed=seed, profile=profile, scramble=seed % 2 == 1))
                    started = time.perf_counter()
                    cover, _ = compute_proper_cover(pole)
                    elapsed = time.perf_counter() - started
                    report = verify_proper_cover(pole, cover)
                    self.assertTrue(report.ok, f"{profile} n={n} seed={seed}\n{report}")
                    self.assertLess(elapsed, ENGINE_SECONDS, f"{profile} n={n} seed={seed}")

    def test_len2_colouring_time(self):
        scrambled = [(seed, True) for seed in (108, 258, 293, 438, 463)]
        plain = [(seed, False) for seed in range(300)]
        for seed, scramble in scrambled + plain:
            pole = gen_random_pole(GenSpec(101, seed=seed, profile=RULE_LEN2, scramble=scramble))
            started = time.perf_counter()
            colour_gstar(pole)
            elapsed = time.perf_counter() - started
            self.assertLess(elapsed, COLOURING_SECONDS, f"seed={seed} scramble={scramble}")

    def test_relabelling_invariance(self):
        for seed in range(10):
            pole = gen_random_pole(GenSpec(21, seed=seed, profile=RULE_FAMILY_G))
            moved, rel = relabel(pole, rotation=seed, reflect=seed % 2 == 0, roles=(2, 0, 1))
            self.assertEqual(rule_for(segment_profile(moved)), RULE_FAMILY_G)
            cover, _ = compute_proper_cover(moved)
            back = rel.inverse().cover(cover)
            self.assertTrue(verify_proper_cover(pole, back).ok, f"seed={seed}")

    def test_suppression_over_oracle_covers(self):
        # reduced poles covered by exhaustive search instead of the engine
        for n in (11, 13):
            for seed in range(100):
                pole = gen_random_pole(GenSpec(n, seed=seed, profile=RULE_FAMILY_G))
                circ = find_alternating_circuit(pole)
                self.assertTrue(verify_alternating_circuit(pole, circ).ok)
                reduced, record = suppress_alternating(pole, circ)
                self.assertEqual(reduced.n, n - len(circ))
                reduced_cover = brute_force_proper_cover(reduced)
                cover = extend_through_suppression(reduced_cover, record)
                self.assertTrue(verify_proper_cover(pole, cover).ok, f"n={n} seed={seed}")

    def test_unique_exterior_over_oracle_covers(self):
        for seed in range(10):
            pole = gen_random_pole(GenSpec(13, seed=seed, profile=RULE_UNIQ_EXTERIOR))
            reduced, record = reduce_unique_exterior(pole)
            self.assertLess(reduced.n, pole.n)
            cover = extend_unique_exterior(brute_force_proper_cover(reduced), record)
            self.assertTrue(verify_proper_cover(pole, cover).ok, f"seed={seed}")


@unittest.skipUnless(PROPERTIES_IMPORTS_AVAILABLE, "pm4cover modules not available")
class TestComposedGraphs(unittest.TestCase):
    """Two random poles joined into a cubic graph of up to 78 vertices"""

    def test_four_matching_covers(self):
        pairings = ((0, 1, 2), (1, 2, 0), (2, 1, 0))
        for seed in range(100):
            pole1 = gen_random_pole(GenSpec(9 + 2 * (seed % 16), seed=seed))
            profile = RULE_THREE_ODD if seed % 2 else RULE_ANY
            pole2 = gen_random_pole(GenSpec(5 + 2 * (seed % 18), seed=seed + 100, profile=profile))
            graph, split = compose_two_circuit_graph(pole1, pole2, pairings[seed % 3])
            self.assertEqual(graph.n, pole1.n + pole2.n)
            result = cover_two_circuit_graph(graph, split)
            self.assertTrue(result.report.ok, f"seed={seed}\n{result.report}")


if __name__ == '__main__':
    unittest.main()
