# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
Exhaustive searches used as ground truth for the constructions.

All searches refuse instances above the configured caps (OracleLimits) unless
called with cap=None. Graph arguments are either a ThreePole or any object
with `n` and an `edges` list of vertex pairs (CubicGraph).
"""

import logging
from typing import Dict, FrozenSet, Hashable, List, Optional, Tuple

from .colouring import EdgeColouring, SmallMultiGraph, backtrack_colouring
from .config import get_oracle_limits
from .constants import CHORD, CHORD_LABEL, CIRCUIT_SOURCE_ORACLE, H_EDGE
from .errors import SizeCapError
from .pole import AlternatingCircuit, Edge, ProperCover, ThreePole, circuit_from_walk

logger = logging.getLogger(__name__)

# cap argument default: use the configured OracleLimits value
CONFIGURED = object()

Matching = FrozenSet[Hashable]


def _cap(value, default: int) -> Optional[int]:
    return default if value is CONFIGURED else value


def _check(what: str, size: int, cap: Optional[int]) -> None:
    if cap is not None and size > cap:
        raise SizeCapError(what, size, cap)


def _incidence(graph) -> Tuple[int, List[Hashable], List[Tuple[int, ...]]]:
    """(vertex count, edge keys, edge ends); spokes have a single end"""
    if isinstance(graph, ThreePole):
        edges = graph.edges()
        return graph.n, list(edges), [e.ends for e in edges]
    return graph.n, list(range(len(graph.edges))), [tuple(e) for e in graph.edges]


def _sort_key(key: Hashable):
    return key.sort_key() if isinstance(key, Edge) else key


########################################
#          PERFECT MATCHINGS
########################################


def _matching_masks(n: int, ends: List[Tuple[int, ...]]) -> List[int]:
    """Perfect matchings as bitmasks over edge indices"""
    at: Dict[int, List[int]] = {v: [] for v in range(n)}
    for eid, e in enumerate(ends):
        for v in set(e):
            at[v].append(eid)
    found: List[int] = []
    covered = [False] * n

    def search(v: int, mask: int) -> None:
        while v < n and covered[v]:
            v += 1
        if v == n:
            found.append(mask)
            return
        for eid in at[v]:
            e = ends[eid]
            if len(e) == 2 and (e[0] == e[1] or covered[e[0]] or covered[e[1]]):
                continue
            for w in e:
                covered[w] = True
            search(v + 1, mask | (1 << eid))
            for w in e:
                covered[w] = False

    search(0, 0)
    return found


def enumerate_perfect_matchings(graph, cap=CONFIGURED) -> List[Matching]:
    """All perfect matchings in lexicographic order of their sorted edges; spokes cover their single end"""
    n, keys, ends = _incidence(graph)
    _check("perfect matching enumeration", n, _cap(cap, get_oracle_limits().matching_cap))
    matchings = [frozenset(keys[i] for i in range(len(keys)) if mask >> i & 1) for mask in _matching_masks(n, ends)]
    return sorted(matchings, key=lambda m: sorted(_sort_key(k) for k in m))


########################################
#          PROPER 4-COVERS
########################################


def brute_force_proper_cover(pole: ThreePole, cap=CONFIGURED) -> Optional[ProperCover]:
    """
    Exhaustive search for M1, M2, M3 with M4 fixed to the chords and spokes.

    Each M_k is a perfect matching containing spoke e_k and no other spoke
    (parity forces one or three spokes per matching, and every spoke is in
    exactly one of them). Every H-edge must lie in one or two of the three,
    every chord in at most one.
    """
    _check("proper cover search", pole.n, _cap(cap, get_oracle_limits().cover_cap))
    edges = pole.edges()
    index = {e: i for i, e in enumerate(edges)}
    h_mask = sum(1 << index[e] for e in pole.h_edges())
    chord_mask = sum(1 << index[e] for e in pole.chord_edges())
    spoke_bits = [1 << index[e] for e in pole.spoke_edges()]
    all_spokes = sum(spoke_bits)

    groups: List[List[int]] = [[], [], []]
    for mask in _matching_masks(pole.n, [e.ends for e in edges]):
        for k, bit in enumerate(spoke_bits):
            if mask & all_spokes == bit:
                groups[k].append(mask)

    for m1 in groups[0]:
        for m2 in groups[1]:
            if m1 & m2 & chord_mask:
                continue
            both = m1 & m2 & h_mask
            need = h_mask & ~(m1 | m2)
            forbidden = both | ((m1 | m2) & chord_mask)
            for m3 in groups[2]:
                if m3 & need == need and not m3 & forbidden:
                    labels = {}
                    for i, e in enumerate(edges):
                        ls = {k + 1 for k, m in enumerate((m1, m2, m3)) if m >> i & 1}
                        if e.kind != H_EDGE:
                            ls.add(CHORD_LABEL)
                        labels[e] = ls
                    return ProperCover(labels)
    return None


########################################
#          k-MATCHING COVERS
########################################


def covers_with_k_matchings(graph, k: int, cap=CONFIGURED) -> Tuple[bool, List[Matching]]:
    """Whether k perfect matchings cover every edge; the witness lists them"""
    n, keys, ends = _incidence(graph)
    _check("k-matching cover search", n, _cap(cap, get_oracle_limits().matching_cap))
    masks = sorted(_matching_masks(n, ends), key=lambda m: [i for i in range(len(keys)) if m >> i & 1])
    full = (1 << len(keys)) - 1
    containing = [[m for m in masks if m >> i & 1] for i in range(len(keys))]

    def search(covered: int, left: int, chosen: List[int]) -> Optional[List[int]]:
        if covered == full:
            return chosen
        if left == 0:
            return None
        # most constrained uncovered edge
        best = min((i for i in range(len(keys)) if not covered >> i & 1), key=lambda i: len(containing[i]))
        for m in containing[best]:
            result = search(covered | m, left - 1, chosen + [m])
            if result is not None:
                return result
        return None

    result = search(0, k, [])
    if result is None:
        return False, []
    witness = [frozenset(keys[i] for i in range(len(keys)) if m >> i & 1) for m in result]
    return True, witness


def perfect_matching_index(graph, max_k: int = 5, cap=CONFIGURED) -> Optional[int]:
    """Smallest k <= max_k such that k perfect matchings cover the graph"""
    for k in range(1, max_k + 1):
        ok, _ = covers_with_k_matchings(graph, k, cap)
        if ok:
            return k
    return None


########################################
#          ALTERNATING CIRCUITS
########################################


def brute_alternating_circuits(pole: ThreePole, cap=CONFIGURED) -> List[AlternatingCircuit]:
    """Every alternating circuit once: listed from its lowest vertex, chord first"""
    _check("alternating circuit enumeration", pole.n, _cap(cap, get_oracle_limits().circuit_cap))
    n = pole.n
    found: List[AlternatingCircuit] = []

    def extend(start: int, walk: List[int], on_walk: set) -> None:
        c = walk[-1]
        for w in ((c - 1) % n, (c + 1) % n):
            if w == start:
                found.append(circuit_from_walk(n, walk, CHORD, CIRCUIT_SOURCE_ORACLE))
                continue
            if w < start or w in on_walk:
                continue
            m = pole.mate(w)
            if m is None or m < start or m in on_walk:
                continue
            walk += [w, m]
            on_walk.update((w, m))
            extend(start, walk, on_walk)
            del walk[-2:]
            on_walk.difference_update((w, m))

    for s in range(n):
        m = pole.mate(s)
        if m is None or m < s:
            continue
        extend(s, [s, m], {s, m})
    found.sort(key=lambda c: (len(c), c.vertices))
    logger.debug(f"Found {len(found)} alternating circuits on n={n}")
    return found


########################################
#          COLOURABILITY
########################################


def is_three_edge_colourable(graph) -> Optional[EdgeColouring]:
    """A proper 3-edge-colouring, or None when none exists"""
    if not isinstance(graph, SmallMultiGraph):
        graph = graph.to_multigraph()
    return backtrack_colouring(graph)
