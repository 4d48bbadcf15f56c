# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
Alternating circuits in poles whose even segments both have at least three
exterior chords.

Everything here works on the canonical layout produced by to_layout:
v1 = 0, E1 = 0..|E1| ending at v3, E2 = |E1|..|E1|+|E2| ending at v2, and the
odd segment O closing the circuit back at 0. Results are transported back to
the caller's labelling at the end.
"""

import logging
from dataclasses import replace
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .constants import (
    CHORD,
    CIRCUIT_SOURCE_FALLBACK,
    REDUCTION_INDUCTION_BACK,
    REDUCTION_INDUCTION_FRONT,
)
from .engine import ReductionRecord
from .errors import InternalProofViolation, WrongProfileError
from .oracle import brute_alternating_circuits
from .pole import (
    AlternatingCircuit,
    Edge,
    ThreePole,
    circuit_from_walk,
    h_between,
    in_family_g,
    segment_profile,
    to_layout,
    validate_pole,
    verify_alternating_circuit,
)

logger = logging.getLogger(__name__)

# Inner vertices of the even segments in the base-case layout
A1, A2, A3 = 1, 2, 3
B3, B2, B1 = 5, 6, 7
BASE_ENDS = (A1, A2, A3, B1, B2, B3)


def find_alternating_circuit(pole: ThreePole) -> AlternatingCircuit:
    profile = segment_profile(pole)
    if not in_family_g(profile):
        raise WrongProfileError("alternating circuits are constructed for poles whose even segments have at least three exterior chords each")
    if profile.e1.length == 4 and profile.e2.length == 4:
        circ = base_case_circuit(pole)
    else:
        circ = induction_step(pole)
    report = verify_alternating_circuit(pole, circ)
    if not report.ok:
        raise InternalProofViolation(f"constructed circuit is not alternating:\n{report}")
    return circ


########################################
#          BASE CASE
########################################


def base_case_circuit(pole: ThreePole) -> AlternatingCircuit:
    """Circuit for |E1| = |E2| = 4 through paths of chords and the matching of O"""
    profile = segment_profile(pole)
    if not in_family_g(profile) or profile.e1.length != 4 or profile.e2.length != 4:
        raise WrongProfileError(f"base case needs two even segments of length 4 in the family, got {profile.lengths}")
    layout, rel = to_layout(pole, profile.e1)
    return rel.inverse().circuit(_base_case(layout))


def _o_matching(n: int) -> Dict[int, int]:
    """Perfect matching of the inner vertices 9..n-1 of O"""
    m_o = {}
    for v in range(9, n, 2):
        m_o[v] = v + 1
        m_o[v + 1] = v
    return m_o


def _walk(layout: ThreePole, m_o: Dict[int, int], start: int) -> List[int]:
    """Path of chords and M_O edges from an even-segment vertex to the next one"""
    path = [start]
    cur = layout.mate(start)
    while cur in m_o:
        path.append(cur)
        cur = m_o[cur]
        path.append(cur)
        cur = layout.mate(cur)
    path.append(cur)
    return path


def _circuit_component(layout: ThreePole, m_o: Dict[int, int], start: int) -> List[int]:
    walk = [start]
    cur = start
    while True:
        walk.append(layout.mate(cur))
        cur = m_o[walk[-1]]
        if cur == start:
            return walk
        walk.append(cur)


def _base_case(layout: ThreePole) -> AlternatingCircuit:
    n = layout.n
    m_o = _o_matching(n)
    paths = {s: _walk(layout, m_o, s) for s in BASE_ENDS}
    end = {s: p[-1] for s, p in paths.items()}

    visited: Set[int] = set()
    for p in paths.values():
        visited.update(p)
    loose = [v for v in sorted(m_o) if v not in visited]
    if loose:
        logger.debug(f"Base case: circuit component of chords and M_O at {loose[0]}")
        return circuit_from_walk(n, _circuit_component(layout, m_o, loose[0]), CHORD)

    a_side = {A1, A2, A3}
    if all(end[a] not in a_side for a in a_side):
        if end[A2] == B2:
            walk = paths[A1] + paths[B2]
        else:
            walk = paths[end[B2]] + paths[end[A2]]
        return circuit_from_walk(n, walk, CHORD)

    if end[A2] in (A1, A3):
        return circuit_from_walk(n, paths[A2], CHORD)
    if end[B2] in (B1, B3):
        return circuit_from_walk(n, paths[B2], CHORD)

    return _coloured_window_circuit(layout, m_o, paths)


def _path_edges(layout: ThreePole, path: Sequence[int]) -> List[Edge]:
    # paths start at an even-segment vertex with a chord and alternate
    return [
        Edge.chord(a, b) if t % 2 == 0 else h_between(layout.n, a, b)
        for t, (a, b) in enumerate(zip(path, path[1:]))
    ]


def _far_part(path: List[int], z: int, z_prime: int) -> Tuple[List[int], int]:
    """Subpath from z_prime to the end of `path` avoiding z, and the end it reaches"""
    i, j = path.index(z), path.index(z_prime)
    if j == i + 1:
        part = path[j:]
    else:
        part = path[: j + 1]
    end = part[-1] if j == i + 1 else part[0]
    return part, end


def _runs(vertices: List[int]) -> List[List[int]]:
    runs: List[List[int]] = []
    for v in vertices:
        if runs and runs[-1][-1] == v - 1:
            runs[-1].append(v)
        else:
            runs.append([v])
    return runs


def _two_regular_circuit(layout: ThreePole, edges: Set[Edge]) -> Optional[AlternatingCircuit]:
    n = layout.n
    chord_at: Dict[int, List[int]] = {}
    h_at: Dict[int, List[int]] = {}
    for e in edges:
        a, b = e.ends
        target = chord_at if e.kind == CHORD else h_at
        target.setdefault(a, []).append(b)
        target.setdefault(b, []).append(a)
    touched = set(chord_at) | set(h_at)
    if not touched:
        return None
    for v in touched:
        if len(chord_at.get(v, ())) != 1 or len(h_at.get(v, ())) != 1:
            return None

    start = min(touched)
    walk = [start]
    cur = start
    while True:
        walk.append(chord_at[cur][0])
        cur = h_at[walk[-1]][0]
        if cur == start:
            return circuit_from_walk(n, walk, CHORD)
        walk.append(cur)


def _coloured_window_circuit(layout: ThreePole, m_o: Dict[int, int], paths: Dict[int, List[int]]) -> AlternatingCircuit:
    n = layout.n
    red, green, grey = paths[A1], paths[B1], paths[A2]
    colour = {}
    for name, path in (("red", red), ("green", green), ("grey", grey)):
        for v in path:
            if v in m_o:
                colour[v] = name

    # O from v1 towards v2
    order = [v for v in range(n - 1, 8, -1) if colour.get(v) != "grey"]
    window = None
    for u, w in zip(order, order[1:]):
        if colour[u] != colour[w] and (window is None or abs(u - w) < window[0]):
            window = (abs(u - w), u, w)
    if window is None:
        return _fallback(layout, "no red-green window on O")
    _, u, w = window
    z_r, z_g = (u, w) if colour[u] == "red" else (w, u)
    zr_p, zg_p = m_o[z_r], m_o[z_g]

    ra_part, a_i = _far_part(red, z_r, zr_p)
    rb_part, b_j = _far_part(green, z_g, zg_p)
    a_other = A1 + A3 - a_i
    b_other = B1 + B3 - b_j
    removed = _part_edges(layout, red, ra_part) | _part_edges(layout, green, rb_part)

    base = {Edge.chord(a, b) for a, b in layout.chords}
    base.add(h_between(n, A2, a_other))
    base.add(h_between(n, B2, b_other))

    # runs of O beside the window have even length, so N_O is forced
    runs = _runs([v for v in sorted(m_o) if v not in (zr_p, zg_p)])
    if any(len(run) % 2 for run in runs):
        return _fallback(layout, f"odd run of O beside window {z_r}..{z_g}")
    n_o = {Edge.h(n, run[t]) for run in runs for t in range(0, len(run), 2)}
    circ = _two_regular_circuit(layout, (base | n_o) - removed)
    if circ is None:
        return _fallback(layout, f"no 2-regular alternating set for window {z_r}..{z_g}")
    logger.debug(f"Base case: window {z_r}..{z_g}, circuit {circ.describe()}")
    return circ


def _part_edges(layout: ThreePole, path: List[int], part: List[int]) -> Set[Edge]:
    edges = _path_edges(layout, path)
    i = path.index(part[0])
    return set(edges[i: i + len(part) - 1])


def _fallback(layout: ThreePole, reason: str) -> AlternatingCircuit:
    logger.warning(f"Base-case construction failed ({reason}); using exhaustive circuit search")
    found = brute_alternating_circuits(layout, cap=None)
    if not found:
        raise InternalProofViolation(f"pole n={layout.n} in the family has no alternating circuit")
    return replace(found[0], source=CIRCUIT_SOURCE_FALLBACK)


########################################
#          INDUCTION STEP
########################################


def induction_step(pole: ThreePole) -> AlternatingCircuit:
    """Shorten an even segment longer than 4 by two vertices, recurse and lift"""
    profile = segment_profile(pole)
    if not in_family_g(profile):
        raise WrongProfileError("induction step needs both even segments with at least three exterior chords")
    long = [s for s in profile.even_segments() if s.length > 4]
    if not long:
        raise WrongProfileError("both even segments have length 4; this is the base case")
    segment = min(long, key=lambda s: s.lowest_position)
    layout, rel = to_layout(pole, segment)
    return rel.inverse().circuit(_induction(layout))


def _drop_pair(layout: ThreePole, p: int, variant: str) -> Tuple[ThreePole, ReductionRecord]:
    """Remove positions p, p+1 of E1, join p-1 to p+2 and join their chord partners"""
    n = layout.n
    pa, pb = layout.mate(p), layout.mate(p + 1)
    old_to_new = {v: (v if v < p else v - 2) for v in range(n) if v not in (p, p + 1)}
    chords = [
        (old_to_new[a], old_to_new[b]) for a, b in layout.chords if a not in (p, p + 1) and b not in (p, p + 1)
    ]
    new_chord = Edge.chord(old_to_new[pa], old_to_new[pb])
    chords.append(new_chord.ends)
    reduced = validate_pole(n - 2, tuple(old_to_new[v] for v in layout.spokes), chords)

    n2 = n - 2
    inserted_h = Edge.h(n2, p - 1)
    edge_map = {}
    for v in range(n):
        if v in (p - 1, p, p + 1):
            continue
        edge_map[Edge.h(n2, old_to_new[v])] = Edge.h(n, v)
    for a, b in layout.chords:
        if a not in (p, p + 1) and b not in (p, p + 1):
            edge_map[Edge.chord(old_to_new[a], old_to_new[b])] = Edge.chord(a, b)
    for v in layout.spokes:
        edge_map[Edge.spoke(old_to_new[v])] = Edge.spoke(v)

    record = ReductionRecord(
        variant=variant,
        old_pole=layout,
        new_pole=reduced,
        removed=(p, p + 1),
        old_to_new=old_to_new,
        edge_map=edge_map,
        inserted={"chord": new_chord, "h-edge": inserted_h},
        old_path=(Edge.h(n, p - 1), Edge.h(n, p), Edge.h(n, p + 1)),
        old_chords=(Edge.chord(p, pa), Edge.chord(p + 1, pb)),
    )
    return reduced, record


def _lift(circ: AlternatingCircuit, record: ReductionRecord) -> AlternatingCircuit:
    """Map a circuit of the reduced pole back, expanding the inserted chord into chord, H-edge, chord"""
    p = record.removed[0]
    new_to_old = record.new_to_old
    inserted = record.inserted["chord"]
    old_mate_p = record.old_pole.mate(p)
    if record.inserted["h-edge"] in circ.edges:
        raise InternalProofViolation("reduced circuit passes through the spoke end v1 or v3")

    walk: List[int] = []
    for i, edge in enumerate(circ.edges):
        x = circ.vertices[i]
        walk.append(new_to_old[x])
        if edge == inserted:
            if new_to_old[x] == old_mate_p:
                walk += [p, p + 1]
            else:
                walk += [p + 1, p]
    return circuit_from_walk(record.old_pole.n, walk, circ.edges[0].kind, circ.source)


def _induction(layout: ThreePole) -> AlternatingCircuit:
    n = layout.n
    length = segment_profile(layout).e1.length
    if layout.mate(1) == 2:
        return circuit_from_walk(n, [1, 2], CHORD)
    if layout.mate(length - 1) == length - 2:
        return circuit_from_walk(n, [length - 2, length - 1], CHORD)

    for p, variant in ((1, REDUCTION_INDUCTION_FRONT), (length - 2, REDUCTION_INDUCTION_BACK)):
        reduced, record = _drop_pair(layout, p, variant)
        if in_family_g(segment_profile(reduced)):
            logger.debug(f"Induction ({variant}): n={n} -> n={reduced.n}")
            return _lift(find_alternating_circuit(reduced), record)
    raise InternalProofViolation(f"neither shortening of E1 (length {length}) stays in the family")
