# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
Proper 4-covers of Hamiltonian cubic 3-poles.

compute_proper_cover classifies the pole by its segments and either covers it
directly (three odd segments, or a segment of length 2 through a
3-edge-colouring) or shrinks it (collapsing a segment with a unique exterior
chord, or suppressing an alternating circuit), covers the smaller pole and
extends the cover back. Each level is recorded as a TraceStep.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from .colouring import colour_gstar, colouring_to_cover
from .config import EngineConfig, get_engine_config
from .constants import (
    CHORD,
    CHORD_LABEL,
    CIRCUIT_SOURCE_CONSTRUCTION,
    COLOURS,
    H_EDGE,
    REDUCTION_UNIQUE_EXTERIOR,
    RULE_LEN2,
    RULE_SUPPRESS,
    RULE_THREE_ODD,
    RULE_UNIQ_EXTERIOR,
    THREE_ODD,
)
from .errors import (
    ImproperInputError,
    InternalProofViolation,
    InvalidCircuitError,
    Pm4CoverError,
    WrongProfileError,
)
from .pole import (
    AlternatingCircuit,
    Edge,
    ProperCover,
    ThreePole,
    choose_segment,
    rule_for,
    segment_profile,
    to_layout,
    validate_pole,
    verify_alternating_circuit,
    verify_proper_cover,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceStep:
    rule: str
    size_before: int
    size_after: int
    detail: str = ""


@dataclass(frozen=True)
class SuppressionRecord:
    old_pole: ThreePole
    new_pole: ThreePole
    removed_chords: Tuple[Edge, ...]
    smoothed: frozenset
    old_to_new: Mapping[int, int]
    # paths[j] is the old path behind new H-edge (j, j+1), as (edge, in circuit) pairs
    paths: Tuple[Tuple[Tuple[Edge, bool], ...], ...]


@dataclass(frozen=True)
class ReductionRecord:
    variant: str
    old_pole: ThreePole
    new_pole: ThreePole
    removed: Tuple[int, ...]
    old_to_new: Mapping[int, int]
    # reduced edge -> original edge, for every reduced edge with a preimage
    edge_map: Mapping[Edge, Edge]
    # reduced edges without a preimage, by role
    inserted: Mapping[str, Edge]
    # original edges rebuilt on extension, in order along the path
    old_path: Tuple[Edge, ...] = ()
    old_chords: Tuple[Edge, ...] = ()

    @property
    def new_to_old(self) -> Dict[int, int]:
        return {new: old for old, new in self.old_to_new.items()}


########################################
#          DIRECT COVERS
########################################


def cover_three_odd(pole: ThreePole) -> ProperCover:
    profile = segment_profile(pole)
    if profile.classification != THREE_ODD:
        raise WrongProfileError(f"pole has segment lengths {profile.lengths}, not three odd segments")
    labels: Dict[Edge, set] = {}
    for segment in profile.segments:
        a, b = segment.spokes
        ab = {a + 1, b + 1}
        c = set(COLOURS) - ab
        for t, edge in enumerate(segment.h_edges(pole.n)):
            labels[edge] = c if t % 2 == 0 else ab
    for edge in pole.chord_edges():
        labels[edge] = {CHORD_LABEL}
    for k, edge in enumerate(pole.spoke_edges()):
        labels[edge] = {k + 1, CHORD_LABEL}
    return ProperCover(labels)


def _len2_cover(pole: ThreePole, config: Optional[EngineConfig] = None) -> Tuple[ProperCover, str]:
    profile = segment_profile(pole)
    if profile.e1 is None or profile.e1.length != 2:
        raise WrongProfileError("the E1 segment does not have length 2")
    colouring, route = colour_gstar(pole, config)
    logger.debug(f"Len2 pole n={pole.n} coloured via {route}")
    return colouring_to_cover(pole, colouring), route


def cover_with_len2_segment(pole: ThreePole, config: Optional[EngineConfig] = None) -> ProperCover:
    cover, _ = _len2_cover(pole, config)
    return cover


########################################
#          UNIQUE EXTERIOR CHORD
########################################


def reduce_unique_exterior(pole: ThreePole) -> Tuple[ThreePole, ReductionRecord]:
    """Replace the interior of E1 by one vertex q joined to v1, v3 and u"""
    profile = segment_profile(pole)
    if profile.classification == THREE_ODD:
        raise WrongProfileError("a segment with a unique exterior chord has even length")
    e1 = profile.e1
    if e1.exterior != 1:
        raise WrongProfileError(f"E1 has {e1.exterior} exterior chords, expected exactly one")
    if e1.length < 4:
        raise WrongProfileError("E1 of length 2 is covered directly")

    layout, rel = to_layout(pole, e1)
    back = rel.inverse()
    n, length = layout.n, e1.length
    inner = set(range(1, length))
    w = next(v for v in inner if layout.mate(v) not in inner)
    u = layout.mate(w)

    n2 = n - length + 2
    old_to_new = {0: 0}
    old_to_new.update({v: v - length + 2 for v in range(length, n)})
    chords = [(old_to_new[a], old_to_new[b]) for a, b in layout.chords if a not in inner and b not in inner]
    chords.append((1, old_to_new[u]))
    reduced = validate_pole(n2, tuple(old_to_new[v] for v in layout.spokes), chords)

    edge_map = {}
    for v in range(length, n):
        edge_map[Edge.h(n2, old_to_new[v])] = back.edge(Edge.h(n, v))
    for a, b in layout.chords:
        if a not in inner and b not in inner:
            edge_map[Edge.chord(old_to_new[a], old_to_new[b])] = back.edge(Edge.chord(a, b))
    for v in layout.spokes:
        edge_map[Edge.spoke(old_to_new[v])] = back.edge(Edge.spoke(v))

    touched = sorted({Edge.chord(v, layout.mate(v)) for v in inner}, key=Edge.sort_key)
    record = ReductionRecord(
        variant=REDUCTION_UNIQUE_EXTERIOR,
        old_pole=pole,
        new_pole=reduced,
        removed=tuple(back.position(v) for v in range(1, length)),
        old_to_new={back.position(old): new for old, new in old_to_new.items()},
        edge_map=edge_map,
        inserted={
            "q-v1": Edge.h(n2, 0),
            "q-v3": Edge.h(n2, 1),
            "q-u": Edge.chord(1, old_to_new[u]),
        },
        old_path=tuple(back.edge(Edge.h(n, t)) for t in range(length)),
        old_chords=tuple(back.edge(e) for e in touched),
    )
    logger.debug(f"Unique exterior reduction n={n} -> n={n2}, u={back.position(u)}")
    return reduced, record


def extend_unique_exterior(reduced_cover: Mapping[Edge, object], record: ReductionRecord) -> ProperCover:
    report = verify_proper_cover(record.new_pole, reduced_cover)
    if not report.ok:
        raise ImproperInputError(f"reduced cover is not proper:\n{report}")
    qa = frozenset(reduced_cover[record.inserted["q-v1"]])
    qb = frozenset(reduced_cover[record.inserted["q-v3"]])
    if len(qa) != 1 or len(qb) != 1 or qa == qb:
        raise ImproperInputError(f"q-v1 {sorted(qa)} and q-v3 {sorted(qb)} must be distinct single labels")
    (a,), (b,) = qa, qb
    c = (set(COLOURS) - {a, b}).pop()

    labels = {old: reduced_cover[new] for new, old in record.edge_map.items()}
    for t, edge in enumerate(record.old_path):
        labels[edge] = {a} if t % 2 == 0 else {b}
    for edge in record.old_chords:
        labels[edge] = {c, CHORD_LABEL}
    return ProperCover(labels)


########################################
#          SUPPRESSION
########################################


def suppress_alternating(pole: ThreePole, circ: AlternatingCircuit) -> Tuple[ThreePole, SuppressionRecord]:
    """Delete the circuit's chords and smooth their end vertices"""
    report = verify_alternating_circuit(pole, circ)
    if not report.ok:
        raise InvalidCircuitError(f"not an alternating circuit of the pole:\n{report}")

    n = pole.n
    removed = tuple(sorted(set(circ.chords()), key=Edge.sort_key))
    in_circuit = {e for e in circ.edges if e.kind == H_EDGE}
    smoothed = frozenset(circ.vertices)
    survivors = [v for v in range(n) if v not in smoothed]
    old_to_new = {v: i for i, v in enumerate(survivors)}

    paths = []
    for j, s in enumerate(survivors):
        path = []
        cur = s
        while True:
            edge = Edge.h(n, cur)
            path.append((edge, edge in in_circuit))
            cur = (cur + 1) % n
            if cur not in smoothed:
                break
        flags = [flag for _, flag in path]
        if len(path) % 2 == 0 or flags != [t % 2 == 1 for t in range(len(path))]:
            raise InternalProofViolation(f"path behind new H-edge {j} is not odd and alternating: {flags}")
        paths.append(tuple(path))

    removed_pairs = {e.ends for e in removed}
    chords = [(old_to_new[a], old_to_new[b]) for a, b in pole.chords if (a, b) not in removed_pairs]
    reduced = validate_pole(len(survivors), tuple(old_to_new[v] for v in pole.spokes), chords)
    record = SuppressionRecord(
        old_pole=pole,
        new_pole=reduced,
        removed_chords=removed,
        smoothed=smoothed,
        old_to_new=old_to_new,
        paths=tuple(paths),
    )
    logger.debug(f"Suppressed {len(removed)} chords: n={n} -> n={reduced.n}")
    return reduced, record


def extend_through_suppression(reduced_cover: Mapping[Edge, object], record: SuppressionRecord) -> ProperCover:
    new = record.new_pole
    report = verify_proper_cover(new, reduced_cover)
    if not report.ok:
        raise ImproperInputError(f"reduced cover is not proper:\n{report}")

    labels: Dict[Edge, frozenset] = {}
    for j, path in enumerate(record.paths):
        own = frozenset(reduced_cover[Edge.h(new.n, j)])
        rest = frozenset(COLOURS) - own
        for edge, in_circuit in path:
            labels[edge] = rest if in_circuit else own
    for edge in record.removed_chords:
        labels[edge] = frozenset({CHORD_LABEL})

    old = record.old_pole
    m = record.old_to_new
    for a, b in old.chords:
        edge = Edge.chord(a, b)
        if edge not in labels:
            labels[edge] = reduced_cover[Edge.chord(m[a], m[b])]
    for v in old.spokes:
        labels[Edge.spoke(v)] = reduced_cover[Edge.spoke(m[v])]
    return ProperCover(labels)


########################################
#          DISPATCHER
########################################


def compute_proper_cover(
    pole: ThreePole, config: Optional[EngineConfig] = None
) -> Tuple[ProperCover, List[TraceStep]]:
    """Proper 4-cover of any valid pole, with the construction applied at each level"""
    config = config or get_engine_config()
    trace: List[TraceStep] = []
    try:
        cover = _cover(pole, config, trace)
    except InternalProofViolation as e:
        e.trace = list(trace)
        raise
    except Pm4CoverError as e:
        raise InternalProofViolation(f"construction step failed on a valid pole: {e}", trace) from e
    return cover, trace


def _cover(pole: ThreePole, config: EngineConfig, trace: List[TraceStep]) -> ProperCover:
    # Deferred: circuits imports the engine's records
    from .circuits import find_alternating_circuit

    profile = segment_profile(pole)
    rule = rule_for(profile)
    n = pole.n
    logger.debug(f"n={n} lengths={profile.lengths} -> {rule}")

    if rule == RULE_THREE_ODD:
        trace.append(TraceStep(RULE_THREE_ODD, n, n, "lengths=" + ",".join(str(x) for x in profile.lengths)))
        cover = cover_three_odd(pole)

    elif rule == RULE_LEN2:
        segment = choose_segment(profile, lambda s: s.length == 2)
        layout, rel = to_layout(pole, segment)
        step = len(trace)
        trace.append(TraceStep(RULE_LEN2, n, n))
        layout_cover, route = _len2_cover(layout, config)
        trace[step] = TraceStep(RULE_LEN2, n, n, f"route={route}")
        cover = rel.inverse().cover(layout_cover)

    elif rule == RULE_UNIQ_EXTERIOR:
        segment = choose_segment(profile, lambda s: s.exterior == 1)
        layout, rel = to_layout(pole, segment)
        back = rel.inverse()
        reduced, record = reduce_unique_exterior(layout)
        u = next(x for e in record.old_chords for x in e.ends if x not in record.removed)
        removed = ",".join(str(v) for v in sorted(back.position(v) for v in record.removed))
        trace.append(TraceStep(RULE_UNIQ_EXTERIOR, n, reduced.n, f"removed={removed} u={back.position(u)}"))
        layout_cover = extend_unique_exterior(_cover(reduced, config, trace), record)
        cover = back.cover(layout_cover)

    else:
        circ = find_alternating_circuit(pole)
        reduced, record = suppress_alternating(pole, circ)
        detail = f"circuit={circ.describe()}"
        if circ.source != CIRCUIT_SOURCE_CONSTRUCTION:
            detail += f" source={circ.source}"
        trace.append(TraceStep(RULE_SUPPRESS, n, reduced.n, detail))
        cover = extend_through_suppression(_cover(reduced, config, trace), record)

    cover = cover.canonical(pole)
    if config.verify_each_level:
        report = verify_proper_cover(pole, cover)
        if not report.ok:
            raise InternalProofViolation(f"{rule} produced an improper cover for n={n}:\n{report}", trace)
    return cover
