# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
Hamiltonian cubic 3-poles in positional form.

Vertices are the positions 0..n-1 of the Hamiltonian circuit H, H-edges are
implicitly (i, i+1 mod n), and every position carries exactly one further
edge: a chord to another position or one of the three dangling spokes.
This module holds the pole itself, its segment analysis, relabelling, the
cover and alternating-circuit value types and their verifiers.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .constants import (
    ALL_LABELS,
    CHORD,
    CHORD_LABEL,
    CIRCUIT_SOURCE_CONSTRUCTION,
    COLOURS,
    EDGE_KIND_RANK,
    H_EDGE,
    RULE_FAMILY_G,
    RULE_LEN2,
    RULE_THREE_ODD,
    RULE_UNIQ_EXTERIOR,
    SPOKE,
    THREE_ODD,
    TWO_EVEN_ONE_ODD,
)
from .errors import (
    ChordCoverageError,
    EvenOrderError,
    LoopChordError,
    PoleError,
    RoleUnavailableError,
    SpokeClashError,
)

logger = logging.getLogger(__name__)


class Edge(NamedTuple):
    """An edge of a pole: H-edges and chords by their end positions, spokes by their single end"""

    kind: str
    ends: Tuple[int, ...]

    @staticmethod
    def h(n: int, i: int) -> "Edge":
        return Edge(H_EDGE, (i % n, (i + 1) % n))

    @staticmethod
    def chord(a: int, b: int) -> "Edge":
        return Edge(CHORD, (a, b) if a <= b else (b, a))

    @staticmethod
    def spoke(v: int) -> "Edge":
        return Edge(SPOKE, (v,))

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (EDGE_KIND_RANK[self.kind], self.ends)

    def __str__(self) -> str:
        return f"{self.kind}({','.join(str(v) for v in self.ends)})"


def h_between(n: int, a: int, b: int) -> Edge:
    """The H-edge joining two cyclically adjacent positions"""
    if (a + 1) % n == b:
        return Edge.h(n, a)
    if (b + 1) % n == a:
        return Edge.h(n, b)
    raise ValueError(f"positions {a} and {b} are not adjacent on a circuit of length {n}")


def sorted_edges(edges: Iterable[Edge]) -> List[Edge]:
    return sorted(edges, key=Edge.sort_key)


@dataclass(frozen=True)
class ThreePole:
    """A validated Hamiltonian cubic 3-pole; build it with validate_pole"""

    n: int
    spokes: Tuple[int, int, int]
    chords: Tuple[Tuple[int, int], ...]
    _mate: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        mate = [-1] * self.n
        for a, b in self.chords:
            mate[a] = b
            mate[b] = a
        object.__setattr__(self, "_mate", tuple(mate))

    def mate(self, v: int) -> Optional[int]:
        """Chord partner of v, None for spoke ends"""
        m = self._mate[v]
        return None if m < 0 else m

    def spoke_index(self, v: int) -> Optional[int]:
        try:
            return self.spokes.index(v)
        except ValueError:
            return None

    def non_h_edge(self, v: int) -> Edge:
        m = self._mate[v]
        return Edge.spoke(v) if m < 0 else Edge.chord(v, m)

    def incident(self, v: int) -> Tuple[Edge, Edge, Edge]:
        return (Edge.h(self.n, v - 1), Edge.h(self.n, v), self.non_h_edge(v))

    def h_edges(self) -> List[Edge]:
        return [Edge.h(self.n, i) for i in range(self.n)]

    def chord_edges(self) -> List[Edge]:
        return [Edge.chord(a, b) for a, b in self.chords]

    def spoke_edges(self) -> List[Edge]:
        return [Edge.spoke(v) for v in self.spokes]

    def edges(self) -> List[Edge]:
        return self.h_edges() + self.chord_edges() + self.spoke_edges()

    def has_edge(self, edge: Edge) -> bool:
        if edge.kind == H_EDGE:
            return len(edge.ends) == 2 and 0 <= edge.ends[0] < self.n and edge.ends[1] == (edge.ends[0] + 1) % self.n
        if edge.kind == CHORD:
            return len(edge.ends) == 2 and 0 <= edge.ends[0] < self.n and self._mate[edge.ends[0]] == edge.ends[1]
        if edge.kind == SPOKE:
            return len(edge.ends) == 1 and edge.ends[0] in self.spokes
        return False

    def digons(self) -> List[Edge]:
        """Chords parallel to an H-edge"""
        return [Edge.chord(a, b) for a, b in self.chords if (a + 1) % self.n == b or (b + 1) % self.n == a]


def validate_pole(n: int, spokes: Sequence[int], chords: Iterable[Sequence[int]]) -> ThreePole:
    """Check a raw (n, spokes, chords) description and build the pole"""
    if not isinstance(n, int) or isinstance(n, bool):
        raise PoleError(f"vertex count must be an integer, got {n!r}")
    if n % 2 == 0:
        raise EvenOrderError(f"a Hamiltonian 3-pole has an odd number of vertices, got n={n}")
    if n < 3:
        raise PoleError(f"a 3-pole needs at least 3 vertices, got n={n}")

    spokes = tuple(spokes)
    if len(spokes) != 3:
        raise PoleError(f"exactly three spokes are required, got {len(spokes)}")
    for v in spokes:
        if not isinstance(v, int) or not 0 <= v < n:
            raise PoleError(f"spoke position {v!r} outside 0..{n - 1}")
    if len(set(spokes)) != 3:
        raise SpokeClashError(f"spoke positions must be distinct, got {spokes}")

    pairs = []
    for raw in chords:
        raw = tuple(raw)
        if len(raw) != 2:
            raise PoleError(f"a chord joins two positions, got {raw!r}")
        a, b = raw
        if not all(isinstance(v, int) and 0 <= v < n for v in (a, b)):
            raise PoleError(f"chord {raw!r} has a position outside 0..{n - 1}")
        if a == b:
            raise LoopChordError(f"chord ({a},{b}) is a loop")
        pairs.append((min(a, b), max(a, b)))

    degree = [0] * n
    for v in spokes:
        degree[v] += 1
    for a, b in pairs:
        degree[a] += 1
        degree[b] += 1
    bad = [v for v in range(n) if degree[v] != 1]
    if bad:
        raise ChordCoverageError(f"positions {bad} do not carry exactly one chord or spoke")

    return ThreePole(n=n, spokes=spokes, chords=tuple(sorted(pairs)))


########################################
#          SEGMENTS
########################################


@dataclass(frozen=True)
class Segment:
    """A subpath of H between two spoke ends, listed forward from start to end"""

    start: int
    end: int
    spokes: Tuple[int, int]  # spoke labels at start and end
    length: int
    inner: Tuple[int, ...]
    exterior: int
    interior: int

    @property
    def is_even(self) -> bool:
        return self.length % 2 == 0

    @property
    def lowest_position(self) -> int:
        return min(self.inner) if self.inner else min(self.start, self.end)

    def h_edges(self, n: int) -> List[Edge]:
        return [Edge.h(n, self.start + t) for t in range(self.length)]


@dataclass(frozen=True)
class SegmentProfile:
    segments: Tuple[Segment, Segment, Segment]
    classification: str
    # spoke labels playing v1, v2, v3
    roles: Tuple[int, int, int]
    e1: Optional[Segment] = None
    e2: Optional[Segment] = None
    o: Optional[Segment] = None

    @property
    def lengths(self) -> Tuple[int, int, int]:
        return tuple(s.length for s in self.segments)

    def even_segments(self) -> List[Segment]:
        return [s for s in (self.e1, self.e2) if s is not None]


def segment_profile(pole: ThreePole) -> SegmentProfile:
    n = pole.n
    order = sorted(range(3), key=lambda k: pole.spokes[k])
    segments = []
    for idx in range(3):
        a, b = order[idx], order[(idx + 1) % 3]
        start, end = pole.spokes[a], pole.spokes[b]
        length = (end - start) % n
        inner = tuple((start + t) % n for t in range(1, length))
        inside = set(inner)
        exterior = 0
        interior = 0
        for w in inner:
            partner = pole.mate(w)
            if partner in inside:
                if w < partner:
                    interior += 1
            else:
                exterior += 1
        segments.append(Segment(start, end, (a, b), length, inner, exterior, interior))

    segments = tuple(segments)
    odd = [s for s in segments if not s.is_even]
    if len(odd) == 3:
        return SegmentProfile(segments, THREE_ODD, (0, 1, 2))

    assert len(odd) == 1, "a pole of odd order has one or three odd segments"
    o = odd[0]
    v1, v2 = sorted(o.spokes)
    v3 = 3 - v1 - v2
    e1 = next(s for s in segments if set(s.spokes) == {v1, v3})
    e2 = next(s for s in segments if set(s.spokes) == {v2, v3})
    return SegmentProfile(segments, TWO_EVEN_ONE_ODD, (v1, v2, v3), e1=e1, e2=e2, o=o)


def in_family_g(profile: SegmentProfile) -> bool:
    """Two even segments, each with at least three exterior chords"""
    return profile.classification == TWO_EVEN_ONE_ODD and all(s.exterior >= 3 for s in profile.even_segments())


def rule_for(profile: SegmentProfile) -> str:
    """The construction the cover engine applies to a pole with this profile"""
    if profile.classification == THREE_ODD:
        return RULE_THREE_ODD
    evens = profile.even_segments()
    if any(s.length == 2 for s in evens):
        return RULE_LEN2
    if any(s.exterior == 1 for s in evens):
        return RULE_UNIQ_EXTERIOR
    return RULE_FAMILY_G


def choose_segment(profile: SegmentProfile, accept: Callable[[Segment], bool]) -> Optional[Segment]:
    """Lowest-positioned even segment accepted by the predicate"""
    candidates = [s for s in profile.even_segments() if accept(s)]
    if not candidates:
        return None
    return min(candidates, key=lambda s: s.lowest_position)


########################################
#          RELABELLING
########################################


@dataclass(frozen=True)
class Relabelling:
    """Position bijection between a pole and a relabelled copy"""

    n: int
    forward: Tuple[int, ...]
    # new spoke label k is old spoke label roles[k]
    roles: Tuple[int, int, int] = (0, 1, 2)

    def position(self, v: int) -> int:
        return self.forward[v]

    def inverse(self) -> "Relabelling":
        backward = [0] * self.n
        for old, new in enumerate(self.forward):
            backward[new] = old
        inv_roles = [0, 0, 0]
        for k, old in enumerate(self.roles):
            inv_roles[old] = k
        return Relabelling(self.n, tuple(backward), tuple(inv_roles))

    def edge(self, edge: Edge) -> Edge:
        if edge.kind == H_EDGE:
            a, b = edge.ends
            return h_between(self.n, self.forward[a], self.forward[b])
        if edge.kind == CHORD:
            return Edge.chord(self.forward[edge.ends[0]], self.forward[edge.ends[1]])
        return Edge.spoke(self.forward[edge.ends[0]])

    def cover(self, cover: "ProperCover") -> "ProperCover":
        return cover.map_edges(self.edge)

    def circuit(self, circ: "AlternatingCircuit") -> "AlternatingCircuit":
        return AlternatingCircuit(
            vertices=tuple(self.forward[v] for v in circ.vertices),
            edges=tuple(self.edge(e) for e in circ.edges),
            source=circ.source,
        )


def relabel(
    pole: ThreePole, rotation: int = 0, reflect: bool = False, roles: Sequence[int] = (0, 1, 2)
) -> Tuple[ThreePole, Relabelling]:
    """Rotate (old position `rotation` becomes 0), optionally reverse H, and permute spoke roles"""
    roles = tuple(roles)
    if sorted(roles) != [0, 1, 2]:
        raise RoleUnavailableError(f"spoke roles {roles} are not a permutation of the three spokes")
    n = pole.n
    if reflect:
        forward = tuple((rotation - i) % n for i in range(n))
    else:
        forward = tuple((i - rotation) % n for i in range(n))
    spokes = tuple(forward[pole.spokes[roles[k]]] for k in range(3))
    chords = [(forward[a], forward[b]) for a, b in pole.chords]
    return validate_pole(n, spokes, chords), Relabelling(n, forward, roles)


def to_layout(pole: ThreePole, segment: Segment) -> Tuple[ThreePole, Relabelling]:
    """Relabel so that `segment` plays E1: v1 at 0, E1 forward to v3, then E2 to v2, then O"""
    profile = segment_profile(pole)
    if profile.classification == THREE_ODD:
        raise RoleUnavailableError("a pole with three odd segments has no even role to fill")
    if segment not in profile.even_segments():
        raise RoleUnavailableError(f"segment {segment.start}..{segment.end} of length {segment.length} cannot play E1")

    apex = profile.roles[2]
    first = segment.spokes[0] if segment.spokes[1] == apex else segment.spokes[1]
    other = profile.e2 if segment == profile.e1 else profile.e1
    second = other.spokes[0] if other.spokes[1] == apex else other.spokes[1]
    p1 = pole.spokes[first]
    return relabel(pole, rotation=p1, reflect=segment.start != p1, roles=(first, second, apex))


########################################
#          COVERS
########################################


class ProperCover(Mapping):
    """Assignment edge -> label set; label i means membership in matching M_i"""

    def __init__(self, labels: Mapping[Edge, Iterable[int]]):
        self._labels: Dict[Edge, FrozenSet[int]] = {e: frozenset(v) for e, v in labels.items()}

    def __getitem__(self, edge: Edge) -> FrozenSet[int]:
        return self._labels[edge]

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            return self._labels == {e: frozenset(v) for e, v in other.items()}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._labels.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{e}:{sorted(self._labels[e])}" for e in sorted_edges(self._labels))
        return f"ProperCover({body})"

    def matching(self, label: int) -> FrozenSet[Edge]:
        return frozenset(e for e, labels in self._labels.items() if label in labels)

    def map_edges(self, fn: Callable[[Edge], Edge]) -> "ProperCover":
        return ProperCover({fn(e): labels for e, labels in self._labels.items()})

    def permuted(self, perm: Mapping[int, int]) -> "ProperCover":
        return ProperCover({e: {perm.get(x, x) for x in labels} for e, labels in self._labels.items()})

    def spoke_colours(self, pole: ThreePole) -> Tuple[Optional[int], ...]:
        """The non-4 label of each spoke, None where absent or ambiguous"""
        colours = []
        for v in pole.spokes:
            rest = self._labels.get(Edge.spoke(v), frozenset()) - {CHORD_LABEL}
            colours.append(next(iter(rest)) if len(rest) == 1 else None)
        return tuple(colours)

    def canonical(self, pole: ThreePole) -> "ProperCover":
        """Permute M1..M3 so that spoke e_k lies in M_k"""
        colours = self.spoke_colours(pole)
        if sorted(c for c in colours if c is not None) != list(COLOURS):
            return self
        return self.permuted({c: k + 1 for k, c in enumerate(colours)})


class Violation(NamedTuple):
    law: str
    where: str
    detail: str


@dataclass
class Report:
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, law: str, where: str, detail: str) -> None:
        self.violations.append(Violation(law, where, detail))

    def laws(self) -> FrozenSet[str]:
        return frozenset(v.law for v in self.violations)

    def where(self, law: str) -> List[str]:
        return [v.where for v in self.violations if v.law == law]

    def __str__(self) -> str:
        if self.ok:
            return "no violations"
        return "\n".join(f"[{v.law}] {v.where}: {v.detail}" for v in self.violations)


def verify_proper_cover(pole: ThreePole, cover: Mapping[Edge, Iterable[int]]) -> Report:
    report = Report()
    labels = {e: frozenset(v) for e, v in cover.items()}

    for edge in sorted_edges(labels):
        if not pole.has_edge(edge):
            report.add("edge-set", str(edge), "edge is not part of the pole")
    for edge in pole.edges():
        if edge not in labels:
            report.add("edge-set", str(edge), "edge carries no labels")

    for edge in sorted_edges(labels):
        ls = labels[edge]
        if not 1 <= len(ls) <= 2 or not ls <= ALL_LABELS:
            report.add("label-set", str(edge), f"labels {sorted(ls)} are not a 1- or 2-subset of 1..4")

    for v in range(pole.n):
        seen: List[int] = []
        for edge in pole.incident(v):
            seen.extend(labels.get(edge, ()))
        if sorted(seen) != [1, 2, 3, 4]:
            report.add("vertex-exactness", f"vertex {v}", f"incident labels {sorted(seen)}")

    for edge in pole.edges():
        ls = labels.get(edge)
        if ls is None:
            continue
        if edge.kind == H_EDGE and CHORD_LABEL in ls:
            report.add("chord-law", str(edge), "H-edge lies in M4")
        if edge.kind != H_EDGE and CHORD_LABEL not in ls:
            report.add("chord-law", str(edge), "chord or spoke missing from M4")

    colours = []
    for k, v in enumerate(pole.spokes):
        ls = labels.get(Edge.spoke(v), frozenset())
        if len(ls) != 2:
            report.add("spoke-law", f"e{k + 1}", f"spoke is not doubly covered: {sorted(ls)}")
        colours.extend(ls - {CHORD_LABEL})
    if sorted(colours) != list(COLOURS):
        report.add("spoke-law", "spokes", f"spoke colours {sorted(colours)} are not a bijection onto 1..3")
    return report


########################################
#          ALTERNATING CIRCUITS
########################################


@dataclass(frozen=True)
class AlternatingCircuit:
    """Closed walk; edges[i] joins vertices[i] and vertices[i+1] (cyclically)"""

    vertices: Tuple[int, ...]
    edges: Tuple[Edge, ...]
    source: str = CIRCUIT_SOURCE_CONSTRUCTION

    def __len__(self) -> int:
        return len(self.edges)

    def chords(self) -> List[Edge]:
        return [e for e in self.edges if e.kind == CHORD]

    def key(self) -> FrozenSet[Edge]:
        return frozenset(self.edges)

    def describe(self) -> str:
        k = len(self.vertices)
        return " ".join(
            f"{e.kind}({self.vertices[i]},{self.vertices[(i + 1) % k]})" for i, e in enumerate(self.edges)
        )


def circuit_from_walk(n: int, vertices: Sequence[int], first_kind: str = CHORD, source: str = CIRCUIT_SOURCE_CONSTRUCTION) -> AlternatingCircuit:
    """Build the circuit visiting `vertices`, alternating chords and H-edges from `first_kind`"""
    vertices = tuple(vertices)
    k = len(vertices)
    edges = []
    for i in range(k):
        a, b = vertices[i], vertices[(i + 1) % k]
        chord_here = (i % 2 == 0) == (first_kind == CHORD)
        edges.append(Edge.chord(a, b) if chord_here else h_between(n, a, b))
    return AlternatingCircuit(vertices, tuple(edges), source)


def verify_alternating_circuit(pole: ThreePole, circ: AlternatingCircuit) -> Report:
    report = Report()
    edges, vertices = circ.edges, circ.vertices
    k = len(edges)
    if k < 2 or k % 2:
        report.add("length", "circuit", f"length {k} is not even and at least 2")
    if len(vertices) != k:
        report.add("shape", "circuit", f"{len(vertices)} vertices for {k} edges")
        return report

    for i, edge in enumerate(edges):
        if edge.kind == SPOKE:
            report.add("spoke", str(edge), "spokes never lie on an alternating circuit")
            continue
        if not pole.has_edge(edge):
            report.add("existence", str(edge), "edge is not part of the pole")
        if set(edge.ends) != {vertices[i], vertices[(i + 1) % k]}:
            report.add("adjacency", str(edge), f"does not join {vertices[i]} and {vertices[(i + 1) % k]}")

    for i in range(k):
        a, b = edges[i], edges[(i + 1) % k]
        if (a.kind == H_EDGE) == (b.kind == H_EDGE):
            report.add("alternation", f"{a} {b}", "consecutive edges of the same kind")

    if len(set(vertices)) != len(vertices):
        report.add("distinct-vertices", "circuit", f"repeated vertices in {list(vertices)}")
    return report
