# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
Closed cubic graphs with a 2-factor of two odd circuits joined by exactly
three edges of the complementary 1-factor.

Such a graph splits into two Hamiltonian 3-poles, one per circuit. Proper
4-covers of the two poles agree on the joining edges after a permutation of
the colours 1..3, and their union is a cover of the graph by four perfect
matchings.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from .colouring import SmallMultiGraph
from .config import EngineConfig
from .constants import CHORD_LABEL
from .engine import TraceStep, compute_proper_cover
from .errors import DegreeError, GraphError, ImproperInputError, NoQualifyingTwoFactorError
from .oracle import CONFIGURED, enumerate_perfect_matchings
from .pole import Edge, ProperCover, Report, ThreePole, validate_pole, verify_proper_cover

logger = logging.getLogger(__name__)

GraphMatching = FrozenSet[int]


@dataclass(frozen=True)
class CubicGraph:
    """Cubic multigraph on 0..n-1; edge ids are positions in `edges`"""

    n: int
    edges: Tuple[Tuple[int, int], ...]
    _incidence: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        incidence: List[List[int]] = [[] for _ in range(self.n)]
        for eid, (a, b) in enumerate(self.edges):
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise GraphError(f"edge {eid} = ({a},{b}) has an end outside 0..{self.n - 1}")
            if a == b:
                raise DegreeError(f"edge {eid} is a loop at vertex {a}")
            incidence[a].append(eid)
            incidence[b].append(eid)
        bad = {v: len(es) for v, es in enumerate(incidence) if len(es) != 3}
        if bad:
            raise DegreeError(f"graph is not cubic; degrees {bad}")
        object.__setattr__(self, "_incidence", tuple(tuple(es) for es in incidence))

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[Sequence[int]]) -> "CubicGraph":
        return cls(n, tuple(sorted((min(a, b), max(a, b)) for a, b in edges)))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "CubicGraph":
        index = {v: i for i, v in enumerate(sorted(graph.nodes()))}
        return cls.from_edges(len(index), [(index[a], index[b]) for a, b in graph.edges()])

    @classmethod
    def petersen(cls) -> "CubicGraph":
        return cls.from_networkx(nx.petersen_graph())

    @classmethod
    def k4(cls) -> "CubicGraph":
        return cls.from_networkx(nx.complete_graph(4))

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def to_multigraph(self) -> SmallMultiGraph:
        return SmallMultiGraph(tuple(range(self.n)), self.edges)

    def incident(self, v: int) -> Tuple[int, ...]:
        return self._incidence[v]

    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)


@dataclass(frozen=True)
class TwoFactorSplit:
    c1: Tuple[int, ...]
    c2: Tuple[int, ...]
    pole1: ThreePole
    pole2: ThreePole
    # pole edge -> graph edge id; spokes map to the joining edge
    edge1: Mapping[Edge, int]
    edge2: Mapping[Edge, int]
    # graph edge ids of the joining edges, in pole1 spoke order
    spokes: Tuple[int, int, int]
    # pole1 spoke k is joined to pole2 spoke pairing[k]
    pairing: Tuple[int, int, int] = (0, 1, 2)

    def vertex1(self, position: int) -> int:
        return self.c1[position]

    def vertex2(self, position: int) -> int:
        return self.c2[position]


########################################
#          SPLITTING AND COMPOSING
########################################


def _cycle_edges(graph: CubicGraph, cycle: Sequence[int], allowed: Optional[set] = None) -> List[int]:
    used = set()
    result = []
    k = len(cycle)
    for i in range(k):
        a, b = cycle[i], cycle[(i + 1) % k]
        options = [
            eid for eid in graph.incident(a)
            if set(graph.edges[eid]) == {a, b} and eid not in used and (allowed is None or eid in allowed)
        ]
        if not options:
            raise GraphError(f"circuit steps from {a} to {b} along a missing edge")
        used.add(options[0])
        result.append(options[0])
    return result


def split_from_circuits(graph: CubicGraph, c1: Sequence[int], c2: Sequence[int], cycle_edges: Optional[set] = None) -> TwoFactorSplit:
    """Split along two given circuits; pole positions follow the circuits' order"""
    c1, c2 = tuple(c1), tuple(c2)
    if sorted(c1 + c2) != list(range(graph.n)):
        raise GraphError("the two circuits do not partition the vertex set")
    if len(c1) % 2 == 0 or len(c2) % 2 == 0:
        raise NoQualifyingTwoFactorError(f"circuits of lengths {len(c1)} and {len(c2)} are not both odd")

    on_cycle = set(_cycle_edges(graph, c1, cycle_edges)) | set(_cycle_edges(graph, c2, cycle_edges))
    factor = [eid for eid in range(len(graph.edges)) if eid not in on_cycle]
    pos1 = {v: i for i, v in enumerate(c1)}
    pos2 = {v: i for i, v in enumerate(c2)}

    cross = sorted((eid for eid in factor if (graph.edges[eid][0] in pos1) != (graph.edges[eid][1] in pos1)),
                   key=lambda eid: (graph.edges[eid], eid))
    if len(cross) != 3:
        raise NoQualifyingTwoFactorError(f"the 1-factor has {len(cross)} edges between the circuits, expected 3")

    def ends(eid: int) -> Tuple[int, int]:
        a, b = graph.edges[eid]
        return (a, b) if a in pos1 else (b, a)

    chords1 = [eid for eid in factor if eid not in cross and graph.edges[eid][0] in pos1]
    chords2 = [eid for eid in factor if eid not in cross and graph.edges[eid][0] in pos2]
    pole1 = validate_pole(len(c1), [pos1[ends(e)[0]] for e in cross],
                          [(pos1[graph.edges[e][0]], pos1[graph.edges[e][1]]) for e in chords1])
    pole2 = validate_pole(len(c2), [pos2[ends(e)[1]] for e in cross],
                          [(pos2[graph.edges[e][0]], pos2[graph.edges[e][1]]) for e in chords2])

    edge1: Dict[Edge, int] = {}
    edge2: Dict[Edge, int] = {}
    for cycle, target in ((c1, edge1), (c2, edge2)):
        for i, eid in enumerate(_cycle_edges(graph, cycle, cycle_edges)):
            target[Edge.h(len(cycle), i)] = eid
    for e in chords1:
        a, b = graph.edges[e]
        edge1[Edge.chord(pos1[a], pos1[b])] = e
    for e in chords2:
        a, b = graph.edges[e]
        edge2[Edge.chord(pos2[a], pos2[b])] = e
    for eid in cross:
        u, w = ends(eid)
        edge1[Edge.spoke(pos1[u])] = eid
        edge2[Edge.spoke(pos2[w])] = eid

    return TwoFactorSplit(c1, c2, pole1, pole2, edge1, edge2, tuple(cross))


def _order_cycle(component: set, factor_adj: Dict[int, List[int]]) -> Tuple[int, ...]:
    start = min(component)
    order = [start, min(factor_adj[start])]
    while len(order) < len(component):
        a, b = factor_adj[order[-1]]
        order.append(b if a == order[-2] else a)
    return tuple(order)


def find_two_odd_circuit_factor(graph: CubicGraph, cap=CONFIGURED) -> Optional[TwoFactorSplit]:
    """First perfect matching (lexicographic) whose complement is two odd circuits joined by three edges"""
    for matching in enumerate_perfect_matchings(graph, cap):
        factor = [eid for eid in range(len(graph.edges)) if eid not in matching]
        two_factor = nx.MultiGraph()
        two_factor.add_nodes_from(range(graph.n))
        two_factor.add_edges_from(graph.edges[eid] for eid in factor)
        components = sorted((set(c) for c in nx.connected_components(two_factor)), key=min)
        if len(components) != 2 or any(len(c) % 2 == 0 for c in components):
            continue
        comp_of = {v: i for i, c in enumerate(components) for v in c}
        crossing = sum(1 for eid in matching if comp_of[graph.edges[eid][0]] != comp_of[graph.edges[eid][1]])
        if crossing != 3:
            continue
        adj: Dict[int, List[int]] = {v: [] for v in range(graph.n)}
        for eid in factor:
            a, b = graph.edges[eid]
            adj[a].append(b)
            adj[b].append(a)
        c1, c2 = (_order_cycle(c, adj) for c in components)
        logger.debug(f"Two-factor with circuits of lengths {len(c1)}, {len(c2)}")
        return split_from_circuits(graph, c1, c2, set(factor))
    return None


def compose_two_circuit_graph(pole1: ThreePole, pole2: ThreePole, pairing: Sequence[int] = (0, 1, 2)) -> Tuple[CubicGraph, TwoFactorSplit]:
    """Join spoke k of pole1 to spoke pairing[k] of pole2; pole2 vertices are offset by pole1.n"""
    pairing = tuple(pairing)
    if sorted(pairing) != [0, 1, 2]:
        raise GraphError(f"spoke pairing {pairing} is not a permutation of the three spokes")
    n1 = pole1.n
    edges: List[Tuple[int, int]] = []
    edge1: Dict[Edge, int] = {}
    edge2: Dict[Edge, int] = {}
    for pole, offset, target in ((pole1, 0, edge1), (pole2, n1, edge2)):
        for e in pole.h_edges() + pole.chord_edges():
            target[e] = len(edges)
            edges.append(tuple(sorted((e.ends[0] + offset, e.ends[1] + offset))))
    spokes = []
    for k in range(3):
        u, w = pole1.spokes[k], n1 + pole2.spokes[pairing[k]]
        edge1[Edge.spoke(u)] = len(edges)
        edge2[Edge.spoke(w - n1)] = len(edges)
        spokes.append(len(edges))
        edges.append((u, w))

    graph = CubicGraph(n1 + pole2.n, tuple(edges))
    split = TwoFactorSplit(
        c1=tuple(range(n1)),
        c2=tuple(range(n1, n1 + pole2.n)),
        pole1=pole1,
        pole2=pole2,
        edge1=edge1,
        edge2=edge2,
        spokes=tuple(spokes),
        pairing=pairing,
    )
    return graph, split


########################################
#          COMBINING COVERS
########################################


def combine_covers(split: TwoFactorSplit, cover1: Mapping[Edge, object], cover2: Mapping[Edge, object]) -> Tuple[GraphMatching, ...]:
    """M1..M4 of the whole graph as sets of edge ids"""
    for name, pole, cover in (("first", split.pole1, cover1), ("second", split.pole2, cover2)):
        report = verify_proper_cover(pole, cover)
        if not report.ok:
            raise ImproperInputError(f"{name} cover is not proper:\n{report}")
    cover1, cover2 = ProperCover(cover1), ProperCover(cover2)

    s1 = cover1.spoke_colours(split.pole1)
    s2 = cover2.spoke_colours(split.pole2)
    perm = {s2[split.pairing[k]]: s1[k] for k in range(3)}
    cover2 = cover2.permuted(perm)

    matchings: List[set] = [set() for _ in range(CHORD_LABEL)]
    for cover, edge_map in ((cover1, split.edge1), (cover2, split.edge2)):
        for edge, labels in cover.items():
            for label in labels:
                matchings[label - 1].add(edge_map[edge])
    return tuple(frozenset(m) for m in matchings)


def verify_matching_cover(graph: CubicGraph, matchings: Sequence[Sequence[int]]) -> Report:
    """Each set is a perfect matching of the graph and together they cover every edge"""
    report = Report()
    m = len(graph.edges)
    covered = set()
    for i, matching in enumerate(matchings, start=1):
        ids = set(matching)
        stray = sorted(eid for eid in ids if not 0 <= eid < m)
        if stray:
            report.add("edge-set", f"M{i}", f"edge ids {stray} are not edges of the graph")
            ids -= set(stray)
        hits = [0] * graph.n
        for eid in ids:
            a, b = graph.edges[eid]
            hits[a] += 1
            hits[b] += 1
        for v, h in enumerate(hits):
            if h != 1:
                report.add("perfect-matching", f"M{i} vertex {v}", f"covered {h} times")
        covered |= ids
    missing = sorted(set(range(m)) - covered)
    if missing:
        report.add("coverage", "graph", f"edges {missing} lie in no matching")
    return report


@dataclass
class GraphCoverResult:
    graph: CubicGraph
    split: TwoFactorSplit
    matchings: Tuple[GraphMatching, ...]
    cover1: ProperCover
    cover2: ProperCover
    trace1: List[TraceStep]
    trace2: List[TraceStep]
    report: Report


def cover_two_circuit_graph(
    graph: CubicGraph, split: Optional[TwoFactorSplit] = None, config: Optional[EngineConfig] = None, cap=CONFIGURED
) -> GraphCoverResult:
    """Split, cover both poles, combine; the result carries both traces and the matching-cover report"""
    if split is None:
        split = find_two_odd_circuit_factor(graph, cap)
        if split is None:
            raise NoQualifyingTwoFactorError("no 2-factor of two odd circuits joined by exactly three edges")
    cover1, trace1 = compute_proper_cover(split.pole1, config)
    cover2, trace2 = compute_proper_cover(split.pole2, config)
    matchings = combine_covers(split, cover1, cover2)
    report = verify_matching_cover(graph, [sorted(m) for m in matchings])
    if report.ok:
        logger.info(f"Covered a graph on {graph.n} vertices by four perfect matchings")
    return GraphCoverResult(graph, split, matchings, cover1, cover2, trace1, trace2, report)
