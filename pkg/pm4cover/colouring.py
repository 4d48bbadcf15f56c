# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
3-edge-colourings for poles with a segment of length 2.

Closing the three spokes at a new vertex x gives the cubic graph G*. Its
colourings with the spokes in classes 1, 2, 3 become proper 4-covers of the
pole. Two routes are implemented: a fast one through the Hamiltonian graph B
obtained by cutting out the 4-cycle v1-y-v3-x (Hamiltonian colouring, Kempe
swaps until the two reconnection edges agree, lift back), and an exact
backtracking search on G* that is always run when the fast route fails.

Both routes restart. The Kempe walk is repeated with random swaps mixed in,
and the search is cut off and retried in a shuffled edge order a few times
before the final uncapped attempt.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Set, Tuple, Union

from .config import EngineConfig, get_engine_config
from .constants import (
    CHORD_LABEL,
    COLOURS,
    H_EDGE,
    ROUTE_B,
    ROUTE_BACKTRACK,
    SEARCH_BASE_NODES,
    SEARCH_NODES_PER_EDGE,
)
from .errors import (
    ColouringUnavailableError,
    DegenerateReductionError,
    OddCircuitError,
    UnequalBoundaryError,
    WrongProfileError,
)
from .generators import XorShiftStar
from .pole import Edge, ProperCover, Report, ThreePole, h_between, segment_profile

logger = logging.getLogger(__name__)

EdgeColouring = Dict[int, int]
Constraints = Union[Mapping[int, Iterable[int]], Sequence[Tuple[int, Iterable[int]]]]


@dataclass(frozen=True)
class SmallMultiGraph:
    """Multigraph with integer vertices and edge ids = positions in `edges`"""

    vertices: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]
    circuit: Optional[Tuple[int, ...]] = None
    # circuit_edges[i] joins circuit[i] and circuit[i+1]
    circuit_edges: Optional[Tuple[int, ...]] = None
    _incidence: Dict[int, Tuple[int, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        incidence: Dict[int, List[int]] = {v: [] for v in self.vertices}
        for eid, (a, b) in enumerate(self.edges):
            incidence[a].append(eid)
            incidence[b].append(eid)
        object.__setattr__(self, "_incidence", {v: tuple(es) for v, es in incidence.items()})

    def incident(self, v: int) -> Tuple[int, ...]:
        return self._incidence[v]

    def other(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        return b if a == v else a

    def degrees(self) -> Dict[int, int]:
        return {v: len(es) for v, es in self._incidence.items()}


@dataclass(frozen=True)
class LandmarkMap:
    """Named vertices and edges of G* (edge ids refer to G*; f1, f2 and b_origin to B)"""

    n: int
    v1: int
    y: int
    v3: int
    x: int
    v1p: int
    v3p: int
    yp: int
    v2: int
    cycle: Tuple[int, int, int, int]  # v1y, yv3, v3x, xv1
    pendants: Tuple[int, int, int, int]  # v1v1', v3v3', yy', xv2
    spoke_edges: Tuple[int, int, int]
    f1: Optional[int] = None
    f2: Optional[int] = None
    b_origin: Tuple[Optional[int], ...] = ()


def _bit(c: int) -> int:
    return 1 << (c - 1)


def _mask(colours: Iterable[int]) -> int:
    m = 0
    for c in colours:
        m |= _bit(c)
    return m


class _SearchLimit(Exception):
    pass


def _search(
    edges: Sequence[Tuple[int, int]], vertices: Iterable[int], allowed: Sequence[int], node_limit: Optional[int] = None
) -> Iterator[List[int]]:
    """Colour lists over edge ids 0..m-1; the next edge is the lowest id among those with fewest options"""
    m = len(edges)
    incident: Dict[int, List[int]] = {v: [] for v in vertices}
    for eid, (a, b) in enumerate(edges):
        incident[a].append(eid)
        incident[b].append(eid)
    neighbours = [tuple({f for v in edges[eid] for f in incident[v] if f != eid}) for eid in range(m)]

    used = dict.fromkeys(incident, 0)
    colour = [0] * m
    opts = list(allowed)
    size = [o.bit_count() for o in opts]
    # uncoloured edges by number of remaining options
    buckets: List[Set[int]] = [set(), set(), set(), set()]
    for eid in range(m):
        buckets[size[eid]].add(eid)
    nodes = 0

    def refresh(eid: int) -> None:
        a, b = edges[eid]
        new = allowed[eid] & ~(used[a] | used[b]) & 0b111
        if new != opts[eid]:
            buckets[size[eid]].discard(eid)
            opts[eid] = new
            size[eid] = new.bit_count()
            buckets[size[eid]].add(eid)

    def search(remaining: int) -> Iterator[List[int]]:
        nonlocal nodes
        if remaining == 0:
            yield list(colour)
            return
        if buckets[0]:
            return
        best = min(next(b for b in buckets[1:] if b))
        best_opts = opts[best]
        buckets[size[best]].discard(best)
        a, b = edges[best]
        for c in COLOURS:
            bit = _bit(c)
            if not best_opts & bit:
                continue
            nodes += 1
            if node_limit is not None and nodes > node_limit:
                raise _SearchLimit(nodes)
            colour[best] = c
            used[a] |= bit
            used[b] |= bit
            for f in neighbours[best]:
                if not colour[f]:
                    refresh(f)
            yield from search(remaining - 1)
            used[a] &= ~bit
            used[b] &= ~bit
            colour[best] = 0
            for f in neighbours[best]:
                if not colour[f]:
                    refresh(f)
        buckets[size[best]].add(best)

    yield from search(m)


def _allowed(graph: SmallMultiGraph, constraints: Optional[Constraints]) -> List[int]:
    allowed = [_mask(COLOURS)] * len(graph.edges)
    for eid, colours in dict(constraints or {}).items():
        allowed[eid] &= _mask(colours)
    return allowed


def iter_colourings(graph: SmallMultiGraph, constraints: Optional[Constraints] = None) -> Iterator[EdgeColouring]:
    """All proper 3-edge-colourings, most-constrained edge first; constraints give allowed colours per edge"""
    if any(a == b for a, b in graph.edges):
        return
    for colour in _search(graph.edges, graph.vertices, _allowed(graph, constraints)):
        yield dict(enumerate(colour))


def backtrack_colouring(
    graph: SmallMultiGraph, constraints: Optional[Constraints] = None, restarts: int = 0, seed: int = 0
) -> Optional[EdgeColouring]:
    """First colouring found, or None if there is none.

    With restarts > 0 the first attempts are cut off after a node budget that
    doubles each time, and every retry visits the edges in a shuffled order.
    The last attempt is never cut off, so None still means no colouring exists.
    """
    if any(a == b for a, b in graph.edges):
        return None
    m = len(graph.edges)
    allowed = _allowed(graph, constraints)
    rng = XorShiftStar(seed)
    order = list(range(m))
    limit = SEARCH_BASE_NODES + SEARCH_NODES_PER_EDGE * m
    for attempt in range(restarts + 1):
        edges = [graph.edges[eid] for eid in order]
        try:
            found = next(
                _search(edges, graph.vertices, [allowed[eid] for eid in order], limit if attempt < restarts else None),
                None,
            )
        except _SearchLimit:
            logger.debug(f"Search attempt {attempt} on {m} edges stopped after {limit} nodes")
            order = list(range(m))
            rng.shuffle(order)
            limit *= 2
            continue
        if found is None:
            return None
        return {order[i]: c for i, c in enumerate(found)}
    return None


def is_proper_colouring(graph: SmallMultiGraph, colouring: Mapping[int, int]) -> Report:
    report = Report()
    for eid in range(len(graph.edges)):
        if colouring.get(eid) not in COLOURS:
            report.add("colour", f"edge {eid}", f"colour {colouring.get(eid)!r} outside 1..3")
    for v in graph.vertices:
        seen = [colouring.get(eid) for eid in graph.incident(v)]
        if len(seen) != len(set(seen)):
            report.add("properness", f"vertex {v}", f"incident colours {seen}")
    return report


########################################
#          G* AND B
########################################


def build_gstar(pole: ThreePole) -> Tuple[SmallMultiGraph, LandmarkMap]:
    """Pole plus a vertex x joined to the three spoke ends; edge ids follow pole.edges()"""
    profile = segment_profile(pole)
    if profile.e1 is None or profile.e1.length != 2:
        raise WrongProfileError("G* is built for poles whose E1 segment has length 2")
    n = pole.n
    v1, v2, v3 = (pole.spokes[k] for k in profile.roles)
    y = profile.e1.inner[0]
    v1p = (v1 - 1) % n if (v1 + 1) % n == y else (v1 + 1) % n
    v3p = (v3 - 1) % n if (v3 + 1) % n == y else (v3 + 1) % n
    yp = pole.mate(y)
    x = n

    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += list(pole.chords)
    spoke_base = len(edges)
    edges += [(x, v) for v in pole.spokes]
    spoke_edges = tuple(spoke_base + k for k in range(3))

    def hid(a: int, b: int) -> int:
        return h_between(n, a, b).ends[0]

    chord_id = n + pole.chords.index((min(y, yp), max(y, yp)))
    landmarks = LandmarkMap(
        n=n, v1=v1, y=y, v3=v3, x=x, v1p=v1p, v3p=v3p, yp=yp, v2=v2,
        cycle=(hid(v1, y), hid(y, v3), spoke_edges[profile.roles[2]], spoke_edges[profile.roles[0]]),
        pendants=(hid(v1, v1p), hid(v3, v3p), chord_id, spoke_edges[profile.roles[1]]),
        spoke_edges=spoke_edges,
    )
    return SmallMultiGraph(tuple(range(n + 1)), tuple(edges)), landmarks


def build_b_reduction(gstar: SmallMultiGraph, landmarks: LandmarkMap) -> Tuple[SmallMultiGraph, LandmarkMap]:
    """Cut out v1, y, v3, x and reconnect by f1 = v1'v3', f2 = y'v2"""
    lm = landmarks
    removed = {lm.v1, lm.y, lm.v3, lm.x}
    kept = tuple(v for v in gstar.vertices if v not in removed)
    if len(kept) < 2:
        raise DegenerateReductionError(f"B would have {len(kept)} vertices")

    edges: List[Tuple[int, int]] = []
    origin: List[Optional[int]] = []
    to_b: Dict[int, int] = {}
    for eid, (a, b) in enumerate(gstar.edges):
        if a not in removed and b not in removed:
            to_b[eid] = len(edges)
            edges.append((a, b))
            origin.append(eid)
    f1 = len(edges)
    edges.append((lm.v1p, lm.v3p))
    f2 = len(edges)
    edges.append((lm.yp, lm.v2))
    origin += [None, None]

    n = lm.n
    step = 1 if (lm.v3 + 1) % n == lm.v3p else -1
    circuit = [lm.v3p]
    while circuit[-1] != lm.v1p:
        circuit.append((circuit[-1] + step) % n)
    circuit_edges = [to_b[h_between(n, a, b).ends[0]] for a, b in zip(circuit, circuit[1:])] + [f1]
    assert len(circuit) == len(kept), "H minus v1, y, v3 spans B"

    b = SmallMultiGraph(kept, tuple(edges), tuple(circuit), tuple(circuit_edges))
    return b, replace(lm, f1=f1, f2=f2, b_origin=tuple(origin))


def hamiltonian_colouring(graph: SmallMultiGraph) -> EdgeColouring:
    """Alternate 1, 2 along the designated circuit from its lowest vertex; everything else 3"""
    if graph.circuit is None or graph.circuit_edges is None:
        raise ValueError("graph has no designated circuit")
    k = len(graph.circuit)
    if k % 2:
        raise OddCircuitError(f"designated circuit has odd length {k}")
    start = graph.circuit.index(min(graph.circuit))
    colouring = {eid: 3 for eid in range(len(graph.edges))}
    for i in range(k):
        colouring[graph.circuit_edges[(start + i) % k]] = 1 if i % 2 == 0 else 2
    return colouring


def kempe_chain(graph: SmallMultiGraph, colouring: Mapping[int, int], eid: int, a: int, b: int) -> Set[int]:
    """Edge ids of the {a,b}-coloured component containing edge eid"""
    chain = {eid}
    stack = list(graph.edges[eid])
    seen = set(stack)
    while stack:
        v = stack.pop()
        for other in graph.incident(v):
            if colouring[other] in (a, b) and other not in chain:
                chain.add(other)
                for w in graph.edges[other]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
    return chain


def _swap(colouring: EdgeColouring, chain: Iterable[int], a: int, b: int) -> None:
    for eid in chain:
        colouring[eid] = b if colouring[eid] == a else a


def kempe_equalize(
    graph: SmallMultiGraph,
    colouring: Mapping[int, int],
    f1: int,
    f2: int,
    budget: int,
    rng: Optional[XorShiftStar] = None,
) -> Optional[EdgeColouring]:
    """Swap Kempe chains until f1 and f2 share a colour; None once the budget is spent.

    Without rng the swaps alternate between chains through f1 and f2. With rng
    about half of the swaps recolour the chain of a random edge instead.
    """
    col = dict(colouring)
    m = len(graph.edges)
    for swaps in range(budget + 1):
        a, c = col[f1], col[f2]
        if a == c:
            return col
        if swaps == budget:
            break
        chain = kempe_chain(graph, col, f2, c, a)
        if f1 not in chain:
            _swap(col, chain, c, a)
            return col
        if rng is not None and rng.below(2):
            eid = rng.below(m)
            here = col[eid]
            there = [k for k in COLOURS if k != here][rng.below(2)]
            _swap(col, kempe_chain(graph, col, eid, here, there), here, there)
            continue
        b = 6 - a - c
        if swaps % 2 == 0:
            _swap(col, kempe_chain(graph, col, f1, a, b), a, b)
        else:
            _swap(col, kempe_chain(graph, col, f2, c, b), c, b)
    return None


def lift_through_4cycle(
    b_graph: SmallMultiGraph, b_colouring: Mapping[int, int], gstar: SmallMultiGraph, landmarks: LandmarkMap
) -> EdgeColouring:
    lm = landmarks
    alpha = b_colouring[lm.f1]
    if b_colouring[lm.f2] != alpha:
        raise UnequalBoundaryError(f"f1 has colour {alpha}, f2 has colour {b_colouring[lm.f2]}")
    beta, gamma = sorted(set(COLOURS) - {alpha})

    colouring: EdgeColouring = {}
    for bid, origin in enumerate(lm.b_origin):
        if origin is not None:
            colouring[origin] = b_colouring[bid]
    for eid in lm.pendants:
        colouring[eid] = alpha
    for eid, c in zip(lm.cycle, (beta, gamma, beta, gamma)):
        colouring[eid] = c
    assert len(colouring) == len(gstar.edges), "lift colours every edge of G*"
    return colouring


def canonical_colouring(colouring: Mapping[int, int], spoke_edges: Sequence[int]) -> EdgeColouring:
    """Permute colours so spoke k gets colour k+1"""
    perm = {colouring[eid]: k + 1 for k, eid in enumerate(spoke_edges)}
    return {eid: perm[c] for eid, c in colouring.items()}


def _b_route(pole: ThreePole, gstar: SmallMultiGraph, lm: LandmarkMap, config: EngineConfig) -> Optional[EdgeColouring]:
    """Colouring of G* through B, or None when no Kempe walk equalises f1 and f2"""
    try:
        b_graph, b_lm = build_b_reduction(gstar, lm)
        start = hamiltonian_colouring(b_graph)
    except (DegenerateReductionError, OddCircuitError) as e:
        logger.debug(f"B-route unavailable: {e}")
        return None
    budget = config.kempe_budget_factor * len(b_graph.edges)
    rng = XorShiftStar(pole.n)
    for walk in range(config.kempe_restarts + 1):
        equal = kempe_equalize(b_graph, start, b_lm.f1, b_lm.f2, budget, rng if walk else None)
        if equal is None:
            continue
        lifted = canonical_colouring(lift_through_4cycle(b_graph, equal, gstar, b_lm), lm.spoke_edges)
        if is_proper_colouring(gstar, lifted).ok:
            return lifted
        logger.warning(f"B-route produced an improper colouring of G* for n={pole.n}")
        return None
    logger.debug(f"Kempe equalisation failed in {config.kempe_restarts + 1} walks of {budget} swaps for n={pole.n}")
    return None


def _spoke_constraints(lm: LandmarkMap) -> Dict[int, Tuple[int]]:
    return {eid: (k + 1,) for k, eid in enumerate(lm.spoke_edges)}


def colour_gstar(pole: ThreePole, config: Optional[EngineConfig] = None) -> Tuple[EdgeColouring, str]:
    """Canonical colouring of G* and the route that produced it"""
    config = config or get_engine_config()
    gstar, lm = build_gstar(pole)

    if config.use_b_route:
        lifted = _b_route(pole, gstar, lm, config)
        if lifted is not None:
            return lifted, ROUTE_B

    colouring = backtrack_colouring(gstar, _spoke_constraints(lm), config.search_restarts, seed=pole.n)
    if colouring is None:
        raise ColouringUnavailableError(f"G* of a pole with n={pole.n} has no colouring with distinct spoke colours")
    return colouring, ROUTE_BACKTRACK


def colouring_to_cover(pole: ThreePole, colouring: Mapping[int, int]) -> ProperCover:
    """Colour classes become M1..M3, chords and spokes form M4"""
    edges = pole.edges()
    spoke_ids = range(len(edges) - 3, len(edges))
    perm = {colouring[eid]: k + 1 for k, eid in enumerate(spoke_ids)}
    labels = {}
    for eid, edge in enumerate(edges):
        c = perm[colouring[eid]]
        labels[edge] = {c} if edge.kind == H_EDGE else {c, CHORD_LABEL}
    return ProperCover(labels)


def colour_len2_pole(pole: ThreePole, config: Optional[EngineConfig] = None) -> Dict[Edge, int]:
    """3-edge-colouring of the pole itself with spoke e_k in class k"""
    colouring, _ = colour_gstar(pole, config)
    return {edge: colouring[eid] for eid, edge in enumerate(pole.edges())}


def len2_route_statistics(poles: Iterable[ThreePole], config: Optional[EngineConfig] = None) -> List[Dict[str, object]]:
    """Per pole: whether the B-route and the direct search each colour G*"""
    config = config or get_engine_config()
    rows = []
    for pole in poles:
        gstar, lm = build_gstar(pole)
        b_route = _b_route(pole, gstar, lm, config) is not None
        direct = backtrack_colouring(gstar, _spoke_constraints(lm), config.search_restarts, seed=pole.n) is not None
        rows.append({"pole": pole, "b_route": b_route, "backtrack": direct})
    return rows
