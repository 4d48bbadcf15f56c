# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
JSON documents read and written by pm4cover.

Pole documents are one compact JSON object per line. Cover documents and
graph certificates are indented with one edge or trace record per line, so
that equal inputs always give byte-identical output.
"""

import json
from typing import Any, List, NamedTuple, Optional, Sequence, Tuple

try:
    # Try the newer v2 pydantic and use that first
    from pydantic.v1 import BaseModel, StrictBool, StrictInt, ValidationError, validator
except ImportError:
    # Assume we are on v1 and give that a go
    from pydantic import BaseModel, StrictBool, StrictInt, ValidationError, validator

from .constants import ALL_LABELS, EDGE_KINDS, H_EDGE, SPOKE
from .engine import TraceStep
from .errors import DocumentReferenceError, DocumentSyntaxError, DocumentValidationError, PoleError
from .graph_io import serialize_graph6
from .graphs import GraphCoverResult
from .pole import Edge, ProperCover, ThreePole, validate_pole

COMPACT = (",", ":")


class DocumentModel(BaseModel):
    class Config:
        extra = "forbid"


class PoleDocument(DocumentModel):
    n: StrictInt
    spokes: List[StrictInt]
    chords: List[List[StrictInt]]

    @classmethod
    def from_pole(cls, pole: ThreePole) -> "PoleDocument":
        return cls(n=pole.n, spokes=list(pole.spokes), chords=[list(c) for c in pole.chords])


class EdgeRecord(DocumentModel):
    kind: str
    ends: List[StrictInt]
    matchings: List[StrictInt]

    @validator("kind")
    def known_kind(cls, v):
        if v not in EDGE_KINDS:
            raise ValueError(f"edge kind must be one of {EDGE_KINDS}")
        return v

    @validator("matchings", each_item=True)
    def known_label(cls, v):
        if v not in ALL_LABELS:
            raise ValueError(f"matching labels are {sorted(ALL_LABELS)}")
        return v


class TraceRecord(DocumentModel):
    rule: str
    size_before: StrictInt
    size_after: StrictInt
    detail: str = ""


class CoverDocument(DocumentModel):
    pole: PoleDocument
    proper: StrictBool
    edges: List[EdgeRecord]
    trace: List[TraceRecord] = []


class TwoFactorDocument(DocumentModel):
    c1: List[StrictInt]
    c2: List[StrictInt]


class ParsedCover(NamedTuple):
    pole: ThreePole
    cover: ProperCover
    trace: List[TraceStep]
    proper: bool


########################################
#          HELPERS
########################################


def _load_json(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentSyntaxError(f"{what} is not valid JSON: {e}") from e


def _parse_model(model, raw: Any, what: str):
    try:
        return model.parse_obj(raw)
    except ValidationError as e:
        raise DocumentValidationError(f"invalid {what}: {e}") from e


def _pole_from_document(doc: PoleDocument) -> ThreePole:
    try:
        return validate_pole(doc.n, doc.spokes, doc.chords)
    except PoleError as e:
        raise DocumentValidationError(f"invalid pole: {e}") from e


def _render(fields: Sequence[Tuple[str, Any, bool]]) -> str:
    """Indented object; fields flagged True are lists written one item per line"""
    lines = ["{"]
    for i, (key, value, per_line) in enumerate(fields):
        comma = "," if i < len(fields) - 1 else ""
        if per_line and value:
            lines.append(f'  "{key}": [')
            for j, item in enumerate(value):
                lines.append(f"    {json.dumps(item)}" + ("," if j < len(value) - 1 else ""))
            lines.append(f"  ]{comma}")
        else:
            lines.append(f'  "{key}": {json.dumps(value)}{comma}')
    lines.append("}")
    return "\n".join(lines) + "\n"


########################################
#          POLES
########################################


def parse_pole(text: str) -> ThreePole:
    doc = _parse_model(PoleDocument, _load_json(text, "pole document"), "pole document")
    return _pole_from_document(doc)


def parse_pole_stream(text: str) -> List[ThreePole]:
    """One pole document per non-blank line"""
    return [parse_pole(line) for line in text.splitlines() if line.strip()]


def serialize_pole(pole: ThreePole) -> str:
    return PoleDocument.from_pole(pole).json(separators=COMPACT) + "\n"


########################################
#          TRACES
########################################


def trace_records(trace: Sequence[TraceStep]) -> List[dict]:
    return [TraceRecord(rule=s.rule, size_before=s.size_before, size_after=s.size_after, detail=s.detail).dict() for s in trace]


def serialize_trace(trace: Sequence[TraceStep]) -> str:
    return "".join(json.dumps(record) + "\n" for record in trace_records(trace))


def parse_trace(text: str) -> List[TraceStep]:
    steps = []
    for line in text.splitlines():
        if not line.strip():
            continue
        record = _parse_model(TraceRecord, _load_json(line, "trace record"), "trace record")
        steps.append(TraceStep(record.rule, record.size_before, record.size_after, record.detail))
    return steps


########################################
#          COVERS
########################################


def serialize_cover(pole: ThreePole, cover: ProperCover, trace: Sequence[TraceStep] = (), proper: bool = True) -> str:
    edges = [
        EdgeRecord(kind=e.kind, ends=list(e.ends), matchings=sorted(cover.get(e, ()))).dict()
        for e in sorted(cover, key=Edge.sort_key)
    ]
    return _render(
        [
            ("pole", PoleDocument.from_pole(pole).dict(), False),
            ("proper", proper, False),
            ("edges", edges, True),
            ("trace", trace_records(trace), True),
        ]
    )


def _edge_from_record(pole: ThreePole, record: EdgeRecord) -> Edge:
    ends = tuple(record.ends)
    if record.kind == SPOKE:
        if len(ends) != 1 or ends[0] not in pole.spokes:
            raise DocumentReferenceError(f"no spoke at {list(ends)}")
        return Edge.spoke(ends[0])
    if len(ends) != 2:
        raise DocumentValidationError(f"{record.kind} record needs two ends, got {list(ends)}")
    if record.kind == H_EDGE:
        a, b = ends
        if not (0 <= a < pole.n and b == (a + 1) % pole.n):
            raise DocumentReferenceError(f"no H-edge {list(ends)} on a pole with n={pole.n}")
        return Edge.h(pole.n, a)
    edge = Edge.chord(*ends)
    if not pole.has_edge(edge):
        raise DocumentReferenceError(f"no chord {list(ends)} in the pole")
    return edge


def parse_cover(text: str, pole: Optional[ThreePole] = None) -> ParsedCover:
    """Read a cover document; when `pole` is given the embedded pole must equal it"""
    doc = _parse_model(CoverDocument, _load_json(text, "cover document"), "cover document")
    embedded = _pole_from_document(doc.pole)
    if pole is not None and embedded != pole:
        raise DocumentReferenceError("cover document describes a different pole")

    labels = {}
    for record in doc.edges:
        edge = _edge_from_record(embedded, record)
        if edge in labels:
            raise DocumentValidationError(f"edge {edge} listed twice")
        labels[edge] = record.matchings
    trace = [TraceStep(r.rule, r.size_before, r.size_after, r.detail) for r in doc.trace]
    return ParsedCover(embedded, ProperCover(labels), trace, doc.proper)


########################################
#          TWO-FACTORS AND CERTIFICATES
########################################


def parse_two_factor(text: str) -> Tuple[List[int], List[int]]:
    doc = _parse_model(TwoFactorDocument, _load_json(text, "two-factor document"), "two-factor document")
    return list(doc.c1), list(doc.c2)


def serialize_two_factor(c1: Sequence[int], c2: Sequence[int]) -> str:
    return TwoFactorDocument(c1=list(c1), c2=list(c2)).json(separators=COMPACT) + "\n"


def serialize_certificate(result: GraphCoverResult) -> str:
    """Graph, split, the four matchings as sorted edge lists and both traces"""
    graph = result.graph
    graph6 = serialize_graph6(graph).decode("ascii") if graph.is_simple() else None
    matchings = [sorted(sorted(graph.edges[eid]) for eid in m) for m in result.matchings]
    return _render(
        [
            ("graph6", graph6, False),
            ("n", graph.n, False),
            ("edges", [list(e) for e in graph.edges], False),
            ("two_factor", {"c1": list(result.split.c1), "c2": list(result.split.c2)}, False),
            ("verified", result.report.ok, False),
            ("matchings", matchings, True),
            ("trace1", trace_records(result.trace1), True),
            ("trace2", trace_records(result.trace2), True),
        ]
    )


def serialize_partial_certificate(graph, split, trace: Sequence[TraceStep], error: str) -> str:
    """Certificate written when covering stops part way; carries the trace up to the failure"""
    graph6 = serialize_graph6(graph).decode("ascii") if graph.is_simple() else None
    two_factor = None if split is None else {"c1": list(split.c1), "c2": list(split.c2)}
    return _render(
        [
            ("graph6", graph6, False),
            ("n", graph.n, False),
            ("edges", [list(e) for e in graph.edges], False),
            ("two_factor", two_factor, False),
            ("verified", False, False),
            ("error", error, False),
            ("trace", trace_records(trace), True),
        ]
    )
