# SPDX-FileCopyrightText: © 2026 The pm4cover Authors
# SPDX-License-Identifier: Apache-2.0

"""
graph6 input and output for closed cubic graphs, via networkx.
"""

import logging
from typing import List, Union

import importlib_resources
import networkx as nx

from .errors import DocumentReferenceError, DocumentSyntaxError, DocumentValidationError
from .graphs import CubicGraph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = b">>graph6<<"
BUNDLED_SUFFIX = ".g6"


def parse_graph6(data: Union[bytes, str]) -> CubicGraph:
    """Decode one graph6 record; non-cubic graphs raise DegreeError"""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise DocumentSyntaxError("empty graph6 record")
    if data.startswith(b":"):
        raise DocumentSyntaxError("sparse6 records are not supported; convert to graph6 first")
    if data.startswith(b"&"):
        raise DocumentSyntaxError("digraph6 records are not supported")
    try:
        graph = nx.from_graph6_bytes(data)
    except (nx.NetworkXError, ValueError, IndexError) as e:
        raise DocumentSyntaxError(f"invalid graph6 record {data[:20]!r}: {e}") from e
    return CubicGraph.from_networkx(graph)


def parse_graph6_lines(text: Union[bytes, str]) -> List[CubicGraph]:
    if isinstance(text, str):
        text = text.encode("ascii")
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def serialize_graph6(graph: CubicGraph) -> bytes:
    """graph6 record without header or trailing newline"""
    if not graph.is_simple():
        raise DocumentValidationError("graph6 cannot encode parallel edges")
    simple = nx.Graph()
    simple.add_nodes_from(range(graph.n))
    simple.add_edges_from(graph.edges)
    return nx.to_graph6_bytes(simple, header=False).rstrip(b"\n")


def bundled_graphs() -> List[str]:
    folder = importlib_resources.files("pm4cover") / "data" / "graphs"
    return sorted(p.name[: -len(BUNDLED_SUFFIX)] for p in folder.iterdir() if p.name.endswith(BUNDLED_SUFFIX))


def load_bundled_graph(name: str) -> CubicGraph:
    resource = importlib_resources.files("pm4cover") / "data" / "graphs" / f"{name}{BUNDLED_SUFFIX}"
    if not resource.is_file():
        raise DocumentReferenceError(f"no bundled graph named {name!r}; available: {bundled_graphs()}")
    logger.debug(f"Loading bundled graph {name}")
    return parse_graph6(resource.read_bytes())
