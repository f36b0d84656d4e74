"""
Edge-list text format::

    n m
    i j
    ...

with 1-based ``i < j`` and lines sorted by (i, j).
"""
from pathlib import Path
from typing import Union

import numpy as np

from gaplab.exceptions import EdgeListFormatError
from gaplab.graph_core.graph import Graph


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    if g.edge_count:
        order = np.lexsort((g.edges[:, 1], g.edges[:, 0]))
        lines.extend(f"{i + 1} {j + 1}" for i, j in g.edges[order])
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise EdgeListFormatError("Missing 'n m' header")
    try:
        n, m = (int(x) for x in rows[0])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise EdgeListFormatError(f"Malformed edge list: {exc}") from exc
    if len(pairs) != m:
        raise EdgeListFormatError(f"Header announces {m} edges, found {len(pairs)}")
    if any(not i < j for i, j in pairs):
        raise EdgeListFormatError("Edge lines must have i < j")
    g = Graph.from_edges(n, pairs)
    if g.edge_count != m:
        raise EdgeListFormatError("Duplicate edges in edge list")
    return g


def write_edge_list(g: Graph, path: Union[str, Path]):
    with open(path, "w") as fd:
        fd.write(format_edge_list(g))


def read_edge_list(path: Union[str, Path]) -> Graph:
    with open(path, "r") as fd:
        return parse_edge_list(fd.read())
