"""
Simple undirected graphs on a fixed vertex set.

Vertices are 1-based in every public method (``has_edge``, ``neighbors``,
``edge_pairs``, constructors taking pairs).  The array attributes
(``edges``, ``indptr``, ``indices``, ``bits``) are 0-based and read-only.

Unordered pairs are numbered in colexicographic order: 0-based ``i < j``
carries label ``j (j - 1) / 2 + i``, so all pairs inside the first ``k``
vertices precede every pair touching vertex ``k + 1``.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Tuple

import numpy as np

from gaplab.exceptions import PreconditionError, SizeMismatchError

# number of set bits in each byte value
POPCOUNT = np.array([bin(value).count("1") for value in range(256)], dtype=np.uint8)


def pair_count(n: int) -> int:
    """C(n, 2), the number of unordered pairs on n vertices."""
    return n * (n - 1) // 2


def labels_to_pairs(labels: np.ndarray) -> np.ndarray:
    """Decode 0-based colex labels into an (m, 2) array of 0-based (i, j), i < j."""
    labels = np.asarray(labels, dtype=np.int64)
    j = ((1 + np.sqrt(1 + 8 * labels.astype(np.float64))) // 2).astype(np.int64)
    # float rounding can be off by one near perfect squares
    j -= (j * (j - 1) // 2 > labels)
    j += ((j + 1) * j // 2 <= labels)
    i = labels - j * (j - 1) // 2
    return np.stack([i, j], axis=1) if labels.size else np.zeros((0, 2), dtype=np.int64)


def pairs_to_labels(i: np.ndarray, j: np.ndarray) -> np.ndarray:
    """Encode 0-based pairs (any order) into colex labels."""
    i = np.asarray(i, dtype=np.int64)
    j = np.asarray(j, dtype=np.int64)
    lo = np.minimum(i, j)
    hi = np.maximum(i, j)
    return hi * (hi - 1) // 2 + lo


def _freeze(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


class Graph:
    """
    Immutable simple graph with a bit-packed adjacency matrix for O(1)
    membership and popcount intersections, plus CSR adjacency lists for
    sparse iteration.

    Build instances through `from_edges`, `from_labels`, `empty` or
    `complete`.
    """

    __slots__ = ("_n", "_labels", "_edges", "_indptr", "_indices", "_bits")

    def __init__(self, n: int, labels: np.ndarray):
        n = int(n)
        if n < 1:
            raise PreconditionError(f"Graph needs at least one vertex, got n={n}")
        labels = np.unique(np.asarray(labels, dtype=np.int64))
        if labels.size and (labels[0] < 0 or labels[-1] >= pair_count(n)):
            raise PreconditionError(f"Edge label out of range for n={n}")
        self._n = n
        self._labels = _freeze(labels)
        self._edges = _freeze(labels_to_pairs(labels))
        self._build_adjacency()

    def _build_adjacency(self):
        n = self._n
        src = np.concatenate([self._edges[:, 0], self._edges[:, 1]])
        dst = np.concatenate([self._edges[:, 1], self._edges[:, 0]])
        order = np.lexsort((dst, src))
        counts = np.bincount(src, minlength=n)
        self._indptr = _freeze(np.concatenate([[0], np.cumsum(counts)]).astype(np.int64))
        self._indices = _freeze(dst[order].astype(np.int64))

        bits = np.zeros((n, (n + 7) // 8), dtype=np.uint8)
        np.bitwise_or.at(bits, (src, dst >> 3), (128 >> (dst & 7)).astype(np.uint8))
        self._bits = _freeze(bits)

    @classmethod
    def from_labels(cls, n: int, labels: Iterable[int]) -> Graph:
        """Graph from 0-based colex pair labels."""
        return cls(n, np.fromiter(labels, dtype=np.int64)
                   if not isinstance(labels, np.ndarray) else labels)

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Tuple[int, int]]) -> Graph:
        """Graph from 1-based vertex pairs.  Order within a pair is irrelevant."""
        array = np.asarray(list(pairs), dtype=np.int64).reshape(-1, 2)
        if array.size:
            if array.min() < 1 or array.max() > n:
                raise PreconditionError(f"Vertex outside 1..{n} in edge list")
            if np.any(array[:, 0] == array[:, 1]):
                raise PreconditionError("Self-loops are not allowed")
        return cls(n, pairs_to_labels(array[:, 0] - 1, array[:, 1] - 1))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, np.zeros(0, dtype=np.int64))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, np.arange(pair_count(n), dtype=np.int64))

    @property
    def n(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return int(self._labels.size)

    @property
    def labels(self) -> np.ndarray:
        """Sorted 0-based colex labels of the edges."""
        return self._labels

    @property
    def edges(self) -> np.ndarray:
        """(m, 2) array of 0-based endpoints, i < j, in label order."""
        return self._edges

    @property
    def indptr(self) -> np.ndarray:
        return self._indptr

    @property
    def indices(self) -> np.ndarray:
        return self._indices

    @property
    def bits(self) -> np.ndarray:
        """Bit-packed adjacency rows, big-endian within each byte."""
        return self._bits

    def _check_vertex(self, v: int) -> int:
        if not 1 <= v <= self._n:
            raise PreconditionError(f"Vertex {v} outside 1..{self._n}")
        return v - 1

    def has_pairs(self, i: np.ndarray, j: np.ndarray) -> np.ndarray:
        """Vectorized membership for 0-based endpoint arrays."""
        i = np.asarray(i, dtype=np.int64)
        j = np.asarray(j, dtype=np.int64)
        return ((self._bits[i, j >> 3] >> (7 - (j & 7))) & 1).astype(bool)

    def has_edge(self, i: int, j: int) -> bool:
        a = self._check_vertex(i)
        b = self._check_vertex(j)
        if a == b:
            return False
        return bool(self.has_pairs(a, b))

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted 1-based neighbors of vertex v."""
        a = self._check_vertex(v)
        return self._indices[self._indptr[a]:self._indptr[a + 1]] + 1

    def neighbors0(self, v: int) -> np.ndarray:
        """Sorted 0-based neighbors of 0-based vertex v."""
        return self._indices[self._indptr[v]:self._indptr[v + 1]]

    def degree(self, v: int) -> int:
        a = self._check_vertex(v)
        return int(self._indptr[a + 1] - self._indptr[a])

    def common_neighbor_count(self, u: int, v: int) -> int:
        a = self._check_vertex(u)
        b = self._check_vertex(v)
        return int(POPCOUNT[self._bits[a] & self._bits[b]].sum())

    def dense(self) -> np.ndarray:
        """Full boolean adjacency matrix."""
        return np.unpackbits(self._bits, axis=1, count=self._n).astype(bool)

    def edge_pairs(self) -> Iterator[Tuple[int, int]]:
        """1-based (i, j), i < j, in label order."""
        for i, j in self._edges:
            yield int(i) + 1, int(j) + 1

    def induced_edge_count(self, vertices: np.ndarray) -> int:
        """Edges inside a set of 0-based vertices."""
        mask = np.zeros(self._n, dtype=bool)
        mask[np.asarray(vertices, dtype=np.int64)] = True
        return int(np.count_nonzero(mask[self._edges[:, 0]] & mask[self._edges[:, 1]]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._labels, other._labels)

    def __hash__(self) -> int:
        return hash((self._n, self._labels.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edge_count={self.edge_count})"


def check_same_size(*items) -> int:
    """Common vertex count of graphs and permutations, or SizeMismatchError."""
    sizes = {item.n for item in items}
    if len(sizes) != 1:
        raise SizeMismatchError(f"Size mismatch: {sorted(sizes)}")
    return sizes.pop()


def edge_distance(g: Graph, h: Graph) -> int:
    """Number of unordered pairs on which two graphs differ."""
    check_same_size(g, h)
    return int(np.setxor1d(g.labels, h.labels, assume_unique=True).size)


def expected_pair_density(*graphs: Graph) -> float:
    """Pooled edge density of one or more graphs on the same vertex set."""
    n = check_same_size(*graphs)
    total = pair_count(n) * len(graphs)
    if total == 0:
        return 0.0
    return sum(graph.edge_count for graph in graphs) / total


__all__ = [
    "Graph", "POPCOUNT", "check_same_size", "edge_distance",
    "expected_pair_density", "labels_to_pairs", "pair_count",
    "pairs_to_labels",
]
