"""
Permutations of {1..n}.

`Permutation` stores the 0-based forward map and its inverse; calling an
instance applies the 1-based map, ``pi(i)``.
"""
from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

import numpy as np

from gaplab.exceptions import PreconditionError
from gaplab.graph_core.graph import check_same_size
from gaplab.graph_core.seed import Seed


class Permutation:
    __slots__ = ("_forward", "_inverse")

    def __init__(self, forward: Sequence[int]):
        forward = np.array(forward, dtype=np.int64).reshape(-1)
        n = forward.size
        if n < 1:
            raise PreconditionError("Permutation needs at least one element")
        if forward.min() < 0 or forward.max() >= n or np.unique(forward).size != n:
            raise PreconditionError(f"Not a bijection on {n} elements: {forward.tolist()}")
        inverse = np.empty(n, dtype=np.int64)
        inverse[forward] = np.arange(n, dtype=np.int64)
        forward.setflags(write=False)
        inverse.setflags(write=False)
        self._forward = forward
        self._inverse = inverse

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(np.arange(n))

    @classmethod
    def from_one_line(cls, images: Iterable[int]) -> Permutation:
        """From the 1-based one-line word ``pi(1) pi(2) ... pi(n)``."""
        return cls(np.asarray(list(images), dtype=np.int64) - 1)

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """From 1-based disjoint cycles, e.g. ``[(1, 2), (3, 4, 5)]``."""
        forward = np.arange(n, dtype=np.int64)
        seen = set()
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                if a in seen or not 1 <= a <= n:
                    raise PreconditionError(f"Bad cycle element {a} for n={n}")
                seen.add(a)
                forward[a - 1] = b - 1
        return cls(forward)

    @classmethod
    def random(cls, n: int, seed: Seed) -> Permutation:
        return cls(seed.generator().permutation(n))

    @property
    def n(self) -> int:
        return int(self._forward.size)

    @property
    def forward(self) -> np.ndarray:
        """0-based images."""
        return self._forward

    @property
    def inverse_array(self) -> np.ndarray:
        """0-based preimages."""
        return self._inverse

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise PreconditionError(f"Point {i} outside 1..{self.n}")
        return int(self._forward[i - 1]) + 1

    def inverse(self) -> Permutation:
        return Permutation(self._inverse)

    def compose(self, other: Permutation) -> Permutation:
        """``self ∘ other``: apply ``other`` first."""
        check_same_size(self, other)
        return Permutation(self._forward[other._forward])

    def one_line(self) -> List[int]:
        return (self._forward + 1).tolist()

    def cycles(self) -> List[Tuple[int, ...]]:
        """1-based cycle decomposition, each cycle starting at its minimum."""
        visited = np.zeros(self.n, dtype=bool)
        result = []
        for start in range(self.n):
            if visited[start]:
                continue
            cycle = []
            current = start
            while not visited[current]:
                visited[current] = True
                cycle.append(current + 1)
                current = int(self._forward[current])
            result.append(tuple(cycle))
        return result

    def cycle_notation(self) -> str:
        """Cycles of length two or more, ``()`` for the identity."""
        parts = ["(" + " ".join(str(x) for x in c) + ")" for c in self.cycles() if len(c) > 1]
        return "".join(parts) or "()"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return np.array_equal(self._forward, other._forward)

    def __hash__(self) -> int:
        return hash(self._forward.tobytes())

    def __repr__(self) -> str:
        return f"Permutation({self.one_line()})"


def fixed_points(pi: Permutation) -> int:
    """F(pi), the number of i with pi(i) = i."""
    return int(np.count_nonzero(pi.forward == np.arange(pi.n)))


def transpositions(pi: Permutation) -> int:
    """T(pi), the number of 2-cycles."""
    f = pi.forward
    in_two_cycle = (f[f] == np.arange(pi.n)) & (f != np.arange(pi.n))
    return int(np.count_nonzero(in_two_cycle)) // 2


def compose(a: Permutation, b: Permutation) -> Permutation:
    """``a ∘ b``."""
    return a.compose(b)


def inverse(pi: Permutation) -> Permutation:
    return pi.inverse()


def permutation_overlap(p1: Permutation, p2: Permutation) -> int:
    """#{i : p1(i) = p2(i)}, equal to F(p1^-1 ∘ p2)."""
    check_same_size(p1, p2)
    return int(np.count_nonzero(p1.forward == p2.forward))


def permutation_distance(p1: Permutation, p2: Permutation) -> int:
    """Hamming distance n - overlap."""
    return p1.n - permutation_overlap(p1, p2)
