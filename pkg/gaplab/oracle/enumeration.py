"""
Permutation tables for exhaustive searches, in lexicographic or
minimal-change order.
"""
import functools
from typing import Iterator

import numpy as np

from gaplab.exceptions import CapExceededError

TABLE_CAP = 10
CHUNK_ROWS = 1 << 15


@functools.lru_cache(maxsize=None)
def permutation_table(k: int) -> np.ndarray:
    """
    All permutations of range(k) as rows, in lexicographic order.

    Built by prefixing each first element to the table of the remaining
    k - 1 elements.
    """
    if k > TABLE_CAP:
        raise CapExceededError(f"Permutation table for k={k} exceeds cap {TABLE_CAP}")
    if k <= 1:
        table = np.zeros((1, max(k, 0)), dtype=np.int8)
        table.setflags(write=False)
        return table
    smaller = permutation_table(k - 1)
    blocks = []
    for first in range(k):
        rest = np.array([x for x in range(k) if x != first], dtype=np.int8)
        block = np.empty((smaller.shape[0], k), dtype=np.int8)
        block[:, 0] = first
        block[:, 1:] = rest[smaller]
        blocks.append(block)
    table = np.concatenate(blocks)
    table.setflags(write=False)
    return table


def branch_table(n: int, first: int) -> np.ndarray:
    """Lexicographic permutations of range(n) whose first image is ``first``."""
    rest = np.array([x for x in range(n) if x != first], dtype=np.int8)
    smaller = permutation_table(n - 1)
    block = np.empty((smaller.shape[0], n), dtype=np.int8)
    block[:, 0] = first
    block[:, 1:] = rest[smaller]
    return block


@functools.lru_cache(maxsize=None)
def minimal_change_table(k: int) -> np.ndarray:
    """
    All permutations of range(k) in Steinhaus-Johnson-Trotter order.

    Consecutive rows differ by one adjacent transposition.  Each row of the
    k - 1 table is expanded by sweeping k - 1 across every position,
    right to left on even rows and left to right on odd rows.
    """
    if k > TABLE_CAP:
        raise CapExceededError(f"Permutation table for k={k} exceeds cap {TABLE_CAP}")
    if k <= 1:
        table = np.zeros((1, max(k, 0)), dtype=np.int8)
        table.setflags(write=False)
        return table
    smaller = minimal_change_table(k - 1)
    m = smaller.shape[0]
    # inserted[r, q] is row r with k - 1 placed at position q
    inserted = np.stack([np.insert(smaller, q, k - 1, axis=1) for q in range(k)], axis=1)
    sweep = np.arange(k)
    order = np.where((np.arange(m) % 2 == 0)[:, None], sweep[::-1], sweep)
    table = inserted[np.arange(m)[:, None], order].reshape(m * k, k).astype(np.int8)
    table.setflags(write=False)
    return table


def minimal_change_branch(n: int, first: int) -> np.ndarray:
    """Minimal-change permutations of range(n) whose first image is ``first``."""
    rest = np.array([x for x in range(n) if x != first], dtype=np.int8)
    smaller = minimal_change_table(n - 1)
    block = np.empty((smaller.shape[0], n), dtype=np.int8)
    block[:, 0] = first
    block[:, 1:] = rest[smaller]
    return block


def minimal_change_overlaps(perms: np.ndarray, adjacency: np.ndarray, target: np.ndarray,
                            rows: int = CHUNK_ROWS) -> np.ndarray:
    """
    Overlap of every row of ``perms``, whose consecutive rows differ by one
    adjacent transposition.

    The first row is counted in full; every later row adds the O(n) change
    caused by swapping the images of positions ``a`` and ``a + 1``:

        sum_w (A[a, w] - A[a+1, w]) (S[pi(a+1), pi(w)] - S[pi(a), pi(w)])
            + 2 A[a, a+1] S[pi(a), pi(a+1)]
    """
    a_int = adjacency.astype(np.int64)
    s_int = target.astype(np.int64)
    total = perms.shape[0]
    steps = np.empty(total, dtype=np.int64)
    first = perms[0].astype(np.int64)
    steps[0] = int((a_int * s_int[np.ix_(first, first)]).sum()) // 2
    for start in range(1, total, rows):
        stop = min(start + rows, total)
        prev = perms[start - 1:stop - 1].astype(np.int64)
        at = np.argmax(prev != perms[start:stop], axis=1)
        after = at + 1
        index = np.arange(prev.shape[0])
        left = prev[index, at]
        right = prev[index, after]
        gain = s_int[right[:, None], prev] - s_int[left[:, None], prev]
        steps[start:stop] = ((a_int[at] - a_int[after]) * gain).sum(axis=1) \
            + 2 * a_int[at, after] * s_int[left, right]
    return np.cumsum(steps)


def chunks(table: np.ndarray, rows: int = CHUNK_ROWS) -> Iterator[np.ndarray]:
    for start in range(0, table.shape[0], rows):
        yield table[start:start + rows]


def batch_overlaps(perms: np.ndarray, edges: np.ndarray, target: np.ndarray) -> np.ndarray:
    """
    Overlap of every row permutation: number of ``edges`` (0-based pairs)
    whose images are adjacent in the boolean matrix ``target``.
    """
    if edges.shape[0] == 0:
        return np.zeros(perms.shape[0], dtype=np.int64)
    left = perms[:, edges[:, 0]]
    right = perms[:, edges[:, 1]]
    return target[left, right].sum(axis=1, dtype=np.int64)
