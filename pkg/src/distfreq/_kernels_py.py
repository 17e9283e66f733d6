"""Pure-Python kernels for brute-force search over small labeled graphs.

Graphs are edge bitmasks over the canonical edge order (0,1), (0,2), ...,
(n-2, n-1); bit i set means edge i is present. The compiled extension
mirrors this module exactly (same candidate order, same statuses), so
either backend produces identical results.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Sequence

SEARCH_FOUND = 0
SEARCH_EXHAUSTED = 1
SEARCH_ABORTED = 2

MAX_CENSUS_NODES = 7


@lru_cache(maxsize=None)
def edge_endpoints(n: int) -> tuple[tuple[int, int], ...]:
    """Canonical edge order of the complete graph on n nodes."""
    return tuple((u, v) for u in range(n) for v in range(u + 1, n))


def _alpha_from_adjacency(n: int, adj: list[int]) -> tuple[int, ...] | None:
    # Bitmask BFS per source; tally only targets above the source so each
    # unordered pair is counted once.
    counts = [0] * (n - 1)
    full = (1 << n) - 1
    for source in range(n):
        seen = frontier = 1 << source
        dist = 0
        while True:
            reach = 0
            work = frontier
            while work:
                reach |= adj[(work & -work).bit_length() - 1]
                work &= work - 1
            reach &= ~seen
            if not reach:
                break
            seen |= reach
            dist += 1
            counts[dist - 1] += (reach >> (source + 1)).bit_count()
            frontier = reach
        if seen != full:
            return None
    return tuple(counts)


def _adjacency_for_mask(n: int, mask: int) -> list[int]:
    ends = edge_endpoints(n)
    if mask >> len(ends):
        raise ValueError("mask has bits beyond the edge count")
    adj = [0] * n
    work = mask
    while work:
        index = (work & -work).bit_length() - 1
        work &= work - 1
        u, v = ends[index]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def alpha_for_mask(n: int, mask: int) -> tuple[int, ...] | None:
    """Distance frequency array of the masked edge set, or None if disconnected."""
    if n < 2:
        raise ValueError(f"need at least 2 nodes, got {n}")
    return _alpha_from_adjacency(n, _adjacency_for_mask(n, mask))


def search_exact(
    n: int, target: Sequence[int], limit: int = -1
) -> tuple[int, int, int]:
    """Scan edge subsets of size target[0] for one matching the target frequencies.

    Subsets are enumerated in lexicographic combination order over the
    canonical edge list, so the witness (the first match) is canonical.
    Returns (status, witness_mask, candidates_examined); a negative limit
    means unlimited.
    """
    if n < 2:
        raise ValueError(f"need at least 2 nodes, got {n}")
    target = tuple(target)
    if len(target) != n - 1:
        raise ValueError(f"target length must be n-1 = {n - 1}, got {len(target)}")
    m = n * (n - 1) // 2
    k = target[0]
    examined = 0
    if 0 <= k <= m:
        for combo in combinations(range(m), k):
            if limit >= 0 and examined >= limit:
                return SEARCH_ABORTED, 0, examined
            examined += 1
            mask = 0
            for i in combo:
                mask |= 1 << i
            if alpha_for_mask(n, mask) == target:
                return SEARCH_FOUND, mask, examined
    return SEARCH_EXHAUSTED, 0, examined


def census(n: int) -> set[tuple[int, ...]]:
    """All distinct frequency arrays of connected graphs on n labeled nodes."""
    if not 2 <= n <= MAX_CENSUS_NODES:
        raise ValueError(f"census supports 2 <= n <= {MAX_CENSUS_NODES}, got {n}")
    m = n * (n - 1) // 2
    minimum = n - 1
    found: set[tuple[int, ...]] = set()
    for mask in range(1 << m):
        if mask.bit_count() < minimum:
            continue
        counts = alpha_for_mask(n, mask)
        if counts is not None:
            found.add(counts)
    return found
