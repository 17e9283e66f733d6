"""Undirected graphs, edge-list parsing, and exact distance computations.

Nodes are contiguous integers 0..n-1; edges are unordered pairs stored as
(u, v) tuples with u < v. Distances are shortest-path link counts obtained
by one breadth-first search per source node, so everything stays in exact
integer arithmetic.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from typing import Iterable


class EdgeListParseError(ValueError):
    """Malformed edge-list input; carries the 1-based offending line number."""

    def __init__(self, lineno: int, reason: str, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
        self.reason = reason


class DisconnectedGraphError(ValueError):
    """Raised by operations that require a connected graph."""


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph without self-loops or duplicate edges."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"need at least 2 nodes, got {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from unordered node pairs, rejecting loops and duplicates."""
        seen: set[tuple[int, int]] = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            edge = (u, v) if u < v else (v, u)
            if edge in seen:
                raise ValueError(f"duplicate edge {edge}")
            seen.add(edge)
        return cls(n, frozenset(seen))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        """Neighbor lists, each in ascending order."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric table of exact shortest-path link counts, zero on the diagonal."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def distance(self, u: int, v: int) -> int:
        return self.rows[u][v]


def _is_int(token: str) -> bool:
    try:
        int(token)
    except ValueError:
        return False
    return True


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: node count on the first data line, then "u v" lines.

    Blank lines and lines starting with '#' are skipped. Raises
    EdgeListParseError naming the offending line for a malformed line, a
    node id outside 0..n-1, a self-loop, a duplicate edge, or a node count
    below 2.
    """
    n: int | None = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1 or not _is_int(fields[0]):
                raise EdgeListParseError(
                    lineno, "bad-node-count", f"expected a node count, got {line!r}"
                )
            n = int(fields[0])
            if n < 2:
                raise EdgeListParseError(
                    lineno, "node-count-too-small", f"need at least 2 nodes, got {n}"
                )
            continue
        if len(fields) != 2 or not all(_is_int(f) for f in fields):
            raise EdgeListParseError(
                lineno, "malformed-edge", f"expected 'u v', got {line!r}"
            )
        u, v = int(fields[0]), int(fields[1])
        if u == v:
            raise EdgeListParseError(lineno, "self-loop", f"self-loop at node {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(
                lineno, "node-out-of-range", f"node id outside 0..{n - 1}: {line!r}"
            )
        edge = (u, v) if u < v else (v, u)
        if edge in edges:
            raise EdgeListParseError(lineno, "duplicate-edge", f"duplicate edge {edge}")
        edges.add(edge)
    if n is None:
        raise EdgeListParseError(0, "empty", "no node count line found")
    return Graph(n, frozenset(edges))


def format_edge_list(g: Graph) -> str:
    """Serialize a graph to the edge-list format, edges in ascending order."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def _bfs_distances(adj: list[list[int]], source: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du + 1
                queue.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    """True iff every node is reachable from every other node."""
    return min(_bfs_distances(g.adjacency(), 0)) >= 0


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Exact shortest-path distances between all node pairs, one BFS per source."""
    adj = g.adjacency()
    rows = []
    for source in range(g.n):
        dist = _bfs_distances(adj, source)
        if min(dist) < 0:
            raise DisconnectedGraphError("graph is not connected")
        rows.append(tuple(dist))
    return DistanceMatrix(g.n, tuple(rows))


def alpha_array(g: Graph) -> tuple[int, ...]:
    """Distance frequency array of a connected graph.

    Entry j-1 counts the unordered node pairs whose shortest-path distance
    is exactly j, so the entries sum to n(n-1)/2.
    """
    adj = g.adjacency()
    counts = [0] * (g.n - 1)
    for source in range(g.n):
        dist = _bfs_distances(adj, source)
        for target in range(source + 1, g.n):
            d = dist[target]
            if d < 0:
                raise DisconnectedGraphError("graph is not connected")
            counts[d - 1] += 1
    return tuple(counts)


def _require_min_nodes(n: int, minimum: int) -> None:
    if n < minimum:
        raise ValueError(f"need at least {minimum} nodes, got {n}")


def generate_chain(n: int) -> Graph:
    """Path graph 0-1-...-(n-1)."""
    _require_min_nodes(n, 2)
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def generate_complete(n: int) -> Graph:
    """Complete graph on n nodes."""
    _require_min_nodes(n, 2)
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def generate_star(n: int) -> Graph:
    """Star with center 0 and leaves 1..n-1."""
    _require_min_nodes(n, 3)
    return Graph(n, frozenset((0, v) for v in range(1, n)))


def random_connected_graph(n: int, extra_edge_probability: float, seed: int) -> Graph:
    """Random connected graph: a uniform random spanning tree plus extra edges.

    The tree is decoded from a random Pruefer sequence, then every non-tree
    edge is added independently with the given probability. The result is a
    pure function of (n, extra_edge_probability, seed).
    """
    _require_min_nodes(n, 2)
    p = extra_edge_probability
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = set(_random_tree_edges(n, rng))
    if p > 0:
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) not in edges and rng.random() < p:
                    edges.add((u, v))
    return Graph(n, frozenset(edges))


def _random_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    # Pruefer decode; sequences are uniform over labeled trees.
    if n == 2:
        return [(0, 1)]
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in sequence:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapify(leaves)
    edges = []
    for x in sequence:
        leaf = heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heappush(leaves, x)
    u = heappop(leaves)
    v = heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return edges
