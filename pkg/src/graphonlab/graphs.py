"""Finite simple graphs: construction, edge-list text I/O, deterministic
generators, and exact homomorphism counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class ParseError(ValueError):
    """Malformed text input; remembers the 1-based line it came from."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices 0..n-1.

    Edges are stored as (u, v) pairs with u < v; self-loops and duplicate
    edges are rejected.  Instances are pure values, safe to share across
    threads.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from unordered pairs, sorting each and deduplicating."""
        edges = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            edges.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    @cached_property
    def adjacency(self) -> np.ndarray:
        """Dense boolean adjacency matrix (read-only view)."""
        adj = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges:
            adj[u, v] = adj[v, u] = True
        adj.flags.writeable = False
        return adj


# ───────────────────────── text format ─────────────────────────
#
# Header line "n m", then m lines "u v" with 0-indexed endpoints.
# Pairs are sorted and deduplicated on input; the serializer emits
# edges in lexicographic order so serialize(parse(s)) is canonical.


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format.  Raises ParseError naming the bad line."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError(1, "missing header line 'n m'")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(1, f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(1, f"expected two integers in header, got {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise ParseError(1, "vertex and edge counts must be nonnegative")
    pairs: list[tuple[int, int]] = []
    lineno = 1
    for raw in lines[1:]:
        lineno += 1
        if not raw.strip():
            continue
        if len(pairs) == m:
            raise ParseError(lineno, f"more than the {m} edges announced in the header")
        parts = raw.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"expected two integers, got {raw!r}") from None
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex index out of range 0..{n - 1}")
        pairs.append((u, v))
    if len(pairs) < m:
        raise ParseError(lineno + 1, f"expected {m} edge lines, found {len(pairs)}")
    return Graph.from_edges(n, pairs)


def serialize_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in sorted(graph.edges))
    return "\n".join(lines) + "\n"


# ───────────────────────── generators ─────────────────────────


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} in block labeling: vertices 0..a-1 form one class, a..a+b-1
    the other, and {u, v} is an edge exactly when u < a <= v."""
    if a < 0 or b < 0:
        raise ValueError("class sizes must be nonnegative")
    return Graph(a + b, frozenset((u, v) for u in range(a) for v in range(a, a + b)))


def complete(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def single_vertex() -> Graph:
    return Graph(1, frozenset())


def single_edge() -> Graph:
    return Graph(2, frozenset({(0, 1)}))


def relabel(graph: Graph, perm: Sequence[int]) -> Graph:
    """Rename vertex u to perm[u].  perm must be a bijection on 0..n-1."""
    if sorted(perm) != list(range(graph.n)):
        raise ValueError("perm is not a bijection on 0..n-1")
    return Graph.from_edges(graph.n, ((perm[u], perm[v]) for u, v in graph.edges))


# ───────────────────────── homomorphisms ─────────────────────────


def hom_count(pattern: Graph, host: Graph) -> int:
    """Number of maps V(pattern) -> V(host) sending edges to edges.

    Backtracking over partial maps in fixed vertex-index order; each image
    choice is pruned against the already-placed pattern neighbours.  The
    bottom two levels are evaluated as boolean mask counts instead of a
    Python loop, which changes nothing about the result.  Counts are exact
    (Python integers).
    """
    h = pattern.n
    if h < 1:
        raise ValueError("pattern graph must have at least one vertex")
    n = host.n
    if n == 0:
        return 0
    if h == 1:
        return n

    adj = host.adjacency
    # pattern neighbours already placed when vertex v gets its image
    placed = [tuple(u for u in range(v) if pattern.has_edge(u, v)) for v in range(h)]
    last = h - 1
    pre_last = tuple(u for u in placed[last] if u != last - 1)
    linked = (last - 1) in placed[last]
    everything = np.ones(n, dtype=bool)
    images = [0] * h

    def mask_for(v: int) -> np.ndarray:
        m = everything
        for u in placed[v]:
            m = m & adj[images[u]]
        return m

    def descend(v: int) -> int:
        if v == last - 1:
            cand = np.flatnonzero(mask_for(v))
            if cand.size == 0:
                return 0
            base = everything
            for u in pre_last:
                base = base & adj[images[u]]
            if linked:
                return int((adj[cand] & base).sum())
            return int(cand.size) * int(base.sum())
        total = 0
        for x in np.flatnonzero(mask_for(v)):
            images[v] = int(x)
            total += descend(v + 1)
        return total

    return descend(0)
