"""Graph representation, BFS distances, bipartiteness and test families.

Vertices and edges are dense 0-based integers. An edge's id is its position
in ``Graph.edges`` and never changes.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import NamedTuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import DisconnectedGraphError, GraphError, IndexOverflowError, ParseError

U64_MAX = (1 << 64) - 1


def checked(value: int, what: str = "value") -> int:
    """Return ``value`` unchanged if it fits in a u64, else raise."""
    if value < 0 or value > U64_MAX:
        raise IndexOverflowError(f"{what} = {value} does not fit in an unsigned 64-bit integer")
    return value


def pairs(m: int) -> int:
    """Number of unordered pairs of distinct items, C(m, 2)."""
    return m * (m - 1) // 2


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n = self.vertex_count
        if n < 0:
            raise GraphError("vertex_count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        for eid, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {eid} = ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"edge {eid} is a self-loop on vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"edge {eid} = ({u}, {v}) is a duplicate")
            seen.add(key)

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> Graph:
        return cls(vertex_count, tuple((int(u), int(v)) for u, v in edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per vertex, the list of ``(neighbor, edge_id)``."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return adj

    @cached_property
    def endpoint_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        if not self.edges:
            empty = np.zeros(0, dtype=np.int64)
            return empty, empty
        arr = np.asarray(self.edges, dtype=np.int64)
        return arr[:, 0].copy(), arr[:, 1].copy()

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return False
        return -1 not in _bfs(self, 0)

    def is_tree(self) -> bool:
        return self.vertex_count >= 1 and self.edge_count == self.vertex_count - 1 and self.is_connected()

    def to_csr(self, keep: np.ndarray | None = None) -> csr_matrix:
        """Symmetric adjacency matrix; ``keep`` masks which edges to include."""
        xs, ys = self.endpoint_arrays
        if keep is not None:
            xs, ys = xs[keep], ys[keep]
        rows = np.concatenate([xs, ys])
        cols = np.concatenate([ys, xs])
        data = np.ones(len(rows), dtype=np.int8)
        n = self.vertex_count
        return csr_matrix((data, (rows, cols)), shape=(n, n))


def require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError()


class DistanceRow(NamedTuple):
    source: int
    dist: list[int]


def _bfs(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w, _ in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def bfs_distances(g: Graph, source: int) -> DistanceRow:
    if not 0 <= source < g.vertex_count:
        raise GraphError(f"source {source} is not a vertex")
    dist = _bfs(g, source)
    if -1 in dist:
        raise DisconnectedGraphError()
    return DistanceRow(source, dist)


def distance_rows(g: Graph) -> list[list[int]]:
    """All-pairs distances by one pure-Python BFS per vertex."""
    return [bfs_distances(g, s).dist for s in range(g.vertex_count)]


def all_pairs_distances(g: Graph) -> np.ndarray:
    """All-pairs hop distances as an ``(n, n)`` int64 array."""
    if g.vertex_count == 0:
        return np.zeros((0, 0), dtype=np.int64)
    dist = shortest_path(g.to_csr(), method="D", directed=False, unweighted=True)
    if not np.isfinite(dist).all():
        raise DisconnectedGraphError()
    return dist.astype(np.int64)


def edge_distance_hat(g: Graph, e: int, f: int, dmat) -> int:
    """Minimum distance between an endpoint of ``e`` and an endpoint of ``f``.

    ``dmat[u][v]`` must give vertex distances (a list of rows or an array).
    """
    m = g.edge_count
    if not (0 <= e < m and 0 <= f < m):
        raise GraphError(f"invalid edge id in ({e}, {f})")
    a, b = g.edges[e]
    x, y = g.edges[f]
    return int(min(dmat[a][x], dmat[a][y], dmat[b][x], dmat[b][y]))


class Bipartition(NamedTuple):
    ok: bool
    coloring: list[int] | None
    witness: list[int] | None  # odd closed walk, first vertex not repeated


def is_bipartite(g: Graph) -> Bipartition:
    n = g.vertex_count
    color = [-1] * n
    parent = [-1] * n
    adj = g.adjacency
    for root in range(n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, _ in adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return Bipartition(False, None, _odd_cycle(parent, u, w))
    return Bipartition(True, color, None)


def _odd_cycle(parent: list[int], u: int, w: int) -> list[int]:
    # u and w are at equal BFS depth; climb both to the common ancestor.
    up, wp = [u], [w]
    while up[-1] != wp[-1]:
        up.append(parent[up[-1]])
        wp.append(parent[wp[-1]])
    return up + wp[-2::-1]


FAMILIES = ("path", "even_cycle", "hypercube", "star")


def generate_family(kind: str, size: int) -> Graph:
    """Deterministic member of a standard family.

    ``path``: P_size (size vertices). ``even_cycle``: C_size. ``hypercube``:
    Q_size, vertex ``i`` labelled by the bits of ``i``. ``star``: K_{1,size},
    centre 0.
    """
    if kind not in FAMILIES:
        raise GraphError(f"unknown family {kind!r}; expected one of {', '.join(FAMILIES)}")
    if size < 1:
        raise GraphError("size parameter must be at least 1")
    if kind == "path":
        return Graph.from_edges(size, [(i, i + 1) for i in range(size - 1)])
    if kind == "even_cycle":
        if size < 4 or size % 2:
            raise GraphError("even_cycle needs an even length of at least 4")
        return Graph.from_edges(size, [(i, (i + 1) % size) for i in range(size)])
    if kind == "star":
        return Graph.from_edges(size + 1, [(0, i) for i in range(1, size + 1)])
    edges = [(v, v | (1 << b)) for v in range(1 << size) for b in range(size) if not v >> b & 1]
    return Graph.from_edges(1 << size, edges)


# -- edge-list files -----------------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format; '#' lines are comments."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    header_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 1 or b < 0:
                raise ParseError("header needs n >= 1 and m >= 0", lineno)
            header, header_line = (a, b), lineno
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex id out of range 0..{n - 1}", lineno)
        if a == b:
            raise ParseError(f"self-loop on vertex {a}", lineno)
        if len(edges) == header[1]:
            raise ParseError(f"more than the {header[1]} edges declared on line {header_line}", lineno)
        edges.append((a, b))
    if header is None:
        raise ParseError("missing 'n m' header")
    if len(edges) != header[1]:
        raise ParseError(f"header declares {header[1]} edges but {len(edges)} were given", header_line)
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v}")
        seen.add(key)
    g = Graph.from_edges(header[0], edges)
    require_connected(g)
    return g


def read_edgelist(path: str | Path) -> Graph:
    return parse_edgelist(Path(path).read_text(encoding="utf-8"))


def format_edgelist(g: Graph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{g.vertex_count} {g.edge_count}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(i, p + j) for i, j in itertools.product(range(p), range(q))])


def cycle(n: int) -> Graph:
    """C_n for any n >= 3 (odd allowed, unlike the even_cycle family)."""
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def random_tree(n: int, rng) -> Graph:
    """Uniform random labelled tree on ``n`` vertices (Pruefer decoding)."""
    if n < 1:
        raise GraphError("a tree needs at least one vertex")
    if n <= 2:
        return generate_family("path", n)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return Graph.from_edges(n, edges)
