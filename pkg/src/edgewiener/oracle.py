"""Definition-level indices by explicit enumeration of edge pairs.

Deliberately naive: one pure-Python BFS per vertex, then a double loop over
edges. Everything else in the package is checked against this.
"""

from __future__ import annotations

import time

from .cutmethod import IndexReport
from .errors import GraphError
from .graph import Graph, checked, distance_rows, pairs, require_connected

DEFAULT_MAX_EDGES = 20000


def edge_indices_naive(g: Graph, max_edges: int = DEFAULT_MAX_EDGES) -> IndexReport:
    t0 = time.perf_counter()
    m = g.edge_count
    if m > max_edges:
        raise GraphError(f"naive oracle limited to {max_edges} edges, graph has {m}")
    require_connected(g)
    dist = distance_rows(g)
    edges = g.edges
    hat_sum = 0
    d_sum = 0
    d_sq_sum = 0
    for i in range(m):
        a, b = edges[i]
        da, db = dist[a], dist[b]
        for j in range(i + 1, m):
            x, y = edges[j]
            hat = min(da[x], da[y], db[x], db[y])
            hat_sum += hat
            d_sum += hat + 1
            d_sq_sum += (hat + 1) * (hat + 1)
    ww_e = checked((d_sum + d_sq_sum) // 2, "WW_e")
    w_e = checked(d_sum, "W_e")
    star = ww_e - 2 * w_e + pairs(m)
    report = IndexReport(m, w_e, checked(hat_sum, "W_e^"), checked(star, "WW_e*"), ww_e, "naive",
                         time.perf_counter() - t0)
    return report


def vertex_indices_naive(g: Graph) -> tuple[int, int]:
    """Vertex Wiener and hyper-Wiener indices ``(W, WW)``."""
    require_connected(g)
    dist = distance_rows(g)
    total = 0
    squares = 0
    for u in range(g.vertex_count):
        row = dist[u]
        for v in range(u + 1, g.vertex_count):
            total += row[v]
            squares += row[v] * row[v]
    return checked(total, "W"), checked((total + squares) // 2, "WW")


def line_graph(g: Graph) -> Graph:
    """Vertices are the edge ids of ``g``; adjacent iff the edges share an endpoint."""
    if g.edge_count == 0:
        raise GraphError("line graph of an edgeless graph is empty")
    out = []
    for v in range(g.vertex_count):
        incident = [eid for _, eid in g.adjacency[v]]
        for i, e in enumerate(incident):
            for f in incident[i + 1:]:
                out.append((min(e, f), max(e, f)))
    return Graph.from_edges(g.edge_count, sorted(out))
