"""Benzenoid systems on the hexagonal lattice and the fast index pipeline.

Hexagons are given in axial coordinates ``(q, r)``. Hexagon ``(q, r)`` is
centred at ``(2q + r, 3r)`` in a doubled integer lattice and its corners are
the centre plus ``HEX_OFFSETS``, so vertex deduplication and edge direction
are exact integer operations.

Pipeline: elementary cuts by walking across hexagons to opposite edges,
three weighted quotient trees (one per edge direction) for W_e, and the cut
pair sum over per-cut side bit-vectors for WW_e*.
"""

from __future__ import annotations

import random
import time
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import NamedTuple

from . import bits
from .cutmethod import IndexReport, ww_star
from .errors import BenzenoidError, ConsistencyError, ParseError
from .graph import Graph, checked, pairs
from .theta import CutSideTable, UnionFind

HEX_OFFSETS = ((0, 2), (1, 1), (1, -1), (0, -2), (-1, -1), (-1, 1))
HEX_NEIGHBORS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))
DIRECTIONS = (1, 2, 3)

_DIRECTION_OF = {
    (0, 2): 1, (0, -2): 1,
    (1, -1): 2, (-1, 1): 2,
    (1, 1): 3, (-1, -1): 3,
}


def hex_center(q: int, r: int) -> tuple[int, int]:
    return 2 * q + r, 3 * r


@dataclass(frozen=True)
class Benzenoid:
    hexes: tuple[tuple[int, int], ...]
    graph: Graph
    vertex_coord: tuple[tuple[int, int], ...]
    edge_direction: tuple[int, ...]
    hex_edges: tuple[tuple[int, ...], ...]  # six edge ids per hexagon, in HEX_OFFSETS order
    edge_hexes: tuple[tuple[int, ...], ...]  # one or two hexagon indices per edge

    @property
    def h(self) -> int:
        return len(self.hexes)

    @cached_property
    def cuts(self) -> tuple[tuple[int, ...], ...]:
        return elementary_cuts(self)

    @cached_property
    def cut_of(self) -> tuple[int, ...]:
        out = [0] * self.graph.edge_count
        for k, cut in enumerate(self.cuts):
            for e in cut:
                out[e] = k
        return tuple(out)

    def internal_vertex_count(self) -> int:
        return sum(1 for v in range(self.graph.vertex_count) if self._hexes_at_vertex[v] == 3)

    @cached_property
    def _hexes_at_vertex(self) -> list[int]:
        count = [0] * self.graph.vertex_count
        for six in self.hex_edges:
            for v in {x for e in six for x in self.graph.edges[e]}:
                count[v] += 1
        return count


def _hex_components(cells: set[tuple[int, int]]) -> list[set[tuple[int, int]]]:
    remaining = set(cells)
    comps = []
    while remaining:
        start = min(remaining)
        comp = {start}
        queue = deque([start])
        remaining.discard(start)
        while queue:
            q, r = queue.popleft()
            for dq, dr in HEX_NEIGHBORS:
                nb = (q + dq, r + dr)
                if nb in remaining:
                    remaining.discard(nb)
                    comp.add(nb)
                    queue.append(nb)
        comps.append(comp)
    return comps


def hole_cells(hexes) -> list[tuple[int, int]]:
    """Empty cells enclosed by the hexagon set (unreachable from outside)."""
    cells = set(hexes)
    qs = [q for q, _ in cells]
    rs = [r for _, r in cells]
    lo_q, hi_q, lo_r, hi_r = min(qs) - 1, max(qs) + 1, min(rs) - 1, max(rs) + 1
    start = (lo_q, lo_r)
    outside = {start}
    queue = deque([start])
    while queue:
        q, r = queue.popleft()
        for dq, dr in HEX_NEIGHBORS:
            nb = (q + dq, r + dr)
            if lo_q <= nb[0] <= hi_q and lo_r <= nb[1] <= hi_r and nb not in cells and nb not in outside:
                outside.add(nb)
                queue.append(nb)
    return sorted(
        (q, r)
        for q in range(lo_q, hi_q + 1)
        for r in range(lo_r, hi_r + 1)
        if (q, r) not in cells and (q, r) not in outside
    )


def build_benzenoid(hexes) -> Benzenoid:
    hex_list = [(int(q), int(r)) for q, r in hexes]
    if not hex_list:
        raise BenzenoidError("no hexagons given")
    seen: set[tuple[int, int]] = set()
    dups = sorted({c for c in hex_list if c in seen or seen.add(c)})
    if dups:
        raise BenzenoidError(f"duplicate hexagon(s): {dups}")
    comps = _hex_components(seen)
    if len(comps) > 1:
        stray = sorted(min(c) for c in comps[1:])
        raise BenzenoidError(f"hexagons are not connected; unreachable from {min(comps[0])}: {stray}")
    ordered = sorted(seen, key=lambda c: (c[1], c[0]))

    vid: dict[tuple[int, int], int] = {}
    coords: list[tuple[int, int]] = []
    eid: dict[tuple[int, int], int] = {}
    edges: list[tuple[int, int]] = []
    directions: list[int] = []
    edge_hexes: list[list[int]] = []
    hex_edges: list[tuple[int, ...]] = []
    for hi, (q, r) in enumerate(ordered):
        cx, cy = hex_center(q, r)
        corners = []
        for dx, dy in HEX_OFFSETS:
            p = (cx + dx, cy + dy)
            if p not in vid:
                vid[p] = len(coords)
                coords.append(p)
            corners.append(vid[p])
        six = []
        for j in range(6):
            u, v = corners[j], corners[(j + 1) % 6]
            key = (min(u, v), max(u, v))
            if key not in eid:
                eid[key] = len(edges)
                edges.append((u, v))
                pu, pv = coords[u], coords[v]
                directions.append(_DIRECTION_OF[(pv[0] - pu[0], pv[1] - pu[1])])
                edge_hexes.append([])
            edge_hexes[eid[key]].append(hi)
            six.append(eid[key])
        hex_edges.append(tuple(six))

    inner_faces = len(edges) - len(coords) + 1
    if inner_faces != len(ordered):
        raise BenzenoidError(f"hexagon set has a hole at {hole_cells(ordered)}")
    return Benzenoid(
        hexes=tuple(ordered),
        graph=Graph.from_edges(len(coords), edges),
        vertex_coord=tuple(coords),
        edge_direction=tuple(directions),
        hex_edges=tuple(hex_edges),
        edge_hexes=tuple(tuple(x) for x in edge_hexes),
    )


def _walk(b: Benzenoid, start: int, via: int, visited: list[bool]) -> list[int]:
    """Edges crossed going from ``start`` through hexagon ``via`` until the boundary."""
    out = []
    cur, h = start, via
    while True:
        six = b.hex_edges[h]
        nxt = six[(six.index(cur) + 3) % 6]
        if visited[nxt]:
            raise ConsistencyError(f"elementary cut walk revisited edge {nxt}")
        visited[nxt] = True
        out.append(nxt)
        others = [x for x in b.edge_hexes[nxt] if x != h]
        if not others:
            return out
        cur, h = nxt, others[0]


def elementary_cuts(b: Benzenoid) -> tuple[tuple[int, ...], ...]:
    """Elementary cuts as edge-id tuples, each listed from one peripheral end
    to the other, ordered by smallest edge id."""
    m = b.graph.edge_count
    visited = [False] * m
    cuts = []
    for e in range(m):
        if visited[e]:
            continue
        visited[e] = True
        around = b.edge_hexes[e]
        forward = _walk(b, e, around[0], visited)
        backward = _walk(b, e, around[1], visited) if len(around) > 1 else []
        cut = backward[::-1] + [e] + forward
        if cut[-1] < cut[0]:
            cut.reverse()
        cuts.append(tuple(cut))
    return tuple(cuts)


@dataclass(frozen=True)
class WeightedQuotientTree:
    """Quotient of ``G - E_i`` for one edge direction ``i``.

    Nodes are the path components; ``node_weight`` is each component's edge
    count. Tree edges join components linked by direction-``i`` edges;
    ``edge_weight`` counts those edges and ``joining`` lists them.
    """

    direction: int
    components: tuple[tuple[int, ...], ...]
    node_weight: tuple[int, ...]
    tree_edges: tuple[tuple[int, int], ...]
    edge_weight: tuple[int, ...]
    joining: tuple[tuple[int, ...], ...]
    component_edges: tuple[tuple[int, ...], ...]

    @property
    def node_count(self) -> int:
        return len(self.components)


def _quotient_tree(b: Benzenoid, direction: int) -> WeightedQuotientTree:
    g = b.graph
    n = g.vertex_count
    uf = UnionFind(n)
    for e, (u, v) in enumerate(g.edges):
        if b.edge_direction[e] != direction:
            uf.union(u, v)
    roots = sorted({uf.find(v) for v in range(n)})
    index = {root: i for i, root in enumerate(roots)}
    comp_of = [index[uf.find(v)] for v in range(n)]
    members: list[list[int]] = [[] for _ in roots]
    for v in range(n):
        members[comp_of[v]].append(v)
    comp_edges: list[list[int]] = [[] for _ in roots]
    links: dict[tuple[int, int], list[int]] = {}
    for e, (u, v) in enumerate(g.edges):
        cu, cv = comp_of[u], comp_of[v]
        if b.edge_direction[e] != direction:
            comp_edges[cu].append(e)
        elif cu == cv:
            raise ConsistencyError(f"direction-{direction} edge {e} has both ends in one component")
        else:
            links.setdefault((min(cu, cv), max(cu, cv)), []).append(e)
    for c, verts in enumerate(members):
        degree = {v: 0 for v in verts}
        for e in comp_edges[c]:
            for x in g.edges[e]:
                degree[x] += 1
        if len(comp_edges[c]) != len(verts) - 1 or max(degree.values()) > 2:
            raise ConsistencyError(f"component {c} of G - E_{direction} is not a path")
    tree_edges = sorted(links)
    if len(tree_edges) != len(roots) - 1:
        raise ConsistencyError(f"quotient graph for direction {direction} is not a tree")
    tree = WeightedQuotientTree(
        direction=direction,
        components=tuple(tuple(v) for v in members),
        node_weight=tuple(len(x) for x in comp_edges),
        tree_edges=tuple(tree_edges),
        edge_weight=tuple(len(links[te]) for te in tree_edges),
        joining=tuple(tuple(links[te]) for te in tree_edges),
        component_edges=tuple(tuple(x) for x in comp_edges),
    )
    if len(_rooted_tree(tree)[0]) != tree.node_count:
        raise ConsistencyError(f"quotient graph for direction {direction} is not connected")
    return tree


def quotient_trees(b: Benzenoid) -> tuple[WeightedQuotientTree, WeightedQuotientTree, WeightedQuotientTree]:
    return tuple(_quotient_tree(b, i) for i in DIRECTIONS)


def _rooted_tree(t: WeightedQuotientTree):
    """DFS preorder from node 0 plus, per node, its parent and parent tree-edge index."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(t.node_count)]
    for j, (x, y) in enumerate(t.tree_edges):
        adj[x].append((y, j))
        adj[y].append((x, j))
    parent = [-1] * t.node_count
    parent_edge = [-1] * t.node_count
    order = []
    seen = [False] * t.node_count
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        order.append(u)
        for w, j in adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w], parent_edge[w] = u, j
                stack.append(w)
    return order, parent, parent_edge


def weighted_tree_wiener(t: WeightedQuotientTree) -> tuple[int, int, int]:
    """``(W_v, W_e^, W_ve)`` of a vertex- and edge-weighted tree.

    Each tree edge splits the tree in two; with ``n1, n2`` the node-weight
    sums and ``m1, m2`` the edge-weight sums of the halves (the split edge
    excluded) the edge adds ``n1 n2``, ``m1 m2`` and ``n1 m2 + n2 m1``.
    """
    order, parent, parent_edge = _rooted_tree(t)
    node_sum = list(t.node_weight)
    edge_sum = [0] * t.node_count
    for u in reversed(order):
        p = parent[u]
        if p >= 0:
            node_sum[p] += node_sum[u]
            edge_sum[p] += edge_sum[u] + t.edge_weight[parent_edge[u]]
    total_n = sum(t.node_weight)
    total_m = sum(t.edge_weight)
    w_v = w_hat = w_ve = 0
    for u in order:
        if parent[u] < 0:
            continue
        n1, m1 = node_sum[u], edge_sum[u]
        n2, m2 = total_n - n1, total_m - m1 - t.edge_weight[parent_edge[u]]
        w_v += n1 * n2
        w_hat += m1 * m2
        w_ve += n1 * m2 + n2 * m1
    return checked(w_v, "W_v"), checked(w_hat, "W_e^(T)"), checked(w_ve, "W_ve")


def edge_wiener_benzenoid(b: Benzenoid, trees=None) -> int:
    if trees is None:
        trees = quotient_trees(b)
    total = sum(sum(weighted_tree_wiener(t)) for t in trees)
    return checked(total + pairs(b.graph.edge_count), "W_e")


def cut_side_table(b: Benzenoid, trees=None) -> CutSideTable:
    """Side bit-vectors per elementary cut, read off the quotient trees.

    Every tree edge of ``T_i`` is exactly one elementary cut; the subtree
    under it is one side.
    """
    if trees is None:
        trees = quotient_trees(b)
    g = b.graph
    m, d = g.edge_count, len(b.cuts)
    all_edges = (1 << m) - 1
    all_vertices = (1 << g.vertex_count) - 1
    cut_index = {frozenset(c): k for k, c in enumerate(b.cuts)}
    A, B, masks, vside = [0] * d, [0] * d, [0] * d, [0] * d
    filled = [False] * d
    for t in trees:
        order, parent, parent_edge = _rooted_tree(t)
        sub_v = [bits.from_indices(c) for c in t.components]
        sub_e = [bits.from_indices(c) for c in t.component_edges]
        join_mask = [bits.from_indices(j) for j in t.joining]
        for u in reversed(order):
            p = parent[u]
            if p < 0:
                continue
            j = parent_edge[u]
            k = cut_index.get(frozenset(t.joining[j]))
            if k is None:
                raise ConsistencyError(f"tree edge {t.tree_edges[j]} of T_{t.direction} is not an elementary cut")
            side_e = sub_e[u]
            other_e = all_edges & ~(side_e | join_mask[j])
            if sub_v[u] & 1:
                A[k], B[k], vside[k] = side_e, other_e, sub_v[u]
            else:
                A[k], B[k], vside[k] = other_e, side_e, all_vertices & ~sub_v[u]
            masks[k] = join_mask[j]
            filled[k] = True
            sub_v[p] |= sub_v[u]
            sub_e[p] |= sub_e[u] | join_mask[j]
    if not all(filled):
        raise ConsistencyError(f"elementary cut {filled.index(False)} matches no quotient tree edge")
    return CutSideTable(g.vertex_count, m, tuple(A), tuple(B), tuple(masks), tuple(vside))


class PairParts(NamedTuple):
    """Edge counts of the components of ``G - C_k - C_l``.

    Crossing cuts: ``parts = (a, b, c, d)`` with ``a, b`` and ``c, d`` the
    diagonally opposite quadrants. Otherwise ``parts = (a, b, middle)`` with
    ``a, b`` the two extremal components.
    """

    intersecting: bool
    parts: tuple[int, ...]

    @property
    def f(self) -> int:
        if self.intersecting:
            a, b, c, d = self.parts
            return a * b + c * d
        return self.parts[0] * self.parts[1]


def cuts_intersect(b: Benzenoid, k: int, l: int) -> bool:
    """Two elementary cuts cross iff some hexagon contains edges of both."""
    hex_k = {h for e in b.cuts[k] for h in b.edge_hexes[e]}
    return any(h in hex_k for e in b.cuts[l] for h in b.edge_hexes[e])


def pair_parts(b: Benzenoid, k: int, l: int) -> PairParts:
    """Components of ``G - C_k - C_l`` classified by their adjacency, without side tables."""
    g = b.graph
    removed = set(b.cuts[k]) | set(b.cuts[l])
    uf = UnionFind(g.vertex_count)
    for e, (u, v) in enumerate(g.edges):
        if e not in removed:
            uf.union(u, v)
    roots = sorted({uf.find(v) for v in range(g.vertex_count)})
    index = {r: i for i, r in enumerate(roots)}
    size = [0] * len(roots)
    for e, (u, v) in enumerate(g.edges):
        if e not in removed:
            size[index[uf.find(u)]] += 1
    adjacent = set()
    for e in removed:
        u, v = g.edges[e]
        cu, cv = index[uf.find(u)], index[uf.find(v)]
        adjacent.add((min(cu, cv), max(cu, cv)))
    crossing = cuts_intersect(b, k, l)
    if crossing:
        if len(roots) != 4:
            raise ConsistencyError(f"crossing cuts {k}, {l} leave {len(roots)} components, expected 4")
        opposite = [(x, y) for x in range(4) for y in range(x + 1, 4) if (x, y) not in adjacent]
        if len(opposite) != 2:
            raise ConsistencyError(f"components of G - C_{k} - C_{l} do not form a 4-cycle")
        (a, bb), (c, d) = opposite
        return PairParts(True, (size[a], size[bb], size[c], size[d]))
    if len(roots) != 3:
        raise ConsistencyError(f"disjoint cuts {k}, {l} leave {len(roots)} components, expected 3")
    degree = [0, 0, 0]
    for x, y in adjacent:
        degree[x] += 1
        degree[y] += 1
    ends = [x for x in range(3) if degree[x] == 1]
    middle = [x for x in range(3) if degree[x] == 2]
    if len(ends) != 2 or len(middle) != 1:
        raise ConsistencyError(f"components of G - C_{k} - C_{l} do not form a path")
    return PairParts(False, (size[ends[0]], size[ends[1]], size[middle[0]]))


def _side_count_f(cst: CutSideTable, k: int, l: int) -> int:
    ak, bk, al, bl = cst.A[k], cst.B[k], cst.A[l], cst.B[l]
    return (ak & al).bit_count() * (bk & bl).bit_count() + (ak & bl).bit_count() * (bk & al).bit_count()


def algorithm1_edge_hyper_wiener(b: Benzenoid, threads: int = 1, cross_check: bool = False) -> IndexReport:
    """Edge-hyper-Wiener index of a benzenoid system.

    W_e from the three weighted quotient trees, WW_e* from the cut pairs.
    ``cross_check`` additionally recomputes every pair contribution from the
    component structure of ``G - C_k - C_l`` (quadratic in the number of cuts
    times graph size) and raises ConsistencyError on any disagreement.
    """
    t0 = time.perf_counter()
    m = b.graph.edge_count
    trees = quotient_trees(b)
    w_e = edge_wiener_benzenoid(b, trees)
    cst = cut_side_table(b, trees)
    star = ww_star(cst, threads)
    if cross_check:
        hat = sum(a.bit_count() * bb.bit_count() for a, bb in zip(cst.A, cst.B))
        if hat + pairs(m) != w_e:
            raise ConsistencyError(f"quotient-tree W_e {w_e} != side-table W_e {hat + pairs(m)}")
        for k in range(len(b.cuts)):
            for l in range(k + 1, len(b.cuts)):
                geo = pair_parts(b, k, l)
                counts = _side_count_f(cst, k, l)
                if geo.f != counts:
                    raise ConsistencyError(f"cut pair ({k}, {l}): geometric f {geo.f} != side-count f {counts}")
    return IndexReport.build(m, w_e - pairs(m), star, "benzenoid", time.perf_counter() - t0)


def random_benzenoid(hex_count: int, seed: int, catacondensed: bool = True) -> Benzenoid:
    """Grow a hole-free benzenoid one hexagon at a time, deterministically from ``seed``.

    With ``catacondensed`` each new hexagon touches exactly one existing
    hexagon, so no vertex is shared by three hexagons.
    """
    if hex_count < 1:
        raise BenzenoidError("hex_count must be at least 1")
    rng = random.Random(seed)
    cells = {(0, 0)}
    while len(cells) < hex_count:
        frontier = sorted(
            {(q + dq, r + dr) for q, r in cells for dq, dr in HEX_NEIGHBORS} - cells
        )
        rng.shuffle(frontier)
        for cand in frontier:
            touching = sum((cand[0] + dq, cand[1] + dr) in cells for dq, dr in HEX_NEIGHBORS)
            if catacondensed and touching != 1:
                continue
            if not catacondensed and hole_cells(cells | {cand}):
                continue
            cells.add(cand)
            break
        else:  # pragma: no cover - a leaf position always exists
            raise ConsistencyError("no admissible hexagon to add")
    return build_benzenoid(sorted(cells))


def random_catacondensed(hex_count: int, seed: int) -> Benzenoid:
    return random_benzenoid(hex_count, seed, catacondensed=True)


# -- hexagon files -------------------------------------------------------------


def parse_hexfile(text: str) -> list[tuple[int, int]]:
    hexes = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'q r', got {line!r}", lineno)
        try:
            hexes.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", lineno) from None
    if not hexes:
        raise ParseError("no hexagons in file")
    return hexes


def load_benzenoid(path: str | Path) -> Benzenoid:
    return build_benzenoid(parse_hexfile(Path(path).read_text(encoding="utf-8")))


def format_hexfile(hexes, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.extend(f"{q} {r}" for q, r in hexes)
    return "\n".join(lines) + "\n"
