"""Djokovic-Winkler relation, Theta-classes and partial-cube certification.

Two edges ``xy`` and ``uv`` are in relation Theta when
``d(x,u) + d(y,v) != d(x,v) + d(y,u)``. Theta* is its transitive closure.
A connected graph is a partial cube iff it is bipartite and Theta = Theta*;
then each class is a cut with exactly two sides, and recording the side of
every vertex per class gives an isometric hypercube labelling.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from . import bits
from .errors import NotPartialCubeError
from .graph import Graph, all_pairs_distances, is_bipartite, require_connected

ODD_CYCLE = "not a partial cube (odd cycle)"
NOT_A_CUT = "not a partial cube (class not a cut)"
LABEL_MISMATCH = "not a partial cube (labeling distance mismatch)"

_CHUNK_CELLS = 1 << 22


class UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller root wins so that roots are class minima
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


@dataclass(frozen=True)
class ThetaClasses:
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.classes)

    @property
    def representative(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)

    @classmethod
    def from_partition(cls, classes, edge_count: int) -> ThetaClasses:
        """Normalise a partition: members sorted, classes ordered by smallest id."""
        ordered = sorted((tuple(sorted(c)) for c in classes), key=lambda c: c[0])
        class_of = [-1] * edge_count
        for k, members in enumerate(ordered):
            for e in members:
                if class_of[e] != -1:
                    raise ValueError(f"edge {e} appears in two classes")
                class_of[e] = k
        if -1 in class_of:
            raise ValueError(f"edge {class_of.index(-1)} is in no class")
        return cls(tuple(ordered), tuple(class_of))


@dataclass(frozen=True)
class CutSideTable:
    """Per class ``k``: edge sets ``A[k]``/``B[k]`` of the two sides of ``G - E_k``.

    All sets are int bit-vectors. ``vertex_side[k]`` holds the vertices on
    the A side, which is always the side containing vertex 0.
    """

    vertex_count: int
    edge_count: int
    A: tuple[int, ...]
    B: tuple[int, ...]
    class_mask: tuple[int, ...]
    vertex_side: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.A)

    def edge_side_masks(self) -> tuple[list[int], list[int]]:
        """Per edge, the bit-vectors of classes having the edge in A, resp. B."""
        in_a = [0] * self.edge_count
        in_b = [0] * self.edge_count
        for k in range(self.d):
            for e in bits.to_indices(self.A[k]):
                in_a[e] |= 1 << k
            for e in bits.to_indices(self.B[k]):
                in_b[e] |= 1 << k
        return in_a, in_b

    def delta(self, k: int, e: int, f: int) -> int:
        """1 iff ``e`` and ``f`` lie on opposite sides of class ``k``."""
        a, b = self.A[k], self.B[k]
        be, bf = 1 << e, 1 << f
        return int(bool((a & be and b & bf) or (b & be and a & bf)))


@dataclass(frozen=True)
class HammingLabeling:
    dimension: int
    labels: tuple[int, ...]  # bit k set = vertex on the B side of class k

    def distance(self, u: int, v: int) -> int:
        return (self.labels[u] ^ self.labels[v]).bit_count()


@dataclass(frozen=True)
class Rejection:
    reason: str
    witness: object = None


@dataclass(frozen=True)
class Certificate:
    classes: ThetaClasses
    sides: CutSideTable
    labeling: HammingLabeling
    distances: np.ndarray = field(repr=False, compare=False)


def _require_bipartite(g: Graph) -> None:
    bp = is_bipartite(g)
    if not bp.ok:
        raise NotPartialCubeError(Rejection(ODD_CYCLE, bp.witness))


def theta_classes(g: Graph, dist: np.ndarray | None = None) -> ThetaClasses:
    """Theta* classes by the pairwise Djokovic-Winkler test plus union-find."""
    require_connected(g)
    _require_bipartite(g)
    if dist is None:
        dist = all_pairs_distances(g)
    m = g.edge_count
    xs, ys = g.endpoint_arrays
    uf = UnionFind(m)
    step = max(1, _CHUNK_CELLS // max(m, 1))
    for lo in range(0, m, step):
        hi = min(m, lo + step)
        dx, dy = dist[xs[lo:hi]], dist[ys[lo:hi]]
        related = dx[:, xs] + dy[:, ys] != dx[:, ys] + dy[:, xs]
        rows, cols = np.nonzero(related)
        rows += lo
        keep = cols > rows
        for e, f in zip(rows[keep].tolist(), cols[keep].tolist()):
            uf.union(e, f)
    groups: dict[int, list[int]] = {}
    for e in range(m):
        groups.setdefault(uf.find(e), []).append(e)
    return ThetaClasses.from_partition(groups.values(), m)


def _side_matrix(g: Graph, tc: ThetaClasses) -> np.ndarray:
    """Boolean ``(n, d)`` matrix, True where the vertex is on the B side.

    The graphs ``G - E_k`` are traversed together as one block-diagonal
    graph (block ``k`` = copy ``k``), in chunks to bound memory.
    """
    n, m, d = g.vertex_count, g.edge_count, tc.d
    class_of = np.asarray(tc.class_of, dtype=np.int64)
    xs, ys = g.endpoint_arrays
    out = np.zeros((n, d), dtype=bool)
    step = max(1, _CHUNK_CELLS // max(n + m, 1))
    for lo in range(0, d, step):
        ks = np.arange(lo, min(d, lo + step))
        keep = class_of[None, :] != ks[:, None]
        blk, eids = np.nonzero(keep)
        offset = blk * n
        rows = np.concatenate([xs[eids] + offset, ys[eids] + offset])
        cols = np.concatenate([ys[eids] + offset, xs[eids] + offset])
        size = len(ks) * n
        adj = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(size, size))
        _, labels = connected_components(adj, directed=False)
        labels = labels.reshape(len(ks), n)
        ordered = np.sort(labels, axis=1)
        ncomp = (np.diff(ordered, axis=1) != 0).sum(axis=1) + 1
        bad = np.flatnonzero(ncomp != 2)
        if len(bad):
            k = int(ks[bad[0]])
            raise NotPartialCubeError(
                Rejection(NOT_A_CUT, {"class": k, "edges": list(tc.classes[k]), "components": int(ncomp[bad[0]])})
            )
        out[:, lo:lo + len(ks)] = (labels != labels[:, :1]).T
    crossing = out[xs] != out[ys]
    own = class_of[:, None] == np.arange(d)[None, :]
    if np.any(crossing != own):
        e, k = (int(x) for x in np.argwhere(crossing != own)[0])
        raise NotPartialCubeError(Rejection(NOT_A_CUT, {"class": k, "edge": e}))
    return out


def _table_from_sides(g: Graph, tc: ThetaClasses, side_b: np.ndarray) -> CutSideTable:
    xs, _ = g.endpoint_arrays
    class_of = np.asarray(tc.class_of, dtype=np.int64)
    A, B, masks, vside = [], [], [], []
    for k in range(tc.d):
        in_class = class_of == k
        edge_on_b = side_b[xs, k]
        A.append(bits.from_bool(~in_class & ~edge_on_b))
        B.append(bits.from_bool(~in_class & edge_on_b))
        masks.append(bits.from_bool(in_class))
        vside.append(bits.from_bool(~side_b[:, k]))
    return CutSideTable(g.vertex_count, g.edge_count, tuple(A), tuple(B), tuple(masks), tuple(vside))


def cut_side_table(g: Graph, tc: ThetaClasses) -> CutSideTable:
    return _table_from_sides(g, tc, _side_matrix(g, tc))


def _first_label_mismatch(side_b: np.ndarray, dist: np.ndarray) -> tuple[int, int] | None:
    n, d = side_b.shape
    if d == 0:
        return None if n <= 1 else (0, 1)
    packed = np.packbits(side_b, axis=1, bitorder="little")
    pad = (-packed.shape[1]) % 8
    if pad:
        packed = np.pad(packed, ((0, 0), (0, pad)))
    words = packed.view(np.uint64)
    step = max(1, _CHUNK_CELLS // max(n * words.shape[1], 1))
    for lo in range(0, n, step):
        hi = min(n, lo + step)
        ham = np.bitwise_count(words[lo:hi, None, :] ^ words[None, :, :]).sum(axis=2, dtype=np.int64)
        bad = np.argwhere(ham != dist[lo:hi])
        if len(bad):
            u, v = bad[0]
            return int(u) + lo, int(v)
    return None


def certify_partial_cube(g: Graph) -> Certificate | Rejection:
    """Certificate with a fully verified Hamming labelling, or a Rejection.

    Every vertex pair is checked: label Hamming distance must equal the BFS
    distance. Rejection reasons are the module constants ``ODD_CYCLE``,
    ``NOT_A_CUT`` and ``LABEL_MISMATCH``.
    """
    require_connected(g)
    dist = all_pairs_distances(g)
    try:
        tc = theta_classes(g, dist)
        side_b = _side_matrix(g, tc)
    except NotPartialCubeError as exc:
        return exc.rejection
    bad = _first_label_mismatch(side_b, dist)
    if bad is not None:
        return Rejection(LABEL_MISMATCH, bad)
    labels = tuple(bits.from_bool(row) for row in side_b)
    return Certificate(tc, _table_from_sides(g, tc, side_b), HammingLabeling(tc.d, labels), dist)


def require_partial_cube(g: Graph) -> Certificate:
    result = certify_partial_cube(g)
    if isinstance(result, Rejection):
        raise NotPartialCubeError(result)
    return result
