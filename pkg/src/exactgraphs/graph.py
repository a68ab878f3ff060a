"""Weighted simple graphs, bipartitions, graph matrices and named generators.

Vertices are dense 0-based indices.  A :class:`Graph` is immutable; all
operators return new graphs.  When every weight is an integer the matrices
are built with an integer dtype so that eigen-equation checks on partition
vectors can be done exactly.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = [
    "Graph",
    "GraphError",
    "MatrixKind",
    "Partition",
    "build_matrix",
    "complete",
    "complete_bipartite",
    "cross_degree",
    "cycle",
    "empty",
    "cut_edge_subgraph",
    "disjoint_union",
    "generate",
    "induced_subgraph",
    "inside_subgraph",
    "join",
    "matching",
    "path",
    "petersen",
    "regularity",
]


class GraphError(ValueError):
    """Invalid graph construction or operator argument."""


class MatrixKind(str, enum.Enum):
    ADJACENCY = "A"
    LAPLACIAN = "L"
    SIGNLESS_LAPLACIAN = "Q"
    DEGREE = "D"


def _normalize_weight(w) -> float | int:
    w = float(w)
    if not math.isfinite(w) or w <= 0:
        raise GraphError(f"edge weight must be finite and > 0, got {w}")
    return int(w) if w.is_integer() else w


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with positive edge weights.

    ``edges`` is stored as a sorted tuple of ``(u, v, w)`` with ``u < v``.
    ``index_map`` is set on subgraphs and maps each vertex of the subgraph to
    the vertex it came from.
    """

    n: int
    edges: tuple = ()
    index_map: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        seen = set()
        norm = []
        for e in self.edges:
            if len(e) == 2:
                u, v = e
                w = 1
            else:
                u, v, w = e
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            norm.append((key[0], key[1], _normalize_weight(w)))
        norm.sort()
        if any(isinstance(w, float) for _, _, w in norm):
            norm = [(u, v, float(w)) for u, v, w in norm]
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_adjacency(cls, a) -> "Graph":
        a = np.asarray(a)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphError("adjacency matrix must be square")
        if not np.array_equal(a, a.T):
            raise GraphError("adjacency matrix must be symmetric")
        if np.any(np.diag(a) != 0):
            raise GraphError("adjacency matrix has a nonzero diagonal")
        iu, ju = np.nonzero(np.triu(a, 1))
        return cls(a.shape[0], tuple((int(i), int(j), a[i, j].item()) for i, j in zip(iu, ju)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def weights_are_integer(self) -> bool:
        return all(isinstance(w, int) for _, _, w in self.edges)

    @property
    def total_weight(self) -> float | int:
        return sum(w for _, _, w in self.edges)

    @property
    def dtype(self):
        return np.int64 if self.weights_are_integer else np.float64

    def degrees(self) -> np.ndarray:
        d = np.zeros(self.n, dtype=self.dtype)
        for u, v, w in self.edges:
            d[u] += w
            d[v] += w
        return d

    def neighbors(self, i: int) -> list:
        return [(v if u == i else u) for u, v, _ in self.edges if i in (u, v)]

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == self.n

    def two_coloring(self) -> Optional[list]:
        """Proper 2-coloring by BFS, or ``None`` if the graph has an odd cycle."""
        adj = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if color[y] < 0:
                        color[y] = 1 - color[x]
                        queue.append(y)
                    elif color[y] == color[x]:
                        return None
        return color

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``i`` renamed to ``perm[i]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        return Graph(self.n, tuple((perm[u], perm[v], w) for u, v, w in self.edges))

    def scaled(self, c: float) -> "Graph":
        return Graph(self.n, tuple((u, v, w * c) for u, v, w in self.edges))

    def without_edges(self, pairs: Iterable) -> "Graph":
        drop = {(min(u, v), max(u, v)) for u, v in pairs}
        return Graph(self.n, tuple(e for e in self.edges if (e[0], e[1]) not in drop))

    def edge_pairs(self) -> list:
        return [(u, v) for u, v, _ in self.edges]


@dataclass(frozen=True)
class Partition:
    """Bipartition ``(S, V \\ S)`` in canonical form (vertex 0 lies in ``S``).

    ``S`` and its complement describe the same cut, so constructing a
    partition from a set that misses vertex 0 stores the complement.
    """

    n: int
    members: frozenset

    def __init__(self, n: int, members: Iterable[int]):
        members = frozenset(int(i) for i in members)
        if any(not 0 <= i < n for i in members):
            raise GraphError(f"partition member out of range for n={n}")
        if n > 0 and 0 not in members:
            members = frozenset(range(n)) - members
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "members", members)

    @classmethod
    def from_vector(cls, vector) -> "Partition":
        vector = np.asarray(vector)
        if not np.all(np.abs(vector) == 1):
            raise GraphError("partition vector entries must be +1 or -1")
        return cls(len(vector), np.flatnonzero(vector > 0))

    @classmethod
    def from_index(cls, n: int, k: int) -> "Partition":
        """Partition whose complement is encoded by bit ``i-1`` of ``k`` for vertex ``i``."""
        return cls(n, [0] + [i for i in range(1, n) if not (k >> (i - 1)) & 1])

    @property
    def vector(self) -> np.ndarray:
        p = -np.ones(self.n, dtype=np.int64)
        p[list(self.members)] = 1
        return p

    @property
    def complement(self) -> frozenset:
        return frozenset(range(self.n)) - self.members

    @property
    def sides(self) -> tuple:
        return tuple(sorted(self.members)), tuple(sorted(self.complement))

    @property
    def is_proper(self) -> bool:
        """Both sides nonempty (the partition vector is not constant)."""
        return 0 < len(self.members) < self.n

    def sort_key(self) -> tuple:
        return tuple(sorted(self.members))

    def __repr__(self) -> str:
        return f"Partition(n={self.n}, S={sorted(self.members)})"


def build_matrix(g: Graph, kind) -> np.ndarray:
    """Dense symmetric matrix of ``g``: A, L = D - A, Q = D + A or D."""
    kind = MatrixKind(kind)
    a = np.zeros((g.n, g.n), dtype=g.dtype)
    for u, v, w in g.edges:
        a[u, v] = a[v, u] = w
    if kind is MatrixKind.ADJACENCY:
        return a
    d = np.diag(a.sum(axis=1))
    if kind is MatrixKind.DEGREE:
        return d
    if kind is MatrixKind.LAPLACIAN:
        return d - a
    return d + a


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """``G[s]`` relabeled to ``0..|s|-1`` in increasing order of the original index."""
    verts = sorted(set(int(i) for i in s))
    if any(not 0 <= i < g.n for i in verts):
        raise GraphError(f"vertex out of range for n={g.n}")
    new = {old: k for k, old in enumerate(verts)}
    edges = tuple((new[u], new[v], w) for u, v, w in g.edges if u in new and v in new)
    return Graph(len(verts), edges, index_map=tuple(verts))


def _check_dims(g: Graph, p: Partition) -> None:
    if p.n != g.n:
        raise GraphError(f"partition is on {p.n} vertices, graph has {g.n}")


def cut_edge_subgraph(g: Graph, p: Partition) -> Graph:
    """Spanning subgraph keeping only the edges that cross the partition."""
    _check_dims(g, p)
    s = p.members
    return Graph(g.n, tuple(e for e in g.edges if (e[0] in s) != (e[1] in s)))


def inside_subgraph(g: Graph, p: Partition) -> Graph:
    """Spanning subgraph ``G[S] + G[S-bar]`` keeping the edges inside each side."""
    _check_dims(g, p)
    s = p.members
    return Graph(g.n, tuple(e for e in g.edges if (e[0] in s) == (e[1] in s)))


def cross_degree(g: Graph, p: Partition, i: int):
    """Total weight of edges from ``i`` to the opposite side of ``p``."""
    _check_dims(g, p)
    if not 0 <= i < g.n:
        raise GraphError(f"vertex {i} out of range")
    side = i in p.members
    total = 0
    for u, v, w in g.edges:
        if u == i and (v in p.members) != side:
            total += w
        elif v == i and (u in p.members) != side:
            total += w
    return total


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.edges + tuple((u + shift, v + shift, w) for u, v, w in h.edges))


def join(g: Graph, h: Graph) -> Graph:
    """``g`` joined to ``h``: disjoint union plus every unit-weight cross edge."""
    cross = tuple((i, g.n + j, 1) for i in range(g.n) for j in range(h.n))
    return Graph(g.n + h.n, disjoint_union(g, h).edges + cross)


def regularity(g: Graph) -> Optional[float]:
    """Common degree ``r`` if every weighted degree is equal, else ``None``."""
    if g.n == 0:
        return None
    d = g.degrees()
    if g.weights_are_integer:
        return int(d[0]) if np.all(d == d[0]) else None
    tol = 1e-9 * max(1.0, float(np.max(np.abs(d))))
    return float(d[0]) if np.all(np.abs(d - d[0]) <= tol) else None


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph(n, tuple((i, j, 1) for i in range(n) for j in range(i + 1, n)))


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n, 1) for i in range(n)))


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, tuple((i, i + 1, 1) for i in range(n - 1)))


def empty(n: int) -> Graph:
    _need(n >= 1, "empty graph needs n >= 1")
    return Graph(n)


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, "complete bipartite graph needs both sides >= 1")
    return join(empty(a), empty(b))


def matching(t: int) -> Graph:
    """``t`` disjoint copies of K2."""
    _need(t >= 1, "matching needs t >= 1")
    return Graph(2 * t, tuple((2 * i, 2 * i + 1, 1) for i in range(t)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


GENERATORS = {
    "complete": complete,
    "cycle": cycle,
    "complete_bipartite": complete_bipartite,
    "empty": empty,
    "matching": matching,
    "path": path,
    "petersen": petersen,
}


def generate(name: str, *params: int) -> Graph:
    """Named unit-weight graph, e.g. ``generate("complete_bipartite", 3, 3)``."""
    try:
        fn = GENERATORS[name]
    except KeyError:
        raise GraphError(f"unknown generator {name!r}; choose from {sorted(GENERATORS)}") from None
    return fn(*params)
