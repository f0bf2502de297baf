"""
Unit disk graph substrate: graph construction, hop distances and the
d-merged component decomposition every solver builds on.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from components.errors import InputError
from schemas.instance import Point

logger = logging.getLogger(__name__)

UNREACHABLE = int(np.iinfo(np.int64).max)


@dataclass(frozen=True)
class UnitDiskGraph:
    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    coords: np.ndarray = field(repr=False, compare=False)
    graph: nx.Graph = field(repr=False, compare=False)

    def neighbors(self, i: int) -> Tuple[int, ...]:
        return self.adjacency[i]

    def edges(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, adj in enumerate(self.adjacency) for j in adj if i < j]


@dataclass(frozen=True)
class HopMatrix:
    """
    Hop counts between the vertices a BFS was run over.

    `vertices` lists the global vertex ids covered (ascending); row/column r of
    `table` belongs to vertices[r]. A matrix over a window of the graph only
    guarantees global values for hops <= the window margin.
    """

    graph: UnitDiskGraph = field(repr=False)
    vertices: Tuple[int, ...]
    table: np.ndarray = field(repr=False, compare=False)
    position: Dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "position", {v: r for r, v in enumerate(self.vertices)}
        )

    def rows(self, indices: Iterable[int]) -> List[int]:
        try:
            return [self.position[i] for i in indices]
        except KeyError as e:
            raise InputError(f"vertex {e.args[0]} is not covered by the hop matrix") from e

    def hop(self, i: int, j: int) -> int:
        a, b = self.rows((i, j))
        return int(self.table[a, b])

    def submatrix(self, indices: Sequence[int]) -> np.ndarray:
        """Hop table restricted to `indices`, in the given order."""
        r = self.rows(indices)
        return self.table[np.ix_(r, r)]

    def between(self, sources: Sequence[int], targets: Sequence[int]) -> np.ndarray:
        return self.table[np.ix_(self.rows(sources), self.rows(targets))]


@dataclass(frozen=True)
class ComponentDecomposition:
    components: Tuple[Tuple[int, ...], ...]
    d: int

    def __len__(self) -> int:
        return len(self.components)

    def as_sets(self):
        return {frozenset(c) for c in self.components}


def points_array(points: Sequence[Point]) -> np.ndarray:
    if not points:
        return np.zeros((0, 2), dtype=float)
    coords = np.array([(p.x, p.y) for p in points], dtype=float)
    if not np.isfinite(coords).all():
        bad = int(np.flatnonzero(~np.isfinite(coords).all(axis=1))[0])
        raise InputError(f"point {bad} has a non-finite coordinate")
    return coords


def build_udg(points: Sequence[Point]) -> UnitDiskGraph:
    """
    Build the unit disk graph: an edge joins i != j iff their squared
    Euclidean distance is at most 1.

    Args:
        points (Sequence[Point]): Disk centers; list position is the vertex id.

    Returns:
        UnitDiskGraph: Graph with ascending adjacency lists.

    Raises:
        InputError: If any coordinate is NaN or infinite.
    """
    coords = points_array(points)
    n = len(coords)
    diff = coords[:, None, :] - coords[None, :, :]
    sq = (diff**2).sum(axis=-1)
    close = sq <= 1.0
    np.fill_diagonal(close, False)
    adjacency = tuple(tuple(int(j) for j in np.flatnonzero(row)) for row in close)

    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from((i, j) for i, adj in enumerate(adjacency) for j in adj if i < j)
    logger.debug("built unit disk graph: %d vertices, %d edges", n, graph.number_of_edges())
    return UnitDiskGraph(n=n, adjacency=adjacency, coords=coords, graph=nx.freeze(graph))


def hop_matrix(g: UnitDiskGraph, vertices: Optional[Iterable[int]] = None) -> HopMatrix:
    """
    All-pairs hop counts by one breadth-first traversal per source.

    Args:
        g (UnitDiskGraph): The graph.
        vertices (Iterable[int], optional): Restrict to the subgraph induced by
            these vertices (a window). Defaults to every vertex.

    Returns:
        HopMatrix: Entries are hop counts, UNREACHABLE across components.
    """
    if vertices is None:
        covered = tuple(range(g.n))
        sub = g.graph
    else:
        covered = tuple(sorted(set(vertices)))
        for v in covered:
            if not 0 <= v < g.n:
                raise InputError(f"vertex {v} out of range for {g.n} vertices")
        sub = g.graph.subgraph(covered)

    position = {v: r for r, v in enumerate(covered)}
    table = np.full((len(covered), len(covered)), UNREACHABLE, dtype=np.int64)
    for source in covered:
        row = position[source]
        for target, length in nx.single_source_shortest_path_length(sub, source).items():
            table[row, position[target]] = length
    table.flags.writeable = False
    return HopMatrix(graph=g, vertices=covered, table=table)


def window(coords: np.ndarray, lo: Tuple[float, float], hi: Tuple[float, float], margin: float) -> List[int]:
    """Indices of points inside the closed box [lo - margin, hi + margin]."""
    if len(coords) == 0:
        return []
    inside = (
        (coords[:, 0] >= lo[0] - margin)
        & (coords[:, 0] <= hi[0] + margin)
        & (coords[:, 1] >= lo[1] - margin)
        & (coords[:, 1] <= hi[1] + margin)
    )
    return [int(i) for i in np.flatnonzero(inside)]


def merged_components(
    g: UnitDiskGraph, hops: HopMatrix, vertex_subset: Sequence[int], d: int
) -> ComponentDecomposition:
    """
    Connected components of the subgraph induced by `vertex_subset`, merged
    transitively while two groups are closer than d hops.

    Args:
        g (UnitDiskGraph): Graph the subset lives in.
        hops (HopMatrix): Hop counts covering every vertex of the subset.
        vertex_subset (Sequence[int]): Vertex ids to decompose.
        d (int): Merge parameter; output groups are pairwise at least d hops apart.

    Returns:
        ComponentDecomposition: Ascending groups, ordered by their smallest vertex.

    Raises:
        InputError: If an index is outside the graph.
    """
    subset = sorted(set(int(v) for v in vertex_subset))
    for v in subset:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range for {g.n} vertices")
    if d < 1:
        raise InputError(f"merge parameter must be >= 1, got {d}")
    if not subset:
        return ComponentDecomposition(components=(), d=d)

    pieces = [sorted(c) for c in nx.connected_components(g.graph.subgraph(subset))]
    pieces.sort(key=lambda c: c[0])

    merge = nx.Graph()
    merge.add_nodes_from(range(len(pieces)))
    for a in range(len(pieces)):
        for b in range(a + 1, len(pieces)):
            if hops.between(pieces[a], pieces[b]).min() < d:
                merge.add_edge(a, b)

    groups = []
    for members in nx.connected_components(merge):
        groups.append(tuple(sorted(v for m in members for v in pieces[m])))
    groups.sort(key=lambda c: c[0])
    return ComponentDecomposition(components=tuple(groups), d=d)
