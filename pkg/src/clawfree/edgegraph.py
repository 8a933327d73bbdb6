"""The edge-graph S(U) and its two-colorings.

S(U) has one vertex per edge of U, numbered in lexicographic edge order.
Edges ``{x,y}`` and ``{x,z}`` are adjacent when ``{y,z}`` is not an edge of
U.  This is a spanning subgraph of the line graph, not the line graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Union

from .graph import Graph, GraphError, complement, iter_bits, make_graph


@dataclass(frozen=True)
class EdgeGraph:
    base: Graph
    vertices: tuple[tuple[int, int], ...]
    adj: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def as_graph(self) -> Graph:
        return make_graph(self.order, self.edges())


@dataclass(frozen=True)
class TwoColoring:
    """``color[v]`` in {0, 1}; ``components`` lists ``(root, members)`` in
    increasing root order, the root being the least member and colored 0."""

    color: tuple[int, ...]
    components: tuple[tuple[int, tuple[int, ...]], ...]


@dataclass(frozen=True)
class OddWalk:
    """Closed walk of odd length: consecutive entries (cyclically) are
    adjacent, ``len(cycle)`` is odd."""

    cycle: tuple[int, ...]

    def __len__(self):
        return len(self.cycle)


def edge_graph(u: Graph) -> EdgeGraph:
    verts = tuple(u.edges())
    index = {e: k for k, e in enumerate(verts)}
    adj = [0] * len(verts)
    uadj = u.adj
    for x in range(u.n):
        nb = list(iter_bits(uadj[x]))
        for p in range(len(nb)):
            y = nb[p]
            ky = index[(x, y) if x < y else (y, x)]
            for q in range(p + 1, len(nb)):
                z = nb[q]
                if not (uadj[y] >> z) & 1:
                    kz = index[(x, z) if x < z else (z, x)]
                    adj[ky] |= 1 << kz
                    adj[kz] |= 1 << ky
    return EdgeGraph(u, verts, tuple(adj))


def _bfs_two_color(adj: Sequence[int]) -> Union[TwoColoring, OddWalk]:
    n = len(adj)
    color = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    comps = []
    for root in range(n):
        if color[root] != -1:
            continue
        color[root] = 0
        members = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in iter_bits(adj[v]):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    members.append(w)
                    queue.append(w)
                elif color[w] == color[v]:
                    return OddWalk(_odd_cycle(v, w, parent, depth))
        comps.append((root, tuple(sorted(members))))
    return TwoColoring(tuple(color), tuple(comps))


def _odd_cycle(v: int, w: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    # v, w same color and adjacent: tree paths to their common ancestor
    # plus the edge vw close an odd cycle
    left, right = [v], [w]
    a, b = v, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return tuple(left + right[::-1])


def bipartition(s: EdgeGraph) -> Union[TwoColoring, OddWalk]:
    """Canonical BFS two-coloring of ``s`` or an odd closed walk."""
    return _bfs_two_color(s.adj)


def two_color_graph(g: Graph) -> Union[TwoColoring, OddWalk]:
    return _bfs_two_color(g.adj)


def is_proper(adj: Sequence[int], color: Sequence[int]) -> bool:
    return all(color[v] != color[w] for v in range(len(adj)) for w in iter_bits(adj[v]))


def is_odd_walk(adj: Sequence[int], walk: Sequence[int]) -> bool:
    k = len(walk)
    if k % 2 == 0:
        return False
    return all((adj[walk[i]] >> walk[(i + 1) % k]) & 1 for i in range(k))


def parity_coloring(
    u: Graph, coloring: Union[TwoColoring, Mapping[int, int], Sequence[int]]
) -> TwoColoring:
    """Color each non-edge ``{x,y}`` of ``u`` by ``c(x) + c(y) mod 2``.

    The result is a coloring of ``edge_graph(complement(u))`` and is proper
    whenever ``c`` is a proper coloring of ``u``.
    """
    if isinstance(coloring, TwoColoring):
        c = list(coloring.color)
    elif isinstance(coloring, Mapping):
        c = [coloring[v] for v in range(u.n)]
    else:
        c = list(coloring)
    if len(c) != u.n:
        raise GraphError(f"coloring covers {len(c)} vertices, graph has {u.n}")
    for x, y in u.edges():
        if c[x] == c[y]:
            raise GraphError(f"coloring is not proper on edge {{{x},{y}}}")
    s = edge_graph(complement(u))
    color = tuple((c[x] + c[y]) % 2 for x, y in s.vertices)
    comps = []
    for comp in _components(s.adj):
        members = tuple(iter_bits(comp))
        comps.append((members[0], members))
    return TwoColoring(color, tuple(comps))


def _components(adj: Sequence[int]) -> list[int]:
    out = []
    seen = 0
    for v in range(len(adj)):
        if (seen >> v) & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= adj[w]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def component_masks(s: EdgeGraph) -> list[int]:
    return _components(s.adj)


def coloring_or_none(s: EdgeGraph) -> Optional[TwoColoring]:
    result = bipartition(s)
    return result if isinstance(result, TwoColoring) else None
