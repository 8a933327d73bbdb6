"""Finite simple undirected graphs stored as edge bit masks.

A graph on ``n`` vertices is the integer ``mask`` whose bit ``k`` is set when
the ``k``-th pair of ``[n]^2`` in lexicographic order, ``(0,1), (0,2), ...,
(0,n-1), (1,2), ...``, is an edge.  Adjacency rows are derived once at
construction and kept alongside the mask; nothing is mutated afterwards.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 62
MAX_CANONICAL_VERTICES = 10


class GraphError(ValueError):
    """Raised on malformed graph construction requests."""


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple[tuple[int, int], ...]:
    """All pairs ``(i, j)`` with ``i < j < n`` in lexicographic order."""
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def pair_index_table(n: int) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate(pairs(n))}


def pair_index(n: int, i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def full_mask(n: int) -> int:
    return (1 << (n * (n - 1) // 2)) - 1


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Equality and hashing use ``(n, mask)``, so two graphs compare equal only
    when they are identical as labeled graphs.
    """

    __slots__ = ("n", "mask", "adj")

    def __init__(self, n: int, mask: int = 0):
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if mask < 0 or mask > full_mask(n):
            raise GraphError(f"edge mask {mask} does not fit {n} vertices")
        adj = [0] * n
        table = pairs(n)
        m = mask
        while m:
            low = m & -m
            i, j = table[low.bit_length() - 1]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            m ^= low
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.mask == other.mask

    def __hash__(self):
        return hash((self.n, self.mask))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __reduce__(self):
        return (Graph, (self.n, self.mask))

    def has_edge(self, i: int, j: int) -> int:
        """Edge indicator: 1 if ``{i, j}`` is an edge, else 0."""
        return (self.adj[i] >> j) & 1

    __call__ = has_edge

    def edges(self) -> list[tuple[int, int]]:
        table = pairs(self.n)
        return [table[k] for k in iter_bits(self.mask)]

    def non_edges(self) -> list[tuple[int, int]]:
        table = pairs(self.n)
        return [table[k] for k in iter_bits(self.mask ^ full_mask(self.n))]

    @property
    def num_edges(self) -> int:
        return self.mask.bit_count()

    def degree(self, x: int) -> int:
        return self.adj[x].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, x: int) -> list[int]:
        return list(iter_bits(self.adj[x]))

    def bits(self) -> str:
        """The edge indicator sequence over lexicographic pairs, as text."""
        size = self.n * (self.n - 1) // 2
        return "".join("1" if (self.mask >> k) & 1 else "0" for k in range(size))


def make_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    mask = 0
    for e in edges:
        i, j = e
        if i == j:
            raise GraphError(f"loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge {{{i},{j}}} has an endpoint outside 0..{n - 1}")
        mask |= 1 << pair_index(n, i, j)
    return Graph(n, mask)


def from_adjacency(adj: Sequence[int]) -> Graph:
    """Build a graph from adjacency row bit masks (assumed symmetric)."""
    n = len(adj)
    mask = 0
    for k, (i, j) in enumerate(pairs(n)):
        if (adj[i] >> j) & 1:
            mask |= 1 << k
    return Graph(n, mask)


def edgeless(n: int) -> Graph:
    return Graph(n, 0)


def complete(n: int) -> Graph:
    return Graph(n, full_mask(n))


def complement(g: Graph) -> Graph:
    return Graph(g.n, g.mask ^ full_mask(g.n))


def induced(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``vertices``, relabeled in increasing order.

    Returns the subgraph and the map from old to new labels.
    """
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph on {g.n} vertices")
    index = {v: k for k, v in enumerate(vs)}
    m = len(vs)
    mask = 0
    for k, (a, b) in enumerate(pairs(m)):
        if (g.adj[vs[a]] >> vs[b]) & 1:
            mask |= 1 << k
    return Graph(m, mask), index


def induced_graph(g: Graph, vertices: Iterable[int]) -> Graph:
    return induced(g, vertices)[0]


def boolean_sum(g: Graph, h: Graph) -> Graph:
    if g.n != h.n:
        raise GraphError(f"vertex counts differ: {g.n} != {h.n}")
    return Graph(g.n, g.mask ^ h.mask)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return make_graph(g.n + h.n, g.edges() + [(i + g.n, j + g.n) for i, j in h.edges()])


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex ``(i, j)`` becomes ``i * h.n + j``."""
    n = g.n * h.n
    if n > MAX_VERTICES:
        raise GraphError(f"product has {n} vertices, cap is {MAX_VERTICES}")
    edges = []
    for i in range(g.n):
        for a, b in h.edges():
            edges.append((i * h.n + a, i * h.n + b))
    for j in range(h.n):
        for a, b in g.edges():
            edges.append((a * h.n + j, b * h.n + j))
    return make_graph(n, edges)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``i`` renamed ``perm[i]``."""
    return make_graph(g.n, [(perm[i], perm[j]) for i, j in g.edges()])


def _invariants(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    degs = g.degrees()
    return [(degs[v], tuple(sorted(degs[u] for u in iter_bits(g.adj[v])))) for v in range(g.n)]


def _extend(g_adj, h_adj, order, candidates, phi, used):
    """Backtracking core shared by isomorphism and induced embedding."""
    depth = len(phi)
    if depth == len(order):
        return True
    v = order[depth]
    mapped_nb = 0
    for k in range(depth):
        if (g_adj[v] >> order[k]) & 1:
            mapped_nb |= 1 << phi[k]
    image = 0
    for w in phi:
        image |= 1 << w
    for w in candidates[v]:
        if (used >> w) & 1:
            continue
        if h_adj[w] & image != mapped_nb:
            continue
        phi.append(w)
        if _extend(g_adj, h_adj, order, candidates, phi, used | (1 << w)):
            return True
        phi.pop()
    return False


def _search_order(g: Graph) -> list[int]:
    # connected-first order so adjacency constraints bite early
    order: list[int] = []
    seen = 0
    degs = g.degrees()
    for start in sorted(range(g.n), key=lambda v: (-degs[v], v)):
        if (seen >> start) & 1:
            continue
        frontier = [start]
        seen |= 1 << start
        while frontier:
            frontier.sort(key=lambda v: (-degs[v], v))
            v = frontier.pop(0)
            order.append(v)
            for u in iter_bits(g.adj[v] & ~seen):
                seen |= 1 << u
                frontier.append(u)
    return order


def is_isomorphic(g: Graph, h: Graph) -> Optional[tuple[int, ...]]:
    """A bijection ``phi`` (``phi[i]`` is the image of ``i``) with
    ``{i,j}`` an edge of ``g`` iff ``{phi[i], phi[j]}`` is an edge of ``h``,
    or ``None``."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    ig, ih = _invariants(g), _invariants(h)
    if sorted(ig) != sorted(ih):
        return None
    candidates = [[w for w in range(h.n) if ih[w] == ig[v]] for v in range(g.n)]
    order = _search_order(g)
    phi: list[int] = []
    if not _extend(g.adj, h.adj, order, candidates, phi, 0):
        return None
    result = [0] * g.n
    for v, w in zip(order, phi):
        result[v] = w
    return tuple(result)


def find_induced_embedding(g: Graph, h: Graph) -> Optional[tuple[int, ...]]:
    """An injection of ``g`` into ``h`` whose image induces a copy of ``g``."""
    if g.n > h.n:
        return None
    dg, dh = g.degrees(), h.degrees()
    ng, nh = g.n - 1, h.n - 1
    candidates = [
        [w for w in range(h.n) if dg[v] <= dh[w] and ng - dg[v] <= nh - dh[w]]
        for v in range(g.n)
    ]
    order = _search_order(g)
    phi: list[int] = []
    if not _extend(g.adj, h.adj, order, candidates, phi, 0):
        return None
    result = [0] * g.n
    for v, w in zip(order, phi):
        result[v] = w
    return tuple(result)


def is_induced_embedding(g: Graph, h: Graph, phi: Sequence[int]) -> bool:
    if len(phi) != g.n or len(set(phi)) != g.n:
        return False
    if any(not 0 <= w < h.n for w in phi):
        return False
    return all(
        g.has_edge(i, j) == h.has_edge(phi[i], phi[j]) for i, j in pairs(g.n)
    )


def canonical_code(g: Graph) -> str:
    """Least edge bit sequence (lexicographic pair order) over all relabelings.

    Vertices are placed one position at a time.  Once positions ``0..k-1``
    are filled, the remaining vertices sit in ordered blocks inside which all
    earlier rows are constant, so the best row ``k`` for a chosen vertex puts
    its non-neighbors first inside every block.  Only the vertices giving the
    least row are explored further, and twins of a tried vertex are skipped
    since swapping them is an automorphism fixing the placed prefix.
    """
    n = g.n
    if n > MAX_CANONICAL_VERTICES:
        raise GraphError(f"canonical code limited to n <= {MAX_CANONICAL_VERTICES}")
    adj = g.adj
    best: list[Optional[str]] = [None]

    def row_for(v: int, blocks: list[int]) -> tuple[str, list[int]]:
        parts = []
        refined = []
        for b in blocks:
            nb = b & adj[v]
            non = b & ~adj[v]
            parts.append("0" * non.bit_count() + "1" * nb.bit_count())
            if non:
                refined.append(non)
            if nb:
                refined.append(nb)
        return "".join(parts), refined

    def search(blocks: list[int], prefix: str) -> None:
        if not blocks:
            if best[0] is None or prefix < best[0]:
                best[0] = prefix
            return
        head = blocks[0]
        options = []
        tried: list[int] = []
        for v in iter_bits(head):
            if any((adj[v] & ~(1 << t)) == (adj[t] & ~(1 << v)) for t in tried):
                continue
            tried.append(v)
            rest = ([head & ~(1 << v)] if head & ~(1 << v) else []) + blocks[1:]
            row, refined = row_for(v, rest)
            options.append((row, refined))
        least = min(row for row, _ in options)
        candidate = prefix + least
        if best[0] is not None and candidate > best[0][: len(candidate)]:
            return
        for row, refined in options:
            if row == least:
                search(refined, candidate)

    search([(1 << n) - 1] if n else [], "")
    return best[0] or ""


def canonical_code_bruteforce(g: Graph) -> str:
    """Reference implementation: minimum over every permutation."""
    best = None
    for perm in permutations(range(g.n)):
        code = relabel(g, perm).bits()
        if best is None or code < best:
            best = code
    return best if best is not None else ""
