"""Pattern detection over bit-mask graphs: homogeneous triples, claws,
triangles and connected-component shapes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, complement, iter_bits


@dataclass(frozen=True)
class TripleHypergraph:
    n: int
    hyperedges: frozenset[tuple[int, int, int]]

    def __len__(self):
        return len(self.hyperedges)

    def sorted_edges(self) -> list[tuple[int, int, int]]:
        return sorted(self.hyperedges)


@dataclass(frozen=True)
class ComponentShape:
    """``tag`` is ``"cycle"``, ``"path"``, ``"isolated"`` or ``"other"``;
    ``length`` counts vertices (cycle length, path order)."""

    tag: str
    length: int
    vertices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"tag": self.tag, "length": self.length, "vertices": list(self.vertices)}


def homogeneous_triples(g: Graph) -> list[tuple[int, int, int]]:
    adj = g.adj
    n = g.n
    out = []
    for a in range(n):
        ra = adj[a]
        for b in range(a + 1, n):
            ab = (ra >> b) & 1
            rb = adj[b]
            for c in range(b + 1, n):
                if ab:
                    if (ra >> c) & 1 and (rb >> c) & 1:
                        out.append((a, b, c))
                elif not (ra >> c) & 1 and not (rb >> c) & 1:
                    out.append((a, b, c))
    return out


def h3(g: Graph) -> TripleHypergraph:
    """All 3-sets inducing a triangle or an independent triple."""
    return TripleHypergraph(g.n, frozenset(homogeneous_triples(g)))


def count_triangles(g: Graph) -> int:
    adj = g.adj
    total = 0
    for i in range(g.n):
        higher = adj[i] >> (i + 1) << (i + 1)
        for j in iter_bits(higher):
            total += (adj[i] & adj[j] & ~((2 << j) - 1)).bit_count()
    return total


def find_triangle(g: Graph) -> Optional[tuple[int, int, int]]:
    """Lexicographically least triple inducing a triangle."""
    adj = g.adj
    for i in range(g.n):
        ri = adj[i]
        for j in iter_bits(ri >> (i + 1)):
            j += i + 1
            common = ri & adj[j] & ~((2 << j) - 1)
            if common:
                return (i, j, (common & -common).bit_length() - 1)
    return None


def has_triangle(g: Graph) -> bool:
    adj = g.adj
    for i in range(g.n):
        ri = adj[i]
        for j in iter_bits(ri >> (i + 1)):
            if ri & adj[j + i + 1]:
                return True
    return False


def find_cotriangle(g: Graph) -> Optional[tuple[int, int, int]]:
    """Lexicographically least independent triple."""
    return find_triangle(complement(g))


def find_claw(g: Graph) -> Optional[tuple[int, int, int, int]]:
    """Least ``(center, a, b, c)`` with ``a < b < c`` pairwise non-adjacent
    neighbours of ``center``; ``None`` if the graph is claw-free."""
    adj = g.adj
    for x in range(g.n):
        nx_ = adj[x]
        if nx_.bit_count() < 3:
            continue
        for a in iter_bits(nx_):
            rest_a = nx_ & ~adj[a] & ~((2 << a) - 1)
            for b in iter_bits(rest_a):
                rest_b = rest_a & ~adj[b] & ~((2 << b) - 1)
                if rest_b:
                    return (x, a, b, (rest_b & -rest_b).bit_length() - 1)
    return None


def is_claw(g: Graph, witness) -> bool:
    """Whether ``witness = (center, a, b, c)`` induces a claw in ``g``."""
    if len(witness) != 4 or len(set(witness)) != 4:
        return False
    if any(not 0 <= v < g.n for v in witness):
        return False
    x, a, b, c = witness
    return (
        g.has_edge(x, a) and g.has_edge(x, b) and g.has_edge(x, c)
        and not g.has_edge(a, b) and not g.has_edge(a, c) and not g.has_edge(b, c)
    )


def is_forb_bruteforce(u: Graph) -> bool:
    """Neither ``u`` nor its complement contains an induced claw."""
    return find_claw(u) is None and find_claw(complement(u)) is None


def components(g: Graph) -> list[int]:
    """Connected components as vertex bit masks, ordered by least vertex."""
    out = []
    seen = 0
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def shape_of(g: Graph, comp: int) -> ComponentShape:
    verts = tuple(iter_bits(comp))
    size = len(verts)
    if size == 1:
        return ComponentShape("isolated", 1, verts)
    degs = [(g.adj[v] & comp).bit_count() for v in verts]
    edges = sum(degs) // 2
    if max(degs) <= 2:
        if edges == size:
            return ComponentShape("cycle", size, verts)
        if edges == size - 1:
            return ComponentShape("path", size, verts)
    return ComponentShape("other", size, verts)


def component_shapes(g: Graph) -> list[ComponentShape]:
    return [shape_of(g, c) for c in components(g)]


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1
