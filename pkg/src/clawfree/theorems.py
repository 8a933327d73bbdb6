"""Structural classification of graphs claw-free on both sides, and the
Boolean-sum decomposition of a graph into two graphs sharing their
homogeneous triples."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Optional, Union

from . import catalog
from .detect import (
    ComponentShape,
    component_shapes,
    find_claw,
    h3,
    has_triangle,
    is_claw,
)
from .edgegraph import OddWalk, bipartition, component_masks, edge_graph
from .graph import (
    Graph,
    GraphError,
    complement,
    find_induced_embedding,
    is_induced_embedding,
    is_isomorphic,
    iter_bits,
    make_graph,
)

MEMBER = "member"
NONMEMBER = "nonmember"
A6_CASE = "a6"
P9_EMBEDDING = "p9_embedding"
DIRECT_SHAPE = "direct_shape"
COMPLEMENT_SHAPE = "complement_shape"

MAX_FLIP_COMPONENTS = 20


@dataclass(frozen=True)
class ForbCertificate:
    """Outcome of :func:`classify`.

    Members carry one of four cases: ``a6`` (``iso`` maps U onto the catalog
    graph ``target``), ``p9_embedding`` (``embedding`` is an induced
    embedding into P9), ``direct_shape`` / ``complement_shape`` (``shapes``
    are the components of U, resp. its complement).  Non-members carry
    ``witness = (side, (center, a, b, c))`` with side ``"U"`` or
    ``"complement"``.
    """

    verdict: str
    case: Optional[str] = None
    embedding: Optional[tuple[int, ...]] = None
    target: Optional[str] = None
    iso: Optional[tuple[int, ...]] = None
    shapes: Optional[tuple[ComponentShape, ...]] = None
    witness: Optional[tuple[str, tuple[int, int, int, int]]] = None

    @property
    def is_member(self) -> bool:
        return self.verdict == MEMBER

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict, "case": self.case}
        if self.embedding is not None:
            out["embedding"] = list(self.embedding)
        if self.target is not None:
            out["target"] = self.target
            out["iso"] = list(self.iso)
        if self.shapes is not None:
            out["shapes"] = [s.to_json() for s in self.shapes]
        if self.witness is not None:
            side, claw = self.witness
            out["witness"] = {"in": side, "center": claw[0], "leaves": list(claw[1:])}
        return out


@lru_cache(maxsize=None)
def _nine_by_order() -> dict[int, list[tuple[str, Graph, Optional[tuple[int, ...]]]]]:
    table: dict[int, list] = {}
    for name in catalog.NINE:
        g = catalog.named(name)
        emb = catalog.p9_embedding(name) if name in catalog.P9_SUBGRAPHS else None
        table.setdefault(g.n, []).append((name, g, emb))
    return table


def _allowed_shape(s: ComponentShape) -> bool:
    return s.tag in ("path", "isolated") or (s.tag == "cycle" and s.length >= 4)


def _even_shape(s: ComponentShape) -> bool:
    return s.tag in ("path", "isolated") or (s.tag == "cycle" and s.length % 2 == 0)


def _claw_witness(u: Graph, co: Graph):
    w = find_claw(u)
    if w is not None:
        return ("U", w)
    w = find_claw(co)
    if w is not None:
        return ("complement", w)
    return None


def classify(u: Graph) -> ForbCertificate:
    """Decide membership in the class of graphs claw-free on both sides.

    Triangle-free graphs are members exactly when every component is a
    cycle of length at least 4, a path or an isolated vertex; the same
    holds for the complement.  A graph with both a triangle and an
    independent triple is a member only if it is one of the nine catalog
    graphs.
    """
    co = complement(u)
    if not has_triangle(u):
        shapes = tuple(component_shapes(u))
        if all(_allowed_shape(s) for s in shapes):
            return ForbCertificate(MEMBER, DIRECT_SHAPE, shapes=shapes)
        return ForbCertificate(NONMEMBER, witness=_claw_witness(u, co))
    if not has_triangle(co):
        shapes = tuple(component_shapes(co))
        if all(_allowed_shape(s) for s in shapes):
            return ForbCertificate(MEMBER, COMPLEMENT_SHAPE, shapes=shapes)
        return ForbCertificate(NONMEMBER, witness=_claw_witness(u, co))
    for name, g, emb in _nine_by_order().get(u.n, ()):
        phi = is_isomorphic(u, g)
        if phi is None:
            continue
        if emb is None:
            return ForbCertificate(MEMBER, A6_CASE, target=name, iso=phi)
        return ForbCertificate(MEMBER, P9_EMBEDDING, embedding=tuple(emb[i] for i in phi))
    return ForbCertificate(NONMEMBER, witness=_claw_witness(u, co))


def _shapes_match(g: Graph, shapes) -> bool:
    return shapes is not None and tuple(component_shapes(g)) == tuple(shapes)


def validate_certificate(u: Graph, cert: ForbCertificate) -> bool:
    """Re-check a certificate against ``u`` from scratch."""
    if cert.verdict == NONMEMBER:
        if cert.witness is None:
            return False
        side, claw = cert.witness
        target = u if side == "U" else complement(u) if side == "complement" else None
        return target is not None and is_claw(target, claw)
    if cert.verdict != MEMBER:
        return False
    if cert.case == P9_EMBEDDING:
        return cert.embedding is not None and is_induced_embedding(u, catalog.paley9(), cert.embedding)
    if cert.case == A6_CASE:
        if cert.target not in ("A6", "A6bar") or cert.iso is None:
            return False
        return is_induced_embedding(u, catalog.named(cert.target), cert.iso) and u.n == 6
    if cert.case in (DIRECT_SHAPE, COMPLEMENT_SHAPE):
        g = u if cert.case == DIRECT_SHAPE else complement(u)
        return _shapes_match(g, cert.shapes) and all(_allowed_shape(s) for s in cert.shapes)
    return False


@dataclass(frozen=True)
class Condition3:
    """Which alternative of the structural condition holds, if any.

    ``case`` is ``direct_shape``, ``complement_shape`` or ``p9_embedding``;
    on failure ``case`` is ``None`` and ``offending`` lists the component
    shapes of U and of its complement that are not even cycles, paths or
    isolated vertices.
    """

    holds: bool
    case: Optional[str] = None
    shapes: Optional[tuple[ComponentShape, ...]] = None
    embedding: Optional[tuple[int, ...]] = None
    offending: tuple[tuple[str, ComponentShape], ...] = ()

    def to_json(self) -> dict:
        out: dict = {"holds": self.holds, "case": self.case}
        if self.shapes is not None:
            out["shapes"] = [s.to_json() for s in self.shapes]
        if self.embedding is not None:
            out["embedding"] = list(self.embedding)
        if self.offending:
            out["offending"] = [{"in": side, **s.to_json()} for side, s in self.offending]
        return out


def _fits_p9(u: Graph) -> bool:
    # necessary for an induced copy in P9: P9 is 4-regular, self-complementary
    # and claw-free, and all three pass to induced subgraphs
    degs = u.degrees()
    if max(degs, default=0) > 4 or u.n - 1 - min(degs, default=0) > 4:
        return False
    return find_claw(u) is None and find_claw(complement(u)) is None


def condition3(u: Graph) -> Condition3:
    shapes = tuple(component_shapes(u))
    if all(_even_shape(s) for s in shapes):
        return Condition3(True, DIRECT_SHAPE, shapes=shapes)
    co_shapes = tuple(component_shapes(complement(u)))
    if all(_even_shape(s) for s in co_shapes):
        return Condition3(True, COMPLEMENT_SHAPE, shapes=co_shapes)
    if u.n <= 9 and _fits_p9(u):
        emb = find_induced_embedding(u, catalog.paley9())
        if emb is not None:
            return Condition3(True, P9_EMBEDDING, embedding=emb)
    offending = tuple(("U", s) for s in shapes if not _even_shape(s)) + tuple(
        ("complement", s) for s in co_shapes if not _even_shape(s)
    )
    return Condition3(False, offending=offending)


@dataclass(frozen=True)
class Obstruction:
    """``side`` names the non-bipartite edge-graph: ``"S(U)"`` or
    ``"S(complement U)"``; ``odd_cycle`` lists its vertices as base pairs."""

    side: str
    odd_cycle: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {"obstruction": {"in": self.side, "odd_cycle": [list(p) for p in self.odd_cycle]}}


@dataclass(frozen=True)
class Decomposition:
    G: Graph
    G2: Graph
    A1: tuple[tuple[int, int], ...]
    A2: tuple[tuple[int, int], ...]
    B1: tuple[tuple[int, int], ...]
    B2: tuple[tuple[int, int], ...]
    flips: tuple[int, ...] = field(default=())

    def to_json(self) -> dict:
        from .io import emit_graph6

        return {
            "G": emit_graph6(self.G),
            "G2": emit_graph6(self.G2),
            "A1": [list(e) for e in self.A1],
            "A2": [list(e) for e in self.A2],
            "B1": [list(e) for e in self.B1],
            "B2": [list(e) for e in self.B2],
            "flips": list(self.flips),
        }


S_U = "S(U)"
S_CO = "S(complement U)"


def _colorings(u: Graph):
    co = complement(u)
    su, sc = edge_graph(u), edge_graph(co)
    ru, rc = bipartition(su), bipartition(sc)
    if isinstance(ru, OddWalk):
        return Obstruction(S_U, tuple(su.vertices[v] for v in ru.cycle))
    if isinstance(rc, OddWalk):
        return Obstruction(S_CO, tuple(sc.vertices[v] for v in rc.cycle))
    return su, ru, sc, rc


def _build(u: Graph, su, cu: list[int], sc, cc: list[int], flips) -> Decomposition:
    a1 = tuple(e for e, c in zip(su.vertices, cu) if c == 0)
    a2 = tuple(e for e, c in zip(su.vertices, cu) if c == 1)
    b1 = tuple(e for e, c in zip(sc.vertices, cc) if c == 0)
    b2 = tuple(e for e, c in zip(sc.vertices, cc) if c == 1)
    g = make_graph(u.n, a1 + b1)
    g2 = make_graph(u.n, a2 + b1)
    return Decomposition(g, g2, tuple(sorted(a1)), tuple(sorted(a2)), tuple(sorted(b1)), tuple(sorted(b2)), tuple(flips))


def decompose(u: Graph) -> Union[Decomposition, Obstruction]:
    """Canonical decomposition ``U = G + G2`` with ``h3(G) = h3(G2)``.

    Color class 0 of the edge-graph of U gives the edges of U kept in G,
    class 0 of the edge-graph of the complement gives the shared edges.
    """
    res = _colorings(u)
    if isinstance(res, Obstruction):
        return res
    su, ru, sc, rc = res
    flips = (0,) * (len(ru.components) + len(rc.components))
    return _build(u, su, list(ru.color), sc, list(rc.color), flips)


def _flip(color: tuple[int, ...], comps: list[int], bits) -> list[int]:
    out = list(color)
    for bit, comp in zip(bits, comps):
        if bit:
            for v in iter_bits(comp):
                out[v] ^= 1
    return out


def decompose_with_flips(u: Graph, flips=None, rng=None) -> Decomposition:
    """Decomposition after flipping the chosen components of the two
    edge-graphs (components of S(U) first).  With ``flips=None`` and an
    ``rng`` the flips are drawn at random."""
    res = _colorings(u)
    if isinstance(res, Obstruction):
        raise GraphError(f"no decomposition: {res.side} is not bipartite")
    su, ru, sc, rc = res
    comps_u, comps_c = component_masks(su), component_masks(sc)
    k = len(comps_u) + len(comps_c)
    if flips is None:
        flips = tuple(rng.randrange(2) for _ in range(k)) if rng is not None else (0,) * k
    if len(flips) != k:
        raise GraphError(f"expected {k} flip bits, got {len(flips)}")
    cu = _flip(ru.color, comps_u, flips)
    cc = _flip(rc.color, comps_c, flips[len(comps_u):])
    return _build(u, su, cu, sc, cc, flips)


def all_decompositions(u: Graph, dedup: bool = False) -> list[Decomposition]:
    """Every decomposition reachable by flipping the colors of individual
    components of the two edge-graphs, canonical one first.

    With ``dedup`` the pair ``(G, G2)`` is treated as unordered.
    """
    res = _colorings(u)
    if isinstance(res, Obstruction):
        raise GraphError(f"no decomposition: {res.side} is not bipartite")
    su, ru, sc, rc = res
    comps_u, comps_c = component_masks(su), component_masks(sc)
    k = len(comps_u) + len(comps_c)
    if k > MAX_FLIP_COMPONENTS:
        raise GraphError(f"{k} edge-graph components exceed the guard of {MAX_FLIP_COMPONENTS}")
    out = []
    seen = set()
    for flips in product((0, 1), repeat=k):
        cu = _flip(ru.color, comps_u, flips)
        cc = _flip(rc.color, comps_c, flips[len(comps_u):])
        d = _build(u, su, cu, sc, cc, flips)
        if dedup:
            key = frozenset((d.G.mask, d.G2.mask))
            if key in seen:
                continue
            seen.add(key)
        out.append(d)
    return out


def validate_decomposition(u: Graph, d: Decomposition) -> bool:
    if d.G.n != u.n or d.G2.n != u.n:
        return False
    ue, ce = set(u.edges()), set(u.non_edges())
    if set(d.A1) | set(d.A2) != ue or set(d.A1) & set(d.A2):
        return False
    if set(d.B1) | set(d.B2) != ce or set(d.B1) & set(d.B2):
        return False
    if set(d.G.edges()) != set(d.A1) | set(d.B1) or set(d.G2.edges()) != set(d.A2) | set(d.B1):
        return False
    return (d.G.mask ^ d.G2.mask) == u.mask and same_h3(d.G, d.G2)


def same_h3(g: Graph, g2: Graph) -> bool:
    if g.n != g2.n:
        raise GraphError(f"vertex counts differ: {g.n} != {g2.n}")
    return h3(g) == h3(g2)


@dataclass(frozen=True)
class LemmaCheck:
    a: bool
    b: bool
    c: bool

    @property
    def agree(self) -> bool:
        return self.a == self.b == self.c


def _condition_b(g: Graph, u: Graph) -> bool:
    n = u.n
    for x, y, z in permutations(range(n), 3):
        if y > z:
            continue
        uxy, uxz = u.has_edge(x, y), u.has_edge(x, z)
        if uxy == uxz and uxy != u.has_edge(y, z):
            if g.has_edge(x, y) == g.has_edge(x, z):
                return False
    return True


def _independent(s, members: set) -> bool:
    index = {e: k for k, e in enumerate(s.vertices)}
    ids = [index[e] for e in members]
    mask = 0
    for k in ids:
        mask |= 1 << k
    return all(not (s.adj[k] & mask) for k in ids)


def _condition_c(g: Graph, u: Graph) -> bool:
    ge = set(g.edges())
    ue = set(u.edges())
    ce = set(u.non_edges())
    su, sc = edge_graph(u), edge_graph(complement(u))
    return (
        _independent(su, ue & ge)
        and _independent(su, ue - ge)
        and _independent(sc, ce & ge)
        and _independent(sc, ce - ge)
    )


def lemma_ggu_check(g: Graph, g2: Graph) -> LemmaCheck:
    """Evaluate the three equivalent conditions on ``(G, G2)`` separately:
    equal homogeneous triples; the local condition on triples of U = G + G2;
    independence of the induced edge classes in both edge-graphs."""
    if g.n != g2.n:
        raise GraphError(f"vertex counts differ: {g.n} != {g2.n}")
    u = Graph(g.n, g.mask ^ g2.mask)
    return LemmaCheck(same_h3(g, g2), _condition_b(g, u), _condition_c(g, u))
