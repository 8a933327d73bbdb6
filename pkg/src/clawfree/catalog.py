"""Named graphs used throughout the package.

Every construction is gated the first time the catalog is used: the shapes
are checked against the facts that pin them down up to isomorphism
(self-complementarity, induced embedding into P9, claw-freeness on both
sides).  A wrong reading of a construction fails loudly with
:class:`CatalogError`.
"""

from __future__ import annotations

from functools import lru_cache

from .detect import find_claw
from .graph import (
    Graph,
    GraphError,
    cartesian_product,
    complement,
    complete,
    edgeless,
    find_induced_embedding,
    induced_graph,
    is_isomorphic,
    make_graph,
)


class CatalogError(GraphError):
    pass


def cycle(n: int) -> Graph:
    if n < 3:
        raise CatalogError(f"cycle needs at least 3 vertices, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise CatalogError(f"path needs at least 1 vertex, got {n}")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


@lru_cache(maxsize=None)
def paley9() -> Graph:
    return cartesian_product(complete(3), complete(3))


def _a6() -> Graph:
    # inner triangle 0,1,2; each outer vertex closes a triangle on one side
    return make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)])


def _b5() -> Graph:
    return make_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])


def _e6bar() -> Graph:
    # x=0, a=1, b=2, c=3, e=4, f=5
    return make_graph(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4)])


def _p9_minus_edge() -> Graph:
    p9 = paley9()
    u, v = p9.edges()[0]
    return induced_graph(p9, [w for w in range(9) if w not in (u, v)])


_BUILDERS = {
    "K3": lambda: complete(3),
    "K3bar": lambda: edgeless(3),
    "claw": lambda: make_graph(4, [(0, 1), (0, 2), (0, 3)]),
    "clawbar": lambda: complement(make_graph(4, [(0, 1), (0, 2), (0, 3)])),
    "A6": _a6,
    "A6bar": lambda: complement(_a6()),
    "B5": _b5,
    "E6": lambda: complement(_e6bar()),
    "E6bar": _e6bar,
    "P9": paley9,
    "P9bar": lambda: complement(paley9()),
    "P9_minus_v": lambda: induced_graph(paley9(), range(1, 9)),
    "P9_minus_edge": _p9_minus_edge,
    "P9_minus_edge_bar": lambda: complement(_p9_minus_edge()),
}

NAMES = tuple(_BUILDERS) + ("cycle:<n>", "path:<n>")

# The nine graphs that can contain both a triangle and an independent triple
# while staying claw-free on both sides.
NINE = ("B5", "A6", "A6bar", "E6", "E6bar", "P9_minus_edge", "P9_minus_edge_bar", "P9_minus_v", "P9")
P9_SUBGRAPHS = tuple(name for name in NINE if name not in ("A6", "A6bar"))


def named(name: str) -> Graph:
    """Catalog graph by name; ``cycle:<n>`` and ``path:<n>`` are parametric."""
    if ":" in name:
        kind, _, arg = name.partition(":")
        try:
            k = int(arg)
        except ValueError:
            raise CatalogError(f"bad size in {name!r}") from None
        if kind == "cycle":
            return cycle(k)
        if kind == "path":
            return path(k)
        raise CatalogError(f"unknown parametric graph {kind!r}")
    if name not in _BUILDERS:
        raise CatalogError(f"unknown graph name {name!r}")
    _gate()
    return _BUILDERS[name]()


@lru_cache(maxsize=None)
def p9_embedding(name: str) -> tuple[int, ...]:
    """A fixed induced embedding of catalog graph ``name`` into P9."""
    emb = find_induced_embedding(named(name), paley9())
    if emb is None:
        raise CatalogError(f"{name} does not embed into P9")
    return emb


def catalog_problems() -> list[str]:
    """Check the catalog facts; returns a description of each failure."""
    g = {name: build() for name, build in _BUILDERS.items()}
    problems = []
    p9 = g["P9"]
    if p9.n != 9 or p9.num_edges != 18 or set(p9.degrees()) != {4}:
        problems.append("P9 is not 4-regular on 9 vertices")
    for name in ("P9", "P9_minus_v", "B5"):
        if is_isomorphic(g[name], complement(g[name])) is None:
            problems.append(f"{name} is not self-complementary")
    for name in ("B5", "E6", "E6bar", "P9_minus_edge", "P9_minus_edge_bar", "P9_minus_v"):
        if find_induced_embedding(g[name], p9) is None:
            problems.append(f"{name} does not embed into P9")
    if find_induced_embedding(g["A6"], p9) is not None:
        problems.append("A6 embeds into P9")
    for name in NINE:
        if find_claw(g[name]) is not None or find_claw(complement(g[name])) is not None:
            problems.append(f"{name} or its complement has a claw")
    return problems


@lru_cache(maxsize=1)
def _gate() -> None:
    problems = catalog_problems()
    if problems:
        raise CatalogError("; ".join(problems))
