"""Exhaustive and sampled verification sweeps.

Work is cut into fixed-size chunks of the index space.  Each chunk is
evaluated independently and results are merged in chunk order, so serial
and parallel runs produce the same report.  Sampled graph ``i`` under seed
``s`` is derived from a hash of ``(s, i)`` and never from shared RNG state.
"""

from __future__ import annotations

import hashlib
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from multiprocessing import Pool
from typing import Callable, Iterator, Optional

from . import catalog
from .detect import (
    component_shapes,
    find_claw,
    find_triangle,
    has_triangle,
    homogeneous_triples,
    is_connected,
    is_forb_bruteforce,
)
from .edgegraph import edge_graph, two_color_graph, TwoColoring
from .graph import Graph, canonical_code, complement, full_mask, induced_graph, iter_bits, make_graph, relabel
from .theorems import (
    classify,
    condition3,
    decompose,
    decompose_with_flips,
    Decomposition,
    lemma_ggu_check,
    validate_certificate,
    validate_decomposition,
)

MAX_ENUM_VERTICES = 9
MAX_EXHAUSTIVE_VERTICES = 7
CHUNK = 1 << 14
MAX_REPORTED_MISMATCHES = 1000


class HarnessError(ValueError):
    pass


@dataclass
class VerificationReport:
    property: str
    n: int
    exhaustive: bool
    sample: Optional[int]
    seed: Optional[int]
    checked: int = 0
    mismatches: list[int] = field(default_factory=list)
    mismatch_count: int = 0
    counters: dict[str, int] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.mismatch_count == 0

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "property": self.property,
            "n": self.n,
            "exhaustive": self.exhaustive,
            "sample": self.sample,
            "seed": self.seed,
            "checked": self.checked,
            "mismatches": list(self.mismatches),
            "mismatch_count": self.mismatch_count,
            "counters": dict(sorted(self.counters.items())),
            "pass": self.passed,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


def enumerate_labeled(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[Graph]:
    """Labeled graphs on ``n`` vertices in increasing mask order, optionally
    restricted to masks in ``[start, stop)``."""
    if not 0 <= n <= MAX_ENUM_VERTICES:
        raise HarnessError(f"enumeration limited to n <= {MAX_ENUM_VERTICES}")
    end = full_mask(n) + 1
    stop = end if stop is None else min(stop, end)
    for mask in range(start, stop):
        yield Graph(n, mask)


def sample_mask(n: int, seed: int, index: int) -> int:
    """Deterministic pseudo-random edge mask for sample ``index``."""
    bits = n * (n - 1) // 2
    digest = hashlib.blake2b(f"{seed}:{index}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "little") & ((1 << bits) - 1)


def sample_rng(seed: int, index: int) -> random.Random:
    digest = hashlib.blake2b(f"rng:{seed}:{index}".encode(), digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "little"))


# property checks: each takes a graph and a Counter, returns True when the
# property holds for that graph


def _check_theorem1(u: Graph, tally: Counter) -> bool:
    cert = classify(u)
    oracle = is_forb_bruteforce(u)
    if cert.is_member:
        tally["members"] += 1
        tally[f"case_{cert.case}"] += 1
    return cert.is_member == oracle and validate_certificate(u, cert)


def _edge_graph_has_triangle(u: Graph) -> bool:
    s = edge_graph(u)
    adj = s.adj
    for a in range(len(adj)):
        for b in iter_bits(adj[a] >> (a + 1)):
            if adj[a] & adj[a + 1 + b]:
                return True
    return False


def _check_formula1(u: Graph, tally: Counter) -> bool:
    claw_free = find_claw(u) is None
    if claw_free:
        tally["claw_free"] += 1
    return claw_free == (not _edge_graph_has_triangle(u))


def _bipartite_by_parity(adj) -> bool:
    """Union-find with parity, independent of the BFS coloring."""
    parent = list(range(len(adj)))
    parity = [0] * len(adj)

    def find(v):
        p = 0
        while parent[v] != v:
            p ^= parity[v]
            v = parent[v]
        return v, p

    for a in range(len(adj)):
        for b in iter_bits(adj[a] >> (a + 1)):
            b += a + 1
            ra, pa = find(a)
            rb, pb = find(b)
            if ra == rb:
                if pa == pb:
                    return False
            else:
                parent[rb] = ra
                parity[rb] = pa ^ pb ^ 1
    return True


def _check_theorem2(u: Graph, tally: Counter) -> bool:
    d = decompose(u)
    ok1 = isinstance(d, Decomposition)
    ok2 = _bipartite_by_parity(edge_graph(u).adj) and _bipartite_by_parity(edge_graph(complement(u)).adj)
    ok3 = condition3(u).holds
    if ok1:
        tally["decomposable"] += 1
        if not validate_decomposition(u, d):
            return False
    return ok1 == ok2 == ok3


def _check_lemma_trivial(u: Graph, tally: Counter) -> bool:
    in_class = find_claw(u) is None and find_triangle(u) is None
    if in_class:
        tally["members"] += 1
    shapes = component_shapes(u)
    good = all(s.tag in ("path", "isolated") or (s.tag == "cycle" and s.length >= 4) for s in shapes)
    return in_class == good


@lru_cache(maxsize=None)
def _nine_codes() -> dict[str, str]:
    return {canonical_code(catalog.named(name)): name for name in catalog.NINE}


def _check_caseanalysis(u: Graph, tally: Counter) -> bool:
    if not is_forb_bruteforce(u):
        return True
    if not has_triangle(u) or not has_triangle(complement(u)):
        return True
    tally["mixed_members"] += 1
    name = _nine_codes().get(canonical_code(u))
    if name is None:
        return False
    tally[f"iso_{name}"] += 1
    return True


def _triangles_and_cotriangles(u: Graph):
    tri, co = [], []
    adj = u.adj
    for t in homogeneous_triples(u):
        (tri if (adj[t[0]] >> t[1]) & 1 else co).append(t)
    return tri, co


def _syntactic_condition(u: Graph) -> bool:
    n = u.n
    adj = u.adj
    for x in range(n):
        for y in range(x + 1, n):
            drop = ~((1 << x) | (1 << y))
            s1 = adj[x] & ~adj[y] & drop
            s2 = adj[y] & ~adj[x] & drop
            edge = (adj[x] >> y) & 1
            for s in (s1, s2):
                for a in iter_bits(s):
                    others = s & ~(1 << a)
                    if edge:
                        if others & ~adj[a]:
                            return False
                    elif others & adj[a]:
                        return False
    return True


@lru_cache(maxsize=None)
def _code(name: str) -> str:
    return canonical_code(catalog.named(name))


def _voisinage_holds(u: Graph) -> bool:
    adj = u.adj
    every = (1 << u.n) - 1
    for x in range(u.n):
        for y in range(u.n):
            if x != y and (adj[x] & ~adj[y] & every & ~(1 << y)).bit_count() > 2:
                return False
    return True


def _check_claims(u: Graph, tally: Counter) -> bool:
    ok = True
    n = u.n
    adj = u.adj
    forb = is_forb_bruteforce(u)
    tri, co = _triangles_and_cotriangles(u)

    # claw-free => every vertex of degree >= 3 lies in a triangle
    if find_claw(u) is None:
        tally["triangle.instances"] += 1
        in_tri = 0
        for t in tri:
            in_tri |= (1 << t[0]) | (1 << t[1]) | (1 << t[2])
        for x in range(n):
            if adj[x].bit_count() >= 3 and not (in_tri >> x) & 1:
                tally["triangle.violations"] += 1
                ok = False
                break

    # a triangle and an independent triple => some such pair shares a
    # vertex; a vertex-disjoint such pair forces five homogeneous triples
    if tri and co:
        tally["disjointtriangle.instances"] += 1
        vt = vc = 0
        for t in tri:
            vt |= (1 << t[0]) | (1 << t[1]) | (1 << t[2])
        for t in co:
            vc |= (1 << t[0]) | (1 << t[1]) | (1 << t[2])
        if not vt & vc:
            tally["disjointtriangle.violations"] += 1
            ok = False
        if any(not set(t) & set(c) for t in tri for c in co):
            tally["disjointtriangle.disjoint_pairs"] += 1
            if len(tri) + len(co) < 5:
                tally["disjointtriangle.violations"] += 1
                ok = False

    tally["syntaxic.instances"] += 1
    if _syntactic_condition(u) != forb:
        tally["syntaxic.violations"] += 1
        ok = False

    if not forb:
        return ok
    tally["forb_members"] += 1

    tally["voisinage.instances"] += 1
    if not _voisinage_holds(u):
        tally["voisinage.violations"] += 1
        ok = False

    bull = _code("B5")
    for t in tri:
        for c in co:
            common = set(t) & set(c)
            if len(common) == 1:
                tally["bull1.instances"] += 1
                if canonical_code(induced_graph(u, set(t) | set(c))) != bull:
                    tally["bull1.violations"] += 1
                    ok = False

    for c in co:
        for x in c:
            # two triangles through x never share an edge
            through = [t for t in tri if x in t]
            for i in range(len(through)):
                for j in range(i + 1, len(through)):
                    tally["2k3k3bar.instances"] += 1
                    if len(set(through[i]) & set(through[j])) == 2:
                        tally["2k3k3bar.violations"] += 1
                        ok = False
            d = adj[x].bit_count()
            tally["degre4.instances"] += 1
            if d > 4:
                tally["degre4.violations"] += 1
                ok = False
                continue
            w = canonical_code(induced_graph(u, set(c) | set(iter_bits(adj[x]))))
            if d == 3 and w not in (_code("A6bar"), _code("E6bar")):
                tally["degre4.violations"] += 1
                ok = False
            if d == 4 and w != _code("P9_minus_edge_bar"):
                tally["degre4.violations"] += 1
                ok = False
    return ok


def _check_thm2_consequences(u: Graph, tally: Counter) -> bool:
    if not isinstance(decompose(u), Decomposition):
        return True
    tally["decomposable"] += 1
    triangle = has_triangle(u)
    if not is_connected(u):
        tally["disconnected"] += 1
        if triangle:
            return False
    if not triangle:
        tally["triangle_free"] += 1
        for s in component_shapes(u):
            if not (s.tag in ("path", "isolated") or (s.tag == "cycle" and s.length % 2 == 0)):
                return False
        if not isinstance(two_color_graph(u), TwoColoring):
            return False
    return True


GRAPH_PROPERTIES: dict[str, Callable[[Graph, Counter], bool]] = {
    "theorem1": _check_theorem1,
    "theorem2": _check_theorem2,
    "formula1": _check_formula1,
    "lemma_trivial": _check_lemma_trivial,
    "caseanalysis": _check_caseanalysis,
    "claims": _check_claims,
    "thm2_consequences": _check_thm2_consequences,
}

PAIR_PROPERTIES = ("lemma_ggu",)
PROPERTIES = tuple(GRAPH_PROPERTIES) + PAIR_PROPERTIES
MAX_EXHAUSTIVE_PAIR_VERTICES = 4


def _random_decomposable(n: int, rng: random.Random) -> Graph:
    """A graph admitting a decomposition, from one of the structural families."""
    kind = rng.randrange(3)
    if kind == 0 and n <= 9:
        p9 = catalog.paley9()
        u = induced_graph(p9, sorted(rng.sample(range(9), n)))
    else:
        # disjoint even cycles and paths
        edges = []
        v = 0
        while v < n:
            size = rng.randint(1, n - v)
            if size >= 4 and size % 2 == 0 and rng.random() < 0.5:
                edges += [(v + i, v + (i + 1) % size) for i in range(size)]
            else:
                edges += [(v + i, v + i + 1) for i in range(size - 1)]
            v += size
        u = make_graph(n, edges)
        if kind == 2:
            u = complement(u)
    perm = list(range(n))
    rng.shuffle(perm)
    return relabel(u, perm)


def sample_pair(n: int, seed: int, index: int) -> tuple[Graph, Graph]:
    """Sampled ``(G, G2)``: independent random graphs, pairs built from a
    decomposition, or such pairs with one pair of vertices toggled in G2."""
    rng = sample_rng(seed, index)
    mode = rng.randrange(3)
    if mode == 0:
        return Graph(n, rng.getrandbits(n * (n - 1) // 2)), Graph(n, rng.getrandbits(n * (n - 1) // 2))
    u = _random_decomposable(n, rng)
    d = decompose_with_flips(u, None, rng)
    g, g2 = d.G, d.G2
    if mode == 2 and n >= 2:
        k = rng.randrange(n * (n - 1) // 2)
        g2 = Graph(n, g2.mask ^ (1 << k))
    return g, g2


def _run_chunk(args) -> tuple[int, list[int], int, dict[str, int]]:
    prop, n, start, stop, sampled, seed = args
    tally: Counter = Counter()
    bad: list[int] = []
    count = 0
    if prop in PAIR_PROPERTIES:
        bits = n * (n - 1) // 2
        for i in range(start, stop):
            if sampled:
                g, g2 = sample_pair(n, seed, i)
            else:
                g, g2 = Graph(n, i >> bits), Graph(n, i & ((1 << bits) - 1))
            res = lemma_ggu_check(g, g2)
            count += 1
            if res.a:
                tally["same_h3"] += 1
            if not res.agree:
                bad.append(i)
        return count, bad[:MAX_REPORTED_MISMATCHES], len(bad), dict(tally)
    check = GRAPH_PROPERTIES[prop]
    for i in range(start, stop):
        mask = sample_mask(n, seed, i) if sampled else i
        count += 1
        if not check(Graph(n, mask), tally):
            bad.append(mask)
    return count, bad[:MAX_REPORTED_MISMATCHES], len(bad), dict(tally)


def verify(
    prop: str,
    n: int,
    sample: Optional[int] = None,
    seed: Optional[int] = None,
    jobs: int = 1,
) -> VerificationReport:
    """Run a named property over every labeled graph on ``n`` vertices, or
    over ``sample`` seeded random graphs.

    Mismatch identifiers are edge masks (for ``lemma_ggu``, the pair index:
    ``G.mask << C(n,2) | G2.mask`` when exhaustive, the sample index when
    sampled).
    """
    if prop not in PROPERTIES:
        raise HarnessError(f"unknown property {prop!r}; choose from {', '.join(PROPERTIES)}")
    if not 1 <= n <= MAX_ENUM_VERTICES:
        raise HarnessError(f"n must be in 1..{MAX_ENUM_VERTICES}")
    if sample is not None and sample < 0:
        raise HarnessError("sample must be non-negative")
    if prop in PAIR_PROPERTIES:
        if sample is None and n > MAX_EXHAUSTIVE_PAIR_VERTICES:
            raise HarnessError(f"{prop} needs --sample for n > {MAX_EXHAUSTIVE_PAIR_VERTICES}")
        total = sample if sample is not None else 1 << (n * (n - 1))
    else:
        if sample is None and n > MAX_EXHAUSTIVE_VERTICES:
            raise HarnessError(f"n={n} needs --sample (exhaustive sweeps stop at n={MAX_EXHAUSTIVE_VERTICES})")
        total = sample if sample is not None else full_mask(n) + 1
    sampled = sample is not None
    if sampled and seed is None:
        seed = 0
    tasks = [(prop, n, lo, min(lo + CHUNK, total), sampled, seed) for lo in range(0, total, CHUNK)]
    t0 = time.perf_counter()
    if jobs > 1 and len(tasks) > 1:
        with Pool(jobs) as pool:
            results = pool.map(_run_chunk, tasks, chunksize=1)
    else:
        results = [_run_chunk(t) for t in tasks]
    report = VerificationReport(prop, n, not sampled, sample, seed if sampled else None)
    tally: Counter = Counter()
    for count, bad, nbad, part in results:
        report.checked += count
        report.mismatch_count += nbad
        room = MAX_REPORTED_MISMATCHES - len(report.mismatches)
        report.mismatches.extend(bad[:room])
        tally.update(part)
    report.counters = dict(tally)
    report.wall_time = time.perf_counter() - t0
    return report


def replay(prop: str, n: int, identifier: int, sampled: bool = False, seed: Optional[int] = None) -> bool:
    """Re-run one property instance; ``True`` when it holds."""
    if prop in PAIR_PROPERTIES:
        _, bad, _, _ = _run_chunk((prop, n, identifier, identifier + 1, sampled, seed or 0))
        return not bad
    if prop not in GRAPH_PROPERTIES:
        raise HarnessError(f"unknown property {prop!r}")
    return GRAPH_PROPERTIES[prop](Graph(n, identifier), Counter())

