"""Reconstruction up to complementation, checked by exhaustive search."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from multiprocessing import Pool
from typing import Iterable, Optional

from .graph import Graph, GraphError, canonical_code, complement, full_mask, induced_graph, is_isomorphic, pair_index

MAX_RECON_VERTICES = 6


@dataclass(frozen=True)
class HypomorphyReport:
    k: int
    result: bool
    failing_subset: Optional[tuple[int, ...]] = None


def iso_utc(g: Graph, h: Graph) -> bool:
    """Whether ``h`` is isomorphic to ``g`` or to its complement."""
    if g.n != h.n:
        raise GraphError(f"vertex counts differ: {g.n} != {h.n}")
    return is_isomorphic(g, h) is not None or is_isomorphic(g, complement(h)) is not None


def hypomorphic_utc(g: Graph, h: Graph, k: int) -> HypomorphyReport:
    if g.n != h.n:
        raise GraphError(f"vertex counts differ: {g.n} != {h.n}")
    if not 1 <= k <= g.n:
        raise GraphError(f"k={k} outside 1..{g.n}")
    for subset in combinations(range(g.n), k):
        if not iso_utc(induced_graph(g, subset), induced_graph(h, subset)):
            return HypomorphyReport(k, False, subset)
    return HypomorphyReport(k, True)


@lru_cache(maxsize=None)
def utc_class(k: int, mask: int) -> str:
    """Canonical label of a k-vertex graph up to isomorphism and complementation."""
    g = Graph(k, mask)
    return min(canonical_code(g), canonical_code(complement(g)))


@lru_cache(maxsize=None)
def _subset_bit_positions(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    # for each k-subset, the bit positions in an n-vertex mask of its pairs,
    # listed in the k-vertex lexicographic pair order
    out = []
    for subset in combinations(range(n), k):
        out.append(tuple(pair_index(n, subset[a], subset[b]) for a, b in combinations(range(k), 2)))
    return tuple(out)


@lru_cache(maxsize=None)
def _class_table(k: int) -> tuple[int, ...]:
    """Class id of every k-vertex mask; ids are shared by utc-equivalent graphs."""
    ids: dict[str, int] = {}
    table = []
    for mask in range(1 << (k * (k - 1) // 2)):
        label = utc_class(k, mask)
        table.append(ids.setdefault(label, len(ids)))
    return tuple(table)


def deck_signature(n: int, mask: int, k: int) -> tuple[int, ...]:
    """utc class of the graph induced on each k-subset, in subset order.

    Two graphs on the same vertices are k-hypomorphic up to complementation
    iff their signatures are equal.
    """
    table = _class_table(k)
    sig = []
    for positions in _subset_bit_positions(n, k):
        sub = 0
        for t, p in enumerate(positions):
            if (mask >> p) & 1:
                sub |= 1 << t
        sig.append(table[sub])
    return tuple(sig)


@dataclass(frozen=True)
class ReconstructionResult:
    reconstructible: bool
    counterexample: Optional[Graph] = None

    def __bool__(self):
        return self.reconstructible


def _utc_label(g: Graph) -> str:
    return min(canonical_code(g), canonical_code(complement(g)))


def _check_n(n: int) -> None:
    if n > MAX_RECON_VERTICES:
        raise GraphError(f"exhaustive reconstruction search limited to n <= {MAX_RECON_VERTICES}")


@lru_cache(maxsize=None)
def _signature_groups(n: int, k: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    groups: dict[tuple[int, ...], list[int]] = {}
    for mask in range(full_mask(n) + 1):
        groups.setdefault(deck_signature(n, mask, k), []).append(mask)
    return {sig: tuple(masks) for sig, masks in groups.items()}


def reconstructible_utc(g: Graph, k: int) -> ReconstructionResult:
    """Search every labeled graph on the same vertices for one that is
    k-hypomorphic to ``g`` up to complementation without being isomorphic
    to it up to complementation; the first such graph (least mask) is
    returned as the counterexample."""
    _check_n(g.n)
    if not 1 <= k <= g.n:
        raise GraphError(f"k={k} outside 1..{g.n}")
    label = _utc_label(g)
    sig = deck_signature(g.n, g.mask, k)
    for mask in _signature_groups(g.n, k)[sig]:
        h = Graph(g.n, mask)
        if _utc_label(h) != label:
            return ReconstructionResult(False, h)
    return ReconstructionResult(True)


@dataclass(frozen=True)
class ReconstructionSweep:
    v: int
    k: int
    checked: int
    reconstructible: int
    counterexamples: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {
            "v": self.v,
            "k": self.k,
            "checked": self.checked,
            "reconstructible": self.reconstructible,
            "all_reconstructible": not self.counterexamples,
            "counterexamples": [{"G": g, "H": h} for g, h in self.counterexamples],
        }


def sweep_reconstructible(v: int, k: int, masks: Optional[Iterable[int]] = None) -> ReconstructionSweep:
    """Run :func:`reconstructible_utc` over every labeled graph on ``v``
    vertices; counterexamples are ``(G mask, H mask)`` pairs."""
    _check_n(v)
    found = []
    checked = 0
    for mask in masks if masks is not None else range(full_mask(v) + 1):
        checked += 1
        res = reconstructible_utc(Graph(v, mask), k)
        if not res:
            found.append((mask, res.counterexample.mask))
    return ReconstructionSweep(v, k, checked, checked - len(found), tuple(found))


def check_prop_down(g: Graph, h: Graph, k: int, t: int) -> bool:
    """Whether k-hypomorphy up to complementation implies t-hypomorphy for
    this pair; ``False`` only on a violation."""
    n = g.n
    if h.n != n:
        raise GraphError(f"vertex counts differ: {n} != {h.n}")
    if not 1 <= k <= n:
        raise GraphError(f"k={k} outside 1..{n}")
    if not 1 <= t <= min(k, n - k):
        raise GraphError(f"need 1 <= t <= min(k, n-k) = {min(k, n - k)}, got t={t}")
    if not hypomorphic_utc(g, h, k).result:
        return True
    return hypomorphic_utc(g, h, t).result


@dataclass(frozen=True)
class PropDownSweep:
    v: int
    k: int
    t: int
    pairs_checked: int
    k_hypomorphic_pairs: int
    violations: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {
            "v": self.v,
            "k": self.k,
            "t": self.t,
            "pairs_checked": self.pairs_checked,
            "k_hypomorphic_pairs": self.k_hypomorphic_pairs,
            "violations": [list(p) for p in self.violations],
        }


@lru_cache(maxsize=None)
def _signatures(v: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(deck_signature(v, m, k) for m in range(full_mask(v) + 1))


def _prop_down_chunk(args) -> tuple[int, int, list[tuple[int, int]]]:
    v, k, t, lo, hi = args
    sk = _signatures(v, k)
    st = _signatures(v, t)
    hyp = 0
    bad = []
    for gm in range(lo, hi):
        sgk, sgt = sk[gm], st[gm]
        for hm in range(len(sk)):
            if sk[hm] == sgk:
                hyp += 1
                if st[hm] != sgt:
                    bad.append((gm, hm))
    return (hi - lo) * len(sk), hyp, bad


def sweep_prop_down(v: int, k: int, t: int, jobs: int = 1) -> PropDownSweep:
    """Test the implication on every ordered pair ``(G, H)`` of labeled
    graphs on ``v`` vertices, comparing deck signatures."""
    _check_n(v)
    if not 1 <= k <= v:
        raise GraphError(f"k={k} outside 1..{v}")
    if not 1 <= t <= min(k, v - k):
        raise GraphError(f"need 1 <= t <= min(k, v-k) = {min(k, v - k)}, got t={t}")
    total = full_mask(v) + 1
    step = max(1, total // 64)
    tasks = [(v, k, t, lo, min(lo + step, total)) for lo in range(0, total, step)]
    if jobs > 1 and len(tasks) > 1:
        with Pool(jobs) as pool:
            parts = pool.map(_prop_down_chunk, tasks, chunksize=1)
    else:
        parts = [_prop_down_chunk(task) for task in tasks]
    checked = sum(p[0] for p in parts)
    hyp = sum(p[1] for p in parts)
    bad = tuple(pair for p in parts for pair in p[2])
    return PropDownSweep(v, k, t, checked, hyp, bad)
